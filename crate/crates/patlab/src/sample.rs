//! Random automata for falsification searches and property tests.
//!
//! A random DFA fixes the initial state at 0, draws one uniform
//! transformation per symbol and a uniform non-empty final-state set. Its
//! minimized form therefore has state complexity at most the drawn state
//! count, which is what bound-ceiling experiments need.

use rand::Rng;

use crate::automata::{Alphabet, Dfa, Nfa, Transformation};

pub fn random_transformation<R: Rng>(rng: &mut R, n: usize) -> Transformation {
    let image: Vec<usize> = (0..n).map(|_| rng.random_range(0..n)).collect();
    Transformation::from_image(image).expect("sampled image is in range")
}

pub fn random_dfa<R: Rng>(rng: &mut R, states: usize, alphabet: &Alphabet) -> Dfa {
    assert!(states > 0 && states < 64, "sampler supports 1..=63 states");
    let transforms: Vec<Transformation> = (0..alphabet.len())
        .map(|_| random_transformation(rng, states))
        .collect();
    let finals_mask = rng.random_range(1..(1u64 << states));
    let finals = (0..states).filter(|&q| finals_mask >> q & 1 == 1);
    Dfa::from_transformations(alphabet.clone(), 0, finals, &transforms)
        .expect("sampled DFA is structurally valid")
}

/// A random NFA where each `(state, symbol, target)` edge is present
/// independently with probability `density`, and the final set is a
/// uniform non-empty subset.
pub fn random_nfa<R: Rng>(rng: &mut R, states: usize, alphabet: &Alphabet, density: f64) -> Nfa {
    assert!(states > 0 && states < 64);
    let rows = (0..states)
        .map(|_| {
            (0..alphabet.len())
                .map(|_| {
                    (0..states)
                        .filter(|_| rng.random_range(0.0..1.0) < density)
                        .collect()
                })
                .collect()
        })
        .collect();
    let finals_mask = rng.random_range(1..(1u64 << states));
    let finals = (0..states).filter(|&q| finals_mask >> q & 1 == 1);
    Nfa::new(alphabet.clone(), 0, finals, rows).expect("sampled NFA is structurally valid")
}
