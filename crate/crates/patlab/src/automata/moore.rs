//! Table-filling minimizer used as an independent oracle for
//! [`Dfa::minimize`]. It shares no partition-refinement code with the
//! Hopcroft implementation: distinguishability is computed by the naive
//! quadratic marking scheme.

use crate::automata::dfa::Dfa;

/// Minimizes a complete DFA by Moore's pair-marking method.
///
/// Same contract as [`Dfa::minimize`]: the result is the canonically
/// numbered minimal complete DFA for the same language.
pub fn minimize_oracle(dfa: &Dfa) -> Dfa {
    let k = dfa.alphabet().len();

    // accessible part, found by plain iteration rather than the BFS helper
    let mut reachable = vec![false; dfa.state_count()];
    let mut stack = vec![dfa.initial()];
    reachable[dfa.initial()] = true;
    while let Some(q) = stack.pop() {
        for a in 0..k {
            let t = dfa.next(q, a);
            if !reachable[t] {
                reachable[t] = true;
                stack.push(t);
            }
        }
    }
    let states: Vec<usize> = (0..dfa.state_count()).filter(|&q| reachable[q]).collect();
    let n = states.len();
    let pos = {
        let mut pos = vec![usize::MAX; dfa.state_count()];
        for (i, &q) in states.iter().enumerate() {
            pos[q] = i;
        }
        pos
    };

    // marked[i][j] = states[i] and states[j] are distinguishable
    let mut marked = vec![false; n * n];
    for i in 0..n {
        for j in 0..i {
            if dfa.is_final(states[i]) != dfa.is_final(states[j]) {
                marked[i * n + j] = true;
            }
        }
    }
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in 0..i {
                if marked[i * n + j] {
                    continue;
                }
                for a in 0..k {
                    let ti = pos[dfa.next(states[i], a)];
                    let tj = pos[dfa.next(states[j], a)];
                    let (hi, lo) = if ti >= tj { (ti, tj) } else { (tj, ti) };
                    if hi != lo && marked[hi * n + lo] {
                        marked[i * n + j] = true;
                        changed = true;
                        break;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    // collapse each state onto its smallest indistinguishable representative
    let mut rep = vec![usize::MAX; n];
    let mut class_reps: Vec<usize> = Vec::new();
    for i in 0..n {
        for j in 0..i {
            if !marked[i * n + j] && rep[j] != usize::MAX {
                rep[i] = rep[j];
                break;
            }
        }
        if rep[i] == usize::MAX {
            rep[i] = class_reps.len();
            class_reps.push(i);
        }
    }

    let rows = class_reps
        .iter()
        .map(|&i| {
            (0..k)
                .map(|a| rep[pos[dfa.next(states[i], a)]])
                .collect()
        })
        .collect();
    let finals = class_reps
        .iter()
        .enumerate()
        .filter(|(_, &i)| dfa.is_final(states[i]))
        .map(|(c, _)| c);
    let quotient = Dfa::new(
        dfa.alphabet().clone(),
        rep[pos[dfa.initial()]],
        finals,
        rows,
    )
    .expect("table-filling quotient is valid");
    quotient.canonicalize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::alphabet::Alphabet;
    use crate::witnesses::{bm_dfa, witness, Family, Role, WitnessSpec};

    #[test]
    fn fixes_single_state_dfa() {
        let d = Dfa::new(Alphabet::from_chars("ab").unwrap(), 0, [0], vec![vec![0, 0]]).unwrap();
        assert_eq!(minimize_oracle(&d), d);
    }

    #[test]
    fn cycle_witnesses_are_already_minimal() {
        for n in 2..=8 {
            let t = witness(&WitnessSpec {
                family: Family::PrefixGeneral,
                role: Role::Text,
                m: 2,
                n,
            })
            .unwrap();
            assert_eq!(minimize_oracle(&t).state_count(), n);
        }
    }

    #[test]
    fn agrees_with_hopcroft_on_bm() {
        for m in 2..=8 {
            let b = bm_dfa(m).unwrap();
            let by_oracle = minimize_oracle(&b);
            let by_hopcroft = b.minimize();
            assert_eq!(by_oracle.state_count(), by_hopcroft.state_count());
            assert!(by_oracle.isomorphic(&by_hopcroft).unwrap());
            assert_eq!(by_oracle.state_count(), 1 << (m - 1));
        }
    }
}
