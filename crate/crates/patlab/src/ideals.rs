//! Ideals of regular languages and the shuffle operation.
//!
//! For a language `P` over `Σ`, the four ideals it generates are `PΣ*`
//! (right), `Σ*P` (left), `Σ*PΣ*` (two-sided) and `Σ* ⧢ P` (all-sided,
//! where `⧢` is shuffle). Each is the closure of `P` under appending,
//! prepending, surrounding, or arbitrary insertion of letters. All
//! constructions go through an NFA, subset construction and minimization,
//! so results can be read directly as state complexities.

use std::fmt;
use std::str::FromStr;

use crate::automata::{Dfa, Nfa};
use crate::error::{Error, Result};

/// Which ideal of the pattern language to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdealKind {
    Right,
    Left,
    TwoSided,
    AllSided,
}

impl IdealKind {
    pub const ALL: [IdealKind; 4] = [
        IdealKind::Right,
        IdealKind::Left,
        IdealKind::TwoSided,
        IdealKind::AllSided,
    ];

    pub fn token(self) -> &'static str {
        match self {
            IdealKind::Right => "right",
            IdealKind::Left => "left",
            IdealKind::TwoSided => "two_sided",
            IdealKind::AllSided => "all_sided",
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for IdealKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdealKind::ALL
            .into_iter()
            .find(|k| k.token() == s)
            .ok_or_else(|| Error::out_of_range(format!("unknown ideal kind `{s}`")))
    }
}

/// The minimal DFA of the `kind`-ideal generated by the language of `p`.
///
/// The ideal NFA keeps all original transitions and adds self-loops on
/// every symbol: at final states for the right ideal, at the initial state
/// for the left ideal, at both for the two-sided ideal, and at every state
/// for the all-sided ideal (each letter may either advance the pattern or
/// be absorbed as an inserted letter).
pub fn ideal(kind: IdealKind, p: &Dfa) -> Dfa {
    ideal_nfa(kind, p).determinize().minimize()
}

fn ideal_nfa(kind: IdealKind, p: &Dfa) -> Nfa {
    let k = p.alphabet().len();
    let loop_here = |q: usize| match kind {
        IdealKind::Right => p.is_final(q),
        IdealKind::Left => q == p.initial(),
        IdealKind::TwoSided => p.is_final(q) || q == p.initial(),
        IdealKind::AllSided => true,
    };
    let rows = (0..p.state_count())
        .map(|q| {
            (0..k)
                .map(|a| {
                    let mut set = vec![p.next(q, a)];
                    if loop_here(q) {
                        set.push(q);
                    }
                    set
                })
                .collect()
        })
        .collect();
    Nfa::new(
        p.alphabet().clone(),
        p.initial(),
        p.final_states(),
        rows,
    )
    .expect("ideal NFA is structurally valid")
}

/// The minimal DFA of the shuffle of the two languages: all interleavings
/// of a word from each operand, preserving each operand's letter order.
///
/// Built from the pair NFA in which each letter nondeterministically
/// advances exactly one component, then determinized and minimized.
pub fn shuffle(d1: &Dfa, d2: &Dfa) -> Result<Dfa> {
    d1.check_same_alphabet(d2)?;
    let k = d1.alphabet().len();
    let n2 = d2.state_count();
    let pair = |p: usize, q: usize| p * n2 + q;
    let mut rows = Vec::with_capacity(d1.state_count() * n2);
    for p in 0..d1.state_count() {
        for q in 0..n2 {
            rows.push(
                (0..k)
                    .map(|a| vec![pair(d1.next(p, a), q), pair(p, d2.next(q, a))])
                    .collect(),
            );
        }
    }
    let finals = d1
        .final_states()
        .into_iter()
        .flat_map(|p| d2.final_states().into_iter().map(move |q| pair(p, q)));
    let nfa = Nfa::new(
        d1.alphabet().clone(),
        pair(d1.initial(), d2.initial()),
        finals,
        rows,
    )
    .expect("shuffle NFA is structurally valid");
    Ok(nfa.determinize().minimize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;
    use crate::witnesses::{witness, Family, Role, WitnessSpec};
    use crate::word::{word_dfa, single_word_automaton, PatternWord};
    use crate::matchers::MatchMode;

    fn ab() -> Alphabet {
        Alphabet::from_chars("ab").unwrap()
    }

    fn suffix_pattern(m: usize) -> Dfa {
        witness(&WitnessSpec {
            family: Family::SuffixGeneral,
            role: Role::Pattern,
            m,
            n: 2,
        })
        .unwrap()
    }

    #[test]
    fn right_ideal_of_prefix_pattern_keeps_m_states() {
        // the right ideal turns the b-cycle pattern into a b-chain with an
        // absorbing final state: still m states, a acts as the identity
        let p4 = witness(&WitnessSpec {
            family: Family::PrefixGeneral,
            role: Role::Pattern,
            m: 4,
            n: 2,
        })
        .unwrap();
        let r = ideal(IdealKind::Right, &p4);
        assert_eq!(r.state_count(), 4);
        assert!(r.accepts("bbb").unwrap());
        assert!(r.accepts("bbbab").unwrap());
        assert!(!r.accepts("bb").unwrap());
        // the absorbing final replaces the cycle-closing transition
        let q = r.run_from(r.initial(), &[1, 1, 1]);
        assert_eq!(r.next(q, 0), q);
        assert_eq!(r.next(q, 1), q);
    }

    #[test]
    fn left_ideal_reaches_the_exponential_bound() {
        for m in 2..=8 {
            let l = ideal(IdealKind::Left, &suffix_pattern(m));
            assert_eq!(l.state_count(), 1 << (m - 1));
        }
    }

    #[test]
    fn all_sided_ideal_of_total_language() {
        let total = Dfa::new(ab(), 0, [0], vec![vec![0, 0]]).unwrap();
        let i = ideal(IdealKind::AllSided, &total);
        assert_eq!(i.state_count(), 1);
        assert!(i.accepts("").unwrap());
    }

    #[test]
    fn two_sided_ideal_of_bb_is_the_factor_automaton() {
        let bb = word_dfa(&PatternWord::new(ab(), "bb").unwrap());
        let i = ideal(IdealKind::TwoSided, &bb);
        assert_eq!(i.state_count(), 3);
        let direct = single_word_automaton(
            MatchMode::Factor,
            &PatternWord::new(ab(), "bb").unwrap(),
        );
        assert!(i.isomorphic(&direct.canonicalize()).unwrap());
    }

    #[test]
    fn shuffle_of_single_letters() {
        let a = word_dfa(&PatternWord::new(ab(), "a").unwrap());
        let b = word_dfa(&PatternWord::new(ab(), "b").unwrap());
        let s = shuffle(&a, &b).unwrap();
        let words = s.enumerate_language(4).unwrap();
        assert_eq!(words.render(s.alphabet()), vec!["ab", "ba"]);
    }

    #[test]
    fn empty_word_is_the_shuffle_unit() {
        let eps = Dfa::new(ab(), 0, [0], vec![vec![1, 1], vec![1, 1]]).unwrap();
        let d = suffix_pattern(3);
        let s = shuffle(&eps, &d).unwrap();
        assert!(s.equivalent(&d).unwrap());
    }

    #[test]
    fn empty_pattern_has_empty_ideals() {
        let empty = Dfa::new(ab(), 0, [], vec![vec![0, 0]]).unwrap();
        for kind in IdealKind::ALL {
            let i = ideal(kind, &empty);
            assert_eq!(i.state_count(), 1);
            assert_eq!(i.final_states(), Vec::<usize>::new());
        }
    }

    #[test]
    fn ideals_of_epsilon_containing_language_are_total() {
        let eps = Dfa::new(ab(), 0, [0], vec![vec![1, 1], vec![1, 1]]).unwrap();
        for kind in IdealKind::ALL {
            let i = ideal(kind, &eps);
            assert_eq!(i.state_count(), 1);
            assert!(i.accepts("abab").unwrap());
        }
    }
}
