use std::collections::HashMap;

use crate::automata::alphabet::{Alphabet, Symbol};
use crate::automata::dfa::Dfa;
use crate::error::{Error, Result};

/// A nondeterministic finite automaton without epsilon transitions.
///
/// Each `(state, symbol)` pair maps to a (possibly empty) set of successor
/// states, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    initial: usize,
    finals: Vec<bool>,
    // delta[q][a] = sorted successor states
    delta: Vec<Vec<Vec<usize>>>,
}

impl Nfa {
    pub fn new(
        alphabet: Alphabet,
        initial: usize,
        final_states: impl IntoIterator<Item = usize>,
        mut delta: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let n = delta.len();
        if n == 0 {
            return Err(Error::invalid("NFA must have at least one state"));
        }
        if initial >= n {
            return Err(Error::invalid(format!(
                "initial state {initial} out of range for {n} states"
            )));
        }
        let k = alphabet.len();
        for (q, row) in delta.iter_mut().enumerate() {
            if row.len() != k {
                return Err(Error::invalid(format!(
                    "state {q} has {} transition sets, expected {k}",
                    row.len()
                )));
            }
            for set in row.iter_mut() {
                set.sort_unstable();
                set.dedup();
                if let Some(&bad) = set.iter().find(|&&t| t >= n) {
                    return Err(Error::invalid(format!(
                        "transition target {bad} out of range for {n} states"
                    )));
                }
            }
        }
        let mut finals = vec![false; n];
        for q in final_states {
            if q >= n {
                return Err(Error::invalid(format!(
                    "final state {q} out of range for {n} states"
                )));
            }
            finals[q] = true;
        }
        Ok(Nfa {
            alphabet,
            initial,
            finals,
            delta,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.finals.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn final_states(&self) -> Vec<usize> {
        (0..self.state_count()).filter(|&q| self.finals[q]).collect()
    }

    pub fn successors(&self, q: usize, a: Symbol) -> &[usize] {
        &self.delta[q][a]
    }

    /// Whether the NFA accepts a word of symbol indices, by subset walk.
    pub fn accepts_word(&self, word: &[Symbol]) -> bool {
        let blocks = self.state_count().div_ceil(64);
        let mut current = vec![0u64; blocks];
        set_bit(&mut current, self.initial);
        for &a in word {
            let mut next = vec![0u64; blocks];
            for q in iter_bits(&current, self.state_count()) {
                for &t in &self.delta[q][a] {
                    set_bit(&mut next, t);
                }
            }
            current = next;
        }
        let accepted = iter_bits(&current, self.state_count()).any(|q| self.finals[q]);
        accepted
    }

    pub fn accepts(&self, text: &str) -> Result<bool> {
        Ok(self.accepts_word(&self.alphabet.parse_word(text)?))
    }

    /// Subset construction. Only subsets reachable from `{initial}` are
    /// materialized; the empty subset acts as the sink. The result is a
    /// complete DFA whose states are numbered in BFS discovery order
    /// (symbols in alphabet order), with state 0 the initial subset.
    pub fn determinize(&self) -> Dfa {
        let k = self.alphabet.len();
        let blocks = self.state_count().div_ceil(64);
        let mut initial = vec![0u64; blocks];
        set_bit(&mut initial, self.initial);

        let mut index: HashMap<Vec<u64>, usize> = HashMap::new();
        let mut subsets = vec![initial];
        index.insert(subsets[0].clone(), 0);
        let mut rows: Vec<Vec<usize>> = Vec::new();
        let mut at = 0;
        while at < subsets.len() {
            let current = subsets[at].clone();
            let mut row = Vec::with_capacity(k);
            for a in 0..k {
                let mut next = vec![0u64; blocks];
                for q in iter_bits(&current, self.state_count()) {
                    for &t in &self.delta[q][a] {
                        set_bit(&mut next, t);
                    }
                }
                let id = *index.entry(next.clone()).or_insert_with(|| {
                    subsets.push(next);
                    subsets.len() - 1
                });
                row.push(id);
            }
            rows.push(row);
            at += 1;
        }
        let finals = subsets.iter().enumerate().filter_map(|(i, s)| {
            iter_bits(s, self.state_count())
                .any(|q| self.finals[q])
                .then_some(i)
        });
        Dfa::new(self.alphabet.clone(), 0, finals, rows)
            .expect("subset construction yields a valid DFA")
    }
}

fn set_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn iter_bits(bits: &[u64], n: usize) -> impl Iterator<Item = usize> + '_ {
    (0..n).filter(move |i| bits[i / 64] >> (i % 64) & 1 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::from_chars("ab").unwrap()
    }

    #[test]
    fn determinize_counts_reachable_subsets_only() {
        // delta(0,a) = {0,1}, delta(1,a) = {2}, empty b rows, finals {2}:
        // the language is a^k (k >= 2), needing a sink for b, so the
        // minimal DFA has 4 states.
        let nfa = Nfa::new(
            ab(),
            0,
            [2],
            vec![
                vec![vec![0, 1], vec![]],
                vec![vec![2], vec![]],
                vec![vec![], vec![]],
            ],
        )
        .unwrap();
        let dfa = nfa.determinize();
        assert_eq!(dfa.state_count(), 4); // {0}, {0,1}, {0,1,2}, {}
        let min = dfa.minimize();
        assert_eq!(min.state_count(), 4);
        // cross-check membership against the NFA up to length 8
        let sample = dfa.enumerate_language(8).unwrap();
        for len in 0..=8usize {
            for bits in 0..1usize << len {
                let word: Vec<usize> = (0..len).map(|i| bits >> i & 1).collect();
                assert_eq!(nfa.accepts_word(&word), sample.contains(&word));
            }
        }
    }

    #[test]
    fn determinize_preserves_deterministic_inputs() {
        // an NFA that is already deterministic determinizes to an
        // isomorphic DFA with the same state count
        let nfa = Nfa::new(
            ab(),
            0,
            [1],
            vec![
                vec![vec![1], vec![0]],
                vec![vec![0], vec![1]],
            ],
        )
        .unwrap();
        let dfa = nfa.determinize();
        assert_eq!(dfa.state_count(), 2);
        assert!(dfa.accepts("a").unwrap());
        assert!(dfa.accepts("ab").unwrap());
        assert!(!dfa.accepts("aa").unwrap());
        let direct = Dfa::new(ab(), 0, [1], vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert!(dfa.minimize().isomorphic(&direct.minimize()).unwrap());
    }
}
