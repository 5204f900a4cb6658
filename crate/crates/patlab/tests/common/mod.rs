//! Brute-force oracles shared by the property and acceptance suites. All
//! of them work by explicit enumeration and are deliberately independent
//! of the construction paths they are used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use patlab::{Dfa, MatchMode, Nfa, Word};

/// All words over `k` symbols of length at most `max_len`, in the same
/// prefix-first lexicographic order that `enumerate_language` uses.
pub fn all_words(k: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(k: usize, budget: usize, stack: &mut Word, out: &mut Vec<Word>) {
        out.push(stack.clone());
        if budget == 0 {
            return;
        }
        for a in 0..k {
            stack.push(a);
            rec(k, budget - 1, stack, out);
            stack.pop();
        }
    }
    rec(k, max_len, &mut stack, &mut out);
    out
}

/// The accepted words of an NFA up to `max_len`, found by a depth-first
/// search over subset states (not via `determinize`).
pub fn nfa_language(nfa: &Nfa, max_len: usize) -> Vec<Word> {
    fn search(nfa: &Nfa, set: u64, finals: u64, budget: usize, stack: &mut Word, out: &mut Vec<Word>) {
        if set & finals != 0 {
            out.push(stack.clone());
        }
        if budget == 0 {
            return;
        }
        for a in 0..nfa.alphabet().len() {
            let mut next = 0u64;
            for q in 0..nfa.state_count() {
                if set >> q & 1 == 1 {
                    for &t in nfa.successors(q, a) {
                        next |= 1 << t;
                    }
                }
            }
            stack.push(a);
            search(nfa, next, finals, budget - 1, stack, out);
            stack.pop();
        }
    }

    assert!(nfa.state_count() <= 64);
    let start: u64 = 1 << nfa.initial();
    let finals: u64 = nfa
        .final_states()
        .iter()
        .fold(0, |mask, &q| mask | 1 << q);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    search(nfa, start, finals, max_len, &mut stack, &mut out);
    out
}

pub fn is_subsequence(needle: &[usize], haystack: &[usize]) -> bool {
    let mut at = 0;
    for &c in haystack {
        if at < needle.len() && needle[at] == c {
            at += 1;
        }
    }
    at == needle.len()
}

/// Does `text` contain a word of `patterns` in the position given by
/// `mode`? Decided by trying every decomposition.
pub fn occurs(mode: MatchMode, patterns: &BTreeSet<Word>, text: &Word) -> bool {
    match mode {
        MatchMode::Prefix => (0..=text.len()).any(|i| patterns.contains(&text[..i].to_vec())),
        MatchMode::Suffix => (0..=text.len()).any(|i| patterns.contains(&text[i..].to_vec())),
        MatchMode::Factor => (0..=text.len()).any(|i| {
            (i..=text.len()).any(|j| patterns.contains(&text[i..j].to_vec()))
        }),
        MatchMode::Subsequence => patterns.iter().any(|p| is_subsequence(p, text)),
    }
}

/// A finite language fragment: every member of some language up to a fixed
/// length cap. Supports the few regular operations the expansion oracles
/// need; all operations stay sound for words within the cap.
#[derive(Debug, Clone)]
pub struct Lang {
    pub cap: usize,
    pub words: BTreeSet<Word>,
}

impl Lang {
    pub fn empty(cap: usize) -> Lang {
        Lang {
            cap,
            words: BTreeSet::new(),
        }
    }

    pub fn epsilon(cap: usize) -> Lang {
        let mut words = BTreeSet::new();
        words.insert(Vec::new());
        Lang { cap, words }
    }

    pub fn letter(cap: usize, a: usize) -> Lang {
        let mut words = BTreeSet::new();
        words.insert(vec![a]);
        Lang { cap, words }
    }

    /// All words over `k` symbols of exactly length `len`.
    pub fn sigma_pow(cap: usize, k: usize, len: usize) -> Lang {
        let words = all_words(k, len)
            .into_iter()
            .filter(|w| w.len() == len)
            .collect();
        Lang { cap, words }
    }

    pub fn sigma_star(cap: usize, k: usize) -> Lang {
        Lang {
            cap,
            words: all_words(k, cap).into_iter().collect(),
        }
    }

    pub fn union(&self, other: &Lang) -> Lang {
        Lang {
            cap: self.cap,
            words: self.words.union(&other.words).cloned().collect(),
        }
    }

    pub fn concat(&self, other: &Lang) -> Lang {
        let mut words = BTreeSet::new();
        for u in &self.words {
            for v in &other.words {
                if u.len() + v.len() <= self.cap {
                    let mut w = u.clone();
                    w.extend_from_slice(v);
                    words.insert(w);
                }
            }
        }
        Lang { cap: self.cap, words }
    }

    pub fn star(&self) -> Lang {
        let mut words: BTreeSet<Word> = BTreeSet::new();
        words.insert(Vec::new());
        let mut frontier: Vec<Word> = vec![Vec::new()];
        while let Some(base) = frontier.pop() {
            for atom in &self.words {
                if atom.is_empty() || base.len() + atom.len() > self.cap {
                    continue;
                }
                let mut w = base.clone();
                w.extend_from_slice(atom);
                if words.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        Lang { cap: self.cap, words }
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }
}

/// Renumbers the states of a DFA by an arbitrary permutation.
pub fn permute_dfa(dfa: &Dfa, perm: &[usize]) -> Dfa {
    let n = dfa.state_count();
    let k = dfa.alphabet().len();
    assert_eq!(perm.len(), n);
    let mut rows = vec![vec![0usize; k]; n];
    let mut finals = Vec::new();
    for q in 0..n {
        for a in 0..k {
            rows[perm[q]][a] = perm[dfa.next(q, a)];
        }
        if dfa.is_final(q) {
            finals.push(perm[q]);
        }
    }
    Dfa::new(dfa.alphabet().clone(), perm[dfa.initial()], finals, rows).unwrap()
}

/// The language fragment of a DFA as a set, for intersection-style checks.
pub fn language_set(dfa: &Dfa, max_len: usize) -> BTreeSet<Word> {
    dfa.enumerate_language(max_len)
        .unwrap()
        .words()
        .iter()
        .cloned()
        .collect()
}
