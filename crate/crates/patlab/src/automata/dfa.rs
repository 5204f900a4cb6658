use std::collections::HashMap;

use crate::automata::alphabet::{Alphabet, Symbol, Word};
use crate::automata::transform::Transformation;
use crate::error::{Error, Result};

/// Hard cap for [`Dfa::enumerate_language`], guarding against exponential
/// blow-up of the word list.
pub const MAX_ENUMERATION_LEN: usize = 16;

/// A complete deterministic finite automaton.
///
/// The transition table is total: every state has exactly one successor per
/// alphabet symbol. States are indices `0..state_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    initial: usize,
    finals: Vec<bool>,
    // delta[q * alphabet.len() + a] = successor of q on symbol a
    delta: Vec<usize>,
}

impl Dfa {
    /// Builds a DFA from explicit transition rows, one row per state in
    /// alphabet order.
    pub fn new(
        alphabet: Alphabet,
        initial: usize,
        final_states: impl IntoIterator<Item = usize>,
        rows: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::invalid("DFA must have at least one state"));
        }
        if initial >= n {
            return Err(Error::invalid(format!(
                "initial state {initial} out of range for {n} states"
            )));
        }
        let k = alphabet.len();
        let mut delta = Vec::with_capacity(n * k);
        for (q, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::invalid(format!(
                    "state {q} has {} transitions, expected {k}",
                    row.len()
                )));
            }
            for &target in row {
                if target >= n {
                    return Err(Error::invalid(format!(
                        "transition target {target} out of range for {n} states"
                    )));
                }
                delta.push(target);
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
        Ok(Dfa {
            alphabet,
            initial,
            finals,
            delta,
        })
    }

    /// Builds a DFA by giving the transformation induced by each symbol, in
    /// alphabet order. All transformations must have the same degree.
    pub fn from_transformations(
        alphabet: Alphabet,
        initial: usize,
        final_states: impl IntoIterator<Item = usize>,
        transforms: &[Transformation],
    ) -> Result<Self> {
        if transforms.len() != alphabet.len() {
            return Err(Error::invalid(format!(
                "{} transformations given for {} symbols",
                transforms.len(),
                alphabet.len()
            )));
        }
        let n = transforms[0].degree();
        if transforms.iter().any(|t| t.degree() != n) {
            return Err(Error::invalid("transformations have mixed degrees"));
        }
        let rows = (0..n)
            .map(|q| transforms.iter().map(|t| t.apply(q)).collect())
            .collect();
        Self::new(alphabet, initial, final_states, rows)
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

    /// Final states in increasing order.
    pub fn final_states(&self) -> Vec<usize> {
        (0..self.state_count()).filter(|&q| self.finals[q]).collect()
    }

    pub fn next(&self, q: usize, a: Symbol) -> usize {
        self.delta[q * self.alphabet.len() + a]
    }

    pub fn run_from(&self, from: usize, word: &[Symbol]) -> usize {
        word.iter().fold(from, |q, &a| self.next(q, a))
    }

    /// Whether the DFA accepts a word given as symbol indices.
    pub fn accepts_word(&self, word: &[Symbol]) -> bool {
        self.finals[self.run_from(self.initial, word)]
    }

    /// Whether the DFA accepts a word given as text.
    pub fn accepts(&self, text: &str) -> Result<bool> {
        Ok(self.accepts_word(&self.alphabet.parse_word(text)?))
    }

    pub(crate) fn check_same_alphabet(&self, other: &Dfa) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.symbols().join(" "),
                right: other.alphabet.symbols().join(" "),
            });
        }
        Ok(())
    }

    /// All accepted words of length at most `max_len`, in lexicographic
    /// order of the alphabet (shorter prefixes first).
    pub fn enumerate_language(&self, max_len: usize) -> Result<WordSample> {
        if max_len > MAX_ENUMERATION_LEN {
            return Err(Error::out_of_range(format!(
                "enumeration length {max_len} exceeds the cap of {MAX_ENUMERATION_LEN}"
            )));
        }
        let mut words = Vec::new();
        let mut stack: Word = Vec::new();
        self.enumerate_rec(self.initial, max_len, &mut stack, &mut words);
        Ok(WordSample { max_len, words })
    }

    fn enumerate_rec(&self, q: usize, budget: usize, stack: &mut Word, out: &mut Vec<Word>) {
        if self.finals[q] {
            out.push(stack.clone());
        }
        if budget == 0 {
            return;
        }
        for a in 0..self.alphabet.len() {
            stack.push(a);
            self.enumerate_rec(self.next(q, a), budget - 1, stack, out);
            stack.pop();
        }
    }

    /// The product automaton on reachable state pairs, accepting the
    /// intersection of the two languages. States are numbered in BFS
    /// discovery order from the initial pair.
    pub fn product_intersection(&self, other: &Dfa) -> Result<Dfa> {
        self.check_same_alphabet(other)?;
        let k = self.alphabet.len();
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut pairs = vec![(self.initial, other.initial)];
        index.insert(pairs[0], 0);
        let mut delta = Vec::new();
        let mut at = 0;
        while at < pairs.len() {
            let (p, q) = pairs[at];
            for a in 0..k {
                let succ = (self.next(p, a), other.next(q, a));
                let id = *index.entry(succ).or_insert_with(|| {
                    pairs.push(succ);
                    pairs.len() - 1
                });
                delta.push(id);
            }
            at += 1;
        }
        let finals = pairs
            .iter()
            .enumerate()
            .filter(|(_, &(p, q))| self.finals[p] && other.finals[q])
            .map(|(i, _)| i);
        Dfa::new(
            self.alphabet.clone(),
            0,
            finals,
            delta.chunks(k).map(|c| c.to_vec()).collect(),
        )
    }

    /// Language equality, decided by searching the product for a pair of
    /// states that disagree on acceptance. Deliberately independent of
    /// minimization so it can be used to test it.
    pub fn equivalent(&self, other: &Dfa) -> Result<bool> {
        self.check_same_alphabet(other)?;
        let k = self.alphabet.len();
        let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
        let mut queue = vec![(self.initial, other.initial)];
        seen.insert(queue[0], ());
        while let Some((p, q)) = queue.pop() {
            if self.finals[p] != other.finals[q] {
                return Ok(false);
            }
            for a in 0..k {
                let succ = (self.next(p, a), other.next(q, a));
                if seen.insert(succ, ()).is_none() {
                    queue.push(succ);
                }
            }
        }
        Ok(true)
    }
}

/// A transition table under construction, possibly with missing entries.
#[derive(Debug, Clone)]
pub struct PartialDfa {
    alphabet: Alphabet,
    state_count: usize,
    initial: usize,
    finals: Vec<bool>,
    delta: Vec<Option<usize>>,
}

impl PartialDfa {
    pub fn new(alphabet: Alphabet, state_count: usize, initial: usize) -> Result<Self> {
        if state_count == 0 {
            return Err(Error::invalid("DFA must have at least one state"));
        }
        if initial >= state_count {
            return Err(Error::invalid(format!(
                "initial state {initial} out of range for {state_count} states"
            )));
        }
        let k = alphabet.len();
        Ok(PartialDfa {
            alphabet,
            state_count,
            initial,
            finals: vec![false; state_count],
            delta: vec![None; state_count * k],
        })
    }

    pub fn set_final(&mut self, q: usize) -> Result<()> {
        if q >= self.state_count {
            return Err(Error::invalid(format!("final state {q} out of range")));
        }
        self.finals[q] = true;
        Ok(())
    }

    pub fn set_transition(&mut self, from: usize, a: Symbol, to: usize) -> Result<()> {
        if from >= self.state_count || to >= self.state_count {
            return Err(Error::invalid(format!(
                "transition {from} -> {to} out of range for {} states",
                self.state_count
            )));
        }
        if a >= self.alphabet.len() {
            return Err(Error::invalid(format!("symbol index {a} out of range")));
        }
        self.delta[from * self.alphabet.len() + a] = Some(to);
        Ok(())
    }

    /// Totalizes the table. If any entry is missing, a fresh non-final sink
    /// state with self-loops is appended and absorbs the missing
    /// transitions; a table that is already total is returned unchanged.
    pub fn complete(self) -> Dfa {
        let k = self.alphabet.len();
        let needs_sink = self.delta.iter().any(Option::is_none);
        let n = self.state_count + usize::from(needs_sink);
        let sink = self.state_count;
        let mut rows: Vec<Vec<usize>> = self
            .delta
            .chunks(k)
            .map(|row| row.iter().map(|t| t.unwrap_or(sink)).collect())
            .collect();
        let mut finals = self.finals;
        if needs_sink {
            rows.push(vec![sink; k]);
            finals.push(false);
        }
        debug_assert_eq!(rows.len(), n);
        Dfa::new(
            self.alphabet,
            self.initial,
            finals.iter().enumerate().filter(|(_, &f)| f).map(|(q, _)| q),
            rows,
        )
        .expect("completed table is structurally valid")
    }
}

/// All accepted words of a language up to a length bound: a brute-force,
/// easily comparable snapshot used as an oracle in tests and experiments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSample {
    max_len: usize,
    words: Vec<Word>,
}

impl WordSample {
    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: &[Symbol]) -> bool {
        self.words.iter().any(|w| w == word)
    }

    /// Renders each word with the given alphabet.
    pub fn render(&self, alphabet: &Alphabet) -> Vec<String> {
        self.words.iter().map(|w| alphabet.format_word(w)).collect()
    }
}
