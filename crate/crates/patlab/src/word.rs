//! Dedicated constructions for a single-word pattern `w`: the minimal DFA
//! of `{w}`, the failure (longest-border) table, and linear-size automata
//! for matching `w` as a prefix, suffix, factor or subsequence. The generic
//! ideal route stays available as an independent oracle for all of them.

use crate::automata::{Alphabet, Dfa, PartialDfa, Symbol, Word};
use crate::error::{Error, Result};
use crate::matchers::MatchMode;

/// A non-empty pattern word over a fixed alphabet. With `|w| = m - 2`, the
/// state complexity of `{w}` is exactly `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternWord {
    alphabet: Alphabet,
    symbols: Word,
}

impl PatternWord {
    pub fn new(alphabet: Alphabet, text: &str) -> Result<Self> {
        let symbols = alphabet.parse_word(text)?;
        Self::from_symbols(alphabet, symbols)
    }

    pub fn from_symbols(alphabet: Alphabet, symbols: Word) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::out_of_range(
                "pattern word must be non-empty (the ideals of {ε} are trivially Σ*)",
            ));
        }
        if let Some(&bad) = symbols.iter().find(|&&s| s >= alphabet.len()) {
            return Err(Error::invalid(format!("symbol index {bad} out of range")));
        }
        Ok(PatternWord { alphabet, symbols })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// `m` such that the minimal DFA of `{w}` has `m` states.
    pub fn state_complexity(&self) -> usize {
        self.symbols.len() + 2
    }
}

/// The failure table of a pattern word: `f(i)` is the length of the longest
/// suffix of the prefix `w_i` that is also a proper prefix of `w_i`
/// (equivalently, the longest bridge from `w_i` to `w_{i-1}`). Indices run
/// from 1 to `|w|`, and `0 <= f(i) < i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeTable {
    f: Vec<usize>,
}

impl BridgeTable {
    /// `f(i)` for `1 <= i <= |w|`.
    pub fn get(&self, i: usize) -> usize {
        self.f[i - 1]
    }

    /// All values `f(1), .., f(|w|)`.
    pub fn values(&self) -> &[usize] {
        &self.f
    }
}

/// Computes the failure table by the standard border recurrence.
pub fn bridge_table(w: &PatternWord) -> BridgeTable {
    let s = w.symbols();
    let mut f = vec![0usize; s.len()];
    for i in 1..s.len() {
        let mut k = f[i - 1];
        while k > 0 && s[k] != s[i] {
            k = f[k - 1];
        }
        if s[k] == s[i] {
            k += 1;
        }
        f[i] = k;
    }
    BridgeTable { f }
}

/// The minimal DFA of the singleton language `{w}`: a chain through the
/// prefixes of `w` plus an empty (sink) state, `|w| + 2` states in total.
pub fn word_dfa(w: &PatternWord) -> Dfa {
    let len = w.len();
    let mut partial = PartialDfa::new(w.alphabet().clone(), len + 1, 0)
        .expect("chain skeleton is valid");
    partial.set_final(len).unwrap();
    for (i, &a) in w.symbols().iter().enumerate() {
        partial.set_transition(i, a, i + 1).unwrap();
    }
    partial.complete()
}

/// The dedicated matching automaton for a single-word pattern.
///
/// * `Prefix`: the minimal DFA of `wΣ*` (chain, absorbing final state, and
///   a sink where the alphabet has a second letter): `m` states.
/// * `Suffix`: the `(m-1)`-state automaton of `Σ*w` whose transition on
///   `(w_i, a)` is the longest suffix of `w_i·a` that is a prefix of `w`,
///   built from the failure table. State `i` is the prefix `w_i`.
/// * `Factor`: the suffix automaton with the full-match state made
///   absorbing, recognizing `Σ*wΣ*`.
/// * `Subsequence`: the advance-or-stay automaton of `Σ* ⧢ w`.
pub fn single_word_automaton(mode: MatchMode, w: &PatternWord) -> Dfa {
    let len = w.len();
    let s = w.symbols();
    let k = w.alphabet().len();
    match mode {
        MatchMode::Prefix => {
            // chain states 0..len-1, absorbing final len, sink len+1
            let mut partial = PartialDfa::new(w.alphabet().clone(), len + 1, 0)
                .expect("chain skeleton is valid");
            partial.set_final(len).unwrap();
            for (i, &a) in s.iter().enumerate() {
                partial.set_transition(i, a, i + 1).unwrap();
            }
            for a in 0..k {
                partial.set_transition(len, a, len).unwrap();
            }
            // the sink is unreachable over a unary alphabet; minimizing
            // normalizes both cases to the minimal DFA of wΣ*
            partial.complete().minimize()
        }
        MatchMode::Suffix | MatchMode::Factor => {
            let bridges = bridge_table(w);
            let mut rows: Vec<Vec<usize>> = Vec::with_capacity(len + 1);
            for i in 0..=len {
                let mut row = Vec::with_capacity(k);
                for a in 0..k {
                    row.push(if i < len && s[i] == a {
                        i + 1
                    } else if i == 0 {
                        0
                    } else {
                        // follow the longest-border chain already computed
                        rows[bridges.get(i)][a]
                    });
                }
                rows.push(row);
            }
            if mode == MatchMode::Factor {
                rows[len] = vec![len; k];
            }
            Dfa::new(w.alphabet().clone(), 0, [len], rows).expect("bridge automaton is valid")
        }
        MatchMode::Subsequence => {
            let rows = (0..=len)
                .map(|i| {
                    (0..k)
                        .map(|a| if i < len && s[i] == a { i + 1 } else { i })
                        .collect()
                })
                .collect();
            Dfa::new(w.alphabet().clone(), 0, [len], rows).expect("subsequence automaton is valid")
        }
    }
}

/// The minimal DFA of the words of `t` containing `w` in the position given
/// by `mode`. Equivalent to the generic ideal route on `word_dfa(w)`, but
/// built from the linear-size constructions; the prefix case grafts the
/// pattern chain directly onto `t` at the state reached by `w`.
pub fn match_single_word(mode: MatchMode, w: &PatternWord, t: &Dfa) -> Result<Dfa> {
    if w.alphabet() != t.alphabet() {
        return Err(Error::AlphabetMismatch {
            left: w.alphabet().symbols().join(" "),
            right: t.alphabet().symbols().join(" "),
        });
    }
    match mode {
        MatchMode::Prefix => {
            // states: chain prefixes w_0..w_{m-3}, a sink, then all of t;
            // reading w walks the chain and lands in t at δ_T(q0, w)
            let len = w.len();
            let k = w.alphabet().len();
            let sink = len;
            let offset = len + 1;
            let entry = offset + t.run_from(t.initial(), w.symbols());
            let mut rows = Vec::with_capacity(offset + t.state_count());
            for (i, &a) in w.symbols().iter().enumerate() {
                let next = if i + 1 == len { entry } else { i + 1 };
                rows.push((0..k).map(|c| if c == a { next } else { sink }).collect());
            }
            rows.push(vec![sink; k]);
            for q in 0..t.state_count() {
                rows.push((0..k).map(|a| offset + t.next(q, a)).collect());
            }
            let finals = t.final_states().into_iter().map(|q| offset + q);
            let fused = Dfa::new(w.alphabet().clone(), 0, finals, rows)
                .expect("fused prefix automaton is valid");
            Ok(fused.minimize())
        }
        _ => {
            let automaton = single_word_automaton(mode, w);
            Ok(automaton.product_intersection(t)?.minimize())
        }
    }
}
