//! # patlab
//!
//! A laboratory for pattern matching on regular languages.
//!
//! Given a pattern language `P` and a text language `T` over a shared
//! alphabet, the library constructs minimal DFAs for the four combined
//! languages
//!
//! * words of `T` that *begin* with a word of `P`,
//! * words of `T` that *end* with a word of `P`,
//! * words of `T` with a word of `P` as a *factor*,
//! * words of `T` with a word of `P` as a *subsequence*,
//!
//! by intersecting `T` with the right, left, two-sided or all-sided ideal
//! generated by `P`. Dedicated linear-size constructions handle the case
//! where the pattern is a single word. On top of that sit generators for
//! the witness families whose combined complexity is extremal, and an
//! experiment harness that measures state complexity across `(m, n)` grids
//! and compares it with the closed-form bounds.
//!
//! The building blocks (complete DFAs, NFAs, subset construction, two
//! independent minimizers, products, equivalence, isomorphism, brute-force
//! enumeration) live in [`automata`].

pub mod automata;
pub mod complexity;
pub mod error;
pub mod format;
pub mod ideals;
pub mod matchers;
pub mod sample;
pub mod witnesses;
pub mod word;

pub use automata::{Alphabet, Dfa, Nfa, PartialDfa, Symbol, Transformation, Word, WordSample};
pub use error::{Error, Result};
pub use ideals::{ideal, shuffle, IdealKind};
pub use matchers::{classify_word, match_language, MatchMode};
pub use witnesses::{bm_dfa, cm_dfa, witness, Family, Role, WitnessSpec};
pub use word::{bridge_table, match_single_word, single_word_automaton, word_dfa, PatternWord};
