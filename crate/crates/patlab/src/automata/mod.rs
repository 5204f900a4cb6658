//! Core automata types and operations: complete DFAs, NFAs, subset
//! construction, two independent minimizers, products, equivalence and
//! isomorphism tests, and a brute-force language oracle.

pub mod alphabet;
pub mod dfa;
pub mod minimize;
pub mod moore;
pub mod nfa;
pub mod transform;

pub use alphabet::{Alphabet, Symbol, Word};
pub use dfa::{Dfa, PartialDfa, WordSample, MAX_ENUMERATION_LEN};
pub use moore::minimize_oracle;
pub use nfa::Nfa;
pub use transform::Transformation;
