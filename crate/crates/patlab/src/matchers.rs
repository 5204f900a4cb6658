//! The four combined matching operations: intersect a text language with
//! the ideal generated by a pattern language.

use std::fmt;
use std::str::FromStr;

use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::ideals::{ideal, IdealKind};

/// How the pattern must occur inside a text word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatchMode {
    Prefix,
    Suffix,
    Factor,
    Subsequence,
}

impl MatchMode {
    pub const ALL: [MatchMode; 4] = [
        MatchMode::Prefix,
        MatchMode::Suffix,
        MatchMode::Factor,
        MatchMode::Subsequence,
    ];

    /// The ideal realizing this mode: a text begins/ends/contains a pattern
    /// word exactly when it lies in the corresponding ideal of the pattern.
    pub fn ideal_kind(self) -> IdealKind {
        match self {
            MatchMode::Prefix => IdealKind::Right,
            MatchMode::Suffix => IdealKind::Left,
            MatchMode::Factor => IdealKind::TwoSided,
            MatchMode::Subsequence => IdealKind::AllSided,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            MatchMode::Prefix => "prefix",
            MatchMode::Suffix => "suffix",
            MatchMode::Factor => "factor",
            MatchMode::Subsequence => "subsequence",
        }
    }
}

impl fmt::Display for MatchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for MatchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MatchMode::ALL
            .into_iter()
            .find(|m| m.token() == s)
            .ok_or_else(|| Error::out_of_range(format!("unknown match mode `{s}`")))
    }
}

/// A match result together with the size of the reachable (unminimized)
/// product, for experiments that compare reachable against distinguishable
/// state counts.
#[derive(Debug, Clone)]
pub struct MatchDetail {
    pub dfa: Dfa,
    pub product_states: usize,
}

/// The minimal DFA of the words of `t` containing a word of `p` in the
/// position given by `mode`.
pub fn match_language(mode: MatchMode, p: &Dfa, t: &Dfa) -> Result<Dfa> {
    Ok(match_language_detailed(mode, p, t)?.dfa)
}

/// As [`match_language`], also reporting the reachable product size.
pub fn match_language_detailed(mode: MatchMode, p: &Dfa, t: &Dfa) -> Result<MatchDetail> {
    p.check_same_alphabet(t)?;
    let ideal_dfa = ideal(mode.ideal_kind(), p);
    let product = ideal_dfa.product_intersection(t)?;
    Ok(MatchDetail {
        product_states: product.state_count(),
        dfa: product.minimize(),
    })
}

/// Whether a concrete text word contains a pattern occurrence of the given
/// mode, decided by running the ideal DFA over the text.
pub fn classify_word(mode: MatchMode, p: &Dfa, text: &str) -> Result<bool> {
    let word = p.alphabet().parse_word(text)?;
    Ok(ideal(mode.ideal_kind(), p).accepts_word(&word))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;
    use crate::witnesses::{witness, Family, Role, WitnessSpec};
    use crate::word::{word_dfa, PatternWord};

    fn spec(family: Family, role: Role, m: usize, n: usize) -> Dfa {
        witness(&WitnessSpec { family, role, m, n }).unwrap()
    }

    #[test]
    fn prefix_witnesses_reach_mn() {
        let p = spec(Family::PrefixGeneral, Role::Pattern, 4, 4);
        let t = spec(Family::PrefixGeneral, Role::Text, 4, 4);
        let detail = match_language_detailed(MatchMode::Prefix, &p, &t).unwrap();
        assert_eq!(detail.dfa.state_count(), 16);
        assert_eq!(detail.product_states, 16);
    }

    #[test]
    fn suffix_witnesses_reach_exponential_bound() {
        let p = spec(Family::SuffixGeneral, Role::Pattern, 3, 3);
        let t = spec(Family::SuffixGeneral, Role::Text, 3, 3);
        let dfa = match_language(MatchMode::Suffix, &p, &t).unwrap();
        assert_eq!(dfa.state_count(), 4 * 3);
    }

    #[test]
    fn subsequence_witnesses_reach_bound() {
        let p = spec(Family::SubsequenceGeneral, Role::Pattern, 4, 3);
        let t = spec(Family::SubsequenceGeneral, Role::Text, 4, 3);
        let dfa = match_language(MatchMode::Subsequence, &p, &t).unwrap();
        assert_eq!(dfa.state_count(), (4 + 1) * 3);
    }

    #[test]
    fn empty_pattern_matches_nothing() {
        let sigma = Alphabet::from_chars("ab").unwrap();
        let empty = Dfa::new(sigma, 0, [], vec![vec![0, 0]]).unwrap();
        let t = spec(Family::FactorGeneral, Role::Text, 3, 3);
        let dfa = match_language(MatchMode::Factor, &empty, &t).unwrap();
        assert_eq!(dfa.state_count(), 1);
        assert!(dfa.final_states().is_empty());
    }

    #[test]
    fn classify_factor_over_four_letters() {
        let sigma = Alphabet::from_chars("abxy").unwrap();
        let p = word_dfa(&PatternWord::new(sigma, "ab").unwrap());
        assert!(classify_word(MatchMode::Factor, &p, "xaby").unwrap());
        assert!(!classify_word(MatchMode::Factor, &p, "xayb").unwrap());
        assert!(classify_word(MatchMode::Subsequence, &p, "xayb").unwrap());
        assert!(classify_word(MatchMode::Prefix, &p, "abxy").unwrap());
        assert!(!classify_word(MatchMode::Prefix, &p, "xab").unwrap());
        assert!(classify_word(MatchMode::Suffix, &p, "xab").unwrap());
        assert!(matches!(
            classify_word(MatchMode::Factor, &p, "abc"),
            Err(Error::UnknownSymbol { position: 2, .. })
        ));
    }

    #[test]
    fn classify_suffix_accepts_generator_words() {
        // any word of the left-ideal generator bΣ^(m-2)(aΣ^(m-2))* ends
        // with a pattern occurrence
        let p = spec(Family::SuffixGeneral, Role::Pattern, 4, 2);
        for text in ["bab", "bbb", "baa", "babaaa", "bbbabb"] {
            assert!(classify_word(MatchMode::Suffix, &p, text).unwrap(), "{text}");
        }
        assert!(!classify_word(MatchMode::Suffix, &p, "ba").unwrap());
    }
}
