//! Witness families: parameterized DFAs whose combined matching languages
//! attain the state-complexity upper bounds, plus the explicit shift
//! automata for left and two-sided ideals of the suffix/factor patterns.
//!
//! State numbering follows the defining transformations exactly (no
//! canonicalization), so individual transitions can be checked against the
//! defining cycle notation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::automata::{Alphabet, Dfa, Transformation};
use crate::error::{Error, Result};
use crate::matchers::MatchMode;
use crate::word::{word_dfa, PatternWord};

/// A witness family: one per combined operation, plus the single-word
/// variants and the unary case where all of them coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    PrefixGeneral,
    SuffixGeneral,
    FactorGeneral,
    SubsequenceGeneral,
    WordPrefix,
    WordSuffix,
    WordFactor,
    WordSubsequence,
    Unary,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::PrefixGeneral,
        Family::SuffixGeneral,
        Family::FactorGeneral,
        Family::SubsequenceGeneral,
        Family::WordPrefix,
        Family::WordSuffix,
        Family::WordFactor,
        Family::WordSubsequence,
        Family::Unary,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Family::PrefixGeneral => "prefix_general",
            Family::SuffixGeneral => "suffix_general",
            Family::FactorGeneral => "factor_general",
            Family::SubsequenceGeneral => "subsequence_general",
            Family::WordPrefix => "word_prefix",
            Family::WordSuffix => "word_suffix",
            Family::WordFactor => "word_factor",
            Family::WordSubsequence => "word_subsequence",
            Family::Unary => "unary",
        }
    }

    /// Smallest valid pattern complexity `m`.
    pub fn min_m(self) -> usize {
        match self {
            Family::PrefixGeneral => 1,
            Family::SuffixGeneral => 2,
            Family::FactorGeneral | Family::SubsequenceGeneral => 3,
            _ => 3,
        }
    }

    /// Smallest valid text complexity `n`.
    pub fn min_n(self) -> usize {
        match self {
            Family::PrefixGeneral => 1,
            Family::SuffixGeneral => 2,
            Family::FactorGeneral | Family::SubsequenceGeneral => 3,
            _ => 2,
        }
    }

    pub fn validate(self, m: usize, n: usize) -> Result<()> {
        if m < self.min_m() || n < self.min_n() {
            return Err(Error::out_of_range(format!(
                "family {} requires m >= {} and n >= {} (got m = {m}, n = {n})",
                self.token(),
                self.min_m(),
                self.min_n()
            )));
        }
        Ok(())
    }

    /// Whether the pattern side is a single word rather than a language.
    pub fn is_single_word(self) -> bool {
        matches!(
            self,
            Family::WordPrefix
                | Family::WordSuffix
                | Family::WordFactor
                | Family::WordSubsequence
                | Family::Unary
        )
    }

    /// The match mode measured for this family. The unary family uses
    /// prefix matching; over one letter all four modes coincide.
    pub fn mode(self) -> MatchMode {
        match self {
            Family::PrefixGeneral | Family::WordPrefix | Family::Unary => MatchMode::Prefix,
            Family::SuffixGeneral | Family::WordSuffix => MatchMode::Suffix,
            Family::FactorGeneral | Family::WordFactor => MatchMode::Factor,
            Family::SubsequenceGeneral | Family::WordSubsequence => MatchMode::Subsequence,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.token() == s)
            .ok_or_else(|| Error::out_of_range(format!("unknown family `{s}`")))
    }
}

/// Which side of the combined operation to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Pattern,
    Text,
}

impl Role {
    pub fn token(self) -> &'static str {
        match self {
            Role::Pattern => "pattern",
            Role::Text => "text",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pattern" => Ok(Role::Pattern),
            "text" => Ok(Role::Text),
            _ => Err(Error::out_of_range(format!("unknown role `{s}`"))),
        }
    }
}

/// Names one concrete witness DFA: family, side, and the `(m, n)` cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSpec {
    pub family: Family,
    pub role: Role,
    pub m: usize,
    pub n: usize,
}

fn binary() -> Alphabet {
    Alphabet::from_chars("ab").unwrap()
}

fn cycle_all(n: usize) -> Transformation {
    let states: Vec<usize> = (0..n).collect();
    Transformation::cycle(n, &states).unwrap()
}

fn cycle_range(n: usize, lo: usize, hi: usize) -> Transformation {
    if lo > hi {
        return Transformation::identity(n);
    }
    let states: Vec<usize> = (lo..=hi).collect();
    Transformation::cycle(n, &states).unwrap()
}

/// The pattern word `b^(m-2)` shared by the binary single-word families.
pub fn word_pattern(m: usize) -> Result<PatternWord> {
    if m < 3 {
        return Err(Error::out_of_range(format!(
            "single-word pattern requires m >= 3 (got {m})"
        )));
    }
    PatternWord::new(binary(), &"b".repeat(m - 2))
}

/// The unary pattern word `a^(m-2)`.
pub fn unary_pattern(m: usize) -> Result<PatternWord> {
    if m < 3 {
        return Err(Error::out_of_range(format!(
            "unary pattern requires m >= 3 (got {m})"
        )));
    }
    PatternWord::new(Alphabet::from_chars("a")?, &"a".repeat(m - 2))
}

/// Generates the witness DFA named by `spec`, with the exact state
/// numbering and letter transformations of its definition.
pub fn witness(spec: &WitnessSpec) -> Result<Dfa> {
    let WitnessSpec { family, role, m, n } = *spec;
    family.validate(m, n)?;
    match (family, role) {
        // text: a cycles all states, b fixes them; accept at n-1
        (Family::PrefixGeneral, Role::Text) => Dfa::from_transformations(
            binary(),
            0,
            [n - 1],
            &[cycle_all(n), Transformation::identity(n)],
        ),
        // pattern: the same machine with the letters swapped
        (Family::PrefixGeneral, Role::Pattern) => Dfa::from_transformations(
            binary(),
            0,
            [m - 1],
            &[Transformation::identity(m), cycle_all(m)],
        ),
        // text: a cycles all states, b cycles 1..n-1
        (Family::SuffixGeneral, Role::Text) => Dfa::from_transformations(
            binary(),
            0,
            [n - 1],
            &[cycle_all(n), cycle_range(n, 1, n - 1)],
        ),
        (Family::SuffixGeneral, Role::Pattern) => Dfa::from_transformations(
            binary(),
            0,
            [m - 1],
            &[cycle_range(m, 1, m - 1), cycle_all(m)],
        ),
        // text: a cycles all states, b cycles the middle band 1..n-2
        (Family::FactorGeneral, Role::Text) => Dfa::from_transformations(
            binary(),
            0,
            [n - 1],
            &[cycle_all(n), cycle_range(n, 1, n - 2)],
        ),
        (Family::FactorGeneral, Role::Pattern) => Dfa::from_transformations(
            binary(),
            0,
            [m - 1],
            &[cycle_range(m, 1, m - 2), cycle_all(m)],
        ),
        (Family::SubsequenceGeneral, role) => subsequence_witness(role, m, n),
        (Family::WordPrefix, Role::Pattern) => Ok(word_dfa(&word_pattern(m)?)),
        // text: b counts modulo n, a fixes; accept one residue placed so
        // that reading b^(m-2) from it lands one step past acceptance
        (Family::WordPrefix, Role::Text) => {
            let r = (m - 2) % n;
            Dfa::from_transformations(
                binary(),
                0,
                [(r + n - 1) % n],
                &[Transformation::identity(n), cycle_all(n)],
            )
        }
        (
            Family::WordSuffix | Family::WordFactor | Family::WordSubsequence,
            Role::Pattern,
        ) => Ok(word_dfa(&word_pattern(m)?)),
        // text: a counts modulo n, b fixes; accept everywhere except n-1
        (
            Family::WordSuffix | Family::WordFactor | Family::WordSubsequence,
            Role::Text,
        ) => Dfa::from_transformations(
            binary(),
            0,
            0..n - 1,
            &[cycle_all(n), Transformation::identity(n)],
        ),
        (Family::Unary, Role::Pattern) => Ok(word_dfa(&unary_pattern(m)?)),
        (Family::Unary, Role::Text) => {
            let r = (m - 2) % n;
            Dfa::from_transformations(
                Alphabet::from_chars("a")?,
                0,
                [(r + n - 1) % n],
                &[cycle_all(n)],
            )
        }
    }
}

fn subsequence_witness(role: Role, m: usize, n: usize) -> Result<Dfa> {
    // alphabet a1, .., a(m-2), b
    let letters: Vec<String> = (1..=m - 2)
        .map(|i| format!("a{i}"))
        .chain(std::iter::once("b".to_string()))
        .collect();
    let alphabet = Alphabet::new(letters)?;
    match role {
        Role::Pattern => {
            // a_i sends 0 to i and i to m-1, fixing the rest; b fixes all
            let mut transforms = Vec::with_capacity(m - 1);
            for i in 1..=m - 2 {
                let mut image: Vec<usize> = (0..m).collect();
                image[0] = i;
                image[i] = m - 1;
                transforms.push(Transformation::from_image(image)?);
            }
            transforms.push(Transformation::identity(m));
            Dfa::from_transformations(alphabet, 0, [m - 1], &transforms)
        }
        Role::Text => {
            // b counts modulo n, every a_i fixes the state
            let mut transforms = vec![Transformation::identity(n); m - 2];
            transforms.push(cycle_all(n));
            Dfa::from_transformations(alphabet, 0, [n - 1], &transforms)
        }
    }
}

/// The shift automaton for the left ideal of the suffix pattern: states are
/// binary `(m-1)`-tuples read as integers with `x1` the most significant
/// bit. Input `a` rotates the tuple left; input `b` shifts left and loads a
/// one into the last position. Accepting states are those with `x1 = 1`.
pub fn bm_dfa(m: usize) -> Result<Dfa> {
    if m < 2 {
        return Err(Error::out_of_range(format!("bm_dfa requires m >= 2 (got {m})")));
    }
    let width = m - 1;
    let size = 1usize << width;
    let mask = size - 1;
    let rows = (0..size)
        .map(|x| {
            let rotate = ((x << 1) & mask) | (x >> (width - 1));
            let load = ((x << 1) & mask) | 1;
            vec![rotate, load]
        })
        .collect();
    Dfa::new(binary(), 0, size / 2..size, rows)
}

/// The shift automaton for the two-sided ideal of the factor pattern:
/// binary `(m-2)`-tuples plus an absorbing final state `f` (the last
/// index). Input `a` rotates; input `b` shifts and loads a one when
/// `x1 = 0` and jumps to `f` when `x1 = 1`.
pub fn cm_dfa(m: usize) -> Result<Dfa> {
    if m < 3 {
        return Err(Error::out_of_range(format!("cm_dfa requires m >= 3 (got {m})")));
    }
    let width = m - 2;
    let size = 1usize << width;
    let mask = size - 1;
    let f = size;
    let mut rows: Vec<Vec<usize>> = (0..size)
        .map(|x| {
            let rotate = ((x << 1) & mask) | (x >> (width - 1));
            let load = if x & (size >> 1) == 0 {
                ((x << 1) & mask) | 1
            } else {
                f
            };
            vec![rotate, load]
        })
        .collect();
    rows.push(vec![f, f]);
    Dfa::new(binary(), 0, [f], rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(family: Family, role: Role, m: usize, n: usize) -> WitnessSpec {
        WitnessSpec { family, role, m, n }
    }

    #[test]
    fn prefix_text_is_the_counting_cycle() {
        let d = witness(&spec(Family::PrefixGeneral, Role::Text, 1, 4)).unwrap();
        assert_eq!(d.state_count(), 4);
        for q in 0..4 {
            assert_eq!(d.next(q, 0), (q + 1) % 4);
            assert_eq!(d.next(q, 1), q);
        }
        assert_eq!(d.final_states(), vec![3]);
    }

    #[test]
    fn suffix_pattern_matches_its_figure() {
        // b: (0,1,..,m-1), a: (1,..,m-1)
        let d = witness(&spec(Family::SuffixGeneral, Role::Pattern, 4, 2)).unwrap();
        assert_eq!(d.next(0, 0), 0);
        assert_eq!(d.next(0, 1), 1);
        assert_eq!(d.next(1, 0), 2);
        assert_eq!(d.next(1, 1), 2);
        assert_eq!(d.next(3, 0), 1);
        assert_eq!(d.next(3, 1), 0);
    }

    #[test]
    fn factor_pattern_matches_its_figure() {
        // explicit edges: 0-b->1, chain a,b; m-2 -a-> 1, m-2 -b-> m-1,
        // m-1 loops on a, m-1 -b-> 0
        let m = 5;
        let d = witness(&spec(Family::FactorGeneral, Role::Pattern, m, 3)).unwrap();
        assert_eq!(d.next(0, 1), 1);
        assert_eq!(d.next(0, 0), 0);
        for q in 1..m - 2 {
            assert_eq!(d.next(q, 0), q + 1);
            assert_eq!(d.next(q, 1), q + 1);
        }
        assert_eq!(d.next(m - 2, 0), 1);
        assert_eq!(d.next(m - 2, 1), m - 1);
        assert_eq!(d.next(m - 1, 0), m - 1);
        assert_eq!(d.next(m - 1, 1), 0);
    }

    #[test]
    fn subsequence_pattern_shape() {
        let d = witness(&spec(Family::SubsequenceGeneral, Role::Pattern, 5, 3)).unwrap();
        assert_eq!(d.state_count(), 5);
        assert_eq!(d.alphabet().symbols(), &["a1", "a2", "a3", "b"]);
        for i in 1..=3usize {
            assert_eq!(d.next(0, i - 1), i);
            assert_eq!(d.next(i, i - 1), 4);
            assert_eq!(d.next(i, 3), i);
        }
        assert_eq!(d.next(0, 3), 0);
    }

    #[test]
    fn word_suffix_text_shape() {
        let d = witness(&spec(Family::WordSuffix, Role::Text, 3, 5)).unwrap();
        assert_eq!(d.state_count(), 5);
        assert_eq!(d.final_states(), vec![0, 1, 2, 3]);
        for q in 0..5 {
            assert_eq!(d.next(q, 0), (q + 1) % 5);
            assert_eq!(d.next(q, 1), q);
        }
    }

    #[test]
    fn witnesses_are_minimal() {
        for family in Family::ALL {
            for role in [Role::Pattern, Role::Text] {
                let m = family.min_m().max(3);
                let n = family.min_n().max(3);
                let d = witness(&spec(family, role, m, n)).unwrap();
                assert_eq!(
                    d.minimize().state_count(),
                    d.state_count(),
                    "{family} {role} m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn witness_ranges_are_validated() {
        assert!(witness(&spec(Family::SuffixGeneral, Role::Pattern, 1, 2)).is_err());
        assert!(witness(&spec(Family::FactorGeneral, Role::Text, 3, 2)).is_err());
        assert!(witness(&spec(Family::WordPrefix, Role::Pattern, 2, 2)).is_err());
        let err = witness(&spec(Family::Unary, Role::Text, 3, 1)).unwrap_err();
        assert!(err.to_string().contains("n >= 2"));
    }

    #[test]
    fn bm_dfa_matches_figure_edges() {
        let b4 = bm_dfa(4).unwrap();
        assert_eq!(b4.state_count(), 8);
        // (0,0,1) -a-> (0,1,0) and (0,1,0) -b-> (1,0,1)
        assert_eq!(b4.next(0b001, 0), 0b010);
        assert_eq!(b4.next(0b010, 1), 0b101);
        // (1,0,0) -a-> (0,0,1), (1,1,1) loops
        assert_eq!(b4.next(0b100, 0), 0b001);
        assert_eq!(b4.next(0b111, 0), 0b111);
        assert_eq!(b4.next(0b111, 1), 0b111);
        assert_eq!(b4.final_states(), vec![4, 5, 6, 7]);
    }

    #[test]
    fn bm_dfa_smallest_case() {
        let b2 = bm_dfa(2).unwrap();
        assert_eq!(b2.state_count(), 2);
        assert_eq!(b2.next(0, 0), 0);
        assert_eq!(b2.next(1, 0), 1);
        assert_eq!(b2.next(0, 1), 1);
        assert_eq!(b2.next(1, 1), 1);
        assert!(bm_dfa(1).is_err());
    }

    #[test]
    fn bm_reachability_structure() {
        // even k > 1 is reached from k/2 by a; k+1 from k/2 by b
        for m in 3..=8 {
            let b = bm_dfa(m).unwrap();
            for k in (2..b.state_count()).step_by(2) {
                assert_eq!(b.next(k / 2, 0), k);
                assert_eq!(b.next(k / 2, 1), k + 1);
            }
        }
    }

    #[test]
    fn cm_dfa_matches_figure_edges() {
        let c5 = cm_dfa(5).unwrap();
        assert_eq!(c5.state_count(), 9);
        let f = 8;
        // (1,0,0) -b-> f, f absorbing, (0,0,1) -a-> (0,1,0)
        assert_eq!(c5.next(0b100, 1), f);
        assert_eq!(c5.next(f, 0), f);
        assert_eq!(c5.next(f, 1), f);
        assert_eq!(c5.next(0b001, 0), 0b010);
        assert_eq!(c5.next(0b010, 1), 0b101);
        assert_eq!(c5.final_states(), vec![f]);
    }

    #[test]
    fn cm_dfa_smallest_case() {
        let c3 = cm_dfa(3).unwrap();
        assert_eq!(c3.state_count(), 3);
        assert_eq!(c3.next(0, 0), 0);
        assert_eq!(c3.next(0, 1), 1);
        assert_eq!(c3.next(1, 0), 1);
        assert_eq!(c3.next(1, 1), 2);
        assert!(cm_dfa(2).is_err());
    }
}
