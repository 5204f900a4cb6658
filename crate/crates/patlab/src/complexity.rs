//! Experiment harness: measure the state complexity of the combined
//! matching operations on the witness families across `(m, n)` grids,
//! compare against the closed-form bounds, and search for bound violations
//! over undersized alphabets in the subsequence case.

use std::ops::RangeInclusive;
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::automata::{Alphabet, Dfa};
use crate::error::{Error, Result};
use crate::format::serialize_dfa;
use crate::matchers::{match_language, MatchMode};
use crate::sample::random_dfa;
use crate::witnesses::{unary_pattern, witness, word_pattern, Family, Role, WitnessSpec};
use crate::word::match_single_word;

/// The closed-form worst-case state complexity of a family's combined
/// operation at pattern complexity `m` and text complexity `n`.
pub fn bound_formula(family: Family, m: usize, n: usize) -> Result<usize> {
    family.validate(m, n)?;
    Ok(match family {
        Family::PrefixGeneral => m * n,
        Family::SuffixGeneral => (1 << (m - 1)) * n,
        Family::FactorGeneral | Family::SubsequenceGeneral => ((1 << (m - 2)) + 1) * n,
        Family::WordPrefix => m + n - 1,
        Family::WordSuffix => (m - 1) * n - (m - 2),
        Family::WordFactor | Family::WordSubsequence => (m - 1) * n,
        Family::Unary => m + n - 2,
    })
}

/// Builds the family's witness pair and measures the state complexity of
/// the combined language.
pub fn measure_cell(family: Family, m: usize, n: usize) -> Result<usize> {
    let mode = family.mode();
    let text = witness(&WitnessSpec {
        family,
        role: Role::Text,
        m,
        n,
    })?;
    if family.is_single_word() {
        let w = match family {
            Family::Unary => unary_pattern(m)?,
            _ => word_pattern(m)?,
        };
        Ok(match_single_word(mode, &w, &text)?.state_count())
    } else {
        let pattern = witness(&WitnessSpec {
            family,
            role: Role::Pattern,
            m,
            n,
        })?;
        Ok(match_language(mode, &pattern, &text)?.state_count())
    }
}

/// One grid cell: measured versus predicted complexity. A cell that timed
/// out or failed reports `measured = 0` and `tight = false`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridRow {
    pub m: usize,
    pub n: usize,
    pub measured: usize,
    pub formula: usize,
    pub tight: bool,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportMeta {
    pub alphabet_sizes: Vec<usize>,
    pub tool_version: String,
}

/// A grid of measurements for one family, serializable to CSV and JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityReport {
    pub family: Family,
    pub rows: Vec<GridRow>,
    pub meta: ReportMeta,
}

pub const CSV_HEADER: &str = "family,m,n,measured,formula,tight,elapsed_ms";

impl ComplexityReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                self.family.token(),
                row.m,
                row.n,
                row.measured,
                row.formula,
                row.tight,
                row.elapsed_ms
            ));
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "empty CSV report"))?;
        if header.trim() != CSV_HEADER {
            return Err(Error::parse(1, format!("unexpected CSV header `{header}`")));
        }
        let mut family: Option<Family> = None;
        let mut rows = Vec::new();
        for (i, line) in lines {
            let lineno = i + 1;
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 7 {
                return Err(Error::parse(lineno, format!("expected 7 fields, found {}", fields.len())));
            }
            let row_family: Family = fields[0]
                .parse()
                .map_err(|e: Error| Error::parse(lineno, e.to_string()))?;
            match family {
                None => family = Some(row_family),
                Some(f) if f == row_family => {}
                Some(f) => {
                    return Err(Error::parse(
                        lineno,
                        format!("mixed families `{f}` and `{row_family}`"),
                    ))
                }
            }
            let num = |field: &str| -> Result<usize> {
                field
                    .parse()
                    .map_err(|_| Error::parse(lineno, format!("invalid number `{field}`")))
            };
            let tight = match fields[5] {
                "true" => true,
                "false" => false,
                other => return Err(Error::parse(lineno, format!("invalid flag `{other}`"))),
            };
            rows.push(GridRow {
                m: num(fields[1])?,
                n: num(fields[2])?,
                measured: num(fields[3])?,
                formula: num(fields[4])?,
                tight,
                elapsed_ms: num(fields[6])? as u64,
            });
        }
        let family = family.ok_or_else(|| Error::parse(1, "CSV report has no rows"))?;
        Ok(ComplexityReport {
            meta: report_meta(family, rows.iter().map(|r| r.m)),
            family,
            rows,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))
    }

    pub fn all_tight(&self) -> bool {
        self.rows.iter().all(|r| r.tight)
    }
}

fn report_meta(family: Family, ms: impl Iterator<Item = usize>) -> ReportMeta {
    let mut sizes: Vec<usize> = match family {
        Family::Unary => vec![1],
        Family::SubsequenceGeneral => ms.map(|m| m - 1).collect(),
        _ => vec![2],
    };
    sizes.sort_unstable();
    sizes.dedup();
    ReportMeta {
        alphabet_sizes: sizes,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
    }
}

#[derive(Debug, Clone)]
pub struct GridOptions {
    /// Budget per cell; a cell still running past it is reported as failed
    /// (measured 0) while the rest of the grid proceeds.
    pub cell_timeout: Duration,
}

impl Default for GridOptions {
    fn default() -> Self {
        GridOptions {
            cell_timeout: Duration::from_secs(30),
        }
    }
}

pub fn run_grid(
    family: Family,
    m_range: RangeInclusive<usize>,
    n_range: RangeInclusive<usize>,
) -> Result<ComplexityReport> {
    run_grid_with(family, m_range, n_range, &GridOptions::default())
}

/// Runs every `(m, n)` cell of the grid, in parallel, and assembles the
/// rows in deterministic (m-major) order.
pub fn run_grid_with(
    family: Family,
    m_range: RangeInclusive<usize>,
    n_range: RangeInclusive<usize>,
    options: &GridOptions,
) -> Result<ComplexityReport> {
    let mut cells = Vec::new();
    for m in m_range.clone() {
        for n in n_range.clone() {
            family.validate(m, n)?;
            cells.push((m, n));
        }
    }
    if cells.is_empty() {
        return Err(Error::out_of_range("empty grid"));
    }

    let receivers: Vec<_> = cells
        .iter()
        .map(|&(m, n)| {
            let (tx, rx) = mpsc::channel();
            thread::spawn(move || {
                let started = Instant::now();
                let measured = measure_cell(family, m, n);
                let _ = tx.send((measured, started.elapsed()));
            });
            rx
        })
        .collect();

    let deadline = Instant::now() + options.cell_timeout;
    let mut rows = Vec::with_capacity(cells.len());
    for (&(m, n), rx) in cells.iter().zip(receivers) {
        let formula = bound_formula(family, m, n)?;
        let wait = deadline.saturating_duration_since(Instant::now());
        let row = match rx.recv_timeout(wait) {
            Ok((Ok(measured), elapsed)) => GridRow {
                m,
                n,
                measured,
                formula,
                tight: measured == formula,
                elapsed_ms: elapsed.as_millis() as u64,
            },
            // timed out or failed: record the cell as failed, keep going
            _ => GridRow {
                m,
                n,
                measured: 0,
                formula,
                tight: false,
                elapsed_ms: options.cell_timeout.as_millis() as u64,
            },
        };
        rows.push(row);
    }
    Ok(ComplexityReport {
        meta: report_meta(family, rows.iter().map(|r| r.m)),
        family,
        rows,
    })
}

/// A witness pair found (or not found) by the alphabet-minimality search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchPair {
    pub pattern: String,
    pub text: String,
}

/// Outcome of a search for subsequence-matching inputs that reach the
/// `(2^(m-2)+1)n` bound over an alphabet of only `m - 2` letters. The
/// expectation is `best_kappa_found < bound`: with fewer than `m - 1`
/// letters the bound is unreachable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub m: usize,
    pub n: usize,
    pub alphabet_size: usize,
    pub samples_tried: usize,
    pub best_kappa_found: usize,
    pub bound: usize,
    pub exhaustive: bool,
    pub counterexample: Option<SearchPair>,
}

impl SearchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))
    }
}

fn search_alphabet(m: usize) -> Result<Alphabet> {
    let size = m - 2;
    if size > 8 {
        return Err(Error::out_of_range(format!(
            "search alphabet of {size} letters is beyond desk scale"
        )));
    }
    Alphabet::from_chars(&"abcdefgh"[..size])
}

/// Draws `budget` random `(pattern, text)` pairs over an alphabet of
/// `m - 2` letters (binary when `m = 4`) and records the maximal measured
/// complexity of subsequence matching. When the full pair space is no
/// larger than the budget it is enumerated exhaustively instead. The
/// search is deterministic for a fixed seed.
pub fn search_alphabet_minimality(
    m: usize,
    n: usize,
    budget: usize,
    seed: u64,
) -> Result<SearchReport> {
    if m < 3 || n < 1 {
        return Err(Error::out_of_range(format!(
            "search requires m >= 3 and n >= 1 (got m = {m}, n = {n})"
        )));
    }
    let alphabet = search_alphabet(m)?;
    let k = alphabet.len();
    let bound = ((1usize << (m - 2)) + 1) * n;

    let space = dfa_space(m, k).saturating_mul(dfa_space(n, k));
    let mut state = SearchState::new(bound);
    if space <= budget as u128 {
        for p_index in 0..dfa_space(m, k) {
            let pattern = decode_dfa(p_index, m, &alphabet);
            for t_index in 0..dfa_space(n, k) {
                let text = decode_dfa(t_index, n, &alphabet);
                state.observe(&pattern, &text)?;
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..budget {
            let pattern = random_dfa(&mut rng, m, &alphabet);
            let text = random_dfa(&mut rng, n, &alphabet);
            state.observe(&pattern, &text)?;
        }
    }
    Ok(state.into_report(m, n, k, space <= budget as u128))
}

/// Exhaustive long mode: every pattern transformation table and non-empty
/// final set on `m` states over the binary alphabet, against the fixed
/// text witness whose `b` counts modulo `n`. Much slower than the budgeted
/// search; intended for offline verification at `m = 4`.
pub fn search_all_binary_patterns(m: usize, n: usize) -> Result<SearchReport> {
    if m != 4 {
        return Err(Error::out_of_range(
            "the exhaustive pattern search is defined for m = 4 (binary alphabet)",
        ));
    }
    if n < 1 {
        return Err(Error::out_of_range("search requires n >= 1"));
    }
    let alphabet = search_alphabet(m)?;
    let bound = ((1usize << (m - 2)) + 1) * n;
    let cycle: Vec<usize> = (0..n).map(|q| (q + 1) % n).collect();
    let identity: Vec<usize> = (0..n).collect();
    let text = Dfa::new(
        alphabet.clone(),
        0,
        [n - 1],
        (0..n).map(|q| vec![identity[q], cycle[q]]).collect(),
    )?;

    let mut state = SearchState::new(bound);
    for index in 0..dfa_space(m, alphabet.len()) {
        let pattern = decode_dfa(index, m, &alphabet);
        state.observe(&pattern, &text)?;
    }
    Ok(state.into_report(m, n, alphabet.len(), true))
}

struct SearchState {
    bound: usize,
    samples_tried: usize,
    best: usize,
    counterexample: Option<SearchPair>,
}

impl SearchState {
    fn new(bound: usize) -> Self {
        SearchState {
            bound,
            samples_tried: 0,
            best: 0,
            counterexample: None,
        }
    }

    fn observe(&mut self, pattern: &Dfa, text: &Dfa) -> Result<()> {
        let kappa = match_language(MatchMode::Subsequence, pattern, text)?.state_count();
        self.samples_tried += 1;
        if kappa > self.best {
            self.best = kappa;
            if kappa >= self.bound {
                self.counterexample = Some(SearchPair {
                    pattern: serialize_dfa(pattern),
                    text: serialize_dfa(text),
                });
            }
        }
        Ok(())
    }

    fn into_report(self, m: usize, n: usize, k: usize, exhaustive: bool) -> SearchReport {
        SearchReport {
            m,
            n,
            alphabet_size: k,
            samples_tried: self.samples_tried,
            best_kappa_found: self.best,
            bound: self.bound,
            exhaustive,
            counterexample: self.counterexample,
        }
    }
}

/// Number of DFAs on `states` states over `k` letters with initial state 0:
/// all transformation tables times all non-empty final sets.
fn dfa_space(states: usize, k: usize) -> u128 {
    let tables = (states as u128).saturating_pow((states * k) as u32);
    tables.saturating_mul((1u128 << states) - 1)
}

/// Decodes a mixed-radix index into a concrete DFA; inverse enumeration
/// order of [`dfa_space`].
fn decode_dfa(index: u128, states: usize, alphabet: &Alphabet) -> Dfa {
    let k = alphabet.len();
    let mut index = index;
    let finals_mask = (index % ((1u128 << states) - 1)) as usize + 1;
    index /= (1u128 << states) - 1;
    let mut rows = vec![vec![0usize; k]; states];
    for row in rows.iter_mut() {
        for entry in row.iter_mut() {
            *entry = (index % states as u128) as usize;
            index /= states as u128;
        }
    }
    let finals = (0..states).filter(|&q| finals_mask >> q & 1 == 1);
    Dfa::new(alphabet.clone(), 0, finals, rows).expect("decoded DFA is structurally valid")
}
