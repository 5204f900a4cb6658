//! Command-line front end: parse and emit the automata text formats,
//! expose every library operation, and drive the complexity experiments.
//!
//! Exit codes: 0 on success (and for true answers), 1 when a boolean query
//! answers false (`equiv`, `iso`, a negative `classify`), 2 on any input
//! or usage error.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use patlab::complexity::{
    run_grid_with, search_alphabet_minimality, ComplexityReport, GridOptions,
};
use patlab::format::{parse_dfa, serialize_dfa};
use patlab::{
    classify_word, ideal, match_language, match_single_word, shuffle, witness, word_dfa,
    Alphabet, Dfa, Family, IdealKind, MatchMode, PatternWord, Role, WitnessSpec,
};

#[derive(Parser)]
#[command(name = "patlab", version, about = "Pattern matching on regular languages via ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal DFA of an ideal generated by a pattern DFA
    Ideal {
        /// right | left | two_sided | all_sided
        #[arg(long)]
        kind: String,
        /// Pattern DFA file (`-` for stdin)
        file: String,
    },
    /// Minimal DFA of the shuffle of two languages
    Shuffle { file1: String, file2: String },
    /// Minimal DFA of the text words containing a pattern occurrence
    Match {
        /// prefix | suffix | factor | subsequence
        #[arg(long)]
        mode: String,
        #[command(flatten)]
        pattern: PatternArg,
        /// Text DFA file (`-` for stdin)
        #[arg(long)]
        text: String,
    },
    /// Does a concrete word contain a pattern occurrence?
    Classify {
        /// prefix | suffix | factor | subsequence
        #[arg(long)]
        mode: String,
        #[command(flatten)]
        pattern: PatternArg,
        /// The word to classify
        #[arg(long)]
        input: String,
    },
    /// Emit a witness DFA in the text format
    Witness {
        /// Family token, e.g. suffix_general or word_factor
        #[arg(long)]
        family: String,
        /// pattern | text
        #[arg(long)]
        role: String,
        /// Pattern complexity m
        #[arg(short)]
        m: usize,
        /// Text complexity n (required for --role text)
        #[arg(short)]
        n: Option<usize>,
    },
    /// Minimal DFA of the input's language
    Minimize { file: String },
    /// Do two DFAs accept the same language? (exit 0 yes, 1 no)
    Equiv { file1: String, file2: String },
    /// Are two minimal DFAs isomorphic? (exit 0 yes, 1 no)
    Iso { file1: String, file2: String },
    /// Measure an (m, n) grid of combined complexities for one family
    Complexity {
        #[arg(long)]
        family: String,
        /// Inclusive range, e.g. 2..5
        #[arg(long, value_name = "A..B")]
        m_range: String,
        /// Inclusive range, e.g. 2..4
        #[arg(long, value_name = "C..D")]
        n_range: String,
        /// csv (default) or json
        #[arg(long, default_value = "csv")]
        format: String,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<String>,
        /// Per-cell timeout in seconds
        #[arg(long, default_value_t = 30)]
        cell_timeout: u64,
    },
    /// Randomized search for subsequence bound violations over an
    /// undersized alphabet; prints a JSON report
    SearchAlphabet {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PatternArg {
    /// Pattern DFA file (`-` for stdin)
    #[arg(long)]
    pattern: Option<String>,
    /// Single-word pattern
    #[arg(long)]
    word: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Answer(true)) => {
            println!("true");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Answer(false)) => {
            println!("false");
            ExitCode::from(1)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

enum Outcome {
    Done,
    Answer(bool),
}

fn run(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Ideal { kind, file } => {
            let kind: IdealKind = kind.parse().err_string()?;
            let dfa = load_dfa(&file)?;
            print!("{}", serialize_dfa(&ideal(kind, &dfa)));
            Ok(Outcome::Done)
        }
        Command::Shuffle { file1, file2 } => {
            let (d1, d2) = load_two(&file1, &file2)?;
            print!("{}", serialize_dfa(&shuffle(&d1, &d2).err_string()?));
            Ok(Outcome::Done)
        }
        Command::Match { mode, pattern, text } => {
            let mode: MatchMode = mode.parse().err_string()?;
            let text = load_dfa(&text)?;
            let result = match pattern.resolve()? {
                PatternInput::Dfa(p) => match_language(mode, &p, &text).err_string()?,
                PatternInput::Word(w) => {
                    let word = PatternWord::new(text.alphabet().clone(), &w).err_string()?;
                    match_single_word(mode, &word, &text).err_string()?
                }
            };
            print!("{}", serialize_dfa(&result));
            Ok(Outcome::Done)
        }
        Command::Classify { mode, pattern, input } => {
            let mode: MatchMode = mode.parse().err_string()?;
            let pattern = match pattern.resolve()? {
                PatternInput::Dfa(p) => p,
                PatternInput::Word(w) => {
                    // no DFA fixes the alphabet here, so take the letters
                    // appearing in the pattern and the input together
                    let alphabet = alphabet_of_texts(&[&w, &input])?;
                    word_dfa(&PatternWord::new(alphabet, &w).err_string()?)
                }
            };
            let answer = classify_word(mode, &pattern, &input).err_string()?;
            Ok(Outcome::Answer(answer))
        }
        Command::Witness { family, role, m, n } => {
            let family: Family = family.parse().err_string()?;
            let role: Role = role.parse().err_string()?;
            let n = match (role, n) {
                (Role::Text, None) => return Err("--role text requires -n".to_string()),
                (_, n) => n.unwrap_or_else(|| family.min_n()),
            };
            let dfa = witness(&WitnessSpec { family, role, m, n }).err_string()?;
            print!("{}", serialize_dfa(&dfa));
            Ok(Outcome::Done)
        }
        Command::Minimize { file } => {
            let dfa = load_dfa(&file)?;
            print!("{}", serialize_dfa(&dfa.minimize()));
            Ok(Outcome::Done)
        }
        Command::Equiv { file1, file2 } => {
            let (d1, d2) = load_two(&file1, &file2)?;
            Ok(Outcome::Answer(d1.equivalent(&d2).err_string()?))
        }
        Command::Iso { file1, file2 } => {
            let (d1, d2) = load_two(&file1, &file2)?;
            Ok(Outcome::Answer(d1.isomorphic(&d2).err_string()?))
        }
        Command::Complexity {
            family,
            m_range,
            n_range,
            format,
            out,
            cell_timeout,
        } => {
            let family: Family = family.parse().err_string()?;
            let options = GridOptions {
                cell_timeout: std::time::Duration::from_secs(cell_timeout),
            };
            let report = run_grid_with(
                family,
                parse_range(&m_range)?,
                parse_range(&n_range)?,
                &options,
            )
            .err_string()?;
            let rendered = render_report(&report, &format)?;
            match out {
                Some(path) => {
                    fs::write(&path, rendered).map_err(|e| format!("cannot write {path}: {e}"))?
                }
                None => print!("{rendered}"),
            }
            Ok(Outcome::Done)
        }
        Command::SearchAlphabet { m, n, budget, seed } => {
            let report = search_alphabet_minimality(m, n, budget, seed).err_string()?;
            println!("{}", report.to_json());
            Ok(Outcome::Done)
        }
    }
}

enum PatternInput {
    Dfa(Dfa),
    Word(String),
}

impl PatternArg {
    fn resolve(self) -> Result<PatternInput, String> {
        match (self.pattern, self.word) {
            (Some(file), None) => Ok(PatternInput::Dfa(load_dfa(&file)?)),
            (None, Some(word)) => Ok(PatternInput::Word(word)),
            _ => Err("exactly one of --pattern and --word is required".to_string()),
        }
    }
}

fn load_dfa(path: &str) -> Result<Dfa, String> {
    let text = if path == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        buffer
    } else {
        fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?
    };
    parse_dfa(&text).map_err(|e| format!("{path}: {e}"))
}

fn load_two(file1: &str, file2: &str) -> Result<(Dfa, Dfa), String> {
    if file1 == "-" && file2 == "-" {
        return Err("only one input may come from stdin".to_string());
    }
    Ok((load_dfa(file1)?, load_dfa(file2)?))
}

fn alphabet_of_texts(texts: &[&str]) -> Result<Alphabet, String> {
    let mut letters: Vec<String> = Vec::new();
    for text in texts {
        for c in text.chars() {
            let s = c.to_string();
            if !letters.contains(&s) {
                letters.push(s);
            }
        }
    }
    Alphabet::new(letters).err_string()
}

fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<usize>, String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("invalid range `{text}`, expected A..B"))?;
    let lo: usize = lo
        .trim()
        .parse()
        .map_err(|_| format!("invalid range bound `{lo}`"))?;
    let hi: usize = hi
        .trim()
        .parse()
        .map_err(|_| format!("invalid range bound `{hi}`"))?;
    if lo > hi {
        return Err(format!("empty range `{text}`"));
    }
    Ok(lo..=hi)
}

fn render_report(report: &ComplexityReport, format: &str) -> Result<String, String> {
    match format {
        "csv" => Ok(report.to_csv()),
        "json" => Ok(report.to_json()),
        other => Err(format!("unknown report format `{other}` (use csv or json)")),
    }
}

trait ErrString<T> {
    fn err_string(self) -> Result<T, String>;
}

impl<T, E: std::fmt::Display> ErrString<T> for Result<T, E> {
    fn err_string(self) -> Result<T, String> {
        self.map_err(|e| e.to_string())
    }
}
