//! Line-oriented text format for automata.
//!
//! ```text
//! dfa
//! alphabet: a b
//! states: 4
//! initial: 0
//! finals: 2 3
//! 0 : 1 3
//! 1 : 2 0
//! 2 : 2 2
//! 3 : 3 3
//! ```
//!
//! NFAs use the header `nfa` and brace-delimited successor sets such as
//! `{0,2}` or `{}`. `#` starts a comment anywhere on a line; blank lines are
//! ignored. Serialization always emits the canonical single-space form, so
//! `parse(serialize(x)) == x` and serializing a parse normalizes comments
//! and whitespace away.

use crate::automata::{Alphabet, Dfa, Nfa};
use crate::error::{Error, Result};

pub fn serialize_dfa(dfa: &Dfa) -> String {
    let mut out = String::from("dfa\n");
    header(&mut out, dfa.alphabet(), dfa.state_count(), dfa.initial(), &dfa.final_states());
    for q in 0..dfa.state_count() {
        let row: Vec<String> = (0..dfa.alphabet().len())
            .map(|a| dfa.next(q, a).to_string())
            .collect();
        out.push_str(&format!("{q} : {}\n", row.join(" ")));
    }
    out
}

pub fn serialize_nfa(nfa: &Nfa) -> String {
    let mut out = String::from("nfa\n");
    header(&mut out, nfa.alphabet(), nfa.state_count(), nfa.initial(), &nfa.final_states());
    for q in 0..nfa.state_count() {
        let row: Vec<String> = (0..nfa.alphabet().len())
            .map(|a| {
                let targets: Vec<String> =
                    nfa.successors(q, a).iter().map(usize::to_string).collect();
                format!("{{{}}}", targets.join(","))
            })
            .collect();
        out.push_str(&format!("{q} : {}\n", row.join(" ")));
    }
    out
}

fn header(out: &mut String, alphabet: &Alphabet, states: usize, initial: usize, finals: &[usize]) {
    out.push_str(&format!("alphabet: {}\n", alphabet.symbols().join(" ")));
    out.push_str(&format!("states: {states}\n"));
    out.push_str(&format!("initial: {initial}\n"));
    let finals: Vec<String> = finals.iter().map(usize::to_string).collect();
    if finals.is_empty() {
        out.push_str("finals:\n");
    } else {
        out.push_str(&format!("finals: {}\n", finals.join(" ")));
    }
}

pub fn parse_dfa(text: &str) -> Result<Dfa> {
    let mut lines = Lines::new(text);
    lines.expect_header("dfa")?;
    let (alphabet, states, initial, finals) = parse_common(&mut lines)?;
    let mut rows = vec![Vec::new(); states];
    let mut seen = vec![false; states];
    for _ in 0..states {
        let (lineno, state, fields) = lines.transition_row(states, &mut seen)?;
        let mut row = Vec::with_capacity(alphabet.len());
        for field in &fields {
            let target = parse_state(field, states, lineno)?;
            row.push(target);
        }
        if row.len() != alphabet.len() {
            return Err(Error::parse(
                lineno,
                format!("expected {} transitions, found {}", alphabet.len(), row.len()),
            ));
        }
        rows[state] = row;
    }
    lines.expect_end()?;
    check_finals(&finals, states, lines.finals_line)?;
    Dfa::new(alphabet, initial, finals, rows)
}

pub fn parse_nfa(text: &str) -> Result<Nfa> {
    let mut lines = Lines::new(text);
    lines.expect_header("nfa")?;
    let (alphabet, states, initial, finals) = parse_common(&mut lines)?;
    let mut rows = vec![Vec::new(); states];
    let mut seen = vec![false; states];
    for _ in 0..states {
        let (lineno, state, fields) = lines.transition_row(states, &mut seen)?;
        let mut row = Vec::with_capacity(alphabet.len());
        for field in &fields {
            let inner = field
                .strip_prefix('{')
                .and_then(|f| f.strip_suffix('}'))
                .ok_or_else(|| {
                    Error::parse(lineno, format!("expected a set like {{0,1}}, found `{field}`"))
                })?;
            let mut set = Vec::new();
            if !inner.is_empty() {
                for part in inner.split(',') {
                    set.push(parse_state(part.trim(), states, lineno)?);
                }
            }
            row.push(set);
        }
        if row.len() != alphabet.len() {
            return Err(Error::parse(
                lineno,
                format!("expected {} transition sets, found {}", alphabet.len(), row.len()),
            ));
        }
        rows[state] = row;
    }
    lines.expect_end()?;
    check_finals(&finals, states, lines.finals_line)?;
    Nfa::new(alphabet, initial, finals, rows)
}

fn parse_common(lines: &mut Lines) -> Result<(Alphabet, usize, usize, Vec<usize>)> {
    let (lineno, value) = lines.keyed_line("alphabet")?;
    let alphabet = Alphabet::new(value.split_whitespace().map(str::to_string))
        .map_err(|e| Error::parse(lineno, e.to_string()))?;
    let (lineno, value) = lines.keyed_line("states")?;
    let states: usize = value
        .trim()
        .parse()
        .map_err(|_| Error::parse(lineno, format!("invalid state count `{}`", value.trim())))?;
    if states == 0 {
        return Err(Error::parse(lineno, "state count must be positive"));
    }
    let (lineno, value) = lines.keyed_line("initial")?;
    let initial = parse_state(value.trim(), states, lineno)?;
    let (lineno, value) = lines.keyed_line("finals")?;
    lines.finals_line = lineno;
    let finals = value
        .split_whitespace()
        .map(|f| parse_state(f, states, lineno))
        .collect::<Result<Vec<usize>>>()?;
    Ok((alphabet, states, initial, finals))
}

fn parse_state(field: &str, states: usize, lineno: usize) -> Result<usize> {
    let value: usize = field
        .parse()
        .map_err(|_| Error::parse(lineno, format!("invalid state index `{field}`")))?;
    if value >= states {
        return Err(Error::parse(lineno, format!("state {value} out of range")));
    }
    Ok(value)
}

fn check_finals(finals: &[usize], states: usize, lineno: usize) -> Result<()> {
    for &f in finals {
        if f >= states {
            return Err(Error::parse(lineno, format!("state {f} out of range")));
        }
    }
    Ok(())
}

struct Lines<'a> {
    // (line number, content with comments stripped)
    items: std::vec::IntoIter<(usize, &'a str)>,
    last_line: usize,
    finals_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .filter_map(|(i, raw)| {
                let content = raw.split('#').next().unwrap_or("").trim();
                (!content.is_empty()).then_some((i + 1, content))
            })
            .collect();
        let last_line = items.last().map_or(1, |&(n, _)| n);
        Lines {
            items: items.into_iter(),
            last_line,
            finals_line: 1,
        }
    }

    fn next_line(&mut self) -> Result<(usize, &'a str)> {
        self.items
            .next()
            .ok_or_else(|| Error::parse(self.last_line, "unexpected end of input"))
    }

    fn expect_header(&mut self, kind: &str) -> Result<()> {
        let (lineno, line) = self.next_line()?;
        if line != kind {
            return Err(Error::parse(
                lineno,
                format!("expected header `{kind}`, found `{line}`"),
            ));
        }
        Ok(())
    }

    fn keyed_line(&mut self, key: &str) -> Result<(usize, &'a str)> {
        let (lineno, line) = self.next_line()?;
        match line.strip_prefix(key).and_then(|rest| {
            let rest = rest.trim_start();
            rest.strip_prefix(':')
        }) {
            Some(value) => Ok((lineno, value)),
            None => Err(Error::parse(
                lineno,
                format!("expected `{key}: ...`, found `{line}`"),
            )),
        }
    }

    fn transition_row(
        &mut self,
        states: usize,
        seen: &mut [bool],
    ) -> Result<(usize, usize, Vec<&'a str>)> {
        let (lineno, line) = self.next_line()?;
        let mut parts = line.splitn(2, ':');
        let state_part = parts.next().unwrap_or("").trim();
        let rest = parts
            .next()
            .ok_or_else(|| Error::parse(lineno, format!("expected `<state> : ...`, found `{line}`")))?;
        let state = parse_state(state_part, states, lineno)?;
        if seen[state] {
            return Err(Error::parse(lineno, format!("duplicate row for state {state}")));
        }
        seen[state] = true;
        Ok((lineno, state, rest.split_whitespace().collect()))
    }

    fn expect_end(&mut self) -> Result<()> {
        if let Some((lineno, line)) = self.items.next() {
            return Err(Error::parse(lineno, format!("unexpected trailing line `{line}`")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dfa_round_trip_is_exact() {
        let text = "dfa\nalphabet: a b\nstates: 2\ninitial: 0\nfinals: 1\n0 : 1 0\n1 : 1 1\n";
        let dfa = parse_dfa(text).unwrap();
        assert_eq!(serialize_dfa(&dfa), text);
    }

    #[test]
    fn comments_and_spacing_normalize() {
        let text = "# machine\ndfa\n\nalphabet:  a   b\nstates: 2 # two\ninitial: 0\nfinals:\n1 :  0   1\n0 : 1 0\n";
        let dfa = parse_dfa(text).unwrap();
        assert_eq!(dfa.final_states(), Vec::<usize>::new());
        assert_eq!(
            serialize_dfa(&dfa),
            "dfa\nalphabet: a b\nstates: 2\ninitial: 0\nfinals:\n0 : 1 0\n1 : 0 1\n"
        );
    }

    #[test]
    fn out_of_range_states_are_reported() {
        let text = "dfa\nalphabet: a\nstates: 4\ninitial: 9\nfinals:\n";
        match parse_dfa(text) {
            Err(Error::Parse { line: 4, message }) => {
                assert_eq!(message, "state 9 out of range");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn nfa_round_trip() {
        let text = "nfa\nalphabet: a b\nstates: 2\ninitial: 0\nfinals: 1\n0 : {0,1} {}\n1 : {} {1}\n";
        let nfa = parse_nfa(text).unwrap();
        assert_eq!(serialize_nfa(&nfa), text);
        assert!(parse_nfa("nfa\nalphabet: a\nstates: 1\ninitial: 0\nfinals:\n0 : 0\n").is_err());
    }
}
