//! Browser demo bindings. Three interactive operations, each returning
//! JSON for the static page in `www/` to render:
//!
//! * witness exploration: generate a witness DFA and its transition graph,
//! * tightness grids: measured versus predicted complexity over (m, n),
//! * word classification: which match modes a concrete text satisfies.

use serde_json::json;
use wasm_bindgen::prelude::*;

use patlab::complexity::{bound_formula, measure_cell, run_grid};
use patlab::format::serialize_dfa;
use patlab::{
    classify_word, witness, word_dfa, Alphabet, Dfa, Family, MatchMode, PatternWord, Role,
    WitnessSpec,
};

fn dfa_json(dfa: &Dfa) -> serde_json::Value {
    let k = dfa.alphabet().len();
    // merge parallel edges into one label per (from, to) pair
    let mut edges: Vec<(usize, usize, Vec<String>)> = Vec::new();
    for q in 0..dfa.state_count() {
        for a in 0..k {
            let t = dfa.next(q, a);
            let label = dfa.alphabet().symbol(a).to_string();
            match edges.iter_mut().find(|(f, to, _)| *f == q && *to == t) {
                Some((_, _, labels)) => labels.push(label),
                None => edges.push((q, t, vec![label])),
            }
        }
    }
    json!({
        "alphabet": dfa.alphabet().symbols(),
        "states": dfa.state_count(),
        "initial": dfa.initial(),
        "finals": dfa.final_states(),
        "edges": edges
            .into_iter()
            .map(|(from, to, labels)| json!({
                "from": from,
                "to": to,
                "label": labels.join(","),
            }))
            .collect::<Vec<_>>(),
        "text": serialize_dfa(dfa),
    })
}

/// Witness DFA for a family/role at (m, n), as a renderable graph.
#[wasm_bindgen]
pub fn witness_graph(family: &str, role: &str, m: usize, n: usize) -> Result<String, String> {
    let family: Family = family.parse().map_err(|e: patlab::Error| e.to_string())?;
    let role: Role = role.parse().map_err(|e: patlab::Error| e.to_string())?;
    let dfa = witness(&WitnessSpec { family, role, m, n }).map_err(|e| e.to_string())?;
    Ok(dfa_json(&dfa).to_string())
}

/// One measured cell: the combined-operation DFA size on the family's
/// witnesses, next to the closed-form value.
#[wasm_bindgen]
pub fn measure_point(family: &str, m: usize, n: usize) -> Result<String, String> {
    let family: Family = family.parse().map_err(|e: patlab::Error| e.to_string())?;
    let measured = measure_cell(family, m, n).map_err(|e| e.to_string())?;
    let formula = bound_formula(family, m, n).map_err(|e| e.to_string())?;
    Ok(json!({
        "family": family.token(),
        "m": m,
        "n": n,
        "measured": measured,
        "formula": formula,
        "tight": measured == formula,
    })
    .to_string())
}

/// A full tightness grid as a JSON complexity report.
#[wasm_bindgen]
pub fn tightness_grid(
    family: &str,
    m_lo: usize,
    m_hi: usize,
    n_lo: usize,
    n_hi: usize,
) -> Result<String, String> {
    let family: Family = family.parse().map_err(|e: patlab::Error| e.to_string())?;
    if m_lo > m_hi || n_lo > n_hi {
        return Err("empty range".to_string());
    }
    let report = run_grid(family, m_lo..=m_hi, n_lo..=n_hi).map_err(|e| e.to_string())?;
    Ok(report.to_json())
}

/// Classifies a text against a single-word pattern under all four match
/// modes, and reports the sizes of the dedicated matching automata.
#[wasm_bindgen]
pub fn classify_text(pattern: &str, text: &str) -> Result<String, String> {
    if pattern.is_empty() {
        return Err("pattern word must be non-empty".to_string());
    }
    let mut letters: Vec<String> = Vec::new();
    for c in pattern.chars().chain(text.chars()) {
        let s = c.to_string();
        if !letters.contains(&s) {
            letters.push(s);
        }
    }
    let alphabet = Alphabet::new(letters).map_err(|e| e.to_string())?;
    let word = PatternWord::new(alphabet, pattern).map_err(|e| e.to_string())?;
    let pattern_dfa = word_dfa(&word);
    let modes = MatchMode::ALL
        .into_iter()
        .map(|mode| {
            let hit = classify_word(mode, &pattern_dfa, text).map_err(|e| e.to_string())?;
            let automaton = patlab::single_word_automaton(mode, &word);
            Ok(json!({
                "mode": mode.token(),
                "matches": hit,
                "automaton_states": automaton.state_count(),
            }))
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(json!({
        "pattern": pattern,
        "text": text,
        "pattern_complexity": word.state_complexity(),
        "modes": modes,
    })
    .to_string())
}
