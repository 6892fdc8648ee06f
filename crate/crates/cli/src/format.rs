//! Plain-text automaton format, one item per line:
//!
//! ```text
//! alphabet 2
//! states 3
//! initial 0
//! accepting 2
//! trans 0 1 1
//! trans 1 -1 2
//! trans 0 e 2
//! label 0 q0
//! ```
//!
//! `e` marks an ε-transition. `label` lines are optional. Blank lines and
//! lines starting with `#` are ignored.

use std::fmt::Write;

use freewords::{InverseAlphabet, Label, Nfa, Symbol};

use crate::CliError;

fn parse_err(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse { line, message: message.into() }
}

fn number<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T, CliError> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| parse_err(line, format!("bad {what} '{tok}'")))
}

pub fn parse_automaton(text: &str) -> Result<Nfa, CliError> {
    let mut k: Option<usize> = None;
    let mut n: Option<usize> = None;
    let mut initial = 0usize;
    let mut accepting = Vec::new();
    let mut trans = Vec::new();
    let mut labels = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut toks = content.split_whitespace();
        let key = toks.next().unwrap();
        match key {
            "alphabet" => k = Some(number(toks.next(), line, "alphabet size")?),
            "states" => n = Some(number(toks.next(), line, "state count")?),
            "initial" => initial = number(toks.next(), line, "initial state")?,
            "accepting" => {
                for tok in toks.by_ref() {
                    accepting.push((line, number::<usize>(Some(tok), line, "accepting state")?));
                }
            }
            "trans" => {
                let p: usize = number(toks.next(), line, "source state")?;
                let sym = toks.next().ok_or_else(|| parse_err(line, "missing symbol"))?;
                let label = if sym == "e" {
                    Label::Epsilon
                } else {
                    let v: i32 = number(Some(sym), line, "symbol")?;
                    Label::Symbol(Symbol::new(v).ok_or_else(|| parse_err(line, "symbol 0 is not allowed; use e for ε"))?)
                };
                let q: usize = number(toks.next(), line, "target state")?;
                trans.push((line, p, label, q));
            }
            "label" => {
                let q: usize = number(toks.next(), line, "state")?;
                let name = toks.next().ok_or_else(|| parse_err(line, "missing label"))?;
                labels.push((line, q, name.to_string()));
            }
            other => return Err(parse_err(line, format!("unknown keyword '{other}'"))),
        }
        if toks.next().is_some() && key != "accepting" {
            return Err(parse_err(line, "trailing tokens"));
        }
    }
    let k = k.ok_or_else(|| parse_err(0, "missing 'alphabet' line"))?;
    let n = n.ok_or_else(|| parse_err(0, "missing 'states' line"))?;
    let alphabet = InverseAlphabet::new(k)?;
    let mut m = Nfa::new(alphabet, n, initial)?;
    for (line, q) in accepting {
        m.set_accepting(q, true).map_err(|e| parse_err(line, e.to_string()))?;
    }
    for (line, p, label, q) in trans {
        m.add_transition(p, label, q).map_err(|e| parse_err(line, e.to_string()))?;
    }
    if !labels.is_empty() {
        let mut names: Vec<String> = (0..n).map(|q| q.to_string()).collect();
        for (line, q, name) in labels {
            if q >= n {
                return Err(parse_err(line, format!("state {q} out of range")));
            }
            names[q] = name;
        }
        m.set_state_labels(names);
    }
    Ok(m)
}

pub fn write_automaton(m: &Nfa) -> String {
    let mut out = String::new();
    writeln!(out, "alphabet {}", m.alphabet().k()).unwrap();
    writeln!(out, "states {}", m.state_count()).unwrap();
    writeln!(out, "initial {}", m.initial()).unwrap();
    let acc: Vec<String> = m.accepting_states().map(|q| q.to_string()).collect();
    if acc.is_empty() {
        writeln!(out, "accepting").unwrap();
    } else {
        writeln!(out, "accepting {}", acc.join(" ")).unwrap();
    }
    for (p, l, q) in m.transitions() {
        match l {
            Label::Epsilon => writeln!(out, "trans {p} e {q}").unwrap(),
            Label::Symbol(s) => writeln!(out, "trans {p} {s} {q}").unwrap(),
        }
    }
    for q in 0..m.state_count() {
        if let Some(name) = m.state_label(q) {
            writeln!(out, "label {q} {name}").unwrap();
        }
    }
    out
}

/// Parses a word of signed integers separated by spaces or commas; `eps`
/// or an empty string is the empty word.
pub fn parse_word(text: &str) -> Result<freewords::Word, CliError> {
    let text = text.trim();
    if text.is_empty() || text == "eps" {
        return Ok(freewords::Word::empty());
    }
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i32>()
                .ok()
                .and_then(Symbol::new)
                .ok_or_else(|| CliError::BadInput(format!("bad symbol '{t}': expected a nonzero integer")))
        })
        .collect()
}

pub fn show_word(w: &[Symbol]) -> String {
    if w.is_empty() {
        String::from("eps")
    } else {
        w.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
    }
}
