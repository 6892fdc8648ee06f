//! Equation files: one `u = v` per line, lowercase letters `a..z` standing
//! for the symbols `1..26`, `eps` for the empty word. Blank lines and lines
//! starting with `#` are ignored.

use freewords::rewrite::EquationSystem;
use freewords::{Symbol, Word};

use crate::CliError;

pub const LETTERS: usize = 26;

pub fn parse_letters(text: &str) -> Result<Word, CliError> {
    let text = text.trim();
    if text == "eps" {
        return Ok(Word::empty());
    }
    text.chars()
        .map(|c| match c {
            'a'..='z' => Ok(Symbol::letter(c as u32 - 'a' as u32 + 1)),
            _ => Err(CliError::BadInput(format!("bad letter '{c}' in '{text}': expected a-z or eps"))),
        })
        .collect()
}

pub fn show_letters(w: &[Symbol]) -> String {
    if w.is_empty() {
        return String::from("eps");
    }
    w.iter().map(|s| char::from(b'a' + (s.letter_index() - 1) as u8)).collect()
}

pub fn parse_equations(text: &str) -> Result<EquationSystem, CliError> {
    let mut eqs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let err = |message: String| CliError::Parse { line: i + 1, message };
        let (u, v) = content.split_once('=').ok_or_else(|| err(String::from("expected 'u = v'")))?;
        let u = parse_letters(u).map_err(|e| err(e.to_string()))?;
        let v = parse_letters(v).map_err(|e| err(e.to_string()))?;
        if u.is_empty() && v.is_empty() {
            return Err(err(String::from("both sides are empty")));
        }
        eqs.push((u, v));
    }
    Ok(EquationSystem::new(LETTERS, eqs)?)
}
