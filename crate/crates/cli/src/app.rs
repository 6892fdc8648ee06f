//! Subcommand dispatch. `run` never prints; it returns the exit status and
//! the text destined for stdout and stderr.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use freewords::algebra::{eq_nonregular_demo, quotient, EqLanguage, PlainLanguageAutomaton};
use freewords::closure::{reduced_language_dfa, saturate_closure};
use freewords::families::{FamilyId, FamilyKind};
use freewords::rewrite::{rg, rg_counterexample_check};
use freewords::shortest::{shortest_reducible_word, Witness, DEFAULT_WITNESS_CAP};
use freewords::word::reduce;
use freewords::{Dfa, Label, Nfa, Symbol};
use serde_json::{json, Value};

use crate::dot::{dfa_to_dot, nfa_to_dot};
use crate::equations::{parse_equations, parse_letters, show_letters};
use crate::format::{parse_automaton, parse_word, show_word, write_automaton};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "freewords", version, about = "Automata over inverse alphabets")]
struct Cli {
    /// Print structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

fn family_kind(s: &str) -> Result<FamilyKind, String> {
    s.parse().map_err(|_| format!("unknown family '{s}', expected lss1, lss2 or unary"))
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Free reduction of a word of signed integers, e.g. "1 -1 2".
    Reduce {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Saturate an automaton with ε-edges between states joined by a reducible word.
    Closure {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Automaton for the reduced words of the language.
    Rlang {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Right quotient L1/L2 of two automata over positive letters.
    Quotient {
        l1: PathBuf,
        l2: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Length of the shortest accepted word that reduces to the empty word.
    Shortest {
        file: PathBuf,
        #[arg(long)]
        witness: bool,
        /// Longest witness that is written out.
        #[arg(long, default_value_t = DEFAULT_WITNESS_CAP)]
        cap: usize,
    },
    /// Build a member of a lower-bound family.
    Family {
        #[arg(value_parser = family_kind)]
        kind: FamilyKind,
        n: usize,
        #[arg(long, conflicts_with_all = ["shortest", "witness"])]
        dot: bool,
        #[arg(long, conflicts_with = "witness")]
        shortest: bool,
        #[arg(long)]
        witness: bool,
        #[arg(long, default_value_t = DEFAULT_WITNESS_CAP)]
        cap: usize,
    },
    /// Decide whether a word reduces to the reduction of some accepted word.
    EqMember {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Census of eq({ε}) over one letter.
    EqDemo {
        #[arg(long, default_value_t = 10)]
        max_len: usize,
    },
    /// Shortest words equivalent to a word under a set of equations.
    Rg {
        #[arg(long)]
        equations: PathBuf,
        #[arg(long)]
        cap: usize,
        word: String,
    },
    /// r_g((abc)*) under commutation against the equal-count words.
    RgDemo {
        #[arg(long, default_value_t = 9)]
        max_len: usize,
    },
    /// DOT rendering of an automaton file.
    Dot { file: PathBuf },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { status: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { status: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok(mut stdout) => {
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome { status: 0, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { status: e.status(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn load(path: &Path) -> Result<Nfa, CliError> {
    parse_automaton(&read(path)?)
}

fn values(w: &[Symbol]) -> Value {
    json!(w.iter().map(|s| s.value()).collect::<Vec<_>>())
}

/// Transitions as `[p, symbol, q]`, the symbol being `null` for ε.
pub fn automaton_json(m: &Nfa) -> Value {
    let trans: Vec<Value> = m
        .transitions()
        .map(|(p, l, q)| match l {
            Label::Epsilon => json!([p, null, q]),
            Label::Symbol(s) => json!([p, s.value(), q]),
        })
        .collect();
    let labels: Option<Vec<&str>> = (0..m.state_count()).map(|q| m.state_label(q)).collect();
    json!({
        "alphabet": m.alphabet().k(),
        "states": m.state_count(),
        "initial": m.initial(),
        "accepting": m.accepting_states().collect::<Vec<_>>(),
        "transitions": trans,
        "labels": labels,
    })
}

enum Shape<'a> {
    Nfa(&'a Nfa),
    Dfa(&'a Dfa),
}

impl Shape<'_> {
    fn nfa(&self) -> Nfa {
        match self {
            Shape::Nfa(m) => (*m).clone(),
            Shape::Dfa(d) => d.to_nfa(),
        }
    }

    fn dot(&self) -> String {
        match self {
            Shape::Nfa(m) => nfa_to_dot(m, None),
            Shape::Dfa(d) => dfa_to_dot(d),
        }
    }
}

/// The automaton as text or DOT, and the matching JSON field.
fn automaton_output(shape: Shape<'_>, dot: bool) -> (String, Value) {
    if dot {
        let d = shape.dot();
        (d.clone(), json!({ "dot": d }))
    } else {
        let m = shape.nfa();
        (write_automaton(&m), json!({ "automaton": automaton_json(&m) }))
    }
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Some(b), Value::Object(e)) = (base.as_object_mut(), extra) {
        b.extend(e);
    }
    base
}

fn finish(json: bool, text: String, value: Value) -> String {
    if json {
        serde_json::to_string_pretty(&value).unwrap()
    } else {
        text
    }
}

fn execute(cli: &Cli) -> Result<String, CliError> {
    let json = cli.json;
    match &cli.command {
        Command::Reduce { word } => {
            let w = parse_word(word)?;
            let r = reduce(&w);
            Ok(finish(json, show_word(&r), json!({ "input": values(&w), "reduced": values(&r) })))
        }
        Command::Closure { file, dot } => {
            let m = load(file)?;
            let res = saturate_closure(&m);
            let mut text = format!("added edges: {}\n", res.added_edges.len());
            for (p, q) in &res.added_edges {
                text.push_str(&format!("{p} {q}\n"));
            }
            let (body, v) = automaton_output(Shape::Nfa(&res.saturated), *dot);
            text.push_str(&body);
            let pairs = |s: &std::collections::BTreeSet<(usize, usize)>| json!(s.iter().map(|&(p, q)| [p, q]).collect::<Vec<_>>());
            let value = merge(json!({ "added_edges": pairs(&res.added_edges), "edges": pairs(&res.edges) }), v);
            Ok(finish(json, text, value))
        }
        Command::Rlang { file, dot } => {
            let m = load(file)?;
            let d = reduced_language_dfa(&m);
            let (text, v) = automaton_output(Shape::Dfa(&d), *dot);
            Ok(finish(json, text, merge(json!({ "dfa_states": d.state_count() }), v)))
        }
        Command::Quotient { l1, l2, dot } => {
            let a = PlainLanguageAutomaton::new(load(l1)?)?;
            let b = PlainLanguageAutomaton::new(load(l2)?)?;
            let q = quotient(&a, &b)?;
            let (text, v) = automaton_output(Shape::Nfa(&q), *dot);
            Ok(finish(json, text, v))
        }
        Command::Shortest { file, witness, cap } => {
            let m = load(file)?;
            Ok(shortest_output(&m, *witness, *cap, json))
        }
        Command::Family { kind, n, dot, shortest, witness, cap } => {
            let d = FamilyId::new(*kind, *n)?.build();
            let header = json!({ "family": kind.name(), "n": n, "states": d.state_count() });
            if *shortest || *witness {
                let out = shortest_output(&d.to_nfa(), *witness, *cap, json);
                if json {
                    let v: Value = serde_json::from_str(&out).unwrap();
                    return Ok(finish(true, String::new(), merge(header, v)));
                }
                return Ok(out);
            }
            let (text, v) = automaton_output(Shape::Dfa(&d), *dot);
            Ok(finish(json, text, merge(header, v)))
        }
        Command::EqMember { file, word } => {
            let m = load(file)?;
            let w = parse_word(word)?;
            let member = EqLanguage::new(&m).contains(&w)?;
            Ok(finish(
                json,
                member.to_string(),
                json!({ "word": values(&w), "reduced": values(&reduce(&w)), "member": member }),
            ))
        }
        Command::EqDemo { max_len } => {
            let r = eq_nonregular_demo(*max_len);
            Ok(finish(
                json,
                r.to_string(),
                json!({
                    "max_len": r.max_len,
                    "members_per_length": r.members_per_length,
                    "matches_reducible": r.matches_reducible,
                    "one_sided_balanced": r.one_sided_balanced,
                    "two_sided_only": r.two_sided_only,
                    "separated_prefixes": r.separated_prefixes,
                }),
            ))
        }
        Command::Rg { equations, cap, word } => {
            let sys = parse_equations(&read(equations)?)?;
            let w = parse_letters(word)?;
            let res = rg(&w, &sys, *cap)?;
            let reps: Vec<String> = res.representatives.iter().map(|x| show_letters(x)).collect();
            let mut text = reps.join("\n");
            text.push_str(&format!("\nexhaustive: {}", res.exhaustive));
            Ok(finish(json, text, json!({ "representatives": reps, "exhaustive": res.exhaustive })))
        }
        Command::RgDemo { max_len } => {
            let c = rg_counterexample_check(*max_len);
            let rows: Vec<Value> = c
                .per_length
                .iter()
                .map(|&(len, g, census)| json!({ "length": len, "rg": g, "equal_count": census }))
                .collect();
            Ok(finish(json, c.to_string(), json!({ "max_len": c.max_len, "per_length": rows, "matches": c.matches })))
        }
        Command::Dot { file } => {
            let m = load(file)?;
            let d = nfa_to_dot(&m, None);
            Ok(finish(json, d.clone(), json!({ "dot": d })))
        }
    }
}

fn shortest_output(m: &Nfa, witness: bool, cap: usize, json: bool) -> String {
    let cap = if witness { cap } else { 0 };
    match shortest_reducible_word(m, cap) {
        None => finish(json, String::from("none"), json!({ "length": null, "witness": null })),
        Some(res) => {
            let mut text = res.length.to_string();
            let wit = match &res.witness {
                Witness::Word(x) if witness => {
                    text.push('\n');
                    text.push_str(&show_word(x));
                    values(x)
                }
                Witness::TooLong if witness => {
                    text.push_str(&format!("\nwitness longer than {cap}"));
                    Value::Null
                }
                _ => Value::Null,
            };
            finish(
                json,
                text,
                json!({
                    "length": res.length.to_string(),
                    "accepting_state": res.accepting_state,
                    "witness": wit,
                }),
            )
        }
    }
}
