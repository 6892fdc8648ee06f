//! Graphviz export. Accepting states are drawn as double circles; the dead
//! state of a complete DFA is left out.

use std::collections::BTreeMap;
use std::fmt::Write;

use freewords::{Dfa, Label, Nfa};

pub fn nfa_to_dot(m: &Nfa, omit: Option<usize>) -> String {
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n  __start [shape=point];\n");
    let name = |q: usize| m.state_label(q).map_or_else(|| format!("{q}"), String::from);
    for q in (0..m.state_count()).filter(|&q| Some(q) != omit) {
        let shape = if m.is_accepting(q) { "doublecircle" } else { "circle" };
        writeln!(out, "  s{q} [label=\"{}\", shape={shape}];", name(q)).unwrap();
    }
    writeln!(out, "  __start -> s{};", m.initial()).unwrap();
    // parallel edges are merged into one arrow with a comma-separated label
    let mut edges: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
    for (p, l, q) in m.transitions() {
        if Some(p) == omit || Some(q) == omit {
            continue;
        }
        let text = match l {
            Label::Epsilon => String::from("ε"),
            Label::Symbol(s) if s.is_positive() => s.to_string(),
            Label::Symbol(s) => format!("{}⁻¹", s.letter_index()),
        };
        edges.entry((p, q)).or_default().push(text);
    }
    for ((p, q), labels) in edges {
        writeln!(out, "  s{p} -> s{q} [label=\"{}\"];", labels.join(", ")).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn dfa_to_dot(d: &Dfa) -> String {
    nfa_to_dot(&d.to_nfa(), d.dead())
}
