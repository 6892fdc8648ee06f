//! ε-NFAs over an inverse alphabet.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::word::{InverseAlphabet, Symbol, Word};

/// Transition label: a symbol or ε.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Epsilon,
    Symbol(Symbol),
}

impl Label {
    pub fn symbol(self) -> Option<Symbol> {
        match self {
            Label::Epsilon => None,
            Label::Symbol(s) => Some(s),
        }
    }
}

impl From<Symbol> for Label {
    fn from(s: Symbol) -> Label {
        Label::Symbol(s)
    }
}

/// A nondeterministic automaton with ε-transitions. States are `0..state_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: InverseAlphabet,
    initial: usize,
    accepting: Vec<bool>,
    // sorted and deduplicated per source state
    transitions: Vec<Vec<(Label, usize)>>,
    labels: Option<Vec<String>>,
}

impl Nfa {
    pub fn new(alphabet: InverseAlphabet, state_count: usize, initial: usize) -> Result<Nfa> {
        if state_count == 0 {
            return Err(Error::NoStates);
        }
        if initial >= state_count {
            return Err(Error::StateOutOfRange { state: initial, state_count });
        }
        Ok(Nfa {
            alphabet,
            initial,
            accepting: vec![false; state_count],
            transitions: vec![Vec::new(); state_count],
            labels: None,
        })
    }

    /// Single-state automaton accepting only ε.
    pub fn epsilon_only(alphabet: InverseAlphabet) -> Nfa {
        let mut m = Nfa::new(alphabet, 1, 0).unwrap();
        m.accepting[0] = true;
        m
    }

    /// A path automaton accepting exactly `w`.
    pub fn single_word(alphabet: InverseAlphabet, w: &[Symbol]) -> Result<Nfa> {
        let mut m = Nfa::new(alphabet, w.len() + 1, 0)?;
        for (i, &s) in w.iter().enumerate() {
            m.add_transition(i, Label::Symbol(s), i + 1)?;
        }
        m.accepting[w.len()] = true;
        Ok(m)
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn alphabet(&self) -> InverseAlphabet {
        self.alphabet
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = usize> + '_ {
        self.accepting.iter().enumerate().filter(|(_, &a)| a).map(|(i, _)| i)
    }

    pub fn transitions_from(&self, p: usize) -> &[(Label, usize)] {
        &self.transitions[p]
    }

    /// All transitions as `(source, label, target)`, sorted.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, Label, usize)> + '_ {
        self.transitions
            .iter()
            .enumerate()
            .flat_map(|(p, out)| out.iter().map(move |&(l, q)| (p, l, q)))
    }

    pub fn successors(&self, p: usize, label: Label) -> impl Iterator<Item = usize> + '_ {
        let out = &self.transitions[p];
        let start = out.partition_point(|&(l, _)| l < label);
        out[start..].iter().take_while(move |&&(l, _)| l == label).map(|&(_, q)| q)
    }

    pub fn state_label(&self, q: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[q].as_str())
    }

    pub fn set_state_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.state_count());
        self.labels = Some(labels);
    }

    fn check_state(&self, q: usize) -> Result<()> {
        if q < self.state_count() {
            Ok(())
        } else {
            Err(Error::StateOutOfRange { state: q, state_count: self.state_count() })
        }
    }

    pub fn add_state(&mut self) -> usize {
        self.transitions.push(Vec::new());
        self.accepting.push(false);
        if let Some(l) = self.labels.as_mut() {
            l.push(String::new());
        }
        self.transitions.len() - 1
    }

    pub fn set_initial(&mut self, q: usize) -> Result<()> {
        self.check_state(q)?;
        self.initial = q;
        Ok(())
    }

    pub fn set_accepting(&mut self, q: usize, accepting: bool) -> Result<()> {
        self.check_state(q)?;
        self.accepting[q] = accepting;
        Ok(())
    }

    /// Returns false if the transition was already present.
    pub fn add_transition(&mut self, p: usize, label: Label, q: usize) -> Result<bool> {
        self.check_state(p)?;
        self.check_state(q)?;
        if let Label::Symbol(s) = label {
            self.alphabet.check(s)?;
        }
        let out = &mut self.transitions[p];
        match out.binary_search(&(label, q)) {
            Ok(_) => Ok(false),
            Err(pos) => {
                out.insert(pos, (label, q));
                Ok(true)
            }
        }
    }

    pub fn has_epsilon_transitions(&self) -> bool {
        self.transitions().any(|(_, l, _)| l == Label::Epsilon)
    }

    pub fn empty_set(&self) -> BitSet {
        BitSet::new(self.state_count())
    }

    /// Closes `set` under ε-transitions in place.
    pub fn epsilon_close(&self, set: &mut BitSet) {
        let mut stack: Vec<usize> = set.iter().collect();
        while let Some(p) = stack.pop() {
            for q in self.successors(p, Label::Epsilon) {
                if set.insert(q) {
                    stack.push(q);
                }
            }
        }
    }

    pub fn epsilon_closure_of(&self, p: usize) -> BitSet {
        let mut set = self.empty_set();
        set.insert(p);
        self.epsilon_close(&mut set);
        set
    }

    pub fn initial_set(&self) -> BitSet {
        self.epsilon_closure_of(self.initial)
    }

    /// ε-closed successor set of an ε-closed set.
    pub fn step(&self, set: &BitSet, s: Symbol) -> BitSet {
        let mut next = self.empty_set();
        for p in set.iter() {
            for q in self.successors(p, Label::Symbol(s)) {
                next.insert(q);
            }
        }
        self.epsilon_close(&mut next);
        next
    }

    pub fn accepts_set(&self, set: &BitSet) -> bool {
        set.iter().any(|q| self.accepting[q])
    }

    pub fn accepts(&self, w: &[Symbol]) -> Result<bool> {
        let mut set = self.initial_set();
        for &s in w {
            self.alphabet.check(s)?;
            set = self.step(&set, s);
            if set.is_empty() {
                return Ok(false);
            }
        }
        Ok(self.accepts_set(&set))
    }

    /// States from which some word of length exactly `j` is accepted, for `j = 0..=max_len`.
    fn exact_length_coreach(&self, max_len: usize) -> Vec<BitSet> {
        let n = self.state_count();
        let closures: Vec<BitSet> = (0..n).map(|p| self.epsilon_closure_of(p)).collect();
        let mut layers = Vec::with_capacity(max_len + 1);
        let mut base = self.empty_set();
        for p in 0..n {
            if self.accepts_set(&closures[p]) {
                base.insert(p);
            }
        }
        layers.push(base);
        for j in 1..=max_len {
            let prev = &layers[j - 1];
            let mut cur = self.empty_set();
            for p in 0..n {
                let hit = closures[p].iter().any(|r| {
                    self.transitions[r]
                        .iter()
                        .any(|&(l, q)| l != Label::Epsilon && prev.contains(q))
                });
                if hit {
                    cur.insert(p);
                }
            }
            layers.push(cur);
        }
        layers
    }

    /// All accepted words of length at most `max_len`, shortest first, then
    /// lexicographically in symbol order.
    pub fn enumerate(&self, max_len: usize) -> Vec<Word> {
        let layers = self.exact_length_coreach(max_len);
        let symbols: Vec<Symbol> = self.alphabet.symbols().collect();
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        let start = self.initial_set();
        for len in 0..=max_len {
            if start.intersects(&layers[len]) {
                self.enumerate_exact(&start, len, &layers, &symbols, &mut prefix, &mut out);
            }
        }
        out
    }

    fn enumerate_exact(
        &self,
        set: &BitSet,
        remaining: usize,
        layers: &[BitSet],
        symbols: &[Symbol],
        prefix: &mut Vec<Symbol>,
        out: &mut Vec<Word>,
    ) {
        if remaining == 0 {
            if self.accepts_set(set) {
                out.push(Word::from(prefix.clone()));
            }
            return;
        }
        for &s in symbols {
            let next = self.step(set, s);
            if next.intersects(&layers[remaining - 1]) {
                prefix.push(s);
                self.enumerate_exact(&next, remaining - 1, layers, symbols, prefix, out);
                prefix.pop();
            }
        }
    }

    /// The shortlex-least accepted word, if the language is nonempty.
    pub fn shortest_accepted(&self) -> Option<Word> {
        let start = self.initial_set();
        let mut seen: BTreeMap<BitSet, ()> = BTreeMap::new();
        let mut queue: VecDeque<(BitSet, Vec<Symbol>)> = VecDeque::new();
        seen.insert(start.clone(), ());
        queue.push_back((start, Vec::new()));
        while let Some((set, w)) = queue.pop_front() {
            if self.accepts_set(&set) {
                return Some(Word::from(w));
            }
            for s in self.alphabet.symbols() {
                let next = self.step(&set, s);
                if next.is_empty() || seen.contains_key(&next) {
                    continue;
                }
                seen.insert(next.clone(), ());
                let mut nw = w.clone();
                nw.push(s);
                queue.push_back((next, nw));
            }
        }
        None
    }

    /// Subset construction over reachable subsets. The empty subset, when
    /// reached, is the dead state, so the result has at most `2^n` states.
    pub fn determinize(&self) -> Dfa {
        let symbols: Vec<Symbol> = self.alphabet.symbols().collect();
        let width = symbols.len();
        let mut index: BTreeMap<BitSet, usize> = BTreeMap::new();
        let mut subsets: Vec<BitSet> = Vec::new();
        let mut table: Vec<usize> = Vec::new();
        let start = self.initial_set();
        index.insert(start.clone(), 0);
        subsets.push(start);
        let mut i = 0;
        while i < subsets.len() {
            let set = subsets[i].clone();
            for &s in &symbols {
                let next = self.step(&set, s);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        index.insert(next.clone(), id);
                        subsets.push(next);
                        id
                    }
                };
                table.push(id);
            }
            i += 1;
        }
        debug_assert_eq!(table.len(), subsets.len() * width);
        let accepting = subsets.iter().map(|s| self.accepts_set(s)).collect();
        let dead = subsets.iter().position(|s| s.is_empty());
        Dfa::from_parts(self.alphabet, table, 0, accepting, dead)
    }

    /// Accepts the reversal of the language: edges flipped, a fresh initial
    /// state with ε-edges to the old accepting states, the old initial state
    /// as the only accepting state.
    pub fn reverse(&self) -> Nfa {
        let n = self.state_count();
        let mut r = Nfa::new(self.alphabet, n + 1, n).unwrap();
        for (p, l, q) in self.transitions() {
            r.add_transition(q, l, p).unwrap();
        }
        for f in self.accepting_states() {
            r.add_transition(n, Label::Epsilon, f).unwrap();
        }
        r.accepting[self.initial] = true;
        r
    }

    /// Accepts `L⁻¹ = { w⁻¹ : w ∈ L }`: reversal, then every symbol inverted.
    pub fn invert_language(&self) -> Nfa {
        let rev = self.reverse();
        let mut out = Nfa::new(self.alphabet, rev.state_count(), rev.initial).unwrap();
        out.accepting = rev.accepting.clone();
        for (p, l, q) in rev.transitions() {
            let l = match l {
                Label::Epsilon => Label::Epsilon,
                Label::Symbol(s) => Label::Symbol(s.inverse()),
            };
            out.add_transition(p, l, q).unwrap();
        }
        out
    }

    /// Accepts `L(self)·L(other)`.
    pub fn concat(&self, other: &Nfa) -> Result<Nfa> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch { left: self.alphabet.k(), right: other.alphabet.k() });
        }
        let n = self.state_count();
        let mut out = Nfa::new(self.alphabet, n + other.state_count(), self.initial)?;
        for (p, l, q) in self.transitions() {
            out.add_transition(p, l, q)?;
        }
        for (p, l, q) in other.transitions() {
            out.add_transition(p + n, l, q + n)?;
        }
        for f in self.accepting_states() {
            out.add_transition(f, Label::Epsilon, other.initial + n)?;
        }
        for f in other.accepting_states() {
            out.accepting[f + n] = true;
        }
        Ok(out)
    }

    /// Same automaton with every accepting flag replaced.
    pub fn with_accepting(&self, accepting: &BitSet) -> Nfa {
        let mut out = self.clone();
        for q in 0..self.state_count() {
            out.accepting[q] = accepting.contains(q);
        }
        out
    }

    pub fn is_empty_language(&self) -> bool {
        self.shortest_accepted().is_none()
    }
}
