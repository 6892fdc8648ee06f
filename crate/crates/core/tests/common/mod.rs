//! Random automata and brute-force oracles shared by the integration tests.
//! Nothing here goes through the saturation or distance code it is used to check.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use freewords::word::{is_reducible, one_step_reductions};
use freewords::{BitSet, InverseAlphabet, Label, Nfa, Symbol, Word};
use proptest::prelude::*;
use rand::Rng;

/// Plain description of an automaton, convenient for generators.
#[derive(Debug, Clone)]
pub struct NfaSpec {
    pub k: usize,
    pub n: usize,
    pub accepting: Vec<usize>,
    /// `(p, label, q)`, label 0 meaning ε.
    pub transitions: Vec<(usize, i32, usize)>,
}

impl NfaSpec {
    pub fn build(&self) -> Nfa {
        let mut m = Nfa::new(InverseAlphabet::new(self.k).unwrap(), self.n, 0).unwrap();
        for &f in &self.accepting {
            m.set_accepting(f, true).unwrap();
        }
        for &(p, l, q) in &self.transitions {
            let label = match Symbol::new(l) {
                None => Label::Epsilon,
                Some(s) => Label::Symbol(s),
            };
            m.add_transition(p, label, q).unwrap();
        }
        m
    }
}

fn labels(k: usize, epsilon: bool, positive_only: bool) -> Vec<i32> {
    let mut out = Vec::new();
    if epsilon {
        out.push(0);
    }
    for i in 1..=k as i32 {
        out.push(i);
        if !positive_only {
            out.push(-i);
        }
    }
    out
}

/// Random ε-NFA with `1..=max_n` states over `1..=max_k` letters.
pub fn random_nfa<R: Rng>(rng: &mut R, max_n: usize, max_k: usize) -> Nfa {
    let n = rng.gen_range(1..=max_n);
    let k = rng.gen_range(1..=max_k);
    random_nfa_with(rng, n, k, true, false)
}

pub fn random_nfa_with<R: Rng>(rng: &mut R, n: usize, k: usize, epsilon: bool, positive_only: bool) -> Nfa {
    let symbols = if positive_only { k } else { 2 * k };
    let out_degree: f64 = rng.gen_range(0.5..2.2);
    let density = (out_degree / (n * symbols) as f64).min(1.0);
    let eps_density: f64 = if epsilon { rng.gen_range(0.0..0.5) / n as f64 } else { 0.0 };
    let mut spec = NfaSpec { k, n, accepting: Vec::new(), transitions: Vec::new() };
    for p in 0..n {
        if rng.gen_bool(0.35) {
            spec.accepting.push(p);
        }
        for l in labels(k, epsilon, positive_only) {
            let d = if l == 0 { eps_density } else { density };
            for q in 0..n {
                if rng.gen_bool(d) {
                    spec.transitions.push((p, l, q));
                }
            }
        }
    }
    spec.build()
}

/// Proptest strategy for small ε-NFAs.
pub fn nfa_strategy(max_n: usize, max_k: usize) -> impl Strategy<Value = Nfa> {
    (1..=max_n, 1..=max_k)
        .prop_flat_map(|(n, k)| {
            let label = (-(k as i32)..=k as i32).boxed();
            let edge = (0..n, label, 0..n);
            (
                Just(n),
                Just(k),
                proptest::collection::vec(any::<bool>(), n),
                proptest::collection::vec(edge, 0..=(2 * n + 2)),
            )
        })
        .prop_map(|(n, k, acc, transitions)| {
            NfaSpec {
                k,
                n,
                accepting: acc.iter().enumerate().filter(|(_, &a)| a).map(|(i, _)| i).collect(),
                transitions,
            }
            .build()
        })
}

pub fn word_strategy(k: usize, max_len: usize) -> impl Strategy<Value = Word> {
    let k = k as i32;
    proptest::collection::vec((1..=k, any::<bool>()), 0..=max_len).prop_map(|v| {
        v.into_iter()
            .map(|(i, neg)| Symbol::new(if neg { -i } else { i }).unwrap())
            .collect()
    })
}

/// Every word over `k` letters and their inverses of length at most `max_len`.
pub fn all_words(k: usize, max_len: usize) -> Vec<Word> {
    let syms: Vec<Symbol> = InverseAlphabet::new(k).unwrap().symbols().collect();
    let mut out = vec![Word::empty()];
    let mut layer = vec![Vec::<Symbol>::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * syms.len());
        for w in &layer {
            for &s in &syms {
                let mut x = w.clone();
                x.push(s);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned().map(Word::from));
        layer = next;
    }
    out
}

/// Irreducible words reachable from `w` by single cancellations, by BFS.
pub fn bfs_normal_forms(w: &Word) -> BTreeSet<Word> {
    let mut seen = BTreeSet::new();
    let mut normal = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(x) = queue.pop_front() {
        let next = one_step_reductions(&x);
        if next.is_empty() {
            normal.insert(x);
        }
        for y in next {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    normal
}

/// Naive ε-NFA simulation, independent of the library's subset machinery.
pub fn simulate(m: &Nfa, w: &[Symbol]) -> bool {
    let close = |set: &mut BTreeSet<usize>| {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(p) = stack.pop() {
            for &(l, q) in m.transitions_from(p) {
                if l == Label::Epsilon && set.insert(q) {
                    stack.push(q);
                }
            }
        }
    };
    let mut cur: BTreeSet<usize> = [m.initial()].into_iter().collect();
    close(&mut cur);
    for &s in w {
        let mut next = BTreeSet::new();
        for &p in &cur {
            for &(l, q) in m.transitions_from(p) {
                if l == Label::Symbol(s) {
                    next.insert(q);
                }
            }
        }
        close(&mut next);
        cur = next;
    }
    cur.iter().any(|&q| m.is_accepting(q))
}

/// Shortest accepted reducible word among words up to `max_len`, by brute force.
pub fn brute_shortest_reducible(m: &Nfa, max_len: usize) -> Option<usize> {
    m.enumerate(max_len).into_iter().find(|w| is_reducible(w)).map(|w| w.len())
}

/// Pairs `(p, q)` connected by a reducible word of length at most `max_len`,
/// by exploring (state, stack) configurations.
pub fn brute_connected_pairs(m: &Nfa, max_len: usize) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for start in 0..m.state_count() {
        let mut seen: BTreeSet<(usize, Vec<Symbol>, usize)> = BTreeSet::new();
        let mut queue = VecDeque::new();
        queue.push_back((start, Vec::<Symbol>::new(), 0usize));
        seen.insert((start, Vec::new(), 0));
        while let Some((p, stack, len)) = queue.pop_front() {
            if stack.is_empty() && p != start {
                out.insert((start, p));
            }
            for &(l, q) in m.transitions_from(p) {
                let (nstack, nlen) = match l {
                    Label::Epsilon => (stack.clone(), len),
                    Label::Symbol(s) => {
                        if len == max_len {
                            continue;
                        }
                        let mut st = stack.clone();
                        if st.last().is_some_and(|t| t.cancels(s)) {
                            st.pop();
                        } else {
                            st.push(s);
                        }
                        (st, len + 1)
                    }
                };
                // a stack deeper than the remaining budget can never empty
                if nstack.len() > max_len - nlen {
                    continue;
                }
                if seen.insert((q, nstack.clone(), nlen)) {
                    queue.push_back((q, nstack, nlen));
                }
            }
        }
    }
    out
}

/// Accepted by `m` after inserting reducible connectors, as witnessed by a
/// pair-connectivity relation: `connected(p, q)` for `p != q`.
pub fn accepts_with_connectors(m: &Nfa, x: &[Symbol], connected: &dyn Fn(usize, usize) -> bool) -> bool {
    let n = m.state_count();
    let close = |set: &BTreeSet<usize>| -> BTreeSet<usize> {
        let mut out = set.clone();
        for &p in set {
            for q in 0..n {
                if connected(p, q) {
                    out.insert(q);
                }
            }
        }
        out
    };
    let mut cur = close(&[m.initial()].into_iter().collect());
    for &s in x {
        let mut next = BTreeSet::new();
        for &p in &cur {
            for &(l, q) in m.transitions_from(p) {
                if l == Label::Symbol(s) {
                    next.insert(q);
                }
            }
        }
        cur = close(&next);
    }
    cur.iter().any(|&q| m.is_accepting(q))
}

/// `L(a)/L(b)` by the definition: `a` with its accepting set replaced by
/// the states from which some word of `L(b)` reaches acceptance, found by
/// reachability in the product of `a` and `b`.
pub fn quotient_by_pair_reachability(a: &Nfa, b: &Nfa) -> Nfa {
    let (na, nb) = (a.state_count(), b.state_count());
    let mut good = BitSet::new(na);
    for p in 0..na {
        let mut seen = vec![false; na * nb];
        let mut queue = VecDeque::new();
        seen[p * nb + b.initial()] = true;
        queue.push_back((p, b.initial()));
        let mut found = false;
        while let Some((x, y)) = queue.pop_front() {
            if a.is_accepting(x) && b.is_accepting(y) {
                found = true;
                break;
            }
            let mut push = |x2: usize, y2: usize, queue: &mut VecDeque<(usize, usize)>| {
                if !seen[x2 * nb + y2] {
                    seen[x2 * nb + y2] = true;
                    queue.push_back((x2, y2));
                }
            };
            for &(l, x2) in a.transitions_from(x) {
                match l {
                    Label::Epsilon => push(x2, y, &mut queue),
                    Label::Symbol(s) => {
                        for &(l2, y2) in b.transitions_from(y) {
                            if l2 == Label::Symbol(s) {
                                push(x2, y2, &mut queue);
                            }
                        }
                    }
                }
            }
            for &(l2, y2) in b.transitions_from(y) {
                if l2 == Label::Epsilon {
                    push(x, y2, &mut queue);
                }
            }
        }
        if found {
            good.insert(p);
        }
    }
    a.with_accepting(&good)
}

/// True if the language of `m` is finite, via the trimmed subset automaton.
pub fn language_is_finite(m: &Nfa) -> bool {
    let d = m.determinize();
    let n = d.state_count();
    let syms: Vec<Symbol> = d.alphabet().symbols().collect();
    // co-reachable states
    let mut live = vec![false; n];
    for q in 0..n {
        live[q] = d.is_accepting(q);
    }
    loop {
        let mut changed = false;
        for p in 0..n {
            if !live[p] && syms.iter().any(|&s| live[d.next(p, s)]) {
                live[p] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    // cycle among reachable live states
    fn dfs(p: usize, d: &freewords::Dfa, syms: &[Symbol], live: &[bool], color: &mut [u8]) -> bool {
        color[p] = 1;
        for &s in syms {
            let q = d.next(p, s);
            if !live[q] {
                continue;
            }
            if color[q] == 1 || (color[q] == 0 && dfs(q, d, syms, live, color)) {
                return true;
            }
        }
        color[p] = 2;
        false
    }
    let mut color = vec![0u8; n];
    !(live[d.initial()] && dfs(d.initial(), &d, &syms, &live, &mut color))
}

pub fn w(v: &[i32]) -> Word {
    Word::from_values(v).unwrap()
}
