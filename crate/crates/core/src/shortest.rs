//! Shortest words that reduce to ε.
//!
//! `d(p, q)` is the length of the shortest word `z` with `r(z) = ε` that
//! drives `p` to `q`. It is the least solution of
//!
//! * `d(p, q) = 0` if `q` is ε-reachable from `p`,
//! * `d(p, q) ≤ 2 + d(s, t)` if `s ∈ δ(p, a)` and `q ∈ δ(t, a⁻¹)`,
//! * `d(p, q) ≤ d(p, r) + d(r, q)`,
//!
//! solved over the `n²` pairs with Knuth's generalization of Dijkstra's
//! algorithm. Every rule is monotone and never decreases its inputs, so pairs
//! can be settled in nondecreasing order of distance. Distances are
//! arbitrary-precision because they can grow exponentially in `n`.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::nfa::{Label, Nfa};
use crate::word::{Symbol, Word};

/// Witnesses longer than this are not materialized by default.
pub const DEFAULT_WITNESS_CAP: usize = 1 << 16;

/// The rule that produced a pair's distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derivation {
    /// Connected by ε-transitions alone.
    Epsilon,
    /// `p -a-> inner.0`, then `inner.0 ~> inner.1`, then `inner.1 -a⁻¹-> q`.
    Wrap { symbol: Symbol, inner: (usize, usize) },
    /// `p ~> mid ~> q`.
    Concat { mid: usize },
}

impl Derivation {
    fn preference(&self) -> (u8, Option<Symbol>, usize) {
        match *self {
            Derivation::Epsilon => (0, None, 0),
            Derivation::Wrap { symbol, .. } => (1, Some(symbol), 0),
            Derivation::Concat { mid } => (2, None, mid),
        }
    }

    fn preferred_over(&self, other: &Derivation) -> bool {
        self.preference().cmp(&other.preference()) == Ordering::Less
    }
}

/// A materialized witness, or a marker that it exceeds the cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Word(Word),
    TooLong,
}

impl Witness {
    pub fn word(&self) -> Option<&Word> {
        match self {
            Witness::Word(w) => Some(w),
            Witness::TooLong => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PairDistanceTable {
    n: usize,
    dist: Vec<Option<BigUint>>,
    derivation: Vec<Option<Derivation>>,
}

impl PairDistanceTable {
    pub fn state_count(&self) -> usize {
        self.n
    }

    /// `None` stands for ∞.
    pub fn distance(&self, p: usize, q: usize) -> Option<&BigUint> {
        self.dist[p * self.n + q].as_ref()
    }

    pub fn is_connected(&self, p: usize, q: usize) -> bool {
        self.dist[p * self.n + q].is_some()
    }

    pub fn derivation(&self, p: usize, q: usize) -> Option<Derivation> {
        self.derivation[p * self.n + q]
    }

    /// Pairs `(p, q)`, `p != q`, with finite distance.
    pub fn connected_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n * n)
            .filter(move |&i| self.dist[i].is_some() && i / n != i % n)
            .map(move |i| (i / n, i % n))
    }

    /// Rebuilds the connecting word for `(p, q)` if its length is at most `cap`.
    pub fn witness(&self, p: usize, q: usize, cap: usize) -> Option<Witness> {
        let d = self.distance(p, q)?;
        match d.to_usize() {
            Some(len) if len <= cap => Some(Witness::Word(self.materialize(p, q, len))),
            _ => Some(Witness::TooLong),
        }
    }

    fn materialize(&self, p: usize, q: usize, len: usize) -> Word {
        enum Task {
            Pair(usize, usize),
            Emit(Symbol),
        }
        let mut out = Vec::with_capacity(len);
        let mut stack = vec![Task::Pair(p, q)];
        while let Some(task) = stack.pop() {
            match task {
                Task::Emit(s) => out.push(s),
                Task::Pair(x, y) => match self.derivation(x, y).expect("settled pair") {
                    Derivation::Epsilon => {}
                    Derivation::Wrap { symbol, inner } => {
                        stack.push(Task::Emit(symbol.inverse()));
                        stack.push(Task::Pair(inner.0, inner.1));
                        stack.push(Task::Emit(symbol));
                    }
                    Derivation::Concat { mid } => {
                        stack.push(Task::Pair(mid, y));
                        stack.push(Task::Pair(x, mid));
                    }
                },
            }
        }
        debug_assert_eq!(out.len(), len);
        Word::from(out)
    }
}

struct Solver {
    n: usize,
    dist: Vec<Option<BigUint>>,
    derivation: Vec<Option<Derivation>>,
    settled: Vec<bool>,
    heap: BinaryHeap<Reverse<(BigUint, usize)>>,
}

impl Solver {
    fn relax(&mut self, p: usize, q: usize, cand: BigUint, rule: Derivation) {
        let i = p * self.n + q;
        if self.settled[i] {
            return;
        }
        let better = match &self.dist[i] {
            None => true,
            Some(cur) => match cand.cmp(cur) {
                Ordering::Less => true,
                Ordering::Equal => {
                    if rule.preferred_over(self.derivation[i].as_ref().unwrap()) {
                        self.derivation[i] = Some(rule);
                    }
                    false
                }
                Ordering::Greater => false,
            },
        };
        if better {
            self.heap.push(Reverse((cand.clone(), i)));
            self.dist[i] = Some(cand);
            self.derivation[i] = Some(rule);
        }
    }
}

/// Computes `d(p, q)` for every pair of states of `m`.
pub fn reducible_pair_distances(m: &Nfa) -> PairDistanceTable {
    let n = m.state_count();
    let alphabet = m.alphabet();
    // incoming[x][a] = states p with x ∈ δ(p, a)
    let mut incoming: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); alphabet.size()]; n];
    for (p, l, q) in m.transitions() {
        if let Label::Symbol(s) = l {
            incoming[q][alphabet.index_of(s)].push(p);
        }
    }
    let mut solver = Solver {
        n,
        dist: vec![None; n * n],
        derivation: vec![None; n * n],
        settled: vec![false; n * n],
        heap: BinaryHeap::new(),
    };
    for p in 0..n {
        for q in m.epsilon_closure_of(p).iter() {
            solver.relax(p, q, BigUint::zero(), Derivation::Epsilon);
        }
    }
    let mut settled_out: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut settled_in: Vec<Vec<usize>> = vec![Vec::new(); n];
    let two = BigUint::from(2u32);

    while let Some(Reverse((v, i))) = solver.heap.pop() {
        if solver.settled[i] || solver.dist[i].as_ref() != Some(&v) {
            continue;
        }
        solver.settled[i] = true;
        let (x, y) = (i / n, i % n);

        for a in alphabet.symbols() {
            let back: Vec<usize> = m.successors(y, Label::Symbol(a.inverse())).collect();
            if back.is_empty() {
                continue;
            }
            for pi in 0..incoming[x][alphabet.index_of(a)].len() {
                let p = incoming[x][alphabet.index_of(a)][pi];
                for &q in &back {
                    solver.relax(p, q, &v + &two, Derivation::Wrap { symbol: a, inner: (x, y) });
                }
            }
        }

        if x != y {
            for zi in 0..settled_out[y].len() {
                let z = settled_out[y][zi];
                let cand = &v + solver.dist[y * n + z].as_ref().unwrap();
                solver.relax(x, z, cand, Derivation::Concat { mid: y });
            }
            for wi in 0..settled_in[x].len() {
                let w = settled_in[x][wi];
                let cand = solver.dist[w * n + x].as_ref().unwrap() + &v;
                solver.relax(w, y, cand, Derivation::Concat { mid: x });
            }
            settled_out[x].push(y);
            settled_in[y].push(x);
        }
    }

    PairDistanceTable { n, dist: solver.dist, derivation: solver.derivation }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortestReducible {
    pub length: BigUint,
    /// The accepting state the witness ends in.
    pub accepting_state: usize,
    pub witness: Witness,
}

/// The shortest accepted word `w` with `r(w) = ε`, if any. The witness is
/// materialized when its length is at most `cap`.
pub fn shortest_reducible_word(m: &Nfa, cap: usize) -> Option<ShortestReducible> {
    shortest_from_table(m, &reducible_pair_distances(m), cap)
}

pub fn shortest_from_table(
    m: &Nfa,
    table: &PairDistanceTable,
    cap: usize,
) -> Option<ShortestReducible> {
    let start = m.initial();
    let best = m
        .accepting_states()
        .filter_map(|f| table.distance(start, f).map(|d| (d, f)))
        .min_by(|a, b| a.0.cmp(b.0))?
        .0
        .clone();
    // lexicographically least witness among the tied accepting states
    let mut choice: Option<ShortestReducible> = None;
    for f in m.accepting_states() {
        if table.distance(start, f) != Some(&best) {
            continue;
        }
        let witness = table.witness(start, f, cap).unwrap();
        let candidate = ShortestReducible { length: best.clone(), accepting_state: f, witness };
        choice = match choice {
            None => Some(candidate),
            Some(cur) => match (cur.witness.word(), candidate.witness.word()) {
                (Some(a), Some(b)) if b < a => Some(candidate),
                _ => Some(cur),
            },
        };
    }
    choice
}

/// `b(w) = |w|₁ - |w|₁⁻¹` over the one-letter inverse alphabet.
pub fn balance(w: &[Symbol]) -> Result<i64> {
    w.iter().try_fold(0i64, |acc, &s| match s.value() {
        1 => Ok(acc + 1),
        -1 => Ok(acc - 1),
        _ => Err(Error::NotUnary { symbol: s }),
    })
}
