//! Saturation of ε-NFAs under cancellation and the reduced-representation
//! automaton `r(L)`.
//!
//! A pair `(p, q)` of states is *connected* when some word `z` with
//! `r(z) = ε` drives `p` to `q`. Adding an ε-edge for every connected pair
//! yields an automaton for the `⊢`-closure of the language; intersecting its
//! determinization with the DFA of reduced words yields `r(L)`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::dfa::Dfa;
use crate::error::Result;
use crate::nfa::{Label, Nfa};
use crate::word::{InverseAlphabet, Symbol};

/// The DFA `M_k` accepting exactly the reduced words over `k` letters.
///
/// State 0 is the start, state `1 + i` remembers the last symbol (symbol
/// index `i`), and state `2k + 1` is the dead state, for `2k + 2` states.
pub fn reduced_words_dfa(k: usize) -> Result<Dfa> {
    let alphabet = InverseAlphabet::new(k)?;
    let live = alphabet.size() + 1;
    let state_of = |s: Symbol| 1 + alphabet.index_of(s);
    let mut transitions = Vec::new();
    for c in alphabet.symbols() {
        transitions.push((0, c, state_of(c)));
        for a in alphabet.symbols() {
            if a != c.inverse() {
                transitions.push((state_of(a), c, state_of(c)));
            }
        }
    }
    let accepting: Vec<usize> = (0..live).collect();
    let mut dfa = Dfa::from_partial(alphabet, live, 0, &accepting, &transitions)?;
    let mut labels = vec![String::from("q0")];
    labels.extend(alphabet.symbols().map(|s| {
        if s.is_positive() {
            format!("q{}", s.letter_index())
        } else {
            format!("q{}^-1", s.letter_index())
        }
    }));
    labels.push(String::from("q-1"));
    dfa.set_state_labels(labels);
    Ok(dfa)
}

/// Output of the saturation: the input automaton plus one ε-edge per
/// connected pair.
#[derive(Debug, Clone)]
pub struct ClosureResult {
    pub saturated: Nfa,
    /// Connected pairs that were not already ε-connected in the input.
    pub added_edges: BTreeSet<(usize, usize)>,
    /// Every connected pair `(p, q)` with `p != q`, including those coming
    /// from ε-paths of the input.
    pub edges: BTreeSet<(usize, usize)>,
}

/// Quadruples `(p, q, s, t)` with `s ∈ δ(p, a)` and `q ∈ δ(t, a⁻¹)` for some symbol `a`.
fn wrap_quadruples(m: &Nfa) -> Vec<(usize, usize, usize, usize)> {
    let n = m.state_count();
    let mut by_symbol: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m.alphabet().size()];
    for (p, l, q) in m.transitions() {
        if let Label::Symbol(s) = l {
            by_symbol[m.alphabet().index_of(s)].push((p, q));
        }
    }
    let mut quads = Vec::new();
    for a in m.alphabet().symbols() {
        let into = &by_symbol[m.alphabet().index_of(a)];
        let back = &by_symbol[m.alphabet().index_of(a.inverse())];
        for &(p, s) in into {
            for &(t, q) in back {
                quads.push((p, q, s, t));
            }
        }
    }
    debug_assert!(quads.iter().all(|&(p, q, s, t)| p.max(q).max(s).max(t) < n));
    quads
}

fn initial_reach(m: &Nfa) -> Vec<BitSet> {
    (0..m.state_count()).map(|p| m.epsilon_closure_of(p)).collect()
}

fn finish(m: &Nfa, reach: &[BitSet], initial: &[BitSet]) -> ClosureResult {
    let mut saturated = m.clone();
    let mut edges = BTreeSet::new();
    let mut added_edges = BTreeSet::new();
    for (p, row) in reach.iter().enumerate() {
        for q in row.iter().filter(|&q| q != p) {
            edges.insert((p, q));
            if !initial[p].contains(q) {
                added_edges.insert((p, q));
            }
            saturated.add_transition(p, Label::Epsilon, q).unwrap();
        }
    }
    ClosureResult { saturated, added_edges, edges }
}

/// Incrementally maintained transitive relation `E` together with the
/// pending lists `l(s, t)`.
struct Saturation {
    n: usize,
    // reach[x] contains y iff (x, y) ∈ E
    reach: Vec<BitSet>,
    // l(s, t) at s * n + t; taken (and left empty) when (s, t) enters E
    pending: Vec<Vec<(usize, usize)>>,
}

impl Saturation {
    fn contains(&self, s: usize, t: usize) -> bool {
        s == t || self.reach[s].contains(t)
    }

    /// Smallest superset of `E ∪ {(p, q)}` that is transitive and contains
    /// `l(p', q')` for each of its members `(p', q')`.
    fn update(&mut self, p: usize, q: usize) {
        let mut work = vec![(p, q)];
        while let Some((u, v)) = work.pop() {
            if self.contains(u, v) {
                continue;
            }
            // E ∪ {(u, v)} closes to E ∪ (pred*(u) × succ*(v))
            let mut targets = self.reach[v].clone();
            targets.insert(v);
            let sources: Vec<usize> =
                (0..self.n).filter(|&x| x == u || self.reach[x].contains(u)).collect();
            for x in sources {
                let fresh = self.reach[x].union_new(&targets);
                for y in fresh.iter() {
                    work.append(&mut self.pending[x * self.n + y]);
                }
            }
        }
    }
}

/// Adds an ε-edge for every pair of states connected by a reducible word,
/// with the quadruple loop run in lexicographic order of `(p, q, s, t)`.
///
/// `E` starts as the transitive closure of the ε-edges. For each quadruple
/// with `s ∈ δ(p, a)` and `q ∈ δ(t, a⁻¹)`, the pair `(p, q)` is inserted at
/// once when `(s, t) ∈ E` and otherwise parked in `l(s, t)` until `(s, t)`
/// is inserted. Pairs `(s, s)` count as members of `E`. Total work is
/// `O(n⁴)`.
pub fn saturate_closure(m: &Nfa) -> ClosureResult {
    let identity: Vec<usize> = (0..m.state_count()).collect();
    saturate_closure_with_order(m, &identity)
}

/// Same as [`saturate_closure`], iterating quadruples in lexicographic order
/// of `(rank[p], rank[q], rank[s], rank[t])`. The result does not depend on
/// `rank`.
pub fn saturate_closure_with_order(m: &Nfa, rank: &[usize]) -> ClosureResult {
    let n = m.state_count();
    assert_eq!(rank.len(), n, "one rank per state");
    let initial = initial_reach(m);
    let mut sat = Saturation { n, reach: initial.clone(), pending: vec![Vec::new(); n * n] };
    let mut quads = wrap_quadruples(m);
    quads.sort_unstable_by_key(|&(p, q, s, t)| (rank[p], rank[q], rank[s], rank[t]));
    quads.dedup();
    for (p, q, s, t) in quads {
        if sat.contains(s, t) {
            sat.update(p, q);
        } else {
            sat.pending[s * n + t].push((p, q));
        }
    }
    finish(m, &sat.reach, &initial)
}

/// Direct fixpoint: add `(p, q)` whenever some quadruple has `(s, t)`
/// connected, re-close transitively, repeat until nothing changes.
pub fn saturate_closure_naive(m: &Nfa) -> ClosureResult {
    let n = m.state_count();
    let initial = initial_reach(m);
    let mut reach = initial.clone();
    let quads = wrap_quadruples(m);
    loop {
        let mut changed = false;
        for &(p, q, s, t) in &quads {
            if reach[s].contains(t) && reach[p].insert(q) {
                changed = true;
            }
        }
        // Warshall on rows
        for mid in 0..n {
            for x in 0..n {
                if x != mid && reach[x].contains(mid) {
                    let row = reach[mid].clone();
                    if !reach[x].union_new(&row).is_empty() {
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    finish(m, &reach, &initial)
}

/// Determinized `r(L(m))`: the saturated automaton's subset DFA intersected
/// with [`reduced_words_dfa`].
pub fn reduced_language_dfa(m: &Nfa) -> Dfa {
    let closure = saturate_closure(m);
    let reduced = reduced_words_dfa(m.alphabet().k()).expect("alphabet k >= 1");
    closure
        .saturated
        .determinize()
        .product_intersection(&reduced)
        .expect("same alphabet")
}

/// An automaton accepting `r(L(m)) = { r(w) : w ∈ L(m) }`.
pub fn reduced_language(m: &Nfa) -> Nfa {
    reduced_language_dfa(m).to_nfa()
}

/// State count of [`reduced_language_dfa`]; at most `2^n (2k + 2)`.
pub fn reduced_language_dfa_state_count(m: &Nfa) -> usize {
    reduced_language_dfa(m).state_count()
}
