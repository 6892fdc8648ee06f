//! Complete deterministic automata with an explicit dead state.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::nfa::{Label, Nfa};
use crate::word::{InverseAlphabet, Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: InverseAlphabet,
    // row-major: state * 2k + symbol index
    table: Vec<usize>,
    initial: usize,
    accepting: Vec<bool>,
    dead: Option<usize>,
    labels: Option<Vec<String>>,
}

impl Dfa {
    pub(crate) fn from_parts(
        alphabet: InverseAlphabet,
        table: Vec<usize>,
        initial: usize,
        accepting: Vec<bool>,
        dead: Option<usize>,
    ) -> Dfa {
        Dfa { alphabet, table, initial, accepting, dead, labels: None }
    }

    /// Builds a complete DFA from a partial transition list. A dead state is
    /// appended as state `live_states`; every missing transition goes there.
    pub fn from_partial(
        alphabet: InverseAlphabet,
        live_states: usize,
        initial: usize,
        accepting: &[usize],
        transitions: &[(usize, Symbol, usize)],
    ) -> Result<Dfa> {
        if live_states == 0 {
            return Err(Error::NoStates);
        }
        let n = live_states + 1;
        let dead = live_states;
        let width = alphabet.size();
        let check = |q: usize| {
            if q < live_states {
                Ok(())
            } else {
                Err(Error::StateOutOfRange { state: q, state_count: live_states })
            }
        };
        check(initial)?;
        let mut table = vec![dead; n * width];
        let mut set = vec![false; n * width];
        for &(p, s, q) in transitions {
            check(p)?;
            check(q)?;
            alphabet.check(s)?;
            let slot = p * width + alphabet.index_of(s);
            if set[slot] && table[slot] != q {
                return Err(Error::Nondeterministic { state: p, symbol: s });
            }
            set[slot] = true;
            table[slot] = q;
        }
        let mut acc = vec![false; n];
        for &f in accepting {
            check(f)?;
            acc[f] = true;
        }
        Ok(Dfa { alphabet, table, initial, accepting: acc, dead: Some(dead), labels: None })
    }

    /// Builds a DFA from a full table. `dead`, when given, must be a
    /// non-accepting sink.
    pub fn from_table(
        alphabet: InverseAlphabet,
        table: Vec<usize>,
        initial: usize,
        accepting: Vec<bool>,
        dead: Option<usize>,
    ) -> Result<Dfa> {
        let n = accepting.len();
        let width = alphabet.size();
        if n == 0 {
            return Err(Error::NoStates);
        }
        if table.len() != n * width {
            return Err(Error::StateOutOfRange { state: table.len() / width, state_count: n });
        }
        for &q in table.iter().chain(core::iter::once(&initial)) {
            if q >= n {
                return Err(Error::StateOutOfRange { state: q, state_count: n });
            }
        }
        if let Some(d) = dead {
            if d >= n {
                return Err(Error::StateOutOfRange { state: d, state_count: n });
            }
            let sink = table[d * width..(d + 1) * width].iter().all(|&q| q == d);
            if !sink || accepting[d] {
                return Err(Error::InvalidDeadState { state: d });
            }
        }
        Ok(Dfa { alphabet, table, initial, accepting, dead, labels: None })
    }

    /// Rejects everything: a single dead state.
    pub fn empty_language(alphabet: InverseAlphabet) -> Dfa {
        Dfa::from_parts(alphabet, vec![0; alphabet.size()], 0, vec![false], Some(0))
    }

    /// Accepts every word over the alphabet.
    pub fn universal(alphabet: InverseAlphabet) -> Dfa {
        Dfa::from_parts(alphabet, vec![0; alphabet.size()], 0, vec![true], None)
    }

    /// Accepts `Γ*`, the words without inverse letters.
    pub fn positive_words(alphabet: InverseAlphabet) -> Dfa {
        let transitions: Vec<(usize, Symbol, usize)> =
            (1..=alphabet.k() as u32).map(|i| (0, Symbol::letter(i), 0)).collect();
        Dfa::from_partial(alphabet, 1, 0, &[0], &transitions).unwrap()
    }

    pub fn alphabet(&self) -> InverseAlphabet {
        self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn dead(&self) -> Option<usize> {
        self.dead
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn next(&self, p: usize, s: Symbol) -> usize {
        self.table[p * self.alphabet.size() + self.alphabet.index_of(s)]
    }

    fn next_index(&self, p: usize, i: usize) -> usize {
        self.table[p * self.alphabet.size() + i]
    }

    pub fn state_label(&self, q: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[q].as_str())
    }

    pub fn set_state_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.state_count());
        self.labels = Some(labels);
    }

    pub fn run(&self, w: &[Symbol]) -> Result<usize> {
        let mut q = self.initial;
        for &s in w {
            self.alphabet.check(s)?;
            q = self.next(q, s);
        }
        Ok(q)
    }

    pub fn accepts(&self, w: &[Symbol]) -> Result<bool> {
        self.run(w).map(|q| self.accepting[q])
    }

    /// The same language as an NFA with identical state ids. Transitions
    /// into or out of the dead state are dropped.
    pub fn to_nfa(&self) -> Nfa {
        let mut m = Nfa::new(self.alphabet, self.state_count(), self.initial).unwrap();
        for p in 0..self.state_count() {
            if Some(p) == self.dead {
                continue;
            }
            m.set_accepting(p, self.accepting[p]).unwrap();
            for (i, s) in self.alphabet.symbols().enumerate() {
                let q = self.next_index(p, i);
                if Some(q) != self.dead {
                    m.add_transition(p, Label::Symbol(s), q).unwrap();
                }
            }
        }
        if let Some(l) = &self.labels {
            m.set_state_labels(l.clone());
        }
        m
    }

    /// Transitions that do not touch the dead state, as `(p, symbol, q)`.
    pub fn live_transitions(&self) -> impl Iterator<Item = (usize, Symbol, usize)> + '_ {
        (0..self.state_count())
            .filter(move |&p| Some(p) != self.dead)
            .flat_map(move |p| {
                self.alphabet
                    .symbols()
                    .enumerate()
                    .map(move |(i, s)| (p, s, self.next_index(p, i)))
            })
            .filter(move |&(_, _, q)| Some(q) != self.dead)
    }

    pub fn enumerate(&self, max_len: usize) -> Vec<Word> {
        self.to_nfa().enumerate(max_len)
    }

    pub fn shortest_accepted(&self) -> Option<Word> {
        self.to_nfa().shortest_accepted()
    }

    fn check_same_alphabet(&self, other: &Dfa) -> Result<()> {
        if self.alphabet != other.alphabet {
            Err(Error::AlphabetMismatch { left: self.alphabet.k(), right: other.alphabet.k() })
        } else {
            Ok(())
        }
    }

    fn is_dead(&self, q: usize) -> bool {
        Some(q) == self.dead
    }

    /// Accepts `L(self) ∩ L(other)` over the reachable pairs. Pairs with a
    /// dead component collapse into one dead state.
    pub fn product_intersection(&self, other: &Dfa) -> Result<Dfa> {
        self.check_same_alphabet(other)?;
        let width = self.alphabet.size();
        let mut index: BTreeMap<Option<(usize, usize)>, usize> = BTreeMap::new();
        let mut pairs: Vec<Option<(usize, usize)>> = Vec::new();
        let mut table = Vec::new();
        let norm = |a: usize, b: usize| {
            if self.is_dead(a) || other.is_dead(b) {
                None
            } else {
                Some((a, b))
            }
        };
        let start = norm(self.initial, other.initial);
        index.insert(start, 0);
        pairs.push(start);
        let mut i = 0;
        while i < pairs.len() {
            let pair = pairs[i];
            for s in 0..width {
                let next = match pair {
                    None => None,
                    Some((a, b)) => norm(self.next_index(a, s), other.next_index(b, s)),
                };
                let id = *index.entry(next).or_insert_with(|| {
                    pairs.push(next);
                    pairs.len() - 1
                });
                table.push(id);
            }
            i += 1;
        }
        let accepting = pairs
            .iter()
            .map(|p| p.is_some_and(|(a, b)| self.accepting[a] && other.accepting[b]))
            .collect();
        let dead = index.get(&None).copied();
        Ok(Dfa::from_parts(self.alphabet, table, 0, accepting, dead))
    }

    /// Language equality by Hopcroft–Karp: merge states pairwise with
    /// union-find and fail on the first merged pair with differing acceptance.
    pub fn is_equivalent(&self, other: &Dfa) -> Result<bool> {
        self.check_same_alphabet(other)?;
        let offset = self.state_count();
        let mut uf = UnionFind::new(offset + other.state_count());
        let accepting = |x: usize| {
            if x < offset {
                self.accepting[x]
            } else {
                other.accepting[x - offset]
            }
        };
        let next = |x: usize, i: usize| {
            if x < offset {
                self.next_index(x, i)
            } else {
                other.next_index(x - offset, i) + offset
            }
        };
        let mut queue = VecDeque::new();
        let (a, b) = (self.initial, other.initial + offset);
        uf.union(a, b);
        queue.push_back((a, b));
        while let Some((x, y)) = queue.pop_front() {
            if accepting(x) != accepting(y) {
                return Ok(false);
            }
            for i in 0..self.alphabet.size() {
                let (nx, ny) = (next(x, i), next(y, i));
                if uf.union(nx, ny) {
                    queue.push_back((nx, ny));
                }
            }
        }
        Ok(true)
    }
}

struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), rank: vec![0; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if the two classes were distinct.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            core::cmp::Ordering::Less => self.parent[ra] = rb,
            core::cmp::Ordering::Greater => self.parent[rb] = ra,
            core::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}
