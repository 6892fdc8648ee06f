//! Equivalence classes under an arbitrary defining set of word equations,
//! explored by breadth-first two-sided factor replacement.
//!
//! Word problems are undecidable in general, so exploration is bounded by a
//! length cap and reports whether the cap cut anything off.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::word::{Symbol, Word};

/// Equations `u = v` over the letters `1..=alphabet_size`. Either side may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationSystem {
    alphabet_size: usize,
    equations: Vec<(Word, Word)>,
}

impl EquationSystem {
    pub fn new(alphabet_size: usize, equations: Vec<(Word, Word)>) -> Result<EquationSystem> {
        if alphabet_size == 0 {
            return Err(Error::EmptyAlphabet);
        }
        for (u, v) in &equations {
            if u == v {
                return Err(Error::TrivialEquation);
            }
            for &s in u.iter().chain(v.iter()) {
                if !s.is_positive() {
                    return Err(Error::NotPositive { symbol: s });
                }
                if s.letter_index() as usize > alphabet_size {
                    return Err(Error::SymbolOutOfAlphabet { symbol: s, k: alphabet_size });
                }
            }
        }
        Ok(EquationSystem { alphabet_size, equations })
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn equations(&self) -> &[(Word, Word)] {
        &self.equations
    }

    /// `ab = ba` for every pair of distinct letters.
    pub fn commutation(alphabet_size: usize) -> Result<EquationSystem> {
        let mut eqs = Vec::new();
        for i in 1..=alphabet_size as u32 {
            for j in i + 1..=alphabet_size as u32 {
                let (a, b) = (Symbol::letter(i), Symbol::letter(j));
                eqs.push((Word::from(alloc::vec![a, b]), Word::from(alloc::vec![b, a])));
            }
        }
        EquationSystem::new(alphabet_size, eqs)
    }

    /// Every word obtained from `w` by replacing one occurrence of one side
    /// of an equation with the other side.
    pub fn neighbours(&self, w: &[Symbol]) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        for (u, v) in &self.equations {
            for (from, to) in [(u, v), (v, u)] {
                if from.len() > w.len() {
                    continue;
                }
                for i in 0..=w.len() - from.len() {
                    if w[i..i + from.len()] == from[..] {
                        let mut next = Vec::with_capacity(w.len() - from.len() + to.len());
                        next.extend_from_slice(&w[..i]);
                        next.extend_from_slice(to);
                        next.extend_from_slice(&w[i + from.len()..]);
                        out.insert(Word::from(next));
                    }
                }
            }
        }
        out
    }

    fn check_word(&self, w: &[Symbol]) -> Result<()> {
        for &s in w {
            if !s.is_positive() {
                return Err(Error::NotPositive { symbol: s });
            }
            if s.letter_index() as usize > self.alphabet_size {
                return Err(Error::SymbolOutOfAlphabet { symbol: s, k: self.alphabet_size });
            }
        }
        Ok(())
    }
}

struct Exploration {
    class: BTreeSet<Word>,
    pruned: bool,
}

fn explore(w: &[Symbol], system: &EquationSystem, cap: usize) -> Result<Exploration> {
    if cap < w.len() {
        return Err(Error::CapTooSmall { cap, len: w.len() });
    }
    system.check_word(w)?;
    let start = Word::from(w.to_vec());
    let mut class = BTreeSet::new();
    let mut queue = VecDeque::new();
    let mut pruned = false;
    class.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        for next in system.neighbours(&cur) {
            if next.len() > cap {
                pruned = true;
                continue;
            }
            if class.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(Exploration { class, pruned })
}

/// All words reachable from `w` by equation rewrites without exceeding
/// `length_cap` along the way.
pub fn eq_class_bfs(w: &[Symbol], system: &EquationSystem, length_cap: usize) -> Result<BTreeSet<Word>> {
    explore(w, system, length_cap).map(|e| e.class)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RgResult {
    /// Shortest words found in the explored class.
    pub representatives: BTreeSet<Word>,
    /// True when no rewrite was cut off by the cap; the representatives are
    /// then exactly the generalized reduced representations.
    pub exhaustive: bool,
}

/// Generalized reduced representations: the shortest members of the
/// explored equivalence class of `w`.
pub fn rg(w: &[Symbol], system: &EquationSystem, length_cap: usize) -> Result<RgResult> {
    let e = explore(w, system, length_cap)?;
    let min = e.class.iter().map(|x| x.len()).min().unwrap_or(0);
    let representatives = e.class.into_iter().filter(|x| x.len() == min).collect();
    Ok(RgResult { representatives, exhaustive: !e.pruned })
}

/// Census of `r_g((abc)*)` under commutation against the equal-count words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RgCensus {
    pub max_len: usize,
    /// `(length, |r_g| members, equal-count words)` for each length `0..=max_len`.
    pub per_length: Vec<(usize, usize, usize)>,
    /// Whether the two sets coincide at every length.
    pub matches: bool,
}

impl fmt::Display for RgCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "r_g((abc)*) under ab=ba, ac=ca, bc=cb, up to length {}", self.max_len)?;
        for &(len, rg_count, census) in &self.per_length {
            writeln!(f, "length {len}: r_g {rg_count}, equal-count words {census}")?;
        }
        write!(f, "match: {}", self.matches)
    }
}

fn all_words(letters: usize, len: usize) -> Vec<Vec<Symbol>> {
    let mut out = alloc::vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * letters);
        for w in &out {
            for i in 1..=letters as u32 {
                let mut x = w.clone();
                x.push(Symbol::letter(i));
                next.push(x);
            }
        }
        out = next;
    }
    out
}

/// Compares `⋃ r_g(w)` over `w ∈ (abc)*`, `|w| ≤ max_len`, with the words
/// having equally many `a`, `b` and `c`, length by length.
pub fn rg_counterexample_check(max_len: usize) -> RgCensus {
    let system = EquationSystem::commutation(3).unwrap();
    let abc = [Symbol::letter(1), Symbol::letter(2), Symbol::letter(3)];
    let mut per_length = Vec::new();
    let mut matches = true;
    for len in 0..=max_len {
        let mut rg_words: BTreeSet<Word> = BTreeSet::new();
        if len % 3 == 0 {
            let w: Vec<Symbol> = abc.iter().copied().cycle().take(len).collect();
            let res = rg(&w, &system, len).unwrap();
            matches &= res.exhaustive;
            rg_words = res.representatives;
        }
        let census: BTreeSet<Word> = all_words(3, len)
            .into_iter()
            .filter(|w| {
                let c = |s: Symbol| w.iter().filter(|&&x| x == s).count();
                c(abc[0]) == c(abc[1]) && c(abc[1]) == c(abc[2])
            })
            .map(Word::from)
            .collect();
        matches &= rg_words == census;
        per_length.push((len, rg_words.len(), census.len()));
    }
    RgCensus { max_len, per_length, matches }
}
