//! Letters of an inverse alphabet, words over them, and free reduction.
//!
//! A letter `i` of `Γ = {1..k}` is encoded as the integer `i`, and its formal
//! inverse as `-i`. Two adjacent symbols cancel exactly when they sum to zero.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::num::NonZeroI32;
use core::ops::Deref;

use crate::error::{Error, Result};

/// A letter or an inverse letter.
///
/// Ordered as `1 < -1 < 2 < -2 < ...`, the order used for enumeration.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Symbol(NonZeroI32);

impl Symbol {
    /// Returns `None` for zero.
    pub const fn new(value: i32) -> Option<Symbol> {
        match NonZeroI32::new(value) {
            Some(v) => Some(Symbol(v)),
            None => None,
        }
    }

    /// The letter `i` of `Γ`.
    ///
    /// Panics if `i` is zero.
    pub fn letter(i: u32) -> Symbol {
        Symbol::new(i as i32).expect("letters are numbered from 1")
    }

    pub const fn value(self) -> i32 {
        self.0.get()
    }

    pub fn inverse(self) -> Symbol {
        Symbol(-self.0)
    }

    pub const fn is_positive(self) -> bool {
        self.0.get() > 0
    }

    /// The letter of `Γ` this symbol is built on.
    pub const fn letter_index(self) -> u32 {
        self.0.get().unsigned_abs()
    }

    pub fn cancels(self, other: Symbol) -> bool {
        self.value() == -other.value()
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.letter_index(), !self.is_positive()).cmp(&(other.letter_index(), !other.is_positive()))
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// `Σ = Γ ∪ Γ⁻¹` with `Γ = {1..k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InverseAlphabet {
    k: usize,
}

impl InverseAlphabet {
    pub fn new(k: usize) -> Result<InverseAlphabet> {
        if k == 0 {
            return Err(Error::EmptyAlphabet);
        }
        Ok(InverseAlphabet { k })
    }

    /// Number of letters in `Γ`.
    pub fn k(self) -> usize {
        self.k
    }

    /// `|Σ| = 2k`.
    pub fn size(self) -> usize {
        2 * self.k
    }

    pub fn contains(self, s: Symbol) -> bool {
        (s.letter_index() as usize) <= self.k
    }

    pub fn check(self, s: Symbol) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::SymbolOutOfAlphabet { symbol: s, k: self.k })
        }
    }

    /// Dense index in `0..2k`, consistent with the symbol order.
    pub fn index_of(self, s: Symbol) -> usize {
        2 * (s.letter_index() as usize - 1) + usize::from(!s.is_positive())
    }

    pub fn symbol_at(self, index: usize) -> Symbol {
        let letter = (index / 2 + 1) as i32;
        let v = if index % 2 == 0 { letter } else { -letter };
        Symbol::new(v).unwrap()
    }

    /// All `2k` symbols in enumeration order.
    pub fn symbols(self) -> impl Iterator<Item = Symbol> + Clone {
        (0..self.size()).map(move |i| self.symbol_at(i))
    }
}

/// A finite sequence of symbols. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    /// Builds a word from raw integers. Zero entries are rejected.
    pub fn from_values(values: &[i32]) -> Option<Word> {
        values.iter().map(|&v| Symbol::new(v)).collect::<Option<Vec<_>>>().map(Word)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn values(&self) -> Vec<i32> {
        self.0.iter().map(|s| s.value()).collect()
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `|w|_a`.
    pub fn count(&self, s: Symbol) -> usize {
        self.0.iter().filter(|&&x| x == s).count()
    }

    /// Compares by length first, then lexicographically.
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Word {
        Word(v)
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Space-separated signed integers; the empty word prints as nothing.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// The unique reduced word `r(w)`.
///
/// Single left-to-right pass: a symbol that cancels the top of the stack pops
/// it, otherwise it is pushed.
pub fn reduce(w: &[Symbol]) -> Word {
    let mut stack: Vec<Symbol> = Vec::with_capacity(w.len());
    for &s in w {
        match stack.last() {
            Some(&top) if top.cancels(s) => {
                stack.pop();
            }
            _ => stack.push(s),
        }
    }
    Word(stack)
}

pub fn is_reduced(w: &[Symbol]) -> bool {
    w.windows(2).all(|pair| !pair[0].cancels(pair[1]))
}

/// `r(w) = ε`.
pub fn is_reducible(w: &[Symbol]) -> bool {
    w.len() % 2 == 0 && reduce(w).is_empty()
}

/// `w⁻¹`: reversed, each symbol inverted.
pub fn invert_word(w: &[Symbol]) -> Word {
    w.iter().rev().map(|s| s.inverse()).collect()
}

/// Every `w'` with `w ⊢ w'`, i.e. one cancellation of an adjacent inverse pair.
pub fn one_step_reductions(w: &[Symbol]) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for i in 0..w.len().saturating_sub(1) {
        if w[i].cancels(w[i + 1]) {
            let mut v = Vec::with_capacity(w.len() - 2);
            v.extend_from_slice(&w[..i]);
            v.extend_from_slice(&w[i + 2..]);
            out.insert(Word(v));
        }
    }
    out
}

/// Drops every inverse letter.
pub fn positive_projection(w: &[Symbol]) -> Word {
    w.iter().copied().filter(|s| s.is_positive()).collect()
}

/// The first `2^k - 1` terms of the ruler sequence `ν₂(1), ν₂(2), ...`.
pub fn ruler_prefix(k: u32) -> Result<Vec<u32>> {
    if k == 0 {
        return Err(Error::ParameterTooSmall { what: "ruler prefix order", got: 0, min: 1 });
    }
    if k >= usize::BITS {
        return Err(Error::ParameterTooSmall { what: "ruler prefix order (too large)", got: k as usize, min: 1 });
    }
    Ok((1usize..(1usize << k)).map(|n| n.trailing_zeros()).collect())
}
