//! Automaton families whose shortest reducible words are long, and the
//! recursive words realizing them.
//!
//! State counts include the dead state, which every family appends last.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::word::{InverseAlphabet, Symbol, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `n + 1` states over `n - 2` letters; shortest reducible word has length at least `2^(n-1)`.
    Lss1,
    /// `3n + 1` states over two letters; exactly one reducible word, of length `3·2^n - 4`.
    Lss2,
    /// `n + 1` states over one letter; quadratic shortest reducible word.
    Unary,
}

impl FamilyKind {
    pub fn min_n(self) -> usize {
        match self {
            FamilyKind::Lss1 => 3,
            FamilyKind::Lss2 => 1,
            FamilyKind::Unary => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Lss1 => "lss1",
            FamilyKind::Lss2 => "lss2",
            FamilyKind::Unary => "unary",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for FamilyKind {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        match s {
            "lss1" => Ok(FamilyKind::Lss1),
            "lss2" => Ok(FamilyKind::Lss2),
            "unary" => Ok(FamilyKind::Unary),
            _ => Err(()),
        }
    }
}

/// A family member, validated against the family's minimum parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyId {
    kind: FamilyKind,
    n: usize,
}

impl FamilyId {
    pub fn new(kind: FamilyKind, n: usize) -> Result<FamilyId> {
        if n < kind.min_n() {
            return Err(Error::ParameterTooSmall { what: kind.name(), got: n, min: kind.min_n() });
        }
        Ok(FamilyId { kind, n })
    }

    pub fn kind(self) -> FamilyKind {
        self.kind
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn build(self) -> Dfa {
        match self.kind {
            FamilyKind::Lss1 => build_lss1(self.n),
            FamilyKind::Lss2 => build_lss2(self.n),
            FamilyKind::Unary => build_unary(self.n),
        }
        .expect("parameter validated")
    }
}

fn letter(i: usize) -> Symbol {
    Symbol::letter(i as u32)
}

fn inv(i: usize) -> Symbol {
    letter(i).inverse()
}

fn labelled(mut dfa: Dfa, mut labels: Vec<String>) -> Dfa {
    labels.push(String::from("q-1"));
    dfa.set_state_labels(labels);
    dfa
}

/// States `q0..q(n-1)` (ids `0..n`) plus the dead state; start `q0`,
/// accepting `q1`, alphabet `k = n - 2`.
///
/// * `q0 -1-> q1`
/// * `qa -a⁻¹-> q(a+1)` and `qa -a-> q0` for `1 ≤ a ≤ n - 2`
/// * `q(n-1) -1⁻¹-> q0`
pub fn build_lss1(n: usize) -> Result<Dfa> {
    FamilyId::new(FamilyKind::Lss1, n)?;
    let alphabet = InverseAlphabet::new(n - 2)?;
    let mut t = Vec::new();
    t.push((0, letter(1), 1));
    for a in 1..=n - 2 {
        t.push((a, inv(a), a + 1));
        t.push((a, letter(a), 0));
    }
    t.push((n - 1, inv(1), 0));
    let dfa = Dfa::from_partial(alphabet, n, 0, &[1], &t)?;
    Ok(labelled(dfa, (0..n).map(|i| format!("q{i}")).collect()))
}

/// State id layout for the two-letter family.
struct Lss2Layout {
    n: usize,
}

impl Lss2Layout {
    fn q(&self, i: usize) -> usize {
        i
    }
    fn p(&self, i: usize) -> usize {
        self.n + i
    }
    fn r(&self, i: usize) -> usize {
        2 * self.n + i - 1
    }
}

/// Letter used at level `a` of the q-chain: 1 for odd `a`, 2 for even.
fn chain_letter(a: usize) -> usize {
    if a % 2 == 1 {
        1
    } else {
        2
    }
}

/// States `q0..qn`, `p1..pn`, `r2..rn` plus the dead state; start `qn`,
/// accepting `pn`, alphabet `{1, 2}`.
///
/// * `qa -c-> q(a-1)` for `1 ≤ a ≤ n`, `c = 1` if `a` odd else `2`
/// * `pa -c-> p(a+1)` and `pa -c⁻¹-> r(a+1)` for `1 ≤ a ≤ n - 1`, `c = 2` if `a` odd else `1`
/// * `ra -c⁻¹-> q(a-1)` for `2 ≤ a ≤ n`, `c = 1` if `a` odd else `2`
/// * `q0 -1⁻¹-> p1`
///
/// The bottom edge uses `1⁻¹` because `q1 -1-> q0` is the only edge into `q0`.
pub fn build_lss2(n: usize) -> Result<Dfa> {
    FamilyId::new(FamilyKind::Lss2, n)?;
    let alphabet = InverseAlphabet::new(2)?;
    let id = Lss2Layout { n };
    let mut t = Vec::new();
    for a in 1..=n {
        t.push((id.q(a), letter(chain_letter(a)), id.q(a - 1)));
    }
    for a in 1..n {
        let c = 3 - chain_letter(a);
        t.push((id.p(a), letter(c), id.p(a + 1)));
        t.push((id.p(a), inv(c), id.r(a + 1)));
    }
    for a in 2..=n {
        t.push((id.r(a), inv(chain_letter(a)), id.q(a - 1)));
    }
    t.push((id.q(0), inv(1), id.p(1)));
    let dfa = Dfa::from_partial(alphabet, 3 * n, id.q(n), &[id.p(n)], &t)?;
    let mut labels: Vec<String> = (0..=n).map(|i| format!("q{i}")).collect();
    labels.extend((1..=n).map(|i| format!("p{i}")));
    labels.extend((2..=n).map(|i| format!("r{i}")));
    Ok(labelled(dfa, labels))
}

/// States `q0..q(n-1)` plus the dead state over `{1, 1⁻¹}`, accepting
/// `q⌊n/2⌋`: climb on `1` up to `q⌊n/2⌋`, continue on `1⁻¹`, and wrap
/// `q(n-1) -1⁻¹-> q((n-1) mod 2)`. For `n = 0` the automaton is a single
/// accepting start state (and the dead state).
pub fn build_unary(n: usize) -> Result<Dfa> {
    let alphabet = InverseAlphabet::new(1)?;
    if n == 0 {
        let dfa = Dfa::from_partial(alphabet, 1, 0, &[0], &[])?;
        return Ok(labelled(dfa, alloc::vec![String::from("q0")]));
    }
    let half = n / 2;
    let mut t = Vec::new();
    for a in 0..half {
        t.push((a, letter(1), a + 1));
    }
    for a in half..n - 1 {
        t.push((a, inv(1), a + 1));
    }
    t.push((n - 1, inv(1), (n - 1) % 2));
    let dfa = Dfa::from_partial(alphabet, n, 0, &[half], &t)?;
    Ok(labelled(dfa, (0..n).map(|i| format!("q{i}")).collect()))
}

/// `w_n = w'_(n-1) · (n-2) · w'_(n-1) · (n-2)⁻¹ · 1⁻¹ · 1`, with
/// `w_2 = w'_2 = ε` and `w'_n` the word `w_n` without its last two symbols.
pub fn lss1_witness(n: usize) -> Result<Word> {
    if n < 2 {
        return Err(Error::ParameterTooSmall { what: "lss1 witness", got: n, min: 2 });
    }
    let mut prime: Vec<Symbol> = Vec::new();
    let mut full: Vec<Symbol> = Vec::new();
    for m in 3..=n {
        let mut next = Vec::with_capacity(2 * prime.len() + 4);
        next.extend_from_slice(&prime);
        next.push(letter(m - 2));
        next.extend_from_slice(&prime);
        next.push(inv(m - 2));
        next.push(inv(1));
        next.push(letter(1));
        prime = next[..next.len() - 2].to_vec();
        full = next;
    }
    Ok(Word::from(full))
}

/// `w_1 = 1 1⁻¹`; for `k > 1`, `w_k = c w_(k-1) c⁻¹ c⁻¹ w_(k-1) c` with
/// `c = 1` for odd `k` and `c = 2` for even `k`.
pub fn lss2_witness(k: usize) -> Result<Word> {
    if k < 1 {
        return Err(Error::ParameterTooSmall { what: "lss2 witness", got: k, min: 1 });
    }
    let mut w = alloc::vec![letter(1), inv(1)];
    for level in 2..=k {
        let c = chain_letter(level);
        let mut next = Vec::with_capacity(2 * w.len() + 4);
        next.push(letter(c));
        next.extend_from_slice(&w);
        next.push(inv(c));
        next.push(inv(c));
        next.extend_from_slice(&w);
        next.push(letter(c));
        w = next;
    }
    Ok(Word::from(w))
}
