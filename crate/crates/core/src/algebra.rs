//! Quotients computed through reduction, and membership in `eq(L)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dfa::Dfa;
use crate::closure::reduced_language_dfa;
use crate::error::{Error, Result};
use crate::nfa::{Label, Nfa};
use crate::word::{is_reducible, reduce, InverseAlphabet, Symbol, Word};

/// An automaton whose transitions carry only letters of `Γ`.
#[derive(Debug, Clone)]
pub struct PlainLanguageAutomaton(Nfa);

impl PlainLanguageAutomaton {
    pub fn new(m: Nfa) -> Result<PlainLanguageAutomaton> {
        for (_, l, _) in m.transitions() {
            if let Label::Symbol(s) = l {
                if !s.is_positive() {
                    return Err(Error::NotPositive { symbol: s });
                }
            }
        }
        Ok(PlainLanguageAutomaton(m))
    }

    pub fn nfa(&self) -> &Nfa {
        &self.0
    }
}

/// `L1/L2 = { w : ∃x ∈ L2, wx ∈ L1 }`, computed as `r(L1 · L2⁻¹) ∩ Γ*`.
pub fn quotient(a: &PlainLanguageAutomaton, b: &PlainLanguageAutomaton) -> Result<Nfa> {
    let joined = a.0.concat(&b.0.invert_language())?;
    let reduced = reduced_language_dfa(&joined);
    let positive = Dfa::positive_words(a.0.alphabet());
    Ok(reduced.product_intersection(&positive)?.to_nfa())
}

/// Decides membership in `eq(L) = { w : r(w) ∈ r(L) }` for a fixed `L`.
#[derive(Debug, Clone)]
pub struct EqLanguage {
    reduced: Dfa,
}

impl EqLanguage {
    pub fn new(m: &Nfa) -> EqLanguage {
        EqLanguage { reduced: reduced_language_dfa(m) }
    }

    pub fn alphabet(&self) -> InverseAlphabet {
        self.reduced.alphabet()
    }

    pub fn contains(&self, w: &[Symbol]) -> Result<bool> {
        for &s in w {
            self.alphabet().check(s)?;
        }
        self.reduced.accepts(&reduce(w))
    }
}

/// `w ∈ eq(L(m))`.
pub fn eq_membership(w: &[Symbol], m: &Nfa) -> Result<bool> {
    EqLanguage::new(m).contains(w)
}

/// Bounded census of `eq({ε})` over `{1, 1⁻¹}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqDemoReport {
    pub max_len: usize,
    /// Members of `eq({ε})` up to `max_len`, shortest first.
    pub members: Vec<Word>,
    pub members_per_length: Vec<usize>,
    /// Whether the members are exactly the reducible words.
    pub matches_reducible: bool,
    /// Members whose every prefix has nonnegative balance (one-sided Dyck words).
    pub one_sided_balanced: usize,
    /// Members that are balanced only under two-sided cancellation, e.g. `1⁻¹ 1`.
    pub two_sided_only: usize,
    /// Largest `m` such that the prefixes `1^0 .. 1^m` were verified pairwise
    /// inequivalent: `1^i 1^-i` is a member and `1^j 1^-i` is not, for `i != j`.
    pub separated_prefixes: usize,
}

impl fmt::Display for EqDemoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "eq({{ε}}) over {{1, 1^-1}}, words up to length {}", self.max_len)?;
        for (len, count) in self.members_per_length.iter().enumerate() {
            writeln!(f, "length {len}: {count} members")?;
        }
        writeln!(f, "members equal reducible words: {}", self.matches_reducible)?;
        writeln!(f, "one-sided balanced members: {}", self.one_sided_balanced)?;
        writeln!(f, "members balanced only under two-sided cancellation: {}", self.two_sided_only)?;
        write!(
            f,
            "prefixes 1^0..1^{} pairwise separated by suffixes 1^-i",
            self.separated_prefixes
        )
    }
}

fn power(s: Symbol, n: usize) -> Vec<Symbol> {
    vec![s; n]
}

/// Enumerates `eq({ε})` up to `max_len` and gathers the evidence that it is
/// the non-regular set of balanced words.
pub fn eq_nonregular_demo(max_len: usize) -> EqDemoReport {
    let alphabet = InverseAlphabet::new(1).unwrap();
    let lang = EqLanguage::new(&Nfa::epsilon_only(alphabet));
    let all = Dfa::universal(alphabet).enumerate(max_len);
    let mut members = Vec::new();
    let mut members_per_length = vec![0; max_len + 1];
    let mut matches_reducible = true;
    let mut one_sided_balanced = 0;
    for w in all {
        let member = lang.contains(&w).unwrap();
        matches_reducible &= member == is_reducible(&w);
        if member {
            members_per_length[w.len()] += 1;
            let mut bal = 0i64;
            let one_sided = w.iter().all(|s| {
                bal += if s.is_positive() { 1 } else { -1 };
                bal >= 0
            });
            if one_sided {
                one_sided_balanced += 1;
            }
            members.push(w);
        }
    }
    let two_sided_only = members.len() - one_sided_balanced;

    let one = Symbol::letter(1);
    let half = max_len / 2;
    let mut separated_prefixes = 0;
    'outer: for m in 0..=half {
        for i in 0..=m {
            let mut own = power(one, i);
            own.extend(power(one.inverse(), i));
            if !lang.contains(&own).unwrap() {
                break 'outer;
            }
            for j in 0..=m {
                if j == i {
                    continue;
                }
                let mut other = power(one, j);
                other.extend(power(one.inverse(), i));
                if lang.contains(&other).unwrap() {
                    break 'outer;
                }
            }
        }
        separated_prefixes = m;
    }

    EqDemoReport {
        max_len,
        members,
        members_per_length,
        matches_reducible,
        one_sided_balanced,
        two_sided_only,
        separated_prefixes,
    }
}
