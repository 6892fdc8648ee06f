//! Finite automata over alphabets with formal inverses.
//!
//! Symbols are nonzero integers, `-i` being the inverse of letter `i`. The
//! crate covers free reduction of words, saturation of ε-NFAs under
//! cancellation, automata for the reduced representation `r(L)` of a regular
//! language, quotients computed through reduction, the shortest accepted word
//! that reduces to ε, the lower-bound automaton families for that length, and
//! bounded rewriting under arbitrary word equations.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod bitset;

pub mod algebra;
pub mod closure;
pub mod dfa;
pub mod error;
pub mod families;
pub mod nfa;
pub mod rewrite;
pub mod shortest;
pub mod word;

pub use bitset::BitSet;
pub use dfa::Dfa;
pub use error::{Error, Result};
pub use nfa::{Label, Nfa};
pub use word::{InverseAlphabet, Symbol, Word};
