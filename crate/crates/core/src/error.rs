use core::fmt;

use crate::word::Symbol;

/// Errors raised by constructors and operations when a precondition is violated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Alphabet parameter `k` must be at least 1.
    EmptyAlphabet,
    /// The symbol does not belong to the automaton's alphabet.
    SymbolOutOfAlphabet { symbol: Symbol, k: usize },
    /// A state id is not below the state count.
    StateOutOfRange { state: usize, state_count: usize },
    /// Automata must have at least one state.
    NoStates,
    /// Two operands were built over different alphabets.
    AlphabetMismatch { left: usize, right: usize },
    /// A family or sequence parameter is below its minimum.
    ParameterTooSmall {
        what: &'static str,
        got: usize,
        min: usize,
    },
    /// A word contains a negative symbol where only positive letters are allowed.
    NotPositive { symbol: Symbol },
    /// Balance is only defined over the one-letter inverse alphabet.
    NotUnary { symbol: Symbol },
    /// The exploration cap is shorter than the starting word.
    CapTooSmall { cap: usize, len: usize },
    /// An equation with identical sides.
    TrivialEquation,
    /// Two different targets for the same state and symbol in a deterministic automaton.
    Nondeterministic { state: usize, symbol: Symbol },
    /// The designated dead state is accepting or not a sink.
    InvalidDeadState { state: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyAlphabet => write!(f, "alphabet size k must be at least 1"),
            Error::SymbolOutOfAlphabet { symbol, k } => {
                write!(f, "symbol {symbol} is outside the alphabet with k = {k}")
            }
            Error::StateOutOfRange { state, state_count } => write!(
                f,
                "state {state} out of range for automaton with {state_count} states"
            ),
            Error::NoStates => write!(f, "automaton must have at least one state"),
            Error::AlphabetMismatch { left, right } => {
                write!(f, "alphabet mismatch: k = {left} vs k = {right}")
            }
            Error::ParameterTooSmall { what, got, min } => {
                write!(f, "{what} must be at least {min}, got {got}")
            }
            Error::NotPositive { symbol } => {
                write!(f, "symbol {symbol} is an inverse letter; only positive letters allowed")
            }
            Error::NotUnary { symbol } => {
                write!(f, "balance needs symbols 1 and -1 only, found {symbol}")
            }
            Error::CapTooSmall { cap, len } => {
                write!(f, "length cap {cap} is smaller than the word length {len}")
            }
            Error::TrivialEquation => write!(f, "equation sides must differ"),
            Error::Nondeterministic { state, symbol } => {
                write!(f, "state {state} has two different transitions on {symbol}")
            }
            Error::InvalidDeadState { state } => {
                write!(f, "state {state} cannot be the dead state: it must be a non-accepting sink")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
