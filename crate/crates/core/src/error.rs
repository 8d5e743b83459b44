use thiserror::Error;

use crate::graph::ComponentReport;
use crate::oracle::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be at least 2 and at most 65536, got {0}")]
    InvalidAlphabet(u32),

    #[error("symbol {symbol} is out of range for alphabet size {k}")]
    SymbolOutOfRange { symbol: u32, k: u32 },

    #[error("alphabet mismatch: expected k={expected}, found k={found}")]
    AlphabetMismatch { expected: u32, found: u32 },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("resource cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("not an n-window sequence: windows at {first} and {second} coincide")]
    DuplicateWindow { first: usize, second: usize },

    #[error("not an orientable sequence: {0}")]
    NotOrientable(Violation),

    #[error("subgraph is not connected: {0}")]
    Disconnected(ComponentReport),

    #[error("unknown tuple kind `{0}`")]
    UnknownKind(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
