use thiserror::Error;

/// Errors produced by shiftlab operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("graph is not right-resolving")]
    NotRightResolving,

    #[error("graph is not irreducible")]
    NotIrreducible,

    #[error("block `{0}` is not admissible")]
    Inadmissible(String),

    #[error("no synchronizing word of length <= {bound}")]
    NoSynchronizingWord { bound: usize },

    #[error("block of length {len} is shorter than the coding window {window}")]
    BlockTooShort { len: usize, window: usize },

    #[error("window `{window}` at coordinate {coordinate} is not in the code's domain")]
    UnmappedWindow { coordinate: i64, window: String },

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("code does not match its domain: {0}")]
    CodeDomainMismatch(String),

    #[error("image block `{0}` is not admissible in the codomain")]
    ImageNotInCodomain(String),

    #[error("factor maps have different codomains")]
    CodomainMismatch,

    #[error("factor map is not finite-to-one")]
    NotFiniteToOne,

    #[error("query length {requested} exceeds the oracle's horizon budget {budget}")]
    BudgetExceeded { requested: usize, budget: usize },

    #[error("operation requires a {expected} oracle")]
    KindMismatch { expected: &'static str },

    #[error("arithmetic overflow while counting blocks")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
