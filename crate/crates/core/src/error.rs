use thiserror::Error;

/// Partial diagnostics attached to an exceeded computation budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetReport {
    pub what: String,
    pub steps: u64,
    pub degree: u32,
    pub basis_size: usize,
    pub pending_pairs: usize,
}

impl std::fmt::Display for BudgetReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} (steps {}, degree {}, basis {}, pending pairs {})",
            self.what, self.steps, self.degree, self.basis_size, self.pending_pairs
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("operation requires positive characteristic")]
    CharacteristicZero,
    #[error("budget exceeded: {0}")]
    Budget(BudgetReport),
    #[error("{count} minimal generators exceed the exact-engine threshold {limit}; use reg_bracket_splitting")]
    Threshold { count: usize, limit: usize },
    #[error("invalid split hint: {0}")]
    InvalidHint(String),
    #[error("dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("empty polyhedron")]
    EmptyPolyhedron,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("evaluation failed: {0}")]
    Eval(String),
    #[error("json: {0}")]
    Json(String),
    #[error("io: {0}")]
    Io(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget(_))
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
