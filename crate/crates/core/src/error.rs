use thiserror::Error;

/// Failures of the exact linear-algebra kernel.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KernelError {
    #[error("{0} is not zero or a prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("family not of constant rank")]
    NotConstantRank,
    #[error("polynomial division is not exact")]
    InexactDivision,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported measuring sequence m({a},{b}) for family {family}")]
    UnsupportedMeasuringSequence { a: u32, b: u32, family: String },
    #[error("structurally zero minor: {0}")]
    StructurallyZeroMinor(String),
    #[error("fan is not smooth at ray ({},{}): neighbours ({},{}) and ({},{})", .ray.0, .ray.1, .left.0, .left.1, .right.0, .right.1)]
    NotSmooth {
        ray: (i64, i64),
        left: (i64, i64),
        right: (i64, i64),
    },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
