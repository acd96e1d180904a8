use thiserror::Error;

/// Errors raised by polynomial construction, arithmetic and I/O.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SprayError {
    /// Two operands (or an operand and an index) disagree on the number of variables.
    #[error("arity mismatch: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },

    /// A coefficient was NaN or infinite.
    #[error("invalid coefficient {0}: coefficients must be finite")]
    Value(f64),

    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Zero raised to a negative power.
    #[error("singularity: variable {dim} is zero but appears with a negative exponent")]
    Singularity { dim: usize },

    /// Two unordered views from different extraction states were combined positionally.
    #[error("views have different order hashes ({left} vs {right})")]
    HashMismatch { left: String, right: String },

    #[error("format error: {0}")]
    Format(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable name `{0}`")]
    Name(String),

    /// The dense reference representation would exceed its cell budget.
    #[error("dense array would need {cells} cells (limit {limit})")]
    OracleCapacity { cells: u128, limit: usize },

    /// Exponent arithmetic left the representable range, or an exact count left 2^53.
    #[error("overflow: {0}")]
    Overflow(String),
}

impl SprayError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        SprayError::Domain(msg.into())
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        SprayError::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, SprayError>;
