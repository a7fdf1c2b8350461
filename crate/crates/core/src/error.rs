use thiserror::Error;

/// Errors raised by the exact-arithmetic and geometry layers.
///
/// Indices carried in variants are 1-based, matching the `e1..e7` frame
/// used in every printed report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not nilpotent of degree <= {0}")]
    NotNilpotent(usize),

    #[error("metric is degenerate")]
    DegenerateMetric,

    #[error("not an element of h^I: entry ({row},{col}) is {found}, expected {expected}")]
    NotInFamily {
        row: usize,
        col: usize,
        found: String,
        expected: String,
    },

    #[error("Jacobi identity fails at ({i},{j},{k}) component {l}: {residual}")]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        residual: String,
    },

    #[error("subspace is not invariant under the actor; witness {witness}")]
    InvarianceViolation { witness: String },

    #[error("span closure did not stabilize after {0} passes")]
    ClosureDidNotStabilize(usize),

    #[error("structure step `{step}` failed: {detail}")]
    Structure { step: &'static str, detail: String },

    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
