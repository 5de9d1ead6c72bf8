//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not an admissible characteristic (need a prime with 5 < p <= 2^31)")]
    BadCharacteristic(u64),

    #[error("division by zero in GF({0})")]
    DivisionByZero(u64),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("skew matrix must have {expected} size for this operation, got {got}")]
    BadMatrixSize { expected: &'static str, got: usize },

    #[error("inconsistent degree pattern: no row weights realize it")]
    InconsistentDegreePattern,

    #[error("entry ({row},{col}) has degree {got}, pattern requires {want}")]
    DegreePatternViolation {
        row: usize,
        col: usize,
        got: u32,
        want: u32,
    },

    #[error("cannot draw a degree-{degree} form: every membership generator has larger degree")]
    EmptyForm { degree: u32 },

    #[error("variety is {dim}-dimensional, not a curve; genus undefined")]
    NotACurve { dim: isize },

    #[error("resolution exceeded the length bound {0} (Hilbert syzygy theorem violated: engine bug)")]
    ResolutionTooLong(usize),

    #[error("all generators must be quadrics, found degree {0}")]
    NotQuadric(u32),

    #[error("expected double-point count 2(d - g + 1) = {0} is not positive; construction inconsistent")]
    BadDoublePoints(i64),

    #[error("unknown curve type tag `{0}`")]
    UnknownType(String),

    #[error("genericity failure for type {type_tag} after {attempts} attempts: {diagnostics}")]
    GenericityFailure {
        type_tag: String,
        attempts: u32,
        diagnostics: String,
    },

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
