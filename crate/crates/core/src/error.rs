use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid signature ({f1}, {f2}, {f3}): violates {violated}")]
    InvalidSignature {
        f1: i64,
        f2: i64,
        f3: i64,
        violated: &'static str,
    },

    #[error("q-factorial of negative argument {0}")]
    NegativeFactorial(i64),

    #[error("label {label} is outside the representation: violates {violated}")]
    LabelOutOfDomain { label: String, violated: String },

    #[error("Gel'fand-Graev pattern violates {violated}")]
    PatternViolation { violated: &'static str },

    #[error("constraint violation: {0}")]
    ConstraintViolation(String),

    #[error("labels {u} and {t} carry different weights")]
    WeightMismatch { u: String, t: String },

    #[error("weight {0} has an empty weight space")]
    EmptyWeightSpace(String),

    #[error("inconsistent labels: {0}")]
    InconsistentLabels(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A generator table produced a value that breaks one of its own
    /// contracts (negative radicand, zero denominator, target outside the
    /// domain). Signals a corrupted table, never bad user input.
    #[error("table contract broken: {0}")]
    TableContract(String),
}
