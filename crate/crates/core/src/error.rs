use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("field {field} does not split x^{m}-1; an extension of degree {degree} ({needed}) is required")]
    NotSplitting {
        field: String,
        m: u32,
        degree: u32,
        needed: String,
    },

    #[error("parameter constraint delta_{index}*delta_0 = delta_{index} violated")]
    ParameterConstraint { index: usize },

    #[error("expected {expected} parameters, got {got}")]
    ParameterCount { expected: usize, got: usize },

    #[error("cannot parse scalar literal {0:?}")]
    ScalarSyntax(String),

    #[error("inadmissible diagram: {0}")]
    Inadmissible(String),

    #[error("inadmissible dangle: {0}")]
    InadmissibleDangle(String),

    #[error("size mismatch: {0}")]
    Mismatch(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("enumeration of {requested} objects exceeds the budget of {budget}")]
    BudgetExceeded { requested: u128, budget: u128 },

    #[error("invalid request: {0}")]
    Invalid(String),

    #[error("malformed json: {0}")]
    Json(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
