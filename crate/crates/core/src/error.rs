use thiserror::Error;

use crate::properties::PropertyVerdict;

pub type Result<T, E = LabError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown atom `{0}`")]
    UnknownAtom(String),

    #[error("invalid language: {0}")]
    InvalidLanguage(String),

    #[error("{check}: universe too large ({needed} instantiations exceed the cap of {cap}); shrink the pool or the maximum set size")]
    UniverseTooLarge { check: String, needed: u64, cap: u64 },

    /// A check whose hypotheses did not hold on the universe. The verdict is
    /// the counterexample to the failed hypothesis.
    #[error("{check}: precondition `{}` does not hold", .failed.property)]
    Precondition {
        check: String,
        failed: Box<PropertyVerdict>,
    },

    #[error("operation `{0}` is not right-absorbing by construction")]
    NotRightAbsorbing(String),

    #[error("strong admissibility needs a nonempty family")]
    EmptyFamily,

    #[error("table entry {theory} => {result} is not supraclassical")]
    NotSupraclassical { theory: String, result: String },

    #[error("{0}")]
    Unsupported(String),

    #[error("config error at {path}: {message}")]
    Config { path: String, message: String },

    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl LabError {
    pub(crate) fn config(path: impl Into<String>, message: impl ToString) -> Self {
        LabError::Config {
            path: path.into(),
            message: message.to_string(),
        }
    }
}
