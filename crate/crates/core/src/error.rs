use thiserror::Error;

use crate::dsl::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("object mismatch: expected {expected}, found {found}")]
    ObjectMismatch { expected: usize, found: usize },

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("kind mismatch: expected {expected}, found {found}")]
    KindMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("{what} exceeds the size guard ({value} > {limit})")]
    SizeGuard {
        what: &'static str,
        value: u128,
        limit: u128,
    },

    #[error("flavor mismatch: {0}")]
    FlavorMismatch(String),

    #[error("not a signed permutation")]
    NotSignedPermutation,

    #[error("not an order-preserving morphism")]
    NotOrderPreserving,

    #[error("not a bimorphism: {0}")]
    NotBimorphism(String),

    #[error("model error: {0}")]
    Model(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
