use thiserror::Error;

use crate::lattice::{DivisorClass, ValidationReport};

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected rank {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("integer overflow in lattice arithmetic")]
    Overflow,

    #[error("lattice rejected:\n{0}")]
    Inadmissible(ValidationReport),

    #[error("class {0} is not effective")]
    NotEffective(DivisorClass),

    #[error("class must be non-zero")]
    ZeroClass,

    #[error(
        "twist search for {class} exceeded |l| <= {cap} on the {side} side (last tried l = {last})"
    )]
    TwistCapExceeded {
        class: DivisorClass,
        cap: i64,
        side: &'static str,
        last: i64,
    },

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
