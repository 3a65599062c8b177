use thiserror::Error;

/// Errors surfaced by the library. Internal errors indicate a broken
/// arithmetic invariant rather than bad input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system type `{0}` (expected A1.., B2.., C3.., D4.., E6-E8, F4, G2)")]
    InvalidType(String),
    #[error("root set is not an upper ideal of the positive roots")]
    NotAnIdeal,
    #[error("root set is not an antichain")]
    NotAntichain,
    #[error("ideal is not strictly positive (it contains a simple root)")]
    NotStrict,
    #[error("k-vector violates the admissibility inequalities")]
    NotAdmissible,
    #[error("t = {t} is not coprime to the Coxeter number h = {h}")]
    NotCoprime { t: i64, h: i64 },
    #[error("coweight is not a point of D^{t}")]
    NotInSimplex { t: i64 },
    #[error("{what}: limit {limit} exceeded (needed {needed})")]
    CapExceeded {
        what: &'static str,
        limit: u128,
        needed: u128,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
