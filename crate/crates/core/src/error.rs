use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown algebra `{0}` (expected 1_7 .. 7_7)")]
    UnknownAlgebra(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("{d} does not divide the group order {order}")]
    NotADivisor { d: usize, order: usize },
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("{what} = {value} is out of range ({expected})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        expected: String,
    },
    #[error("4_7 is not representable over {0}: no subgroup of order > 2 and index > 2")]
    No47Subgroup(String),
    #[error("construction for {algebra} at n = {n} failed verification")]
    Unverified { algebra: String, n: usize },
    #[error("model decodes to a coloring with {0} violation(s)")]
    BadModel(usize),
    #[error("dimacs: {0}")]
    Dimacs(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn out_of_range(what: &'static str, value: usize, expected: impl Into<String>) -> Error {
    Error::OutOfRange {
        what,
        value,
        expected: expected.into(),
    }
}
