use std::fmt;

use thiserror::Error;

use crate::graph::Side;

#[derive(Debug, Error)]
pub enum Error {
    #[error("colour class {0} is empty")]
    EmptyClass(Side),
    #[error("duplicate label `{label}` in class {side}")]
    DuplicateLabel { side: Side, label: String },
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("index {index} out of range for class {side} of size {len}")]
    IndexOutOfRange { side: Side, index: usize, len: usize },
    #[error("hyperedge {0} is empty")]
    EmptyHyperedge(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("{what}: {actual} exceeds the limit of {limit}")]
    Capacity {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("{0} is not a hypertree")]
    NotAHypertree(Values),
    #[error("transfer source and target must differ (both are {0})")]
    SameEdge(usize),
    #[error("vector has length {actual}, expected {expected}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("invalid edge order: {0}")]
    InvalidOrder(String),
    #[error("invalid witness tree: {0}")]
    InvalidWitness(String),
    #[error("edge subset is empty")]
    EmptySubset,
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("no closed form available: {0}")]
    NoClosedForm(String),
    #[error("invalid transform: {0}")]
    InvalidTransform(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("counterexample cannot be replayed: {0}")]
    NotReplayable(String),
    #[error("the degree of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Value vector carried by [`Error::NotAHypertree`], displayed as `(a, b, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Values(pub Vec<u32>);

impl fmt::Display for Values {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}
