use thiserror::Error;

use crate::graph::GraphError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Graph(#[from] GraphError),

    /// An exact computation was refused because the instance is larger than
    /// the configured cap. Never replaced by an approximation.
    #[error("{what} needs {size} vertices but the configured cap is {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("edge index {index} out of range for a graph with {count} edges")]
    EdgeOutOfRange { index: usize, count: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    /// The pruned search disagreed with the brute-force enumeration.
    #[error("search/oracle discrepancy: {detail}")]
    Discrepancy { detail: String, instance: String },

    /// A proven inequality or identity failed on a concrete instance. The
    /// instance is carried in the edge-list text format.
    #[error("counterexample to {claim}: {detail}")]
    Counterexample {
        claim: &'static str,
        detail: String,
        instance: String,
    },
}

impl Error {
    /// The offending instance, for errors that carry one.
    pub fn instance(&self) -> Option<&str> {
        match self {
            Error::Counterexample { instance, .. } | Error::Discrepancy { instance, .. } => {
                Some(instance)
            }
            _ => None,
        }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::Invalid(message.into())
    }
}

pub(crate) fn counterexample(
    claim: &'static str,
    detail: impl Into<String>,
    g: &crate::graph::WeightedGraph,
) -> Error {
    Error::Counterexample {
        claim,
        detail: detail.into(),
        instance: crate::format::serialize_graph(g),
    }
}
