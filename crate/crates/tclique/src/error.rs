//! Crate-wide error type.

use thiserror::Error;

use crate::graph6::Graph6Error;
use crate::spectral::OrbitIterate;
use crate::transform::ShiftTrace;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),

    /// A parameter is outside an operation's domain (bad construction sizes,
    /// `u == v` shifts, dimension mismatches, ...).
    #[error("{0}")]
    Domain(String),

    /// Exact path/cycle DP asked to run past its size cap.
    #[error(
        "graph has {n} vertices; exact path/cycle DP is capped at {cap} \
         (use the construction closed forms for larger recognized graphs)"
    )]
    DpCap { n: usize, cap: usize },

    /// Power iteration hit the iteration budget; carries the last bracket.
    #[error(
        "power iteration did not converge after {iterations} iterations \
         (last bracket [{bracket_lo}, {bracket_hi}]); consider loosening the tolerance"
    )]
    NonConvergence {
        iterations: usize,
        bracket_lo: f64,
        bracket_hi: f64,
    },

    /// Orbit-reduced solver hit the iteration budget; carries trailing iterates.
    #[error("orbit solver did not converge after {iterations} iterations (trace of {} iterates attached)", trace.len())]
    OrbitNonConvergence {
        iterations: usize,
        trace: Vec<OrbitIterate>,
    },

    /// Stabilization exceeded its shift budget. The budget is generous
    /// (n^3 shifts); hitting it signals a bug, not expected input.
    #[error("stabilization exceeded the budget of {budget} shifts")]
    ShiftBudget { budget: usize, trace: Box<ShiftTrace> },

    /// A catalog line failed to parse.
    #[error("catalog line {line}: {source}")]
    Catalog {
        line: usize,
        #[source]
        source: Graph6Error,
    },

    /// Builtin isomorphism-class enumeration size cap.
    #[error("builtin enumeration supports n <= {cap}, got n = {n} (use a catalog for larger orders)")]
    EnumCap { n: usize, cap: usize },

    /// A theorem hypothesis (parameter range) is violated.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    /// An error attributed to one specific graph in a batch run.
    #[error("graph {graph6}: {source}")]
    ForGraph {
        graph6: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Tags an error with the graph6 string of the offending graph.
    pub fn for_graph(self, graph6: impl Into<String>) -> Error {
        Error::ForGraph {
            graph6: graph6.into(),
            source: Box::new(self),
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Error {
        Error::Domain(msg.into())
    }
}
