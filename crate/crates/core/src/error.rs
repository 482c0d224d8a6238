use thiserror::Error;

use crate::algebra::Binomial;
use crate::lattice::{Cell, Interval, Point};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("interval {0} is not proper")]
    NotProper(Interval),

    #[error("empty: a polyomino needs at least one cell")]
    Empty,

    #[error("disconnected: cell set splits into {} components", components.len())]
    Disconnected { components: Vec<Vec<Cell>> },

    #[error("not a closed path")]
    NotClosedPath,

    #[error("vertex {0} is not a vertex of the polyomino")]
    UnknownVertex(Point),

    /// A Groebner computation ran out of steps; `partial` holds the basis
    /// elements produced so far.
    #[error("budget exceeded: Groebner computation stopped after {steps} steps")]
    GroebnerBudget { steps: u64, partial: Vec<Binomial> },

    #[error("budget exceeded: {what} stopped after {nodes} nodes")]
    SearchBudget { what: &'static str, nodes: u64 },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("too many variables: {0} (at most 128 supported)")]
    TooManyVariables(usize),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("corrupt log at line {line}: {message}")]
    CorruptLog { line: usize, message: String },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::GroebnerBudget { .. } | Error::SearchBudget { .. })
    }
}
