use thiserror::Error;

use crate::conjugacy::SummitGraph;
use crate::normal_form::GarsideNormalForm;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("generator index {index} out of range for B{n}")]
    GeneratorOutOfRange { index: i64, n: usize },

    #[error("strand count mismatch: B{left} vs B{right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("enumeration of {what} for n = {n} refused: {size} elements exceeds cap n <= {cap}")]
    EnumerationCap {
        what: &'static str,
        n: usize,
        cap: usize,
        size: u128,
    },

    #[error("step budget of {budget} exhausted")]
    BudgetExceeded { budget: u64 },

    #[error("iteration cap of {cap} exceeded in {what}")]
    IterationCap { what: &'static str, cap: usize },

    #[error("vertex budget of {budget} exceeded ({} vertices found, {} on the frontier)", partial.vertices.len(), frontier.len())]
    VertexBudget {
        budget: usize,
        partial: Box<SummitGraph>,
        frontier: Vec<GarsideNormalForm>,
    },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors that signal an exhausted budget rather than a bad input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. } | Error::IterationCap { .. } | Error::VertexBudget { .. }
        )
    }
}
