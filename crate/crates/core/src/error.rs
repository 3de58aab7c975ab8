use thiserror::Error;

/// Errors raised by the evaluators in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{func}: argument outside its domain ({detail})")]
    Domain { func: &'static str, detail: String },

    #[error("{func}: pole at {at}")]
    Pole { func: &'static str, at: f64 },

    #[error("quadrature did not converge after {levels} levels (best estimate {best:e}, last level difference {diff:e})")]
    NotConverged { best: f64, diff: f64, levels: usize },

    #[error("T({a}, {b}, {c}) is outside the direct-summation region ({reason})")]
    ConvergenceGate {
        a: f64,
        b: f64,
        c: f64,
        reason: &'static str,
    },

    #[error("direct summation needs {needed} terms, budget is {budget}")]
    TermBudget { needed: u64, budget: u64 },

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        func,
        detail: detail.into(),
    }
}
