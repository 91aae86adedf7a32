use thiserror::Error;

use crate::quad::QuadResult;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside an operation's validity region.
    #[error("domain error: {0}")]
    Domain(String),

    /// A hypergeometric series was requested outside its convergence region.
    #[error("hypergeometric series diverges for the given parameters and argument")]
    Divergent,

    /// An evaluation budget ran out before the tolerance was met. Carries the
    /// best estimate obtained so far.
    #[error("evaluation budget exhausted; best estimate {} with error estimate {}", best.value, best.error_estimate)]
    BudgetExceeded { best: QuadResult },

    /// The integrand returned NaN or an infinity at an interior node.
    #[error("integrand returned a non-finite value at x = {at}")]
    NonFinite { at: f64 },

    /// A semi-infinite tail specification that does not integrate.
    #[error("tail specification is not integrable (needs decay_rate > 0, or decay_rate = 0 with power > 1)")]
    TailNotIntegrable,

    /// No candidate reading of the I_0^3 Laplace-transform formula matched
    /// the quadrature oracle.
    #[error("no candidate reading matches the quadrature oracle: {evidence}")]
    NoCandidateMatches { evidence: String },

    /// The analytic continuation cannot produce a trustworthy real value.
    #[error("analytic continuation unresolved: {0}")]
    ContinuationUnresolved(String),

    /// An identity name that the harness does not know.
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for verdicts that reflect a documented open question rather than
    /// a numerical failure.
    pub fn is_unresolved(&self) -> bool {
        matches!(
            self,
            Error::ContinuationUnresolved(_) | Error::NoCandidateMatches { .. }
        )
    }
}
