//! Quadrature engines: adaptive finite-interval integration (Gauss–Kronrod
//! 7/15 with bisection), semi-infinite integration with certified
//! exponential- or algebraic-tail truncation, and tensor-product tanh-sinh
//! quadrature over [0, pi]^n.
//!
//! Everything here is deterministic: identical inputs produce bit-identical
//! results, and panel sums are reduced in interval order.

mod cube;
mod finite;
mod gk;
mod semi;

pub use cube::integrate_cube;
pub use finite::integrate_finite;
pub use semi::{integrate_semiinfinite, TailSpec};

#[cfg(test)]
pub(crate) use cube::tensor_level_sum;

/// Error estimates are floored at this multiple of |value| so that a zero
/// error is never reported.
pub(crate) const ERROR_FLOOR_REL: f64 = 1e-15;

/// Outcome of a numeric integration.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadResult {
    /// The integral estimate.
    pub value: f64,
    /// Nonnegative error estimate (nested-rule differences plus any
    /// truncated-tail bound).
    pub error_estimate: f64,
    /// Number of integrand evaluations spent.
    pub evaluations: u64,
    /// Where the semi-infinite range was cut; `None` for finite ranges.
    pub truncation_point: Option<f64>,
}

impl QuadResult {
    pub(crate) fn floor_error(mut self) -> Self {
        self.error_estimate = self
            .error_estimate
            .max(ERROR_FLOOR_REL * self.value.abs())
            .max(f64::MIN_POSITIVE);
        self
    }
}
