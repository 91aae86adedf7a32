//! Adaptive integration over a finite interval.

use super::gk::adaptive;
use super::QuadResult;
use crate::{Error, Result, ToleranceConfig};

/// Integrates `f` over (a, b) by adaptive bisection with a nested 7/15
/// Gauss–Kronrod rule per panel. Endpoints are never evaluated, so
/// integrable endpoint singularities are allowed.
pub fn integrate_finite<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    cfg: &ToleranceConfig,
) -> Result<QuadResult> {
    if !a.is_finite() || !b.is_finite() || !(a < b) {
        return Err(Error::domain(format!(
            "integration bounds must be finite with a < b, got [{a}, {b}]"
        )));
    }
    adaptive(&f, &[(a, b)], cfg, 0.0, None)
}
