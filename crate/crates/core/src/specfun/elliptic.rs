//! Complete elliptic integral of the first kind, modulus convention:
//! K(k) = int_0^{pi/2} dtheta / sqrt(1 - k^2 sin^2 theta), K(0) = pi/2.
//!
//! The modulus (not parameter m = k^2) convention is used throughout this
//! crate because the continuation formulas feed arguments like
//! sqrt((1 - sqrt(1-z))/2) that are moduli.

use std::f64::consts::PI;

use crate::{Error, Result, ToleranceConfig};

const MAX_ITER: usize = 40;

/// Unchecked AGM evaluation for 0 <= k < 1.
pub(crate) fn elliptic_k_raw(k: f64) -> f64 {
    debug_assert!((0.0..1.0).contains(&k));
    // Complementary modulus via (1-k)(1+k) to avoid cancellation near k = 1.
    let mut a: f64 = 1.0;
    let mut b = ((1.0 - k) * (1.0 + k)).sqrt();
    for _ in 0..MAX_ITER {
        if (a - b).abs() <= 2.0 * f64::EPSILON * a {
            break;
        }
        let an = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = an;
    }
    PI / (2.0 * a)
}

/// K(k) by arithmetic–geometric mean iteration.
///
/// AGM converges quadratically, so the result is at machine precision
/// (far inside any requested tolerance); `cfg` is accepted for interface
/// uniformity with the other scalar engines.
pub fn elliptic_k(k: f64, _cfg: &ToleranceConfig) -> Result<f64> {
    if !k.is_finite() || !(0.0..1.0).contains(&k) {
        return Err(Error::domain(format!(
            "elliptic modulus must satisfy 0 <= k < 1, got {k}"
        )));
    }
    Ok(elliptic_k_raw(k))
}
