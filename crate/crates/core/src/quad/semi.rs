//! Semi-infinite integration with certified tail truncation.

use super::gk::adaptive;
use super::QuadResult;
use crate::{Error, Result, ToleranceConfig};

/// Caller-certified envelope for the integrand on x >= 1:
/// |f(x)| <= envelope_constant * e^{-decay_rate * x} * x^{-power}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailSpec {
    pub decay_rate: f64,
    pub power: f64,
    pub envelope_constant: f64,
}

impl TailSpec {
    pub fn new(decay_rate: f64, power: f64, envelope_constant: f64) -> Result<Self> {
        let spec = TailSpec {
            decay_rate,
            power,
            envelope_constant,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let ok = self.envelope_constant > 0.0
            && self.envelope_constant.is_finite()
            && self.decay_rate.is_finite()
            && self.power.is_finite()
            && (self.decay_rate > 0.0 || (self.decay_rate == 0.0 && self.power > 1.0));
        if ok {
            Ok(())
        } else {
            Err(Error::TailNotIntegrable)
        }
    }

    /// Upper bound on |int_T^inf f| for T >= 1 (and T >= 2|power|/decay_rate
    /// when power < 0, which `truncation_point` guarantees).
    fn tail_bound(&self, t: f64) -> f64 {
        let (a, p, c) = (self.decay_rate, self.power, self.envelope_constant);
        if a > 0.0 {
            let k = if p >= 0.0 { 1.0 } else { 2.0 };
            k * c * (-a * t).exp() * t.powf(-p) / a
        } else {
            c * t.powf(1.0 - p) / (p - 1.0)
        }
    }

    /// Smallest convenient T with tail_bound(T) <= half_tol.
    fn truncation_point(&self, half_tol: f64) -> f64 {
        let mut t: f64 = if self.decay_rate > 0.0 {
            (2.0 * self.power.abs() / self.decay_rate).max(1.0)
        } else {
            // Closed form for the pure algebraic tail.
            let p = self.power;
            (self.envelope_constant / ((p - 1.0) * half_tol))
                .powf(1.0 / (p - 1.0))
                .max(1.0)
        };
        // Doubling is monotone and cheap; 1100 doublings cover any f64 T.
        for _ in 0..1100 {
            if self.tail_bound(t) <= half_tol {
                break;
            }
            t *= 2.0;
        }
        t
    }
}

/// Integrates `f` over (0, inf): the range is cut at a point T certified by
/// the tail envelope to discard at most abs_tol/2, and [0, T] is integrated
/// adaptively with seed panels split at x = 1 and log-spaced beyond.
///
/// The discarded-tail bound is included in the reported error estimate, and
/// the cut point is reported as `truncation_point`.
pub fn integrate_semiinfinite<F: Fn(f64) -> f64>(
    f: F,
    tail: &TailSpec,
    cfg: &ToleranceConfig,
) -> Result<QuadResult> {
    tail.validate()?;
    let half_tol = 0.5 * cfg.abs_tol;
    let t = tail.truncation_point(half_tol);
    let tail_err = tail.tail_bound(t);

    let mut seeds: Vec<(f64, f64)> = Vec::new();
    if t <= 1.0 {
        seeds.push((0.0, t));
    } else {
        seeds.push((0.0, 1.0));
        let mut lo = 1.0f64;
        while lo < t {
            let hi = (lo * 2.0).min(t);
            seeds.push((lo, hi));
            lo = hi;
        }
    }

    adaptive(&f, &seeds, cfg, tail_err, Some(t))
}
