//! Adaptive quadrature on finite and semi-infinite intervals.
//!
//! The workhorse is a globally adaptive G7K15 scheme; semi-infinite
//! integrals either go through a Gauss–Laguerre fast path (when the caller
//! declares the `u^α e^{-u}` weight shape) with adaptive fallback, or
//! through the rational substitution `u = t/(1-t)`.
//!
//! Everything is pure and reentrant; results depend only on the inputs.

mod adaptive;
mod kronrod;
mod rules;

pub use rules::{gauss_laguerre, gauss_laguerre_scaled, gauss_legendre};

pub(crate) use adaptive::{adaptive_breakpoints, geometric_breaks};

use alloc::vec::Vec;

use crate::Error;

/// Tolerances and budgets for one integration request.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureSpec {
    /// Relative tolerance (must be positive).
    pub rel_tol: f64,
    /// Absolute tolerance (non-negative).
    pub abs_tol: f64,
    /// Budget of segments the adaptive driver may create.
    pub max_subdivisions: usize,
    /// Base order for the Gauss–Laguerre fast path.
    pub rule_order: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            rel_tol: 1e-12,
            abs_tol: 1e-14,
            max_subdivisions: 400,
            rule_order: 15,
        }
    }
}

impl QuadratureSpec {
    /// Check the struct invariants.
    pub fn validate(&self) -> Result<(), Error> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::InvalidQuadratureSpec("rel_tol must be > 0"));
        }
        if !(self.abs_tol >= 0.0) {
            return Err(Error::InvalidQuadratureSpec("abs_tol must be >= 0"));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::InvalidQuadratureSpec("max_subdivisions must be >= 1"));
        }
        if self.rule_order < 2 {
            return Err(Error::InvalidQuadratureSpec("rule_order must be >= 2"));
        }
        Ok(())
    }

}

/// Outcome of an integration: a value together with the estimated error
/// and the effort spent. `converged == false` means the estimate did not
/// reach the requested tolerances; the partial value and honest error bar
/// are still reported, never a fabricated value.
#[derive(Clone, Copy, Debug)]
pub struct IntegrationResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
    /// Truncation point used by the semi-infinite fallback, if any.
    pub upper_cutoff: Option<f64>,
}

/// Declared shape of a semi-infinite integrand.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum WeightHint {
    /// No structural information: the driver substitutes `u = t/(1-t)`.
    None,
    /// The integrand contains the factor `u^α e^{-u}` (α > -1); enables
    /// the Gauss–Laguerre fast path and a certified truncation bound.
    Laguerre(f64),
}

/// Adaptive integration of `f` over `[a, b]`.
pub fn integrate_finite<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<IntegrationResult, Error> {
    spec.validate()?;
    if !(a < b) {
        return Err(Error::InvalidInterval { a, b });
    }
    Ok(adaptive::adaptive(&f, a, b, spec))
}

/// Adaptive integration of `f` over `[a, b]` seeded with interior
/// breakpoints (strictly increasing, all inside `(a, b)`).
pub fn integrate_finite_with_breaks<F: Fn(f64) -> f64>(
    f: F,
    breaks: &[f64],
    spec: &QuadratureSpec,
) -> Result<IntegrationResult, Error> {
    spec.validate()?;
    if breaks.len() < 2 || breaks.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidInterval {
            a: *breaks.first().unwrap_or(&f64::NAN),
            b: *breaks.last().unwrap_or(&f64::NAN),
        });
    }
    Ok(adaptive::adaptive_breakpoints(&f, breaks, spec))
}

/// Integration of `f` over `(0, ∞)`.
///
/// With [`WeightHint::Laguerre`], successively larger Gauss–Laguerre rules
/// are compared; if they fail to settle, the integral is truncated at `U`
/// with `u^α e^{-u} < abs_tol` beyond (the cutoff is reported in
/// [`IntegrationResult::upper_cutoff`]) and integrated adaptively.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(
    f: F,
    spec: &QuadratureSpec,
    hint: WeightHint,
) -> Result<IntegrationResult, Error> {
    spec.validate()?;
    match hint {
        WeightHint::None => Ok(semi_infinite_transformed(&f, spec)),
        WeightHint::Laguerre(alpha) => {
            if !(alpha > -1.0) {
                return Err(Error::InvalidLaguerreAlpha(alpha));
            }
            if let Some(fast) = semi_infinite_laguerre(&f, spec, alpha) {
                return Ok(fast);
            }
            Ok(semi_infinite_truncated(&f, spec, alpha))
        }
    }
}

/// Gauss–Laguerre fast path: doubled orders until two estimates agree.
pub(crate) fn semi_infinite_laguerre<F: Fn(f64) -> f64>(
    f: &F,
    spec: &QuadratureSpec,
    alpha: f64,
) -> Option<IntegrationResult> {
    let mut order = spec.rule_order.max(5);
    let mut evaluations = 0usize;
    let mut previous: Option<f64> = None;
    while order <= 320 {
        let (nodes, scaled) = gauss_laguerre_scaled(order, alpha).ok()?;
        let estimate: f64 = nodes
            .iter()
            .zip(&scaled)
            .map(|(&u, &w)| w * f(u))
            .sum();
        evaluations += order;
        if let Some(prev) = previous {
            let diff = libm::fabs(estimate - prev);
            let tol = libm::fmax(spec.abs_tol, spec.rel_tol * libm::fabs(estimate));
            if diff <= 0.5 * tol && estimate.is_finite() {
                return Some(IntegrationResult {
                    value: estimate,
                    error_estimate: diff,
                    evaluations,
                    converged: true,
                    upper_cutoff: None,
                });
            }
        }
        previous = Some(estimate);
        order *= 2;
    }
    None
}

/// Truncated fallback: integrate `[0, U]` adaptively where `U` satisfies
/// the Laguerre-weight tail bound `u^α e^{-u} < abs_tol`.
pub(crate) fn semi_infinite_truncated<F: Fn(f64) -> f64>(
    f: &F,
    spec: &QuadratureSpec,
    alpha: f64,
) -> IntegrationResult {
    let upper = laguerre_tail_cutoff(alpha, spec.abs_tol.max(1e-300));
    let breaks = truncation_breaks(alpha, upper);
    let mut result = adaptive_breakpoints(f, &breaks, spec);
    result.upper_cutoff = Some(upper);
    result
}

/// Smallest `U ≥ max(2α+20, 40)` with `u^α e^{-u} < tol` for all `u ≥ U`.
pub(crate) fn laguerre_tail_cutoff(alpha: f64, tol: f64) -> f64 {
    let mut upper: f64 = libm::fmax(2.0 * alpha + 20.0, 40.0);
    for _ in 0..64 {
        let next = libm::fmax(
            alpha * libm::log(upper.max(1.0)) - libm::log(tol),
            libm::fmax(2.0 * alpha + 20.0, 40.0),
        );
        if libm::fabs(next - upper) < 1e-9 * upper {
            upper = next;
            break;
        }
        upper = next;
    }
    libm::fmin(upper, 740.0)
}

fn truncation_breaks(alpha: f64, upper: f64) -> Vec<f64> {
    // geometric ladder, densified around the weight's peak at u ≈ α
    let mut breaks = geometric_breaks(1.0, upper);
    if alpha > 2.0 {
        for candidate in [0.5 * alpha, alpha, 1.5 * alpha] {
            if candidate < upper && breaks.iter().all(|&b| libm::fabs(b - candidate) > 0.25) {
                breaks.push(candidate);
            }
        }
        breaks.sort_unstable_by(f64::total_cmp);
    }
    breaks
}

/// Rational substitution `u = t/(1-t)` onto `(0, 1)`.
pub(crate) fn semi_infinite_transformed<F: Fn(f64) -> f64>(
    f: &F,
    spec: &QuadratureSpec,
) -> IntegrationResult {
    let g = |t: f64| {
        let one_minus = 1.0 - t;
        let u = t / one_minus;
        f(u) / (one_minus * one_minus)
    };
    let breaks = [0.0, 0.5, 0.9, 0.99, 0.999, 1.0];
    adaptive_breakpoints(&g, &breaks, spec)
}
