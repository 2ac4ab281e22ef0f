//! Delta-function scaling limit of the regularized potentials.
//!
//! Scaled as `(β/(2 ln β)) V_m(βx)`, the family converges to `δ(x)` as
//! `β → ∞` in the tempered-distribution sense (pairings with Schwartz
//! test functions converge to the value at 0). The factor 2 normalizes
//! the logarithmically divergent `1/|x|` mass: over any fixed window,
//! `∫ (β/ln β) V_m(βx) dx → 2`, so the unnormalized form tends to `2δ`.
//!
//! Convergence is slow — `O(1/ln β)` — which the pairing sequence makes
//! visible.

use crate::potential::v_auto;
use crate::quad::{self, QuadratureSpec};
use crate::Error;

fn check_beta(beta: f64) -> Result<f64, Error> {
    if !(beta > core::f64::consts::E) {
        return Err(Error::InvalidModelParameter("delta scaling needs beta > e"));
    }
    Ok(libm::log(beta))
}

/// `(β/(2 ln β)) V_m(β|x|)`, the δ-normalized scaled potential.
pub fn delta_scaled(m: f64, beta: f64, x: f64) -> Result<f64, Error> {
    let log_beta = check_beta(beta)?;
    Ok(beta / (2.0 * log_beta) * v_auto(m, libm::fabs(beta * x))?.value)
}

/// Pairing `∫ delta_scaled(m, β, x)·φ(x) dx` for a smooth rapidly
/// decaying `φ`; approaches `φ(0)` as `β` grows.
///
/// The test function is sampled over `|x| ≤ 40` (i.e. `|βx| ≤ 40β` after
/// the substitution), plenty for Schwartz-class decay.
pub fn delta_pairing<F: Fn(f64) -> f64>(
    m: f64,
    beta: f64,
    testfn: F,
    spec: &QuadratureSpec,
) -> Result<f64, Error> {
    let log_beta = check_beta(beta)?;
    spec.validate()?;
    let integrand = |y: f64| {
        let vm = v_auto(m, y).map(|r| r.value).unwrap_or(f64::NAN);
        vm * (testfn(y / beta) + testfn(-y / beta))
    };
    let upper = 40.0 * beta;
    let mut breaks = quad::geometric_breaks(1e-3, upper);
    breaks.dedup_by(|a, b| a == b);
    let eff = QuadratureSpec {
        rel_tol: libm::fmax(spec.rel_tol, 1e-10),
        abs_tol: libm::fmax(spec.abs_tol, 1e-12),
        max_subdivisions: spec.max_subdivisions.max(2000),
        rule_order: spec.rule_order,
    };
    let res = quad::adaptive_breakpoints(&integrand, &breaks, &eff);
    if !res.converged || !res.value.is_finite() {
        return Err(Error::QuadratureNoConvergence("delta pairing integral"));
    }
    Ok(res.value / (2.0 * log_beta))
}

/// Mass of the scaled potential over the unit window,
/// `∫_{|x|≤1} delta_scaled(m, β, x) dx = (1/ln β) ∫₀^β V_m(y) dy → 1`.
pub fn delta_mass_unit_window(m: f64, beta: f64, spec: &QuadratureSpec) -> Result<f64, Error> {
    let log_beta = check_beta(beta)?;
    spec.validate()?;
    let integrand = |y: f64| v_auto(m, y).map(|r| r.value).unwrap_or(f64::NAN);
    let breaks = quad::geometric_breaks(1e-3, beta);
    let eff = QuadratureSpec {
        rel_tol: libm::fmax(spec.rel_tol, 1e-10),
        abs_tol: libm::fmax(spec.abs_tol, 1e-12),
        max_subdivisions: spec.max_subdivisions.max(2000),
        rule_order: spec.rule_order,
    };
    let res = quad::adaptive_breakpoints(&integrand, &breaks, &eff);
    if !res.converged || !res.value.is_finite() {
        return Err(Error::QuadratureNoConvergence("windowed mass integral"));
    }
    Ok(res.value / log_beta)
}
