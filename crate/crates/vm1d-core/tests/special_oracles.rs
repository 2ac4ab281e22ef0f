//! Independent quadrature oracles for the scalar special functions.
//!
//! Each function is recomputed from an integral representation using only
//! the adaptive integrator — a code path that shares nothing with the
//! rational approximations under test.

use vm1d_core::quad::{integrate_semi_infinite, QuadratureSpec, WeightHint};
use vm1d_core::special::{erfcx, exp_integral_e1, gammafn};

fn spec() -> QuadratureSpec {
    // 1e-13 relative is the practical floor of the adaptive scheme: the
    // per-segment error estimates bottom out near 50·ε·∫|f|
    QuadratureSpec {
        rel_tol: 1e-13,
        abs_tol: 1e-15,
        max_subdivisions: 2000,
        ..QuadratureSpec::default()
    }
}

#[test]
fn erfcx_matches_its_integral_representation() {
    // erfcx(x) = (2/√π) ∫₀^∞ e^{-s² - 2sx} ds  (t = x + s shifts the
    // complementary error integral; no overflow anywhere)
    let two_over_sqrt_pi = 2.0 / core::f64::consts::PI.sqrt();
    for &x in &[
        0.0, 0.05, 0.2, 0.46875, 0.469, 1.0, 2.0, 3.0, 3.999, 4.0, 4.001, 6.0, 10.0, 25.0, 100.0,
        1000.0,
    ] {
        let oracle = integrate_semi_infinite(
            |s: f64| (-s * s - 2.0 * s * x).exp(),
            &spec(),
            WeightHint::None,
        )
        .unwrap();
        assert!(oracle.converged);
        let expected = two_over_sqrt_pi * oracle.value;
        let got = erfcx(x).unwrap();
        let rel = ((got - expected) / expected).abs();
        assert!(rel < 2e-13, "x = {x}: {got} vs {expected} (rel {rel:.2e})");
    }
}

#[test]
fn e1_matches_its_integral_representation() {
    // E1(x) = e^{-x} ∫₀^∞ e^{-xs}/(1+s) ds
    for &x in &[0.01, 0.1, 0.5, 0.999, 1.0, 1.001, 2.0, 5.0, 10.0, 30.0] {
        let oracle = integrate_semi_infinite(
            |s: f64| (-x * s).exp() / (1.0 + s),
            &spec(),
            WeightHint::None,
        )
        .unwrap();
        assert!(oracle.converged, "x = {x}");
        let expected = (-x).exp() * oracle.value;
        let got = exp_integral_e1(x).unwrap();
        let rel = ((got - expected) / expected).abs();
        assert!(rel < 1e-12, "x = {x}: {got} vs {expected} (rel {rel:.2e})");
    }
}

#[test]
fn gamma_matches_laguerre_quadrature() {
    // Γ(a+1) = ∫₀^∞ u^a e^{-u} du through the Laguerre fast path
    for &a in &[0.5, 1.5, 2.5, 4.25, 7.0] {
        let oracle = integrate_semi_infinite(
            |u: f64| u.powf(a) * (-u).exp(),
            &spec(),
            WeightHint::Laguerre(a),
        )
        .unwrap();
        assert!(oracle.converged);
        let got = gammafn(a + 1.0).unwrap();
        let rel = ((got - oracle.value) / oracle.value).abs();
        assert!(rel < 1e-12, "a = {a}: {got} vs {} (rel {rel:.2e})", oracle.value);
    }
}
