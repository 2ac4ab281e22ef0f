//! Fourier transform checks: closed form at `m = 0`, windowed direct
//! transform, and the logarithmic blow-up at `ξ = 0`.

use super::SuiteOutput;
use crate::report::CheckAcc;
use vm1d_core::potential::{fourier_v, fourier_v_direct};
use vm1d_core::quad::QuadratureSpec;
use vm1d_core::special::exp_integral_e1;
use vm1d_core::Error;

const SQRT_2PI: f64 = 2.506_628_274_631_000_5;

pub fn run() -> Result<SuiteOutput, Error> {
    let spec = QuadratureSpec::default();
    let mut checks = Vec::new();

    // m = 0 closed form e^{ξ²/4} E₁(ξ²/4)/√(2π)
    let mut closed = CheckAcc::new(
        "fourier.m0_exponential_integral_form",
        "ξ ∈ {0.5, 1, 2, 5}",
        1e-10,
    );
    for &xi in &[0.5f64, 1.0, 2.0, 5.0] {
        let got = fourier_v(0.0, xi, &spec)?;
        let a = 0.25 * xi * xi;
        let expected = a.exp() * exp_integral_e1(a)? / SQRT_2PI;
        closed.observe(((got - expected) / expected).abs(), || format!("ξ={xi}"));
    }
    checks.push(closed.into_result());

    // windowed direct transform with analytic tail correction
    let mut direct = CheckAcc::new(
        "fourier.windowed_direct_transform",
        "m ∈ {0, 1, 2} at ξ = 1",
        1e-6,
    );
    for &m in &[0.0f64, 1.0, 2.0] {
        let a = fourier_v_direct(m, 1.0, &spec)?;
        let b = fourier_v(m, 1.0, &spec)?;
        direct.observe((a - b).abs(), || format!("m={m}"));
    }
    checks.push(direct.into_result());

    // evenness and positivity
    let mut even = CheckAcc::new("fourier.even_positive", "m ∈ {0, 1.5} × ξ ∈ {0.7, 3}", 0.0);
    for &m in &[0.0f64, 1.5] {
        for &xi in &[0.7f64, 3.0] {
            let plus = fourier_v(m, xi, &spec)?;
            let minus = fourier_v(m, -xi, &spec)?;
            even.observe((plus - minus).abs(), || format!("m={m}, ξ=±{xi}"));
            even.observe(1e-300 - plus, || format!("m={m}, ξ={xi} (positivity)"));
        }
    }
    checks.push(even.into_result());

    // logarithmic singularity: value/(|ln(ξ²/4)|/√(2π)) → 1 on a log grid
    let mut log_growth = CheckAcc::new(
        "fourier.log_singularity_growth",
        "m = 0, ξ ∈ {1e-2, 1e-3, 1e-4}",
        0.0,
    );
    let mut prev_gap = f64::INFINITY;
    for &xi in &[1e-2f64, 1e-3, 1e-4] {
        let got = fourier_v(0.0, xi, &spec)?;
        let log_term = (0.25 * xi * xi).ln().abs() / SQRT_2PI;
        let gap = (got / log_term - 1.0).abs();
        // gaps must shrink down the grid and end below 10%
        log_growth.observe(gap - prev_gap.min(0.1), || format!("ξ={xi:.0e}, gap {gap:.3}"));
        prev_gap = gap;
    }
    checks.push(log_growth.into_result());

    Ok((checks, Vec::new()))
}
