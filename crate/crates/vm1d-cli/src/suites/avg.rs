//! Averaged potential: identity route, cusp slope, convexity.

use super::{x_grid, SuiteOutput};
use crate::report::CheckAcc;
use vm1d_core::potential::{v_av, v_av_identity};
use vm1d_core::Error;

pub fn run() -> Result<SuiteOutput, Error> {
    let mut checks = Vec::new();

    // direct average vs the 2V_N - (2x²/N)(V_{-1} - V_{N-1}) identity
    let mut identity = CheckAcc::new(
        "avg.identity_agreement",
        "N ∈ {1,…,6} × 49 log x ∈ [1e-3, 1e3]",
        1e-6,
    );
    for n in 1..=6u32 {
        for &x in &x_grid() {
            let a = v_av(n, x)?;
            let b = v_av_identity(n, x)?;
            identity.observe(((a - b) / a).abs(), || format!("N={n}, x={x:.6e}"));
        }
    }
    checks.push(identity.into_result());

    // cusp: one-sided slope at 0⁺ is -2/N (Richardson-extrapolated)
    let mut cusp = CheckAcc::new("avg.cusp_slope", "N ∈ {1,…,6}, one-sided h = 1e-6", 1e-6);
    for n in 1..=6u32 {
        let h = 1e-6;
        let f0 = v_av(n, 0.0)?;
        let s1 = (v_av(n, h)? - f0) / h;
        let s2 = (v_av(n, 0.5 * h)? - f0) / (0.5 * h);
        let slope = 2.0 * s2 - s1;
        cusp.observe((slope + 2.0 / n as f64).abs(), || format!("N={n}"));
    }
    checks.push(cusp.into_result());

    // V_av is convex on x > 0 (unlike the individual V_m beyond m = 1/2)
    let mut convex = CheckAcc::new(
        "avg.convexity",
        "N ∈ {1,…,6} × 25 log x, h = 0.05x",
        1e-10,
    );
    for n in 1..=6u32 {
        for &x in x_grid().iter().step_by(2) {
            let h = 0.05 * x;
            let d2 = v_av(n, x - h)? - 2.0 * v_av(n, x)? + v_av(n, x + h)?;
            convex.observe(-d2, || format!("N={n}, x={x:.6e}"));
        }
    }
    checks.push(convex.into_result());

    Ok((checks, Vec::new()))
}
