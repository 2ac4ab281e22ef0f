//! Delta-limit scaling: Gaussian pairings and windowed mass stability.

use super::SuiteOutput;
use crate::report::CheckAcc;
use vm1d_core::models::{delta_mass_unit_window, delta_pairing};
use vm1d_core::quad::QuadratureSpec;
use vm1d_core::Error;

pub fn run() -> Result<SuiteOutput, Error> {
    let spec = QuadratureSpec::default();
    let gaussian = |x: f64| (-x * x).exp();
    let mut checks = Vec::new();

    // pairing against e^{-x²} approaches 1 inside the oracle-set bands
    let mut bands = CheckAcc::new(
        "delta.gaussian_pairing_bands",
        "m = 0, β ∈ {1e2, 1e4, 1e6}, bands 35%/20%/12%",
        0.0,
    );
    let mut gaps = Vec::new();
    for &(beta, band) in &[(1e2f64, 0.35f64), (1e4, 0.20), (1e6, 0.12)] {
        let pairing = delta_pairing(0.0, beta, gaussian, &spec)?;
        let gap = (pairing - 1.0).abs();
        bands.observe(gap - band, || format!("β={beta:.0e}: pairing {pairing:.4}"));
        gaps.push((beta, gap));
    }
    checks.push(bands.into_result());

    // …and monotonically: each decade of β shrinks the gap
    let mut monotone = CheckAcc::new(
        "delta.gaussian_pairing_monotone",
        "gap(1e6) < gap(1e4) < gap(1e2)",
        0.0,
    );
    for pair in gaps.windows(2) {
        monotone.observe(pair[1].1 - pair[0].1, || {
            format!("β={:.0e} → {:.0e}", pair[0].0, pair[1].0)
        });
    }
    checks.push(monotone.into_result());

    // zero test function pairs to exactly zero
    let mut zero_fn = CheckAcc::new("delta.zero_testfn", "m = 0, β = 1e4", 0.0);
    zero_fn.observe(delta_pairing(0.0, 1e4, |_| 0.0, &spec)?.abs(), || {
        "φ ≡ 0".to_string()
    });
    checks.push(zero_fn.into_result());

    // mass over the unit window is β-stable within 10% between 1e4, 1e6
    let mut mass = CheckAcc::new("delta.unit_window_mass_stability", "m = 0", 0.0);
    let m4 = delta_mass_unit_window(0.0, 1e4, &spec)?;
    let m6 = delta_mass_unit_window(0.0, 1e6, &spec)?;
    mass.observe((m4 / m6 - 1.0).abs() - 0.10, || {
        format!("mass(1e4)={m4:.4}, mass(1e6)={m6:.4}")
    });
    checks.push(mass.into_result());

    Ok((checks, Vec::new()))
}
