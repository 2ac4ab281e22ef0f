//! Pinch bounds, monotonicity, and scaling structure.

use super::{m_grid, x_grid, SuiteOutput, ValueTable, SLACK};
use crate::report::{CheckAcc, FaultInjection};
use vm1d_core::potential::{bracket, g_k, v_asymptotic, v_auto, v_closed_m0};
use vm1d_core::Error;

pub fn run(fault: FaultInjection) -> Result<SuiteOutput, Error> {
    let table = ValueTable::build()?;
    let grid_desc = "m ∈ {0, 0.5, …, 20} × 49 log x ∈ [1e-3, 1e3]";
    let mut checks = Vec::new();

    // (a) pinch containment, with the optional injected fault on the
    // upper bound for harness self-tests
    let mut containment = CheckAcc::new("bounds.bracket_containment", grid_desc, SLACK);
    let shift = match fault {
        FaultInjection::BoundsUpperShift => 1e-3,
        FaultInjection::None => 0.0,
    };
    for (mi, &m) in table.m_values.iter().enumerate() {
        if !(m > 0.0) {
            continue;
        }
        for (xi, &x) in table.x_values.iter().enumerate() {
            let value = table.values[mi][xi];
            let (lo, hi) = bracket(m, x)?;
            let hi = hi - shift;
            let violation = (lo - value).max(value - hi);
            containment.observe(violation, || format!("m={m}, x={x:.6e}"));
        }
    }
    checks.push(containment.into_result());

    // (b) decreasing in m, and V_m < 1/x
    let mut dec_m = CheckAcc::new("bounds.decreasing_in_m", grid_desc, SLACK);
    let mut below_coulomb = CheckAcc::new("bounds.below_coulomb", grid_desc, SLACK);
    for (mi, &m) in table.m_values.iter().enumerate() {
        for (xi, &x) in table.x_values.iter().enumerate() {
            let value = table.values[mi][xi];
            below_coulomb.observe(value - 1.0 / x, || format!("m={m}, x={x:.6e}"));
            for delta_idx in [1usize, 2] {
                if mi + delta_idx >= table.m_values.len() {
                    continue;
                }
                let shifted = table.values[mi + delta_idx][xi];
                dec_m.observe(shifted - value, || {
                    format!("m={m}, δ={}, x={x:.6e}", 0.5 * delta_idx as f64)
                });
            }
        }
    }
    checks.push(dec_m.into_result());
    checks.push(below_coulomb.into_result());

    // (c) m·V_m increasing in m
    let mut mv_inc = CheckAcc::new("bounds.m_v_increasing", grid_desc, SLACK);
    for (mi, &m) in table.m_values.iter().enumerate() {
        if mi + 1 >= table.m_values.len() {
            continue;
        }
        let m_next = table.m_values[mi + 1];
        for (xi, &x) in table.x_values.iter().enumerate() {
            let a = m * table.values[mi][xi];
            let b = m_next * table.values[mi + 1][xi];
            mv_inc.observe(a - b, || format!("m={m}, x={x:.6e}"));
        }
    }
    checks.push(mv_inc.into_result());

    // (f) decreasing in x
    let mut dec_x = CheckAcc::new("bounds.decreasing_in_x", grid_desc, SLACK);
    for (mi, &m) in table.m_values.iter().enumerate() {
        for xi in 0..table.x_values.len() - 1 {
            let a = table.values[mi][xi];
            let b = table.values[mi][xi + 1];
            dec_x.observe(b - a, || {
                format!("m={m}, x={:.6e}", table.x_values[xi])
            });
        }
    }
    checks.push(dec_x.into_result());

    // (g) a·V_m(a·x) increasing in a, on a coarser subgrid
    let amplitudes = [0.5, core::f64::consts::FRAC_1_SQRT_2, 1.0, core::f64::consts::SQRT_2, 2.0];
    let mut scaling = CheckAcc::new(
        "bounds.amplitude_scaling",
        "m ∈ {0, 2, …, 20} × 13 log x, a ∈ {1/2, 1/√2, 1, √2, 2}",
        SLACK,
    );
    let m_sub: Vec<f64> = m_grid().into_iter().step_by(4).collect();
    let x_sub: Vec<f64> = x_grid().into_iter().step_by(4).collect();
    for &m in &m_sub {
        for &x in &x_sub {
            let mut prev = f64::NEG_INFINITY;
            for &a in &amplitudes {
                let scaled = a * v_auto(m, a * x)?.value;
                scaling.observe(prev - scaled, || format!("m={m}, x={x:.6e}, a={a}"));
                prev = scaled;
            }
        }
    }
    checks.push(scaling.into_result());

    // (l) large-x pinch on 1/x - V_m for x ≥ 5
    let mut tail = CheckAcc::new(
        "bounds.large_x_pinch",
        "m grid × log x ∈ [5, 1e3]",
        SLACK,
    );
    for (mi, &m) in table.m_values.iter().enumerate() {
        for (xi, &x) in table.x_values.iter().enumerate() {
            if x < 5.0 {
                continue;
            }
            let gap = 1.0 / x - table.values[mi][xi];
            let lower = m / (2.0 * (x * x + m).powf(1.5));
            let upper = (m + 1.0) / (2.0 * x * x * x);
            tail.observe((lower - gap).max(gap - upper), || {
                format!("m={m}, x={x:.6e}")
            });
        }
    }
    checks.push(tail.into_result());

    // m = 0 specialization: g_π(x) ≤ V_0(x) < g_4(x)
    let mut g_bounds = CheckAcc::new("bounds.g_k_bounds_m0", "49 log x ∈ [1e-3, 1e3]", SLACK);
    for &x in &table.x_values {
        let v0 = v_closed_m0(x)?;
        let lo = g_k(x, core::f64::consts::PI);
        let hi = g_k(x, 4.0);
        g_bounds.observe((lo - v0).max(v0 - hi), || format!("x={x:.6e}"));
    }
    checks.push(g_bounds.into_result());

    // order-2 truncation error falls like x^{-7}: doubling x must shrink
    // it by at least 2⁵
    let mut decay = CheckAcc::new(
        "bounds.asymptotic_order2_error_decay",
        "m ∈ {0, 1, 2, 5}, x ∈ {10, 20, 40}",
        0.0,
    );
    for &m in &[0.0f64, 1.0, 2.0, 5.0] {
        for &x in &[10.0f64, 20.0] {
            let err_here = (v_asymptotic(m, x, 2)?.value - v_auto(m, x)?.value).abs();
            let err_doubled = (v_asymptotic(m, 2.0 * x, 2)?.value - v_auto(m, 2.0 * x)?.value).abs();
            decay.observe(32.0 * err_doubled - err_here, || {
                format!("m={m}, x={x} (ratio {:.1})", err_here / err_doubled)
            });
        }
    }
    checks.push(decay.into_result());

    Ok((checks, Vec::new()))
}
