//! Convexity structure: `1/V_m` convex (integer `m`), `V_0` convex,
//! non-convexity of `V_m` beyond `m = 1/2`, and subadditivity.

use super::{integer_m_grid, log_space, x_grid, SuiteOutput};
use crate::report::{CheckAcc, ExploratoryItem};
use vm1d_core::potential::v_auto;
use vm1d_core::Error;

pub fn run() -> Result<SuiteOutput, Error> {
    let mut checks = Vec::new();
    let mut exploratory = Vec::new();

    // (i) second differences of 1/V_m ≥ -1e-10 for integer m
    let mut reciprocal = CheckAcc::new(
        "convexity.reciprocal_convex",
        "integer m ∈ {0,…,20} × 49 log x, h = 0.05x",
        1e-10,
    );
    for &m in &integer_m_grid() {
        for &x in &x_grid() {
            let h = 0.05 * x;
            let f = |t: f64| -> Result<f64, Error> { Ok(1.0 / v_auto(m as f64, t)?.value) };
            let d2 = f(x - h)? - 2.0 * f(x)? + f(x + h)?;
            reciprocal.observe(-d2, || format!("m={m}, x={x:.6e}"));
        }
    }
    checks.push(reciprocal.into_result());

    // (h) V_0 is convex …
    let mut v0_convex = CheckAcc::new("convexity.v0_convex", "49 log x, h = 0.05x", 1e-10);
    for &x in &x_grid() {
        let h = 0.05 * x;
        let d2 = v_auto(0.0, x - h)?.value - 2.0 * v_auto(0.0, x)?.value
            + v_auto(0.0, x + h)?.value;
        v0_convex.observe(-d2, || format!("x={x:.6e}"));
    }
    checks.push(v0_convex.into_result());

    // … but V_m is not for m > 1/2: a negative second difference must
    // exist on the probe grid near the origin (existential check)
    let mut witness = CheckAcc::new(
        "convexity.nonconvexity_witness",
        "m ∈ {1, 2, 5}, probe x ∈ {0.01, …, 0.5}, h = x/2",
        0.0,
    );
    for &m in &[1.0f64, 2.0, 5.0] {
        let mut most_negative = f64::INFINITY;
        let mut at = 0.0;
        for &x in &[0.01, 0.02, 0.05, 0.1, 0.2, 0.35, 0.5] {
            let h = 0.5 * x;
            let d2 = v_auto(m, x - h)?.value - 2.0 * v_auto(m, x)?.value
                + v_auto(m, x + h)?.value;
            if d2 < most_negative {
                most_negative = d2;
                at = x;
            }
        }
        witness.observe(most_negative, || format!("m={m}, best x={at}"));
    }
    checks.push(witness.into_result());

    // subadditivity 1/V_m(x+y) ≤ 1/V_m(x) + 1/V_m(y) on a 50×50 grid
    let mut subadd = CheckAcc::new(
        "convexity.subadditivity",
        "integer m ∈ {0,…,20} × 50×50 log (x, y) ∈ [1e-3, 1e3]²",
        1e-9,
    );
    let grid = log_space(1e-3, 1e3, 50);
    for &m in &integer_m_grid() {
        let singles: Vec<f64> = grid
            .iter()
            .map(|&x| v_auto(m as f64, x).map(|r| r.value))
            .collect::<Result<_, _>>()?;
        for i in 0..grid.len() {
            for j in i..grid.len() {
                let vxy = v_auto(m as f64, grid[i] + grid[j])?.value;
                let violation = 1.0 / vxy - 1.0 / singles[i] - 1.0 / singles[j];
                subadd.observe(violation, || {
                    format!("m={m}, x={:.4e}, y={:.4e}", grid[i], grid[j])
                });
            }
        }
    }
    checks.push(subadd.into_result());

    // exploratory: the same subadditivity for non-integer m (the
    // reciprocal convexity proof covers integers only)
    let mut worst = f64::NEG_INFINITY;
    let mut worst_at = String::new();
    let coarse = log_space(1e-2, 1e2, 12);
    for &m in &[0.5f64, 2.5, 7.5] {
        for &x in &coarse {
            for &y in &coarse {
                let violation = 1.0 / v_auto(m, x + y)?.value
                    - 1.0 / v_auto(m, x)?.value
                    - 1.0 / v_auto(m, y)?.value;
                if violation > worst {
                    worst = violation;
                    worst_at = format!("m={m}, x={x:.3e}, y={y:.3e}");
                }
            }
        }
    }
    exploratory.push(ExploratoryItem {
        id: "convexity.subadditivity_noninteger_m".to_string(),
        observation: format!(
            "worst observed violation {worst:.3e} at {worst_at} (holds numerically; certified only for integer m)"
        ),
    });

    // exploratory: is V_m convex in m? (open question — observe the sign
    // of the m-direction second difference, never assert)
    let mut min_d2 = f64::INFINITY;
    let mut min_at = String::new();
    for m in 1..=19u32 {
        for &x in x_grid().iter().step_by(4) {
            let d2 = v_auto(m as f64 + 1.0, x)?.value + v_auto(m as f64 - 1.0, x)?.value
                - 2.0 * v_auto(m as f64, x)?.value;
            if d2 < min_d2 {
                min_d2 = d2;
                min_at = format!("m={m}, x={x:.3e}");
            }
        }
    }
    exploratory.push(ExploratoryItem {
        id: "convexity.convex_in_m_open_question".to_string(),
        observation: format!(
            "min of V_{{m+1}} + V_{{m-1}} - 2V_m over the grid is {min_d2:.3e} at {min_at} (no negative value observed ⇒ consistent with convexity in m, which remains unproven)"
        ),
    });

    Ok((checks, exploratory))
}
