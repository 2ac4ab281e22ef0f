//! Property verification suites over the canonical grids.
//!
//! Canonical sweep: `m ∈ {0, 0.5, …, 20}` (integer subset where the
//! underlying result is certified for integers only) against 49
//! log-spaced `x ∈ [10⁻³, 10³]`, slack 1e-9 unless a check states its
//! own tolerance. Exploratory items observe claims that are open in the
//! underlying theory; they are reported but never gate the exit status.

pub mod avg;
pub mod bounds;
pub mod convexity;
pub mod delta;
pub mod fourier;
pub mod ode;
pub mod pairs;
pub mod ratio;
pub mod recursion;

use crate::report::{CheckResult, ExploratoryItem};
use vm1d_core::potential::v_auto;
use vm1d_core::Error;

pub type SuiteOutput = (Vec<CheckResult>, Vec<ExploratoryItem>);

/// Default slack for strict inequalities evaluated in floating point.
pub const SLACK: f64 = 1e-9;

pub fn log_space(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|k| (a + (b - a) * k as f64 / (n - 1) as f64).exp())
        .collect()
}

/// `m ∈ {0, 0.5, …, 20}`.
pub fn m_grid() -> Vec<f64> {
    (0..=40).map(|k| 0.5 * k as f64).collect()
}

/// Integer `m ∈ {0, …, 20}`.
pub fn integer_m_grid() -> Vec<u32> {
    (0..=20).collect()
}

/// 49 log-spaced points spanning `[10⁻³, 10³]`.
pub fn x_grid() -> Vec<f64> {
    log_space(1e-3, 1e3, 49)
}

/// Precomputed `V_m(x)` over the full canonical grid.
pub struct ValueTable {
    pub m_values: Vec<f64>,
    pub x_values: Vec<f64>,
    pub values: Vec<Vec<f64>>,
}

impl ValueTable {
    pub fn build() -> Result<Self, Error> {
        let m_values = m_grid();
        let x_values = x_grid();
        let mut values = Vec::with_capacity(m_values.len());
        for &m in &m_values {
            let mut row = Vec::with_capacity(x_values.len());
            for &x in &x_values {
                row.push(v_auto(m, x)?.value);
            }
            values.push(row);
        }
        Ok(ValueTable {
            m_values,
            x_values,
            values,
        })
    }
}
