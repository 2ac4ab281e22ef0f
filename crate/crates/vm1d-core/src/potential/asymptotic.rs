//! Large-`x` asymptotic expansion of `V_m`.
//!
//! Expanding `(x²+u)^{-1/2}` in `u/x²` under the defining integral gives
//!
//! ```text
//! V_m(x) ~ Σ_k (-1)^k (2k-1)!!/(2^k k!) · Γ(m+k+1)/Γ(m+1) · x^{-2k-1}
//!        = 1/x - (m+1)/(2x³) + 3(m+2)(m+1)/(8x⁵) - …
//! ```
//!
//! The series is asymptotic, not convergent: term `k+1` is term `k` times
//! `-(2k+1)(m+k+1)/(2(k+1)x²)`, so it shrinks only while `k ≲ x² - m`.
//! Truncation error is estimated by the first omitted term.

use super::{EvalResult, Strategy};
use crate::Error;

/// Ratio of consecutive terms, `t_k / t_{k-1}`.
fn term_ratio(m: f64, x: f64, k: usize) -> f64 {
    let k = k as f64;
    -(2.0 * k - 1.0) * (m + k) / (2.0 * k * x * x)
}

/// Evaluate the expansion at a fixed `order` (number of correction terms
/// beyond `1/x`; order 0 is the bare `1/x`).
///
/// Requires `x² > m + order`, the heuristic region where all requested
/// terms are still shrinking.
pub fn v_asymptotic(m: f64, x: f64, order: usize) -> Result<EvalResult, Error> {
    if !(m > -1.0) {
        return Err(Error::IndexOutOfRange(m));
    }
    if !(x > 0.0) {
        return Err(Error::NegativeArgument(x));
    }
    if !(x * x > m + order as f64) {
        return Err(Error::AsymptoticOrderInvalid { m, x, order });
    }
    let mut term = 1.0 / x;
    let mut sum = term;
    for k in 1..=order {
        term *= term_ratio(m, x, k);
        sum += term;
    }
    let omitted = term * term_ratio(m, x, order + 1);
    Ok(EvalResult {
        value: sum,
        error_estimate: libm::fabs(omitted),
        strategy: Strategy::Asymptotic,
    })
}

/// Sum terms until the next one drops below `target_rel·|sum|`; `None` if
/// the series starts growing before that (outside its validity region).
pub(crate) fn asymptotic_auto(m: f64, x: f64, target_rel: f64) -> Option<EvalResult> {
    if !(m > -1.0) || !(x > 0.0) || !(x * x > m + 1.0) {
        return None;
    }
    let mut term = 1.0 / x;
    let mut sum = term;
    for k in 1..=64usize {
        let next = term * term_ratio(m, x, k);
        if libm::fabs(next) < target_rel * libm::fabs(sum) {
            return Some(EvalResult {
                value: sum,
                error_estimate: libm::fabs(next),
                strategy: Strategy::Asymptotic,
            });
        }
        if libm::fabs(next) >= libm::fabs(term) {
            return None;
        }
        sum += next;
        term = next;
    }
    None
}
