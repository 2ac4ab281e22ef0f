//! Recursion relations, the iterated form, and the derivative identity.
//!
//! Integration by parts under the defining integral gives, for real
//! `m ≥ 1`,
//!
//! ```text
//! V_m = [ (m - 1/2 - x²) V_{m-1} + x² V_{m-2} ] / m,
//! ```
//!
//! which iterates (integer `m ≥ 1`) into
//!
//! ```text
//! V_m = [ (1 - 2x²) V_{m-1} + Σ_{k=0}^{m-2} V_k + 2|x| ] / (2m).
//! ```
//!
//! Both are exact algebra but subtract nearly equal quantities once
//! `x² ≫ m`; the relative-error tracking below quantifies that growth so
//! the caller can see where the upward chain stops being trustworthy.

use super::{v_closed_m0, EvalResult, Strategy};
use crate::Error;

/// One recursion step `V_m` from seeds `(V_{m-1}, V_{m-2})` at the same `x`.
pub fn v_recursion(m: f64, x: f64, seeds: (f64, f64)) -> Result<f64, Error> {
    if !(m >= 1.0) {
        return Err(Error::IndexOutOfRange(m));
    }
    if x == 0.0 {
        // the chain bottoms out in the 1/x sentinel
        return Err(Error::DivergesAtZero(-1.0));
    }
    if !(x > 0.0) {
        return Err(Error::NegativeArgument(x));
    }
    let (vm1, vm2) = seeds;
    Ok(((m - 0.5 - x * x) * vm1 + x * x * vm2) / m)
}

/// The iterated form for integer `m ≥ 1` (base `V_0` closed form).
///
/// Non-integer `m` is a domain error.
pub fn v_iterated(m: f64, x: f64) -> Result<f64, Error> {
    let mi = {
        let r = libm::round(m);
        if libm::fabs(m - r) > 1e-9 || r < 1.0 {
            return Err(Error::NonIntegerIndex(m));
        }
        r as u32
    };
    if x == 0.0 {
        return Err(Error::DivergesAtZero(-1.0));
    }
    if !(x > 0.0) {
        return Err(Error::NegativeArgument(x));
    }
    let mut values = alloc::vec![v_closed_m0(x)?];
    let mut partial_sum = 0.0; // Σ_{k=0}^{j-2} V_k
    for j in 1..=mi {
        let prev = values[(j - 1) as usize];
        let vj = ((1.0 - 2.0 * x * x) * prev + partial_sum + 2.0 * x) / (2.0 * j as f64);
        partial_sum += prev;
        values.push(vj);
    }
    Ok(values[mi as usize])
}

/// Upward chain `V_{-1} = 1/x, V_0 = closed → V_m`, with first-order
/// propagation of the cancellation error.
pub(crate) fn recursion_eval(m: u32, x: f64) -> Result<EvalResult, Error> {
    if !(x > 0.0) {
        return Err(Error::NegativeArgument(x));
    }
    if m == 0 {
        let value = v_closed_m0(x)?;
        return Ok(EvalResult {
            value,
            error_estimate: 1e-15 * value,
            strategy: Strategy::Recursion,
        });
    }
    let mut older = 1.0 / x; // V_{-1}
    let mut newer = v_closed_m0(x)?; // V_0
    let mut rel_older = f64::EPSILON;
    let mut rel_newer = 4.0 * f64::EPSILON;
    for j in 1..=m {
        let jf = j as f64;
        let t1 = (jf - 0.5 - x * x) * newer;
        let t2 = x * x * older;
        let value = (t1 + t2) / jf;
        let rel = (libm::fabs(t1) * rel_newer
            + libm::fabs(t2) * rel_older
            + f64::EPSILON * (libm::fabs(t1) + libm::fabs(t2)))
            / libm::fmax(jf * libm::fabs(value), 1e-300);
        older = newer;
        newer = value;
        rel_older = rel_newer;
        rel_newer = rel;
    }
    Ok(EvalResult {
        value: newer,
        error_estimate: rel_newer * libm::fabs(newer),
        strategy: Strategy::Recursion,
    })
}

/// Derivative identity `V_m'(x) = 2x (V_m(x) - V_{m-1}(x))` for `m ≥ 0`
/// (with `V_{-1} = 1/x` when `m = 0`).
///
/// For `m > 1/2` the right side vanishes at `x = 0`, so `V_m'(0) = 0`.
pub fn v_derivative(m: f64, x: f64) -> Result<f64, Error> {
    if !(m >= 0.0) {
        return Err(Error::IndexOutOfRange(m));
    }
    if !(x >= 0.0) {
        return Err(Error::NegativeArgument(x));
    }
    if x == 0.0 {
        if m > 0.5 {
            return Ok(0.0);
        }
        if m == 0.0 {
            // V_0'(x) = 2x V_0(x) - 2 → -2 at the origin
            return Ok(-2.0);
        }
        // 0 < m ≤ 1/2: V_{m-1}(0) diverges
        return Err(Error::DivergesAtZero(m - 1.0));
    }
    let vm = super::v_auto(m, x)?.value;
    let vm1 = if m == 0.0 {
        1.0 / x
    } else {
        super::v_auto(m - 1.0, x)?.value
    };
    Ok(2.0 * x * (vm - vm1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::{v_at_zero, v_auto};

    fn rel(a: f64, b: f64) -> f64 {
        libm::fabs(a - b) / libm::fabs(b)
    }

    #[test]
    fn one_step_matches_quadrature() {
        // m=1, x=2 with seeds (V_0(2), 1/2) → ≈ 0.41562
        let v0 = v_closed_m0(2.0).unwrap();
        let got = v_recursion(1.0, 2.0, (v0, 0.5)).unwrap();
        let quad = v_auto(1.0, 2.0).unwrap().value;
        assert!(rel(got, quad) < 1e-10, "{got} vs {quad}");
        // m=2, x=1 chained
        let v0 = v_closed_m0(1.0).unwrap();
        let v1 = v_recursion(1.0, 1.0, (v0, 1.0)).unwrap();
        let v2 = v_recursion(2.0, 1.0, (v1, v0)).unwrap();
        let quad = v_auto(2.0, 1.0).unwrap().value;
        assert!(rel(v2, quad) < 1e-10, "{v2} vs {quad}");
    }

    #[test]
    fn recursion_limit_toward_zero_is_continuous() {
        // m=1: (1/2 - x²)V_0(x) + x → √π/2 as x → 0⁺
        let target = v_at_zero(1.0).unwrap();
        for &x in &[1e-3, 1e-5, 1e-7] {
            let v0 = v_closed_m0(x).unwrap();
            let v1 = (0.5 - x * x) * v0 + x;
            assert!(libm::fabs(v1 - target) < 3.0 * x, "x = {x}");
        }
    }

    #[test]
    fn iterated_matches_single_step_form() {
        // m=1, x=2: (1/2)[(1-8)V_0(2) + 2·2]
        let v0 = v_closed_m0(2.0).unwrap();
        let direct = 0.5 * ((1.0 - 8.0) * v0 + 4.0);
        let got = v_iterated(1.0, 2.0).unwrap();
        assert!(rel(got, direct) < 1e-14);
        // both recursion routes agree to 1e-12 relative
        for m in 1..=12u32 {
            for &x in &[0.3, 1.0, 2.5] {
                let it = v_iterated(m as f64, x).unwrap();
                let ch = recursion_eval(m, x).unwrap().value;
                assert!(rel(it, ch) < 1e-12, "m = {m}, x = {x}: {it} vs {ch}");
            }
        }
        assert!(v_iterated(1.5, 1.0).is_err());
        assert!(v_iterated(0.0, 1.0).is_err());
    }

    #[test]
    fn iterated_m3_stays_in_bracket() {
        let got = v_iterated(3.0, 0.1).unwrap();
        let (lo, hi) = crate::potential::bracket(3.0, 0.1).unwrap();
        assert!(lo < got && got < hi);
    }

    #[test]
    fn cancellation_estimate_grows_with_x() {
        let small = recursion_eval(8, 1.0).unwrap();
        let large = recursion_eval(8, 20.0).unwrap();
        let rel_small = small.error_estimate / small.value;
        let rel_large = large.error_estimate / large.value;
        assert!(rel_large > 1e3 * rel_small, "{rel_small} vs {rel_large}");
    }

    #[test]
    fn derivative_identity() {
        // V_1'(0) = 0
        assert_eq!(v_derivative(1.0, 0.0).unwrap(), 0.0);
        // V_0'(1) = 2(V_0(1) - 1) ≈ -0.4842557
        let d = v_derivative(0.0, 1.0).unwrap();
        assert!(libm::fabs(d - 2.0 * (v_closed_m0(1.0).unwrap() - 1.0)) < 1e-14);
        assert!(libm::fabs(d + 0.484_255_7) < 1e-6);
        // central difference of V_m matches within 1e-6 at h = 1e-4
        for &(m, x) in &[(0.0, 1.0), (1.0, 0.7), (2.5, 2.0), (5.0, 4.0)] {
            let h = 1e-4;
            let fd = (v_auto(m, x + h).unwrap().value - v_auto(m, x - h).unwrap().value) / (2.0 * h);
            let an = v_derivative(m, x).unwrap();
            assert!(libm::fabs(fd - an) < 1e-6, "m = {m}, x = {x}: {fd} vs {an}");
        }
        // domain: 0 < m ≤ 1/2 has no finite derivative value at 0
        assert!(v_derivative(0.25, 0.0).is_err());
    }
}
