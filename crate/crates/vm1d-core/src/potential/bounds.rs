//! Two-sided pinch and ratio bounds for `V_m`.
//!
//! The pinch `1/√(x²+m) > V_m(x) > 1/√(x²+m+1)` (upper for `m > 0`, lower
//! for `m > -1`) brackets every value. The sharper machinery is the ratio
//! bound
//!
//! ```text
//! G_8^{m-1}(x²)  <  V_m(x)/V_{m-1}(x)  <  G_4^m(x²),     integer m ≥ 0,
//! ```
//!
//! with `G_k^m(y) = ky / ((k-1)y - m + √((y+m)² + ky))`, and its `m = 0`
//! specialization `g_π(x) ≤ V_0(x) < g_4(x)` with
//! `g_k(x) = k/((k-1)x + √(x²+k))`.

use crate::Error;

/// Pinch `(lower, upper)` with `V_m(x)` strictly inside.
///
/// For `-1 < m ≤ 0` the upper bound does not apply and is reported as
/// `+∞`.
pub fn bracket(m: f64, x: f64) -> Result<(f64, f64), Error> {
    if !(m > -1.0) {
        return Err(Error::IndexOutOfRange(m));
    }
    if !(x >= 0.0) {
        return Err(Error::NegativeArgument(x));
    }
    let lower = 1.0 / libm::sqrt(x * x + m + 1.0);
    let upper = if m > 0.0 {
        1.0 / libm::sqrt(x * x + m)
    } else {
        f64::INFINITY
    };
    Ok((lower, upper))
}

/// `g_k(x) = k / ((k-1)x + √(x²+k))` for `k > 1`, `x ≥ 0`.
///
/// `g_π(x) ≤ V_0(x) < g_4(x)` on `x > 0`, with equality at `x = 0` for
/// `k = π` (both sides are `√π` there).
pub fn g_k(x: f64, k: f64) -> f64 {
    debug_assert!(k > 1.0 && x >= 0.0);
    k / ((k - 1.0) * x + libm::sqrt(x * x + k))
}

/// Parameters of a general ratio bound; `k ∈ {4, 8}` are the certified
/// choices, other `k > 1` are allowed for exploration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RatioBoundParams {
    pub k: f64,
    pub m: f64,
}

impl RatioBoundParams {
    pub fn new(k: f64, m: f64) -> Result<Self, Error> {
        if !(k > 1.0) {
            return Err(Error::InvalidModelParameter("ratio bound requires k > 1"));
        }
        Ok(RatioBoundParams { k, m })
    }

    /// `G_k^m(y)` for `y ≥ 0`.
    ///
    /// Evaluated in the rationalized form
    /// `k / ((k-1) + (y + 2m + k)/(√((y+m)²+ky) + m))`, which avoids the
    /// cancellation `√((y+m)²+ky) - m` of the textbook form for `y ≪ m`
    /// and produces the correct `y → 0⁺` limit `2m/(2m+1)` automatically.
    pub fn eval(&self, y: f64) -> f64 {
        debug_assert!(y >= 0.0);
        let (k, m) = (self.k, self.m);
        if y == 0.0 {
            return if m > 0.0 { 2.0 * m / (2.0 * m + 1.0) } else { 0.0 };
        }
        let s = libm::sqrt((y + m) * (y + m) + k * y);
        k / ((k - 1.0) + (y + 2.0 * m + k) / (s + m))
    }
}

/// Certified lower ratio bound: `G_8^{m-1}(x²) < V_m(x)/V_{m-1}(x)`.
pub fn ratio_lower(m: f64, x: f64) -> f64 {
    RatioBoundParams { k: 8.0, m: m - 1.0 }.eval(x * x)
}

/// Certified upper ratio bound: `V_m(x)/V_{m-1}(x) < G_4^m(x²)`.
pub fn ratio_upper(m: f64, x: f64) -> f64 {
    RatioBoundParams { k: 4.0, m }.eval(x * x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::{v_at_zero, SQRT_PI};

    #[test]
    fn bracket_anchors() {
        // m=1, x=0 → (1/√2, 1), containing √π/2 ≈ 0.886
        let (lo, hi) = bracket(1.0, 0.0).unwrap();
        assert!((lo - core::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((hi - 1.0).abs() < 1e-15);
        let v10 = v_at_zero(1.0).unwrap();
        assert!(lo < v10 && v10 < hi);
        // m=4, x=3 → (1/√14, 1/√13)
        let (lo, hi) = bracket(4.0, 3.0).unwrap();
        assert!((lo - 1.0 / libm::sqrt(14.0)).abs() < 1e-15);
        assert!((hi - 1.0 / libm::sqrt(13.0)).abs() < 1e-15);
        // upper sentinel for -1 < m ≤ 0
        let (_, hi) = bracket(-0.5, 1.0).unwrap();
        assert!(hi.is_infinite());
        assert!(bracket(-1.0, 1.0).is_err());
    }

    #[test]
    fn bracket_pinches_at_large_m() {
        // both sides behave like (1/√m)(1 + O(1/m)) at x = 0
        let m = 400.0;
        let (lo, hi) = bracket(m, 0.0).unwrap();
        assert!((hi / lo - 1.0).abs() < 1.0 / m);
        assert!((hi * libm::sqrt(m) - 1.0).abs() < 2.0 / m);
    }

    #[test]
    fn g_k_endpoints() {
        // g_π(0) = π/√π = √π = V_0(0)
        let gpi0 = g_k(0.0, core::f64::consts::PI);
        assert!((gpi0 - SQRT_PI).abs() < 1e-15);
        // g_4(0) = 4/√4 = 2 > √π
        assert_eq!(g_k(0.0, 4.0), 2.0);
        assert!(g_k(0.0, 4.0) > SQRT_PI);
    }

    #[test]
    fn ratio_bound_zero_limit() {
        // G_k^m(0⁺) = 2m/(2m+1), approached smoothly, and the true ratio
        // at 0 is (2m-1)/(2m) < 2m/(2m+1)
        for &m in &[1.0, 2.0, 5.0, 20.0] {
            let g = RatioBoundParams { k: 4.0, m };
            let at_zero = g.eval(0.0);
            assert!((at_zero - 2.0 * m / (2.0 * m + 1.0)).abs() < 1e-15);
            let nearby = g.eval(1e-12);
            assert!((nearby - at_zero).abs() < 1e-11);
            let true_ratio = v_at_zero(m).unwrap() / v_at_zero(m - 1.0).unwrap();
            assert!((true_ratio - (2.0 * m - 1.0) / (2.0 * m)).abs() < 1e-13);
            assert!(true_ratio < at_zero);
        }
    }

    #[test]
    fn rationalized_form_matches_textbook_form_where_stable() {
        for &m in &[0.0, 1.0, 3.0, 10.0] {
            for &y in &[0.5, 1.0, 10.0, 1e4] {
                for &k in &[4.0, 8.0] {
                    let stable = RatioBoundParams { k, m }.eval(y);
                    let s = libm::sqrt((y + m) * (y + m) + k * y);
                    let textbook = k * y / ((k - 1.0) * y - m + s);
                    assert!(
                        (stable - textbook).abs() < 1e-12 * textbook,
                        "k={k}, m={m}, y={y}"
                    );
                }
            }
        }
    }

    #[test]
    fn m0_consistency_between_g_and_big_g() {
        // G_4^0(x²) = x·g_4(x): the m = 0 ratio bound is the g bound
        for &x in &[0.25, 1.0, 4.0] {
            let lhs = ratio_upper(0.0, x);
            let rhs = x * g_k(x, 4.0);
            assert!((lhs - rhs).abs() < 1e-14 * rhs, "x = {x}");
        }
    }

    #[test]
    fn params_validation() {
        assert!(RatioBoundParams::new(1.0, 0.0).is_err());
        assert!(RatioBoundParams::new(4.0, -1.0).is_ok());
    }
}
