//! Exact-rational polynomials `P_m`, `Q_m` with
//! `V_m(x) = P_m(x²) V_0(x) + x Q_{m-1}(x²)` for integer `m ≥ 1`.
//!
//! The coefficients come from pushing the three-term recursion through
//! polynomial algebra; the `1/m` and `(m - 1/2)` factors are exactly
//! representable as rationals, so the construction is exact (arbitrary-
//! size integers) and rounding enters only at evaluation time.
//!
//! An independent closed form fixes `P_m` through the confluent
//! hypergeometric function:
//! `P_m(y) = e^{-y}·₁F₁(1/2, 1/2-m, y)/(m·B(m, 1/2))`, which the Kummer
//! transformation turns into the terminating series `₁F₁(-m, 1/2-m, -y)`
//! — a degree-`m` polynomial, free of the `e^{-y}/e^{+y}` cancellation.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{v_closed_m0, EvalResult, Strategy};
use crate::special::{betafn, kummer_terminating};
use crate::Error;

/// Dense polynomial with exact rational coefficients, index = power of `y`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Exact evaluation at a rational point.
    pub fn eval_exact(&self, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * y + c;
        }
        acc
    }

    /// Horner evaluation in `f64`.
    pub fn eval_f64(&self, y: f64) -> f64 {
        self.eval_f64_with_condition(y).0
    }

    /// Horner value together with `Σ|c_k| |y|^k`, the magnitude scale of
    /// the alternating sum; `ε·condition` estimates the rounding error of
    /// the float evaluation.
    pub fn eval_f64_with_condition(&self, y: f64) -> (f64, f64) {
        let mut acc = 0.0f64;
        let mut cond = 0.0f64;
        for c in self.coeffs.iter().rev() {
            let cf = rational_to_f64(c);
            acc = acc * y + cf;
            cond = cond * libm::fabs(y) + libm::fabs(cf);
        }
        (acc, cond)
    }

    /// `(j - 1/2 - y)·self + y·other`, all exact.
    fn recursion_combine(&self, other: &RationalPolynomial, j: u32) -> RationalPolynomial {
        let shift = BigRational::new(BigInt::from(2 * j as i64 - 1), BigInt::from(2));
        let len = self.coeffs.len().max(other.coeffs.len()) + 1;
        let mut out = vec![BigRational::zero(); len + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k] += c * &shift; // (j - 1/2)·self
            out[k + 1] -= c; // -y·self
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            out[k + 1] += c; // y·other
        }
        let inv_j = BigRational::new(BigInt::one(), BigInt::from(j as i64));
        for c in out.iter_mut() {
            *c *= &inv_j;
        }
        RationalPolynomial::from_coeffs(out)
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    // to_f64 handles magnitudes far beyond f64 by returning ±inf; the
    // degrees here (≤ ~40) stay well inside
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Build `(P_m, Q_{m-1})` for integer `m ≥ 1`.
pub fn pm_qm(m: u32) -> Result<(RationalPolynomial, RationalPolynomial), Error> {
    if m < 1 {
        return Err(Error::InvalidModelParameter("pm_qm needs m >= 1"));
    }
    // P_0 = 1, P_1 = 1/2 - y; Q_{-1} = 0, Q_0 = 1
    let mut p_prev = RationalPolynomial::from_coeffs(vec![BigRational::one()]);
    let mut p_curr = RationalPolynomial::from_coeffs(vec![
        BigRational::new(BigInt::one(), BigInt::from(2)),
        -BigRational::one(),
    ]);
    let mut q_prev = RationalPolynomial::zero();
    let mut q_curr = RationalPolynomial::from_coeffs(vec![BigRational::one()]);
    for j in 2..=m {
        let p_next = p_curr.recursion_combine(&p_prev, j);
        let q_next = q_curr.recursion_combine(&q_prev, j);
        p_prev = p_curr;
        p_curr = p_next;
        q_prev = q_curr;
        q_curr = q_next;
    }
    Ok((p_curr, q_curr))
}

/// `P_m(y)` through the terminating Kummer series.
pub fn pm_via_kummer(m: u32, y: f64) -> Result<f64, Error> {
    if m < 1 {
        return Err(Error::InvalidModelParameter("pm_via_kummer needs m >= 1"));
    }
    let mf = m as f64;
    let prefactor = 1.0 / (mf * betafn(mf, 0.5)?);
    Ok(prefactor * kummer_terminating(-mf, 0.5 - mf, -y)?)
}

/// Polynomial-route evaluation of `V_m(x)` with a cancellation-aware
/// error estimate.
pub(crate) fn polynomial_eval(m: u32, x: f64) -> Result<EvalResult, Error> {
    if !(x > 0.0) {
        return Err(Error::NegativeArgument(x));
    }
    let v0 = v_closed_m0(x)?;
    if m == 0 {
        return Ok(EvalResult {
            value: v0,
            error_estimate: 1e-15 * v0,
            strategy: Strategy::Polynomial,
        });
    }
    let (p, q) = pm_qm(m)?;
    let y = x * x;
    let (pv, pc) = p.eval_f64_with_condition(y);
    let (qv, qc) = q.eval_f64_with_condition(y);
    let value = pv * v0 + x * qv;
    let scale = pc * v0 + x * qc;
    Ok(EvalResult {
        value,
        error_estimate: 4.0 * f64::EPSILON * scale,
        strategy: Strategy::Polynomial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::{v_at_zero, v_auto};

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn rel(a: f64, b: f64) -> f64 {
        libm::fabs(a - b) / libm::fabs(b)
    }

    #[test]
    fn first_polynomials_exact() {
        let (p1, q0) = pm_qm(1).unwrap();
        assert_eq!(p1.coefficients(), &[ratio(1, 2), ratio(-1, 1)]);
        assert_eq!(q0.coefficients(), &[ratio(1, 1)]);
        // P_2 = 3/8 - y/2 + y²/2, Q_1 = 3/4 - y/2
        let (p2, q1) = pm_qm(2).unwrap();
        assert_eq!(p2.coefficients(), &[ratio(3, 8), ratio(-1, 2), ratio(1, 2)]);
        assert_eq!(q1.coefficients(), &[ratio(3, 4), ratio(-1, 2)]);
    }

    #[test]
    fn degrees_and_leading_coefficient() {
        // exact arithmetic holds out to degree 40
        let mut factorial = BigInt::one();
        for m in 1..=40u32 {
            factorial *= BigInt::from(m);
            let (p, q) = pm_qm(m).unwrap();
            assert_eq!(p.degree(), m as usize, "deg P_{m}");
            assert_eq!(q.degree(), m as usize - 1, "deg Q_{}", m - 1);
            // leading coefficient of P_m is (-1)^m/m!
            let lead = p.coefficients().last().unwrap().clone();
            let sign = if m % 2 == 0 { 1 } else { -1 };
            let expect = BigRational::new(BigInt::from(sign), factorial.clone());
            assert_eq!(lead, expect, "lead P_{m}");
        }
    }

    #[test]
    fn value_at_origin_matches_gamma_ratio() {
        // P_m(0) = V_m(0)/V_0(0)
        for m in 1..=15u32 {
            let (p, _) = pm_qm(m).unwrap();
            let p0 = p.eval_f64(0.0);
            let expect = v_at_zero(m as f64).unwrap() / v_at_zero(0.0).unwrap();
            assert!(rel(p0, expect) < 1e-13, "m = {m}: {p0} vs {expect}");
        }
    }

    #[test]
    fn reconstruction_matches_quadrature_where_conditioned() {
        // assert 1e-10 agreement wherever the evaluation's own
        // cancellation estimate is below 1e-11 of the value
        for m in 1..=20u32 {
            for &x in &[0.1, 0.5, 1.0, 2.0, 4.0, 8.0, 20.0] {
                let poly = polynomial_eval(m, x).unwrap();
                if poly.error_estimate > 1e-11 * libm::fabs(poly.value) {
                    continue;
                }
                let quad = v_auto(m as f64, x).unwrap();
                assert!(
                    rel(poly.value, quad.value) < 1e-10,
                    "m = {m}, x = {x}: {} vs {}",
                    poly.value,
                    quad.value
                );
            }
        }
    }

    #[test]
    fn kummer_route_anchor_values() {
        // m=1: prefactor 1/B(1,1/2) = 1/2; P_1(0) = 1/2
        assert!(rel(pm_via_kummer(1, 0.0).unwrap(), 0.5) < 1e-14);
        // m=1, y=2: (1/2)·₁F₁(-1, -1/2, -2) = (1/2)(1 - 4) = -3/2
        assert!(rel(pm_via_kummer(1, 2.0).unwrap(), -1.5) < 1e-14);
        // m=2, y=1 matches the rational polynomial to 1e-12
        let (p2, _) = pm_qm(2).unwrap();
        assert!(rel(pm_via_kummer(2, 1.0).unwrap(), p2.eval_f64(1.0)) < 1e-12);
    }

    #[test]
    fn kummer_route_matches_rational_broadly() {
        for m in 1..=20u32 {
            let (p, _) = pm_qm(m).unwrap();
            for &y in &[0.0, 0.1, 1.0, 3.0, 10.0] {
                let a = pm_via_kummer(m, y).unwrap();
                let (b, cond) = p.eval_f64_with_condition(y);
                let tol = 1e-11 * libm::fabs(b) + 1e-13 * cond;
                assert!(
                    libm::fabs(a - b) <= tol,
                    "m = {m}, y = {y}: {a} vs {b} (cond {cond:.2e})"
                );
            }
        }
    }

    #[test]
    fn exact_eval_consistency() {
        let (p, _) = pm_qm(6).unwrap();
        let y = ratio(7, 3);
        let exact = p.eval_exact(&y);
        let float = p.eval_f64(7.0 / 3.0);
        assert!(rel(exact.to_f64().unwrap(), float) < 1e-13);
    }
}
