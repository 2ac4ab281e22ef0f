//! Decomposition of a two-particle lowest-band Landau state into relative
//! angular momenta.
//!
//! A lowest-band orbital of angular momentum `m` is the Gaussian-weighted
//! monomial `ζ̄^m e^{-|ζ|²/2}` (normalized). Rotating a two-particle
//! product into centre-of-mass/relative coordinates `(ζ₁ ± ζ₂)/√2` and
//! expanding binomially writes the pair as a superposition over relative
//! momenta `K`; the interaction then averages to a convex combination of
//! `(1/√2) V_K(|x|/√2)`, with weight the squared normalized amplitude
//!
//! ```text
//! w_K ∝ c_K² (m₁+m₂-K)! K! / (2^{m₁+m₂} m₁! m₂!),
//! c_K = Σ_{i+j=K} C(m₁,i) C(m₂,j) (-1)^j.
//! ```
//!
//! Everything is exact rational arithmetic; floats appear only in the
//! public result. Particle exchange flips the sign of the relative
//! coordinate, so an antisymmetrized pair keeps odd `K` only (renormalized),
//! while a same-`m` product keeps even `K` only (`c_K` vanishes for odd `K`
//! because `(a+b)^m (a-b)^m = (a²-b²)^m`).

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::Error;

/// Convex weights on relative momenta for one (anti)symmetrized pair.
#[derive(Clone, Debug, PartialEq)]
pub struct PairCoefficients {
    pub m1: usize,
    pub m2: usize,
    pub antisymmetrized: bool,
    /// `(relative momentum K, weight)`, sorted by `K`, weights positive
    /// and summing to 1.
    pub weights: Vec<(usize, f64)>,
}

fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact weights; shared with the Slater-model pair averaging.
pub(crate) fn pair_weights_exact(
    m1: usize,
    m2: usize,
    antisymmetrize: bool,
) -> Result<Vec<(usize, BigRational)>, Error> {
    if antisymmetrize && m1 == m2 {
        return Err(Error::NullPairState(m1));
    }
    let total = m1 + m2;
    let denom = (BigInt::one() << total) * factorial(m1) * factorial(m2);
    let mut weights: Vec<(usize, BigRational)> = Vec::new();
    for k in 0..=total {
        let mut c = BigInt::zero();
        for i in 0..=k.min(m1) {
            let j = k - i;
            if j > m2 {
                continue;
            }
            let term = binomial(m1, i) * binomial(m2, j);
            if j % 2 == 0 {
                c += term;
            } else {
                c -= term;
            }
        }
        if c.is_zero() {
            continue;
        }
        let num = &c * &c * factorial(total - k) * factorial(k);
        weights.push((k, BigRational::new(num, denom.clone())));
    }
    debug_assert!(
        weights.iter().map(|(_, w)| w).sum::<BigRational>() == BigRational::one(),
        "unitary transform must preserve total weight"
    );
    if antisymmetrize {
        let odd: Vec<(usize, BigRational)> =
            weights.into_iter().filter(|(k, _)| k % 2 == 1).collect();
        let sum: BigRational = odd.iter().map(|(_, w)| w).sum();
        debug_assert!(!sum.is_zero());
        Ok(odd.into_iter().map(|(k, w)| (k, w / &sum)).collect())
    } else {
        Ok(weights)
    }
}

/// Decompose the pair `(m1, m2)`, either as a plain product state or
/// antisymmetrized (then `m1 ≠ m2` is required: equal indices give the
/// null state).
pub fn pair_decomposition(
    m1: usize,
    m2: usize,
    antisymmetrize: bool,
) -> Result<PairCoefficients, Error> {
    let exact = pair_weights_exact(m1, m2, antisymmetrize)?;
    let weights: Vec<(usize, f64)> = exact
        .iter()
        .map(|(k, w)| (*k, w.to_f64().unwrap_or(f64::NAN)))
        .collect();
    debug_assert!(weights.iter().all(|&(_, w)| w > 0.0 && w.is_finite()));
    Ok(PairCoefficients {
        m1,
        m2,
        antisymmetrized: antisymmetrize,
        weights,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_pair_is_trivial() {
        // (0,0) product: the zero model case, pure relative momentum 0
        let p = pair_decomposition(0, 0, false).unwrap();
        assert_eq!(p.weights, alloc::vec![(0, 1.0)]);
    }

    #[test]
    fn zero_one_antisymmetrized_is_pure_relative_one() {
        // ζ₂ - ζ₁ is pure relative momentum 1
        let p = pair_decomposition(0, 1, true).unwrap();
        assert_eq!(p.weights, alloc::vec![(1, 1.0)]);
    }

    #[test]
    fn equal_m_product_has_even_support() {
        // (1,1): (a²-b²)¹ → momenta {0, 2} with weight 1/2 each
        let p = pair_decomposition(1, 1, false).unwrap();
        assert_eq!(p.weights.len(), 2);
        assert_eq!(p.weights[0], (0, 0.5));
        assert_eq!(p.weights[1], (2, 0.5));
        // (2,2): even support only, summing to 1
        let p = pair_decomposition(2, 2, false).unwrap();
        assert!(p.weights.iter().all(|&(k, _)| k % 2 == 0));
        let total: f64 = p.weights.iter().map(|&(_, w)| w).sum();
        assert!((total - 1.0).abs() < 1e-15);
    }

    #[test]
    fn one_two_antisymmetrized_quarter_three_quarters() {
        let p = pair_decomposition(1, 2, true).unwrap();
        assert_eq!(p.weights.len(), 2);
        assert_eq!(p.weights[0], (1, 0.25));
        assert_eq!(p.weights[1], (3, 0.75));
    }

    #[test]
    fn antisymmetrized_support_is_odd_and_normalized() {
        for (m1, m2) in [(0usize, 1usize), (0, 2), (1, 2), (0, 3), (2, 5)] {
            let p = pair_decomposition(m1, m2, true).unwrap();
            assert!(p.weights.iter().all(|&(k, _)| k % 2 == 1), "({m1},{m2})");
            assert!(p.weights.iter().all(|&(_, w)| w > 0.0));
            let total: f64 = p.weights.iter().map(|&(_, w)| w).sum();
            assert!((total - 1.0).abs() < 1e-14, "({m1},{m2}): {total}");
            assert!(p.weights.last().unwrap().0 <= m1 + m2);
        }
    }

    #[test]
    fn null_state_rejected() {
        assert!(matches!(
            pair_decomposition(3, 3, true),
            Err(Error::NullPairState(3))
        ));
    }
}
