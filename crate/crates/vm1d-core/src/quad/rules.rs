//! Gauss rules generated by the Golub–Welsch eigenvalue method.
//!
//! Nodes are eigenvalues of the Jacobi matrix of the orthogonal-polynomial
//! recurrence; weights come from the first eigenvector components. The
//! generalized Laguerre rule also ships a scaled variant whose weights
//! absorb `u^{-α} e^{u}`, so integrands that *contain* the weight can be
//! summed without under/overflow at large nodes.

use alloc::vec;
use alloc::vec::Vec;

use crate::special::log_gammafn;
use crate::tridiag::ql_eigen_first_row;
use crate::Error;

/// Nodes and weights for `∫₀^∞ u^α e^{-u} g(u) du ≈ Σ w_i g(u_i)`.
pub fn gauss_laguerre(n: usize, alpha: f64) -> Result<(Vec<f64>, Vec<f64>), Error> {
    let (nodes, log_w) = laguerre_nodes_logweights(n, alpha)?;
    let weights = log_w.iter().map(|&lw| libm::exp(lw)).collect();
    Ok((nodes, weights))
}

/// Nodes and *scaled* weights `ŵ_i = w_i u_i^{-α} e^{u_i}`, so that
/// `∫₀^∞ f(u) du ≈ Σ ŵ_i f(u_i)` for integrands `f(u) = u^α e^{-u} g(u)`
/// given in full (weight included).
pub fn gauss_laguerre_scaled(n: usize, alpha: f64) -> Result<(Vec<f64>, Vec<f64>), Error> {
    let (nodes, log_w) = laguerre_nodes_logweights(n, alpha)?;
    let weights = nodes
        .iter()
        .zip(log_w.iter())
        .map(|(&u, &lw)| libm::exp(lw + u - alpha * libm::log(u)))
        .collect();
    Ok((nodes, weights))
}

fn laguerre_nodes_logweights(n: usize, alpha: f64) -> Result<(Vec<f64>, Vec<f64>), Error> {
    if !(alpha > -1.0) {
        return Err(Error::InvalidLaguerreAlpha(alpha));
    }
    if n == 0 {
        return Err(Error::InvalidQuadratureSpec("rule order must be at least 1"));
    }
    let mut d: Vec<f64> = (0..n).map(|k| 2.0 * k as f64 + alpha + 1.0).collect();
    let mut e: Vec<f64> = (1..n)
        .map(|k| libm::sqrt(k as f64 * (k as f64 + alpha)))
        .collect();
    let mut z = vec![0.0; n];
    z[0] = 1.0;
    ql_eigen_first_row(&mut d, &mut e, &mut z);
    // w_i = Γ(α+1) z_i²; kept in log form so callers can rescale safely
    let log_mu0 = log_gammafn(alpha + 1.0)?;
    let log_w: Vec<f64> = z
        .iter()
        .map(|&zi| log_mu0 + 2.0 * libm::log(libm::fabs(zi).max(1e-300)))
        .collect();
    Ok((d, log_w))
}

/// Nodes and weights for `∫_{-1}^{1} g(t) dt ≈ Σ w_i g(t_i)`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "rule order must be at least 1");
    let mut d = vec![0.0; n];
    let mut e: Vec<f64> = (1..n)
        .map(|k| {
            let k = k as f64;
            k / libm::sqrt(4.0 * k * k - 1.0)
        })
        .collect();
    let mut z = vec![0.0; n];
    z[0] = 1.0;
    ql_eigen_first_row(&mut d, &mut e, &mut z);
    let w: Vec<f64> = z.iter().map(|&zi| 2.0 * zi * zi).collect();
    (d, w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laguerre_moments() {
        // Σ w_i u_i^k = Γ(k+1) for α = 0, exact while 2n-1 ≥ k
        let (x, w) = gauss_laguerre(12, 0.0).unwrap();
        for k in 0..6u32 {
            let sum: f64 = x.iter().zip(&w).map(|(&xi, &wi)| wi * libm::pow(xi, k as f64)).sum();
            let exact = libm::tgamma(k as f64 + 1.0);
            assert!(
                (sum - exact).abs() < 1e-12 * exact,
                "k = {k}: {sum} vs {exact}"
            );
        }
    }

    #[test]
    fn laguerre_generalized_alpha() {
        // ∫ u^{1.5} e^{-u}·1 du with α = 1.5: Σ w_i = Γ(2.5)
        let (_, w) = gauss_laguerre(20, 1.5).unwrap();
        let total: f64 = w.iter().sum();
        let exact = libm::tgamma(2.5);
        assert!((total - exact).abs() < 1e-13 * exact);
        // and the first moment: Σ w_i u_i = Γ(3.5)
        let (x, w) = gauss_laguerre(20, 1.5).unwrap();
        let m1: f64 = x.iter().zip(&w).map(|(&xi, &wi)| wi * xi).sum();
        assert!((m1 - libm::tgamma(3.5)).abs() < 1e-12 * libm::tgamma(3.5));
    }

    #[test]
    fn laguerre_scaled_weights_integrate_full_integrand() {
        // f(u) = u^{1.5} e^{-u} given in full; scaled weights sum it directly
        let (x, sw) = gauss_laguerre_scaled(25, 1.5).unwrap();
        let total: f64 = x
            .iter()
            .zip(&sw)
            .map(|(&xi, &wi)| wi * libm::pow(xi, 1.5) * libm::exp(-xi))
            .sum();
        let exact = libm::tgamma(2.5);
        assert!((total - exact).abs() < 1e-12 * exact, "{total} vs {exact}");
    }

    #[test]
    fn laguerre_rejects_bad_alpha() {
        assert!(gauss_laguerre(10, -1.0).is_err());
        assert!(gauss_laguerre(10, -1.5).is_err());
    }

    #[test]
    fn legendre_polynomial_exactness() {
        let (x, w) = gauss_legendre(8);
        // degree 15 exactness: ∫_{-1}^1 t^k dt
        for k in 0..=15u32 {
            let sum: f64 = x.iter().zip(&w).map(|(&xi, &wi)| wi * libm::pow(xi, k as f64)).sum();
            let exact = if k % 2 == 1 { 0.0 } else { 2.0 / (k as f64 + 1.0) };
            assert!((sum - exact).abs() < 1e-13, "k = {k}: {sum} vs {exact}");
        }
    }

    #[test]
    fn legendre_known_n2() {
        let (x, w) = gauss_legendre(2);
        let node = 1.0 / libm::sqrt(3.0);
        assert!((x[0] + node).abs() < 1e-15);
        assert!((x[1] - node).abs() < 1e-15);
        assert!((w[0] - 1.0).abs() < 1e-14);
        assert!((w[1] - 1.0).abs() < 1e-14);
    }
}
