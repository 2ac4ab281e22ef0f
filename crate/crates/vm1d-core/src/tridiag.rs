//! Symmetric tridiagonal eigenproblem kernels.
//!
//! Shared by the Gauss quadrature node generator (implicit-shift QL with
//! first-row accumulation, Golub–Welsch style) and the spectral solver
//! (Sturm-count bisection for the smallest eigenvalue, inverse iteration
//! for its vector).

use alloc::vec;
use alloc::vec::Vec;

fn hypot(a: f64, b: f64) -> f64 {
    libm::hypot(a, b)
}

/// Implicit-shift QL on the symmetric tridiagonal matrix with diagonal `d`
/// and subdiagonal `e` (`e.len() == d.len() - 1`).
///
/// On return `d` holds the eigenvalues in ascending order and `z` the
/// first component of each normalized eigenvector (the quantity the
/// Golub–Welsch weight formula needs). `z` must come in as the first
/// basis row `[1, 0, …, 0]` or any row of interest.
pub(crate) fn ql_eigen_first_row(d: &mut [f64], e: &mut [f64], z: &mut [f64]) {
    let n = d.len();
    debug_assert_eq!(e.len() + 1, n.max(1));
    debug_assert_eq!(z.len(), n);
    if n <= 1 {
        return;
    }
    // padded subdiagonal so e[m] is addressable at m = n-1
    let mut ep = vec![0.0; n];
    ep[..n - 1].copy_from_slice(e);

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                let dd = libm::fabs(d[m]) + libm::fabs(d[m + 1]);
                if libm::fabs(ep[m]) <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter >= 50 {
                // 50 shifts per eigenvalue is far beyond what QL needs;
                // give up deflating this one rather than spinning
                break;
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * ep[l]);
            let mut r = hypot(g, 1.0);
            let sign_r = if g >= 0.0 { r } else { -r };
            g = d[m] - d[l] + ep[l] / (g + sign_r);
            let (mut s, mut c) = (1.0f64, 1.0f64);
            let mut p = 0.0;
            let mut underflowed = false;
            for i in (l..m).rev() {
                let mut f = s * ep[i];
                let b = c * ep[i];
                r = hypot(f, g);
                ep[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    ep[m] = 0.0;
                    underflowed = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if underflowed {
                continue;
            }
            d[l] -= p;
            ep[l] = g;
            ep[m] = 0.0;
        }
    }

    // ascending sort, carrying z along
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_unstable_by(|&i, &j| d[i].total_cmp(&d[j]));
    let sorted_d: Vec<f64> = idx.iter().map(|&i| d[i]).collect();
    let sorted_z: Vec<f64> = idx.iter().map(|&i| z[i]).collect();
    d.copy_from_slice(&sorted_d);
    z.copy_from_slice(&sorted_z);
    e.fill(0.0);
}

/// Number of eigenvalues of the symmetric tridiagonal `(d, e)` strictly
/// below `lambda`, by the Sturm sequence of the shifted LDLᵀ pivots.
pub(crate) fn sturm_count_below(d: &[f64], e: &[f64], lambda: f64) -> usize {
    let n = d.len();
    let mut count = 0usize;
    let mut q = d[0] - lambda;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let denom = if q == 0.0 { 1e-300 } else { q };
        q = d[i] - lambda - e[i - 1] * e[i - 1] / denom;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Smallest eigenvalue of the symmetric tridiagonal `(d, e)` by bisection
/// on the Gershgorin interval, to near machine precision.
pub(crate) fn smallest_eigenvalue(d: &[f64], e: &[f64]) -> f64 {
    let n = d.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 { libm::fabs(e[i - 1]) } else { 0.0 };
        let right = if i < n - 1 { libm::fabs(e[i]) } else { 0.0 };
        lo = lo.min(d[i] - left - right);
        hi = hi.max(d[i] + left + right);
    }
    let scale = libm::fabs(lo).max(libm::fabs(hi)).max(1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if sturm_count_below(d, e, mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo <= 4.0 * f64::EPSILON * scale {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Solve `(T - lambda I) x = b` for tridiagonal `T` with partial pivoting.
///
/// Row swaps during elimination create fill-in on a second superdiagonal,
/// which is carried explicitly (the usual `gttrf` layout).
fn solve_shifted(d: &[f64], e: &[f64], lambda: f64, b: &[f64]) -> Vec<f64> {
    let n = d.len();
    let mut dd: Vec<f64> = d.iter().map(|&v| v - lambda).collect();
    let mut du = vec![0.0; n]; // du[i]: row i, column i+1
    let mut du2 = vec![0.0; n]; // du2[i]: row i, column i+2 (fill-in)
    let mut rhs = b.to_vec();
    for i in 0..n - 1 {
        du[i] = e[i];
    }
    for i in 0..n - 1 {
        let sub = e[i]; // row i+1, column i
        if libm::fabs(sub) <= libm::fabs(dd[i]) {
            if dd[i] == 0.0 {
                dd[i] = 1e-300;
            }
            let m = sub / dd[i];
            dd[i + 1] -= m * du[i];
            rhs[i + 1] -= m * rhs[i];
        } else {
            // swap rows i and i+1, then eliminate
            let old_dd_i = dd[i];
            let old_du_i = du[i];
            dd[i] = sub;
            du[i] = dd[i + 1];
            du2[i] = if i + 1 < n - 1 { du[i + 1] } else { 0.0 };
            let m = old_dd_i / dd[i];
            dd[i + 1] = old_du_i - m * du[i];
            if i + 1 < n - 1 {
                du[i + 1] = -m * du2[i];
            }
            rhs.swap(i, i + 1);
            rhs[i + 1] -= m * rhs[i];
        }
    }
    let mut x = vec![0.0; n];
    if dd[n - 1] == 0.0 {
        dd[n - 1] = 1e-300;
    }
    x[n - 1] = rhs[n - 1] / dd[n - 1];
    if n >= 2 {
        x[n - 2] = (rhs[n - 2] - du[n - 2] * x[n - 1]) / dd[n - 2];
    }
    for i in (0..n.saturating_sub(2)).rev() {
        x[i] = (rhs[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / dd[i];
    }
    x
}

/// Eigenvector of the symmetric tridiagonal `(d, e)` for an eigenvalue
/// `lambda` known to high accuracy, by inverse iteration from an
/// all-ones start (deterministic).
pub(crate) fn inverse_iteration(d: &[f64], e: &[f64], lambda: f64) -> Vec<f64> {
    let n = d.len();
    // tiny shift off the exact eigenvalue keeps the solve well-posed
    let scale = d.iter().fold(0.0f64, |m, &v| m.max(libm::fabs(v)));
    let shifted = lambda - 64.0 * f64::EPSILON * scale.max(1.0);
    let mut v = vec![1.0; n];
    normalize(&mut v);
    for _ in 0..3 {
        let mut w = solve_shifted(d, e, shifted, &v);
        normalize(&mut w);
        v = w;
    }
    // fixed sign convention: largest-magnitude entry positive
    let mut imax = 0;
    for i in 1..n {
        if libm::fabs(v[i]) > libm::fabs(v[imax]) {
            imax = i;
        }
    }
    if v[imax] < 0.0 {
        for vi in v.iter_mut() {
            *vi = -*vi;
        }
    }
    v
}

fn normalize(v: &mut [f64]) {
    let norm = libm::sqrt(v.iter().map(|&x| x * x).sum::<f64>());
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn ql_2x2() {
        // [[2, 1], [1, 2]] has eigenvalues 1 and 3
        let mut d = vec![2.0, 2.0];
        let mut e = vec![1.0];
        let mut z = vec![1.0, 0.0];
        ql_eigen_first_row(&mut d, &mut e, &mut z);
        assert!((d[0] - 1.0).abs() < 1e-14);
        assert!((d[1] - 3.0).abs() < 1e-14);
        // eigenvectors (1,-1)/√2 and (1,1)/√2: first components ±1/√2
        assert!((z[0].abs() - core::f64::consts::FRAC_1_SQRT_2).abs() < 1e-14);
        assert!((z[1].abs() - core::f64::consts::FRAC_1_SQRT_2).abs() < 1e-14);
    }

    #[test]
    fn ql_discrete_laplacian() {
        // second-difference matrix: eigenvalues 2 - 2cos(kπ/(n+1))
        let n = 25;
        let mut d = vec![2.0; n];
        let mut e = vec![-1.0; n - 1];
        let mut z = vec![0.0; n];
        z[0] = 1.0;
        ql_eigen_first_row(&mut d, &mut e, &mut z);
        for k in 1..=n {
            let exact = 2.0 - 2.0 * libm::cos(k as f64 * core::f64::consts::PI / (n as f64 + 1.0));
            assert!((d[k - 1] - exact).abs() < 1e-12, "k = {k}");
        }
        // first components of normalized eigenvectors: √(2/(n+1))·sin(kπ/(n+1))
        for k in 1..=n {
            let exact = libm::sqrt(2.0 / (n as f64 + 1.0))
                * libm::sin(k as f64 * core::f64::consts::PI / (n as f64 + 1.0));
            assert!((z[k - 1].abs() - exact.abs()).abs() < 1e-12, "k = {k}");
        }
    }

    #[test]
    fn sturm_and_bisection() {
        let n = 40;
        let d = vec![2.0; n];
        let e = vec![-1.0; n - 1];
        let exact = 2.0 - 2.0 * libm::cos(core::f64::consts::PI / (n as f64 + 1.0));
        assert_eq!(sturm_count_below(&d, &e, exact - 1e-9), 0);
        assert_eq!(sturm_count_below(&d, &e, exact + 1e-9), 1);
        let lo = smallest_eigenvalue(&d, &e);
        assert!((lo - exact).abs() < 1e-13);
    }

    #[test]
    fn inverse_iteration_recovers_ground_vector() {
        let n = 60;
        let d = vec![2.0; n];
        let e = vec![-1.0; n - 1];
        let lam = smallest_eigenvalue(&d, &e);
        let v = inverse_iteration(&d, &e, lam);
        // residual ‖Tv - λv‖
        let mut res = 0.0f64;
        for i in 0..n {
            let mut hv = d[i] * v[i];
            if i > 0 {
                hv += e[i - 1] * v[i - 1];
            }
            if i < n - 1 {
                hv += e[i] * v[i + 1];
            }
            res += (hv - lam * v[i]) * (hv - lam * v[i]);
        }
        assert!(libm::sqrt(res) < 1e-11);
        // match against sin profile
        for i in 0..n {
            let exact = libm::sqrt(2.0 / (n as f64 + 1.0))
                * libm::sin((i as f64 + 1.0) * core::f64::consts::PI / (n as f64 + 1.0));
            assert!((v[i] - exact).abs() < 1e-9, "i = {i}");
        }
    }
}
