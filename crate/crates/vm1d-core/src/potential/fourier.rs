//! Fourier transform of `V_m`.
//!
//! ```text
//! V̂_m(ξ) = (1/√(2π)) ∫ V_m(x) e^{-ixξ} dx
//!        = (4^{m+1}/√(2π)) ∫₀^∞ s^m e^{-s} (ξ²+4s)^{-(m+1)} ds,
//! ```
//!
//! positive, even in `ξ`, with a logarithmic singularity at `ξ = 0`
//! (for `m = 0` it equals `e^{ξ²/4} E₁(ξ²/4)/√(2π)`, which blows up like
//! `|ln(ξ²/4)|/√(2π)`).
//!
//! Because `V_m ~ 1/x` decays too slowly for naive windowing, the direct
//! (validation) route integrates `cos(ξx) V_m(x)` out to `X = 200/max(ξ,
//! 0.1)` and corrects the tail analytically: the integrand beyond `X` is
//! replaced by its asymptotic series and `∫_X^∞ cos(ξx) x^{-n} dx` is
//! expanded by iterated integration by parts (each level shrinks by
//! `~n/(ξX)`).

use alloc::vec::Vec;

use super::{v, x_switch, Method, PotentialIndex};
use crate::quad::{self, QuadratureSpec};
use crate::Error;

const SQRT_2PI: f64 = 2.506_628_274_631_000_5;

/// Transform-side evaluation of `V̂_m(ξ)` by quadrature of the
/// one-dimensional integral representation.
pub fn fourier_v(m: f64, xi: f64, spec: &QuadratureSpec) -> Result<f64, Error> {
    spec.validate()?;
    if !(m > -1.0) {
        return Err(Error::IndexOutOfRange(m));
    }
    if xi == 0.0 || !xi.is_finite() {
        return Err(Error::FourierAtZero);
    }
    let xi = libm::fabs(xi);
    let xi2 = xi * xi;
    let ln4 = libm::log(4.0);
    let integrand = |s: f64| {
        libm::exp((m + 1.0) * (ln4 - libm::log(xi2 + 4.0 * s)) + m * libm::log(s) - s)
    };
    // ladder resolving both the ξ²/4 scale of the rational factor and the
    // e^{-s} tail
    let eps = 0.25 * xi2;
    let upper = libm::fmin(libm::fmax(40.0, -libm::log(0.25 * spec.abs_tol.max(1e-300))), 740.0)
        + 2.0 * libm::fmax(m, 0.0);
    let mut breaks: Vec<f64> = alloc::vec![0.0];
    let mut t = libm::fmin(eps, 1.0);
    if t <= 0.0 || t >= upper {
        t = libm::fmin(1.0, 0.5 * upper);
    }
    while t < upper {
        breaks.push(t);
        t *= 4.0;
    }
    breaks.push(upper);
    breaks.sort_unstable_by(f64::total_cmp);
    breaks.dedup_by(|a, b| libm::fabs(*a - *b) < 1e-14 * upper);

    let res = quad::adaptive_breakpoints(&integrand, &breaks, spec);
    if !res.converged {
        return Err(Error::QuadratureNoConvergence("Fourier integral representation"));
    }
    Ok(res.value / SQRT_2PI)
}

/// Validation route: windowed direct cosine transform with the analytic
/// `1/x`-family tail correction. Agrees with [`fourier_v`] to ~1e-6.
pub fn fourier_v_direct(m: f64, xi: f64, spec: &QuadratureSpec) -> Result<f64, Error> {
    spec.validate()?;
    if !(m > -1.0) {
        return Err(Error::IndexOutOfRange(m));
    }
    if xi == 0.0 || !xi.is_finite() {
        return Err(Error::FourierAtZero);
    }
    let xi = libm::fabs(xi);
    let window = 200.0 / libm::fmax(xi, 0.1);
    if window <= x_switch(m) {
        // the tail correction needs the asymptotic series valid at the
        // window edge
        return Err(Error::AsymptoticOrderInvalid {
            m,
            x: window,
            order: 2,
        });
    }

    let inner_spec = QuadratureSpec {
        rel_tol: 1e-11,
        abs_tol: 1e-13,
        ..*spec
    };
    let idx = PotentialIndex::new(m)?;
    let f = |x: f64| {
        let vm = v(idx, x, Method::Auto, &inner_spec)
            .map(|r| r.value)
            .unwrap_or(f64::NAN);
        vm * libm::cos(xi * x)
    };
    // break at half-periods so each segment is a smooth hump
    let half_period = core::f64::consts::PI / xi;
    let mut breaks: Vec<f64> = alloc::vec![0.0];
    let mut t = half_period;
    while t < window {
        breaks.push(t);
        t += half_period;
    }
    breaks.push(window);
    let window_spec = QuadratureSpec {
        rel_tol: libm::fmax(spec.rel_tol, 1e-10),
        abs_tol: libm::fmax(spec.abs_tol, 1e-11),
        max_subdivisions: spec.max_subdivisions.max(4 * breaks.len()),
        rule_order: spec.rule_order,
    };
    let res = quad::adaptive_breakpoints(&f, &breaks, &window_spec);
    if !res.converged || !res.value.is_finite() {
        return Err(Error::QuadratureNoConvergence("windowed direct transform"));
    }

    // tail: V_m(x) ≈ 1/x - (m+1)/(2x³) + 3(m+2)(m+1)/(8x⁵) beyond the window
    let coefficients = [1.0, -(m + 1.0) / 2.0, 3.0 * (m + 2.0) * (m + 1.0) / 8.0];
    let mut tail = 0.0;
    for (j, c) in coefficients.iter().enumerate() {
        tail += c * cos_tail(2 * j as u32 + 1, xi, window, 8);
    }
    Ok((res.value + tail) * 2.0 / SQRT_2PI)
}

/// `∫_X^∞ cos(ξx) x^{-n} dx` by iterated integration by parts.
fn cos_tail(n: u32, xi: f64, x: f64, depth: u32) -> f64 {
    if depth == 0 {
        return 0.0;
    }
    -libm::sin(xi * x) / (xi * libm::pow(x, n as f64))
        + (n as f64 / xi) * sin_tail(n + 1, xi, x, depth - 1)
}

/// `∫_X^∞ sin(ξx) x^{-n} dx` by iterated integration by parts.
fn sin_tail(n: u32, xi: f64, x: f64, depth: u32) -> f64 {
    if depth == 0 {
        return 0.0;
    }
    libm::cos(xi * x) / (xi * libm::pow(x, n as f64))
        - (n as f64 / xi) * cos_tail(n + 1, xi, x, depth - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::exp_integral_e1;

    fn dspec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    fn m0_closed(xi: f64) -> f64 {
        let a = 0.25 * xi * xi;
        libm::exp(a) * exp_integral_e1(a).unwrap() / SQRT_2PI
    }

    #[test]
    fn m0_matches_exponential_integral_form() {
        // e^{ξ²/4} E₁(ξ²/4)/√(2π); at ξ = 2 this is e·E₁(1)/√(2π) ≈ 0.23791
        for &xi in &[0.5, 1.0, 2.0, 5.0] {
            let got = fourier_v(0.0, xi, &dspec()).unwrap();
            let expect = m0_closed(xi);
            assert!(
                libm::fabs(got - expect) < 1e-10 * expect,
                "xi = {xi}: {got} vs {expect}"
            );
        }
        let at2 = fourier_v(0.0, 2.0, &dspec()).unwrap();
        assert!(libm::fabs(at2 - 0.237_907_6) < 1e-6, "{at2}");
    }

    #[test]
    fn evenness_and_positivity() {
        for &m in &[0.0, 0.5, 1.0, 3.0] {
            for &xi in &[0.3, 1.0, 4.0] {
                let plus = fourier_v(m, xi, &dspec()).unwrap();
                let minus = fourier_v(m, -xi, &dspec()).unwrap();
                assert!(plus > 0.0);
                assert_eq!(plus, minus);
            }
        }
    }

    #[test]
    fn zero_frequency_rejected() {
        assert!(matches!(fourier_v(0.0, 0.0, &dspec()), Err(Error::FourierAtZero)));
        assert!(matches!(
            fourier_v_direct(1.0, 0.0, &dspec()),
            Err(Error::FourierAtZero)
        ));
    }

    #[test]
    fn log_singularity_growth_at_small_xi() {
        // value ~ |ln(ξ²/4)|/√(2π) as ξ → 0⁺: the ratio tends to 1 on a
        // log grid
        let mut prev_gap = f64::INFINITY;
        for &xi in &[1e-2, 1e-3, 1e-4] {
            let got = fourier_v(0.0, xi, &dspec()).unwrap();
            let log_term = libm::fabs(libm::log(0.25 * xi * xi)) / SQRT_2PI;
            let ratio = got / log_term;
            let gap = libm::fabs(ratio - 1.0);
            assert!(gap < prev_gap, "xi = {xi}: ratio {ratio}");
            prev_gap = gap;
        }
        assert!(prev_gap < 0.07);
    }

    #[test]
    fn windowed_direct_transform_agrees() {
        for &m in &[0.0, 1.0, 2.0] {
            let direct = fourier_v_direct(m, 1.0, &dspec()).unwrap();
            let transform = fourier_v(m, 1.0, &dspec()).unwrap();
            assert!(
                libm::fabs(direct - transform) < 1e-6,
                "m = {m}: {direct} vs {transform}"
            );
        }
    }

    #[test]
    fn tail_expansion_against_brute_force() {
        // ∫_X^∞ cos(ξx)/x dx summed by parts vs a long finite sum of humps
        let (xi, x0) = (1.0, 50.0);
        let fine = {
            // integrate out to 50 000 with half-period panels
            let f = |x: f64| libm::cos(xi * x) / x;
            let mut breaks = alloc::vec![x0];
            let mut t = x0 + core::f64::consts::PI;
            while t < 5e4 {
                breaks.push(t);
                t += 4.0 * core::f64::consts::PI;
            }
            breaks.push(5e4);
            let spec = QuadratureSpec {
                max_subdivisions: 40_000,
                ..QuadratureSpec::default()
            };
            quad::adaptive_breakpoints(&f, &breaks, &spec).value
                + cos_tail(1, xi, 5e4, 8)
        };
        let series = cos_tail(1, xi, x0, 8);
        assert!(libm::fabs(series - fine) < 1e-8, "{series} vs {fine}");
    }
}
