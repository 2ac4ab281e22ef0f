//! The regularized potential family `V_m` and everything it satisfies.
//!
//! `V_m(x) = 1/Γ(m+1) ∫₀^∞ u^m e^{-u} (x²+u)^{-1/2} du` for real `m > -1`
//! and `x ≥ 0` (the family is even in `x`; callers pass `|x|`). The index
//! `m = -1` is the Coulomb sentinel `V_{-1}(x) = 1/|x|`, justified by
//! `x^{-1} V_m(x) → 1` as `m → -1⁺`.
//!
//! Evaluation strategies:
//!
//! - closed form `√π·erfcx(x)` for `m = 0`, and `Γ(m+1/2)/Γ(m+1)` at `x = 0`;
//! - adaptive quadrature of the defining integral (any `m > -1`), with the
//!   inner `u = v²` substitution that removes the derivative blow-up of
//!   `(x²+u)^{-1/2}` near `u = 0`;
//! - large-`x` asymptotic series;
//! - three-term upward recursion and the degree-`m` polynomial form for
//!   integer `m` — both exact algebra, but they subtract nearly equal
//!   quantities as `x` grows, so the auto strategy treats them as
//!   validators, never the primary path. Their [`EvalResult::error_estimate`]
//!   tracks that cancellation growth.

mod asymptotic;
mod average;
mod bounds;
mod fourier;
mod poly;
mod recursion;

pub use asymptotic::v_asymptotic;
pub use average::{v_av, v_av_identity};
pub use bounds::{bracket, g_k, ratio_lower, ratio_upper, RatioBoundParams};
pub use fourier::{fourier_v, fourier_v_direct};
pub use poly::{pm_qm, pm_via_kummer, RationalPolynomial};
pub use recursion::{v_derivative, v_iterated, v_recursion};

use crate::quad::{self, QuadratureSpec};
use crate::special::{erfcx, log_gammafn};
use crate::Error;

pub(crate) const SQRT_PI: f64 = 1.772_453_850_905_516_027_3;

/// The order `m`: real `m > -1`, or exactly `-1` for the Coulomb sentinel.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PotentialIndex(f64);

impl PotentialIndex {
    /// The sentinel `V_{-1}(x) = 1/|x|`.
    pub const COULOMB: PotentialIndex = PotentialIndex(-1.0);

    pub fn new(m: f64) -> Result<Self, Error> {
        if m == -1.0 || m > -1.0 {
            Ok(PotentialIndex(m))
        } else {
            Err(Error::IndexOutOfRange(m))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    pub fn is_coulomb_sentinel(self) -> bool {
        self.0 == -1.0
    }

    /// `Some(m)` when the index is (numerically) a non-negative integer.
    pub fn as_integer(self) -> Option<u32> {
        let r = libm::round(self.0);
        if r >= 0.0 && libm::fabs(self.0 - r) < 1e-9 {
            Some(r as u32)
        } else {
            None
        }
    }
}

/// How a value was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Adaptive quadrature of the defining integral.
    Quadrature,
    /// Closed form: `√π·erfcx` for `m = 0`, the gamma ratio at `x = 0`,
    /// or the `1/x` sentinel.
    ClosedM0,
    /// Upward three-term recursion from `V_{-1}` and `V_0`.
    Recursion,
    /// Large-`x` asymptotic series.
    Asymptotic,
    /// `P_m(x²)V_0(x) + x·Q_{m-1}(x²)` with exact rational coefficients.
    Polynomial,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Quadrature => "quadrature",
            Strategy::ClosedM0 => "closed_m0",
            Strategy::Recursion => "recursion",
            Strategy::Asymptotic => "asymptotic",
            Strategy::Polynomial => "polynomial",
        }
    }
}

/// Requested evaluation method for [`v`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    /// Pick per the switchover rules; guarantees ≤ 1e-10 relative error.
    #[default]
    Auto,
    Quadrature,
    ClosedM0,
    Recursion,
    Asymptotic,
    Polynomial,
}

/// A potential value with an error estimate and the strategy that made it.
#[derive(Clone, Copy, Debug)]
pub struct EvalResult {
    pub value: f64,
    pub error_estimate: f64,
    pub strategy: Strategy,
}

/// Quadrature-to-asymptotics switchover abscissa.
pub(crate) fn x_switch(m: f64) -> f64 {
    libm::sqrt(50.0 + 10.0 * libm::fmax(m, 0.0))
}

/// `V_m(0) = Γ(m+1/2)/Γ(m+1)`, defined for `m > -1/2`.
pub fn v_at_zero(m: f64) -> Result<f64, Error> {
    if !(m > -0.5) {
        return Err(if m >= -1.0 {
            Error::DivergesAtZero(m)
        } else {
            Error::IndexOutOfRange(m)
        });
    }
    if m == 0.0 {
        // Γ(1/2)/Γ(1) = √π exactly
        return Ok(SQRT_PI);
    }
    Ok(libm::exp(log_gammafn(m + 0.5)? - log_gammafn(m + 1.0)?))
}

/// Closed form `V_0(x) = √π·erfcx(x)`.
pub fn v_closed_m0(x: f64) -> Result<f64, Error> {
    Ok(SQRT_PI * erfcx(x)?)
}

/// Evaluate `V_m(x)`.
///
/// `x` must be non-negative (pass `|x|`; the family is even). At `x = 0`
/// the index must satisfy `m > -1/2`, otherwise the value diverges.
pub fn v(
    m: PotentialIndex,
    x: f64,
    method: Method,
    spec: &QuadratureSpec,
) -> Result<EvalResult, Error> {
    spec.validate()?;
    if !(x >= 0.0) {
        return Err(Error::NegativeArgument(x));
    }
    let mf = m.get();

    if m.is_coulomb_sentinel() {
        if x == 0.0 {
            return Err(Error::DivergesAtZero(mf));
        }
        return Ok(EvalResult {
            value: 1.0 / x,
            error_estimate: f64::EPSILON / x,
            strategy: Strategy::ClosedM0,
        });
    }

    if x == 0.0 {
        let value = v_at_zero(mf)?;
        return Ok(EvalResult {
            value,
            error_estimate: 4.0 * f64::EPSILON * value,
            strategy: Strategy::ClosedM0,
        });
    }

    match method {
        Method::Auto => {
            if mf == 0.0 {
                let value = v_closed_m0(x)?;
                return Ok(EvalResult {
                    value,
                    error_estimate: 1e-15 * value,
                    strategy: Strategy::ClosedM0,
                });
            }
            if x >= x_switch(mf) {
                let target = libm::fmin(spec.rel_tol, 1e-12);
                if let Some(res) = asymptotic::asymptotic_auto(mf, x, target) {
                    return Ok(res);
                }
            }
            quadrature_v(mf, x, spec)
        }
        Method::Quadrature => quadrature_v(mf, x, spec),
        Method::ClosedM0 => {
            if mf != 0.0 {
                return Err(Error::StrategyUnavailable {
                    strategy: "closed_m0",
                    m: mf,
                    x,
                });
            }
            let value = v_closed_m0(x)?;
            Ok(EvalResult {
                value,
                error_estimate: 1e-15 * value,
                strategy: Strategy::ClosedM0,
            })
        }
        Method::Recursion => {
            let mi = m.as_integer().ok_or(Error::NonIntegerIndex(mf))?;
            recursion::recursion_eval(mi, x)
        }
        Method::Asymptotic => {
            let target = libm::fmin(spec.rel_tol, 1e-12);
            asymptotic::asymptotic_auto(mf, x, target).ok_or(Error::AsymptoticOrderInvalid {
                m: mf,
                x,
                order: 0,
            })
        }
        Method::Polynomial => {
            let mi = m.as_integer().ok_or(Error::NonIntegerIndex(mf))?;
            poly::polynomial_eval(mi, x)
        }
    }
}

/// `v` with the auto method and default tolerances.
pub fn v_auto(m: f64, x: f64) -> Result<EvalResult, Error> {
    v(
        PotentialIndex::new(m)?,
        x,
        Method::Auto,
        &QuadratureSpec::default(),
    )
}

/// Defining-integral evaluation (normalized in log space so any `m > -1`
/// works without overflow), split at `u = x²` with the `u = v²`
/// substitution on the inner piece.
fn quadrature_v(m: f64, x: f64, spec: &QuadratureSpec) -> Result<EvalResult, Error> {
    debug_assert!(x > 0.0);
    let lg = log_gammafn(m + 1.0)?;
    // coarse magnitude from the two-sided pinch 1/√(x²+m+1) < V_m
    let rough = 1.0 / libm::sqrt(x * x + m + 1.0);
    let target_abs = libm::fmax(spec.abs_tol, spec.rel_tol * rough);

    // truncation: u^m e^{-u-lg} / √(x²+u) < target/4 beyond `upper`
    let ln_target = libm::log(0.25 * target_abs) + lg + 0.5 * libm::log(x * x + 1.0);
    let upper = cutoff_log(m, ln_target);

    let piece_spec = QuadratureSpec {
        abs_tol: 0.25 * target_abs,
        rel_tol: 0.5 * spec.rel_tol,
        ..*spec
    };

    let mut value = 0.0;
    let mut error = 0.0;

    let split = x * x;
    let lower = if split < 0.5 * upper {
        // inner piece: ∫₀^{x²} u^m e^{-u} (x²+u)^{-1/2} du with u = v^k.
        // k = 2 removes the square-root kink for m ≥ -1/2; closer to the
        // m = -1 edge the u^m factor itself is singular and k is raised
        // until the transformed exponent k(m+1)-1 is at least 1, so the
        // integrand stays differentiable at the endpoint and the error
        // estimator stays honest.
        let k = if m >= -0.5 {
            2.0
        } else {
            libm::ceil(2.0 / (m + 1.0))
        };
        let exponent = k * (m + 1.0) - 1.0;
        let vmax = libm::pow(split, 1.0 / k);
        let inner = |t: f64| {
            let tk = libm::exp(k * libm::log(t));
            k * libm::exp(exponent * libm::log(t) - tk - lg) / libm::sqrt(x * x + tk)
        };
        let res = quad::adaptive_breakpoints(&inner, &[0.0, vmax], &piece_spec);
        if !res.converged {
            return Err(Error::QuadratureNoConvergence(
                "inner piece of the defining integral",
            ));
        }
        value += res.value;
        error += res.error_estimate;
        split
    } else {
        0.0
    };

    if lower < upper {
        let outer = |u: f64| libm::exp(m * libm::log(u) - u - lg) / libm::sqrt(x * x + u);
        let breaks = outer_breaks(m, lower, upper);
        let res = quad::adaptive_breakpoints(&outer, &breaks, &piece_spec);
        if !res.converged {
            return Err(Error::QuadratureNoConvergence(
                "outer piece of the defining integral",
            ));
        }
        value += res.value;
        error += res.error_estimate;
    }

    // certified tail bound: ∫_U^∞ u^m e^{-u} du ≤ U^m e^{-U} / (1 - m/U)
    if upper > libm::fmax(2.0 * m, 1.0) {
        error += libm::exp(m * libm::log(upper) - upper - lg) / libm::sqrt(x * x + upper)
            / (1.0 - libm::fmax(m, 0.0) / upper);
    }

    Ok(EvalResult {
        value,
        error_estimate: error,
        strategy: Strategy::Quadrature,
    })
}

/// Solve `m ln U - U = ln_target` for the truncation point.
fn cutoff_log(m: f64, ln_target: f64) -> f64 {
    let floor = libm::fmax(2.0 * libm::fmax(m, 0.0) + 20.0, 40.0);
    let mut upper = floor;
    for _ in 0..64 {
        let next = libm::fmax(m * libm::log(upper) - ln_target, floor);
        if libm::fabs(next - upper) < 1e-9 * upper {
            return libm::fmin(next, 740.0);
        }
        upper = next;
    }
    libm::fmin(upper, 740.0)
}

fn outer_breaks(m: f64, lower: f64, upper: f64) -> alloc::vec::Vec<f64> {
    let mut breaks = alloc::vec![lower];
    let mut t = libm::fmax(lower, 1e-3);
    if lower < t {
        breaks.push(t);
    }
    while t < upper {
        t *= 4.0;
        if t < upper {
            breaks.push(t);
        }
    }
    if m > 2.0 {
        for candidate in [0.5 * m, m, 2.0 * m] {
            if candidate > lower && candidate < upper {
                breaks.push(candidate);
            }
        }
    }
    breaks.push(upper);
    breaks.sort_unstable_by(f64::total_cmp);
    breaks.dedup_by(|a, b| libm::fabs(*a - *b) < 1e-12 * upper);
    breaks
}
