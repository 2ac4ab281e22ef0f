//! The averaged potential `V_av^N = (1/N) Σ_{m=0}^{N-1} V_m`.
//!
//! Two independent routes: the direct average, and the identity obtained
//! by summing the iterated recursion,
//!
//! ```text
//! V_av^N(x) = 2 V_N(x) - (2x²/N) [ V_{-1}(x) - V_{N-1}(x) ].
//! ```
//!
//! The average is convex on `x > 0` and has a cusp at the origin with
//! one-sided slope `-2/N` — unlike the individual `V_m`, whose derivative
//! vanishes at 0 for `m > 1/2`.

use super::{v, Method, PotentialIndex};
use crate::quad::QuadratureSpec;
use crate::Error;

/// Tight internal evaluations: the identity multiplies `V` values by
/// `x²`, so their errors must sit well below the final tolerance.
fn tight(m: f64, x: f64) -> Result<f64, Error> {
    let spec = QuadratureSpec {
        rel_tol: 1e-13,
        abs_tol: 1e-16,
        ..QuadratureSpec::default()
    };
    Ok(v(PotentialIndex::new(m)?, x, Method::Auto, &spec)?.value)
}

/// Direct average `(1/N) Σ_{m<N} V_m(x)`.
pub fn v_av(n: u32, x: f64) -> Result<f64, Error> {
    if n < 1 {
        return Err(Error::InvalidModelParameter("averaged potential needs N >= 1"));
    }
    if !(x >= 0.0) {
        return Err(Error::NegativeArgument(x));
    }
    let mut sum = 0.0;
    for m in 0..n {
        sum += tight(m as f64, x)?;
    }
    Ok(sum / n as f64)
}

/// Identity route `2 V_N - (2x²/N)(1/x - V_{N-1})`; at `x = 0` the bracket
/// vanishes and the value is `2 V_N(0)`.
///
/// Agreement with the direct route is conditioning-limited: the `x²`
/// factor amplifies evaluation error by roughly `x²(1/x + V_{N-1})/V_av`,
/// so near machine-level agreement holds for moderate `x` and degrades
/// like `x²` beyond (still ≲ 1e-6 relative at `x = 10³`).
pub fn v_av_identity(n: u32, x: f64) -> Result<f64, Error> {
    if n < 1 {
        return Err(Error::InvalidModelParameter("averaged potential needs N >= 1"));
    }
    if !(x >= 0.0) {
        return Err(Error::NegativeArgument(x));
    }
    let vn = tight(n as f64, x)?;
    if x == 0.0 {
        return Ok(2.0 * vn);
    }
    let vn1 = tight(n as f64 - 1.0, x)?;
    Ok(2.0 * vn - (2.0 * x * x / n as f64) * (1.0 / x - vn1))
}
