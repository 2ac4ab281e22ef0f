use core::fmt;

/// Error type shared by the whole crate.
///
/// Domain violations (bad index, evaluation at a pole, invalid tolerances)
/// are reported eagerly; numerical non-convergence inside an integrator is
/// normally reported through the `converged` flag of
/// [`quad::IntegrationResult`](crate::quad::IntegrationResult) and only
/// becomes an `Error` where an operation cannot return a partial result.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// Tolerances or limits in a quadrature spec violate its invariants.
    InvalidQuadratureSpec(&'static str),
    /// Laguerre weight exponent must satisfy `alpha > -1`.
    InvalidLaguerreAlpha(f64),
    /// Finite integration requires `a < b`.
    InvalidInterval { a: f64, b: f64 },
    /// Gamma-family function evaluated at a pole or outside its domain.
    GammaDomain(f64),
    /// Potential index out of range: `m > -1` is required (or exactly `-1`
    /// for the Coulomb sentinel).
    IndexOutOfRange(f64),
    /// `V_m(0)` diverges for `-1 <= m <= -1/2`.
    DivergesAtZero(f64),
    /// Evaluation point must be non-negative.
    NegativeArgument(f64),
    /// Operation is defined for integer `m` only.
    NonIntegerIndex(f64),
    /// Requested asymptotic order lies outside the validity heuristic.
    AsymptoticOrderInvalid { m: f64, x: f64, order: usize },
    /// The requested evaluation strategy does not apply at these arguments.
    StrategyUnavailable { strategy: &'static str, m: f64, x: f64 },
    /// Fourier transform has a logarithmic singularity at `xi = 0`.
    FourierAtZero,
    /// Antisymmetrizing a pair with equal orbital indices gives the null state.
    NullPairState(usize),
    /// Kummer series requires `a` to be a non-positive integer so it terminates.
    NonTerminatingKummer { a: f64 },
    /// Kummer denominator parameter hit a non-positive integer before termination.
    KummerDenominatorPole { b: f64, step: usize },
    /// Grid violates its invariants (odd point count >= 3, positive width).
    InvalidGrid(&'static str),
    /// Two-particle grids above the configured cap are refused.
    GridTooLarge { points: usize, cap: usize },
    /// Iterative eigensolver failed to reach the requested residual.
    EigenNoConvergence { iterations: usize, residual: f64 },
    /// An internal quadrature did not converge where a value is mandatory.
    QuadratureNoConvergence(&'static str),
    /// Model parameter out of range (electron count, charge, field strength).
    InvalidModelParameter(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidQuadratureSpec(what) => write!(f, "invalid quadrature spec: {what}"),
            Error::InvalidLaguerreAlpha(a) => {
                write!(f, "Laguerre weight exponent must exceed -1, got {a}")
            }
            Error::InvalidInterval { a, b } => write!(f, "invalid interval [{a}, {b}]"),
            Error::GammaDomain(x) => write!(f, "gamma-family function undefined at {x}"),
            Error::IndexOutOfRange(m) => {
                write!(f, "potential index must be > -1 (or exactly -1), got {m}")
            }
            Error::DivergesAtZero(m) => {
                write!(f, "V_m(0) diverges for m = {m} (requires m > -1/2)")
            }
            Error::NegativeArgument(x) => {
                write!(f, "argument must be non-negative, got {x} (V_m is even)")
            }
            Error::NonIntegerIndex(m) => write!(f, "operation requires integer m, got {m}"),
            Error::AsymptoticOrderInvalid { m, x, order } => write!(
                f,
                "asymptotic order {order} invalid at m = {m}, x = {x} (needs x^2 > m + order)"
            ),
            Error::StrategyUnavailable { strategy, m, x } => {
                write!(f, "strategy '{strategy}' unavailable at m = {m}, x = {x}")
            }
            Error::FourierAtZero => write!(f, "Fourier transform diverges logarithmically at xi = 0"),
            Error::NullPairState(m) => {
                write!(f, "antisymmetrized pair with m1 = m2 = {m} is the null state")
            }
            Error::NonTerminatingKummer { a } => {
                write!(f, "Kummer series terminates only for non-positive integer a, got {a}")
            }
            Error::KummerDenominatorPole { b, step } => {
                write!(f, "Kummer denominator parameter {b} hits zero at term {step}")
            }
            Error::InvalidGrid(what) => write!(f, "invalid grid: {what}"),
            Error::GridTooLarge { points, cap } => {
                write!(f, "grid of {points} points exceeds the two-particle cap {cap}")
            }
            Error::EigenNoConvergence { iterations, residual } => write!(
                f,
                "eigensolver stalled after {iterations} iterations (residual {residual:.3e})"
            ),
            Error::QuadratureNoConvergence(what) => {
                write!(f, "internal quadrature failed to converge: {what}")
            }
            Error::InvalidModelParameter(what) => write!(f, "invalid model parameter: {what}"),
        }
    }
}
