//! Regularized one-dimensional Coulomb potentials and effective 1D atomic models.
//!
//! The central object is the family
//!
//! ```text
//! V_m(x) = 1/Γ(m+1) ∫₀^∞ u^m e^{-u} / √(x² + u) du,      m > -1, x ≥ 0,
//! ```
//!
//! which behaves like `1/|x|` at large distance but stays finite at the
//! origin for `m > -1/2`. These potentials appear when a 3D Coulomb
//! interaction is averaged over lowest-Landau-band orbitals of a charged
//! particle in a strong magnetic field, so the crate also assembles the
//! effective 1D models built from them (single-orbital and determinant
//! ansätze), and ships a small finite-difference ground-state solver for
//! the resulting one- and two-particle Hamiltonians.
//!
//! Organization:
//!
//! - [`quad`]: adaptive Gauss–Kronrod integration on finite and
//!   semi-infinite intervals plus Gauss–Laguerre/Legendre rules.
//! - [`special`]: scalar special functions (gamma, scaled complementary
//!   error function, exponential integral, terminating Kummer series).
//! - [`potential`]: evaluation of `V_m` by quadrature, closed forms,
//!   recursions, asymptotics and polynomials, together with every bound,
//!   ratio bound, identity and transform the family satisfies.
//! - [`models`]: effective attraction/repulsion for the zero and Slater
//!   models, Landau pair decompositions, energy bookkeeping, and the
//!   delta-function scaling limit.
//! - [`solver`]: sparse symmetric discretization and ground states for
//!   the scaled 1D Hamiltonians (one particle, and two bosonic particles).
//!
//! The crate is `no_std` (with `alloc`); all floating-point math goes
//! through `libm`, so results do not depend on the host's libm.
//!
//! ```
//! use vm1d_core::potential::v_auto;
//!
//! // V_0(1) = √π·e·erfc(1)
//! let v0 = v_auto(0.0, 1.0)?;
//! assert!((v0.value - 0.7578721561413121).abs() < 1e-12);
//! // the family interpolates between Γ(m+1/2)/Γ(m+1) at 0 and 1/x far out
//! assert!(v_auto(2.0, 1e3)?.value * 1e3 - 1.0 < 0.0);
//! # Ok::<(), vm1d_core::Error>(())
//! ```

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub(crate) mod tridiag;

pub mod models;
pub mod potential;
pub mod quad;
pub mod solver;
pub mod special;

pub use error::Error;
