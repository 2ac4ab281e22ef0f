//! Effective 1D atomic models in a strong magnetic field.
//!
//! After the transverse degrees of freedom are locked into the lowest
//! Landau band and the field strength `B` is scaled out, an `N`-electron
//! atom reduces to the 1D Hamiltonian
//!
//! ```text
//! h(N,Z,M) = Σ_j [ -(1/M) d²/dx_j² - Z·Ṽ(x_j) ] + Σ_{j<k} W̃(x_j - x_k),
//! ```
//!
//! whose only field dependence is the effective mass `M = B^{-1/2}`; the
//! physical confined energy is recovered as `E₀ = √B·e_h + N·B`.
//!
//! Two transverse ansätze are assembled here:
//!
//! - **zero model** — every electron in the `m = 0` orbital:
//!   `Ṽ = V_0`, `W̃(s) = (1/√2) V_0(|s|/√2)`;
//! - **Slater model** — the antisymmetrized product of orbitals
//!   `m = 0 … N-1`: `Ṽ = V_av^N` and `W̃` a convex combination of odd-index
//!   `V_k(|s|/√2)/√2`, with weights obtained by uniformly averaging the
//!   exact pair decompositions over all occupied pairs.
//!
//! Both interactions keep the `1/|s|` Coulomb behavior at large
//! separation but are finite at contact, smaller there by at least the
//! `1/√2` factor — the mechanism that lets extra electrons sit near the
//! nucleus simultaneously.

mod delta;
mod pair;

pub use delta::{delta_mass_unit_window, delta_pairing, delta_scaled};
pub use pair::{pair_decomposition, PairCoefficients};

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::potential::v_auto;
use crate::Error;

/// Electron count, nuclear charge, and field strength.
///
/// The effective mass is never stored: it is *defined* as `B^{-1/2}` and
/// recomputed on demand, so `M·√B = 1` holds identically in the
/// representation. `Z = 0` is admitted as the free-particle control case.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FieldConfig {
    pub n: usize,
    pub z: f64,
    pub b: f64,
}

impl FieldConfig {
    pub fn new(n: usize, z: f64, b: f64) -> Result<Self, Error> {
        if n < 1 {
            return Err(Error::InvalidModelParameter("electron count must be >= 1"));
        }
        if !(z >= 0.0) {
            return Err(Error::InvalidModelParameter("nuclear charge must be >= 0"));
        }
        if !(b > 0.0) {
            return Err(Error::InvalidModelParameter("field strength must be > 0"));
        }
        Ok(FieldConfig { n, z, b })
    }

    /// `M = B^{-1/2}`: strong fields make the electrons extremely light.
    pub fn effective_mass(&self) -> f64 {
        1.0 / libm::sqrt(self.b)
    }
}

/// Which transverse ansatz.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    Zero,
    Slater,
}

impl Model {
    pub fn as_str(self) -> &'static str {
        match self {
            Model::Zero => "zero",
            Model::Slater => "slater",
        }
    }
}

/// A convex combination `x ↦ s·Σ_k w_k V_k(s·|x|)` with fixed scale `s`
/// (`1` for attractions, `1/√2` for pair interactions).
#[derive(Clone, Debug, PartialEq)]
pub struct EffectiveInteraction {
    terms: Vec<(usize, f64)>,
    scale: f64,
}

impl EffectiveInteraction {
    fn new(terms: Vec<(usize, f64)>, scale: f64) -> Result<Self, Error> {
        if terms.is_empty() || !(scale > 0.0) {
            return Err(Error::InvalidModelParameter("empty interaction"));
        }
        let mut total = 0.0;
        for window in terms.windows(2) {
            if window[0].0 >= window[1].0 {
                return Err(Error::InvalidModelParameter(
                    "interaction indices must be sorted and unique",
                ));
            }
        }
        for &(_, w) in &terms {
            if !(w > 0.0) {
                return Err(Error::InvalidModelParameter("interaction weights must be > 0"));
            }
            total += w;
        }
        if libm::fabs(total - 1.0) > 1e-12 {
            return Err(Error::InvalidModelParameter("interaction weights must sum to 1"));
        }
        Ok(EffectiveInteraction { terms, scale })
    }

    pub fn terms(&self) -> &[(usize, f64)] {
        &self.terms
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn max_index(&self) -> usize {
        self.terms.last().map(|&(k, _)| k).unwrap_or(0)
    }

    /// Evaluate at a (signed) separation; the combination is even.
    pub fn eval(&self, separation: f64) -> Result<f64, Error> {
        let x = libm::fabs(separation) * self.scale;
        let mut sum = 0.0;
        for &(k, w) in &self.terms {
            sum += w * v_auto(k as f64, x)?.value;
        }
        Ok(self.scale * sum)
    }
}

/// Attraction `Ṽ` and pair interaction `W̃` of one model.
#[derive(Clone, Debug, PartialEq)]
pub struct ModelPotentials {
    pub attraction: EffectiveInteraction,
    pub repulsion: EffectiveInteraction,
}

const FRAC_1_SQRT_2: f64 = core::f64::consts::FRAC_1_SQRT_2;

/// Zero model: `Ṽ = V_0`, `W̃(s) = (1/√2) V_0(|s|/√2)`.
pub fn zero_model(n: usize) -> Result<ModelPotentials, Error> {
    if n < 1 {
        return Err(Error::InvalidModelParameter("zero model needs N >= 1"));
    }
    Ok(ModelPotentials {
        attraction: EffectiveInteraction::new(alloc::vec![(0, 1.0)], 1.0)?,
        repulsion: EffectiveInteraction::new(alloc::vec![(0, 1.0)], FRAC_1_SQRT_2)?,
    })
}

/// Slater model: `Ṽ = V_av^N` and `W̃` the uniform average of the
/// antisymmetrized pair decompositions over occupied pairs `(m₁ < m₂)`
/// drawn from `{0, …, N-1}` — computed exactly, converted to floats once.
///
/// The support is odd and contained in `{1, …, 2N-3}` (the largest
/// relative momentum a pair from the occupied set can carry), so within
/// the generic odd range `{1, …, 2N-1}` and, for `N ≥ 4`, reaching
/// indices above `N` itself.
pub fn slater_model(n: usize) -> Result<ModelPotentials, Error> {
    if n < 2 {
        return Err(Error::InvalidModelParameter("Slater model needs N >= 2"));
    }
    let attraction =
        EffectiveInteraction::new((0..n).map(|m| (m, 1.0 / n as f64)).collect(), 1.0)?;

    let pair_count = n * (n - 1) / 2;
    let inv_pairs = BigRational::new(1.into(), (pair_count as i64).into());
    let mut accum: Vec<BigRational> = alloc::vec![BigRational::zero(); 2 * n];
    for m1 in 0..n {
        for m2 in (m1 + 1)..n {
            for (k, w) in pair::pair_weights_exact(m1, m2, true)? {
                accum[k] += w * &inv_pairs;
            }
        }
    }
    let terms: Vec<(usize, f64)> = accum
        .iter()
        .enumerate()
        .filter(|(_, w)| !w.is_zero())
        .map(|(k, w)| (k, w.to_f64().unwrap_or(f64::NAN)))
        .collect();
    debug_assert!(terms.iter().all(|&(k, _)| k % 2 == 1));
    Ok(ModelPotentials {
        attraction,
        repulsion: EffectiveInteraction::new(terms, FRAC_1_SQRT_2)?,
    })
}

/// Dispatch on the model kind.
pub fn model_potentials(model: Model, n: usize) -> Result<ModelPotentials, Error> {
    match model {
        Model::Zero => zero_model(n),
        Model::Slater => slater_model(n),
    }
}

/// Everything the discretized Hamiltonian needs.
#[derive(Clone, Debug)]
pub struct HamiltonianParams {
    pub config: FieldConfig,
    pub model: Model,
    /// `1/M = √B`, the kinetic prefactor.
    pub kinetic_coefficient: f64,
    pub potentials: ModelPotentials,
}

/// Bundle kinetic coefficient `1/M`, attraction `-Z·Ṽ` and pairwise `W̃`.
pub fn hamiltonian_params(config: &FieldConfig, model: Model) -> Result<HamiltonianParams, Error> {
    if model == Model::Slater && config.n < 2 {
        return Err(Error::InvalidModelParameter("Slater model needs N >= 2"));
    }
    Ok(HamiltonianParams {
        config: *config,
        model,
        kinetic_coefficient: 1.0 / config.effective_mass(),
        potentials: model_potentials(model, config.n)?,
    })
}

/// Undo the field scaling: `E₀ = √B·e_h + N·B`.
pub fn energy_reconstruct(e_h: f64, n: usize, b: f64) -> f64 {
    libm::sqrt(b) * e_h + n as f64 * b
}
