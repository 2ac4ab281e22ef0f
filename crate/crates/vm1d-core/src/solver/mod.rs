//! Finite-difference ground states for the effective 1D Hamiltonians.
//!
//! Second-order central differences on a symmetric grid with Dirichlet
//! walls at `±L`. The one-particle operator is tridiagonal and solved
//! directly (Sturm-count bisection plus inverse iteration); the bosonic
//! two-particle operator lives on the symmetric subspace `x₁ ↔ x₂`
//! (dimension `q(q+1)/2` for `q` interior points) and is solved by
//! Lanczos with full reorthogonalization from a deterministic start —
//! the ground vector is nodeless, so the all-ones seed always overlaps.
//!
//! Everything is deterministic for a fixed grid and tolerance.

mod sparse;

pub use sparse::SparseSym;

use alloc::vec;
use alloc::vec::Vec;

use crate::models::{FieldConfig, HamiltonianParams, Model};
use crate::tridiag;
use crate::Error;

/// Two-particle grids above this point count are refused (the symmetric
/// subspace grows quadratically).
pub const TWO_PARTICLE_POINT_CAP: usize = 401;

/// Symmetric 1D grid: `points` nodes (odd, so 0 is a node) spanning
/// `[-half_width, half_width]`, boundary nodes carrying the Dirichlet
/// condition.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid1D {
    half_width: f64,
    points: usize,
}

impl Grid1D {
    pub fn new(half_width: f64, points: usize) -> Result<Self, Error> {
        if !(half_width > 0.0) {
            return Err(Error::InvalidGrid("half-width must be positive"));
        }
        if points < 3 || points % 2 == 0 {
            return Err(Error::InvalidGrid("point count must be odd and >= 3"));
        }
        Ok(Grid1D { half_width, points })
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / (self.points as f64 - 1.0)
    }

    /// Node coordinate, `i ∈ [0, points)`.
    pub fn point(&self, i: usize) -> f64 {
        -self.half_width + i as f64 * self.spacing()
    }

    /// Number of interior (unknown) nodes.
    pub fn interior(&self) -> usize {
        self.points - 2
    }

    /// Coordinate of interior node `k ∈ [0, interior)`.
    pub fn interior_point(&self, k: usize) -> f64 {
        self.point(k + 1)
    }
}

/// What a discrete operator describes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OperatorMeta {
    pub particles: usize,
    pub model: Option<Model>,
    pub config: Option<FieldConfig>,
}

enum OperatorKind {
    Tridiagonal { diag: Vec<f64>, off: Vec<f64> },
    Sparse(SparseSym),
}

/// Sparse symmetric discretization of a 1D (or symmetric 2D) Hamiltonian.
pub struct DiscreteOperator {
    kind: OperatorKind,
    grid: Grid1D,
    pub meta: OperatorMeta,
}

impl DiscreteOperator {
    pub fn dim(&self) -> usize {
        match &self.kind {
            OperatorKind::Tridiagonal { diag, .. } => diag.len(),
            OperatorKind::Sparse(s) => s.dim(),
        }
    }

    pub fn grid(&self) -> &Grid1D {
        &self.grid
    }

    pub fn is_tridiagonal(&self) -> bool {
        matches!(self.kind, OperatorKind::Tridiagonal { .. })
    }

    pub fn matvec(&self, x: &[f64], y: &mut [f64]) {
        match &self.kind {
            OperatorKind::Tridiagonal { diag, off } => {
                let n = diag.len();
                for i in 0..n {
                    let mut acc = diag[i] * x[i];
                    if i > 0 {
                        acc += off[i - 1] * x[i - 1];
                    }
                    if i < n - 1 {
                        acc += off[i] * x[i + 1];
                    }
                    y[i] = acc;
                }
            }
            OperatorKind::Sparse(s) => s.matvec(x, y),
        }
    }

    /// Materialize as dense (tests and small diagnostics only).
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        match &self.kind {
            OperatorKind::Tridiagonal { diag, off } => {
                let n = diag.len();
                let mut dense = vec![vec![0.0; n]; n];
                for i in 0..n {
                    dense[i][i] = diag[i];
                    if i < n - 1 {
                        dense[i][i + 1] = off[i];
                        dense[i + 1][i] = off[i];
                    }
                }
                dense
            }
            OperatorKind::Sparse(s) => s.to_dense(),
        }
    }
}

/// One-particle operator from an arbitrary (full) potential `v(x)`:
/// `-(1/mass) d²/dx² + v(x)` with Dirichlet walls.
pub fn build_one_particle_with<F>(
    grid: Grid1D,
    mass: f64,
    potential: F,
    meta: OperatorMeta,
) -> Result<DiscreteOperator, Error>
where
    F: Fn(f64) -> Result<f64, Error>,
{
    if !(mass > 0.0) {
        return Err(Error::InvalidModelParameter("mass must be positive"));
    }
    let q = grid.interior();
    let h = grid.spacing();
    let kin = 1.0 / (mass * h * h);
    let mut diag = Vec::with_capacity(q);
    for k in 0..q {
        diag.push(2.0 * kin + potential(grid.interior_point(k))?);
    }
    let off = vec![-kin; q - 1];
    Ok(DiscreteOperator {
        kind: OperatorKind::Tridiagonal { diag, off },
        grid,
        meta,
    })
}

/// One-particle model operator: `-(1/M) d²/dx² - Z·Ṽ(x)`.
pub fn build_one_particle(
    grid: Grid1D,
    params: &HamiltonianParams,
) -> Result<DiscreteOperator, Error> {
    let z = params.config.z;
    let attraction = &params.potentials.attraction;
    build_one_particle_with(
        grid,
        params.config.effective_mass(),
        |x| Ok(-z * attraction.eval(x)?),
        OperatorMeta {
            particles: 1,
            model: Some(params.model),
            config: Some(params.config),
        },
    )
}

fn pair_index(q: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < q);
    // offset of row i in the packed upper triangle: Σ_{r<i} (q - r)
    i * (2 * q - i + 1) / 2 + (j - i)
}

/// Two-particle bosonic operator from tabulated one-particle diagonal
/// `pot[k]` and interaction `w_of_d[d] = W̃(d·h)` (`d = |i-j|`).
fn build_two_particle_tables(
    grid: Grid1D,
    mass: f64,
    pot: &[f64],
    w_of_d: &[f64],
    meta: OperatorMeta,
) -> Result<DiscreteOperator, Error> {
    if grid.points() > TWO_PARTICLE_POINT_CAP {
        return Err(Error::GridTooLarge {
            points: grid.points(),
            cap: TWO_PARTICLE_POINT_CAP,
        });
    }
    let q = grid.interior();
    let h = grid.spacing();
    let kin = 1.0 / (mass * h * h);
    let hop = -kin;
    let sqrt2 = core::f64::consts::SQRT_2;
    let dim = q * (q + 1) / 2;
    let mut triplets: Vec<(usize, usize, f64)> = Vec::with_capacity(3 * dim);
    for i in 0..q {
        for j in i..q {
            let r = pair_index(q, i, j);
            // diagonal: kinetic 2·2·kin plus both one-body potentials and
            // the pair interaction at separation (j-i)h
            triplets.push((r, r, 4.0 * kin + pot[i] + pot[j] + w_of_d[j - i]));
            // particle-1 hop i → i+1
            if i + 1 < q {
                let (ni, nj) = if i + 1 <= j { (i + 1, j) } else { (j, i + 1) };
                let r2 = pair_index(q, ni, nj);
                let amp = if i == j || ni == nj { hop * sqrt2 } else { hop };
                if r2 != r {
                    triplets.push((r.min(r2), r.max(r2), amp));
                }
            }
            // particle-2 hop j → j+1 (for i == j both hops are already
            // folded into the √2 amplitude above)
            if j + 1 < q && i < j {
                let r2 = pair_index(q, i, j + 1);
                triplets.push((r.min(r2), r.max(r2), hop));
            }
        }
    }
    Ok(DiscreteOperator {
        kind: OperatorKind::Sparse(SparseSym::from_upper_triplets(dim, triplets)),
        grid,
        meta,
    })
}

/// Two-particle bosonic model operator on the symmetric subspace:
/// `Σ_j [-(1/M)∂²_j - Z·Ṽ(x_j)] + W̃(x₁-x₂)`.
pub fn build_two_particle_bosonic(
    grid: Grid1D,
    params: &HamiltonianParams,
) -> Result<DiscreteOperator, Error> {
    let q = grid.interior();
    let h = grid.spacing();
    let z = params.config.z;
    let mut pot = Vec::with_capacity(q);
    for k in 0..q {
        pot.push(-z * params.potentials.attraction.eval(grid.interior_point(k))?);
    }
    let mut w_of_d = Vec::with_capacity(q);
    for d in 0..q {
        w_of_d.push(params.potentials.repulsion.eval(d as f64 * h)?);
    }
    build_two_particle_tables(
        grid,
        params.config.effective_mass(),
        &pot,
        &w_of_d,
        OperatorMeta {
            particles: 2,
            model: Some(params.model),
            config: Some(params.config),
        },
    )
}

/// Ground state: energy, normalized vector, residual `‖Hv - Ev‖ ≤ tol`,
/// and the iteration count the solver spent.
#[derive(Clone, Debug)]
pub struct GroundStateResult {
    pub energy: f64,
    pub eigvec: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
}

fn norm(v: &[f64]) -> f64 {
    libm::sqrt(v.iter().map(|&x| x * x).sum::<f64>())
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

fn residual_norm(op: &DiscreteOperator, v: &[f64], energy: f64) -> f64 {
    let mut hv = vec![0.0; v.len()];
    op.matvec(v, &mut hv);
    libm::sqrt(
        hv.iter()
            .zip(v)
            .map(|(&a, &b)| (a - energy * b) * (a - energy * b))
            .sum::<f64>(),
    )
}

/// Lowest eigenpair of a discrete operator.
///
/// Tridiagonal operators are solved directly; sparse ones by Lanczos.
/// The returned energy is a variational estimate from above: the Rayleigh
/// quotient of any vector is `≥ energy - tol`.
pub fn ground_state(op: &DiscreteOperator, tol: f64) -> Result<GroundStateResult, Error> {
    if !(tol > 0.0) {
        return Err(Error::InvalidModelParameter("solver tolerance must be > 0"));
    }
    match &op.kind {
        OperatorKind::Tridiagonal { diag, off } => {
            // bisection localizes the eigenvalue to ~ε·(Gershgorin radius);
            // the Rayleigh quotient of the inverse-iteration vector then
            // squares the accuracy, which matters on fine grids where the
            // operator norm is large
            let mut energy = tridiag::smallest_eigenvalue(diag, off);
            let mut eigvec = tridiag::inverse_iteration(diag, off, energy);
            let mut iterations = 3;
            for _ in 0..2 {
                let mut hv = vec![0.0; eigvec.len()];
                op.matvec(&eigvec, &mut hv);
                energy = dot(&eigvec, &hv) / dot(&eigvec, &eigvec);
                let residual = residual_norm(op, &eigvec, energy);
                if residual <= tol {
                    return Ok(GroundStateResult {
                        energy,
                        eigvec,
                        residual,
                        iterations,
                    });
                }
                eigvec = tridiag::inverse_iteration(diag, off, energy);
                iterations += 3;
            }
            let residual = residual_norm(op, &eigvec, energy);
            if !(residual <= tol) {
                return Err(Error::EigenNoConvergence {
                    iterations,
                    residual,
                });
            }
            Ok(GroundStateResult {
                energy,
                eigvec,
                residual,
                iterations,
            })
        }
        OperatorKind::Sparse(_) => lanczos_ground_state(op, tol),
    }
}

/// Lanczos with full reorthogonalization and a deterministic all-ones
/// start (the nodeless ground vector always overlaps it).
fn lanczos_ground_state(op: &DiscreteOperator, tol: f64) -> Result<GroundStateResult, Error> {
    let dim = op.dim();
    let max_steps = dim.min(500);
    let mut basis: Vec<Vec<f64>> = Vec::new();
    let mut alpha: Vec<f64> = Vec::new();
    let mut beta: Vec<f64> = Vec::new();

    let mut v = vec![1.0; dim];
    let n0 = norm(&v);
    v.iter_mut().for_each(|x| *x /= n0);
    basis.push(v);

    let mut w = vec![0.0; dim];
    loop {
        let j = basis.len() - 1;
        let steps = j + 1;
        op.matvec(&basis[j], &mut w);
        let a = dot(&w, &basis[j]);
        alpha.push(a);
        for (wi, (vi, pi)) in w.iter_mut().zip(
            basis[j]
                .iter()
                .zip(if j > 0 { basis[j - 1].iter() } else { basis[j].iter() }),
        ) {
            *wi -= a * vi;
            if j > 0 {
                *wi -= beta[j - 1] * pi;
            }
        }
        // full reorthogonalization keeps the basis clean over hundreds of
        // steps
        for b in &basis {
            let p = dot(&w, b);
            for (wi, bi) in w.iter_mut().zip(b) {
                *wi -= p * bi;
            }
        }
        let b = norm(&w);

        // projected smallest eigenpair and its residual bound |β·s_last|
        if steps >= 8 || b < 1e-13 {
            let theta = tridiag::smallest_eigenvalue(&alpha, &beta);
            let s = tridiag::inverse_iteration(&alpha, &beta, theta);
            let bound = b * libm::fabs(*s.last().unwrap());
            if bound <= 0.1 * tol || b < 1e-13 || steps == max_steps {
                // assemble the Ritz vector
                let mut vec_out = vec![0.0; dim];
                for (coeff, bvec) in s.iter().zip(&basis) {
                    for (o, &bi) in vec_out.iter_mut().zip(bvec) {
                        *o += coeff * bi;
                    }
                }
                let nn = norm(&vec_out);
                vec_out.iter_mut().for_each(|x| *x /= nn);
                // Rayleigh quotient of the assembled Ritz vector is more
                // accurate than the projected eigenvalue
                let mut hv = vec![0.0; dim];
                op.matvec(&vec_out, &mut hv);
                let theta = dot(&vec_out, &hv);
                let residual = residual_norm(op, &vec_out, theta);
                if residual <= tol {
                    let mut imax = 0;
                    for i in 1..dim {
                        if libm::fabs(vec_out[i]) > libm::fabs(vec_out[imax]) {
                            imax = i;
                        }
                    }
                    if vec_out[imax] < 0.0 {
                        vec_out.iter_mut().for_each(|x| *x = -*x);
                    }
                    return Ok(GroundStateResult {
                        energy: theta,
                        eigvec: vec_out,
                        residual,
                        iterations: steps,
                    });
                }
                if steps == max_steps || b < 1e-13 {
                    return Err(Error::EigenNoConvergence {
                        iterations: steps,
                        residual,
                    });
                }
            }
        }
        if steps == max_steps {
            return Err(Error::EigenNoConvergence {
                iterations: steps,
                residual: f64::INFINITY,
            });
        }
        beta.push(b);
        let mut next = w.clone();
        next.iter_mut().for_each(|x| *x /= b);
        basis.push(next);
    }
}

/// Settings for the binding probe.
#[derive(Clone, Copy, Debug)]
pub struct SolverSettings {
    pub grid_one: Grid1D,
    pub grid_two: Grid1D,
    pub tol: f64,
}

impl Default for SolverSettings {
    fn default() -> Self {
        SolverSettings {
            grid_one: Grid1D {
                half_width: 40.0,
                points: 2001,
            },
            grid_two: Grid1D {
                half_width: 40.0,
                points: 201,
            },
            tol: 1e-10,
        }
    }
}

/// Outcome of the numerical binding probe `E₀(N) < E₀(N-1) - margin`.
#[derive(Clone, Debug)]
pub struct BindingReport {
    pub bound: bool,
    pub energy_n: f64,
    pub energy_n_minus_1: f64,
    pub margin: f64,
    /// `|E₀ - E₀(1.5·L)|`: how much the Dirichlet walls still move the answer.
    pub box_sensitivity: f64,
    /// `|E₀ - E₀(coarser grid)|`: discretization sensitivity.
    pub grid_sensitivity: f64,
}

fn model_ground_energy(
    config: &FieldConfig,
    model: Model,
    particles: usize,
    grid: Grid1D,
    tol: f64,
) -> Result<f64, Error> {
    let cfg = FieldConfig {
        n: particles,
        ..*config
    };
    // the one-electron reduction of either ansatz is the m = 0 orbital:
    // V_av^1 = V_0, so the N-1 = 1 reference of the Slater chain is the
    // zero model
    let effective_model = if particles == 1 { Model::Zero } else { model };
    let params = crate::models::hamiltonian_params(&cfg, effective_model)?;
    let op = match particles {
        1 => build_one_particle(grid, &params)?,
        2 => build_two_particle_bosonic(grid, &params)?,
        _ => return Err(Error::InvalidModelParameter("binding probe supports N <= 2")),
    };
    Ok(ground_state(&op, tol)?.energy)
}

/// Numerical binding probe for `N ∈ {1, 2}` with sensitivity diagnostics.
///
/// `E₀(0) = 0`; the margin is `10·tol`.
pub fn binding_check(
    config: &FieldConfig,
    model: Model,
    particles: usize,
    settings: &SolverSettings,
) -> Result<BindingReport, Error> {
    if particles == 0 || particles > 2 {
        return Err(Error::InvalidModelParameter("binding probe supports N in {1, 2}"));
    }
    let grid = if particles == 1 {
        settings.grid_one
    } else {
        settings.grid_two
    };
    let e_n = model_ground_energy(config, model, particles, grid, settings.tol)?;
    let e_prev = if particles == 1 {
        0.0
    } else {
        model_ground_energy(config, model, 1, settings.grid_one, settings.tol)?
    };
    // sensitivity re-runs: larger box, coarser grid (point counts kept odd)
    let wide = Grid1D::new(1.5 * grid.half_width(), grid.points())?;
    let e_wide = model_ground_energy(config, model, particles, wide, settings.tol)?;
    let coarse_points = {
        let half = grid.points() / 2;
        if half % 2 == 0 {
            half + 1
        } else {
            half
        }
    };
    let coarse = Grid1D::new(grid.half_width(), coarse_points.max(3))?;
    let e_coarse = model_ground_energy(config, model, particles, coarse, settings.tol)?;
    let margin = 10.0 * settings.tol;
    Ok(BindingReport {
        bound: e_n < e_prev - margin,
        energy_n: e_n,
        energy_n_minus_1: e_prev,
        margin,
        box_sensitivity: libm::fabs(e_n - e_wide),
        grid_sensitivity: libm::fabs(e_n - e_coarse),
    })
}

/// Ground energy of `-(1/mass) d²/dx² - z·δ(x)` with the delta realized
/// as a single-cell well of depth `z/h` at the center node; converges to
/// `-mass·z²/4` as `h → 0` (the discrete lattice well is exactly
/// `-(2/(mass h²))(√(1+s²)-1)` with `s = mass·z·h/2`, an `O(h²)` bias).
pub fn delta_well_benchmark(mass: f64, z: f64, grid: Grid1D) -> Result<f64, Error> {
    if !(mass > 0.0) || !(z > 0.0) {
        return Err(Error::InvalidModelParameter("delta well needs mass > 0, z > 0"));
    }
    let h = grid.spacing();
    let center = (grid.points() - 1) / 2;
    let op = build_one_particle_with(
        grid,
        mass,
        |x| {
            // the center node is the only one carrying the well
            Ok(if libm::fabs(x) < 0.5 * h { -z / h } else { 0.0 })
        },
        OperatorMeta {
            particles: 1,
            model: None,
            config: None,
        },
    )?;
    debug_assert!(libm::fabs(grid.point(center)) < 1e-12 * grid.half_width());
    Ok(ground_state(&op, 1e-10)?.energy)
}
