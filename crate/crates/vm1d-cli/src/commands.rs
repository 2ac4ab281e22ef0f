//! Implementations behind the subcommands (everything except `verify`).

use crate::format::g17;
use vm1d_core::models::{
    delta_pairing, energy_reconstruct, hamiltonian_params, pair_decomposition, FieldConfig, Model,
};
use vm1d_core::potential::{fourier_v, v, v_av, Method, PotentialIndex};
use vm1d_core::quad::QuadratureSpec;
use vm1d_core::solver::{
    build_one_particle, build_two_particle_bosonic, ground_state, DiscreteOperator, Grid1D,
    GroundStateResult,
};
use vm1d_core::Error;

pub fn eval(m: f64, x: f64, method: Method, spec: &QuadratureSpec) -> Result<String, Error> {
    let result = v(PotentialIndex::new(m)?, x, method, spec)?;
    Ok(g17(result.value))
}

pub enum TableFormat {
    Csv,
    Json,
}

pub fn table(
    m_list: &[f64],
    x_min: f64,
    x_max: f64,
    points: usize,
    log: bool,
    format: &TableFormat,
    spec: &QuadratureSpec,
) -> Result<String, Error> {
    let xs: Vec<f64> = if points == 1 {
        vec![x_min]
    } else if log {
        let (a, b) = (x_min.ln(), x_max.ln());
        (0..points)
            .map(|k| (a + (b - a) * k as f64 / (points - 1) as f64).exp())
            .collect()
    } else {
        (0..points)
            .map(|k| x_min + (x_max - x_min) * k as f64 / (points - 1) as f64)
            .collect()
    };
    let indices: Vec<PotentialIndex> = m_list
        .iter()
        .map(|&m| PotentialIndex::new(m))
        .collect::<Result<_, _>>()?;

    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(xs.len());
    for &x in &xs {
        let mut row = Vec::with_capacity(1 + indices.len());
        row.push(x);
        for &idx in &indices {
            row.push(v(idx, x, Method::Auto, spec)?.value);
        }
        rows.push(row);
    }

    let columns: Vec<String> = core::iter::once("x".to_string())
        .chain(m_list.iter().map(|m| format!("V_{m}")))
        .collect();
    match format {
        TableFormat::Csv => {
            let mut out = columns.join(",");
            out.push('\n');
            for row in &rows {
                let cells: Vec<String> = row.iter().map(|&v| g17(v)).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            Ok(out)
        }
        TableFormat::Json => {
            // numbers are embedded in g17 form (17 significant digits,
            // round-trip safe), so the JSON is built by hand
            let mut out = String::from("{\n  \"columns\": [");
            out.push_str(
                &columns
                    .iter()
                    .map(|c| format!("\"{c}\""))
                    .collect::<Vec<_>>()
                    .join(", "),
            );
            out.push_str("],\n  \"rows\": [\n");
            for (i, row) in rows.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|&v| g17(v)).collect();
                out.push_str("    [");
                out.push_str(&cells.join(", "));
                out.push(']');
                if i + 1 < rows.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str("  ]\n}\n");
            Ok(out)
        }
    }
}

pub fn pair(m1: usize, m2: usize, antisymmetrize: bool) -> Result<String, Error> {
    let decomposition = pair_decomposition(m1, m2, antisymmetrize)?;
    let mut out = String::new();
    for &(k, w) in &decomposition.weights {
        out.push_str(&format!("k={k},w={w}\n"));
    }
    Ok(out)
}

pub fn avg(n: u32, x: f64) -> Result<String, Error> {
    Ok(g17(v_av(n, x)?))
}

pub fn fourier(m: f64, xi: f64, spec: &QuadratureSpec) -> Result<String, Error> {
    Ok(g17(fourier_v(m, xi, spec)?))
}

pub fn delta(m: f64, beta: f64, spec: &QuadratureSpec) -> Result<String, Error> {
    // the one built-in test function: the unit Gaussian
    Ok(g17(delta_pairing(m, beta, |x| (-x * x).exp(), spec)?))
}

pub struct SpectrumArgs {
    pub model: Model,
    pub n: usize,
    pub z: f64,
    pub b: f64,
    pub grid_points: usize,
    pub half_width: f64,
    pub tol: f64,
}

fn solve(args: &SpectrumArgs, grid: Grid1D) -> Result<GroundStateResult, Error> {
    let config = FieldConfig::new(args.n, args.z, args.b)?;
    let params = hamiltonian_params(&config, args.model)?;
    let op: DiscreteOperator = match args.n {
        1 => build_one_particle(grid, &params)?,
        2 => build_two_particle_bosonic(grid, &params)?,
        _ => {
            return Err(Error::InvalidModelParameter(
                "exact diagonalization supports N in {1, 2}; larger N is refused",
            ))
        }
    };
    ground_state(&op, args.tol)
}

pub fn spectrum(args: &SpectrumArgs) -> Result<String, Error> {
    let grid = Grid1D::new(args.half_width, args.grid_points)?;
    let gs = solve(args, grid)?;
    // sensitivity re-runs: 1.5× box, and roughly half resolution
    let wide = Grid1D::new(1.5 * args.half_width, args.grid_points)?;
    let e_wide = solve(args, wide)?.energy;
    let coarse_points = {
        let half = args.grid_points / 2;
        (if half % 2 == 0 { half + 1 } else { half }).max(3)
    };
    let coarse = Grid1D::new(args.half_width, coarse_points)?;
    let e_coarse = solve(args, coarse)?.energy;

    let e0_conf = energy_reconstruct(gs.energy, args.n, args.b);
    let mut out = String::new();
    out.push_str(&format!("E0 = {}\n", g17(gs.energy)));
    out.push_str(&format!("e_h = {}\n", g17(gs.energy)));
    out.push_str(&format!("E0_conf = {}\n", g17(e0_conf)));
    out.push_str(&format!("residual = {}\n", g17(gs.residual)));
    out.push_str(&format!("iterations = {}\n", gs.iterations));
    out.push_str(&format!("grid_points = {}\n", args.grid_points));
    out.push_str(&format!("half_width = {}\n", args.half_width));
    out.push_str(&format!("spacing = {}\n", g17(grid.spacing())));
    out.push_str(&format!(
        "box_sensitivity = {}\n",
        g17((gs.energy - e_wide).abs())
    ));
    out.push_str(&format!(
        "grid_sensitivity = {}\n",
        g17((gs.energy - e_coarse).abs())
    ));
    Ok(out)
}
