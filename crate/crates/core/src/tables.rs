//! Regeneration of the reference energy and borderenergetic-alpha tables
//! stored under `fixtures/`.

use crate::analysis::roots::{scan_roots, DEFAULT_ROOT_TOL};
use crate::closedform::legacy;
use crate::error::Result;
use crate::eval::{self, complete_energy, Method};
use crate::graphs::{Family, GraphSpec};
use crate::numtheory::prime_power;
use crate::verify::ALPHA_GRID;

/// Orders in the energy table and the complement root table, in print order.
pub const ENERGY_TABLE_ORDERS: [usize; 9] = [9, 27, 81, 5, 25, 125, 625, 49, 121];
/// Orders in the `G_n` root table, in print order.
pub const UACG_ROOT_ORDERS: [usize; 5] = [9, 27, 81, 243, 5];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ComplementFormula {
    /// Energies of the actual complement graph.
    #[default]
    Exact,
    /// The two-branch formula with the unit-pair eigenvalue fixed at
    /// `-p^{m-1}`, which the reference complement columns were computed from.
    Legacy,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnergyRow {
    pub spec: GraphSpec,
    /// One energy per entry of [`ALPHA_GRID`].
    pub energies: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootRow {
    pub n: usize,
    pub alpha: f64,
    pub energy: f64,
    pub complete_energy: f64,
}

fn complement_energy(spec: GraphSpec, alpha: f64, formula: ComplementFormula) -> Result<f64> {
    match (formula, prime_power(spec.n() as u64)) {
        (ComplementFormula::Legacy, Some((p, m))) if p != 2 => legacy::complement_prime_power_energy(p, m, alpha),
        _ => Ok(eval::energy(spec, alpha, Method::Auto)?.energy),
    }
}

/// `G_n`, its complement and `K_n` for every order, across the alpha grid.
pub fn energy_table(formula: ComplementFormula) -> Result<Vec<EnergyRow>> {
    let mut rows = Vec::new();
    for n in ENERGY_TABLE_ORDERS {
        let g = GraphSpec::uacg(n)?;
        for spec in [g, g.complement(), GraphSpec::new(Family::Complete, n)?] {
            let energies = ALPHA_GRID
                .iter()
                .map(|&a| {
                    if spec.is_complement() {
                        complement_energy(spec, a, formula)
                    } else {
                        Ok(eval::energy(spec, a, Method::Auto)?.energy)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(EnergyRow { spec, energies });
        }
    }
    Ok(rows)
}

fn root_rows(spec: GraphSpec, formula: ComplementFormula) -> Result<Vec<RootRow>> {
    let n = spec.n();
    let energy = |a: f64| -> Result<f64> {
        if spec.is_complement() {
            complement_energy(spec, a, formula)
        } else {
            Ok(eval::energy(spec, a, Method::Auto)?.energy)
        }
    };
    scan_roots(|a| Ok(energy(a)? - complete_energy(n, a)), DEFAULT_ROOT_TOL)?
        .into_iter()
        .map(|alpha| Ok(RootRow { n, alpha, energy: energy(alpha)?, complete_energy: complete_energy(n, alpha) }))
        .collect()
}

/// Borderenergetic alphas of `G_n`.
pub fn uacg_root_table() -> Result<Vec<RootRow>> {
    let mut rows = Vec::new();
    for n in UACG_ROOT_ORDERS {
        rows.extend(root_rows(GraphSpec::uacg(n)?, ComplementFormula::Exact)?);
    }
    Ok(rows)
}

/// Borderenergetic alphas of the complement of `G_n`.
pub fn complement_root_table(formula: ComplementFormula) -> Result<Vec<RootRow>> {
    let mut rows = Vec::new();
    for n in ENERGY_TABLE_ORDERS {
        rows.extend(root_rows(GraphSpec::complement_of_uacg(n)?, formula)?);
    }
    Ok(rows)
}
