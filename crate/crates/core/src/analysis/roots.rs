//! Values of alpha where a graph is A_alpha-borderenergetic.
//!
//! `f(alpha) = eps_alpha(G) - 2 (1 - alpha) (n - 1)` is continuous and
//! piecewise smooth. It is sampled on the grid `i / 1000`, `i = 0..=999`;
//! exact zeros are kept and every sign change is bisected. Tangential roots
//! between grid points are not detected.

use crate::error::{Error, Result};
use crate::eval::{self, complete_energy, Method};
use crate::graphs::GraphSpec;

pub const GRID_STEPS: usize = 1000;
pub const DEFAULT_ROOT_TOL: f64 = 1e-12;

/// Roots of `f` on `[0, 1)`, ascending, each to within `tol`.
pub fn scan_roots(f: impl Fn(f64) -> Result<f64>, tol: f64) -> Result<Vec<f64>> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("root tolerance {tol} must be > 0")));
    }
    let grid: Vec<f64> = (0..GRID_STEPS).map(|i| i as f64 / GRID_STEPS as f64).collect();
    let values = grid.iter().map(|&a| f(a)).collect::<Result<Vec<_>>>()?;
    let mut roots = Vec::new();
    for i in 0..grid.len() {
        if values[i] == 0.0 {
            roots.push(grid[i]);
            continue;
        }
        if i + 1 < grid.len() && values[i] * values[i + 1] < 0.0 {
            roots.push(bisect(&f, grid[i], grid[i + 1], values[i], tol)?);
        }
    }
    Ok(roots)
}

fn bisect(f: &impl Fn(f64) -> Result<f64>, mut a: f64, mut b: f64, mut fa: f64, tol: f64) -> Result<f64> {
    while b - a > tol {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}

/// `eps_alpha(spec) - eps_alpha(K_n)`.
pub fn energy_gap(spec: GraphSpec, alpha: f64) -> Result<f64> {
    Ok(eval::energy(spec, alpha, Method::Auto)?.energy - complete_energy(spec.n(), alpha))
}

pub fn find_borderenergetic_alphas(spec: GraphSpec, tol: f64) -> Result<Vec<f64>> {
    scan_roots(|a| energy_gap(spec, a), tol)
}
