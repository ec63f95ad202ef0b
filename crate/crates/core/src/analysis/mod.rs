//! Bounds, classification and borderenergetic root finding.

pub mod bounds;
pub mod classify;
pub mod roots;

pub use bounds::{
    bound_report, complement_energy_bounds, energy_bounds, odd_complement_eigen_bounds, odd_uacg_eigen_bounds,
    uacg_energy_bounds, BoundReport, EnergyBounds, GraphParams, RankInterval,
};
pub use classify::{classify, ClassificationReport, Verdict, DEFAULT_CLASSIFY_TOL};
pub use roots::{find_borderenergetic_alphas, scan_roots, DEFAULT_ROOT_TOL};
