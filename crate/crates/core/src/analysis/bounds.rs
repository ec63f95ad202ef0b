//! Eigenvalue intervals for odd n and generic A_alpha energy bounds.
//!
//! For odd n, `A_alpha(G_n)` splits as `(1 - alpha) B + C` where `B` is the
//! left circulant of the unit indicator and `C` is diagonal with entries in
//! `{alpha phi(n) - 1, alpha phi(n)}` (the `-1` marks vertices with a
//! removed loop, i.e. `2i` a unit). Weyl's inequality then brackets the
//! k-th largest eigenvalue by the k-th eigenvalue of `(1 - alpha) B` plus the
//! extremes of `C`. The complement works the same way with the non-unit
//! indicator and diagonal extremes `alpha (n - phi(n)) - {1, 0}`.

use serde::Serialize;

use crate::closedform::build_alpha_matrix;
use crate::error::{check_alpha, check_energy_alpha, Error, Result};
use crate::graphs::{adjacency_frobenius_sq, zagreb_index, Family, Graph, GraphSpec};
use crate::linalg::left_circulant_eigenvalues;
use crate::numtheory::{euler_phi, gcd};

/// Slack used when testing containment.
pub const CONTAINMENT_SLACK: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RankInterval {
    pub lower: f64,
    pub upper: f64,
}

impl RankInterval {
    pub fn contains(&self, x: f64, slack: f64) -> bool {
        self.lower - slack <= x && x <= self.upper + slack
    }

    /// Distance from `x` to the interval, 0 inside.
    pub fn excess(&self, x: f64) -> f64 {
        (self.lower - x).max(x - self.upper).max(0.0)
    }
}

fn require_odd(n: usize) -> Result<()> {
    if n < 3 || n.is_multiple_of(2) {
        Err(Error::InvalidArgument(format!("eigenvalue bounds need odd n >= 3, got {n}")))
    } else {
        Ok(())
    }
}

fn circulant_intervals(n: usize, alpha: f64, unit_entries: bool, diag_top: f64) -> Vec<RankInterval> {
    let n64 = n as u64;
    let s: Vec<f64> = (0..n64)
        .map(|j| if (gcd(j, n64) == 1) == unit_entries { 1.0 - alpha } else { 0.0 })
        .collect();
    left_circulant_eigenvalues(&s)
        .into_iter()
        .map(|beta| RankInterval { lower: beta + diag_top - 1.0, upper: beta + diag_top })
        .collect()
}

/// Rank intervals for the descending eigenvalues of `A_alpha(G_n)`, n odd.
pub fn odd_uacg_eigen_bounds(n: usize, alpha: f64) -> Result<Vec<RankInterval>> {
    require_odd(n)?;
    check_alpha(alpha)?;
    let phi = euler_phi(n as u64) as f64;
    Ok(circulant_intervals(n, alpha, true, alpha * phi))
}

/// Rank intervals for the descending eigenvalues of `A_alpha` of the
/// complement of `G_n`, n odd.
pub fn odd_complement_eigen_bounds(n: usize, alpha: f64) -> Result<Vec<RankInterval>> {
    require_odd(n)?;
    check_alpha(alpha)?;
    let phi = euler_phi(n as u64) as f64;
    Ok(circulant_intervals(n, alpha, false, alpha * (n as f64 - phi)))
}

/// Graph invariants that feed the energy bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GraphParams {
    pub n: usize,
    pub m: usize,
    /// Sum of squared degrees.
    pub zagreb: u64,
    /// `||A||_F^2 = 2m`.
    pub frobenius_sq: u64,
    pub max_degree: usize,
}

impl GraphParams {
    pub fn from_graph(g: &Graph) -> Self {
        Self {
            n: g.order(),
            m: g.edge_count(),
            zagreb: zagreb_index(g),
            frobenius_sq: adjacency_frobenius_sq(g),
            max_degree: g.max_degree(),
        }
    }

    /// Closed-form parameters of `G_n` for odd n: `phi(n)` vertices have
    /// degree `phi(n) - 1`, the rest degree `phi(n)`.
    pub fn odd_uacg(n: usize) -> Result<Self> {
        require_odd(n)?;
        let phi = euler_phi(n as u64);
        let n64 = n as u64;
        Ok(Self {
            n,
            m: ((n64 - 1) * phi / 2) as usize,
            zagreb: phi * phi * (n64 - 2) + phi,
            frobenius_sq: (n64 - 1) * phi,
            max_degree: phi as usize,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NamedBound {
    pub name: &'static str,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyBounds {
    pub lowers: Vec<NamedBound>,
    pub upper: f64,
}

impl EnergyBounds {
    pub fn best_lower(&self) -> f64 {
        self.lowers.iter().map(|b| b.value).fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn sandwiches(&self, energy: f64, slack: f64) -> bool {
        self.lowers.iter().all(|b| b.value <= energy + slack) && energy <= self.upper + slack
    }
}

/// Four lower bounds and one upper bound on the A_alpha energy of any graph
/// with the given invariants.
///
/// The second-moment lower bound uses `sum (lambda_i - 2 alpha m / n)^2 =
/// alpha^2 zeta + (1 - alpha)^2 ||A||_F^2 - 4 alpha^2 m^2 / n`.
pub fn energy_bounds(p: &GraphParams, alpha: f64) -> Result<EnergyBounds> {
    check_energy_alpha(alpha)?;
    let n = p.n as f64;
    let m = p.m as f64;
    let zeta = p.zagreb as f64;
    let delta = p.max_degree as f64;
    let second_moment = alpha * alpha * zeta + (1.0 - alpha).powi(2) * p.frobenius_sq as f64;
    let centered = (second_moment - 4.0 * alpha * alpha * m * m / n).max(0.0);
    let shift2 = 4.0 * alpha * m / n;
    let d1 = delta + 1.0;
    let lowers = vec![
        NamedBound { name: "second-moment", value: (2.0 * centered).sqrt() },
        NamedBound { name: "edge-density", value: 4.0 * (1.0 - alpha) * m / n },
        NamedBound { name: "zagreb", value: 2.0 * (zeta / n).sqrt() - shift2 },
        NamedBound {
            name: "max-degree",
            value: alpha * d1 + (alpha * alpha * d1 * d1 + 4.0 * delta * (1.0 - 2.0 * alpha)).max(0.0).sqrt()
                - shift2,
        },
    ];
    let upper = (n * second_moment - 4.0 * alpha * alpha * m * m).max(0.0).sqrt();
    Ok(EnergyBounds { lowers, upper })
}

pub fn uacg_energy_bounds(n: usize, alpha: f64) -> Result<EnergyBounds> {
    energy_bounds(&GraphParams::odd_uacg(n)?, alpha)
}

/// Bounds for the complement of `G_n`, with invariants taken from the
/// constructed graph's degree sequence.
pub fn complement_energy_bounds(n: usize, alpha: f64) -> Result<EnergyBounds> {
    require_odd(n)?;
    let g = GraphSpec::complement_of_uacg(n)?.build();
    energy_bounds(&GraphParams::from_graph(&g), alpha)
}

/// A closed form for the Zagreb index of the complement of `G_n` that
/// circulates for this family, `(n - phi)^2 n + phi (2 (n - phi) + 1)`. It
/// disagrees with the degree sequence and is kept only so the mismatch can
/// be reported.
pub fn legacy_complement_zagreb(n: usize) -> u64 {
    let n = n as u64;
    let phi = euler_phi(n);
    (n - phi).pow(2) * n + phi * (2 * (n - phi) + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IndexBound {
    pub lower: f64,
    pub upper: f64,
    pub observed: f64,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergySandwich {
    pub lowers: Vec<NamedBound>,
    pub upper: f64,
    pub observed: f64,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub spec: GraphSpec,
    pub alpha: f64,
    pub per_index: Vec<IndexBound>,
    /// `None` at `alpha = 1`, where the energy is not defined.
    pub energy: Option<EnergySandwich>,
}

impl BoundReport {
    pub fn all_satisfied(&self) -> bool {
        self.per_index.iter().all(|b| b.satisfied) && self.energy.as_ref().is_none_or(|e| e.satisfied)
    }
}

/// Checks the interval and energy bounds against the numeric spectrum of an
/// odd-order `G_n` or its complement.
pub fn bound_report(spec: GraphSpec, alpha: f64) -> Result<BoundReport> {
    if spec.family() != Family::Uacg {
        return Err(Error::InvalidArgument(format!("bounds are only available for uacg families, got {spec}")));
    }
    let n = spec.n();
    let intervals = if spec.is_complement() {
        odd_complement_eigen_bounds(n, alpha)?
    } else {
        odd_uacg_eigen_bounds(n, alpha)?
    };
    let g = spec.build();
    let values = build_alpha_matrix(&g, alpha)?.eigenvalues()?;
    let per_index = intervals
        .iter()
        .zip(&values)
        .map(|(iv, &x)| IndexBound {
            lower: iv.lower,
            upper: iv.upper,
            observed: x,
            satisfied: iv.contains(x, CONTAINMENT_SLACK),
        })
        .collect();
    let energy = if alpha < 1.0 {
        let bounds = energy_bounds(&GraphParams::from_graph(&g), alpha)?;
        let observed = crate::closedform::alpha_energy_from_values(&values, n, g.edge_count(), alpha)?;
        let satisfied = bounds.sandwiches(observed, CONTAINMENT_SLACK);
        Some(EnergySandwich { lowers: bounds.lowers, upper: bounds.upper, observed, satisfied })
    } else {
        None
    };
    Ok(BoundReport { spec, alpha, per_index, energy })
}
