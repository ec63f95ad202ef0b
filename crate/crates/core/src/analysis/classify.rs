use serde::Serialize;

use crate::closedform::EnergyMethod;
use crate::error::{Error, Result};
use crate::eval::{self, complete_energy, Method};
use crate::graphs::GraphSpec;

/// Default absolute tolerance on the energy difference.
pub const DEFAULT_CLASSIFY_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// `|eps_alpha(G) - eps_alpha(K_n)| <= tol`.
    Borderenergetic,
    /// `eps_alpha(G) > eps_alpha(K_n) + tol`.
    Hyperenergetic,
    Neither,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Borderenergetic => "borderenergetic",
            Verdict::Hyperenergetic => "hyperenergetic",
            Verdict::Neither => "neither",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub spec: GraphSpec,
    pub alpha: f64,
    pub energy: f64,
    pub complete_energy: f64,
    pub verdict: Verdict,
    pub tolerance: f64,
    pub method: EnergyMethod,
}

impl ClassificationReport {
    /// Whether `eps_alpha(G) >= eps_alpha(K_n)` up to the tolerance. A
    /// borderenergetic graph satisfies this too.
    pub fn meets_hyperenergetic_inequality(&self) -> bool {
        self.verdict != Verdict::Neither
    }
}

pub fn verdict(energy: f64, complete: f64, tol: f64) -> Verdict {
    if (energy - complete).abs() <= tol {
        Verdict::Borderenergetic
    } else if energy > complete + tol {
        Verdict::Hyperenergetic
    } else {
        Verdict::Neither
    }
}

pub fn classify(spec: GraphSpec, alpha: f64, tol: f64) -> Result<ClassificationReport> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance {tol} must be > 0")));
    }
    let report = eval::energy(spec, alpha, Method::Auto)?;
    let complete = complete_energy(spec.n(), alpha);
    Ok(ClassificationReport {
        spec,
        alpha,
        energy: report.energy,
        complete_energy: complete,
        verdict: verdict(report.energy, complete, tol),
        tolerance: tol,
        method: report.method,
    })
}
