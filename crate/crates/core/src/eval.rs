//! Spectrum and energy evaluation for a [`GraphSpec`], choosing between the
//! closed forms and the dense eigensolver.

use std::str::FromStr;

use crate::closedform::{
    self, alpha_energy_from_values, energy_shift, regular_alpha_energy, EnergyMethod, EnergyReport,
};
use crate::error::{check_alpha, check_energy_alpha, Error, Result};
use crate::graphs::{Family, GraphSpec};
use crate::linalg::{group_spectrum, Spectrum};
use crate::numtheory::prime_power;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Closed form when one exists, otherwise numeric.
    #[default]
    Auto,
    Closed,
    Numeric,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "closed" => Ok(Method::Closed),
            "numeric" => Ok(Method::Numeric),
            other => Err(Error::InvalidArgument(format!("unknown method '{other}'"))),
        }
    }
}

/// `(p, m)` when n is a power of an odd prime.
fn odd_prime_power(n: usize) -> Option<(u64, u32)> {
    prime_power(n as u64).filter(|&(p, _)| p != 2)
}

/// Closed-form spectrum of `spec`, if the family/order has one.
pub fn closed_spectrum(spec: GraphSpec, alpha: f64) -> Option<Result<Spectrum>> {
    let n = spec.n();
    let n64 = n as u64;
    let out = match (spec.family(), spec.is_complement()) {
        (Family::Uacg, false) if n.is_multiple_of(2) => closedform::uacg_even_spectrum(n64, alpha),
        (Family::Uacg, true) if n.is_multiple_of(2) => closedform::complement_even_spectrum(n64, alpha),
        (Family::Uacg, complemented) => {
            let (p, m) = odd_prime_power(n)?;
            if complemented {
                closedform::complement_prime_power_spectrum(p, m, alpha)
            } else {
                closedform::uacg_prime_power_spectrum(p, m, alpha)
            }
        }
        (Family::UnitaryCayley, false) => closedform::unitary_cayley_spectrum(n64, alpha),
        (Family::UnitaryCayley, true) => closedform::complement_unitary_cayley_spectrum(n64, alpha),
        (Family::Complete, false) => closedform::complete_spectrum(n64, alpha),
        (Family::Complete, true) => check_alpha(alpha).map(|_| Spectrum::from_families([(0.0, n)], 1.0)),
    };
    Some(out)
}

/// Descending eigenvalues of `A_alpha(spec)` from the dense eigensolver.
pub fn numeric_eigenvalues(spec: GraphSpec, alpha: f64) -> Result<Vec<f64>> {
    let g = spec.build();
    closedform::build_alpha_matrix(&g, alpha)?.eigenvalues()
}

pub fn spectrum(spec: GraphSpec, alpha: f64, method: Method, tol: f64) -> Result<(Spectrum, EnergyMethod)> {
    check_alpha(alpha)?;
    if method != Method::Numeric {
        match closed_spectrum(spec, alpha) {
            Some(s) => return Ok((s?, EnergyMethod::ClosedForm)),
            None if method == Method::Closed => {
                return Err(Error::ClosedFormUnavailable(spec.to_string()));
            }
            None => {}
        }
    }
    let values = numeric_eigenvalues(spec, alpha)?;
    Ok((group_spectrum(&values, tol)?, EnergyMethod::Numeric))
}

/// Closed-form or regular-shortcut energy, if available.
fn closed_energy(spec: GraphSpec, alpha: f64) -> Option<Result<(f64, EnergyMethod)>> {
    let n = spec.n();
    let n64 = n as u64;
    let regular = |adjacency_energy: f64| Ok((regular_alpha_energy(adjacency_energy, alpha), EnergyMethod::RegularShortcut));
    match (spec.family(), spec.is_complement()) {
        (Family::Uacg, false) if n.is_multiple_of(2) => Some(regular(closedform::unitary_cayley_adjacency_energy(n64))),
        (Family::Uacg, true) if n.is_multiple_of(2) => {
            Some(regular(closedform::complement_unitary_cayley_adjacency_energy(n64)))
        }
        (Family::Uacg, complemented) => {
            let (p, m) = odd_prime_power(n)?;
            let e = if complemented {
                closedform::complement_prime_power_energy(p, m, alpha)
            } else {
                closedform::uacg_prime_power_energy(p, m, alpha)
            };
            Some(e.map(|e| (e, EnergyMethod::ClosedForm)))
        }
        (Family::UnitaryCayley, false) => Some(regular(closedform::unitary_cayley_adjacency_energy(n64))),
        (Family::UnitaryCayley, true) => {
            Some(regular(closedform::complement_unitary_cayley_adjacency_energy(n64)))
        }
        (Family::Complete, false) => Some(regular(2.0 * (n as f64 - 1.0))),
        (Family::Complete, true) => Some(regular(0.0)),
    }
}

pub fn energy(spec: GraphSpec, alpha: f64, method: Method) -> Result<EnergyReport> {
    check_energy_alpha(alpha)?;
    let (n, m) = (spec.n(), spec.edge_count());
    let (energy, method_used) = match (method, closed_energy(spec, alpha)) {
        (Method::Auto | Method::Closed, Some(e)) => e?,
        (Method::Closed, None) => return Err(Error::ClosedFormUnavailable(spec.to_string())),
        (Method::Numeric, _) | (Method::Auto, None) => {
            let values = numeric_eigenvalues(spec, alpha)?;
            (alpha_energy_from_values(&values, n, m, alpha)?, EnergyMethod::Numeric)
        }
    };
    Ok(EnergyReport {
        spec,
        alpha,
        n,
        m,
        shift: energy_shift(n, m, alpha),
        energy,
        method: method_used,
    })
}

/// `2 (1 - alpha) (n - 1)`, the A_alpha energy of `K_n`.
pub fn complete_energy(n: usize, alpha: f64) -> f64 {
    2.0 * (1.0 - alpha) * (n as f64 - 1.0)
}
