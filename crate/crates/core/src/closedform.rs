//! Analytic A_alpha spectra and energies.
//!
//! `A_alpha(G) = alpha D(G) + (1 - alpha) A(G)` and the A_alpha energy is
//! `sum_i |lambda_i - 2 alpha m / n|`. Closed forms exist for `G_{p^m}`
//! and its complement (odd prime powers), and for every regular family
//! through Ramanujan sums.

use serde::Serialize;

use crate::error::{check_alpha, check_energy_alpha, Error, Result};
use crate::graphs::{Graph, GraphSpec};
use crate::linalg::{DenseSymmetric, Spectrum};
use crate::numtheory::{euler_phi, factorize, is_prime, largest_squarefree_divisor, ramanujan_sum};

/// Merge tolerance for closed-form families that coincide at special alpha.
pub const FAMILY_MERGE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnergyMethod {
    ClosedForm,
    Numeric,
    RegularShortcut,
}

impl EnergyMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            EnergyMethod::ClosedForm => "closed-form",
            EnergyMethod::Numeric => "numeric",
            EnergyMethod::RegularShortcut => "regular-shortcut",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnergyReport {
    pub spec: GraphSpec,
    pub alpha: f64,
    pub n: usize,
    pub m: usize,
    /// `2 alpha m / n`
    pub shift: f64,
    pub energy: f64,
    pub method: EnergyMethod,
}

pub fn build_alpha_matrix(g: &Graph, alpha: f64) -> Result<DenseSymmetric> {
    check_alpha(alpha)?;
    let deg = g.degrees();
    Ok(DenseSymmetric::from_fn(g.order(), |i, j| {
        if i == j {
            alpha * deg[i] as f64
        } else if g.is_adjacent(i, j) {
            1.0 - alpha
        } else {
            0.0
        }
    }))
}

pub fn energy_shift(n: usize, m: usize, alpha: f64) -> f64 {
    2.0 * alpha * m as f64 / n as f64
}

/// `sum |lambda_i - 2 alpha m / n|` over the given eigenvalues.
pub fn alpha_energy_from_values(values: &[f64], n: usize, m: usize, alpha: f64) -> Result<f64> {
    check_energy_alpha(alpha)?;
    let shift = energy_shift(n, m, alpha);
    Ok(values.iter().map(|v| (v - shift).abs()).sum())
}

/// Same as [`alpha_energy_from_values`] on a grouped spectrum.
pub fn alpha_energy_from_spectrum(spectrum: &Spectrum, m: usize, alpha: f64) -> Result<f64> {
    check_energy_alpha(alpha)?;
    let shift = energy_shift(spectrum.len(), m, alpha);
    Ok(spectrum
        .pairs()
        .iter()
        .map(|&(v, k)| k as f64 * (v - shift).abs())
        .sum())
}

/// For a regular graph the A_alpha energy is `(1 - alpha)` times the
/// adjacency energy.
pub fn regular_alpha_energy(adjacency_energy: f64, alpha: f64) -> f64 {
    (1.0 - alpha) * adjacency_energy
}

fn check_prime_power(p: u64, m: u32) -> Result<f64> {
    if p < 3 || p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("p = {p} must be an odd prime")));
    }
    if m < 1 {
        return Err(Error::InvalidArgument("prime-power exponent m must be >= 1".into()));
    }
    p.checked_pow(m)
        .map(|n| n as f64)
        .ok_or_else(|| Error::InvalidArgument(format!("{p}^{m} overflows")))
}

/// Auxiliaries `(x, y)` of the two simple eigenvalues `(x -+ y) / 2`.
fn uacg_quadratic_roots(p: f64, n: f64, alpha: f64) -> (f64, f64) {
    let q = n / p;
    let x = (1.0 + alpha) * n - 2.0 * q - 1.0;
    let disc = (1.0 - n + alpha * n).powi(2) + (1.0 - alpha) * 4.0 * q;
    assert!(disc >= 0.0, "negative discriminant {disc} at alpha = {alpha}");
    (x, disc.sqrt())
}

/// A_alpha spectrum of `G_{p^m}`, p an odd prime: six families, with empty
/// ones dropped and coinciding ones merged.
pub fn uacg_prime_power_spectrum(p: u64, m: u32, alpha: f64) -> Result<Spectrum> {
    let n = check_prime_power(p, m)?;
    check_alpha(alpha)?;
    let pf = p as f64;
    let q = n / pf;
    let qi = p.pow(m - 1) as usize;
    let pu = p as usize;
    let (x, y) = uacg_quadratic_roots(pf, n, alpha);
    let families = [
        (q * (pf * alpha - 1.0) - 1.0, (pu - 3) / 2),
        ((x - y) / 2.0, 1),
        (q * (pf - 1.0) * alpha - 1.0, (pu - 1) * (qi - 1)),
        (alpha * (n - q), qi - 1),
        (q * ((pf - 2.0) * alpha + 1.0) - 1.0, (pu - 1) / 2),
        ((x + y) / 2.0, 1),
    ];
    Ok(Spectrum::from_families(families, FAMILY_MERGE_TOL))
}

/// Closed-form A_alpha energy of `G_{p^m}`.
pub fn uacg_prime_power_energy(p: u64, m: u32, alpha: f64) -> Result<f64> {
    let n = check_prime_power(p, m)?;
    check_energy_alpha(alpha)?;
    let pf = p as f64;
    let q = n / pf;
    let (x, y) = uacg_quadratic_roots(pf, n, alpha);
    let shift = alpha * (n - 1.0) * (pf - 1.0) / pf;
    let base = (3.0 * n - 5.0 * q - pf - 1.0) / 2.0;
    let linear = alpha / (2.0 * pf) * (-3.0 * pf * n + 9.0 * n - 4.0 * q + pf * pf - 2.0 * pf + 1.0);
    let kink = (pf - 1.0) / (2.0 * pf) * ((n - pf) * (1.0 - alpha) - alpha).abs();
    Ok(base + linear + kink + ((x - y) / 2.0 - shift).abs() + ((x + y) / 2.0 - shift).abs())
}

/// Spectrum `alpha phi(n) + (1 - alpha) c(k, n)`, k = 0..n, shared by every
/// graph isomorphic to the unitary Cayley graph `X_n`.
pub fn unitary_cayley_spectrum(n: u64, alpha: f64) -> Result<Spectrum> {
    check_alpha(alpha)?;
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n = {n} < 2")));
    }
    let phi = euler_phi(n) as f64;
    let mut families = Vec::with_capacity(n as usize);
    for k in 0..n {
        let c = ramanujan_sum(k, n)? as f64;
        families.push((alpha * phi + (1.0 - alpha) * c, 1));
    }
    Ok(Spectrum::from_families(families, FAMILY_MERGE_TOL))
}

/// Spectrum of the complement of `X_n`: `n - 1 - phi(n)` once, then
/// `alpha (n - phi(n)) - (1 - alpha) c(k, n) - 1` for k = 1..n.
pub fn complement_unitary_cayley_spectrum(n: u64, alpha: f64) -> Result<Spectrum> {
    check_alpha(alpha)?;
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n = {n} < 2")));
    }
    let (nf, phi) = (n as f64, euler_phi(n) as f64);
    let mut families = vec![(nf - 1.0 - phi, 1)];
    for k in 1..n {
        let c = ramanujan_sum(k, n)? as f64;
        families.push((alpha * (nf - phi) - (1.0 - alpha) * c - 1.0, 1));
    }
    Ok(Spectrum::from_families(families, FAMILY_MERGE_TOL))
}

fn check_even(n: u64) -> Result<()> {
    if n < 2 || !n.is_multiple_of(2) {
        Err(Error::InvalidArgument(format!("n = {n} must be even and >= 2")))
    } else {
        Ok(())
    }
}

/// A_alpha spectrum of `G_n` for even n (regular, isomorphic to `X_n`).
pub fn uacg_even_spectrum(n: u64, alpha: f64) -> Result<Spectrum> {
    check_even(n)?;
    unitary_cayley_spectrum(n, alpha)
}

/// A_alpha spectrum of the complement of `G_n` for even n. The excluded
/// adjacency eigenvalue is the Perron value `phi(n)` (k = 0).
pub fn complement_even_spectrum(n: u64, alpha: f64) -> Result<Spectrum> {
    check_even(n)?;
    complement_unitary_cayley_spectrum(n, alpha)
}

pub fn complete_spectrum(n: u64, alpha: f64) -> Result<Spectrum> {
    check_alpha(alpha)?;
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n = {n} < 2")));
    }
    let nf = n as f64;
    let families = [(nf - 1.0, 1), (alpha * nf - 1.0, n as usize - 1)];
    Ok(Spectrum::from_families(families, FAMILY_MERGE_TOL))
}

/// Adjacency energy of `X_n`: `2^k phi(n)`, k distinct primes of n.
pub fn unitary_cayley_adjacency_energy(n: u64) -> f64 {
    let k = factorize(n).distinct_primes() as u32;
    (2u64.pow(k) * euler_phi(n)) as f64
}

/// Adjacency energy of the complement of `X_n`:
/// `2(n-1) + (2^k - 2) phi(n) - prod p_i + prod (2 - p_i)`.
pub fn complement_unitary_cayley_adjacency_energy(n: u64) -> f64 {
    let f = factorize(n);
    let k = f.distinct_primes() as u32;
    let phi = euler_phi(n) as i64;
    let radical = largest_squarefree_divisor(n) as i64;
    let alt: i64 = f.primes().map(|p| 2 - p as i64).product();
    (2 * (n as i64 - 1) + (2i64.pow(k) - 2) * phi - radical + alt) as f64
}

/// A_alpha spectrum of the complement of `G_{p^m}`, p an odd prime.
///
/// The non-units induce `K_{p^{m-1}}`; the units split into (p-1)/2 pairs
/// of residue classes `r, -r (mod p)`, each pair inducing
/// `K_{p^{m-1}, p^{m-1}}`. Hence the families
/// `(2 alpha - 1) p^{m-1}`, `alpha p^{m-1} - 1`, `alpha p^{m-1}`,
/// `p^{m-1} - 1` and `p^{m-1}`.
pub fn complement_prime_power_spectrum(p: u64, m: u32, alpha: f64) -> Result<Spectrum> {
    check_prime_power(p, m)?;
    check_alpha(alpha)?;
    let q = p.pow(m - 1) as f64;
    let qi = p.pow(m - 1) as usize;
    let pu = p as usize;
    let families = [
        ((2.0 * alpha - 1.0) * q, (pu - 1) / 2),
        (alpha * q - 1.0, qi - 1),
        (alpha * q, (pu - 1) * (qi - 1)),
        (q - 1.0, 1),
        (q, (pu - 1) / 2),
    ];
    Ok(Spectrum::from_families(families, FAMILY_MERGE_TOL))
}

/// Closed-form A_alpha energy of the complement of `G_{p^m}`.
///
/// The shift is `alpha (p^m - 1) / p`; the five deviations simplify to
/// `(alpha (p^m + 1) - p^m) / p`, `(alpha - p) / p`, `alpha / p`,
/// `(p^m - p - alpha p^m + alpha) / p` and `(p^m - alpha p^m + alpha) / p`.
/// The first changes sign at `alpha = p^m / (p^m + 1)`, the fourth at
/// `alpha = (p^m - p) / (p^m - 1)`.
pub fn complement_prime_power_energy(p: u64, m: u32, alpha: f64) -> Result<f64> {
    let n = check_prime_power(p, m)?;
    check_energy_alpha(alpha)?;
    let pf = p as f64;
    let q = n / pf;
    let pairs = (pf - 1.0) / 2.0;
    let unit_pairs_low = pairs * (alpha * (n + 1.0) - n).abs() / pf;
    let nonunit_bulk = (q - 1.0) * (pf - alpha) / pf;
    let unit_bulk = (pf - 1.0) * (q - 1.0) * alpha / pf;
    let nonunit_top = (n - pf - alpha * n + alpha).abs() / pf;
    let unit_pairs_high = pairs * (n - alpha * n + alpha) / pf;
    Ok(unit_pairs_low + nonunit_bulk + unit_bulk + nonunit_top + unit_pairs_high)
}

/// Complement formulas that treat the unit-pair eigenvalue as `-p^{m-1}`
/// for every alpha. They coincide with the true spectrum only at
/// `alpha = 0`; for `alpha > 0` they violate the trace identity. Kept so
/// tables produced from them can be regenerated and compared.
pub mod legacy {
    use super::*;

    pub fn complement_prime_power_spectrum(p: u64, m: u32, alpha: f64) -> Result<Spectrum> {
        check_prime_power(p, m)?;
        check_alpha(alpha)?;
        let q = p.pow(m - 1) as f64;
        let qi = p.pow(m - 1) as usize;
        let pu = p as usize;
        let families = [
            (-q, (pu - 1) / 2),
            (alpha * q - 1.0, qi - 1),
            (alpha * q, (pu - 1) * (qi - 1)),
            (q - 1.0, 1),
            (q, (pu - 1) / 2),
        ];
        Ok(Spectrum::from_families(families, FAMILY_MERGE_TOL))
    }

    /// Branch point of [`complement_prime_power_energy`].
    pub fn complement_branch_point(p: u64, m: u32) -> Result<f64> {
        let n = check_prime_power(p, m)?;
        Ok((n - p as f64) / (n - 1.0))
    }

    /// Two-branch energy matching [`complement_prime_power_spectrum`] of
    /// this module, shifted by `alpha (p^m - 1) / p`.
    pub fn complement_prime_power_energy(p: u64, m: u32, alpha: f64) -> Result<f64> {
        let n = check_prime_power(p, m)?;
        check_energy_alpha(alpha)?;
        let pf = p as f64;
        let q = n / pf;
        let energy = if alpha <= complement_branch_point(p, m)? {
            (pf * n + n - 2.0 * pf + alpha * (3.0 - pf - 2.0 * q)) / pf
        } else {
            (pf * n - n + alpha * (1.0 - pf - 2.0 * q + 2.0 * n)) / pf
        };
        Ok(energy)
    }

    /// The same energy written with a single absolute value.
    pub fn complement_prime_power_energy_abs_form(p: u64, m: u32, alpha: f64) -> Result<f64> {
        let n = check_prime_power(p, m)?;
        check_energy_alpha(alpha)?;
        let pf = p as f64;
        let q = n / pf;
        Ok((pf * n - pf + alpha * (2.0 - pf - 2.0 * q + n)) / pf
            + ((n - pf - alpha * n + alpha) / pf).abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_uacg, complement, complete};

    fn assert_pairs(s: &Spectrum, want: &[(f64, usize)], tol: f64) {
        assert_eq!(s.pairs().len(), want.len(), "{:?}", s.pairs());
        for (&(v, m), &(wv, wm)) in s.pairs().iter().zip(want) {
            assert!((v - wv).abs() < tol, "{v} vs {wv}");
            assert_eq!(m, wm);
        }
    }

    #[test]
    fn alpha_matrix_endpoints() {
        let g = build_uacg(9).unwrap();
        let a0 = build_alpha_matrix(&g, 0.0).unwrap();
        let a1 = build_alpha_matrix(&g, 1.0).unwrap();
        let ah = build_alpha_matrix(&g, 0.5).unwrap();
        for i in 0..9 {
            for j in 0..9 {
                let adj = if g.is_adjacent(i, j) { 1.0 } else { 0.0 };
                let deg = if i == j { g.degrees()[i] as f64 } else { 0.0 };
                assert_eq!(a0.get(i, j), adj);
                assert_eq!(a1.get(i, j), deg);
                assert_eq!(ah.get(i, j), 0.5 * (adj + deg));
            }
        }
        assert!(build_alpha_matrix(&g, 1.5).is_err());
        assert!(build_alpha_matrix(&g, -0.1).is_err());
    }

    #[test]
    fn energy_from_values_table_anchors() {
        let g = build_uacg(9).unwrap();
        for (alpha, want) in [(0.0, 14.717), (0.5, 8.438)] {
            let ev = build_alpha_matrix(&g, alpha).unwrap().eigenvalues().unwrap();
            let e = alpha_energy_from_values(&ev, 9, g.edge_count(), alpha).unwrap();
            assert!((e - want).abs() < 1e-3, "{e}");
        }
        let k9 = complete(9).unwrap();
        let ev = build_alpha_matrix(&k9, 0.0).unwrap().eigenvalues().unwrap();
        let e = alpha_energy_from_values(&ev, 9, 36, 0.0).unwrap();
        assert!((e - 16.0).abs() < 1e-10);
        assert!(alpha_energy_from_values(&ev, 9, 36, 1.0).is_err());
    }

    #[test]
    fn regular_shortcut_examples() {
        assert_eq!(regular_alpha_energy(16.0, 0.0), 16.0);
        for n in [3u64, 9, 20] {
            let alpha = 0.3;
            let want = 2.0 * (1.0 - alpha) * (n as f64 - 1.0);
            assert!((regular_alpha_energy(2.0 * n as f64 - 2.0, alpha) - want).abs() < 1e-12);
        }
        assert_eq!(regular_alpha_energy(unitary_cayley_adjacency_energy(4), 0.5), 2.0);
    }

    #[test]
    fn prime_power_spectrum_g9() {
        let s = uacg_prime_power_spectrum(3, 2, 0.0).unwrap();
        let r = 76f64.sqrt() / 2.0;
        assert_pairs(&s, &[(1.0 + r, 1), (2.0, 1), (0.0, 2), (-1.0, 4), (1.0 - r, 1)], 1e-12);
        assert!((s.pairs()[0].0 - 5.3589).abs() < 1e-4);
        for alpha in [0.0, 0.2, 0.375, 0.9, 1.0] {
            assert_eq!(uacg_prime_power_spectrum(3, 2, alpha).unwrap().len(), 9);
        }
    }

    #[test]
    fn prime_power_rejects_bad_input() {
        assert!(uacg_prime_power_spectrum(2, 3, 0.0).is_err());
        assert!(uacg_prime_power_spectrum(9, 1, 0.0).is_err());
        assert!(uacg_prime_power_spectrum(3, 0, 0.0).is_err());
        assert!(uacg_prime_power_energy(3, 2, 1.0).is_err());
        assert!(complement_prime_power_spectrum(15, 1, 0.0).is_err());
    }

    #[test]
    fn prime_power_energy_anchors() {
        let s = uacg_prime_power_spectrum(5, 1, 0.0).unwrap();
        let e = alpha_energy_from_spectrum(&s, 10, 0.0).unwrap();
        assert!((e - 6.472).abs() < 1e-3);
        for (p, m, alpha, want) in [(3, 2, 0.0, 14.717), (3, 3, 0.5, 30.367), (5, 2, 0.9, 10.641)] {
            let e = uacg_prime_power_energy(p, m, alpha).unwrap();
            assert!((e - want).abs() < 1e-3, "{p}^{m} at {alpha}: {e}");
        }
    }

    #[test]
    fn even_spectra() {
        assert_pairs(&uacg_even_spectrum(4, 0.0).unwrap(), &[(2.0, 1), (0.0, 2), (-2.0, 1)], 1e-12);
        assert_pairs(&uacg_even_spectrum(4, 1.0).unwrap(), &[(2.0, 4)], 1e-12);
        let s6 = uacg_even_spectrum(6, 0.0).unwrap();
        assert_eq!(s6.pairs()[0].0, 2.0);
        assert_eq!(s6.pairs().last().unwrap().0, -2.0);
        assert!(uacg_even_spectrum(9, 0.0).is_err());

        assert_pairs(&complement_even_spectrum(4, 0.0).unwrap(), &[(1.0, 2), (-1.0, 2)], 1e-12);
        assert_pairs(&complement_even_spectrum(4, 1.0).unwrap(), &[(1.0, 4)], 1e-12);
        assert_eq!(complement_even_spectrum(6, 0.0).unwrap().pairs()[0].0, 3.0);
        assert!(complement_even_spectrum(7, 0.0).is_err());
    }

    #[test]
    fn complement_prime_power_at_zero() {
        let s = complement_prime_power_spectrum(3, 2, 0.0).unwrap();
        assert_pairs(&s, &[(3.0, 1), (2.0, 1), (0.0, 4), (-1.0, 2), (-3.0, 1)], 1e-12);
        for alpha in [0.0, 0.4, 1.0] {
            assert_eq!(complement_prime_power_spectrum(3, 2, alpha).unwrap().len(), 9);
        }
        let s25 = complement_prime_power_spectrum(5, 2, 0.0).unwrap();
        // m = p^{m-1} (p^m - 1) / 2 = 60
        let e = alpha_energy_from_spectrum(&s25, 60, 0.0).unwrap();
        assert!((e - 28.0).abs() < 1e-6);
        assert!((complement_prime_power_energy(3, 2, 0.0).unwrap() - 10.0).abs() < 1e-12);
    }

    #[test]
    fn complement_prime_power_matches_eigensolver() {
        for (p, m) in [(3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (3, 3)] {
            let n = (p as usize).pow(m);
            let g = complement(&build_uacg(n).unwrap());
            for alpha in [0.0, 0.1, 0.5, 0.9, 0.9999] {
                let ev = build_alpha_matrix(&g, alpha).unwrap().eigenvalues().unwrap();
                let closed = complement_prime_power_spectrum(p, m, alpha).unwrap().values();
                for (a, b) in ev.iter().zip(&closed) {
                    assert!((a - b).abs() < 1e-9, "{n} at {alpha}: {a} vs {b}");
                }
                let e = alpha_energy_from_values(&ev, n, g.edge_count(), alpha).unwrap();
                let ec = complement_prime_power_energy(p, m, alpha).unwrap();
                assert!((e - ec).abs() < 1e-9, "{n} at {alpha}: {e} vs {ec}");
            }
        }
        // Complement of G_9 at alpha = 0.9.
        assert!((complement_prime_power_energy(3, 2, 0.9).unwrap() - 3.6).abs() < 1e-12);
    }

    #[test]
    fn legacy_complement_forms() {
        // Both legacy forms agree, including at the branch point.
        for (p, m) in [(3, 2), (5, 2), (7, 2), (11, 2), (5, 4)] {
            let star = legacy::complement_branch_point(p, m).unwrap();
            for alpha in [0.0, 0.3, star, 0.8, 0.9999] {
                let a = legacy::complement_prime_power_energy(p, m, alpha).unwrap();
                let b = legacy::complement_prime_power_energy_abs_form(p, m, alpha).unwrap();
                assert!((a - b).abs() < 1e-9, "{a} vs {b}");
            }
            let below = legacy::complement_prime_power_energy(p, m, star).unwrap();
            let above = legacy::complement_prime_power_energy(p, m, star + 1e-15).unwrap();
            assert!((below - above).abs() < 1e-9);
        }
        assert!((legacy::complement_prime_power_energy(3, 2, 0.0).unwrap() - 10.0).abs() < 1e-12);
        assert!((legacy::complement_prime_power_energy(3, 2, 0.9).unwrap() - 9.0).abs() < 1e-12);
        // The legacy spectrum is exact at alpha = 0 only.
        let a = legacy::complement_prime_power_spectrum(5, 2, 0.0).unwrap();
        assert_eq!(a, complement_prime_power_spectrum(5, 2, 0.0).unwrap());
        let b = legacy::complement_prime_power_spectrum(5, 2, 0.5).unwrap();
        assert_ne!(b, complement_prime_power_spectrum(5, 2, 0.5).unwrap());
    }

    #[test]
    fn complete_spectrum_energy() {
        for n in [2u64, 5, 9] {
            for alpha in [0.0, 0.25, 0.9999] {
                let s = complete_spectrum(n, alpha).unwrap();
                let m = (n * (n - 1) / 2) as usize;
                let e = alpha_energy_from_spectrum(&s, m, alpha).unwrap();
                assert!((e - 2.0 * (1.0 - alpha) * (n as f64 - 1.0)).abs() < 1e-9);
            }
        }
    }
}
