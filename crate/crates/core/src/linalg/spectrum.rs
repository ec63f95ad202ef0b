use crate::error::{Error, Result};

/// Default merge tolerance for numerically computed eigenvalues.
pub const DEFAULT_GROUPING_TOL: f64 = 1e-7;

/// Distinct eigenvalues with multiplicities, strictly descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pairs: Vec<(f64, usize)>,
    n: usize,
}

impl Spectrum {
    /// Merges `(value, multiplicity)` families into a spectrum. Families with
    /// zero multiplicity are dropped; values within `tol` of their
    /// neighbour are merged with a multiplicity-weighted mean.
    pub fn from_families(families: impl IntoIterator<Item = (f64, usize)>, tol: f64) -> Self {
        let mut fams: Vec<(f64, usize)> = families.into_iter().filter(|&(_, m)| m > 0).collect();
        fams.sort_by(|a, b| b.0.total_cmp(&a.0));
        let n = fams.iter().map(|&(_, m)| m).sum();
        Self { pairs: merge_clusters(&fams, tol), n }
    }

    pub fn pairs(&self) -> &[(f64, usize)] {
        &self.pairs
    }

    /// Total multiplicity (the matrix order).
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn distinct_values(&self) -> Vec<f64> {
        self.pairs.iter().map(|&(v, _)| v).collect()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.pairs.iter().map(|&(_, m)| m).collect()
    }

    /// Every eigenvalue repeated by multiplicity, descending.
    pub fn values(&self) -> Vec<f64> {
        self.pairs
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
            .collect()
    }
}

fn merge_clusters(sorted: &[(f64, usize)], tol: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    let mut cluster: Vec<(f64, usize)> = Vec::new();
    let flush = |cluster: &mut Vec<(f64, usize)>, out: &mut Vec<(f64, usize)>| {
        if cluster.is_empty() {
            return;
        }
        let mult: usize = cluster.iter().map(|&(_, m)| m).sum();
        let mean = cluster.iter().map(|&(v, m)| v * m as f64).sum::<f64>() / mult as f64;
        out.push((mean, mult));
        cluster.clear();
    };
    for &(v, m) in sorted {
        if let Some(&(prev, _)) = cluster.last() {
            if prev - v > tol {
                flush(&mut cluster, &mut out);
            }
        }
        cluster.push((v, m));
    }
    flush(&mut cluster, &mut out);
    out
}

/// Groups a descending list of eigenvalues into `(value, multiplicity)`
/// pairs. Adjacent values closer than `tol` share a cluster.
pub fn group_spectrum(values: &[f64], tol: f64) -> Result<Spectrum> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("grouping tolerance {tol} must be > 0")));
    }
    if let Some(i) = values.windows(2).position(|w| w[0] < w[1]) {
        return Err(Error::Unsorted(i + 1));
    }
    let singles: Vec<(f64, usize)> = values.iter().map(|&v| (v, 1)).collect();
    Ok(Spectrum { pairs: merge_clusters(&singles, tol), n: values.len() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups_repeated_values() {
        let s = group_spectrum(&[2.0, 2.0, -1.0], 1e-8).unwrap();
        assert_eq!(s.pairs(), &[(2.0, 2), (-1.0, 1)]);
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn merges_within_tolerance() {
        let s = group_spectrum(&[1.000_000_000_1, 1.0], 1e-8).unwrap();
        assert_eq!(s.multiplicities(), vec![2]);
        assert!((s.pairs()[0].0 - 1.000_000_000_05).abs() < 1e-15);
    }

    #[test]
    fn rejects_unsorted_and_bad_tolerance() {
        assert_eq!(group_spectrum(&[1.0, 2.0], 1e-8), Err(Error::Unsorted(1)));
        assert!(group_spectrum(&[1.0], 0.0).is_err());
        assert!(group_spectrum(&[1.0], f64::NAN).is_err());
    }

    #[test]
    fn families_drop_zero_multiplicity_and_merge() {
        let s = Spectrum::from_families([(1.0, 0), (3.0, 2), (-1.0, 1), (3.0 + 1e-12, 1)], 1e-9);
        assert_eq!(s.len(), 4);
        assert_eq!(s.multiplicities(), vec![3, 1]);
        assert_eq!(s.values().len(), 4);
    }
}
