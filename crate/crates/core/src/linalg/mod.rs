//! Dense symmetric matrices, the numeric eigensolver, circulant eigenvalue
//! formulas and spectrum grouping.

mod circulant;
mod eigen;
mod spectrum;

pub use circulant::{left_circulant_eigenvalues, left_circulant_matrix, right_circulant_eigenvalues};
pub use eigen::symmetric_eigenvalues;
pub use spectrum::{group_spectrum, Spectrum, DEFAULT_GROUPING_TOL};

use crate::error::{Error, Result};

/// Dense real symmetric matrix, row-major. Symmetry is exact: every
/// constructor either mirrors the upper triangle or checks it bitwise.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymmetric {
    n: usize,
    entries: Vec<f64>,
}

impl DenseSymmetric {
    pub fn zeros(n: usize) -> Self {
        Self { n, entries: vec![0.0; n * n] }
    }

    pub fn diagonal(d: &[f64]) -> Self {
        let mut a = Self::zeros(d.len());
        for (i, &x) in d.iter().enumerate() {
            a.entries[i * a.n + i] = x;
        }
        a
    }

    /// Builds the matrix from `f(i, j)` evaluated on `i <= j` and mirrored.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let x = f(i, j);
                entries[i * n + j] = x;
                entries[j * n + i] = x;
            }
        }
        Self { n, entries }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("matrix is not square".into()));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::InvalidArgument(format!(
                        "matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Self { n, entries: rows.concat() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Sum of squared entries.
    pub fn frobenius_sq(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum()
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        symmetric_eigenvalues(self)
    }
}
