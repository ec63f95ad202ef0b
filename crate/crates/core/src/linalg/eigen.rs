//! Eigenvalues of a dense real symmetric matrix: Householder reduction to
//! tridiagonal form followed by implicit-shift QL iteration.

use super::DenseSymmetric;
use crate::error::{Error, Result};

/// QL sweeps allowed per eigenvalue before giving up.
const MAX_SWEEPS_PER_EIGENVALUE: usize = 50;

/// All eigenvalues of `a`, sorted descending.
pub fn symmetric_eigenvalues(a: &DenseSymmetric) -> Result<Vec<f64>> {
    let n = a.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let (mut diag, mut off) = tridiagonalize(a);
    tridiagonal_ql(&mut diag, &mut off)?;
    diag.sort_by(|x, y| y.total_cmp(x));
    Ok(diag)
}

/// Reduces `a` to a symmetric tridiagonal matrix with the same spectrum.
///
/// Returns `(diagonal, off_diagonal)` where `off_diagonal[i]` couples rows
/// `i` and `i + 1`; the last entry is always zero.
pub(crate) fn tridiagonalize(a: &DenseSymmetric) -> (Vec<f64>, Vec<f64>) {
    let n = a.n();
    let mut m = a.entries().to_vec();
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n];
    let mut v = vec![0.0; n];
    let mut w = vec![0.0; n];

    for k in 0..n.saturating_sub(2) {
        let lo = k + 1;
        let norm = (lo..n).map(|i| m[i * n + k].powi(2)).sum::<f64>().sqrt();
        diag[k] = m[k * n + k];
        if norm == 0.0 {
            off[k] = 0.0;
            continue;
        }
        let x0 = m[lo * n + k];
        let beta = if x0 >= 0.0 { -norm } else { norm };
        off[k] = beta;

        // Reflector v = (x - beta e_1) / |x - beta e_1|.
        for i in lo..n {
            v[i] = m[i * n + k];
        }
        v[lo] -= beta;
        let vnorm = (lo..n).map(|i| v[i] * v[i]).sum::<f64>().sqrt();
        for x in &mut v[lo..n] {
            *x /= vnorm;
        }

        // p = M v, w = p - (v.p) v, M <- M - 2 (v w^T + w v^T)
        for i in lo..n {
            let row = &m[i * n..(i + 1) * n];
            w[i] = (lo..n).map(|j| row[j] * v[j]).sum();
        }
        let vp: f64 = (lo..n).map(|i| v[i] * w[i]).sum();
        for i in lo..n {
            w[i] -= vp * v[i];
        }
        for i in lo..n {
            let (vi, wi) = (v[i], w[i]);
            let row = &mut m[i * n..(i + 1) * n];
            for j in lo..n {
                row[j] -= 2.0 * (vi * w[j] + wi * v[j]);
            }
        }
    }
    if n >= 2 {
        diag[n - 2] = m[(n - 2) * n + (n - 2)];
        off[n - 2] = m[(n - 1) * n + (n - 2)];
    }
    diag[n - 1] = m[(n - 1) * n + (n - 1)];
    off[n - 1] = 0.0;
    (diag, off)
}

/// Implicit-shift QL on a symmetric tridiagonal matrix, in place.
/// On success `diag` holds the (unsorted) eigenvalues.
pub(crate) fn tridiagonal_ql(diag: &mut [f64], off: &mut [f64]) -> Result<()> {
    let n = diag.len();
    let scale = diag
        .iter()
        .zip(off.iter())
        .map(|(d, e)| d.abs() + e.abs())
        .fold(0.0, f64::max);
    let floor = f64::EPSILON * scale;

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() <= f64::EPSILON * dd || off[m].abs() <= floor {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS_PER_EIGENVALUE {
                return Err(Error::NoConvergence { n, iterations: sweeps });
            }

            // Wilkinson-type shift from the leading 2x2 block.
            let mut g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            let mut r = g.hypot(1.0);
            g = diag[m] - diag[l] + off[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * off[i];
                let b = c * off[i];
                r = f.hypot(g);
                off[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
    Ok(())
}
