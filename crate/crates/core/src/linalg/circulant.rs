use std::f64::consts::TAU;

use num_complex::Complex64;

use super::DenseSymmetric;

/// `lambda_j = sum_k s_k w^(jk)` with `w = exp(2 pi i / n)`, for `j = 0..n`.
///
/// The exponent `jk` is reduced mod n before the angle is formed so large
/// orders do not lose phase accuracy.
pub fn right_circulant_eigenvalues(s: &[f64]) -> Vec<Complex64> {
    let n = s.len();
    (0..n)
        .map(|j| {
            s.iter()
                .enumerate()
                .filter(|(_, &x)| x != 0.0)
                .map(|(k, &x)| x * Complex64::from_polar(1.0, TAU * ((j * k) % n) as f64 / n as f64))
                .sum()
        })
        .collect()
}

/// Eigenvalues of the left circulant matrix whose row `r` is `s` shifted
/// left by `r`, sorted descending.
///
/// Built from the right-circulant values: `lambda_0` (and `lambda_{n/2}`
/// for even n) plus `+-|lambda_k|` for each conjugate pair.
pub fn left_circulant_eigenvalues(s: &[f64]) -> Vec<f64> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let lambda = right_circulant_eigenvalues(s);
    let mut out = vec![lambda[0].re];
    let pairs = if n.is_multiple_of(2) {
        out.push(lambda[n / 2].re);
        (n - 2) / 2
    } else {
        (n - 1) / 2
    };
    for l in &lambda[1..=pairs] {
        out.push(l.norm());
        out.push(-l.norm());
    }
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

/// The left circulant matrix: entry `(r, c)` is `s[(r + c) mod n]`.
pub fn left_circulant_matrix(s: &[f64]) -> DenseSymmetric {
    let n = s.len();
    DenseSymmetric::from_fn(n, |r, c| s[(r + c) % n])
}
