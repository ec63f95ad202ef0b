//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's graph builders or eigensolver.

#![allow(dead_code)]

use std::path::PathBuf;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Adjacency of `G_n` straight from the definition.
pub fn uacg_adjacency(n: usize) -> Vec<Vec<bool>> {
    (0..n)
        .map(|i| (0..n).map(|j| i != j && gcd(((i + j) % n) as u64, n as u64) == 1).collect())
        .collect()
}

pub fn complement_adjacency(adj: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = adj.len();
    (0..n).map(|i| (0..n).map(|j| i != j && !adj[i][j]).collect()).collect()
}

pub fn alpha_matrix(adj: &[Vec<bool>], alpha: f64) -> Vec<Vec<f64>> {
    let n = adj.len();
    let deg: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&x| x).count()).collect();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { alpha * deg[i] as f64 } else if adj[i][j] { 1.0 - alpha } else { 0.0 })
                .collect()
        })
        .collect()
}

/// Cyclic Jacobi rotations; slow but simple and unrelated to the
/// Householder/QL path under test. Returns eigenvalues descending.
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        let scale: f64 = (0..n).map(|i| a[i][i] * a[i][i]).sum::<f64>() + off;
        if off <= 1e-30 * scale.max(1e-300) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                let t = sign / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut d: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    d.sort_by(|x, y| y.total_cmp(x));
    d
}

/// Number of eigenvalues strictly below `x`, by Sylvester's law of inertia
/// on an LDL^T factorisation of `A - x I` (no pivoting; callers pick shifts
/// away from eigenvalues).
pub fn count_below(a: &[Vec<f64>], x: f64) -> usize {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= x;
    }
    let mut negatives = 0;
    for k in 0..n {
        let mut pivot = m[k][k];
        if pivot == 0.0 {
            pivot = -1e-300;
        }
        if pivot < 0.0 {
            negatives += 1;
        }
        for i in k + 1..n {
            let f = m[i][k] / pivot;
            for j in k + 1..n {
                m[i][j] -= f * m[k][j];
            }
        }
    }
    negatives
}

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

/// Rows of a fixture CSV, header included.
pub fn read_fixture(name: &str) -> Vec<Vec<String>> {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture present");
    text.lines().map(|l| l.split(',').map(str::to_string).collect()).collect()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
