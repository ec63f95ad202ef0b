//! Exact integer arithmetic: gcd, Euler's totient, the Möbius function,
//! Ramanujan sums and trial-division factorization.
//!
//! Everything here is integer-only. The supported factorization range is
//! `n <= 10^9`, which is far beyond the orders a dense eigensolver can
//! handle anyway.

use crate::error::{Error, Result};

/// Largest input accepted by [`factorize`] and everything built on it.
pub const MAX_FACTOR_INPUT: u64 = 1_000_000_000;

/// Prime factorization `n = p_1^e_1 * ... * p_k^e_k` with strictly
/// increasing primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs, primes ascending.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Number of distinct prime divisors.
    pub fn distinct_primes(&self) -> usize {
        self.factors.len()
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Multiplies the prime powers back together.
    pub fn product(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Trial division. Panics if `n` is zero or above [`MAX_FACTOR_INPUT`].
pub fn factorize(n: u64) -> Factorization {
    assert!(
        (1..=MAX_FACTOR_INPUT).contains(&n),
        "factorize: {n} outside 1..=10^9"
    );
    let mut factors = Vec::new();
    let mut rest = n;
    let mut d = 2u64;
    while d * d <= rest {
        if rest.is_multiple_of(d) {
            let mut e = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Factorization { n, factors }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).factors == [(n, 1)]
}

/// Euler's totient: the number of `1 <= j <= n` coprime to `n`.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .factors
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if !f.is_squarefree() {
        0
    } else if f.distinct_primes().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Ramanujan sum `c(k, n) = mu(t) * phi(n) / phi(t)` with `t = n / gcd(k, n)`.
///
/// The quotient is exact because `t | n` implies `phi(t) | phi(n)`.
pub fn ramanujan_sum(k: u64, n: u64) -> Result<i64> {
    if n == 0 || k >= n {
        return Err(Error::InvalidArgument(format!(
            "ramanujan_sum needs 0 <= k < n, got k = {k}, n = {n}"
        )));
    }
    let t = n / gcd(k, n);
    let (phi_n, phi_t) = (euler_phi(n), euler_phi(t));
    debug_assert_eq!(phi_n % phi_t, 0);
    Ok(mobius(t) * (phi_n / phi_t) as i64)
}

/// `(p, m)` with `n = p^m` when `n` has exactly one prime divisor.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    match factorize(n).factors.as_slice() {
        &[(p, m)] => Some((p, m)),
        _ => None,
    }
}

/// Product of the distinct primes dividing `n` (the radical of `n`).
pub fn largest_squarefree_divisor(n: u64) -> u64 {
    factorize(n).primes().product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_phi(n: u64) -> u64 {
        (1..=n).filter(|&j| gcd(j, n) == 1).count() as u64
    }

    #[test]
    fn gcd_small_cases() {
        assert_eq!(gcd(0, 9), 9);
        assert_eq!(gcd(9, 0), 9);
        assert_eq!(gcd(6, 9), 3);
        assert_eq!(gcd(7, 9), 1);
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(9), brute_phi(9));
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(12), brute_phi(12));
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn phi_matches_brute_force_up_to_2000() {
        for n in 1..=2000 {
            assert_eq!(euler_phi(n), brute_phi(n), "n = {n}");
        }
    }

    #[test]
    fn phi_is_multiplicative_on_coprime_pairs() {
        for a in 1..=200u64 {
            for b in 1..=200u64 {
                if gcd(a, b) == 1 {
                    assert_eq!(euler_phi(a * b), euler_phi(a) * euler_phi(b));
                }
            }
        }
    }

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(4), 0);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(7), -1);
    }

    #[test]
    fn ramanujan_examples() {
        assert_eq!(ramanujan_sum(0, 9).unwrap(), 6);
        assert_eq!(ramanujan_sum(3, 9).unwrap(), -3);
        assert_eq!(ramanujan_sum(1, 9).unwrap(), 0);
    }

    #[test]
    fn ramanujan_rejects_k_out_of_range() {
        assert!(ramanujan_sum(9, 9).is_err());
        assert!(ramanujan_sum(10, 9).is_err());
        assert!(ramanujan_sum(0, 0).is_err());
    }

    #[test]
    fn ramanujan_matches_character_sum() {
        use std::f64::consts::TAU;
        for n in 1..=200u64 {
            for k in 0..n {
                let (mut re, mut im) = (0.0f64, 0.0f64);
                for j in (1..n.max(2)).filter(|&j| gcd(j, n) == 1) {
                    let theta = TAU * (k * j) as f64 / n as f64;
                    re += theta.cos();
                    im += theta.sin();
                }
                if n == 1 {
                    // The only unit of Z_1 is 0 itself.
                    re = 1.0;
                }
                let c = ramanujan_sum(k, n).unwrap() as f64;
                assert!((re - c).abs() < 1e-9, "c({k},{n}) = {c}, sum = {re}");
                assert!(im.abs() < 1e-9);
            }
        }
    }

    #[test]
    fn ramanujan_orthogonality() {
        for n in 2..=300u64 {
            let total: i64 = (0..n).map(|k| ramanujan_sum(k, n).unwrap()).sum();
            assert_eq!(total, 0, "n = {n}");
            assert_eq!(ramanujan_sum(0, n).unwrap(), euler_phi(n) as i64);
        }
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).factors().is_empty());
        assert_eq!(factorize(81).factors(), &[(3, 4)]);
        assert_eq!(factorize(12).factors(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(999_999_937).factors(), &[(999_999_937, 1)]);
    }

    #[test]
    fn factorize_round_trips() {
        for n in 1..=100_000u64 {
            let f = factorize(n);
            assert_eq!(f.product(), n);
            assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
        }
    }

    #[test]
    fn prime_power_examples() {
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(5), Some((5, 1)));
        assert_eq!(prime_power(15), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn radical_examples() {
        assert_eq!(largest_squarefree_divisor(7), 7);
        assert_eq!(largest_squarefree_divisor(12), 6);
        assert_eq!(largest_squarefree_divisor(81), 3);
        assert_eq!(largest_squarefree_divisor(1), 1);
    }
}
