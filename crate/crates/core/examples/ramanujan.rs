//! Euler's phi, the Moebius function and Ramanujan sums c(k, n), which give
//! the adjacency spectrum of the unitary Cayley graph X_n.
//!
//! cargo run --example ramanujan -- 12

use uacg::numtheory::{euler_phi, factorize, mobius, ramanujan_sum};

fn main() -> uacg::Result<()> {
    let n: u64 = std::env::args().nth(1).map_or(12, |s| s.parse().expect("n"));
    let f = factorize(n);
    println!("n = {n} = {:?}, phi = {}, mu = {}", f.factors(), euler_phi(n), mobius(n));
    let sums = (0..n).map(|k| ramanujan_sum(k, n)).collect::<uacg::Result<Vec<_>>>()?;
    println!("c(k, {n}) for k = 0..{n}: {sums:?}");
    println!("sum over k: {}", sums.iter().sum::<i64>());
    Ok(())
}
