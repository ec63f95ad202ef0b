//! Closed-form A_alpha spectrum of G_{p^m} and its complement, checked
//! against the dense eigensolver.
//!
//! cargo run --example prime_power_spectrum -- 25 0.3

use uacg::closedform::{complement_prime_power_spectrum, uacg_prime_power_spectrum};
use uacg::eval::numeric_eigenvalues;
use uacg::numtheory::prime_power;
use uacg::GraphSpec;

fn main() -> uacg::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(9, |s| s.parse().expect("n"));
    let alpha: f64 = args.next().map_or(0.5, |s| s.parse().expect("alpha"));
    let (p, m) = prime_power(n as u64).filter(|&(p, _)| p != 2).expect("n must be an odd prime power");

    for (label, spectrum, spec) in [
        ("G", uacg_prime_power_spectrum(p, m, alpha)?, GraphSpec::uacg(n)?),
        ("complement of G", complement_prime_power_spectrum(p, m, alpha)?, GraphSpec::complement_of_uacg(n)?),
    ] {
        println!("{label}_{n} at alpha = {alpha}:");
        for &(value, mult) in spectrum.pairs() {
            println!("  {value:>14.9} x {mult}");
        }
        let numeric = numeric_eigenvalues(spec, alpha)?;
        let worst = spectrum.values().iter().zip(&numeric).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        println!("  max deviation from eigensolver: {worst:.2e}\n");
    }
    Ok(())
}
