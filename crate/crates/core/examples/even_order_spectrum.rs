//! For even n, G_n is isomorphic to the unitary Cayley graph X_n, so its
//! spectrum comes from Ramanujan sums and its energy is 2^k phi(n).
//!
//! cargo run --example even_order_spectrum -- 12

use uacg::closedform::{uacg_even_spectrum, unitary_cayley_adjacency_energy};
use uacg::eval::{energy, Method};
use uacg::GraphSpec;

fn main() -> uacg::Result<()> {
    let n: u64 = std::env::args().nth(1).map_or(12, |s| s.parse().expect("n"));
    for alpha in [0.0, 0.5] {
        let s = uacg_even_spectrum(n, alpha)?;
        println!("A_{alpha} spectrum of G_{n}: {:?}", s.pairs());
    }
    let spec = GraphSpec::uacg(n as usize)?;
    println!("adjacency energy 2^k phi(n) = {}", unitary_cayley_adjacency_energy(n));
    for alpha in [0.0, 0.25, 0.75] {
        let shortcut = energy(spec, alpha, Method::Auto)?;
        let numeric = energy(spec, alpha, Method::Numeric)?;
        println!(
            "alpha = {alpha:<5} energy {:.9} ({}) vs {:.9} (numeric)",
            shortcut.energy,
            shortcut.method.as_str(),
            numeric.energy
        );
    }
    Ok(())
}
