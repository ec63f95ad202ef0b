//! Scan alpha in [0, 1) for the values at which G_n or its complement has
//! the same A_alpha energy as K_n.
//!
//! cargo run --example borderenergetic -- 27

use uacg::analysis::{find_borderenergetic_alphas, DEFAULT_ROOT_TOL};
use uacg::eval::{complete_energy, energy, Method};
use uacg::GraphSpec;

fn main() -> uacg::Result<()> {
    let orders: Vec<usize> = match std::env::args().nth(1) {
        Some(s) => vec![s.parse().expect("n")],
        None => vec![5, 9, 15, 25, 27],
    };
    for n in orders {
        for spec in [GraphSpec::uacg(n)?, GraphSpec::complement_of_uacg(n)?] {
            let roots = find_borderenergetic_alphas(spec, DEFAULT_ROOT_TOL)?;
            if roots.is_empty() {
                println!("{spec}: no borderenergetic alpha in [0, 1)");
            }
            for a in roots {
                let e = energy(spec, a, Method::Auto)?;
                println!(
                    "{spec}: alpha = {a:.12}, energy {:.12} ({}), K_{n} {:.12}",
                    e.energy,
                    e.method.as_str(),
                    complete_energy(n, a)
                );
            }
        }
    }
    Ok(())
}
