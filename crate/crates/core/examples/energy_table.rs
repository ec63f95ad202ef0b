//! Regenerate the A_alpha energy table for G_{p^m}, its complement and K_{p^m}.
//!
//! cargo run --example energy_table            # energies of the actual graphs
//! cargo run --example energy_table -- legacy  # legacy complement formula

use uacg::tables::{energy_table, ComplementFormula};
use uacg::verify::ALPHA_GRID;

fn main() -> uacg::Result<()> {
    let formula = match std::env::args().nth(1).as_deref() {
        Some("legacy") => ComplementFormula::Legacy,
        _ => ComplementFormula::Exact,
    };
    print!("{:<22}", "graph");
    for a in ALPHA_GRID {
        print!("{a:>10}");
    }
    println!();
    for row in energy_table(formula)? {
        print!("{:<22}", row.spec.to_string());
        for e in &row.energies {
            print!("{e:>10.3}");
        }
        println!();
    }
    Ok(())
}
