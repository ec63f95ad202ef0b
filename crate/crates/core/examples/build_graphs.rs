//! Build G_n, X_n and K_n, print basic invariants and the edge list of G_9.
//!
//! cargo run --example build_graphs

use uacg::graphs::{adjacency_frobenius_sq, zagreb_index};
use uacg::{Family, GraphSpec};

fn main() -> uacg::Result<()> {
    println!("{:<28} {:>4} {:>6} {:>8} {:>8}", "graph", "n", "m", "zagreb", "regular");
    for n in [9, 10, 15] {
        let uacg = GraphSpec::uacg(n)?;
        let cayley = GraphSpec::new(Family::UnitaryCayley, n)?;
        for spec in [uacg, uacg.complement(), cayley, cayley.complement()] {
            let g = spec.build();
            println!(
                "{:<28} {:>4} {:>6} {:>8} {:>8}",
                spec.to_string(),
                g.order(),
                g.edge_count(),
                zagreb_index(&g),
                g.is_regular()
            );
            assert_eq!(adjacency_frobenius_sq(&g), 2 * g.edge_count() as u64);
        }
    }

    let g9 = GraphSpec::uacg(9)?.build();
    println!("\nneighbours of 0 in G_9: {:?}", g9.neighbors(0).collect::<Vec<_>>());
    print!("edge list of G_9:\n{}", g9.to_edge_list());
    Ok(())
}
