//! Rank intervals and energy bounds for odd n, including orders that are not
//! prime powers and so have no closed-form spectrum.
//!
//! cargo run --example eigenvalue_bounds -- 15 0.5

use uacg::analysis::bound_report;
use uacg::GraphSpec;

fn main() -> uacg::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(15, |s| s.parse().expect("n"));
    let alpha: f64 = args.next().map_or(0.5, |s| s.parse().expect("alpha"));

    for spec in [GraphSpec::uacg(n)?, GraphSpec::complement_of_uacg(n)?] {
        let r = bound_report(spec, alpha)?;
        println!("{spec} at alpha = {alpha}");
        for (k, b) in r.per_index.iter().enumerate() {
            let mark = if b.satisfied { "" } else { "  <-- outside" };
            println!("  lambda_{:<3} {:>10.5} <= {:>10.5} <= {:>10.5}{mark}", k + 1, b.lower, b.observed, b.upper);
        }
        if let Some(e) = &r.energy {
            for l in &e.lowers {
                println!("  lower ({:<13}) {:>10.5}", l.name, l.value);
            }
            println!("  energy                {:>10.5}", e.observed);
            println!("  upper                 {:>10.5}", e.upper);
        }
        println!("  all bounds hold: {}\n", r.all_satisfied());
    }
    Ok(())
}
