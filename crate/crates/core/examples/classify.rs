//! Border/hyperenergetic verdicts for a few graphs across alpha.
//!
//! cargo run --example classify

use uacg::analysis::{classify, DEFAULT_CLASSIFY_TOL};
use uacg::{Family, GraphSpec};

fn main() -> uacg::Result<()> {
    let specs = [
        GraphSpec::uacg(9)?,
        GraphSpec::uacg(25)?,
        GraphSpec::uacg(49)?,
        GraphSpec::complement_of_uacg(9)?,
        GraphSpec::new(Family::UnitaryCayley, 30)?,
    ];
    for spec in specs {
        for alpha in [0.0, 0.375, 0.8] {
            let r = classify(spec, alpha, DEFAULT_CLASSIFY_TOL)?;
            println!(
                "{:<22} alpha {:<6} energy {:>9.4}  K_n {:>8.4}  {}",
                spec.to_string(),
                alpha,
                r.energy,
                r.complete_energy,
                r.verdict.as_str()
            );
        }
    }
    Ok(())
}
