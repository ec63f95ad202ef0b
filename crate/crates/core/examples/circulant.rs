//! Right and left circulant eigenvalues from a generator vector.
//!
//! cargo run --example circulant

use uacg::linalg::{left_circulant_eigenvalues, left_circulant_matrix, right_circulant_eigenvalues};

fn main() -> uacg::Result<()> {
    let s = [1.0, 2.0, 0.0, -1.0, 0.5];
    println!("generator {s:?}");
    for (k, l) in right_circulant_eigenvalues(&s).iter().enumerate() {
        println!("  right lambda_{k} = {:.6} {:+.6}i", l.re, l.im);
    }
    let fast = left_circulant_eigenvalues(&s);
    let dense = left_circulant_matrix(&s).eigenvalues()?;
    println!("left circulant (from DFT):  {fast:.6?}");
    println!("left circulant (eigensolver): {dense:.6?}");
    Ok(())
}
