//! A_alpha spectra and energies of unitary addition Cayley graphs.
//!
//! The unitary addition Cayley graph `G_n` has vertex set `Z_n` with `i ~ j`
//! whenever `i + j` is a unit mod n. This crate builds `G_n`, the unitary
//! Cayley graph `X_n`, `K_n` and their complements, and computes spectra of
//! `A_alpha = alpha D + (1 - alpha) A` both from closed forms and with a dense
//! symmetric eigensolver. On top of that sit eigenvalue and energy bounds,
//! border/hyperenergetic classification and a root finder for the values of
//! alpha at which a graph is borderenergetic.
//!
//! ```
//! use uacg::{eval, GraphSpec};
//!
//! let g9 = GraphSpec::uacg(9).unwrap();
//! let report = eval::energy(g9, 0.0, eval::Method::Auto).unwrap();
//! assert!((report.energy - 14.717).abs() < 1e-3);
//! ```


pub mod analysis;
pub mod cli;
pub mod closedform;
pub mod error;
pub mod eval;
pub mod graphs;
pub mod linalg;
pub mod numtheory;
pub mod tables;
pub mod verify;


pub use error::{Error, Result};
pub use graphs::{Family, Graph, GraphSpec};
pub use linalg::Spectrum;
