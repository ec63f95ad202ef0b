use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("eigenvalue iteration did not converge for n = {n} after {iterations} sweeps")]
    NoConvergence { n: usize, iterations: usize },

    #[error("values are not sorted in descending order at index {0}")]
    Unsorted(usize),

    #[error("no closed form available for {0}")]
    ClosedFormUnavailable(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("alpha = {alpha} outside [0, 1]")))
    }
}

/// Energy functionals are only defined for `alpha < 1`.
pub(crate) fn check_energy_alpha(alpha: f64) -> Result<()> {
    if (0.0..1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "alpha = {alpha} outside [0, 1) required for energies"
        )))
    }
}
