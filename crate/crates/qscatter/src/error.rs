use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("numeric degeneracy: {0}")]
    NumericDegeneracy(String),

    #[error("inconsistent input: {0}")]
    InconsistentInput(String),

    /// The short-separation regime a <= a_c is not supported.
    #[error("separation a = {a} is at or below the critical value a_c = {a_c}")]
    OutOfRegime { a: f64, a_c: f64 },

    #[error("root isolation failed: {0}")]
    RootIsolation(String),

    #[error("zeta argument is the pole at 1")]
    ZetaPole,

    #[error("contour passes too close to a zero: {0}")]
    ContourProximity(String),

    #[error("Newton refinement did not converge, last iterate {last}")]
    RefinementFailure { last: Complex64 },

    #[error("unphysical root at k = {k} (off-axis zero in the upper half plane)")]
    UnphysicalRoot { k: Complex64 },

    #[error("accuracy: {0}")]
    Accuracy(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
