use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole of {func} at {at}")]
    Pole { func: &'static str, at: String },
    #[error("overflow in {0}")]
    Overflow(&'static str),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("{what} did not converge after {iterations} iterations")]
    NonConvergence {
        what: &'static str,
        iterations: usize,
    },
    #[error("integrand is not finite at x = {0}")]
    Singularity(f64),
    #[error("unsupported modulus {0}; built-in characters exist for q in {{3, 4, 5, 8, 12}}")]
    UnsupportedModulus(u32),
    #[error("index {index} is beyond the cache bound {bound}")]
    OutOfRange { index: usize, bound: usize },
    #[error("degenerate series: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
