//! Special functions, quadrature, and numerical verification of modular
//! transformations for Mordell-type integrals, Riemann Xi integrals and the
//! integral analogue of the partial theta function.

pub mod asympt;
pub mod characters;
pub mod error;
pub mod hyper;
pub mod identities;
pub mod par;
pub mod quad;
pub mod specfun;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// The scalar type used throughout the crate.
pub type C64 = Complex64;

pub(crate) fn finite(z: C64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
