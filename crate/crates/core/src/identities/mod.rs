//! Kernel functions, the integral members of each transformation, and a
//! verifier that evaluates all members of an identity and compares them.

mod chars;
mod kernels;
mod sec5;
mod sides;
mod verify;

pub use chars::{char_side, char_side_for, CharMember};
pub use kernels::{delta_kernel, nabla_kernel, omega_kernel, rho_kernel};
pub use sec5::{exact_closed_form, h_k, hyper_bose_integral, j_k, Range, RealEvaluated};
pub use sides::{
    erf1_dual, erf1_side, erf2_dual, erf2_side, mrram_side, mrram_xi, partial_theta_integral,
    ram_theta_dual, ram_theta_side, xi_side_erf1, HalfLine, TrigKind, Z_DOMAIN,
};
pub use verify::{
    verify, IdentityCase, IdentityKind, Side, SideFailure, Tolerance, VerificationRecord, MAX_K,
};

use crate::C64;

/// A computed value with its propagated quadrature error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluated {
    pub value: C64,
    pub err: f64,
}
