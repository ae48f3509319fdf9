use std::f64::consts::PI;

use super::{log_gamma, zeta};
use crate::error::Result;
use crate::C64;

/// Riemann's xi(s) = s(s-1) pi^{-s/2} Gamma(s/2) zeta(s) / 2.
pub fn riemann_xi(s: C64) -> Result<C64> {
    let half = s * 0.5;
    let g = (log_gamma(half)? - half * PI.ln()).exp();
    Ok(s * (s - 1.0) * 0.5 * g * zeta(s)?)
}

/// Xi(t) = xi(1/2 + it) without any realness projection.
pub fn riemann_xi_capital_raw(t: C64) -> Result<C64> {
    riemann_xi(C64::new(0.5 - t.im, t.re))
}

/// Xi(t) = xi(1/2 + it); for real t the (round-off) imaginary part is dropped.
pub fn riemann_xi_capital(t: C64) -> Result<C64> {
    let v = riemann_xi_capital_raw(t)?;
    if t.im == 0.0 {
        Ok(C64::new(v.re, 0.0))
    } else {
        Ok(v)
    }
}

/// Xi(t) for real t.
pub fn riemann_xi_real(t: f64) -> Result<f64> {
    Ok(riemann_xi_capital_raw(C64::new(t, 0.0))?.re)
}
