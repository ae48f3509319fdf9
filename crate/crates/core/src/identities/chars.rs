use std::f64::consts::PI;

use super::kernels::{delta_kernel, nabla_kernel};
use super::sides::{check_alpha, check_z, gamma_sq};
use super::Evaluated;
use crate::characters::{char_exp_sum, character, xi_chi, CharacterTable};
use crate::error::Result;
use crate::quad::{
    integrate_gaussian_with, integrate_xi_axis, with_fallible, Domain, Envelope, QuadConfig,
};
use crate::C64;

/// Which member of the character transformation to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharMember {
    IntegralAlpha,
    IntegralBeta,
    XiIntegral,
}

/// A member of the three-way character identity, for the built-in
/// character modulo q.
pub fn char_side(
    q: u32,
    alpha: f64,
    z: C64,
    which: CharMember,
    cfg: &QuadConfig,
) -> Result<Evaluated> {
    char_side_for(&character(q)?, alpha, z, which, cfg)
}

/// As [`char_side`] for an explicit character table.  Even characters use
/// sin/sinh and the Delta kernel, odd ones cos/cosh and the nabla kernel.
pub fn char_side_for(
    chi: &CharacterTable,
    alpha: f64,
    z: C64,
    which: CharMember,
    cfg: &QuadConfig,
) -> Result<Evaluated> {
    check_alpha(alpha)?;
    check_z(z)?;
    let q = chi.q() as f64;
    let even = chi.is_even();
    match which {
        CharMember::IntegralAlpha | CharMember::IntegralBeta => {
            let dual = which == CharMember::IntegralBeta;
            let a = if dual { 1.0 / alpha } else { alpha };
            let c = z * ((PI / q).sqrt() * a);
            let decay = PI * a * a / q;
            let growth = if dual { c.re.abs() } else { c.im.abs() };
            let env = Envelope::gaussian(decay).linear(growth - 2.0 * PI / q);
            let f = |x: f64| {
                let cx = c * x;
                let trig = match (even, dual) {
                    (true, false) => cx.sin(),
                    (true, true) => cx.sinh(),
                    (false, false) => cx.cos(),
                    (false, true) => cx.cosh(),
                };
                trig * ((-decay * x * x).exp() * char_exp_sum(x, chi))
            };
            let r = integrate_gaussian_with(f, &env, Domain::PositiveAxis, cfg)?;
            let sign = if dual { -1.0 } else { 1.0 };
            let pref = a.sqrt() * (z * z * (sign / 8.0)).exp();
            Ok(Evaluated {
                value: pref * r.value,
                err: pref.norm() * r.err_estimate,
            })
        }
        CharMember::XiIntegral => {
            if even && z == C64::new(0.0, 0.0) {
                return Ok(Evaluated {
                    value: C64::new(0.0, 0.0),
                    err: 0.0,
                });
            }
            let real_z = z.im == 0.0;
            let g = |t: f64| -> Result<C64> {
                let s = C64::new(0.5, t / 2.0);
                let (w, k) = if even {
                    (gamma_sq(0.75, t)?, delta_kernel(alpha, z, s)?)
                } else {
                    (gamma_sq(0.25, t)?, nabla_kernel(alpha, z, s)?)
                };
                let k = if real_z { C64::new(k.re, 0.0) } else { k };
                Ok(k * (w * xi_chi(C64::new(t / 2.0, 0.0), chi)?.re))
            };
            let r = with_fallible(g, |h| integrate_xi_axis(h, cfg))?;
            let pref = if even {
                z * (q.sqrt() / (16.0 * PI * PI))
            } else {
                C64::new(1.0 / (16.0 * PI.powf(1.5)), 0.0)
            };
            Ok(Evaluated {
                value: pref * r.value,
                err: pref.norm() * r.err_estimate,
            })
        }
    }
}
