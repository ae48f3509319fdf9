use std::f64::consts::PI;

use super::kernels::delta_kernel;
use super::Evaluated;
use crate::error::{Error, Result};
use crate::quad::{
    integrate_gaussian_with, integrate_xi_axis, sin_bose, sinh_bose, with_fallible, x_bose, Domain,
    Envelope, QuadConfig, QuadResult,
};
use crate::specfun::{erf, erfi, gamma, riemann_xi_capital};
use crate::C64;

/// Largest |z| accepted by the error-function sides.
pub const Z_DOMAIN: f64 = 6.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HalfLine {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrigKind {
    Sin,
    Sinh,
    Cos,
    Cosh,
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(Error::Parameter(format!(
            "alpha must be positive, got {alpha}"
        )))
    }
}

pub(crate) fn check_z(z: C64) -> Result<()> {
    if z.norm() <= Z_DOMAIN {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "|z| must be at most {Z_DOMAIN}, got {}",
            z.norm()
        )))
    }
}

/// Integral of e^{-pi a^2 x^2} trig(sqrt(pi) a x z)/(e^{2 pi x} - 1) over a half-line.
pub fn partial_theta_integral(
    alpha: f64,
    z: C64,
    domain: HalfLine,
    kind: TrigKind,
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    check_alpha(alpha)?;
    let c = z * (PI.sqrt() * alpha);
    let decay = PI * alpha * alpha;
    let growth = match kind {
        TrigKind::Sin => c.im.abs(),
        TrigKind::Sinh => c.re.abs(),
        TrigKind::Cos | TrigKind::Cosh => {
            return Err(Error::Domain(
                "the cos and cosh integrals diverge at x = 0 against 1/(e^{2 pi x} - 1)".into(),
            ))
        }
    };
    let f = move |x: f64| {
        let g = (-decay * x * x).exp();
        match kind {
            TrigKind::Sin => sin_bose(c, x) * g,
            _ => sinh_bose(c, x) * g,
        }
    };
    match domain {
        HalfLine::Positive => {
            let env = Envelope::gaussian(decay).linear(growth - 2.0 * PI);
            integrate_gaussian_with(f, &env, Domain::PositiveAxis, cfg)
        }
        HalfLine::Negative => {
            let env = Envelope::gaussian(decay).linear(growth);
            integrate_gaussian_with(f, &env, Domain::NegativeAxis, cfg)
        }
    }
}

fn full_line_integral(alpha: f64, z: C64, kind: TrigKind, cfg: &QuadConfig) -> Result<QuadResult> {
    let c = z * (PI.sqrt() * alpha);
    let decay = PI * alpha * alpha;
    let growth = match kind {
        TrigKind::Sin => c.im.abs(),
        _ => c.re.abs(),
    };
    let env = Envelope::gaussian(decay).linear(growth);
    integrate_gaussian_with(
        move |x: f64| {
            let g = (-decay * x * x).exp();
            match kind {
                TrigKind::Sin => sin_bose(c, x) * g,
                _ => sinh_bose(c, x) * g,
            }
        },
        &env,
        Domain::FullLine,
        cfg,
    )
}

fn assemble(pref: C64, head: C64, sign: f64, q: QuadResult) -> Evaluated {
    Evaluated {
        value: pref * (head + 4.0 * sign * q.value),
        err: 4.0 * pref.norm() * q.err_estimate,
    }
}

/// sqrt(a) e^{z^2/8} (erf(z/2) - 4 int_0^inf e^{-pi a^2 x^2} sin(sqrt(pi) a x z)/(e^{2 pi x}-1) dx).
pub fn erf1_side(alpha: f64, z: C64, cfg: &QuadConfig) -> Result<Evaluated> {
    check_z(z)?;
    let q = partial_theta_integral(alpha, z, HalfLine::Positive, TrigKind::Sin, cfg)?;
    let pref = alpha.sqrt() * (z * z / 8.0).exp();
    Ok(assemble(pref, erf(z * 0.5)?, -1.0, q))
}

/// sqrt(b) e^{-z^2/8} (erfi(z/2) - 4 int_0^inf e^{-pi b^2 x^2} sinh(sqrt(pi) b x z)/(e^{2 pi x}-1) dx).
pub fn erf1_dual(beta: f64, z: C64, cfg: &QuadConfig) -> Result<Evaluated> {
    check_z(z)?;
    let q = partial_theta_integral(beta, z, HalfLine::Positive, TrigKind::Sinh, cfg)?;
    let pref = beta.sqrt() * (-z * z / 8.0).exp();
    Ok(assemble(pref, erfi(z * 0.5)?, -1.0, q))
}

/// sqrt(a) e^{z^2/8} (erf(z/2) + 4 int_{-inf}^0 e^{-pi a^2 x^2} sin(sqrt(pi) a x z)/(e^{2 pi x}-1) dx).
pub fn erf2_side(alpha: f64, z: C64, cfg: &QuadConfig) -> Result<Evaluated> {
    check_z(z)?;
    let q = partial_theta_integral(alpha, z, HalfLine::Negative, TrigKind::Sin, cfg)?;
    let pref = alpha.sqrt() * (z * z / 8.0).exp();
    Ok(assemble(pref, erf(z * 0.5)?, 1.0, q))
}

/// sqrt(b) e^{-z^2/8} (erfi(z/2) + 4 int_{-inf}^0 e^{-pi b^2 x^2} sinh(sqrt(pi) b x z)/(e^{2 pi x}-1) dx).
pub fn erf2_dual(beta: f64, z: C64, cfg: &QuadConfig) -> Result<Evaluated> {
    check_z(z)?;
    let q = partial_theta_integral(beta, z, HalfLine::Negative, TrigKind::Sinh, cfg)?;
    let pref = beta.sqrt() * (-z * z / 8.0).exp();
    Ok(assemble(pref, erfi(z * 0.5)?, 1.0, q))
}

/// sqrt(a) e^{z^2/8} int_R e^{-pi a^2 x^2} sin(sqrt(pi) a x z)/(e^{2 pi x}-1) dx.
pub fn ram_theta_side(alpha: f64, z: C64, cfg: &QuadConfig) -> Result<Evaluated> {
    check_alpha(alpha)?;
    check_z(z)?;
    let q = full_line_integral(alpha, z, TrigKind::Sin, cfg)?;
    let pref = alpha.sqrt() * (z * z / 8.0).exp();
    Ok(Evaluated {
        value: pref * q.value,
        err: pref.norm() * q.err_estimate,
    })
}

/// sqrt(b) e^{-z^2/8} int_R e^{-pi b^2 x^2} sinh(sqrt(pi) b x z)/(e^{2 pi x}-1) dx.
pub fn ram_theta_dual(beta: f64, z: C64, cfg: &QuadConfig) -> Result<Evaluated> {
    check_alpha(beta)?;
    check_z(z)?;
    let q = full_line_integral(beta, z, TrigKind::Sinh, cfg)?;
    let pref = beta.sqrt() * (-z * z / 8.0).exp();
    Ok(Evaluated {
        value: pref * q.value,
        err: pref.norm() * q.err_estimate,
    })
}

pub(crate) fn gamma_sq(re: f64, t: f64) -> Result<f64> {
    Ok(gamma(C64::new(re, t / 4.0))?.norm_sqr())
}

/// (z/8 pi^2) int_0^inf Gamma((-1+it)/4) Gamma((-1-it)/4) Xi(t/2) Delta(a, z, (1+it)/2) dt.
pub fn xi_side_erf1(alpha: f64, z: C64, cfg: &QuadConfig) -> Result<Evaluated> {
    check_alpha(alpha)?;
    check_z(z)?;
    if z == C64::new(0.0, 0.0) {
        return Ok(Evaluated {
            value: C64::new(0.0, 0.0),
            err: 0.0,
        });
    }
    let real_z = z.im == 0.0;
    let g = |t: f64| -> Result<C64> {
        let w = gamma_sq(-0.25, t)?;
        let xi = riemann_xi_capital(C64::new(t / 2.0, 0.0))?.re;
        let d = delta_kernel(alpha, z, C64::new(0.5, t / 2.0))?;
        let d = if real_z { C64::new(d.re, 0.0) } else { d };
        Ok(d * (w * xi))
    };
    let q = with_fallible(g, |h| integrate_xi_axis(h, cfg))?;
    let pref = z / (8.0 * PI * PI);
    Ok(Evaluated {
        value: pref * q.value,
        err: pref.norm() * q.err_estimate,
    })
}

/// a^{1/2} - 4 pi a^{3/2} int_0^inf x e^{-pi a^2 x^2}/(e^{2 pi x}-1) dx.
pub fn mrram_side(alpha: f64, cfg: &QuadConfig) -> Result<Evaluated> {
    check_alpha(alpha)?;
    let decay = PI * alpha * alpha;
    let env = Envelope::gaussian(decay).linear(-2.0 * PI).power(1.0);
    let q = integrate_gaussian_with(
        |x: f64| C64::new(x_bose(x) * (-decay * x * x).exp(), 0.0),
        &env,
        Domain::PositiveAxis,
        cfg,
    )?;
    let pref = 4.0 * PI * alpha.powf(1.5);
    Ok(Evaluated {
        value: C64::new(alpha.sqrt() - pref * q.value.re, 0.0),
        err: pref * q.err_estimate,
    })
}

/// (1/(4 pi^{3/2})) int_0^inf Gamma((-1+it)/4) Gamma((-1-it)/4) Xi(t/2) cos(t log(a)/2) dt.
pub fn mrram_xi(alpha: f64, cfg: &QuadConfig) -> Result<Evaluated> {
    check_alpha(alpha)?;
    let la = alpha.ln();
    let g = |t: f64| -> Result<C64> {
        let w = gamma_sq(-0.25, t)?;
        let xi = riemann_xi_capital(C64::new(t / 2.0, 0.0))?.re;
        Ok(C64::new(w * xi * (0.5 * t * la).cos(), 0.0))
    };
    let q = with_fallible(g, |h| integrate_xi_axis(h, cfg))?;
    let pref = 1.0 / (4.0 * PI.powf(1.5));
    Ok(Evaluated {
        value: q.value * pref,
        err: q.err_estimate * pref,
    })
}
