use std::f64::consts::PI;

use num_rational::Rational64;

use super::{
    truncate_fixed, truncate_optimal_after, AsymptoticExpansion, ExpansionTerm, SeriesOrigin,
    OPTIMAL_CAP,
};
use crate::error::{Error, Result};
use crate::identities::Evaluated;
use crate::quad::{geometric_grid, integrate_panels, integrate_xi_axis, with_fallible, QuadConfig};
use crate::specfun::{
    divisor_sigma_table, gamma, log_gamma, riemann_xi_capital, zeta, EULER_GAMMA,
};
use crate::C64;

/// Default number of terms of the divisor series in Omega.
pub const OMEGA_DEFAULT_TERMS: usize = 100_000;

fn c(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn check_strip(z: C64) -> Result<()> {
    if !crate::finite(z) || !(z.re > -1.0 && z.re < 1.0) {
        return Err(Error::Domain("need -1 < Re z < 1".into()));
    }
    if z == c(0.0) {
        return Err(Error::Domain(
            "z = 0 is a singular point, use the z = 0 expansion".into(),
        ));
    }
    Ok(())
}

/// A value together with a bound on the neglected tail of its series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaValue {
    pub value: C64,
    pub tail_bound: f64,
}

/// Precomputed data for Omega(t, z) and the derived g(t, z), h(t, z).
///
/// The divisor series sum sigma_{-z}(n)/(n^2+t^2) is evaluated after
/// subtracting zeta(2)zeta(2+z) and t^2 zeta(4)zeta(4+z) (t <= 1), or only
/// the first of these (t > 1), which makes the truncated remainder decay
/// like N^{-4.5} resp. N^{-2.5}.
#[derive(Debug, Clone)]
pub struct OmegaSeries {
    z: C64,
    sigma: Vec<C64>,
    zz2: C64,
    zz4: C64,
    gamma_zeta: C64,
    zeta_z: C64,
    zeta_z1: C64,
    sigma_power: f64,
}

impl OmegaSeries {
    pub fn new(z: C64, n_terms: usize) -> Result<Self> {
        check_strip(z)?;
        if n_terms == 0 {
            return Err(Error::Parameter("need at least one series term".into()));
        }
        Ok(Self {
            z,
            sigma: divisor_sigma_table(n_terms, z),
            zz2: zeta(c(2.0))? * zeta(z + 2.0)?,
            zz4: zeta(c(4.0))? * zeta(z + 4.0)?,
            gamma_zeta: gamma(z)? * zeta(z)?,
            zeta_z: zeta(z)?,
            zeta_z1: zeta(z + 1.0)?,
            sigma_power: 0.5 + (-z.re).max(0.0),
        })
    }

    pub fn n_terms(&self) -> usize {
        self.sigma.len() - 1
    }

    /// sum_{n >= 1} sigma_{-z}(n)/(n^2 + t^2).
    pub fn divisor_sum(&self, t: f64) -> OmegaValue {
        let n_max = self.n_terms() as f64;
        let t2 = t * t;
        let p = self.sigma_power;
        let mut acc = c(0.0);
        if t <= 1.0 {
            for (n, s) in self.sigma.iter().enumerate().skip(1).rev() {
                let n2 = (n * n) as f64;
                acc += s / (n2 * n2 * (n2 + t2));
            }
            OmegaValue {
                value: self.zz2 - self.zz4 * t2 + acc * (t2 * t2),
                tail_bound: t2 * t2 * 2.0 * n_max.powf(p - 5.0) / (5.0 - p),
            }
        } else {
            for (n, s) in self.sigma.iter().enumerate().skip(1).rev() {
                let n2 = (n * n) as f64;
                acc += s / (n2 * (n2 + t2));
            }
            OmegaValue {
                value: self.zz2 - acc * t2,
                tail_bound: t2 * 2.0 * n_max.powf(p - 3.0) / (3.0 - p),
            }
        }
    }

    /// Omega(t, z) in its four-term closed form.
    pub fn omega(&self, t: f64) -> OmegaValue {
        let z = self.z;
        let s = self.divisor_sum(t);
        let tz = |e: C64| (e * t.ln()).exp();
        let lead = -self.gamma_zeta / (c(2.0 * PI * t.sqrt())).powc(z);
        let second = tz(z / 2.0 - 1.0) * self.zeta_z / (2.0 * PI);
        let third = -tz(z / 2.0) * self.zeta_z1 / 2.0;
        let w = tz(z / 2.0 + 1.0) / PI;
        OmegaValue {
            value: lead + second + third + w * s.value,
            tail_bound: w.norm() * s.tail_bound,
        }
    }

    /// h(t, z) = t^{z+1}/pi sum sigma_{-z}(n)/(n^2+t^2).
    pub fn h(&self, t: f64) -> OmegaValue {
        let s = self.divisor_sum(t);
        let w = ((self.z + 1.0) * t.ln()).exp() / PI;
        OmegaValue {
            value: w * s.value,
            tail_bound: w.norm() * s.tail_bound,
        }
    }

    /// g(t, z) = t^{z/2}(Omega(t, z) - zeta(z) t^{z/2-1}/(2 pi)).
    pub fn g(&self, t: f64) -> OmegaValue {
        let h = self.h(t);
        let tz = (self.z * t.ln()).exp();
        OmegaValue {
            value: h.value - self.gamma_zeta / c(2.0 * PI).powc(self.z) - tz * self.zeta_z1 / 2.0,
            tail_bound: h.tail_bound,
        }
    }
}

/// Omega(t, z) with the divisor series cut at `n_terms`.
pub fn omega_prop61(t: f64, z: C64, n_terms: usize) -> Result<OmegaValue> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Parameter("t must be positive".into()));
    }
    Ok(OmegaSeries::new(z, n_terms)?.omega(t))
}

pub fn g_function(t: f64, z: C64) -> Result<OmegaValue> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Parameter("t must be positive".into()));
    }
    Ok(OmegaSeries::new(z, OMEGA_DEFAULT_TERMS)?.g(t))
}

pub fn h_function(t: f64, z: C64) -> Result<OmegaValue> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Parameter("t must be positive".into()));
    }
    Ok(OmegaSeries::new(z, OMEGA_DEFAULT_TERMS)?.h(t))
}

/// sum_{m < terms} (-1)^m zeta(2m+2) zeta(2m+2+z) t^{2m+z+1}/pi, valid for t < 1.
pub fn h_series(t: f64, z: C64, terms: usize) -> Result<C64> {
    let mut acc = c(0.0);
    for m in 0..terms {
        let e = 2.0 * m as f64 + 2.0;
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        acc += zeta(c(e))? * zeta(z + e)? * ((z + e - 1.0) * t.ln()).exp() * sign;
    }
    Ok(acc / PI)
}

fn laplace<F>(z: C64, alpha: f64, cfg: &QuadConfig, pick: F) -> Result<Evaluated>
where
    F: Fn(&OmegaSeries, f64) -> OmegaValue,
{
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::Parameter("alpha must be positive".into()));
    }
    let series = OmegaSeries::new(z, OMEGA_DEFAULT_TERMS)?;
    let rate = 2.0 * PI * alpha;
    let mut t_max = cfg.truncation_safety / rate;
    while rate * t_max - (z.re + 2.0) * t_max.max(1.0).ln() < cfg.truncation_safety + 2.0 {
        t_max *= 1.25;
    }
    let q = integrate_panels(
        |t: f64| pick(&series, t).value * (-rate * t).exp(),
        &geometric_grid(t_max),
        cfg,
    )?;
    let x = z.re;
    let p = series.sigma_power;
    let n = series.n_terms() as f64;
    let tail = 2.0 / PI
        * (n.powf(p - 5.0) / (5.0 - p) * gamma(c(6.0 + x))?.re / rate.powf(6.0 + x)
            + n.powf(p - 3.0) / (3.0 - p) * gamma(c(4.0 + x))?.re / rate.powf(4.0 + x));
    Ok(Evaluated {
        value: q.value,
        err: q.err_estimate + tail,
    })
}

/// int_0^inf e^{-2 pi a t} h(t, z) dt by quadrature.
pub fn laplace_h(z: C64, alpha: f64, cfg: &QuadConfig) -> Result<Evaluated> {
    laplace(z, alpha, cfg, |s, t| s.h(t))
}

/// int_0^inf e^{-2 pi a t} g(t, z) dt by quadrature.
pub fn laplace_g(z: C64, alpha: f64, cfg: &QuadConfig) -> Result<Evaluated> {
    laplace(z, alpha, cfg, |s, t| s.g(t))
}

/// 2 pi a^{(z+1)/2} int_0^inf e^{-2 pi a t} g(t, z) dt, the quantity the
/// general large-alpha expansion describes.  The explicit parts of g are
/// transformed in closed form; only h is integrated numerically.
pub fn oloa_general_reference(z: C64, alpha: f64, cfg: &QuadConfig) -> Result<Evaluated> {
    check_strip(z)?;
    let lh = laplace_h(z, alpha, cfg)?;
    let two_pi = c(2.0 * PI);
    let b1 = gamma(z)? * zeta(z)? / (two_pi.powc(z + 1.0) * alpha);
    let b2 = zeta(z + 1.0)? * gamma(z + 1.0)? / (c(2.0 * PI * alpha).powc(z + 1.0) * 2.0);
    let pref = c(alpha).powc((z + 1.0) / 2.0) * (2.0 * PI);
    Ok(Evaluated {
        value: pref * (lh.value - b1 - b2),
        err: pref.norm() * lh.err,
    })
}

fn oloa_term(z: C64, j: usize) -> Result<ExpansionTerm> {
    let two_pi = c(2.0 * PI);
    match j {
        0 => Ok(ExpansionTerm::new(
            -gamma(z)? * zeta(z)? / two_pi.powc(z),
            Rational64::new(-1, 2),
        )
        .with_z_multiple(1)),
        1 => Ok(ExpansionTerm::new(
            -gamma(z + 1.0)? * zeta(z + 1.0)? / (two_pi.powc(z) * 2.0),
            Rational64::new(-1, 2),
        )
        .with_z_multiple(-1)),
        _ => {
            let m = j - 2;
            let e = 2.0 * m as f64 + 2.0;
            let sign = if m % 2 == 0 { 2.0 } else { -2.0 };
            let mag = (log_gamma(z + e)? - (z + e) * two_pi.ln()).exp();
            let coef = mag * zeta(c(e))? * zeta(z + e)? * sign;
            Ok(
                ExpansionTerm::new(coef, Rational64::new(-(4 * m as i64 + 3), 2))
                    .with_z_multiple(-1),
            )
        }
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::Parameter("alpha must be positive".into()));
    }
    Ok(())
}

/// The two boundary terms and `m` series terms of the large-alpha expansion.
pub fn oloa_general(z: C64, alpha: f64, m: usize) -> Result<AsymptoticExpansion> {
    check_strip(z)?;
    check_alpha(alpha)?;
    truncate_fixed(SeriesOrigin::OloaGeneral, alpha, z, 2, m, |j| {
        oloa_term(z, j)
    })
}

/// The boundary terms plus the optimally truncated series.
pub fn oloa_general_optimal(z: C64, alpha: f64) -> Result<AsymptoticExpansion> {
    check_strip(z)?;
    check_alpha(alpha)?;
    truncate_optimal_after(SeriesOrigin::OloaGeneral, alpha, z, 2, OPTIMAL_CAP, |j| {
        oloa_term(z, j)
    })
}

fn z0_term(j: usize) -> Result<ExpansionTerm> {
    match j {
        0 => Ok(ExpansionTerm::new(c(0.5), Rational64::new(-1, 2)).with_log_power(1)),
        1 => Ok(ExpansionTerm::new(
            c(0.5 * ((2.0 * PI).ln() - EULER_GAMMA)),
            Rational64::new(-1, 2),
        )),
        _ => oloa_term(c(0.0), j),
    }
}

/// Up to four terms of the z = 0 expansion; higher terms come from the
/// z = 0 specialisation of the general series.
pub fn oloa_z0(alpha: f64, m: usize) -> Result<AsymptoticExpansion> {
    check_alpha(alpha)?;
    if !(1..=4).contains(&m) {
        return Err(Error::Parameter(
            "the z = 0 expansion has 1 to 4 terms".into(),
        ));
    }
    truncate_fixed(SeriesOrigin::OloaZ0, alpha, c(0.0), 0, m, z0_term)
}

/// (1/pi^{3/2}) int_0^inf Xi(t/2)^2 |Gamma((-1+it)/4)|^2 cos(t log(a)/2)/(1+t^2) dt.
pub fn oloa_z0_reference(alpha: f64, cfg: &QuadConfig) -> Result<Evaluated> {
    check_alpha(alpha)?;
    let la = alpha.ln();
    let g = |t: f64| -> Result<C64> {
        let w = gamma(C64::new(-0.25, t / 4.0))?.norm_sqr();
        let xi = riemann_xi_capital(c(t / 2.0))?.re;
        Ok(c(xi * xi * w * (0.5 * t * la).cos() / (1.0 + t * t)))
    };
    let q = with_fallible(g, |h| integrate_xi_axis(h, cfg))?;
    let pref = PI.powf(-1.5);
    Ok(Evaluated {
        value: q.value * pref,
        err: q.err_estimate * pref,
    })
}
