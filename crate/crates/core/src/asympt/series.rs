use std::f64::consts::PI;

use num_rational::Rational64;

use super::{
    truncate_fixed, truncate_optimal, zeta_even_any, AsymptoticExpansion, ExpansionTerm,
    SeriesOrigin, OPTIMAL_CAP,
};
use crate::error::{Error, Result};
use crate::hyper::kummer_1f1;
use crate::identities::{Evaluated, Z_DOMAIN};
use crate::quad::{bose, integrate_gaussian_with, sinh_bose, Domain, Envelope, QuadConfig};
use crate::specfun::erf;
use crate::C64;

fn check(z: C64, alpha: f64) -> Result<()> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::Parameter("alpha must be positive".into()));
    }
    if !crate::finite(z) || z.norm() > Z_DOMAIN {
        return Err(Error::Domain(format!("|z| must be at most {Z_DOMAIN}")));
    }
    Ok(())
}

/// (-1/pi^2)^m zeta(2m) Gamma(m+1/2)/sqrt(pi) 1F1(m+1/2; 3/2; -z^2/4), zeta(0) = -1/2.
fn core_coefficient(z: C64, m: usize) -> Result<C64> {
    let zeta = if m == 0 { -0.5 } else { zeta_even_any(m)? };
    let mut w = 1.0;
    for j in 1..=m {
        w *= -(j as f64 - 0.5) / (PI * PI);
    }
    let f = kummer_1f1(
        C64::new(m as f64 + 0.5, 0.0),
        C64::new(1.5, 0.0),
        -z * z / 4.0,
    )?;
    Ok(f * (zeta * w))
}

fn i_term(z: C64, m: usize) -> Result<ExpansionTerm> {
    let pref = -2.0 * (z * z / 8.0).exp();
    Ok(ExpansionTerm::new(
        pref * core_coefficient(z, m)?,
        Rational64::new(4 * m as i64 - 1, 4),
    ))
}

fn k_term(z: C64, m: usize) -> Result<ExpansionTerm> {
    let mut t = i_term(z, m)?;
    t.coefficient = -t.coefficient;
    Ok(t)
}

fn theta_term(z: C64, m: usize) -> Result<ExpansionTerm> {
    let pref = -z * (z * z / 4.0).exp();
    Ok(ExpansionTerm::new(
        pref * core_coefficient(z, m)?,
        Rational64::new(2 * m as i64 - 1, 2),
    ))
}

fn fixed_terms(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::Parameter("need at least one term".into()));
    }
    Ok(())
}

/// The first `m` terms of the small-alpha expansion of I(z, alpha).
pub fn i_series(z: C64, alpha: f64, m: usize) -> Result<AsymptoticExpansion> {
    check(z, alpha)?;
    fixed_terms(m)?;
    truncate_fixed(SeriesOrigin::ISeries, alpha, z, 0, m, |j| i_term(z, j))
}

/// The K(z, alpha) expansion, termwise the negative of [`i_series`].
pub fn k_series(z: C64, alpha: f64, m: usize) -> Result<AsymptoticExpansion> {
    check(z, alpha)?;
    fixed_terms(m)?;
    truncate_fixed(SeriesOrigin::KSeries, alpha, z, 0, m, |j| k_term(z, j))
}

/// Expansion of int_R e^{-a x^2} sinh(sqrt(a) x z)/(e^{2 pi x}-1) dx.
pub fn theta_series(z: C64, alpha: f64, m: usize) -> Result<AsymptoticExpansion> {
    check(z, alpha)?;
    fixed_terms(m)?;
    truncate_fixed(SeriesOrigin::ThetaSeries, alpha, z, 0, m, |j| {
        theta_term(z, j)
    })
}

pub fn i_series_optimal(z: C64, alpha: f64) -> Result<AsymptoticExpansion> {
    check(z, alpha)?;
    truncate_optimal(SeriesOrigin::ISeries, alpha, z, OPTIMAL_CAP, |j| {
        i_term(z, j)
    })
}

pub fn k_series_optimal(z: C64, alpha: f64) -> Result<AsymptoticExpansion> {
    check(z, alpha)?;
    truncate_optimal(SeriesOrigin::KSeries, alpha, z, OPTIMAL_CAP, |j| {
        k_term(z, j)
    })
}

pub fn theta_series_optimal(z: C64, alpha: f64) -> Result<AsymptoticExpansion> {
    check(z, alpha)?;
    truncate_optimal(SeriesOrigin::ThetaSeries, alpha, z, OPTIMAL_CAP, |j| {
        theta_term(z, j)
    })
}

fn sinh_integral(z: C64, alpha: f64, domain: Domain, cfg: &QuadConfig) -> Result<(C64, f64)> {
    let c = z * alpha.sqrt();
    let linear = if domain == Domain::PositiveAxis {
        c.re.abs() - 2.0 * PI
    } else {
        c.re.abs()
    };
    let env = Envelope::gaussian(alpha).linear(linear);
    let q = integrate_gaussian_with(
        |x: f64| sinh_bose(c, x) * (-alpha * x * x).exp(),
        &env,
        domain,
        cfg,
    )?;
    Ok((q.value, q.err_estimate))
}

fn x_integral(alpha: f64, domain: Domain, cfg: &QuadConfig) -> Result<(f64, f64)> {
    let linear = if domain == Domain::PositiveAxis {
        -2.0 * PI
    } else {
        0.0
    };
    let env = Envelope::gaussian(alpha).linear(linear).power(1.0);
    let q = integrate_gaussian_with(
        |x: f64| C64::new(x * bose(x) * (-alpha * x * x).exp(), 0.0),
        &env,
        domain,
        cfg,
    )?;
    Ok((q.value.re, q.err_estimate))
}

fn erf_head(z: C64, alpha: f64) -> Result<C64> {
    Ok(PI.sqrt() / z * alpha.powf(-0.25) * (z * z / 8.0).exp() * erf(z / 2.0)?)
}

/// I(z, a) by quadrature; the z = 0 limit uses the z-free form directly.
pub fn i_reference(z: C64, alpha: f64, cfg: &QuadConfig) -> Result<Evaluated> {
    check(z, alpha)?;
    if z == C64::new(0.0, 0.0) {
        let (v, e) = x_integral(alpha, Domain::PositiveAxis, cfg)?;
        let q = alpha.powf(-0.25);
        return Ok(Evaluated {
            value: C64::new(q * (1.0 + 4.0 * alpha * v), 0.0),
            err: 4.0 * alpha.powf(0.75) * e,
        });
    }
    let (v, e) = sinh_integral(z, alpha, Domain::PositiveAxis, cfg)?;
    let pref = 4.0 / z * alpha.powf(0.25) * (-z * z / 8.0).exp();
    Ok(Evaluated {
        value: erf_head(z, alpha)? + pref * v,
        err: pref.norm() * e,
    })
}

/// K(z, a), the negative-axis analogue of [`i_reference`].
pub fn k_reference(z: C64, alpha: f64, cfg: &QuadConfig) -> Result<Evaluated> {
    check(z, alpha)?;
    if z == C64::new(0.0, 0.0) {
        let (v, e) = x_integral(alpha, Domain::NegativeAxis, cfg)?;
        let q = alpha.powf(-0.25);
        return Ok(Evaluated {
            value: C64::new(q * (1.0 - 4.0 * alpha * v), 0.0),
            err: 4.0 * alpha.powf(0.75) * e,
        });
    }
    let (v, e) = sinh_integral(z, alpha, Domain::NegativeAxis, cfg)?;
    let pref = 4.0 / z * alpha.powf(0.25) * (-z * z / 8.0).exp();
    Ok(Evaluated {
        value: erf_head(z, alpha)? - pref * v,
        err: pref.norm() * e,
    })
}

/// int_R e^{-a x^2} sinh(sqrt(a) x z)/(e^{2 pi x}-1) dx, summed from the two half-lines.
pub fn theta_reference(z: C64, alpha: f64, cfg: &QuadConfig) -> Result<Evaluated> {
    check(z, alpha)?;
    if z == C64::new(0.0, 0.0) {
        return Ok(Evaluated { value: z, err: 0.0 });
    }
    let (p, ep) = sinh_integral(z, alpha, Domain::PositiveAxis, cfg)?;
    let (n, en) = sinh_integral(z, alpha, Domain::NegativeAxis, cfg)?;
    Ok(Evaluated {
        value: p + n,
        err: ep + en,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_terms_at_zero() {
        let z = C64::new(0.0, 0.0);
        let s = i_series(z, 0.3, 3).unwrap();
        let c: Vec<f64> = s.terms.iter().map(|t| t.coefficient.re).collect();
        assert!((c[0] - 1.0).abs() < 1e-14);
        assert!((c[1] - 1.0 / 6.0).abs() < 1e-14);
        assert!((c[2] + 1.0 / 60.0).abs() < 1e-14);
    }

    #[test]
    fn theta_vanishes_at_zero() {
        let s = theta_series(C64::new(0.0, 0.0), 0.05, 4).unwrap();
        assert!(s.value().norm() == 0.0);
        assert_eq!(s.first_omitted_magnitude, 0.0);
    }
}
