use std::f64::consts::{FRAC_2_SQRT_PI, PI};

use super::KahanSum;
use crate::error::{Error, Result};
use crate::C64;

/// Largest |z| accepted by [`erf`] and [`erfi`].
pub const ERF_DOMAIN: f64 = 12.0;

const MAX_LOSS: f64 = 6.0;

/// Complex error function.
pub fn erf(z: C64) -> Result<C64> {
    check(z)?;
    if z.re < 0.0 {
        return erf_right(-z).map(|v| -v);
    }
    erf_right(z)
}

/// Imaginary error function, defined as -i erf(iz).
pub fn erfi(z: C64) -> Result<C64> {
    let v = erf(C64::new(-z.im, z.re))?;
    Ok(C64::new(v.im, -v.re))
}

/// Complementary error function 1 - erf(z).
pub fn erfc(z: C64) -> Result<C64> {
    check(z)?;
    if z.re > 0.0 && (loss(z) > MAX_LOSS || z.norm() > 2.0) {
        return erfc_cf(z);
    }
    Ok(1.0 - erf(z)?)
}

fn check(z: C64) -> Result<()> {
    if !(z.norm() <= ERF_DOMAIN) {
        return Err(Error::Domain(format!(
            "erf is implemented for |z| <= {ERF_DOMAIN}, got |z| = {}",
            z.norm()
        )));
    }
    Ok(())
}

// e-folds of cancellation the better of the two series would suffer
fn loss(z: C64) -> f64 {
    let w = z * z;
    w.norm() - w.re.abs()
}

fn erf_right(z: C64) -> Result<C64> {
    if loss(z) <= MAX_LOSS {
        let w = z * z;
        if w.re <= 0.0 {
            Ok(maclaurin(z))
        } else {
            Ok(kummer(z))
        }
    } else {
        Ok(1.0 - erfc_cf(z)?)
    }
}

// sum (-1)^n z^{2n+1} / (n! (2n+1))
fn maclaurin(z: C64) -> C64 {
    let mw = -(z * z);
    let mut t = z;
    let mut acc = KahanSum::new();
    acc.add(t);
    let mut n = 0usize;
    loop {
        n += 1;
        t = t * mw / n as f64;
        let term = t / (2 * n + 1) as f64;
        acc.add(term);
        if n as f64 > mw.norm() && term.norm() <= 1e-17 * acc.value().norm() {
            break;
        }
    }
    acc.value() * FRAC_2_SQRT_PI
}

// e^{-z^2} sum 2^n z^{2n+1} / (2n+1)!!
fn kummer(z: C64) -> C64 {
    let w = z * z;
    let mut t = z;
    let mut acc = KahanSum::new();
    acc.add(t);
    let mut n = 0usize;
    loop {
        n += 1;
        t = t * w * 2.0 / (2 * n + 1) as f64;
        acc.add(t);
        if n as f64 > w.norm() && t.norm() <= 1e-17 * acc.value().norm() {
            break;
        }
    }
    acc.value() * (-w).exp() * FRAC_2_SQRT_PI
}

// Laplace continued fraction for erfc, Re z > 0, evaluated by modified Lentz.
fn erfc_cf(z: C64) -> Result<C64> {
    let tiny = 1e-300;
    let mut f = z;
    let mut cc = f;
    let mut d = C64::new(0.0, 0.0);
    for n in 1..20_000usize {
        let a = n as f64 * 0.5;
        d = z + d * a;
        if d.norm() < tiny {
            d = C64::new(tiny, 0.0);
        }
        d = d.inv();
        cc = z + a / cc;
        if cc.norm() < tiny {
            cc = C64::new(tiny, 0.0);
        }
        let delta = cc * d;
        f *= delta;
        if (delta - 1.0).norm() < 1e-16 {
            return Ok((-(z * z)).exp() / (f * PI.sqrt()));
        }
    }
    Err(Error::NonConvergence {
        what: "erfc continued fraction",
        iterations: 20_000,
    })
}
