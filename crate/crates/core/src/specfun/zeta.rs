use std::f64::consts::PI;

use super::bernoulli::B2K_OVER_FACT;
use super::{gamma, sin_pi, KahanSum};
use crate::error::{Error, Result};
use crate::{finite, C64};

const EM_TERMS: usize = 12;

/// Riemann zeta function.
pub fn zeta(s: C64) -> Result<C64> {
    if s == C64::new(1.0, 0.0) {
        return Err(Error::Pole {
            func: "zeta",
            at: "1".into(),
        });
    }
    if s.re < 0.0 {
        if s.im == 0.0 && s.re == s.re.floor() && (s.re as i64) % 2 == 0 {
            return Ok(C64::new(0.0, 0.0));
        }
        let one_minus = 1.0 - s;
        let factor = (s * (2.0 * PI).ln()).exp() / PI * sin_pi(s / 2.0) * gamma(one_minus)?;
        let v = factor * euler_maclaurin(one_minus, 1.0);
        return if finite(v) {
            Ok(v)
        } else {
            Err(Error::Overflow("zeta"))
        };
    }
    Ok(euler_maclaurin(s, 1.0))
}

/// Hurwitz zeta function zeta(s, a) for 0 < a <= 1.
pub fn hurwitz_zeta(s: C64, a: f64) -> Result<C64> {
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::Domain(format!(
            "hurwitz_zeta needs 0 < a <= 1, got {a}"
        )));
    }
    if s == C64::new(1.0, 0.0) {
        return Err(Error::Pole {
            func: "hurwitz_zeta",
            at: "1".into(),
        });
    }
    if a == 1.0 {
        return zeta(s);
    }
    let v = euler_maclaurin(s, a);
    if finite(v) {
        Ok(v)
    } else {
        Err(Error::Overflow("hurwitz_zeta"))
    }
}

fn cutoff(s: C64) -> usize {
    let by_height = (1.3 * s.im.abs()).ceil() as usize;
    let by_size = if s.re < 0.0 {
        s.norm().ceil() as usize
    } else {
        0
    };
    20usize.max(by_height).max(by_size)
}

fn euler_maclaurin(s: C64, a: f64) -> C64 {
    let n = cutoff(s);
    let mut acc = KahanSum::new();
    for j in (0..n).rev() {
        acc.add((-s * (j as f64 + a).ln()).exp());
    }
    let x = n as f64 + a;
    let lx = x.ln();
    let x_pow = (-s * lx).exp();
    acc.add(x_pow * x / (s - 1.0));
    acc.add(x_pow * 0.5);
    // sum_k B_{2k}/(2k)! (s)_{2k-1} x^{-s-2k+1}
    let mut rising = s;
    let mut p = x_pow / x;
    let inv_x2 = 1.0 / (x * x);
    for k in 1..=EM_TERMS {
        acc.add(rising * p * B2K_OVER_FACT[k]);
        let m = (2 * k) as f64;
        rising = rising * (s + m - 1.0) * (s + m);
        p *= inv_x2;
    }
    acc.value()
}
