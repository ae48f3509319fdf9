use std::f64::consts::PI;

use super::bernoulli::B2K_OVER_FACT;
use super::{is_nonpositive_integer, sin_pi};
use crate::error::{Error, Result};
use crate::{finite, C64};

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

fn pole(func: &'static str, s: C64) -> Error {
    Error::Pole {
        func,
        at: format!("{}", s.re),
    }
}

/// Complex gamma function.
pub fn gamma(s: C64) -> Result<C64> {
    if is_nonpositive_integer(s) {
        return Err(pole("gamma", s));
    }
    let v = gamma_unchecked(s);
    if finite(v) {
        Ok(v)
    } else {
        Err(Error::Overflow("gamma"))
    }
}

fn gamma_unchecked(s: C64) -> C64 {
    if s.re < 0.5 {
        return PI / (sin_pi(s) * gamma_unchecked(1.0 - s));
    }
    let s = s - 1.0;
    let mut x = C64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (s + i as f64);
    }
    let t = s + LANCZOS_G + 0.5;
    ((s + 0.5) * t.ln() - t + HALF_LN_2PI).exp() * x
}

/// Principal branch of log Gamma, via the Stirling series after an
/// upward shift of the argument.
pub fn log_gamma(s: C64) -> Result<C64> {
    if is_nonpositive_integer(s) {
        return Err(pole("log_gamma", s));
    }
    if !finite(s) {
        return Err(Error::Domain("log_gamma argument is not finite".into()));
    }
    let target = if s.im.abs() >= 15.0 { 0.0 } else { 15.0 };
    let mut w = s;
    let mut shift = C64::new(0.0, 0.0);
    while w.re < target {
        shift += w.ln();
        w += 1.0;
    }
    Ok(stirling(w) - shift)
}

fn stirling(w: C64) -> C64 {
    let mut acc = (w - 0.5) * w.ln() - w + HALF_LN_2PI;
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut p = inv;
    for k in 1..=10usize {
        // B_{2k} / (2k (2k-1)) = (B_{2k}/(2k)!) * (2k-2)!
        let fact: f64 = (1..=(2 * k - 2)).map(|j| j as f64).product();
        acc += p * (B2K_OVER_FACT[k] * fact);
        p *= inv2;
    }
    acc
}
