//! Real primitive Dirichlet characters of small modulus.

use std::f64::consts::PI;

use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::specfun::{hurwitz_zeta, log_gamma, KahanSum};
use crate::C64;

/// A real primitive character modulo q, stored as its table of values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    q: u32,
    parity: u8,
    discriminant: i64,
    values: Vec<i8>,
}

impl CharacterTable {
    pub fn q(&self) -> u32 {
        self.q
    }

    /// 0 for even characters, 1 for odd ones.
    pub fn parity(&self) -> u8 {
        self.parity
    }

    pub fn is_even(&self) -> bool {
        self.parity == 0
    }

    /// The fundamental discriminant d with chi(n) = (d/n).
    pub fn discriminant(&self) -> i64 {
        self.discriminant
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn at(&self, n: i64) -> i8 {
        self.values[n.rem_euclid(self.q as i64) as usize]
    }
}

const BUILT_IN: [(i64, &[i8]); 6] = [
    (-3, &[0, 1, -1]),
    (-4, &[0, 1, 0, -1]),
    (5, &[0, 1, -1, -1, 1]),
    (8, &[0, 1, 0, -1, 0, -1, 0, 1]),
    (-8, &[0, 1, 0, 1, 0, -1, 0, -1]),
    (12, &[0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1]),
];

static TABLES: Lazy<Vec<CharacterTable>> = Lazy::new(|| {
    BUILT_IN
        .iter()
        .map(|&(d, vals)| {
            let q = d.unsigned_abs() as u32;
            for (n, &v) in vals.iter().enumerate() {
                assert_eq!(
                    v,
                    kronecker(d, n as u64),
                    "table for d = {d} disagrees at n = {n}"
                );
            }
            CharacterTable {
                q,
                parity: if vals[q as usize - 1] == 1 { 0 } else { 1 },
                discriminant: d,
                values: vals.to_vec(),
            }
        })
        .collect()
});

/// The built-in real primitive character modulo q.  Modulus 8 carries two
/// such characters; this returns the even one, see [`character_with_parity`].
pub fn character(q: u32) -> Result<CharacterTable> {
    TABLES
        .iter()
        .find(|t| t.q == q && (q != 8 || t.parity == 0))
        .cloned()
        .ok_or(Error::UnsupportedModulus(q))
}

/// The built-in real primitive character modulo q with the given parity.
pub fn character_with_parity(q: u32, odd: bool) -> Result<CharacterTable> {
    let parity = u8::from(odd);
    TABLES
        .iter()
        .find(|t| t.q == q && t.parity == parity)
        .cloned()
        .ok_or(Error::UnsupportedModulus(q))
}

/// Jacobi symbol (a/n) for odd n > 0.
fn jacobi(a: i64, n: u64) -> i8 {
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut result = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Kronecker symbol (d/n) for n >= 0.
pub fn kronecker(d: i64, n: u64) -> i8 {
    if n == 0 {
        return i8::from(d.abs() == 1);
    }
    let mut n = n;
    let mut result = 1i8;
    while n % 2 == 0 {
        n /= 2;
        result *= match d.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => 0,
        };
    }
    if n == 1 {
        return result;
    }
    result * jacobi(d, n)
}

/// Gauss sum G(chi) = sum_{m=1}^{q} chi(m) e^{2 pi i m / q}.
pub fn gauss_sum(chi: &CharacterTable) -> C64 {
    let q = chi.q as f64;
    let mut acc = KahanSum::new();
    for m in 1..=chi.q {
        let v = chi.at(m as i64);
        if v != 0 {
            acc.add(C64::from_polar(v as f64, 2.0 * PI * m as f64 / q));
        }
    }
    acc.value()
}

/// L(s, chi) through Hurwitz zeta values.
pub fn dirichlet_l(s: C64, chi: &CharacterTable) -> Result<C64> {
    let q = chi.q as f64;
    let mut acc = KahanSum::new();
    for r in 1..chi.q {
        let v = chi.at(r as i64);
        if v != 0 {
            acc.add(hurwitz_zeta(s, r as f64 / q)? * v as f64);
        }
    }
    Ok((-s * q.ln()).exp() * acc.value())
}

/// Xi(t, chi) = (pi/q)^{-(s+a)/2} Gamma((s+a)/2) L(s, chi) at s = 1/2 + it,
/// without realness projection.
pub fn xi_chi_raw(t: C64, chi: &CharacterTable) -> Result<C64> {
    let s = C64::new(0.5 - t.im, t.re);
    let h = (s + chi.parity as f64) * 0.5;
    let pref = (log_gamma(h)? - h * (PI / chi.q as f64).ln()).exp();
    Ok(pref * dirichlet_l(s, chi)?)
}

/// Xi(t, chi); for real t the imaginary round-off is dropped.
pub fn xi_chi(t: C64, chi: &CharacterTable) -> Result<C64> {
    let v = xi_chi_raw(t, chi)?;
    if t.im == 0.0 {
        Ok(C64::new(v.re, 0.0))
    } else {
        Ok(v)
    }
}

/// sum_{n>=1} chi(n) e^{-2 pi n x / q} in closed form,
/// sum_{r=1}^{q-1} chi(r) e^{-2 pi r x/q} / (1 - e^{-2 pi x}).
pub fn char_exp_sum(x: f64, chi: &CharacterTable) -> f64 {
    assert!(x > 0.0, "char_exp_sum needs x > 0");
    let q = chi.q as f64;
    if x > 1.0 {
        let mut num = 0.0;
        for r in 1..chi.q {
            num += chi.at(r as i64) as f64 * (-2.0 * PI * r as f64 * x / q).exp();
        }
        return num / (1.0 - (-2.0 * PI * x).exp());
    }
    // the character sums to zero over a period, so subtract 1 from each exponential
    let mut num = 0.0;
    for r in 1..chi.q {
        num += chi.at(r as i64) as f64 * (-2.0 * PI * r as f64 * x / q).exp_m1();
    }
    num / -(-2.0 * PI * x).exp_m1()
}

/// A truncated series together with a bound on what was left out.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertifiedSum {
    pub value: f64,
    pub bound: f64,
}

/// sum_{n>=1} n chi(n) / (x^2 + n^2): a partial sum over whole periods up to
/// about `n_terms`, plus an Euler-Maclaurin tail per residue class with a
/// remainder bound.
pub fn char_reciprocal_series(x: f64, chi: &CharacterTable, n_terms: usize) -> CertifiedSum {
    let q = chi.q as usize;
    let mut n = n_terms.div_ceil(q) * q;
    while (n as f64) < 3.0 * x + 1.0 {
        n += q;
    }
    let x2 = x * x;
    let f = |u: f64| u / (x2 + u * u);
    let mut acc = KahanSum::new();
    for m in (1..=n).rev() {
        let v = chi.at(m as i64);
        if v != 0 {
            acc.add(C64::new(v as f64 * f(m as f64), 0.0));
        }
    }
    let qf = q as f64;
    let zeta3 = 1.202_056_903_159_594_3;
    let mut tail = 0.0;
    let mut bound = 0.0;
    for r in 1..=q {
        let v = chi.at(r as i64) as f64;
        if v == 0.0 {
            continue;
        }
        let a = (n + r) as f64;
        let d = x2 + a * a;
        let big_f = 0.5 * d.ln();
        let f1 = (x2 - a * a) / (d * d);
        let f2 = 2.0 * a * (a * a - 3.0 * x2) / (d * d * d);
        tail += v * (-big_f / qf + 0.5 * f(a) - qf * f1 / 12.0);
        bound += 2.0 * zeta3 / (2.0 * PI).powi(3) * qf * qf * f2.abs();
    }
    CertifiedSum {
        value: acc.value().re + tail,
        bound: bound + 4.0 * f64::EPSILON * (n as f64).ln(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables() {
        assert_eq!(character(3).unwrap().values(), &[0, 1, -1]);
        assert_eq!(character(3).unwrap().parity(), 1);
        assert_eq!(character(4).unwrap().values(), &[0, 1, 0, -1]);
        assert_eq!(character(5).unwrap().values(), &[0, 1, -1, -1, 1]);
        assert!(character(5).unwrap().is_even());
        assert!(character(12).unwrap().is_even());
        assert!(character(8).unwrap().is_even());
        assert!(!character_with_parity(8, true).unwrap().is_even());
        assert!(matches!(character(7), Err(Error::UnsupportedModulus(7))));
    }

    #[test]
    fn kronecker_values() {
        assert_eq!(kronecker(5, 2), -1);
        assert_eq!(kronecker(-3, 2), -1);
        assert_eq!(kronecker(12, 11), 1);
        assert_eq!(kronecker(-4, 3), -1);
        assert_eq!(kronecker(5, 10), 0);
    }

    #[test]
    fn gauss_sums() {
        let g5 = gauss_sum(&character(5).unwrap());
        assert!((g5.re - 5f64.sqrt()).abs() < 1e-14 && g5.im.abs() < 1e-14);
        let g3 = gauss_sum(&character(3).unwrap());
        assert!(g3.re.abs() < 1e-14 && (g3.im - 3f64.sqrt()).abs() < 1e-14);
        let g4 = gauss_sum(&character(4).unwrap());
        assert!(g4.re.abs() < 1e-14 && (g4.im - 2.0).abs() < 1e-14);
    }

    #[test]
    fn l_at_zero() {
        let v = dirichlet_l(C64::new(0.0, 0.0), &character(3).unwrap()).unwrap();
        assert!((v.re - 1.0 / 3.0).abs() < 1e-14 && v.im.abs() < 1e-15);
    }

    #[test]
    fn exp_sum_small_x_is_stable() {
        let chi = character(4).unwrap();
        // x -> 0: sum chi(n) e^{-2 pi n x/4} -> L(0, chi) = 1/2
        let v = char_exp_sum(1e-9, &chi);
        assert!((v - 0.5).abs() < 1e-8);
    }
}
