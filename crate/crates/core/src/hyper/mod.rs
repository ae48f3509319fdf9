//! Confluent and Gauss hypergeometric functions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::specfun::KahanSum;
use crate::C64;

const MAX_TERMS: usize = 10_000;

fn nonpositive_integer(a: C64) -> Option<u64> {
    if a.im == 0.0 && a.re <= 0.0 && a.re == a.re.floor() {
        Some((-a.re) as u64)
    } else {
        None
    }
}

/// Kummer's confluent hypergeometric function 1F1(a; c; w).
///
/// For `Re w < 0` the series is summed after Kummer's transformation
/// 1F1(a; c; w) = e^w 1F1(c - a; c; -w).
pub fn kummer_1f1(a: C64, c: C64, w: C64) -> Result<C64> {
    if nonpositive_integer(c).is_some() {
        return Err(Error::Parameter(format!(
            "1F1 lower parameter must not be a non-positive integer, got {c}"
        )));
    }
    if w == C64::new(0.0, 0.0) {
        return Ok(C64::new(1.0, 0.0));
    }
    if w.re < 0.0 && nonpositive_integer(a).is_none() {
        return Ok(w.exp() * series_1f1(c - a, c, -w)?);
    }
    series_1f1(a, c, w)
}

fn series_1f1(a: C64, c: C64, w: C64) -> Result<C64> {
    let mut t = C64::new(1.0, 0.0);
    let mut acc = KahanSum::new();
    acc.add(t);
    for m in 0..MAX_TERMS {
        let am = a + m as f64;
        if am == C64::new(0.0, 0.0) {
            return Ok(acc.value());
        }
        let ratio = am * w / ((c + m as f64) * (m + 1) as f64);
        t *= ratio;
        acc.add(t);
        if ratio.norm() < 0.5 && t.norm() <= 1e-16 * acc.value().norm() {
            return Ok(acc.value());
        }
    }
    Err(Error::NonConvergence {
        what: "1F1 series",
        iterations: MAX_TERMS,
    })
}

/// Rising factorial (x)_m over the rationals.
pub fn pochhammer(x: &BigRational, m: u32) -> BigRational {
    let mut p = BigRational::one();
    let mut y = x.clone();
    for _ in 0..m {
        p *= &y;
        y += BigRational::one();
    }
    p
}

fn three_halves() -> BigRational {
    BigRational::new(BigInt::from(3), BigInt::from(2))
}

/// A terminating 1F1(-n; c; w) stored by its coefficients in ascending powers.
#[derive(Debug, Clone, PartialEq)]
pub struct HypergeometricPolynomial {
    degree: usize,
    coefficients: Vec<C64>,
}

impl HypergeometricPolynomial {
    /// Coefficients (-n)_m / ((c)_m m!) accumulated exactly, then rounded.
    pub fn new(n: u32, c: &BigRational) -> Result<Self> {
        if c <= &BigRational::zero() && c.is_integer() {
            return Err(Error::Parameter(
                "lower parameter is a non-positive integer".into(),
            ));
        }
        let mut coefficients = Vec::with_capacity(n as usize + 1);
        let mut t = BigRational::one();
        let a = BigRational::from_integer(-BigInt::from(n));
        coefficients.push(C64::new(1.0, 0.0));
        for m in 0..n {
            let mm = BigRational::from_integer(BigInt::from(m));
            t = t * (&a + &mm) / ((c + &mm) * (&mm + BigRational::one()));
            coefficients.push(C64::new(crate::specfun::ratio_to_f64(&t), 0.0));
        }
        Ok(Self {
            degree: n as usize,
            coefficients,
        })
    }

    /// 1F1(-n; 3/2; w).
    pub fn three_halves(n: u32) -> Self {
        Self::new(n, &three_halves()).expect("3/2 is a valid lower parameter")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficients(&self) -> &[C64] {
        &self.coefficients
    }

    pub fn eval(&self, w: C64) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for c in self.coefficients.iter().rev() {
            acc = acc * w + c;
        }
        acc
    }

    /// Horner evaluation at a real argument.
    pub fn eval_real(&self, w: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coefficients.iter().rev() {
            acc = acc * w + c.re;
        }
        acc
    }

    /// Sum of |coefficient| w^m, an upper bound for |p(w)| when w >= 0.
    pub fn abs_eval(&self, w: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coefficients.iter().rev() {
            acc = acc * w + c.norm();
        }
        acc
    }
}

/// scale * 1F1(-n; b; w) for real w by the contiguous recurrence in n.
///
/// Stable where the power series cancels badly (large w and n); a damping
/// factor such as e^{-w/2} can be folded in through `scale`.
pub fn terminating_1f1_recurrence(n: u32, b: f64, w: f64, scale: f64) -> f64 {
    let mut prev = scale;
    if n == 0 {
        return prev;
    }
    let mut cur = scale * (1.0 - w / b);
    for m in 1..n {
        let m = m as f64;
        let next = ((2.0 * m + b - w) * cur - m * prev) / (b + m);
        prev = cur;
        cur = next;
    }
    cur
}

/// 1F1(-k2; 3/2; w) as an exact finite sum.
pub fn terminating_1f1(k2: u32, w: C64) -> C64 {
    HypergeometricPolynomial::three_halves(k2).eval(w)
}

/// Terminating 2F1(a, -n; c; z) over the rationals.
pub fn terminating_2f1_exact(
    a: &BigRational,
    n: u32,
    c: &BigRational,
    z: &BigRational,
) -> Result<BigRational> {
    let b = BigRational::from_integer(-BigInt::from(n));
    let mut t = BigRational::one();
    let mut acc = BigRational::one();
    for m in 0..n {
        let mm = BigRational::from_integer(BigInt::from(m));
        let den = (c + &mm) * (&mm + BigRational::one());
        if den.is_zero() {
            return Err(Error::Parameter(
                "2F1 lower parameter hits a non-positive integer".into(),
            ));
        }
        t = t * (a + &mm) * (&b + &mm) * z / den;
        acc += &t;
    }
    Ok(acc)
}

/// 2F1(-n, 1; 3/2; 2) as an exact rational.
pub fn gauss_2f1_spec_exact(n: u32) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    terminating_2f1_exact(&BigRational::one(), n, &three_halves(), &two)
        .expect("3/2 never vanishes")
}

/// 2F1(-n, 1; 3/2; 2).
pub fn gauss_2f1_spec(n: u32) -> f64 {
    crate::specfun::ratio_to_f64(&gauss_2f1_spec_exact(n))
}

/// Gauss 2F1(a, b; c; z) by its power series, for |z| < 1.
pub fn gauss_2f1_series(a: C64, b: C64, c: C64, z: C64) -> Result<C64> {
    if nonpositive_integer(c).is_some() {
        return Err(Error::Parameter(
            "2F1 lower parameter is a non-positive integer".into(),
        ));
    }
    let terminates = nonpositive_integer(a).is_some() || nonpositive_integer(b).is_some();
    if !terminates && z.norm() >= 1.0 {
        return Err(Error::Domain("2F1 series needs |z| < 1".into()));
    }
    let mut t = C64::new(1.0, 0.0);
    let mut acc = KahanSum::new();
    acc.add(t);
    for m in 0..MAX_TERMS {
        let mf = m as f64;
        let num = (a + mf) * (b + mf);
        if num == C64::new(0.0, 0.0) {
            return Ok(acc.value());
        }
        t *= num * z / ((c + mf) * (mf + 1.0));
        acc.add(t);
        if m > 4 && t.norm() <= 1e-17 * acc.value().norm() {
            return Ok(acc.value());
        }
    }
    Err(Error::NonConvergence {
        what: "2F1 series",
        iterations: MAX_TERMS,
    })
}
