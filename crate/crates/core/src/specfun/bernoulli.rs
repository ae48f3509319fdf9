use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use crate::error::{Error, Result};

/// Largest index held by the shared cache.
pub const BERNOULLI_BOUND: usize = 200;

/// Exact Bernoulli numbers B_0..=B_N (convention B_1 = -1/2).
#[derive(Debug, Clone)]
pub struct BernoulliCache {
    values: Vec<BigRational>,
}

impl BernoulliCache {
    pub fn new(n: usize) -> Self {
        let mut values: Vec<BigRational> = Vec::with_capacity(n + 1);
        // binomial row C(m+1, k), updated in place
        let mut row: Vec<BigInt> = vec![BigInt::one()];
        for m in 0..=n {
            let mut next = vec![BigInt::one(); row.len() + 1];
            for k in 1..row.len() {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            if m == 0 {
                values.push(BigRational::one());
                continue;
            }
            if m > 1 && m % 2 == 1 {
                values.push(BigRational::zero());
                continue;
            }
            let mut acc = BigRational::zero();
            for (k, b) in values.iter().enumerate() {
                if !b.is_zero() {
                    acc += b * BigRational::from_integer(row[k].clone());
                }
            }
            values.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
        }
        Self { values }
    }

    pub fn bound(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Result<&BigRational> {
        self.values.get(n).ok_or(Error::OutOfRange {
            index: n,
            bound: self.bound(),
        })
    }

    /// B_n / n! as a double.
    pub fn over_factorial(&self, n: usize) -> Result<f64> {
        let b = self.get(n)?;
        let mut f = BigInt::one();
        for j in 2..=n {
            f *= j;
        }
        Ok(ratio_to_f64(&(b / BigRational::from_integer(f))))
    }
}

pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    if let Some(v) = r.to_f64() {
        return v;
    }
    // fall back to scaling for very unbalanced numerator/denominator sizes
    let neg = r.is_negative();
    let n = r.numer().abs();
    let d = r.denom().clone();
    let shift = n.bits() as i64 - d.bits() as i64;
    let (n, d, e) = if shift > 0 {
        (n, d << (shift as usize), shift)
    } else {
        (n << ((-shift) as usize), d, shift)
    };
    let v = BigRational::new(n, d).to_f64().unwrap_or(f64::NAN) * 2f64.powi(e as i32);
    if neg {
        -v
    } else {
        v
    }
}

pub(crate) static CACHE: Lazy<BernoulliCache> = Lazy::new(|| BernoulliCache::new(BERNOULLI_BOUND));

/// B_{2k}/(2k)! for k = 0..=40, as doubles.
pub(crate) static B2K_OVER_FACT: Lazy<Vec<f64>> = Lazy::new(|| {
    (0..=40)
        .map(|k| CACHE.over_factorial(2 * k).expect("within bound"))
        .collect()
});

/// Exact B_n from the shared cache.
pub fn bernoulli(n: usize) -> Result<BigRational> {
    CACHE.get(n).cloned()
}

/// zeta(2m) from the Bernoulli relation.
pub fn zeta_even(m: usize) -> Result<f64> {
    if m == 0 {
        return Err(Error::Parameter("zeta_even needs m >= 1".into()));
    }
    let r = CACHE.over_factorial(2 * m)?;
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    let two_pi = 2.0 * std::f64::consts::PI;
    Ok(sign * 0.5 * r * two_pi.powi(2 * m as i32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn small_values() {
        let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
        assert_eq!(bernoulli(1).unwrap(), half);
        assert!(bernoulli(3).unwrap().is_zero());
        assert_eq!(
            bernoulli(12).unwrap(),
            BigRational::new(BigInt::from(-691), BigInt::from(2730))
        );
        assert_eq!(
            bernoulli(20).unwrap(),
            BigRational::new(BigInt::from(-174611), BigInt::from(330))
        );
    }

    #[test]
    fn odd_vanish() {
        for m in 1..(BERNOULLI_BOUND / 2) {
            assert!(bernoulli(2 * m + 1).unwrap().is_zero());
        }
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(
            bernoulli(BERNOULLI_BOUND + 1),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn basel() {
        let pi = std::f64::consts::PI;
        assert_relative_eq!(zeta_even(1).unwrap(), pi * pi / 6.0, max_relative = 1e-15);
        assert_relative_eq!(
            zeta_even(2).unwrap(),
            pi.powi(4) / 90.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(zeta_even(60).unwrap(), 1.0, max_relative = 1e-14);
    }
}
