//! Asymptotic expansions, their quadrature references, the "nearly"
//! approximant and Table 1 generation.

mod oloa;
mod series;
mod table;

pub use oloa::{
    g_function, h_function, h_series, laplace_g, laplace_h, oloa_general, oloa_general_optimal,
    oloa_general_reference, oloa_z0, oloa_z0_reference, omega_prop61, OmegaSeries, OmegaValue,
    OMEGA_DEFAULT_TERMS,
};
pub use series::{
    i_reference, i_series, i_series_optimal, k_reference, k_series, k_series_optimal,
    theta_reference, theta_series, theta_series_optimal,
};
pub use table::{
    compare_with_golden, near_approximant, near_approximant_full, sixth_digit_tolerance, table1,
    table1_golden, table1_sequential, GoldenCell, GoldenComparison, Table1Cell, TABLE1_ALPHAS,
    TABLE1_GOLDEN,
};

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::C64;

/// Default number of generated terms when searching for the optimal truncation.
pub const OPTIMAL_CAP: usize = 250;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesOrigin {
    ISeries,
    KSeries,
    ThetaSeries,
    OloaGeneral,
    OloaZ0,
}

impl SeriesOrigin {
    pub fn name(self) -> &'static str {
        match self {
            SeriesOrigin::ISeries => "i",
            SeriesOrigin::KSeries => "k",
            SeriesOrigin::ThetaSeries => "theta",
            SeriesOrigin::OloaGeneral => "oloa",
            SeriesOrigin::OloaZ0 => "oloa-z0",
        }
    }
}

/// coefficient * alpha^(exponent + z_multiple z/2) * log(alpha)^log_power.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionTerm {
    pub coefficient: C64,
    pub exponent: Rational64,
    pub z_multiple: i32,
    pub log_power: u32,
}

impl ExpansionTerm {
    pub fn new(coefficient: C64, exponent: Rational64) -> Self {
        Self {
            coefficient,
            exponent,
            z_multiple: 0,
            log_power: 0,
        }
    }

    pub fn with_z_multiple(mut self, m: i32) -> Self {
        self.z_multiple = m;
        self
    }

    pub fn with_log_power(mut self, p: u32) -> Self {
        self.log_power = p;
        self
    }

    pub fn exponent_f64(&self) -> f64 {
        *self.exponent.numer() as f64 / *self.exponent.denom() as f64
    }

    /// log |term| at (alpha, z), free of overflow and underflow.
    pub fn log_magnitude(&self, alpha: f64, z: C64) -> f64 {
        let c = self.coefficient.norm();
        if c == 0.0 {
            return f64::NEG_INFINITY;
        }
        let la = alpha.ln();
        let e = C64::new(self.exponent_f64(), 0.0) + z * (0.5 * self.z_multiple as f64);
        let lead = c.ln() + (e * la).re;
        if self.log_power == 0 {
            lead
        } else {
            lead + self.log_power as f64 * la.abs().ln()
        }
    }

    pub fn eval(&self, alpha: f64, z: C64) -> C64 {
        if self.coefficient == C64::new(0.0, 0.0) {
            return self.coefficient;
        }
        let la = alpha.ln();
        let e = C64::new(self.exponent_f64(), 0.0) + z * (0.5 * self.z_multiple as f64);
        self.coefficient * (e * la).exp() * la.powi(self.log_power as i32)
    }
}

/// A truncated asymptotic expansion evaluated at a point.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticExpansion {
    pub terms: Vec<ExpansionTerm>,
    pub origin: SeriesOrigin,
    pub alpha: f64,
    pub z: C64,
    pub truncation_index: usize,
    pub first_omitted_magnitude: f64,
}

impl AsymptoticExpansion {
    pub fn term_values(&self) -> Vec<C64> {
        self.terms
            .iter()
            .map(|t| t.eval(self.alpha, self.z))
            .collect()
    }

    pub fn value(&self) -> C64 {
        self.term_values().into_iter().sum()
    }
}

/// Keep the terms before the smallest one among `gen(0..=cap)`.
///
/// Fails with a degenerate error when the second term is already more than
/// 1e6 times the first, which means the expansion is used far outside its
/// regime.
pub fn truncate_optimal<G>(
    origin: SeriesOrigin,
    alpha: f64,
    z: C64,
    cap: usize,
    gen: G,
) -> Result<AsymptoticExpansion>
where
    G: FnMut(usize) -> Result<ExpansionTerm>,
{
    truncate_optimal_after(origin, alpha, z, 0, cap, gen)
}

/// As [`truncate_optimal`], but the first `fixed` terms are always kept.
pub(crate) fn truncate_optimal_after<G>(
    origin: SeriesOrigin,
    alpha: f64,
    z: C64,
    fixed: usize,
    cap: usize,
    mut gen: G,
) -> Result<AsymptoticExpansion>
where
    G: FnMut(usize) -> Result<ExpansionTerm>,
{
    let mut terms = Vec::with_capacity(fixed + cap + 1);
    let mut logs = Vec::with_capacity(cap + 1);
    for j in 0..fixed + cap + 1 {
        let t = gen(j)?;
        if j >= fixed {
            let l = t.log_magnitude(alpha, z);
            if l.is_nan() || l == f64::INFINITY {
                break;
            }
            logs.push(l);
        }
        terms.push(t);
    }
    if logs.len() >= 2 && logs[1] > logs[0] + 1e6f64.ln() {
        return Err(Error::Degenerate(format!(
            "{} series grows immediately at alpha = {alpha}",
            origin.name()
        )));
    }
    let mut best = 0;
    for (j, l) in logs.iter().enumerate() {
        if *l < logs[best] {
            best = j;
        }
    }
    let first_omitted_magnitude = logs.get(best).map_or(0.0, |l| l.exp());
    terms.truncate(fixed + best);
    Ok(AsymptoticExpansion {
        terms,
        origin,
        alpha,
        z,
        truncation_index: best,
        first_omitted_magnitude,
    })
}

/// Take the first `m` terms of a generator and record the magnitude of term m.
pub(crate) fn truncate_fixed<G>(
    origin: SeriesOrigin,
    alpha: f64,
    z: C64,
    fixed: usize,
    m: usize,
    mut gen: G,
) -> Result<AsymptoticExpansion>
where
    G: FnMut(usize) -> Result<ExpansionTerm>,
{
    let terms = (0..fixed + m).map(&mut gen).collect::<Result<Vec<_>>>()?;
    let first_omitted_magnitude = gen(fixed + m)?.eval(alpha, z).norm();
    Ok(AsymptoticExpansion {
        terms,
        origin,
        alpha,
        z,
        truncation_index: m,
        first_omitted_magnitude,
    })
}

/// zeta(2m) for any m >= 1, beyond the Bernoulli cache by direct summation.
pub(crate) fn zeta_even_any(m: usize) -> Result<f64> {
    if m <= crate::specfun::BERNOULLI_BOUND / 2 {
        return crate::specfun::zeta_even(m);
    }
    let s = 2.0 * m as f64;
    Ok(1.0 + 2f64.powf(-s) + 3f64.powf(-s))
}
