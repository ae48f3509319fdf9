use std::f64::consts::PI;

use super::sides::check_alpha;
use crate::error::Result;
use crate::hyper::{gauss_2f1_spec, terminating_1f1_recurrence};
use crate::quad::{integrate_gaussian_with, x_bose, Domain, Envelope, QuadConfig, QuadResult};
use crate::C64;

/// Integration range for the section-five integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Range {
    Positive,
    Negative,
    Full,
}

impl Range {
    fn domain(self) -> Domain {
        match self {
            Range::Positive => Domain::PositiveAxis,
            Range::Negative => Domain::NegativeAxis,
            Range::Full => Domain::FullLine,
        }
    }
}

/// int x e^{-a x^2}/(e^{2 pi x} - 1) 1F1(-n; 3/2; 2 a x^2) dx over the range.
pub fn hyper_bose_integral(
    alpha: f64,
    n: u32,
    range: Range,
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    check_alpha(alpha)?;
    if range == Range::Full {
        let pos = hyper_bose_integral(alpha, n, Range::Positive, cfg)?;
        let neg = hyper_bose_integral(alpha, n, Range::Negative, cfg)?;
        return Ok(QuadResult {
            value: pos.value + neg.value,
            err_estimate: pos.err_estimate + neg.err_estimate,
            panels: pos.panels + neg.panels,
            truncation_point: pos.truncation_point.max(neg.truncation_point),
        });
    }
    let linear = if range == Range::Positive {
        -2.0 * PI
    } else {
        0.0
    };
    let env = Envelope::gaussian(alpha)
        .linear(linear)
        .power(2.0 * n as f64 + 1.0)
        .at_least(tail_point(alpha, n, cfg.truncation_safety));
    integrate_gaussian_with(
        |x: f64| {
            let w = 2.0 * alpha * x * x;
            C64::new(
                x_bose(x) * terminating_1f1_recurrence(n, 1.5, w, (-0.5 * w).exp()),
                0.0,
            )
        },
        &env,
        range.domain(),
        cfg,
    )
}

/// Point past the turning region where (1+x) e^{-w/2} sum C(n,m) w^m/(3/2)_m,
/// a bound for the integrand, has fallen below e^{-safety}.
fn tail_point(alpha: f64, n: u32, safety: f64) -> f64 {
    let log_bound = |w: f64| {
        let mut log_terms = Vec::with_capacity(n as usize + 1);
        let mut t = 0.0;
        log_terms.push(t);
        for m in 0..n {
            let m = m as f64;
            t += ((n as f64 - m) * w / ((1.5 + m) * (m + 1.0))).ln();
            log_terms.push(t);
        }
        let top = log_terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let sum: f64 = log_terms.iter().map(|l| (l - top).exp()).sum();
        let x = (w / (2.0 * alpha)).sqrt();
        (1.0 + x).ln() - 0.5 * w + top + sum.ln()
    };
    let mut w = 4.0 * n as f64 + 2.0;
    while log_bound(w) > -safety {
        w += 1.0 + 0.05 * w;
    }
    (w / (2.0 * alpha)).sqrt()
}

/// A real value with a propagated quadrature error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealEvaluated {
    pub value: f64,
    pub err: f64,
}

fn combine(
    alpha: f64,
    n: u32,
    head_sign: f64,
    int_sign: f64,
    range: Range,
    cfg: &QuadConfig,
) -> Result<RealEvaluated> {
    let q = hyper_bose_integral(alpha, n, range, cfg)?;
    if range == Range::Full {
        let pref = alpha.powf(0.75);
        return Ok(RealEvaluated {
            value: pref * q.value.re,
            err: pref * q.err_estimate,
        });
    }
    let f = gauss_2f1_spec(n);
    let pref = 4.0 * alpha.powf(0.75);
    Ok(RealEvaluated {
        value: head_sign * alpha.powf(-0.25) * f + int_sign * pref * q.value.re,
        err: pref * q.err_estimate,
    })
}

/// H_k on the positive axis, its negative-axis counterpart, or the full-line
/// variant a^{3/4} int_R (which carries no 2F1 term).
pub fn h_k(alpha: f64, k: u32, range: Range, cfg: &QuadConfig) -> Result<RealEvaluated> {
    let int_sign = if range == Range::Negative { -1.0 } else { 1.0 };
    combine(alpha, 2 * k, 1.0, int_sign, range, cfg)
}

/// J_k, the odd-parameter analogue of [`h_k`].  On the negative axis this is
/// -a^{-1/4} 2F1 + 4 a^{3/4} int_{-inf}^0.
pub fn j_k(alpha: f64, k: u32, range: Range, cfg: &QuadConfig) -> Result<RealEvaluated> {
    let head_sign = if range == Range::Negative { -1.0 } else { 1.0 };
    combine(alpha, 2 * k + 1, head_sign, 1.0, range, cfg)
}

/// Closed forms of the three exact evaluations at a = pi, for 1F1(-2k-1; ...):
/// positive axis -F/(4 pi), negative axis F/(4 pi), full line 0.
pub fn exact_closed_form(k: u32, range: Range) -> f64 {
    let f = gauss_2f1_spec(2 * k + 1);
    match range {
        Range::Positive => -f / (4.0 * PI),
        Range::Negative => f / (4.0 * PI),
        Range::Full => 0.0,
    }
}
