//! Scalar special functions over the complex plane.

mod bernoulli;
mod divisor;
mod erf;
mod gamma;
mod xi;
mod zeta;

pub(crate) use bernoulli::ratio_to_f64;
pub use bernoulli::{bernoulli, zeta_even, BernoulliCache, BERNOULLI_BOUND};
pub use divisor::{divisor_sigma, divisor_sigma_table};
pub use erf::{erf, erfc, erfi, ERF_DOMAIN};
pub use gamma::{gamma, log_gamma};
pub use xi::{riemann_xi, riemann_xi_capital, riemann_xi_capital_raw, riemann_xi_real};
pub use zeta::{hurwitz_zeta, zeta};

use crate::C64;

/// Euler's constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Compensated (Kahan–Babuska) summation for complex terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: C64,
    comp: C64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: C64) {
        self.sum.re = neumaier(self.sum.re, x.re, &mut self.comp.re);
        self.sum.im = neumaier(self.sum.im, x.im, &mut self.comp.im);
    }

    pub fn value(&self) -> C64 {
        self.sum + self.comp
    }
}

fn neumaier(sum: f64, x: f64, comp: &mut f64) -> f64 {
    let t = sum + x;
    if sum.abs() >= x.abs() {
        *comp += (sum - t) + x;
    } else {
        *comp += (x - t) + sum;
    }
    t
}

/// sin(pi*s) with the real part reduced modulo 2 before scaling.
pub(crate) fn sin_pi(s: C64) -> C64 {
    let r = s.re - 2.0 * (s.re / 2.0).round();
    (C64::new(r, s.im) * std::f64::consts::PI).sin()
}

pub(crate) fn is_nonpositive_integer(s: C64) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re == s.re.floor()
}
