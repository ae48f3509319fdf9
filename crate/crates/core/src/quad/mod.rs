//! Adaptive Gauss-Kronrod quadrature for Gaussian-damped integrands on
//! half-lines and the real line, and for Gamma-damped integrands on the
//! critical axis.

mod bose;
mod gk;

use std::cmp::Ordering;
use std::collections::BinaryHeap;

pub use bose::{
    bose, bose_windowed, sin_bose, sin_bose_windowed, sinh_bose, sinh_bose_windowed, x_bose,
    x_bose_windowed, PATCH_WINDOW,
};

use crate::error::{Error, Result};
use crate::C64;

/// Tolerances and limits for one integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Envelope drop, in e-folds, required at the truncation point.
    pub truncation_safety: f64,
    /// Maximum bisection depth below an initial panel.
    pub max_refinements: u32,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            abs_tol: 1e-15,
            truncation_safety: 40.0,
            max_refinements: 12,
        }
    }
}

impl QuadConfig {
    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_abs_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.rel_tol > 0.0
            && self.abs_tol > 0.0
            && self.truncation_safety > 0.0
            && self.max_refinements >= 1
            && self.rel_tol.is_finite()
            && self.abs_tol.is_finite();
        if ok {
            Ok(())
        } else {
            Err(Error::Parameter(format!(
                "invalid quadrature configuration {self:?}"
            )))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: C64,
    pub err_estimate: f64,
    pub panels: usize,
    pub truncation_point: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    PositiveAxis,
    NegativeAxis,
    FullLine,
}

/// Upper bound shape |f(x)| <= C (1 + |x|)^power e^{linear |x| - decay x^2}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Envelope {
    pub decay: f64,
    pub linear: f64,
    pub power: f64,
    pub min_extent: f64,
}

impl Envelope {
    pub fn gaussian(decay: f64) -> Self {
        Self {
            decay,
            linear: 0.0,
            power: 0.0,
            min_extent: 0.0,
        }
    }

    /// Never truncate before `x`.
    pub fn at_least(mut self, x: f64) -> Self {
        self.min_extent = x;
        self
    }

    pub fn linear(mut self, linear: f64) -> Self {
        self.linear = linear;
        self
    }

    pub fn power(mut self, power: f64) -> Self {
        self.power = power;
        self
    }

    pub fn log_at(&self, x: f64) -> f64 {
        self.power * (1.0 + x).ln() + self.linear * x - self.decay * x * x
    }

    fn argmax(&self) -> f64 {
        // root of p/(1+x) + c - 2 d x = 0
        let (d, c, p) = (self.decay, self.linear, self.power);
        if d == 0.0 {
            return 0.0;
        }
        let b = c - 2.0 * d;
        let x = (b + (b * b + 8.0 * d * (c + p)).max(0.0).sqrt()) / (4.0 * d);
        x.max(0.0)
    }

    /// Smallest x beyond the maximum where the envelope has dropped by `safety` e-folds.
    pub fn truncation(&self, safety: f64) -> f64 {
        let x0 = self.argmax();
        let top = self.log_at(x0);
        let drop = |x: f64| top - self.log_at(x) - safety;
        let mut hi = x0 + 1.0;
        while drop(hi) < 0.0 {
            hi = x0 + 2.0 * (hi - x0);
        }
        let mut lo = x0;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if drop(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo < 1e-12 * hi {
                break;
            }
        }
        hi.max(self.min_extent)
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    depth: u32,
    value: C64,
    err: f64,
    abs: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

fn make_panel<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64, depth: u32) -> Result<Panel> {
    let e = gk::gk21(f, a, b).map_err(Error::Singularity)?;
    Ok(Panel {
        a,
        b,
        depth,
        value: e.kronrod,
        err: (e.kronrod - e.gauss).norm(),
        abs: e.abs,
    })
}

/// Relative size of the rounding floor, measured against the integral of |f|.
pub const ROUNDOFF: f64 = 50.0 * f64::EPSILON;

fn roundoff_limited(p: &Panel) -> bool {
    p.err <= ROUNDOFF * p.abs || (p.b - p.a) <= 1e-13 * p.a.abs().max(p.b.abs())
}

/// Breakpoints 0, s, 2s, 4s, ..., t with s about min(t, 1) 2^-12.
pub(crate) fn geometric_grid(t: f64) -> Vec<f64> {
    let mut pts = vec![t];
    let floor = t.min(1.0) * 2f64.powi(-12);
    let mut x = t;
    while x > floor {
        x *= 0.5;
        pts.push(x);
    }
    pts.push(0.0);
    pts.reverse();
    pts
}

/// Globally adaptive integration of f over the given panels.
pub fn integrate_panels<F>(f: F, breakpoints: &[f64], cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(f64) -> C64,
{
    cfg.validate()?;
    let mut heap = BinaryHeap::new();
    for w in breakpoints.windows(2) {
        if w[1] > w[0] {
            heap.push(make_panel(&f, w[0], w[1], 0)?);
        }
    }
    let mut done: Vec<Panel> = Vec::new();
    let mut exhausted = false;
    let totals = |heap: &BinaryHeap<Panel>, done: &[Panel]| {
        let mut t = (C64::new(0.0, 0.0), 0.0, 0.0);
        for p in heap.iter().chain(done.iter()) {
            t.0 += p.value;
            t.1 += p.err;
            t.2 += p.abs;
        }
        t
    };
    let (mut value, mut err, mut abs) = totals(&heap, &done);
    let mut steps = 0usize;
    loop {
        steps += 1;
        if steps % 64 == 0 {
            (value, err, abs) = totals(&heap, &done);
        }
        let mut target = cfg
            .abs_tol
            .max(cfg.rel_tol * value.norm())
            .max(ROUNDOFF * abs);
        if err <= target || heap.is_empty() {
            (value, err, abs) = totals(&heap, &done);
            target = cfg
                .abs_tol
                .max(cfg.rel_tol * value.norm())
                .max(ROUNDOFF * abs);
        }
        if err <= target || heap.is_empty() {
            let panels = heap.len() + done.len();
            if err <= target || !exhausted {
                return Ok(QuadResult {
                    value,
                    err_estimate: err,
                    panels,
                    truncation_point: breakpoints.last().copied().unwrap_or(0.0),
                });
            }
            return Err(Error::NonConvergence {
                what: "adaptive quadrature",
                iterations: panels,
            });
        }
        let worst = heap.pop().expect("heap is non-empty");
        if roundoff_limited(&worst) {
            done.push(worst);
            continue;
        }
        if worst.depth >= cfg.max_refinements {
            exhausted = true;
            done.push(worst);
            continue;
        }
        let mid = 0.5 * (worst.a + worst.b);
        let left = make_panel(&f, worst.a, mid, worst.depth + 1)?;
        let right = make_panel(&f, mid, worst.b, worst.depth + 1)?;
        value += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        abs += left.abs + right.abs - worst.abs;
        heap.push(left);
        heap.push(right);
    }
}

/// Integrate f over [a, b] adaptively.
pub fn integrate_interval<F>(f: F, a: f64, b: f64, cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(f64) -> C64,
{
    let n = 8;
    let pts: Vec<f64> = (0..=n).map(|j| a + (b - a) * j as f64 / n as f64).collect();
    integrate_panels(f, &pts, cfg)
}

/// Integrate a Gaussian-damped integrand, |f(x)| <= C e^{-decay_rate x^2}.
pub fn integrate_gaussian<F>(
    f: F,
    decay_rate: f64,
    domain: Domain,
    cfg: &QuadConfig,
) -> Result<QuadResult>
where
    F: Fn(f64) -> C64,
{
    integrate_gaussian_with(f, &Envelope::gaussian(decay_rate), domain, cfg)
}

/// Integrate an integrand bounded by the given envelope on the chosen domain.
/// On the negative axis and the full line the envelope is applied to |x|.
pub fn integrate_gaussian_with<F>(
    f: F,
    env: &Envelope,
    domain: Domain,
    cfg: &QuadConfig,
) -> Result<QuadResult>
where
    F: Fn(f64) -> C64,
{
    if !(env.decay > 0.0)
        || !env.linear.is_finite()
        || !(env.power >= 0.0)
        || !(env.min_extent >= 0.0)
    {
        return Err(Error::Parameter(format!("invalid envelope {env:?}")));
    }
    cfg.validate()?;
    let t = env.truncation(cfg.truncation_safety);
    let grid = geometric_grid(t);
    let mut result = match domain {
        Domain::PositiveAxis => integrate_panels(&f, &grid, cfg)?,
        Domain::NegativeAxis => integrate_panels(|u: f64| f(-u), &grid, cfg)?,
        Domain::FullLine => {
            let mut pts: Vec<f64> = grid.iter().rev().map(|x| -x).collect();
            pts.extend_from_slice(&grid[1..]);
            integrate_panels(&f, &pts, cfg)?
        }
    };
    result.truncation_point = t;
    Ok(result)
}

/// Minimum truncation height on the critical axis.
pub const XI_AXIS_MIN_T: f64 = 60.0;

/// Integrate g over [0, inf) where |g(t)| <= C (1+t)^power e^{-rate t}.
pub fn integrate_xi_axis_with<F>(
    g: F,
    rate: f64,
    power: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult>
where
    F: Fn(f64) -> C64,
{
    if !(rate > 0.0) || !(power >= 0.0) {
        return Err(Error::Parameter("invalid critical-axis envelope".into()));
    }
    cfg.validate()?;
    let top_at = (power / rate - 1.0).max(0.0);
    let log_env = |t: f64| power * (1.0 + t).ln() - rate * t;
    let top = log_env(top_at);
    let mut t = top_at + 1.0;
    while top - log_env(t) < cfg.truncation_safety {
        t += 1.0;
    }
    let t = t.max(XI_AXIS_MIN_T);
    let mut pts = vec![0.0, 0.5, 1.0];
    let mut x = 2.0;
    while x < t {
        pts.push(x);
        x += 2.0;
    }
    pts.push(t);
    let mut result = integrate_panels(g, &pts, cfg)?;
    result.truncation_point = t;
    Ok(result)
}

/// Integrate a Gamma-damped integrand on the critical axis, assuming
/// |g(t)| <= C (1+t)^2 e^{-pi t/4}.
pub fn integrate_xi_axis<F>(g: F, cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(f64) -> C64,
{
    integrate_xi_axis_with(g, std::f64::consts::FRAC_PI_4, 2.0, cfg)
}

/// Run an integration over a fallible integrand.  An integrand error is
/// reported in place of the quadrature outcome.
pub fn with_fallible<G, R>(g: G, run: impl FnOnce(&dyn Fn(f64) -> C64) -> Result<R>) -> Result<R>
where
    G: Fn(f64) -> Result<C64>,
{
    let first = std::cell::RefCell::new(None);
    let h = |x: f64| match g(x) {
        Ok(v) => v,
        Err(e) => {
            first.borrow_mut().get_or_insert(e);
            C64::new(f64::NAN, 0.0)
        }
    };
    let r = run(&h);
    if let Some(e) = first.into_inner() {
        return Err(e);
    }
    r
}
