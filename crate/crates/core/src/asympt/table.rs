use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::hyper::gauss_2f1_spec;
use crate::identities::{hyper_bose_integral, Range};
use crate::par::{par_map, seq_map};
use crate::quad::QuadConfig;

/// The alpha columns of the printed table.
pub const TABLE1_ALPHAS: [f64; 5] = [9e-7, 7e-6, 1.5, 2.378, 9361.79];

/// The printed table, one `k alpha lhs rhs` line per cell.
pub const TABLE1_GOLDEN: &str = include_str!("../../data/table1.txt");

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::Parameter("alpha must be positive".into()));
    }
    Ok(())
}

/// F (1/a + 1/b + 2/(3F))^{1/4} with b = pi^2/a and F = 2F1(-2k, 1; 3/2; 2).
pub fn near_approximant(k: u32, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let f = gauss_2f1_spec(2 * k);
    let base = 1.0 / alpha + alpha / (PI * PI) + 2.0 / (3.0 * f);
    if !(base > 0.0) {
        return Err(Error::Domain(format!(
            "approximant undefined at k = {k}, alpha = {alpha}"
        )));
    }
    Ok(f * base.powf(0.25))
}

/// Half of [`near_approximant`], the approximant of the full-line integral.
pub fn near_approximant_full(k: u32, alpha: f64) -> Result<f64> {
    Ok(0.5 * near_approximant(k, alpha)?)
}

/// One cell of the table, both sides divided by alpha^{3/4}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Table1Cell {
    pub k: u32,
    pub alpha: f64,
    pub lhs: f64,
    pub lhs_err: f64,
    pub rhs: f64,
}

fn cell(k: u32, alpha: f64, cfg: &QuadConfig) -> Result<Table1Cell> {
    let q = hyper_bose_integral(alpha, 2 * k, Range::Full, cfg)?;
    Ok(Table1Cell {
        k,
        alpha,
        lhs: q.value.re,
        lhs_err: q.err_estimate,
        rhs: near_approximant_full(k, alpha)? / alpha.powf(0.75),
    })
}

fn grid(ks: &[u32], alphas: &[f64]) -> Result<Vec<(u32, f64)>> {
    for a in alphas {
        check_alpha(*a)?;
    }
    Ok(ks
        .iter()
        .flat_map(|k| alphas.iter().map(move |a| (*k, *a)))
        .collect())
}

/// All (k, alpha) cells in row-major order, computed in parallel.
pub fn table1(ks: &[u32], alphas: &[f64], cfg: &QuadConfig) -> Result<Vec<Table1Cell>> {
    let jobs = grid(ks, alphas)?;
    par_map(&jobs, |(k, a)| cell(*k, *a, cfg))
        .into_iter()
        .collect()
}

/// As [`table1`] on the calling thread only.
pub fn table1_sequential(ks: &[u32], alphas: &[f64], cfg: &QuadConfig) -> Result<Vec<Table1Cell>> {
    let jobs = grid(ks, alphas)?;
    seq_map(&jobs, |(k, a)| cell(*k, *a, cfg))
        .into_iter()
        .collect()
}

/// A printed cell; the strings keep the digits exactly as printed.
#[derive(Debug, Clone, PartialEq)]
pub struct GoldenCell {
    pub k: u32,
    pub alpha: f64,
    pub lhs: String,
    pub rhs: String,
}

pub fn table1_golden() -> Vec<GoldenCell> {
    TABLE1_GOLDEN
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            GoldenCell {
                k: f[0].parse().expect("golden k"),
                alpha: f[1].parse().expect("golden alpha"),
                lhs: f[2].to_string(),
                rhs: f[3].to_string(),
            }
        })
        .collect()
}

/// Five units in the sixth significant digit of `printed`.
pub fn sixth_digit_tolerance(printed: f64) -> f64 {
    5.0 * 10f64.powi(printed.abs().log10().floor() as i32 - 5)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GoldenComparison {
    pub cell: Table1Cell,
    pub paper_lhs: String,
    pub paper_rhs: String,
    pub lhs_ok: bool,
    pub rhs_ok: bool,
}

impl GoldenComparison {
    pub fn passed(&self) -> bool {
        self.lhs_ok && self.rhs_ok
    }
}

fn within(value: f64, printed: &str) -> bool {
    let p: f64 = printed.parse().unwrap_or(f64::NAN);
    (value - p).abs() <= sixth_digit_tolerance(p)
}

/// Match computed cells against the golden cells with the same (k, alpha).
/// Cells without a golden counterpart are skipped.
pub fn compare_with_golden(cells: &[Table1Cell]) -> Vec<GoldenComparison> {
    let golden = table1_golden();
    cells
        .iter()
        .filter_map(|c| {
            let g = golden
                .iter()
                .find(|g| g.k == c.k && (g.alpha - c.alpha).abs() <= 1e-12 * c.alpha)?;
            Some(GoldenComparison {
                cell: *c,
                paper_lhs: g.lhs.clone(),
                paper_rhs: g.rhs.clone(),
                lhs_ok: within(c.lhs, &g.lhs),
                rhs_ok: within(c.rhs, &g.rhs),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_has_fifty_cells() {
        let g = table1_golden();
        assert_eq!(g.len(), 50);
        assert_eq!(g[2].lhs, ".212975");
    }

    #[test]
    fn tolerance_scale() {
        assert!((sixth_digit_tolerance(259259.0) - 5.0).abs() < 1e-12);
        assert!((sixth_digit_tolerance(0.212975) - 5e-6).abs() < 1e-18);
    }

    #[test]
    fn k0_reduces_to_classical() {
        let a: f64 = 0.7;
        let b = PI * PI / a;
        let v = near_approximant(0, a).unwrap();
        assert!((v - (1.0 / a + 1.0 / b + 2.0 / 3.0).powf(0.25)).abs() < 1e-15);
    }
}
