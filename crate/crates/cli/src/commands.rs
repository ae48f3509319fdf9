use std::str::FromStr;

use partheta::asympt::{self, AsymptoticExpansion, Table1Cell, TABLE1_ALPHAS};
use partheta::identities::{Evaluated, IdentityCase, IdentityKind, Tolerance, VerificationRecord};
use partheta::par::with_threads;
use partheta::quad::QuadConfig;
use partheta::{Error, C64};
use serde_json::Value;

use crate::batch::BatchJob;
use crate::complex::{format_complex, parse_complex};
use crate::report::{self, complex, fixed, num, object, Format};
use crate::{AsymptArgs, SeriesKind, SweepArgs, TableArgs, TolArgs, VerifyArgs};

pub const PASS: u8 = 0;
pub const FAIL: u8 = 1;
pub const USAGE: u8 = 2;

fn usage(msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    USAGE
}

/// Bad input maps to 2, numerical breakdown to 1.
fn error_code(e: &Error) -> u8 {
    match e {
        Error::Parameter(_)
        | Error::Domain(_)
        | Error::UnsupportedModulus(_)
        | Error::OutOfRange { .. }
        | Error::Degenerate(_) => USAGE,
        _ => FAIL,
    }
}

fn fail(e: &Error) -> u8 {
    eprintln!("error: {e}");
    error_code(e)
}

fn tolerance(t: &TolArgs) -> Tolerance {
    let d = Tolerance::default();
    Tolerance {
        rel: t.rel_tol.unwrap_or(d.rel),
        abs: t.abs_tol.unwrap_or(d.abs),
    }
}

fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// `1,3,5..8` style lists of non-negative integers.
pub fn parse_index_list(s: &str) -> Result<Vec<u32>, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let bad = || format!("cannot parse '{part}': expected an integer or a range like 1..10");
        if let Some((a, b)) = part.split_once("..") {
            let b = b.strip_prefix('=').unwrap_or(b);
            let a: u32 = a.parse().map_err(|_| bad())?;
            let b: u32 = b.parse().map_err(|_| bad())?;
            if a > b {
                return Err(format!("empty range '{part}'"));
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| bad())?);
        }
    }
    if out.is_empty() {
        return Err("empty index list".into());
    }
    Ok(out)
}

fn parse_identity(name: &str) -> Result<IdentityKind, u8> {
    IdentityKind::from_str(name).map_err(|e| usage(e))
}

fn emit_records(records: &[VerificationRecord], format: Format, timing: bool, single: bool) {
    match format {
        Format::Json => {
            let v = if single {
                report::record_json(&records[0], timing)
            } else {
                Value::Array(
                    records
                        .iter()
                        .map(|r| report::record_json(r, timing))
                        .collect(),
                )
            };
            report::print(&(report::to_json(&v) + "\n"));
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| report::record_csv_row(r, timing))
                .collect();
            if let Err(e) = report::write_csv(&report::RECORD_CSV_HEADER, &rows) {
                eprintln!("error: {e}");
            }
        }
        Format::Pretty => {
            let text: Vec<String> = records
                .iter()
                .map(|r| report::record_pretty(r, timing))
                .collect();
            report::print(&text.join("\n"));
        }
    }
}

fn run_batch(batch: &BatchJob, timing: bool, single: bool) -> u8 {
    let mut records = Vec::with_capacity(batch.jobs.len());
    let mut code = PASS;
    for r in batch.run() {
        match r {
            Ok(rec) => {
                if !rec.passed {
                    code = code.max(FAIL);
                }
                records.push(rec);
            }
            Err(e) => code = code.max(fail(&e)),
        }
    }
    if !records.is_empty() {
        emit_records(&records, batch.output_format, timing, single);
    }
    for rec in records.iter().filter(|r| !r.passed) {
        eprintln!(
            "{} failed: max residual {:.3e} exceeds {:.3e}",
            rec.case.identity,
            rec.max_residual(),
            rec.threshold
        );
        for f in &rec.failures {
            eprintln!("  {}: {}", f.label, f.error);
        }
    }
    code
}

pub fn verify(a: VerifyArgs) -> u8 {
    let identity = match parse_identity(&a.identity) {
        Ok(i) => i,
        Err(c) => return c,
    };
    let alpha = match (a.alpha, identity.uses_alpha()) {
        (Some(x), _) => x,
        (None, false) => std::f64::consts::PI,
        (None, true) => return usage(format!("--alpha is required for {identity}")),
    };
    let z = match a.z.as_deref().map(parse_complex).transpose() {
        Ok(z) => z.unwrap_or(C64::new(0.0, 0.0)),
        Err(e) => return usage(e),
    };
    if identity.uses_q() && a.q.is_none() {
        return usage(format!("--q is required for {identity}"));
    }
    let case = IdentityCase::new(identity, alpha)
        .with_z(z)
        .with_k(a.k.unwrap_or(0))
        .with_q(a.q.unwrap_or(0))
        .with_tol(tolerance(&a.tol));
    match BatchJob::new(vec![case], a.out.format, 1) {
        Ok(b) => run_batch(&b, a.out.timing, true),
        Err(e) => usage(e),
    }
}

pub fn sweep(a: SweepArgs) -> u8 {
    let identity = match parse_identity(&a.identity) {
        Ok(i) => i,
        Err(c) => return c,
    };
    let alphas = if a.alpha.is_empty() {
        if identity.uses_alpha() {
            return usage(format!("--alpha is required for {identity}"));
        }
        vec![std::f64::consts::PI]
    } else {
        a.alpha.clone()
    };
    let zs = match a
        .z
        .iter()
        .map(|s| parse_complex(s))
        .collect::<Result<Vec<_>, _>>()
    {
        Ok(v) if v.is_empty() => vec![C64::new(0.0, 0.0)],
        Ok(v) => v,
        Err(e) => return usage(e),
    };
    let ks = match a.k.as_deref().map(parse_index_list).transpose() {
        Ok(v) => v.unwrap_or_else(|| vec![0]),
        Err(e) => return usage(e),
    };
    let qs = if a.q.is_empty() {
        if identity.uses_q() {
            return usage(format!("--q is required for {identity}"));
        }
        vec![0]
    } else {
        a.q.clone()
    };
    let tol = tolerance(&a.tol);
    let mut jobs = Vec::new();
    for &alpha in &alphas {
        for &z in &zs {
            for &k in &ks {
                for &q in &qs {
                    jobs.push(
                        IdentityCase::new(identity, alpha)
                            .with_z(z)
                            .with_k(k)
                            .with_q(q)
                            .with_tol(tol),
                    );
                }
            }
        }
    }
    let threads = a.parallelism.unwrap_or_else(default_threads);
    match BatchJob::new(jobs, a.out.format, threads) {
        Ok(b) => run_batch(&b, a.out.timing, false),
        Err(e) => usage(e),
    }
}

fn cell_json(c: &Table1Cell) -> Vec<(&'static str, Value)> {
    vec![
        ("k", Value::from(c.k)),
        ("alpha", num(c.alpha)),
        ("lhs", num(c.lhs)),
        ("lhs_err", num(c.lhs_err)),
        ("rhs", num(c.rhs)),
    ]
}

pub fn table(a: TableArgs) -> u8 {
    let ks = match parse_index_list(&a.k) {
        Ok(v) => v,
        Err(e) => return usage(e),
    };
    let alphas = if a.alpha.is_empty() {
        TABLE1_ALPHAS.to_vec()
    } else {
        a.alpha.clone()
    };
    if let Some(bad) = alphas.iter().find(|x| !(**x > 0.0 && x.is_finite())) {
        return usage(format!("alpha must be positive, got {bad}"));
    }
    let threads = match a.parallelism {
        Some(0) => return usage("parallelism must be at least 1"),
        Some(n) => n,
        None => default_threads(),
    };
    let cfg = QuadConfig::default();
    let cells = match with_threads(threads, || asympt::table1(&ks, &alphas, &cfg)) {
        Ok(c) => c,
        Err(e) => return fail(&e),
    };
    let comparison = a.compare_paper.then(|| asympt::compare_with_golden(&cells));

    let mut rows: Vec<Vec<(&'static str, Value)>> = cells.iter().map(cell_json).collect();
    if let Some(cmp) = &comparison {
        rows = cmp
            .iter()
            .map(|g| {
                let mut r = cell_json(&g.cell);
                r.push(("paper_lhs", Value::from(g.paper_lhs.clone())));
                r.push(("paper_rhs", Value::from(g.paper_rhs.clone())));
                r.push(("lhs_ok", Value::Bool(g.lhs_ok)));
                r.push(("rhs_ok", Value::Bool(g.rhs_ok)));
                r
            })
            .collect();
    }
    match a.format {
        Format::Json => {
            let arr = rows
                .into_iter()
                .map(|r| Value::Object(r.into_iter().map(|(k, v)| (k.to_string(), v)).collect()))
                .collect();
            report::print(&(report::to_json(&Value::Array(arr)) + "\n"));
        }
        Format::Csv => {
            let header: Vec<&str> = rows.first().map_or_else(
                || vec!["k", "alpha", "lhs", "lhs_err", "rhs"],
                |r| r.iter().map(|(k, _)| *k).collect(),
            );
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|(_, v)| match v {
                            Value::String(s) => s.clone(),
                            other => other.to_string(),
                        })
                        .collect()
                })
                .collect();
            if let Err(e) = report::write_csv(&header, &body) {
                eprintln!("error: {e}");
            }
        }
        Format::Pretty => {
            let mut s = String::new();
            match &comparison {
                None => {
                    s += &format!("{:>3} {:>12} {:>22} {:>22}\n", "k", "alpha", "lhs", "rhs");
                    for c in &cells {
                        s += &format!(
                            "{:>3} {:>12} {:>22.15e} {:>22.15e}\n",
                            c.k, c.alpha, c.lhs, c.rhs
                        );
                    }
                }
                Some(cmp) => {
                    s += &format!(
                        "{:>3} {:>12} {:>22} {:>12} {:>22} {:>12}  ok\n",
                        "k", "alpha", "lhs", "printed", "rhs", "printed"
                    );
                    for g in cmp {
                        s += &format!(
                            "{:>3} {:>12} {:>22.15e} {:>12} {:>22.15e} {:>12}  {}\n",
                            g.cell.k,
                            g.cell.alpha,
                            g.cell.lhs,
                            g.paper_lhs,
                            g.cell.rhs,
                            g.paper_rhs,
                            if g.passed() { "yes" } else { "NO" }
                        );
                    }
                }
            }
            report::print(&s);
        }
    }
    if let Some(cmp) = comparison {
        let bad: Vec<_> = cmp.iter().filter(|g| !g.passed()).collect();
        eprintln!(
            "{} of {} cells compared, {} mismatched",
            cmp.len(),
            cells.len(),
            bad.len()
        );
        for g in &bad {
            eprintln!(
                "  k = {}, alpha = {}: computed {} / {}, printed {} / {}",
                g.cell.k,
                g.cell.alpha,
                fixed(g.cell.lhs),
                fixed(g.cell.rhs),
                g.paper_lhs,
                g.paper_rhs
            );
        }
        if !bad.is_empty() {
            return FAIL;
        }
    }
    PASS
}

fn regime_warning(series: SeriesKind, alpha: f64) -> Option<String> {
    let (ok, need) = match series {
        SeriesKind::I | SeriesKind::K | SeriesKind::Theta => (alpha <= 1.0, "alpha <= 1"),
        SeriesKind::Oloa => (alpha >= 10.0, "alpha >= 10"),
        SeriesKind::OloaZ0 => (alpha >= 5.0, "alpha >= 5"),
    };
    (!ok).then(|| {
        format!(
            "the expansion is only meaningful for {need}; pass --force to run at alpha = {alpha}"
        )
    })
}

fn expansion(
    series: SeriesKind,
    z: C64,
    alpha: f64,
    terms: Option<usize>,
) -> partheta::Result<AsymptoticExpansion> {
    match (series, terms) {
        (SeriesKind::I, Some(m)) => asympt::i_series(z, alpha, m),
        (SeriesKind::I, None) => asympt::i_series_optimal(z, alpha),
        (SeriesKind::K, Some(m)) => asympt::k_series(z, alpha, m),
        (SeriesKind::K, None) => asympt::k_series_optimal(z, alpha),
        (SeriesKind::Theta, Some(m)) => asympt::theta_series(z, alpha, m),
        (SeriesKind::Theta, None) => asympt::theta_series_optimal(z, alpha),
        (SeriesKind::Oloa, Some(m)) => asympt::oloa_general(z, alpha, m),
        (SeriesKind::Oloa, None) => asympt::oloa_general_optimal(z, alpha),
        (SeriesKind::OloaZ0, Some(m)) => asympt::oloa_z0(alpha, m),
        (SeriesKind::OloaZ0, None) => Err(Error::Parameter(
            "oloa-z0 has four known terms; use --terms 1..4 instead of --optimal".into(),
        )),
    }
}

fn reference(series: SeriesKind, z: C64, alpha: f64) -> partheta::Result<Evaluated> {
    let cfg = QuadConfig::default();
    match series {
        SeriesKind::I => asympt::i_reference(z, alpha, &cfg),
        SeriesKind::K => asympt::k_reference(z, alpha, &cfg),
        SeriesKind::Theta => asympt::theta_reference(z, alpha, &cfg),
        SeriesKind::Oloa => asympt::oloa_general_reference(z, alpha, &cfg),
        SeriesKind::OloaZ0 => asympt::oloa_z0_reference(alpha, &cfg),
    }
}

fn exponent_string(t: &asympt::ExpansionTerm) -> String {
    let mut s = t.exponent.to_string();
    match t.z_multiple {
        0 => {}
        1 => s += "+z/2",
        -1 => s += "-z/2",
        m => s += &format!("{m:+}z/2"),
    }
    s
}

pub fn asympt(a: AsymptArgs) -> u8 {
    if !(a.alpha > 0.0 && a.alpha.is_finite()) {
        return usage(format!("alpha must be positive, got {}", a.alpha));
    }
    let z = match a.z.as_deref().map(parse_complex).transpose() {
        Ok(z) => z.unwrap_or(C64::new(0.0, 0.0)),
        Err(e) => return usage(e),
    };
    if let Some(w) = regime_warning(a.series, a.alpha) {
        if a.force {
            eprintln!("warning: {w}");
        } else {
            return usage(w);
        }
    }
    let terms = match (a.optimal, a.terms) {
        (true, _) => None,
        (false, Some(m)) => Some(m),
        (false, None) => Some(if a.series == SeriesKind::OloaZ0 { 4 } else { 3 }),
    };
    let exp = match expansion(a.series, z, a.alpha, terms) {
        Ok(e) => e,
        Err(e) => return fail(&e),
    };
    let reference = match reference(a.series, z, a.alpha) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let values = exp.term_values();
    let sum: C64 = values.iter().sum();
    let gap = (sum - reference.value).norm();
    let roundoff = 8.0
        * f64::EPSILON
        * (reference.value.norm() + values.iter().map(|v| v.norm()).sum::<f64>());
    let allowed = exp.first_omitted_magnitude + reference.err + roundoff;
    let consistent = gap <= allowed;

    match a.format {
        Format::Json => {
            let terms: Vec<Value> = exp
                .terms
                .iter()
                .zip(&values)
                .enumerate()
                .map(|(i, (t, v))| {
                    object([
                        ("index", Value::from(i)),
                        ("coefficient", complex(t.coefficient)),
                        ("exponent", Value::from(exponent_string(t))),
                        ("log_power", Value::from(t.log_power)),
                        ("value", complex(*v)),
                    ])
                })
                .collect();
            let v = object([
                ("series", Value::from(exp.origin.name())),
                ("alpha", num(a.alpha)),
                ("z", complex(z)),
                ("terms", Value::Array(terms)),
                ("truncation_index", Value::from(exp.truncation_index)),
                ("partial_sum", complex(sum)),
                ("reference", complex(reference.value)),
                ("reference_err", num(reference.err)),
                ("gap", num(gap)),
                ("first_omitted_magnitude", num(exp.first_omitted_magnitude)),
                ("consistent", Value::Bool(consistent)),
            ]);
            report::print(&(report::to_json(&v) + "\n"));
        }
        Format::Csv => {
            let header = [
                "row",
                "exponent",
                "log_power",
                "coefficient_re",
                "coefficient_im",
                "value_re",
                "value_im",
            ];
            let mut rows: Vec<Vec<String>> = exp
                .terms
                .iter()
                .zip(&values)
                .enumerate()
                .map(|(i, (t, v))| {
                    vec![
                        i.to_string(),
                        exponent_string(t),
                        t.log_power.to_string(),
                        fixed(t.coefficient.re),
                        fixed(t.coefficient.im),
                        fixed(v.re),
                        fixed(v.im),
                    ]
                })
                .collect();
            let summary = |name: &str, v: C64| {
                vec![
                    name.to_string(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    fixed(v.re),
                    fixed(v.im),
                ]
            };
            rows.push(summary("partial_sum", sum));
            rows.push(summary("reference", reference.value));
            rows.push(summary("gap", C64::new(gap, 0.0)));
            rows.push(summary(
                "first_omitted_magnitude",
                C64::new(exp.first_omitted_magnitude, 0.0),
            ));
            if let Err(e) = report::write_csv(&header, &rows) {
                eprintln!("error: {e}");
            }
        }
        Format::Pretty => {
            let mut s = format!(
                "{} series  alpha = {}  z = {}  {} terms{}\n",
                exp.origin.name(),
                a.alpha,
                format_complex(z),
                exp.terms.len(),
                if terms.is_none() { " (optimal)" } else { "" }
            );
            s += &format!(
                "{:>3}  {:>12}  {:>24}  {:>24}\n",
                "m", "exponent", "coefficient", "value"
            );
            for (i, (t, v)) in exp.terms.iter().zip(&values).enumerate() {
                let log = if t.log_power > 0 {
                    format!(" log^{}", t.log_power)
                } else {
                    String::new()
                };
                s += &format!(
                    "{:>3}  {:>12}  {:>24}  {:>24}\n",
                    i,
                    exponent_string(t) + &log,
                    format_complex_e(t.coefficient),
                    format_complex_e(*v)
                );
            }
            s += &format!("partial sum      {}\n", format_complex_e(sum));
            s += &format!(
                "reference        {}  (err {:.2e})\n",
                format_complex_e(reference.value),
                reference.err
            );
            s += &format!("gap              {gap:.6e}\n");
            s += &format!("first omitted    {:.6e}\n", exp.first_omitted_magnitude);
            s += &format!("truncation index {}\n", exp.truncation_index);
            s += if consistent {
                "CONSISTENT\n"
            } else {
                "INCONSISTENT\n"
            };
            report::print(&s);
        }
    }
    if consistent {
        PASS
    } else {
        eprintln!("gap {gap:.3e} exceeds first omitted term plus error budget {allowed:.3e}");
        FAIL
    }
}

fn format_complex_e(z: C64) -> String {
    if z.im == 0.0 {
        format!("{:.12e}", z.re)
    } else {
        format!("{:.12e}{:+.12e}i", z.re, z.im)
    }
}
