use std::io::Write;
use std::str::FromStr;

use clap::ValueEnum;
use partheta::identities::VerificationRecord;
use partheta::C64;
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// A float with 17 significant digits; non-finite values become null.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    Number::from_str(&fixed(x))
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

pub fn fixed(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn complex(z: C64) -> Value {
    object([("re", num(z.re)), ("im", num(z.im))])
}

pub fn object<const N: usize>(fields: [(&str, Value); N]) -> Value {
    let mut m = Map::new();
    for (k, v) in fields {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}

pub fn to_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values always serialize")
}

pub fn record_json(r: &VerificationRecord, timing: bool) -> Value {
    let c = &r.case;
    let mut params = Map::new();
    params.insert("alpha".into(), num(c.alpha));
    params.insert("z".into(), complex(c.z));
    if c.identity.uses_k() {
        params.insert("k".into(), Value::from(c.k));
    }
    if c.identity.uses_q() {
        params.insert("q".into(), Value::from(c.q));
    }
    let sides = r
        .sides
        .iter()
        .map(|s| {
            object([
                ("label", Value::from(s.label.clone())),
                ("re", num(s.value.re)),
                ("im", num(s.value.im)),
                ("err", num(s.err)),
            ])
        })
        .collect();
    let mut m = Map::new();
    m.insert("identity".into(), Value::from(c.identity.name()));
    m.insert("params".into(), Value::Object(params));
    m.insert("sides".into(), Value::Array(sides));
    m.insert(
        "residuals".into(),
        Value::Array(r.residuals.iter().map(|x| num(*x)).collect()),
    );
    m.insert("passed".into(), Value::Bool(r.passed));
    m.insert("wall_ms".into(), num(if timing { r.wall_ms } else { 0.0 }));
    if !r.failures.is_empty() {
        let f = r
            .failures
            .iter()
            .map(|f| {
                object([
                    ("label", Value::from(f.label.clone())),
                    ("error", Value::from(f.error.to_string())),
                ])
            })
            .collect();
        m.insert("failures".into(), Value::Array(f));
    }
    Value::Object(m)
}

pub const RECORD_CSV_HEADER: [&str; 11] = [
    "identity",
    "alpha",
    "z_re",
    "z_im",
    "k",
    "q",
    "sides",
    "max_residual",
    "threshold",
    "passed",
    "wall_ms",
];

pub fn record_csv_row(r: &VerificationRecord, timing: bool) -> Vec<String> {
    let c = &r.case;
    let sides: Vec<String> = r
        .sides
        .iter()
        .map(|s| {
            let sign = if s.value.im.is_sign_negative() {
                ""
            } else {
                "+"
            };
            format!(
                "{}={}{sign}{}i",
                s.label,
                fixed(s.value.re),
                fixed(s.value.im)
            )
        })
        .collect();
    vec![
        c.identity.name().to_string(),
        fixed(c.alpha),
        fixed(c.z.re),
        fixed(c.z.im),
        if c.identity.uses_k() {
            c.k.to_string()
        } else {
            String::new()
        },
        if c.identity.uses_q() {
            c.q.to_string()
        } else {
            String::new()
        },
        sides.join(";"),
        fixed(r.max_residual()),
        fixed(r.threshold),
        r.passed.to_string(),
        fixed(if timing { r.wall_ms } else { 0.0 }),
    ]
}

pub fn record_pretty(r: &VerificationRecord, timing: bool) -> String {
    let c = &r.case;
    let mut s = format!("{}  alpha = {}", c.identity, c.alpha);
    if c.identity.uses_z() {
        s += &format!("  z = {}", crate::complex::format_complex(c.z));
    }
    if c.identity.uses_k() {
        s += &format!("  k = {}", c.k);
    }
    if c.identity.uses_q() {
        s += &format!("  q = {}", c.q);
    }
    s.push('\n');
    let width = r
        .sides
        .iter()
        .map(|x| x.label.len())
        .chain(r.failures.iter().map(|f| f.label.len()))
        .max()
        .unwrap_or(0);
    for side in &r.sides {
        s += &format!(
            "  {:width$}  {:>24.16e} {:>+24.16e}i  err {:.2e}\n",
            side.label, side.value.re, side.value.im, side.err
        );
    }
    for f in &r.failures {
        s += &format!("  {:width$}  FAILED: {}\n", f.label, f.error);
    }
    let res: Vec<String> = r.residuals.iter().map(|x| format!("{x:.3e}")).collect();
    s += &format!(
        "  residuals [{}]  threshold {:.3e}\n",
        res.join(", "),
        r.threshold
    );
    if timing {
        s += &format!("  {:.1} ms\n", r.wall_ms);
    }
    s += if r.passed { "PASS\n" } else { "FAIL\n" };
    s
}

pub fn write_csv(header: &[&str], rows: &[Vec<String>]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(std::io::stdout().lock());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()
}

pub fn print(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes());
    let _ = out.flush();
}
