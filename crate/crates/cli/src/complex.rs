use partheta::C64;

pub const GRAMMAR: &str =
    "expected a real number, `bi`, or `a+bi` / `a-bi` without spaces (e.g. 1, 0.5i, 1+0.5i, 2-i)";

/// Parse `a`, `bi`, `a+bi` or `a-bi`.
pub fn parse_complex(s: &str) -> Result<C64, String> {
    let bad = || format!("cannot parse '{s}' as a complex number: {GRAMMAR}");
    let t = s.trim();
    if t.is_empty() || t.contains(char::is_whitespace) {
        return Err(bad());
    }
    let z = match t.strip_suffix('i') {
        None => C64::new(t.parse::<f64>().map_err(|_| bad())?, 0.0),
        Some(body) => parse_with_imaginary(body).ok_or_else(bad)?,
    };
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(bad());
    }
    Ok(z)
}

fn parse_with_imaginary(body: &str) -> Option<C64> {
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&j| (bytes[j] == b'+' || bytes[j] == b'-') && !matches!(bytes[j - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(j) => (&body[..j], &body[j..]),
        None => ("", body),
    };
    let re = if re.is_empty() {
        0.0
    } else {
        re.parse::<f64>().ok()?
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse::<f64>().ok()?,
    };
    Some(C64::new(re, im))
}

pub fn format_complex(z: C64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}i", z.im)
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}
