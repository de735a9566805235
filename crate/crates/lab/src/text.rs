//! Text forms of numbers in reports and on the command line.

use num_complex::Complex64 as C;
use painleve_core::algebra::rational::parse_rational;
use painleve_core::algebra::Rational;
use serde_json::Value;

/// Seventeen significant digits in scientific notation.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

/// `re±imi`, each part with seventeen significant digits.
pub fn fmt_complex(z: C) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{sign}{}i", fmt_f64(z.re), fmt_f64(z.im.abs()))
}

pub fn complex_value(z: C) -> Value {
    Value::from(fmt_complex(z))
}

pub fn matrix_value(m: &[[C; 2]; 2]) -> Value {
    Value::from(
        m.iter()
            .map(|row| Value::from(row.iter().map(|z| complex_value(*z)).collect::<Vec<_>>()))
            .collect::<Vec<_>>(),
    )
}

/// Parses `1.5`, `-2i`, `i`, `0.5+0.1i`, `1e-3-2.5e-1i`.
pub fn parse_complex(text: &str) -> Result<C, String> {
    let s: String = text.trim().replace('−', "-").chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("not a complex number: {text:?}");
    let Some(body) = s.strip_suffix('i') else {
        return s.parse::<f64>().map(|re| C::new(re, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re = if re.is_empty() { 0.0 } else { re.parse::<f64>().map_err(|_| bad())? };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(C::new(re, im))
}

pub fn parse_rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

/// Comma-separated list of complex numbers.
pub fn parse_grid(text: &str) -> Result<Vec<C>, String> {
    text.split(',').map(parse_complex).collect()
}
