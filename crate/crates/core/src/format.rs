//! Text output: significant-digit numbers and the dispersion CSV.

use std::io::{self, Write};

use crate::clifford::Complex;
use crate::kinematics::DispersionRow;

pub const DEFAULT_PRECISION: usize = 9;

pub const DISPERSION_HEADER: &str = "epsilon,u_bradyon,v_pt,w_tachyon";

/// `x` with `digits` significant digits, trailing zeros dropped.
///
/// Fixed notation for decimal exponents in `[-5, digits)`, scientific
/// (`1.5e-7`) outside. Ties round half to even. `-0` prints as `0`.
pub fn number(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        format!("{}e{exp}", trim_zeros(mantissa))
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `a+bi` / `a-bi`.
pub fn complex(z: Complex, digits: usize) -> String {
    let re = number(z.re, digits);
    let im = number(z.im.abs(), digits);
    let sign = if z.im < 0.0 && im != "0" { '-' } else { '+' };
    format!("{re}{sign}{im}i")
}

/// Comma-joined components.
pub fn list(xs: &[f64], digits: usize) -> String {
    xs.iter().map(|&x| number(x, digits)).collect::<Vec<_>>().join(",")
}

fn optional(x: Option<f64>, digits: usize) -> String {
    x.map(|v| number(v, digits)).unwrap_or_default()
}

/// Header plus one LF-terminated row per energy; undefined speeds are empty fields.
pub fn write_dispersion_csv<W: Write + ?Sized>(out: &mut W, rows: &[DispersionRow], digits: usize) -> io::Result<()> {
    writeln!(out, "{DISPERSION_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{}",
            number(r.epsilon, digits),
            optional(r.u, digits),
            number(r.v, digits),
            optional(r.w, digits)
        )?;
    }
    Ok(())
}
