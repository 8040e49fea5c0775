//! `%g`-style number formatting.

/// Significant digits used for ordinary output.
pub const DISPLAY_DIGITS: usize = 12;

/// Significant digits that round-trip every finite `f64`.
pub const EXACT_DIGITS: usize = 17;

/// Formats `x` with `digits` significant digits like C's `%.{digits}g`:
/// trailing zeros are dropped and scientific notation is used when the
/// decimal exponent is below -4 or at least `digits`. Ties round to even.
pub fn format_significant(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exponent) = sci.split_once('e').expect("exponent form");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if exponent < -4 || exponent >= digits as i32 {
        let sign = if exponent < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_fraction(mantissa), exponent.unsigned_abs())
    } else {
        let decimals = (digits as i32 - 1 - exponent) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_owned()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
