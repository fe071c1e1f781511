//! Number formatting shared by all reports.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// `x` with `sig` significant digits in the style of C's `%.{sig}g`:
/// trailing zeros dropped, exponent form below `1e-4` and at or above
/// `10^sig`. Negative zero prints as `0`.
pub fn fmt_g(x: f64, sig: usize) -> String {
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
    let sig = sig.max(1);
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= sig as i32 {
        let m = trim_fraction(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        trim_fraction(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Full-precision form used in site files.
pub fn fmt17(x: f64) -> String {
    fmt_g(x, 17)
}

/// Report form with 12 significant digits.
pub fn fmt12(x: f64) -> String {
    fmt_g(x, 12)
}

/// `p/q`, or just `p` for integers.
pub fn fmt_ratio(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else if q.is_zero() {
        "0".into()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn join<T, F: Fn(&T) -> String>(items: &[T], f: F) -> String {
    items.iter().map(f).collect::<Vec<_>>().join(" ")
}
