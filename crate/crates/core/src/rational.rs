//! Exact scalar arithmetic helpers.
//!
//! `Rational` is an arbitrary precision fraction, always reduced with a
//! positive denominator. Nothing in this crate touches floating point; the
//! decimal rendering below is done with integer division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `p/q` or `p` for integers. This is the machine format for every rational.
pub fn format(r: &Rational) -> String {
    r.to_string()
}

/// Parses `p`, `-p`, `p/q`. Denominators must be nonzero.
pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    if !is_integer_literal(num) || !is_integer_literal(den) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

fn is_integer_literal(s: &str) -> bool {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

/// Decimal approximation rounded half away from zero, for human output only.
pub fn decimal(r: &Rational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled: BigInt = r.numer().abs() * &scale * 2 + r.denom();
    let (q, _) = scaled.div_rem(&(r.denom() * 2));
    let (whole, part) = q.div_rem(&scale);
    let sign = if r.is_negative() && !q.is_zero() {
        "-"
    } else {
        ""
    };
    if places == 0 {
        return format!("{sign}{whole}");
    }
    format!(
        "{sign}{whole}.{:0>width$}",
        part.to_string(),
        width = places as usize
    )
}

pub fn floor_div2(n: i64) -> i64 {
    n.div_euclid(2)
}

pub fn ceil_div2(n: i64) -> i64 {
    -((-n).div_euclid(2))
}
