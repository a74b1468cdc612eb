//! Arbitrary-precision rational scalars and their textual form.
//!
//! Every number in this crate is a [`Rational`]: a reduced fraction of
//! big integers with positive denominator. Values are serialized as
//! decimal-free strings `"p/q"` (or `"p"` when the denominator is 1) so
//! that files and reports never lose precision.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

pub type Rational = BigRational;

/// Shorthand for a small integer constant.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"-p"`, or `"p/q"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational literal".to_string());
    }
    match s.split_once('/') {
        None => BigInt::from_str(s)
            .map(Rational::from_integer)
            .map_err(|e| format!("bad integer `{s}`: {e}")),
        Some((num, den)) => {
            let n =
                BigInt::from_str(num.trim()).map_err(|e| format!("bad numerator `{num}`: {e}"))?;
            let d = BigInt::from_str(den.trim())
                .map_err(|e| format!("bad denominator `{den}`: {e}"))?;
            if d.is_zero() {
                return Err(format!("zero denominator in `{s}`"));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Formats a rational as `"p"` or `"p/q"` (reduced, denominator positive).
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exponent of `p` in `n` (`None` for `n == 0`).
pub fn int_valuation(n: &BigInt, p: u32) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut m = n.abs();
    let mut v = 0u64;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&m, &p);
        if r.is_zero() {
            v += 1;
            m = q;
        } else {
            return Some(v);
        }
    }
}

/// `p`-adic valuation of a rational (`None` for zero).
pub fn padic_valuation(r: &Rational, p: u32) -> Option<i64> {
    let vn = int_valuation(r.numer(), p)?;
    let vd = int_valuation(r.denom(), p).expect("denominator is nonzero");
    Some(vn as i64 - vd as i64)
}

/// Exact power `p^e` as a rational, for integer `e` of either sign.
pub fn rational_power(base: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow::Pow::pow(base.clone(), e as u64)
    } else {
        num_traits::pow::Pow::pow(base.clone().recip(), (-e) as u64)
    }
}
