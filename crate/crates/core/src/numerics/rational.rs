//! Helpers around [`BigRational`]: exact parsing of decimal literals, exact
//! conversion from `f64`, and dyadic rounding.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact value of a finite `f64` (every finite double is a dyadic rational).
pub fn from_f64(x: f64) -> Result<Rational> {
    Rational::from_float(x).ok_or_else(|| Error::Domain(format!("non-finite value {x}")))
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Parses `"0.3"`, `"-12"`, `"1e-9"`, `"2.5E+3"` or `"7/24"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = parse_rational(num)?;
        let den = parse_rational(den)?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        return Ok(num / den);
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i32 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let numer: BigInt = if all_digits.is_empty() {
        BigInt::zero()
    } else {
        all_digits.parse().map_err(|_| bad())?
    };
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        Rational::from_integer(numer * Pow::pow(&ten, scale as u32))
    } else {
        Rational::new(numer, Pow::pow(&ten, (-scale) as u32))
    };
    if negative {
        value = -value;
    }
    Ok(value)
}

pub fn floor(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

pub fn ceil(x: &Rational) -> BigInt {
    -((-x.numer()).div_floor(x.denom()))
}

/// Smallest `k` with `2^-k <= width`.
pub fn bits_for(width: &Rational) -> u32 {
    assert!(width.is_positive(), "width must be positive");
    let mut k = 0u32;
    let mut w = Rational::one();
    while &w > width {
        w /= rat(2);
        k += 1;
    }
    k
}

pub fn pow2(k: u32) -> BigInt {
    BigInt::one() << k as usize
}

/// Largest multiple of `2^-k` that is `<= x`.
pub fn round_down(x: &Rational, k: u32) -> Rational {
    let scale = pow2(k);
    Rational::new(floor(&(x * Rational::from_integer(scale.clone()))), scale)
}

/// Smallest multiple of `2^-k` that is `>= x`.
pub fn round_up(x: &Rational, k: u32) -> Rational {
    let scale = pow2(k);
    Rational::new(ceil(&(x * Rational::from_integer(scale.clone()))), scale)
}

/// Renders `x` with a fixed number of decimals, rounding half away from zero.
pub fn format_fixed(x: &Rational, decimals: usize) -> String {
    let scale = Pow::pow(&BigInt::from(10), decimals as u32);
    let scaled = x.abs() * Rational::from_integer(scale.clone());
    let rounded = floor(&(scaled + ratio(1, 2)));
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let sign = if x.is_negative() && !rounded.is_zero() { "-" } else { "" };
    if decimals == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = decimals)
    }
}

/// Serializes a rational as its exact `p/q` string.
pub fn serialize_rational<S: serde::Serializer>(x: &Rational, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_str(&x.to_string())
}

/// Number of decimals needed so that a printed value resolves `precision`.
pub fn decimals_for(precision: &Rational) -> usize {
    let mut d = 0usize;
    let mut step = Rational::one();
    let ten = rat(10);
    while &step > precision && d < 60 {
        step /= &ten;
        d += 1;
    }
    d.max(6)
}
