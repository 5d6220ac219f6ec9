//! Exact real quadratic surds `α + β√δ`.
//!
//! Every spectral quantity in this crate is a rational function of `s = t²`,
//! and every degeneracy value `s_q` is a root of a rational quadratic. Both
//! therefore live in some `ℚ(√δ)`, and a single [`Surd`] type carries all of
//! them with exact ordering.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::enclosure::Enclosure;
use super::rational::{self, rat, Rational};

/// Trial-division bound used by [`Surd::new`] when extracting square factors.
pub const DEFAULT_SQUAREFREE_BOUND: u64 = 1_000_000;

/// `α + β√δ` with rational `α, β` and integer `δ >= 0`.
///
/// Canonical form: `β = 0 ⇔ δ = 0`, `δ != 1`, and `δ` has no square factor
/// `p²` with `p` below the trial-division bound. Equality and ordering are
/// exact regardless of how far `δ` was reduced.
#[derive(Clone, Debug)]
pub struct Surd {
    alpha: Rational,
    beta: Rational,
    delta: BigInt,
}

/// Splits `d = f² · r` with every prime `p <= bound` removed from `r` as far as
/// squares go. A perfect-square remainder is absorbed into `f` as well.
pub fn reduce_radicand(d: &BigInt, bound: u64) -> (BigInt, BigInt) {
    assert!(!d.is_negative(), "negative radicand");
    if d.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let mut rest = d.clone();
    let mut factor = BigInt::one();
    let mut p: u64 = 2;
    while p <= bound {
        let pb = BigInt::from(p);
        let p2 = &pb * &pb;
        if p2 > rest {
            break;
        }
        while (&rest % &p2).is_zero() {
            rest /= &p2;
            factor *= &pb;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        factor *= root;
        rest = BigInt::one();
    }
    (factor, rest)
}

impl Surd {
    /// `α + β√r` for a rational radicand `r >= 0`.
    pub fn new(alpha: Rational, beta: Rational, radicand: Rational) -> Self {
        Self::with_bound(alpha, beta, radicand, DEFAULT_SQUAREFREE_BOUND)
    }

    pub fn with_bound(alpha: Rational, beta: Rational, radicand: Rational, bound: u64) -> Self {
        assert!(!radicand.is_negative(), "negative radicand {radicand}");
        // √(p/q) = √(pq) / q
        let d = radicand.numer() * radicand.denom();
        let beta = beta / Rational::from_integer(radicand.denom().clone());
        let (factor, rest) = reduce_radicand(&d, bound);
        Self::from_parts(alpha, beta * Rational::from_integer(factor), rest)
    }

    fn from_parts(alpha: Rational, beta: Rational, delta: BigInt) -> Self {
        if beta.is_zero() || delta.is_zero() {
            return Self::rational(alpha);
        }
        if delta.is_one() {
            return Self::rational(alpha + beta);
        }
        Surd { alpha, beta, delta }
    }

    pub fn rational(value: Rational) -> Self {
        Surd {
            alpha: value,
            beta: Rational::zero(),
            delta: BigInt::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(rat(n))
    }

    /// `√r` for rational `r >= 0`.
    pub fn sqrt_of(r: Rational) -> Self {
        Self::new(Rational::zero(), Rational::one(), r)
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn delta(&self) -> &BigInt {
        &self.delta
    }

    pub fn is_rational(&self) -> bool {
        self.beta.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.alpha)
    }

    pub fn is_zero(&self) -> bool {
        self.signum() == 0
    }

    /// Exact sign of the represented real: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.alpha);
        let sb = sign_of(&self.beta);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let a2 = &self.alpha * &self.alpha;
        let b2d = &self.beta * &self.beta * Rational::from_integer(self.delta.clone());
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        (self - &Surd::rational(r.clone())).signum().cmp(&0)
    }

    fn compatible(&self, other: &Surd) -> Option<BigInt> {
        if self.is_rational() {
            Some(other.delta.clone())
        } else if other.is_rational() || self.delta == other.delta {
            Some(self.delta.clone())
        } else {
            None
        }
    }

    pub fn checked_add(&self, other: &Surd) -> Option<Surd> {
        let delta = self.compatible(other)?;
        Some(Surd::from_parts(
            &self.alpha + &other.alpha,
            &self.beta + &other.beta,
            delta,
        ))
    }

    pub fn checked_mul(&self, other: &Surd) -> Option<Surd> {
        let delta = self.compatible(other)?;
        let d = Rational::from_integer(delta.clone());
        Some(Surd::from_parts(
            &self.alpha * &other.alpha + &self.beta * &other.beta * d,
            &self.alpha * &other.beta + &self.beta * &other.alpha,
            delta,
        ))
    }

    /// `1 / (α + β√δ) = (α − β√δ) / (α² − β²δ)`. Panics on zero.
    pub fn recip(&self) -> Surd {
        let d = Rational::from_integer(self.delta.clone());
        let norm = &self.alpha * &self.alpha - &self.beta * &self.beta * d;
        assert!(!norm.is_zero(), "division by zero surd");
        Surd::from_parts(&self.alpha / &norm, -&self.beta / &norm, self.delta.clone())
    }

    pub fn scale(&self, r: &Rational) -> Surd {
        Surd::from_parts(&self.alpha * r, &self.beta * r, self.delta.clone())
    }

    pub fn square(&self) -> Surd {
        self * self
    }

    /// Verified enclosure of the value with width `<= width`.
    pub fn enclose(&self, width: &Rational) -> Enclosure {
        if self.is_rational() {
            return Enclosure::point(self.alpha.clone());
        }
        let scale = self.beta.abs() + Rational::one();
        let root = Enclosure::sqrt_of(&Rational::from_integer(self.delta.clone()), &(width / scale));
        root.scale(&self.beta).shift(&self.alpha)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_rational() {
            return rational::to_f64(&self.alpha);
        }
        self.enclose(&rational::ratio(1, 1 << 60)).mid_f64()
    }

    /// Decimal rendering with `decimals` places; exact for rational values.
    pub fn to_fixed(&self, decimals: usize) -> String {
        if self.is_rational() {
            return rational::format_fixed(&self.alpha, decimals);
        }
        let width = Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10), decimals + 4));
        rational::format_fixed(&self.enclose(&width).mid(), decimals)
    }
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// Exact sign of `x − y` for arbitrary surds (radicands may differ).
fn cmp_surds(x: &Surd, y: &Surd) -> Ordering {
    if let Some(diff) = x.checked_add(&-y) {
        return diff.signum().cmp(&0);
    }
    // x − y = u + v with u ∈ ℚ(√δx), v = −βy√δy
    let u = Surd::from_parts(&x.alpha - &y.alpha, x.beta.clone(), x.delta.clone());
    let su = u.signum();
    let sv = -sign_of(&y.beta);
    let s = if su == 0 {
        sv
    } else if su == sv {
        su
    } else {
        let v2 = &y.beta * &y.beta * Rational::from_integer(y.delta.clone());
        match (u.square() - Surd::rational(v2)).signum() {
            1 => su,
            -1 => sv,
            _ => 0,
        }
    };
    s.cmp(&0)
}

impl PartialEq for Surd {
    fn eq(&self, other: &Self) -> bool {
        cmp_surds(self, other) == Ordering::Equal
    }
}

impl Eq for Surd {}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_surds(self, other)
    }
}

impl From<Rational> for Surd {
    fn from(r: Rational) -> Self {
        Surd::rational(r)
    }
}

impl From<i64> for Surd {
    fn from(n: i64) -> Self {
        Surd::from_int(n)
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd::from_parts(-&self.alpha, -&self.beta, self.delta.clone())
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        -&self
    }
}

macro_rules! surd_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Surd> for &Surd {
            type Output = Surd;
            fn $method(self, rhs: &Surd) -> Surd {
                let f: fn(&Surd, &Surd) -> Surd = $body;
                f(self, rhs)
            }
        }
        impl $trait<Surd> for Surd {
            type Output = Surd;
            fn $method(self, rhs: Surd) -> Surd {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Surd> for Surd {
            type Output = Surd;
            fn $method(self, rhs: &Surd) -> Surd {
                (&self).$method(rhs)
            }
        }
        impl $trait<Surd> for &Surd {
            type Output = Surd;
            fn $method(self, rhs: Surd) -> Surd {
                self.$method(&rhs)
            }
        }
    };
}

// Mixing two distinct irrational radicands is a logic error: every value in
// one computation lives in a single field ℚ(√δ).
surd_binop!(Add, add, |a, b| a
    .checked_add(b)
    .unwrap_or_else(|| panic!("incompatible radicands: {a} + {b}")));
surd_binop!(Sub, sub, |a, b| a
    .checked_add(&-b)
    .unwrap_or_else(|| panic!("incompatible radicands: {a} - {b}")));
surd_binop!(Mul, mul, |a, b| a
    .checked_mul(b)
    .unwrap_or_else(|| panic!("incompatible radicands: {a} * {b}")));
surd_binop!(Div, div, |a, b| a * &b.recip());

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.alpha);
        }
        let sign = if self.beta.is_negative() { '-' } else { '+' };
        let b = self.beta.abs();
        let coeff = if b.is_one() { String::new() } else { b.to_string() };
        if self.alpha.is_zero() {
            let lead = if sign == '-' { "-" } else { "" };
            write!(f, "{lead}{coeff}√{}", self.delta)
        } else {
            write!(f, "{}{sign}{coeff}√{}", self.alpha, self.delta)
        }
    }
}

impl Serialize for Surd {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Surd", 5)?;
        st.serialize_field("alpha", &self.alpha.to_string())?;
        st.serialize_field("beta", &self.beta.to_string())?;
        st.serialize_field("delta", &self.delta.to_string())?;
        st.serialize_field("symbolic", &self.to_string())?;
        st.serialize_field("approx", &self.to_f64())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::ratio;

    #[test]
    fn canonical_form_extracts_squares() {
        let s = Surd::sqrt_of(rat(72));
        assert_eq!(s.beta(), &rat(6));
        assert_eq!(s.delta(), &BigInt::from(2));
        assert!(Surd::sqrt_of(rat(49)).is_rational());
        assert_eq!(Surd::sqrt_of(rat(49)), Surd::from_int(7));
        let half = Surd::sqrt_of(ratio(7, 2));
        assert_eq!(half.beta(), &ratio(1, 2));
        assert_eq!(half.delta(), &BigInt::from(14));
    }

    #[test]
    fn unreduced_radicand_still_compares_exactly() {
        // 1_000_003 is prime and above a tiny bound; its square survives trial division
        // only to be caught by the perfect-square check.
        let big = BigInt::from(1_000_003u64) * BigInt::from(1_000_003u64) * BigInt::from(3);
        let s = Surd::with_bound(rat(0), rat(1), Rational::from_integer(big), 10);
        let t = Surd::new(rat(0), rat(1_000_003), rat(3));
        assert_eq!(s, t);
    }

    #[test]
    fn sign_and_order() {
        let s = Surd::new(rat(-2), ratio(3, 2), rat(2));
        assert_eq!(s.signum(), 1);
        assert!(s < Surd::from(ratio(1, 8)));
        assert!(s > Surd::from(ratio(1, 9)));
        let root19 = Surd::new(rat(-2), ratio(1, 2), rat(19));
        assert!(root19 > s);
        assert_eq!(Surd::new(rat(3), rat(-1), rat(9)).signum(), 0);
    }

    #[test]
    fn field_arithmetic_round_trips() {
        let x = Surd::new(rat(1), rat(2), rat(5));
        let y = Surd::new(ratio(-1, 3), rat(1), rat(5));
        let z = &(&x * &y) / &y;
        assert_eq!(z, x);
        assert!((&x - &x).is_zero());
        assert_eq!((&x * &x.recip()), Surd::from_int(1));
    }

    #[test]
    #[should_panic(expected = "incompatible radicands")]
    fn mixing_radicands_panics() {
        let _ = Surd::sqrt_of(rat(2)) + Surd::sqrt_of(rat(3));
    }

    #[test]
    fn display_is_symbolic() {
        assert_eq!(Surd::new(rat(-2), ratio(3, 2), rat(2)).to_string(), "-2+3/2√2");
        assert_eq!(Surd::sqrt_of(rat(2)).to_string(), "√2");
        assert_eq!(Surd::new(rat(0), rat(-2), rat(14)).to_string(), "-2√14");
        assert_eq!(Surd::from_int(16).to_string(), "16");
    }

    #[test]
    fn enclosure_contains_value() {
        let s = Surd::new(rat(-2), ratio(1, 2), rat(19));
        let w = ratio(1, 1_000_000_000_000);
        let e = s.enclose(&w);
        assert!(e.width() <= w);
        assert!(e.contains_surd(&s));
        assert!((s.to_f64() - 0.179449471770337).abs() < 1e-14);
    }
}
