//! Rational interval enclosures and certified bisection.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::rational::{self, Rational};
use super::surd::Surd;
use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` with rational endpoints.
///
/// Endpoints are exact, so arithmetic is exact interval arithmetic;
/// [`Enclosure::round_outward`] trades width for smaller denominators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    lo: Rational,
    hi: Rational,
}

impl Enclosure {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::Domain(format!("empty enclosure [{lo}, {hi}]")));
        }
        Ok(Enclosure { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        Enclosure {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / rational::rat(2)
    }

    pub fn mid_f64(&self) -> f64 {
        rational::to_f64(&self.mid())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_surd(&self, x: &Surd) -> bool {
        x.cmp_rational(&self.lo) != Ordering::Less && x.cmp_rational(&self.hi) != Ordering::Greater
    }

    pub fn overlaps(&self, other: &Enclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Sign of every point in the enclosure, if it is the same for all of them.
    pub fn certified_sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn shift(&self, by: &Rational) -> Enclosure {
        Enclosure {
            lo: &self.lo + by,
            hi: &self.hi + by,
        }
    }

    pub fn scale(&self, by: &Rational) -> Enclosure {
        let (a, b) = (&self.lo * by, &self.hi * by);
        if by.is_negative() {
            Enclosure { lo: b, hi: a }
        } else {
            Enclosure { lo: a, hi: b }
        }
    }

    pub fn add(&self, other: &Enclosure) -> Enclosure {
        Enclosure {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn mul(&self, other: &Enclosure) -> Enclosure {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().cloned().unwrap_or_default();
        let hi = products.iter().max().cloned().unwrap_or_default();
        Enclosure { lo, hi }
    }

    /// Widens to the nearest multiples of `2^-bits`.
    pub fn round_outward(&self, bits: u32) -> Enclosure {
        Enclosure {
            lo: rational::round_down(&self.lo, bits),
            hi: rational::round_up(&self.hi, bits),
        }
    }

    /// Enclosure of `√x` for rational `x >= 0`, width `<= width`.
    pub fn sqrt_of(x: &Rational, width: &Rational) -> Enclosure {
        assert!(!x.is_negative(), "sqrt of negative rational");
        let bits = rational::bits_for(width) + 1;
        Enclosure {
            lo: sqrt_floor(x, bits),
            hi: sqrt_floor(x, bits) + Rational::new(BigInt::one(), rational::pow2(bits)),
        }
    }

    /// Enclosure of `√y` over all `y` in `self` (requires `lo >= 0`).
    pub fn sqrt(&self, width: &Rational) -> Result<Enclosure> {
        if self.lo.is_negative() {
            return Err(Error::Domain(format!("sqrt of enclosure with lo = {}", self.lo)));
        }
        let bits = rational::bits_for(width) + 1;
        let ulp = Rational::new(BigInt::one(), rational::pow2(bits));
        let lo = sqrt_floor(&self.lo, bits);
        let hi = sqrt_floor(&self.hi, bits) + ulp;
        Ok(Enclosure { lo, hi })
    }
}

/// `floor(√x · 2^bits) / 2^bits`, a lower bound for `√x` within `2^-bits`.
fn sqrt_floor(x: &Rational, bits: u32) -> Rational {
    let scale = rational::pow2(bits);
    let scaled = rational::floor(&(x * Rational::from_integer(&scale * &scale)));
    Rational::new(scaled.sqrt(), scale)
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            rational::to_f64(&self.lo),
            rational::to_f64(&self.hi)
        )
    }
}

impl Serialize for Enclosure {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Enclosure", 4)?;
        st.serialize_field("lo", &self.lo.to_string())?;
        st.serialize_field("hi", &self.hi.to_string())?;
        st.serialize_field("lo_approx", &rational::to_f64(&self.lo))?;
        st.serialize_field("hi_approx", &rational::to_f64(&self.hi))?;
        st.end()
    }
}

/// Isolates a zero of `f` in `bracket` to width `<= precision`.
///
/// `f` returns an enclosure of its value at a rational point. The signs at
/// both ends must be certified and opposite; every midpoint sign must be
/// certified too, otherwise [`Error::Bracket`] is returned.
pub fn bisect_root<F>(f: F, bracket: &Enclosure, precision: &Rational) -> Result<Enclosure>
where
    F: Fn(&Rational) -> Enclosure,
{
    if !precision.is_positive() {
        return Err(Error::Domain(format!("precision must be positive, got {precision}")));
    }
    let sign_at = |x: &Rational| {
        f(x).certified_sign()
            .ok_or_else(|| Error::Bracket(format!("sign not certified at {}", rational::to_f64(x))))
    };
    let mut lo = bracket.lo.clone();
    let mut hi = bracket.hi.clone();
    let s_lo = sign_at(&lo)?;
    let s_hi = sign_at(&hi)?;
    if s_lo == 0 {
        return Ok(Enclosure::point(lo));
    }
    if s_hi == 0 {
        return Ok(Enclosure::point(hi));
    }
    if s_lo == s_hi {
        return Err(Error::Bracket(format!(
            "no sign change on [{}, {}]",
            rational::to_f64(&lo),
            rational::to_f64(&hi)
        )));
    }
    while &(&hi - &lo) > precision {
        let mid = (&lo + &hi) / rational::rat(2);
        match sign_at(&mid)? {
            0 => return Ok(Enclosure::point(mid)),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    Ok(Enclosure { lo, hi })
}
