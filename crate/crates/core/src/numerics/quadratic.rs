use num_traits::{One, Signed, Zero};

use super::rational::{rat, Rational};
use super::surd::Surd;
use crate::error::{Error, Result};

/// The unique positive root of `a·s² + b·s + c` as an exact surd.
///
/// Requires `a > 0`. The root must be unique among positive reals: either
/// `c < 0`, or `c = 0` with `b < 0`. A double root or a pair of positive roots
/// is reported instead of resolved.
pub fn solve_quadratic_positive(a: &Rational, b: &Rational, c: &Rational) -> Result<Surd> {
    if !a.is_positive() {
        return Err(Error::Domain(format!("leading coefficient must be positive, got {a}")));
    }
    let disc = b * b - rat(4) * a * c;
    if disc.is_zero() {
        return Err(Error::DoubleRoot(format!("{}", -b / (rat(2) * a))));
    }
    if disc.is_negative() {
        return Err(Error::NoPositiveRoot(format!("negative discriminant {disc}")));
    }
    let unique = c.is_negative() || (c.is_zero() && b.is_negative());
    if !unique {
        return Err(Error::NoPositiveRoot(format!(
            "{a}·s² + {b}·s + {c} has no positive root or two of them"
        )));
    }
    let two_a = rat(2) * a;
    let root = Surd::new(-b / &two_a, Rational::one() / &two_a, disc);
    debug_assert!(root.signum() > 0);
    Ok(root)
}

/// `a·s² + b·s + c` evaluated exactly at `s`.
pub fn eval_quadratic(a: &Rational, b: &Rational, c: &Rational, s: &Surd) -> Surd {
    let a = Surd::from(a.clone());
    let b = Surd::from(b.clone());
    let c = Surd::from(c.clone());
    &(&(&a * s) + &b) * s + c
}
