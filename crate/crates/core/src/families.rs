//! Closed-form geometry of the three families: scalar curvature, the
//! degeneracy threshold `scal/(m−1)`, and the first positive eigenvalue.
//!
//! All values are unnormalized (no unit-volume rescaling); homotheties scale
//! `Δ` and `scal` by the same factor, so signs and orderings are unaffected.

use crate::error::{Error, Result};
use crate::numerics::rational::{self, rat, ratio, Rational};
use crate::numerics::Surd;
use crate::spectra::{
    enumerate_spectrum_below, FamilyKind, Family, FiberScale, Multiplicity, Status,
};

/// `scal(g_t)/(m−1) = A/s + B − C·s` with `s = t²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdCoefficients {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl ThresholdCoefficients {
    pub fn of(family: &Family) -> Self {
        let n = i64::from(family.n().unwrap_or(0));
        match family.kind() {
            FamilyKind::U => ThresholdCoefficients {
                a: rat(0),
                b: rat(2 * n + 2),
                c: rat(1),
            },
            FamilyKind::Sp => ThresholdCoefficients {
                a: ratio(3, 2 * n + 1),
                b: ratio(8 * n * (n + 2), 2 * n + 1),
                c: ratio(6 * n, 2 * n + 1),
            },
            FamilyKind::Spin9 => ThresholdCoefficients {
                a: rat(3),
                b: rat(16),
                c: rat(4),
            },
        }
    }

    pub fn eval(&self, s: &Surd) -> Surd {
        s.recip().scale(&self.a) + Surd::rational(self.b.clone()) - s.scale(&self.c)
    }
}

/// Scalar curvature of `g_t`:
///
/// * `U`: `2n(2n+2−t²)`
/// * `Sp`: `2(3/t² + 8n(n+2) − 6n t²)`
/// * `Spin9`: `14(3/t² + 16 − 4t²)`
pub fn scalar_curvature(family: &Family, scale: &FiberScale) -> Surd {
    let s = scale.s();
    let n = i64::from(family.n().unwrap_or(0));
    let k = |x: i64| Surd::from_int(x);
    match family.kind() {
        FamilyKind::U => k(2 * n) * (k(2 * n + 2) - s),
        FamilyKind::Sp => k(2) * (s.recip().scale(&rat(3)) + k(8 * n * (n + 2)) - s.scale(&rat(6 * n))),
        FamilyKind::Spin9 => k(14) * (s.recip().scale(&rat(3)) + k(16) - s.scale(&rat(4))),
    }
}

/// `scal(g_t)/(m−1)`: the value eigenvalues are compared against.
pub fn threshold(family: &Family, scale: &FiberScale) -> Surd {
    scalar_curvature(family, scale).scale(&ratio(1, family.dim() as i64 - 1))
}

/// Value of `s = t²` where the two pieces of `λ₁` meet.
///
/// For `Sp` this is `3/(4(n+2))`, i.e. `t = √3/(2√(n+2))`, the solution of
/// `8(1+n) = 4n + 3/s`.
pub fn lambda1_breakpoint(family: &Family) -> Rational {
    let n = i64::from(family.n().unwrap_or(0));
    match family.kind() {
        FamilyKind::U => ratio(1, 2 * (2 + n)),
        FamilyKind::Sp => ratio(3, 4 * (2 + n)),
        FamilyKind::Spin9 => ratio(7, 24),
    }
}

/// The two pieces of `λ₁`: the base branch `λ^{2,0}` (constant) and the
/// fiber branch `λ^{1,1}(t)`.
pub fn lambda1_pieces(family: &Family, scale: &FiberScale) -> (Surd, Surd) {
    let n = i64::from(family.n().unwrap_or(0));
    let inv = scale.s().recip();
    match family.kind() {
        FamilyKind::U => (Surd::from_int(4 * (1 + n)), Surd::from_int(2 * n) + inv),
        FamilyKind::Sp => (Surd::from_int(8 * (1 + n)), Surd::from_int(4 * n) + inv.scale(&rat(3))),
        FamilyKind::Spin9 => (Surd::from_int(32), Surd::from_int(8) + inv.scale(&rat(7))),
    }
}

/// Closed form of the first positive eigenvalue, without the enumeration check.
pub fn lambda1_closed_form(family: &Family, scale: &FiberScale) -> Surd {
    let (base, fiber) = lambda1_pieces(family, scale);
    base.min(fiber)
}

/// First positive eigenvalue of `Δ_t`.
///
/// The closed form is returned only after an exhaustive enumeration confirms
/// it is attained on a Certain branch and that no admissible branch (Certain
/// or Candidate) lies strictly between 0 and it.
pub fn lambda1(family: &Family, scale: &FiberScale) -> Result<Surd> {
    let closed = lambda1_closed_form(family, scale);
    let cutoff = Rational::from_integer(rational::ceil(closed.enclose(&rat(1)).hi())) + rat(1);
    let slice = enumerate_spectrum_below(family, scale, &cutoff)?;
    let certain_min = slice
        .min_positive(&[Status::Certain])
        .ok_or_else(|| Error::Consistency(format!("no certain eigenvalue below {cutoff} for {family}")))?;
    if certain_min.value != closed {
        return Err(Error::Consistency(format!(
            "{family}: closed-form λ₁ = {closed} but enumeration minimum is {} on ({}, {})",
            certain_min.value, certain_min.branch.k, certain_min.branch.j
        )));
    }
    if let Some(e) = slice.min_positive(&[Status::Certain, Status::Candidate]) {
        if e.value < closed {
            return Err(Error::Consistency(format!(
                "{family}: admissible branch ({}, {}) = {} lies below λ₁ = {closed}",
                e.branch.k, e.branch.j, e.value
            )));
        }
    }
    Ok(closed)
}

/// Multiplicity of `λ₁`, known for `U` and `Sp` only.
pub fn lambda1_multiplicity(family: &Family, scale: &FiberScale) -> Multiplicity {
    let n = u128::from(family.n().unwrap_or(0));
    let (below, at, above) = match family.kind() {
        FamilyKind::U => (n * (n + 2), n * n + 4 * n + 2, 2 * (n + 1)),
        FamilyKind::Sp => (n * (2 * n + 3), 2 * n * n + 7 * n + 4, 4 * (n + 1)),
        FamilyKind::Spin9 => return Multiplicity::Unknown,
    };
    let m = match scale.s().cmp_rational(&lambda1_breakpoint(family)) {
        std::cmp::Ordering::Less => below,
        std::cmp::Ordering::Equal => at,
        std::cmp::Ordering::Greater => above,
    };
    Multiplicity::Known(m)
}

/// Coefficient of `‖ψ‖²` in the second variation of the normalized total
/// scalar curvature along an eigenfunction `ψ` with `Δ_t ψ = λψ`:
/// `(m−2)/2 · ((m−1)λ − scal(g_t))`.
///
/// Negative exactly when `λ` is below the threshold, zero at a degeneracy.
pub fn second_variation_coefficient(family: &Family, scale: &FiberScale, lambda: &Surd) -> Surd {
    let m = family.dim() as i64;
    let inner = lambda.scale(&rat(m - 1)) - scalar_curvature(family, scale);
    inner.scale(&ratio(m - 2, 2))
}
