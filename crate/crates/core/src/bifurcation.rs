//! Degeneracy analysis along a family: where the threshold `scal/(m−1)`
//! meets a spectral branch, how the Morse index jumps there, and the
//! resulting rigid/bifurcation classification.
//!
//! Everything reduces to gap functions `gap(s) = p/s + r − C·s` in `s = t²`.
//! For `j >= 1` the gap has a single interior maximum, which is never
//! positive; for `j = 0` it is strictly decreasing, so its only zero is the
//! positive root of `C·s² − r·s − p`.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::ThresholdCoefficients;
use crate::numerics::quadratic::solve_quadratic_positive;
use crate::numerics::rational::{rat, ratio, Rational};
use crate::numerics::{bisect_root, Enclosure, Surd};
use crate::spectra::{
    base_multiplicity, enumerate_spectrum_below, fiber_eigenvalue, is_admissible, total_eigenvalue,
    FamilyKind, Family, FiberScale,
};

/// Default tolerance for matching a user-supplied `t` to a degeneracy value.
pub fn default_tolerance() -> Rational {
    ratio(1, 1_000_000_000)
}

/// Default width of verified enclosures.
pub fn default_precision() -> Rational {
    ratio(1, 1_000_000_000_000)
}

/// Upper bound on `q` visited when counting degeneracy values above a scale.
pub const DEFAULT_Q_LIMIT: u32 = 1_000_000;

/// `threshold(t) − λ^{k,j}(t) = p/s + r − C·s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapFunction {
    pub family: Family,
    pub k: u32,
    pub j: u32,
    /// `A − φ_j`
    pub p: Rational,
    /// `B − μ_k + φ_j`
    pub r: Rational,
    pub c: Rational,
}

fn int(x: u128) -> Rational {
    Rational::from_integer(x.into())
}

pub fn gap_function(family: &Family, k: u32, j: u32) -> Result<GapFunction> {
    if !is_admissible(k, j) {
        return Err(Error::Inadmissible {
            k: i64::from(k),
            j: i64::from(j),
        });
    }
    let coeffs = ThresholdCoefficients::of(family);
    let phi = int(fiber_eigenvalue(family, j));
    let mu = int(total_eigenvalue(family, k));
    Ok(GapFunction {
        family: *family,
        k,
        j,
        p: &coeffs.a - &phi,
        r: coeffs.b - mu + phi,
        c: coeffs.c,
    })
}

impl GapFunction {
    pub fn eval(&self, s: &Surd) -> Surd {
        s.recip().scale(&self.p) + Surd::rational(self.r.clone()) - s.scale(&self.c)
    }

    pub fn eval_rational(&self, s: &Rational) -> Rational {
        &self.p / s + &self.r - &self.c * s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalPoint {
    /// Maximizer `s* = √(−p/C)`.
    pub s: Surd,
    /// `gap(s*) = r − 2√(−pC)`.
    pub value: Surd,
}

/// The unique maximizer of a gap function with `p < 0`; `None` when `p >= 0`
/// (the gap is then strictly decreasing on `s > 0`).
pub fn gap_critical_point(gf: &GapFunction) -> Option<CriticalPoint> {
    if !gf.p.is_negative() {
        return None;
    }
    let s = Surd::sqrt_of(-&gf.p / &gf.c);
    let value = Surd::new(gf.r.clone(), rat(-2), -&gf.p * &gf.c);
    Some(CriticalPoint { s, value })
}

/// A parameter where the threshold is an eigenvalue.
#[derive(Clone, Debug, Serialize)]
pub struct DegeneracyValue {
    pub q: u32,
    /// Exact `s = t²`.
    pub s: Surd,
    /// Verified enclosure of `t`.
    pub t: Enclosure,
    /// Enclosure of `s` from bisection of the gap function.
    pub s_bisection: Enclosure,
    /// Branch meeting the threshold: `(2q, 0)`, or `(1, 1)` for the round metric.
    pub branch: (u32, u32),
    /// Change of the Morse index across this value.
    pub index_jump: u128,
}

impl DegeneracyValue {
    pub fn t_f64(&self) -> f64 {
        self.t.mid_f64()
    }

    pub fn scale(&self) -> FiberScale {
        FiberScale::from_s(self.s.clone()).expect("degeneracy values are positive")
    }
}

/// Trial-division bound for surds produced in hot loops; comparisons stay
/// exact without a fully reduced radicand.
const FAST_BOUND: u64 = 1;

fn degeneracy_surd_with_bound(family: &Family, q: u32, bound: u64) -> Result<Surd> {
    if q == 0 {
        return Ok(Surd::from_int(1));
    }
    let gf = gap_function(family, 2 * q, 0)?;
    // gap(s) = 0  ⇔  C·s² − r·s − p = 0
    let disc = &gf.r * &gf.r + rat(4) * &gf.c * &gf.p;
    if !gf.p.is_positive() {
        // p = 0 only for family U, where r < 0 for every q >= 1
        return solve_quadratic_positive(&gf.c, &-&gf.r, &-&gf.p).map_err(|e| match e {
            Error::NoPositiveRoot(msg) => Error::NoDegeneracy(format!(
                "{family}: gap of branch ({}, 0) has no positive zero ({msg})",
                2 * q
            )),
            other => other,
        });
    }
    if disc.is_zero() {
        return Err(Error::DoubleRoot(format!("{family}, q={q}")));
    }
    let two_c = rat(2) * &gf.c;
    Ok(Surd::with_bound(&gf.r / &two_c, Rational::from_integer(1.into()) / &two_c, disc, bound))
}

/// Exact `s_q = t_q²` as the positive root of the `(2q, 0)` gap function.
pub fn degeneracy_surd(family: &Family, q: u32) -> Result<Surd> {
    degeneracy_surd_with_bound(family, q, crate::numerics::surd::DEFAULT_SQUAREFREE_BOUND)
}

/// The printed closed form for `Sp(n+1)`:
/// `t_q² = ⅔(n−2qn−2q+2) − (q/3)(2q + 1/n + q/n) + √(18n + 4P²)/(6n)` with
/// `P = 4qn² − 2n² + 2q²n + 4qn − 4n + q² + q`.
pub fn sp_closed_form(n: u32, q: u32) -> Surd {
    let (n, q) = (i64::from(n), i64::from(q));
    let alpha = ratio(2, 3) * rat(n - 2 * q * n - 2 * q + 2)
        - ratio(q, 3) * (rat(2 * q) + ratio(1, n) + ratio(q, n));
    let p = 4 * q * n * n - 2 * n * n + 2 * q * q * n + 4 * q * n - 4 * n + q * q + q;
    let radicand = Rational::from_integer((18 * n).into()) + rat(4) * rat(p) * rat(p);
    Surd::new(alpha, ratio(1, 6 * n), radicand)
}

/// Closed form for `Spin(9)` derived from the `(2q, 0)` gap equation
/// `4s² + (4q² + 28q − 16)s − 3 = 0`:
/// `t_q² = 2 − 7q/2 − q²/2 + ½√(3 + (q²+7q−4)²)`.
pub fn spin9_closed_form(q: u32) -> Surd {
    let q = i64::from(q);
    let inner = q * q + 7 * q - 4;
    Surd::new(
        rat(2) - ratio(7 * q, 2) - ratio(q * q, 2),
        ratio(1, 2),
        rat(3 + inner * inner),
    )
}

/// The `Spin(9)` formula as typeset, with the radicand `3 + (q²+7q−4)` left
/// unsquared. Its value for `q >= 1` is negative, so it yields no real `t`.
pub fn spin9_printed_form(q: u32) -> Surd {
    let q = i64::from(q);
    Surd::new(
        rat(2) - ratio(7 * q, 2) - ratio(q * q, 2),
        ratio(1, 2),
        rat(3 + q * q + 7 * q - 4),
    )
}

fn bisect_gap(gf: &GapFunction, precision: &Rational) -> Result<Enclosure> {
    let gap = |s: &Rational| gf.eval_rational(s);
    let mut lo = rat(1);
    let mut guard = 0;
    while !gap(&lo).is_positive() {
        lo /= rat(2);
        guard += 1;
        if guard > 400 {
            return Err(Error::Bracket(format!("no positive gap near s = 0 for ({}, {})", gf.k, gf.j)));
        }
    }
    let mut hi = rat(1);
    guard = 0;
    while !gap(&hi).is_negative() {
        hi *= rat(2);
        guard += 1;
        if guard > 400 {
            return Err(Error::Bracket(format!("no negative gap for large s on ({}, {})", gf.k, gf.j)));
        }
    }
    let bracket = Enclosure::new(lo, hi)?;
    bisect_root(|s| Enclosure::point(gap(s)), &bracket, precision)
}

/// The `q`-th degeneracy value with its exact surd, verified `t`-enclosure of
/// width `<= precision`, and Morse-index jump.
///
/// The surd is cross-checked against an independent bisection of the gap
/// function and, for `Sp` and `Spin9`, against the closed forms.
pub fn degeneracy_value(family: &Family, q: u32, precision: &Rational) -> Result<DegeneracyValue> {
    if !precision.is_positive() {
        return Err(Error::Domain(format!("precision must be positive, got {precision}")));
    }
    if q == 0 {
        return Ok(DegeneracyValue {
            q,
            s: Surd::from_int(1),
            t: Enclosure::point(rat(1)),
            s_bisection: Enclosure::point(rat(1)),
            branch: (1, 1),
            index_jump: 0,
        });
    }
    let s = degeneracy_surd(family, q)?;
    let gf = gap_function(family, 2 * q, 0)?;
    let s_bisection = bisect_gap(&gf, precision)?;
    if !s_bisection.contains_surd(&s) {
        return Err(Error::Consistency(format!(
            "{family}, q={q}: root {s} outside bisection enclosure {s_bisection}"
        )));
    }
    let closed = match family.kind() {
        FamilyKind::Sp => Some(sp_closed_form(family.n().unwrap_or(1), q)),
        FamilyKind::Spin9 => Some(spin9_closed_form(q)),
        FamilyKind::U => None,
    };
    if let Some(closed) = closed {
        if closed != s {
            return Err(Error::Consistency(format!(
                "{family}, q={q}: closed form {closed} differs from root {s}"
            )));
        }
    }
    let scale = FiberScale::from_s(s.clone())?;
    Ok(DegeneracyValue {
        q,
        t: scale.t_enclosure(precision),
        s,
        s_bisection,
        branch: (2 * q, 0),
        index_jump: base_multiplicity(family, q)?,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DegeneracyTable {
    pub family: Family,
    /// Strictly decreasing in `t`, starting with `t₀ = 1`.
    pub values: Vec<DegeneracyValue>,
    /// `q` for which the `(2q, 0)` branch never meets the threshold.
    pub no_degeneracy: Vec<u32>,
}

/// `t₀ = 1 > t₁ > … > t_{q_max}`.
pub fn degeneracy_values(family: &Family, q_max: u32, precision: &Rational) -> Result<DegeneracyTable> {
    let mut values = Vec::new();
    let mut no_degeneracy = Vec::new();
    for q in 0..=q_max {
        match degeneracy_value(family, q, precision) {
            Ok(v) => values.push(v),
            Err(Error::NoDegeneracy(_)) => no_degeneracy.push(q),
            Err(e) => return Err(e),
        }
    }
    for pair in values.windows(2) {
        if pair[1].s >= pair[0].s {
            return Err(Error::Consistency(format!(
                "{family}: degeneracy values not decreasing at q={}",
                pair[1].q
            )));
        }
    }
    Ok(DegeneracyTable {
        family: *family,
        values,
        no_degeneracy,
    })
}

/// Morse index `N(g_t)`: the number of positive eigenvalues, with
/// multiplicity, strictly below the threshold.
///
/// Sums `m_q` over the degeneracy values `t_q > t`; at `t = t_q` itself the
/// `q`-th jump is not yet counted.
pub fn morse_index(family: &Family, scale: &FiberScale) -> Result<u128> {
    if family.kind() == FamilyKind::U {
        return Ok(0);
    }
    let mut total: u128 = 0;
    let mut previous: Option<Surd> = None;
    for q in 1..=DEFAULT_Q_LIMIT {
        let s_q = degeneracy_surd_with_bound(family, q, FAST_BOUND)?;
        if let Some(prev) = &previous {
            if s_q >= *prev {
                return Err(Error::Consistency(format!("{family}: s_{q} not below s_{}", q - 1)));
            }
        }
        if s_q.cmp(scale.s()) != Ordering::Greater {
            return Ok(total);
        }
        total = total
            .checked_add(base_multiplicity(family, q)?)
            .ok_or(Error::Resource {
                what: "Morse index",
                required: u128::MAX,
                limit: u128::MAX,
            })?;
        previous = Some(s_q);
    }
    Err(Error::Resource {
        what: "degeneracy values above t",
        required: u128::from(DEFAULT_Q_LIMIT) + 1,
        limit: u128::from(DEFAULT_Q_LIMIT),
    })
}

/// Independent Morse count from the enumerated spectrum: every admissible
/// branch strictly between 0 and the threshold must be a Certain `j = 0`
/// branch with known multiplicity, and the count is their sum.
pub fn morse_index_by_enumeration(family: &Family, scale: &FiberScale) -> Result<u128> {
    let theta = crate::families::threshold(family, scale);
    if theta.signum() <= 0 {
        return Ok(0);
    }
    let cutoff = Rational::from_integer(crate::numerics::rational::ceil(theta.enclose(&rat(1)).hi()));
    let slice = enumerate_spectrum_below(family, scale, &cutoff.max(rat(1)))?;
    let mut total = 0u128;
    for entry in &slice.entries {
        if entry.value.signum() <= 0 || entry.value >= theta {
            continue;
        }
        let b = entry.branch;
        if b.j != 0 {
            return Err(Error::Consistency(format!(
                "{family}: branch ({}, {}) with j >= 1 lies below the threshold",
                b.k, b.j
            )));
        }
        total += b.multiplicity.known().ok_or_else(|| {
            Error::Unsupported(format!("multiplicity of branch ({}, 0) is not known", b.k))
        })?;
    }
    Ok(total)
}

/// One constant piece `[lower, upper) → index` of the Morse index.
#[derive(Clone, Debug, Serialize)]
pub struct MorsePiece {
    /// `q` of the lower endpoint `t_q`; `None` means the piece reaches `t → 0`.
    pub lower_q: Option<u32>,
    pub lower_t: Option<Enclosure>,
    /// `q` of the upper endpoint; `None` means `t → ∞`.
    pub upper_q: Option<u32>,
    pub upper_t: Option<Enclosure>,
    pub index: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct MorseProfile {
    pub family: Family,
    /// Ordered by decreasing `t`.
    pub pieces: Vec<MorsePiece>,
}

/// Pieces `[t₁, ∞) → 0`, `[t₂, t₁) → m₁`, …, `[t_{q_max+1}, t_{q_max}) → N_{q_max}`.
pub fn morse_profile(family: &Family, q_max: u32, precision: &Rational) -> Result<MorseProfile> {
    if family.kind() == FamilyKind::U {
        return Ok(MorseProfile {
            family: *family,
            pieces: vec![MorsePiece {
                lower_q: None,
                lower_t: None,
                upper_q: None,
                upper_t: None,
                index: 0,
            }],
        });
    }
    let table = degeneracy_values(family, q_max + 1, precision)?;
    let by_q = |q: u32| table.values.iter().find(|v| v.q == q);
    let mut pieces = Vec::new();
    let mut index = 0u128;
    for r in 0..=q_max {
        if r > 0 {
            index += by_q(r).map(|v| v.index_jump).unwrap_or(0);
        }
        let lower = by_q(r + 1);
        let upper = if r == 0 { None } else { by_q(r) };
        pieces.push(MorsePiece {
            lower_q: lower.map(|v| v.q),
            lower_t: lower.map(|v| v.t.clone()),
            upper_q: upper.map(|v| v.q),
            upper_t: upper.map(|v| v.t.clone()),
            index,
        });
    }
    Ok(MorseProfile {
        family: *family,
        pieces,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Classification {
    /// Not within tolerance of any degeneracy value.
    LocallyRigid,
    /// Within tolerance of `t = 1`, where the round metric's conformal class
    /// contains a whole manifold of constant-scalar-curvature metrics.
    TrivialBifurcation,
    /// Within tolerance of `t_q`, where the Morse index jumps; bifurcating
    /// metrics are never homogeneous.
    Bifurcation {
        q: u32,
        index_jump: u128,
        breaks_symmetry: bool,
    },
    /// Within tolerance of `t_q` only for part of the input's enclosure, or
    /// the jump could not be certified.
    Undetermined { q: u32, reason: String },
}

enum Proximity {
    Within,
    Outside,
    Ambiguous,
}

fn proximity(t: &Enclosure, target: &Enclosure, tolerance: &Rational) -> Proximity {
    // sup |t − target| and inf |t − target|
    let far = (t.hi() - target.lo()).abs().max((target.hi() - t.lo()).abs());
    let near = if t.overlaps(target) {
        Rational::zero()
    } else if t.hi() < target.lo() {
        target.lo() - t.hi()
    } else {
        t.lo() - target.hi()
    };
    if &far <= tolerance {
        Proximity::Within
    } else if &near > tolerance {
        Proximity::Outside
    } else {
        Proximity::Ambiguous
    }
}

/// Locally rigid vs. bifurcation at `t`, matching `t` to a degeneracy value
/// when it lies within `tolerance` of one.
pub fn classify(family: &Family, scale: &FiberScale, tolerance: &Rational) -> Result<Classification> {
    if !tolerance.is_positive() {
        return Err(Error::Domain(format!("tolerance must be positive, got {tolerance}")));
    }
    let width = tolerance / rat(1000);
    let t = scale.t_enclosure(&width);
    match proximity(&t, &Enclosure::point(rat(1)), tolerance) {
        Proximity::Within => return Ok(Classification::TrivialBifurcation),
        Proximity::Ambiguous => {
            return Ok(Classification::Undetermined {
                q: 0,
                reason: "t is at the tolerance boundary of t₀ = 1".into(),
            })
        }
        Proximity::Outside => {}
    }
    if family.kind() == FamilyKind::U {
        return Ok(Classification::LocallyRigid);
    }
    for q in 1..=DEFAULT_Q_LIMIT {
        let s_q = degeneracy_surd(family, q)?;
        let t_q = FiberScale::from_s(s_q)?.t_enclosure(&width);
        if t_q.hi() + tolerance < *t.lo() {
            break;
        }
        match proximity(&t, &t_q, tolerance) {
            Proximity::Within => {
                let jump = base_multiplicity(family, q)?;
                return Ok(if jump > 0 {
                    Classification::Bifurcation {
                        q,
                        index_jump: jump,
                        breaks_symmetry: true,
                    }
                } else {
                    Classification::Undetermined {
                        q,
                        reason: "Morse index jump is zero".into(),
                    }
                });
            }
            Proximity::Ambiguous => {
                return Ok(Classification::Undetermined {
                    q,
                    reason: format!("t is at the tolerance boundary of t_{q}"),
                })
            }
            Proximity::Outside => {}
        }
    }
    Ok(Classification::LocallyRigid)
}
