//! Eigenvalue branches of the Laplacian of the canonical variations of the
//! three Hopf fibrations
//!
//! ```text
//! S¹ → S^{2n+1} → ℂPⁿ,   S³ → S^{4n+3} → ℍPⁿ,   S⁷ → S¹⁵ → S⁸(½)
//! ```
//!
//! Scaling the fibers by `t²` gives `Δ_t = Δ + (1/t² − 1)Δ_v`, so every
//! eigenvalue of `Δ_t` has the form `λ^{k,j}(t) = μ_k + (1/t² − 1)φ_j` where
//! `μ_k = k(k+m−1)` is a round-sphere eigenvalue and `φ_j = j(j+f−1)` a round
//! fiber eigenvalue. Only `0 <= j <= k` with `k − j` even can occur; a few of
//! those pairs are known to occur ([`Status::Certain`]), the rest are
//! [`Status::Candidate`].

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::rational::{self, rat, Rational};
use crate::numerics::{Enclosure, Surd};

/// Default upper bound on the total-space degree `k` an enumeration may visit.
pub const DEFAULT_K_MAX_LIMIT: u32 = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    /// `U(n+1)`-homogeneous metrics on `S^{2n+1}`.
    U,
    /// `Sp(n+1)`-homogeneous metrics on `S^{4n+3}`.
    Sp,
    /// `Spin(9)`-homogeneous metrics on `S¹⁵`.
    Spin9,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::U => "u",
            FamilyKind::Sp => "sp",
            FamilyKind::Spin9 => "spin9",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "u" => Ok(FamilyKind::U),
            "sp" => Ok(FamilyKind::Sp),
            "spin9" => Ok(FamilyKind::Spin9),
            other => Err(Error::Family(format!("unknown family {other:?} (expected u|sp|spin9)"))),
        }
    }
}

/// One of the three homogeneous families with its structural constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Family {
    kind: FamilyKind,
    n: Option<u32>,
}

impl Family {
    /// `n` is required for `U` and `Sp` and must be absent for `Spin9`.
    pub fn new(kind: FamilyKind, n: Option<u32>) -> Result<Self> {
        match (kind, n) {
            (FamilyKind::Spin9, Some(_)) => Err(Error::Family("spin9 takes no n".into())),
            (FamilyKind::Spin9, None) => Ok(Family { kind, n: None }),
            (_, None) => Err(Error::Family(format!("family {kind} requires n >= 1"))),
            (_, Some(0)) => Err(Error::Family(format!("family {kind} requires n >= 1, got 0"))),
            (_, Some(n)) => Ok(Family { kind, n: Some(n) }),
        }
    }

    pub fn u(n: u32) -> Result<Self> {
        Self::new(FamilyKind::U, Some(n))
    }

    pub fn sp(n: u32) -> Result<Self> {
        Self::new(FamilyKind::Sp, Some(n))
    }

    pub fn spin9() -> Self {
        Family {
            kind: FamilyKind::Spin9,
            n: None,
        }
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn n(&self) -> Option<u32> {
        self.n
    }

    fn n_u64(&self) -> u64 {
        u64::from(self.n.unwrap_or(0))
    }

    /// Total dimension `m`.
    pub fn dim(&self) -> u64 {
        let n = self.n_u64();
        match self.kind {
            FamilyKind::U => 2 * n + 1,
            FamilyKind::Sp => 4 * n + 3,
            FamilyKind::Spin9 => 15,
        }
    }

    pub fn fiber_dim(&self) -> u64 {
        match self.kind {
            FamilyKind::U => 1,
            FamilyKind::Sp => 3,
            FamilyKind::Spin9 => 7,
        }
    }

    /// `c` with `μ_k − φ_k = c·k` for all `k`; every branch satisfies `λ^{k,j}(t) >= c·k`.
    pub fn completeness_constant(&self) -> u64 {
        self.dim() - self.fiber_dim()
    }

    pub fn label(&self) -> String {
        match self.n {
            Some(n) => format!("{}(n={n})", self.kind),
            None => self.kind.to_string(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A fiber scale `t > 0`, stored exactly through `s = t²`.
///
/// `s` is a [`Surd`], so both rational `t` and the algebraic degeneracy values
/// are representable; `t` itself is kept when it is rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberScale {
    s: Surd,
    t: Option<Rational>,
}

impl FiberScale {
    pub fn from_t(t: Rational) -> Result<Self> {
        if !t.is_positive() {
            return Err(Error::Domain(format!("t must be positive, got {t}")));
        }
        Ok(FiberScale {
            s: Surd::rational(&t * &t),
            t: Some(t),
        })
    }

    /// Exact value of the double `t` (no rounding).
    pub fn from_t_f64(t: f64) -> Result<Self> {
        Self::from_t(rational::from_f64(t)?)
    }

    pub fn parse_t(text: &str) -> Result<Self> {
        Self::from_t(rational::parse_rational(text)?)
    }

    pub fn from_s(s: Surd) -> Result<Self> {
        if s.signum() <= 0 {
            return Err(Error::Domain(format!("s = t² must be positive, got {s}")));
        }
        let t = s.as_rational().and_then(exact_rational_sqrt);
        Ok(FiberScale { s, t })
    }

    pub fn one() -> Self {
        FiberScale {
            s: Surd::from_int(1),
            t: Some(rat(1)),
        }
    }

    pub fn s(&self) -> &Surd {
        &self.s
    }

    pub fn t(&self) -> Option<&Rational> {
        self.t.as_ref()
    }

    /// `1/t² − 1`, the coefficient of `φ_j` in a branch value.
    pub fn fiber_weight(&self) -> Surd {
        self.s.recip() - Surd::from_int(1)
    }

    pub fn t_enclosure(&self, width: &Rational) -> Enclosure {
        if let Some(t) = &self.t {
            return Enclosure::point(t.clone());
        }
        let mut w = width.clone();
        loop {
            let e = self
                .s
                .enclose(&w)
                .sqrt(&(width / rat(2)))
                .expect("s is positive");
            if &e.width() <= width {
                return e;
            }
            w /= rat(16);
        }
    }

    pub fn t_f64(&self) -> f64 {
        match &self.t {
            Some(t) => rational::to_f64(t),
            None => self.s.to_f64().sqrt(),
        }
    }
}

fn exact_rational_sqrt(r: &Rational) -> Option<Rational> {
    let root = Surd::sqrt_of(r.clone());
    root.as_rational().cloned()
}

/// Whether a branch is known to occur in the spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// `E_k^j` is known to be non-trivial.
    Certain,
    /// Admissible, but membership in the spectrum is not established.
    Candidate,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Certain => "certain",
            Status::Candidate => "candidate",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Multiplicity {
    Known(u128),
    Unknown,
}

impl Multiplicity {
    pub fn known(self) -> Option<u128> {
        match self {
            Multiplicity::Known(m) => Some(m),
            Multiplicity::Unknown => None,
        }
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Known(m) => write!(f, "{m}"),
            Multiplicity::Unknown => f.write_str("?"),
        }
    }
}

/// A candidate eigenvalue curve `λ^{k,j}(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SpectralBranch {
    pub k: u32,
    pub j: u32,
    pub status: Status,
    pub multiplicity: Multiplicity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub value: Surd,
    pub branch: SpectralBranch,
}

/// All admissible branch values `<= cutoff` at one fiber scale.
#[derive(Clone, Debug)]
pub struct SpectrumSlice {
    pub scale: FiberScale,
    pub cutoff: Rational,
    /// Sorted by value, ties by `(k, j)`.
    pub entries: Vec<SpectrumEntry>,
    pub k_max_used: u32,
}

impl SpectrumSlice {
    /// Smallest positive value over branches with status in `statuses`.
    pub fn min_positive(&self, statuses: &[Status]) -> Option<&SpectrumEntry> {
        self.entries
            .iter()
            .find(|e| e.value.signum() > 0 && statuses.contains(&e.branch.status))
    }
}

/// `k(k+m−1)`, the `k`-th eigenvalue of the round unit `m`-sphere.
pub fn sphere_eigenvalue(m: i64, k: i64) -> Result<u128> {
    if m <= 0 || k < 0 {
        return Err(Error::Domain(format!("sphere_eigenvalue needs m >= 1, k >= 0 (got m={m}, k={k})")));
    }
    let (m, k) = (m as u128, k as u128);
    Ok(k * (k + m - 1))
}

fn binomial_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut c = BigUint::one();
    for i in 0..k {
        c = c * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    c
}

fn to_count(x: BigUint, what: &'static str) -> Result<u128> {
    x.to_u128().ok_or(Error::Resource {
        what,
        required: u128::MAX,
        limit: u128::MAX,
    })
}

/// Multiplicity of `k(k+m−1)` on the round `m`-sphere: the dimension of
/// degree-`k` harmonic polynomials on `ℝ^{m+1}`.
pub fn sphere_multiplicity(m: i64, k: i64) -> Result<u128> {
    if m < 2 || k < 0 {
        return Err(Error::Domain(format!("sphere_multiplicity needs m >= 2, k >= 0 (got m={m}, k={k})")));
    }
    let (m, k) = (m as u64, k as u64);
    let all = binomial_big(m + k, k);
    let traces = if k >= 2 { binomial_big(m + k - 2, k - 2) } else { BigUint::zero() };
    to_count(all - traces, "sphere multiplicity")
}

/// `φ_j`: `j²`, `j(j+2)` or `j(j+6)` — the `j`-th eigenvalue of the round fiber.
pub fn fiber_eigenvalue(family: &Family, j: u32) -> u128 {
    let j = u128::from(j);
    j * (j + u128::from(family.fiber_dim()) - 1)
}

/// `μ_k = k(k+m−1)`.
pub fn total_eigenvalue(family: &Family, k: u32) -> u128 {
    let k = u128::from(k);
    k * (k + u128::from(family.dim()) - 1)
}

pub fn is_admissible(k: u32, j: u32) -> bool {
    j <= k && (k - j) % 2 == 0
}

fn check_admissible(k: u32, j: u32) -> Result<()> {
    if is_admissible(k, j) {
        Ok(())
    } else {
        Err(Error::Inadmissible {
            k: i64::from(k),
            j: i64::from(j),
        })
    }
}

fn status_of(family: &Family, k: u32, j: u32) -> Status {
    let certain = j == k
        || (j == 0 && k % 2 == 0)
        || (family.kind == FamilyKind::U && ((j == 1 && k % 2 == 1) || (j == 2 && k % 2 == 0)));
    if certain {
        Status::Certain
    } else {
        Status::Candidate
    }
}

/// All `j ∈ {k, k−2, …}` with their status, in that order.
pub fn admissible_pairs(family: &Family, k: u32) -> Vec<(u32, Status)> {
    (0..=k / 2)
        .map(|i| k - 2 * i)
        .map(|j| (j, status_of(family, k, j)))
        .collect()
}

fn multiplicity_of(family: &Family, k: u32, j: u32) -> Multiplicity {
    let n = u128::from(family.n.unwrap_or(0));
    match (family.kind, k, j) {
        (_, 0, 0) => Multiplicity::Known(1),
        (FamilyKind::U, 2, 0) => Multiplicity::Known(n * (n + 2)),
        (FamilyKind::U, 1, 1) => Multiplicity::Known(2 * (n + 1)),
        (FamilyKind::Sp, 1, 1) => Multiplicity::Known(4 * (n + 1)),
        (FamilyKind::Sp | FamilyKind::Spin9, k, 0) if k % 2 == 0 => base_multiplicity(family, k / 2)
            .map(Multiplicity::Known)
            .unwrap_or(Multiplicity::Unknown),
        _ => Multiplicity::Unknown,
    }
}

pub fn branch(family: &Family, k: u32, j: u32) -> Result<SpectralBranch> {
    check_admissible(k, j)?;
    Ok(SpectralBranch {
        k,
        j,
        status: status_of(family, k, j),
        multiplicity: multiplicity_of(family, k, j),
    })
}

fn big(x: u128) -> Surd {
    Surd::rational(Rational::from_integer(x.into()))
}

/// `λ^{k,j}(t) = μ_k + (1/t² − 1)φ_j`.
pub fn branch_value(family: &Family, k: u32, j: u32, scale: &FiberScale) -> Result<Surd> {
    check_admissible(k, j)?;
    Ok(branch_value_with_weight(family, k, j, &scale.fiber_weight()))
}

fn branch_value_with_weight(family: &Family, k: u32, j: u32, weight: &Surd) -> Surd {
    big(total_eigenvalue(family, k)) + weight * &big(fiber_eigenvalue(family, j))
}

/// Every admissible branch value `<= cutoff`, Certain and Candidate alike.
///
/// Visits `k <= ⌈Λ/c⌉`; since `λ^{k,j}(t) >= c·k` for every admissible pair
/// and every `t`, nothing below the cutoff is skipped.
pub fn enumerate_spectrum_below(family: &Family, scale: &FiberScale, cutoff: &Rational) -> Result<SpectrumSlice> {
    enumerate_spectrum_below_with_limit(family, scale, cutoff, DEFAULT_K_MAX_LIMIT)
}

pub fn enumerate_spectrum_below_with_limit(
    family: &Family,
    scale: &FiberScale,
    cutoff: &Rational,
    k_max_limit: u32,
) -> Result<SpectrumSlice> {
    if !cutoff.is_positive() {
        return Err(Error::Domain(format!("cutoff must be positive, got {cutoff}")));
    }
    let c = rat(family.completeness_constant() as i64);
    let required = rational::ceil(&(cutoff / c));
    let k_max = required
        .to_u32()
        .filter(|&k| k <= k_max_limit)
        .ok_or_else(|| Error::Resource {
            what: "k_max for spectrum enumeration",
            required: required.to_u128().unwrap_or(u128::MAX),
            limit: u128::from(k_max_limit),
        })?;
    let weight = scale.fiber_weight();
    // weight >= 0: values grow with j; weight < 0: values shrink with j
    let ascending = weight.signum() >= 0;
    let limit = Surd::rational(cutoff.clone());
    let mut entries = Vec::new();
    for k in 0..=k_max {
        let mut js: Vec<u32> = (0..=k / 2).map(|i| k - 2 * i).collect();
        if ascending {
            js.reverse();
        }
        for j in js {
            let value = branch_value_with_weight(family, k, j, &weight);
            if value > limit {
                break;
            }
            entries.push(SpectrumEntry {
                value,
                branch: SpectralBranch {
                    k,
                    j,
                    status: status_of(family, k, j),
                    multiplicity: multiplicity_of(family, k, j),
                },
            });
        }
    }
    entries.sort_by(|a, b| {
        a.value
            .cmp(&b.value)
            .then((a.branch.k, a.branch.j).cmp(&(b.branch.k, b.branch.j)))
    });
    Ok(SpectrumSlice {
        scale: scale.clone(),
        cutoff: cutoff.clone(),
        entries,
        k_max_used: k_max,
    })
}

/// `λ^{2q,0} = 2q(2q+m−1)`, the `q`-th eigenvalue of the base (constant in `t`).
pub fn base_eigenvalue(family: &Family, q: u32) -> u128 {
    total_eigenvalue(family, 2 * q)
}

/// Multiplicity of the `q`-th base eigenvalue, i.e. `dim E_{2q}^0`.
///
/// `Spin9`: the base is `S⁸(½)`, so this is the degree-`q` sphere multiplicity
/// on `S⁸`. `Sp`: the fiber-invariant degree-`2q` harmonics on `ℍ^{n+1}` form
/// the `Sp(n+1)`-module of highest weight `(q, q, 0, …)`; by Howe duality its
/// polynomial envelope has dimension `C(N+q−1, q)·C(N+q−2, q)/(q+1)` with
/// `N = 2n+2`, and the harmonic part is the difference of consecutive terms.
/// [`crate::numerics::invariant_harmonic_dimension`] checks this by rank.
pub fn base_multiplicity(family: &Family, q: u32) -> Result<u128> {
    match family.kind {
        FamilyKind::U => Err(Error::Unsupported(
            "base multiplicities of ℂPⁿ are only available through lambda1_multiplicity".into(),
        )),
        FamilyKind::Spin9 => sphere_multiplicity(8, i64::from(q)),
        FamilyKind::Sp => {
            if q == 0 {
                return Ok(1);
            }
            let two_n_plus_two = 2 * family.n_u64() + 2;
            let envelope = |q: u64| -> BigUint {
                binomial_big(two_n_plus_two + q - 1, q) * binomial_big(two_n_plus_two + q - 2, q)
                    / BigUint::from(q + 1)
            };
            let q = u64::from(q);
            to_count(envelope(q) - envelope(q - 1), "quaternionic base multiplicity")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::ratio;

    fn sp1() -> Family {
        Family::sp(1).unwrap()
    }

    #[test]
    fn descriptors() {
        let u = Family::u(3).unwrap();
        assert_eq!((u.dim(), u.fiber_dim(), u.completeness_constant()), (7, 1, 6));
        let sp = Family::sp(2).unwrap();
        assert_eq!((sp.dim(), sp.completeness_constant()), (11, 8));
        let s9 = Family::spin9();
        assert_eq!((s9.dim(), s9.fiber_dim(), s9.completeness_constant()), (15, 7, 8));
        assert!(matches!(Family::new(FamilyKind::Spin9, Some(1)), Err(Error::Family(_))));
        assert!(Family::new(FamilyKind::U, None).is_err());
        assert!(Family::u(0).is_err());
        assert_eq!("Spin9".parse::<FamilyKind>().unwrap(), FamilyKind::Spin9);
    }

    #[test]
    fn completeness_constant_identity() {
        for family in [Family::u(2).unwrap(), sp1(), Family::spin9()] {
            for k in 1..=50u32 {
                let diff = total_eigenvalue(&family, k) - fiber_eigenvalue(&family, k);
                assert_eq!(diff, u128::from(family.completeness_constant()) * u128::from(k));
            }
        }
    }

    #[test]
    fn sphere_eigenvalues() {
        assert_eq!(sphere_eigenvalue(3, 1).unwrap(), 3);
        assert_eq!(sphere_eigenvalue(15, 2).unwrap(), 32);
        assert_eq!(sphere_eigenvalue(8, 3).unwrap(), 30);
        assert!(sphere_eigenvalue(0, 1).is_err());
        assert!(sphere_eigenvalue(3, -1).is_err());
    }

    #[test]
    fn sphere_multiplicities() {
        assert_eq!(sphere_multiplicity(2, 1).unwrap(), 3);
        assert_eq!(sphere_multiplicity(8, 2).unwrap(), 44);
        assert_eq!(sphere_multiplicity(4, 2).unwrap(), 14);
        assert_eq!(sphere_multiplicity(4, 0).unwrap(), 1);
        assert!(sphere_multiplicity(1, 2).is_err());
    }

    #[test]
    fn fiber_eigenvalues() {
        assert_eq!(fiber_eigenvalue(&Family::u(1).unwrap(), 0), 0);
        assert_eq!(fiber_eigenvalue(&sp1(), 1), 3);
        assert_eq!(fiber_eigenvalue(&Family::spin9(), 2), 16);
    }

    #[test]
    fn admissible_pair_lists() {
        use Status::*;
        assert_eq!(admissible_pairs(&Family::u(1).unwrap(), 3), vec![(3, Certain), (1, Certain)]);
        assert_eq!(admissible_pairs(&sp1(), 4), vec![(4, Certain), (2, Candidate), (0, Certain)]);
        for f in [Family::u(1).unwrap(), sp1(), Family::spin9()] {
            assert_eq!(admissible_pairs(&f, 0), vec![(0, Certain)]);
        }
        assert_eq!(
            admissible_pairs(&Family::u(2).unwrap(), 4),
            vec![(4, Certain), (2, Certain), (0, Certain)]
        );
    }

    #[test]
    fn branch_values() {
        let one = FiberScale::one();
        assert_eq!(branch_value(&Family::u(1).unwrap(), 1, 1, &one).unwrap(), Surd::from_int(3));
        let t = FiberScale::parse_t("0.37").unwrap();
        assert_eq!(branch_value(&sp1(), 2, 0, &t).unwrap(), Surd::from_int(16));
        let half = FiberScale::parse_t("0.5").unwrap();
        assert_eq!(branch_value(&Family::spin9(), 1, 1, &half).unwrap(), Surd::from_int(36));
        assert!(matches!(branch_value(&sp1(), 2, 1, &one), Err(Error::Inadmissible { k: 2, j: 1 })));
        assert!(FiberScale::parse_t("0").is_err());
        assert!(FiberScale::parse_t("-1").is_err());
    }

    #[test]
    fn round_metric_spectrum() {
        let u1 = Family::u(1).unwrap();
        let slice = enumerate_spectrum_below(&u1, &FiberScale::one(), &rat(9)).unwrap();
        let mut values: Vec<Surd> = slice
            .entries
            .iter()
            .filter(|e| e.branch.status == Status::Certain)
            .map(|e| e.value.clone())
            .collect();
        values.dedup();
        assert_eq!(values, vec![Surd::from_int(0), Surd::from_int(3), Surd::from_int(8)]);
    }

    #[test]
    fn sp_slice_contains_base_branch() {
        let slice = enumerate_spectrum_below(&sp1(), &FiberScale::parse_t("0.3").unwrap(), &rat(20)).unwrap();
        let hit = slice
            .entries
            .iter()
            .find(|e| e.branch.k == 2 && e.branch.j == 0)
            .unwrap();
        assert_eq!(hit.value, Surd::from_int(16));
        assert_eq!(hit.branch.status, Status::Certain);
        assert_eq!(hit.branch.multiplicity, Multiplicity::Known(5));

        // brute force over k <= 5 finds the same set of values <= 20
        let scale = FiberScale::parse_t("0.3").unwrap();
        let mut brute = Vec::new();
        for k in 0..=5u32 {
            for j in 0..=k {
                if is_admissible(k, j) {
                    let v = branch_value(&sp1(), k, j, &scale).unwrap();
                    if v <= Surd::from_int(20) {
                        brute.push((k, j));
                    }
                }
            }
        }
        let mut found: Vec<(u32, u32)> = slice.entries.iter().map(|e| (e.branch.k, e.branch.j)).collect();
        found.sort();
        brute.sort();
        assert_eq!(found, brute);
    }

    #[test]
    fn u2_small_t_first_positive_is_base_branch() {
        let u2 = Family::u(2).unwrap();
        let slice = enumerate_spectrum_below(&u2, &FiberScale::parse_t("0.2").unwrap(), &rat(13)).unwrap();
        let first = slice.min_positive(&[Status::Certain]).unwrap();
        assert_eq!(first.value, Surd::from_int(12));
        assert_eq!((first.branch.k, first.branch.j), (2, 0));
    }

    #[test]
    fn enumeration_limit_is_reported() {
        let err = enumerate_spectrum_below_with_limit(&sp1(), &FiberScale::one(), &rat(10_000), 100).unwrap_err();
        assert!(matches!(err, Error::Resource { required: 2500, limit: 100, .. }));
    }

    #[test]
    fn base_values() {
        assert_eq!(base_eigenvalue(&sp1(), 1), 16);
        assert_eq!(base_eigenvalue(&Family::spin9(), 2), 72);
        assert_eq!(base_eigenvalue(&Family::u(4).unwrap(), 0), 0);
        assert_eq!(base_eigenvalue(&Family::u(2).unwrap(), 3), 4 * 3 * (3 + 2));
        assert_eq!(base_multiplicity(&sp1(), 1).unwrap(), 5);
        assert_eq!(base_multiplicity(&Family::spin9(), 1).unwrap(), 9);
        assert_eq!(base_multiplicity(&Family::sp(3).unwrap(), 0).unwrap(), 1);
        assert!(matches!(base_multiplicity(&Family::u(1).unwrap(), 1), Err(Error::Unsupported(_))));
    }

    #[test]
    fn scale_from_surd() {
        let s = Surd::new(rat(-2), ratio(3, 2), rat(2));
        let scale = FiberScale::from_s(s).unwrap();
        assert!(scale.t().is_none());
        let e = scale.t_enclosure(&ratio(1, 1_000_000_000_000));
        assert!((e.mid_f64() - 0.348311).abs() < 1e-6);
        let four = FiberScale::from_s(Surd::rational(ratio(9, 4))).unwrap();
        assert_eq!(four.t(), Some(&ratio(3, 2)));
        assert!(FiberScale::from_s(Surd::from_int(0)).is_err());
    }
}
