//! Cross-checks of every closed form against an independent oracle.
//!
//! Each check enumerates its cases, records failures as messages, and never
//! panics; [`verify`] collects them into a serializable report.

use std::time::Instant;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bifurcation::{
    degeneracy_value, degeneracy_values, gap_critical_point, gap_function, morse_index, morse_index_by_enumeration,
    morse_profile, sp_closed_form, spin9_closed_form, spin9_printed_form, DegeneracyValue,
};
use crate::error::Result;
use crate::families::{
    lambda1, lambda1_breakpoint, lambda1_closed_form, lambda1_multiplicity, lambda1_pieces,
    second_variation_coefficient, threshold,
};
use crate::numerics::harmonic::{harmonic_dimension_by_rank, invariant_harmonic_dimension, DEFAULT_MONOMIAL_LIMIT};
use crate::numerics::rational::{rat, ratio, Rational};
use crate::numerics::Surd;
use crate::spectra::{
    base_eigenvalue, base_multiplicity, branch, branch_value, enumerate_spectrum_below, is_admissible,
    sphere_multiplicity, total_eigenvalue, Family, FamilyKind, FiberScale, Multiplicity, Status,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Failure messages kept per check.
const MAX_REPORTED_FAILURES: usize = 20;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Largest `n` for the `λ₁` and Morse sweeps.
    pub n_max: u32,
    pub lambda1_samples: usize,
    pub q_max: u32,
    /// Largest `n` for the `Sp` degeneracy closed form.
    pub degeneracy_n_max: u32,
    pub noncrossing_n_max: u32,
    pub noncrossing_k_max: u32,
    pub rigidity_n_max: u32,
    pub morse_samples: usize,
    /// Sphere-multiplicity oracle runs over `2 <= m <= sphere_m_max`, `k <= sphere_k_max`.
    pub sphere_m_max: i64,
    pub sphere_k_max: i64,
    pub precision: Rational,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 5,
            lambda1_samples: 200,
            q_max: 20,
            degeneracy_n_max: 5,
            noncrossing_n_max: 4,
            noncrossing_k_max: 40,
            rigidity_n_max: 10,
            morse_samples: 100,
            sphere_m_max: 10,
            sphere_k_max: 6,
            precision: crate::bifurcation::default_precision(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub failure_count: usize,
    pub failures: Vec<String>,
    pub seconds: f64,
}

/// Printed vs. corrected `Spin9` degeneracy formula at one `q`.
#[derive(Clone, Debug, Serialize)]
pub struct TqkRow {
    pub q: u32,
    /// `s = t²` from the corrected form, equal to the root of the gap equation.
    pub corrected: Surd,
    pub corrected_t: f64,
    pub printed: Surd,
    /// `None` when the printed `s` is not positive.
    pub printed_t: Option<f64>,
    pub deviation: f64,
    pub deviates: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub tqk_comparison: Vec<TqkRow>,
    pub seconds: f64,
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn case(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    fn result<T>(&mut self, r: Result<T>, context: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.cases += 1;
                self.failures.push(format!("{}: {e}", context()));
                None
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self
    }

    fn finish(self, name: &'static str, started: Instant) -> Check {
        let failure_count = self.failures.len();
        let mut failures = self.failures;
        failures.truncate(MAX_REPORTED_FAILURES);
        Check {
            name,
            passed: failure_count == 0,
            cases: self.cases,
            failure_count,
            failures,
            seconds: started.elapsed().as_secs_f64(),
        }
    }
}

fn families(n_max: u32) -> Vec<Family> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.push(Family::u(n).expect("n >= 1"));
    }
    for n in 1..=n_max {
        out.push(Family::sp(n).expect("n >= 1"));
    }
    out.push(Family::spin9());
    out
}

/// Degeneracy-bearing families: `Sp` with `n <= n_max`, and `Spin9`.
fn quotient_families(n_max: u32) -> Vec<Family> {
    families(n_max).into_iter().filter(|f| f.kind() != FamilyKind::U).collect()
}

/// `count` log-spaced exact scales in `[lo, hi]`.
pub fn log_spaced(lo: f64, hi: f64, count: usize) -> Vec<FiberScale> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..count)
        .map(|i| {
            let x = if count == 1 { a } else { a + (b - a) * i as f64 / (count - 1) as f64 };
            FiberScale::from_t_f64(x.exp()).expect("positive finite t")
        })
        .collect()
}

fn par_tally<T: Sync>(items: &[T], f: impl Fn(&T, &mut Tally) + Sync) -> Tally {
    items
        .par_iter()
        .map(|item| {
            let mut tally = Tally::default();
            f(item, &mut tally);
            tally
        })
        .reduce(Tally::default, Tally::merge)
}

fn check_lambda1(config: &VerifyConfig) -> Check {
    let started = Instant::now();
    let scales = log_spaced(1e-2, 1e2, config.lambda1_samples);
    let cases: Vec<(Family, FiberScale)> = families(config.n_max)
        .into_iter()
        .flat_map(|f| scales.iter().map(move |s| (f, s.clone())))
        .collect();
    par_tally(&cases, |(family, scale), tally| {
        let ctx = || format!("{family} at t = {}", scale.t_f64());
        // lambda1 itself compares against the exhaustive enumeration
        if let Some(value) = tally.result(lambda1(family, scale), ctx) {
            tally.case(value == lambda1_closed_form(family, scale), ctx);
        }
    })
    .finish("lambda1_closed_form_vs_enumeration", started)
}

/// Sum of known multiplicities of Certain branches at `value`, or `None` if
/// any of them is unknown.
fn multiplicity_at(family: &Family, scale: &FiberScale, value: &Surd) -> Result<Option<u128>> {
    let cutoff = Rational::from_integer(crate::numerics::rational::ceil(value.enclose(&rat(1)).hi())) + rat(1);
    let slice = enumerate_spectrum_below(family, scale, &cutoff)?;
    let mut total = 0u128;
    for e in slice.entries.iter().filter(|e| &e.value == value) {
        match (e.branch.status, e.branch.multiplicity) {
            (Status::Certain, Multiplicity::Known(m)) => total += m,
            _ => return Ok(None),
        }
    }
    Ok(Some(total))
}

fn check_breakpoints(config: &VerifyConfig) -> Check {
    let started = Instant::now();
    let mut tally = Tally::default();
    for family in families(config.n_max) {
        let b = lambda1_breakpoint(&family);
        let at = FiberScale::from_s(Surd::rational(b.clone())).expect("positive");
        let (base, fiber) = lambda1_pieces(&family, &at);
        tally.case(base == fiber, || format!("{family}: pieces differ at breakpoint ({base} vs {fiber})"));
        let below = FiberScale::from_s(Surd::rational(&b * ratio(999, 1000))).expect("positive");
        let above = FiberScale::from_s(Surd::rational(&b * ratio(1001, 1000))).expect("positive");
        let (base_lo, fiber_lo) = lambda1_pieces(&family, &below);
        let (base_hi, fiber_hi) = lambda1_pieces(&family, &above);
        tally.case(base_lo < fiber_lo && fiber_hi < base_hi, || {
            format!("{family}: pieces do not swap at the breakpoint")
        });
        if family.kind() == FamilyKind::Spin9 {
            tally.case(lambda1_multiplicity(&family, &at) == Multiplicity::Unknown, || {
                format!("{family}: multiplicity should be unknown")
            });
            continue;
        }
        for scale in [&below, &at, &above] {
            let ctx = || format!("{family} at s = {}", scale.s());
            let Some(value) = tally.result(lambda1(&family, scale), ctx) else {
                continue;
            };
            let Some(count) = tally.result(multiplicity_at(&family, scale, &value), ctx) else {
                continue;
            };
            let claimed = lambda1_multiplicity(&family, scale).known();
            tally.case(count.is_some() && count == claimed, || {
                format!("{family} at s = {}: multiplicity {claimed:?} vs branch sum {count:?}", scale.s())
            });
        }
    }
    // the three-case table for U with n = 1
    let u1 = Family::u(1).expect("n >= 1");
    let table: Vec<Option<u128>> = [ratio(1, 12), ratio(1, 6), ratio(1, 3)]
        .into_iter()
        .map(|s| lambda1_multiplicity(&u1, &FiberScale::from_s(Surd::rational(s)).expect("positive")).known())
        .collect();
    tally.case(table == [Some(3), Some(7), Some(4)], || format!("U(2) multiplicities {table:?}"));
    tally.finish("lambda1_breakpoints_and_multiplicities", started)
}

fn degeneracy_cases(config: &VerifyConfig) -> Vec<(Family, u32)> {
    quotient_families(config.degeneracy_n_max)
        .into_iter()
        .flat_map(|f| (0..=config.q_max).map(move |q| (f, q)))
        .collect()
}

fn within(a: &Surd, b: &Surd, tol: &Rational) -> bool {
    let w = tol / rat(8);
    let diff = a.enclose(&w).add(&b.enclose(&w).scale(&rat(-1)));
    diff.lo().abs() <= *tol && diff.hi().abs() <= *tol
}

fn check_degeneracy_closed_forms(config: &VerifyConfig) -> Check {
    let started = Instant::now();
    let tol = ratio(1, 10_000_000_000);
    let mut tally = par_tally(&degeneracy_cases(config), |(family, q), tally| {
        let ctx = || format!("{family}, q = {q}");
        // degeneracy_value cross-checks the surd root against bisection
        let Some(v) = tally.result(degeneracy_value(family, *q, &config.precision), ctx) else {
            return;
        };
        if *q == 0 {
            tally.case(v.t.lo() == &rat(1) && v.t.hi() == &rat(1), || format!("{family}: t₀ ≠ 1"));
            return;
        }
        let closed = match family.kind() {
            FamilyKind::Sp => sp_closed_form(family.n().unwrap_or(1), *q),
            _ => spin9_closed_form(*q),
        };
        tally.case(within(&closed, &v.s, &tol), || format!("{}: closed form {closed} vs root {}", ctx(), v.s));
        tally.case(v.s_bisection.contains_surd(&closed), || format!("{}: bisection misses closed form", ctx()));
        tally.case(v.t.width() <= config.precision && v.t.contains_surd(&Surd::rational(v.t.mid())), || {
            format!("{}: t enclosure wider than precision", ctx())
        });
    });
    for family in quotient_families(config.degeneracy_n_max) {
        let r = degeneracy_values(&family, config.q_max, &config.precision);
        tally.case(r.is_ok(), || format!("{family}: degeneracy sequence {:?}", r.err()));
    }
    tally.finish("degeneracy_closed_forms_vs_root", started)
}

pub fn tqk_comparison(q_max: u32) -> Vec<TqkRow> {
    (1..=q_max)
        .map(|q| {
            let corrected = spin9_closed_form(q);
            let printed = spin9_printed_form(q);
            let printed_t = (printed.signum() > 0).then(|| printed.to_f64().sqrt());
            let deviation = corrected.to_f64() - printed.to_f64();
            TqkRow {
                q,
                corrected_t: corrected.to_f64().sqrt(),
                deviates: !within(&corrected, &printed, &ratio(1, 10_000_000_000)),
                corrected,
                printed,
                printed_t,
                deviation,
            }
        })
        .collect()
}

fn check_tqk(rows: &[TqkRow]) -> Check {
    let started = Instant::now();
    let mut tally = Tally::default();
    let spin9 = Family::spin9();
    for row in rows {
        tally.case(row.deviates, || format!("q = {}: printed form agrees with the root", row.q));
        let root = crate::bifurcation::degeneracy_surd(&spin9, row.q);
        tally.case(root.as_ref().ok() == Some(&row.corrected), || {
            format!("q = {}: corrected form is not the gap root", row.q)
        });
    }
    tally.finish("spin9_printed_vs_corrected", started)
}

fn check_u_rigidity(config: &VerifyConfig) -> Check {
    let started = Instant::now();
    let mut tally = Tally::default();
    let mut grid = log_spaced(1e-2, 1e2, 101);
    grid.push(FiberScale::one());
    for n in 1..=config.rigidity_n_max {
        let family = Family::u(n).expect("n >= 1");
        // symbolic: the (1,1) piece touches only at s = 1, the (2,0) piece never
        if let Some(g) = tally.result(gap_function(&family, 1, 1), || format!("{family} (1,1)")) {
            let cp = gap_critical_point(&g);
            tally.case(
                cp.as_ref().is_some_and(|c| c.value.is_zero() && c.s == Surd::from_int(1)),
                || format!("{family}: (1,1) gap maximum is not 0 at s = 1"),
            );
        }
        if let Some(g) = tally.result(gap_function(&family, 2, 0), || format!("{family} (2,0)")) {
            tally.case(g.p.is_zero() && g.r.is_negative(), || {
                format!("{family}: (2,0) gap p = {}, r = {}", g.p, g.r)
            });
        }
        for scale in &grid {
            let theta = threshold(&family, scale);
            let l1 = lambda1_closed_form(&family, scale);
            let is_one = scale.s() == &Surd::from_int(1);
            tally.case(theta < l1 || (is_one && theta == l1), || {
                format!("{family} at t = {}: threshold {theta} vs λ₁ {l1}", scale.t_f64())
            });
            let idx = morse_index(&family, scale);
            tally.case(matches!(idx, Ok(0)), || format!("{family} at t = {}: index {idx:?}", scale.t_f64()));
        }
    }
    tally.finish("u_family_rigidity", started)
}

fn check_non_crossing(config: &VerifyConfig) -> Check {
    let started = Instant::now();
    let mut cases = Vec::new();
    for family in families(config.noncrossing_n_max) {
        for k in 1..=config.noncrossing_k_max {
            for j in 1..=k {
                if is_admissible(k, j) {
                    cases.push((family, k, j));
                }
            }
        }
    }
    par_tally(&cases, |(family, k, j), tally| {
        let ctx = || format!("{family} ({k},{j})");
        let Some(g) = tally.result(gap_function(family, *k, *j), ctx) else {
            return;
        };
        let Some(cp) = gap_critical_point(&g) else {
            tally.case(false, || format!("{}: p = {} is not negative", ctx(), g.p));
            return;
        };
        let ok = if (*k, *j) == (1, 1) {
            cp.value.is_zero() && cp.s == Surd::from_int(1)
        } else {
            cp.value.signum() < 0
        };
        tally.case(ok, || format!("{}: maximum {} at s* = {}", ctx(), cp.value, cp.s));
    })
    .finish("non_crossing_for_fiber_branches", started)
}

/// Scale just below `t_q`.
fn just_below(v: &DegeneracyValue) -> FiberScale {
    FiberScale::from_t(v.t.lo() * ratio(999_999_999, 1_000_000_000)).expect("positive")
}

fn check_morse(config: &VerifyConfig) -> Check {
    let started = Instant::now();
    let mut cases: Vec<(Family, FiberScale)> = Vec::new();
    let mut morse_families = vec![Family::u(1).expect("n >= 1"), Family::u(config.n_max).expect("n >= 1")];
    morse_families.extend(quotient_families(config.n_max));
    for family in &morse_families {
        for scale in log_spaced(1e-2, 2.0, config.morse_samples) {
            cases.push((*family, scale));
        }
        if family.kind() != FamilyKind::U {
            for q in 1..=3 {
                if let Ok(s) = crate::bifurcation::degeneracy_surd(family, q) {
                    cases.push((*family, FiberScale::from_s(s).expect("positive")));
                }
            }
        }
    }
    let mut tally = par_tally(&cases, |(family, scale), tally| {
        let ctx = || format!("{family} at t = {}", scale.t_f64());
        let closed = tally.result(morse_index(family, scale), ctx);
        let counted = tally.result(morse_index_by_enumeration(family, scale), ctx);
        if let (Some(a), Some(b)) = (closed, counted) {
            tally.case(a == b, || format!("{}: closed {a} vs enumeration {b}", ctx()));
        }
    });
    let expected: [(Family, Vec<u128>); 2] = [
        (Family::sp(1).expect("n >= 1"), vec![5, 14, 30]),
        (Family::spin9(), vec![9, 44]),
    ];
    for (family, jumps) in expected {
        let Some(profile) = tally.result(morse_profile(&family, jumps.len() as u32, &config.precision), || {
            format!("{family} profile")
        }) else {
            continue;
        };
        let got: Vec<u128> = profile.pieces.windows(2).map(|w| w[1].index - w[0].index).collect();
        tally.case(got == jumps, || format!("{family}: jumps {got:?}, expected {jumps:?}"));
        tally.case(profile.pieces[0].index == 0, || format!("{family}: index above t₁ is not 0"));
        if family.kind() == FamilyKind::Sp {
            for (q, &m) in (1..).zip(&jumps) {
                let oracle = invariant_harmonic_dimension(1, q);
                tally.case(oracle.as_ref().ok() == Some(&m), || format!("{family} q = {q}: oracle {oracle:?}"));
            }
        } else {
            for (q, &m) in (1..).zip(&jumps) {
                let oracle = sphere_multiplicity(8, q);
                tally.case(oracle.as_ref().ok() == Some(&m), || format!("{family} q = {q}: S⁸ {oracle:?}"));
            }
        }
    }
    for family in quotient_families(config.n_max) {
        let grow = (|| -> Result<bool> {
            let t10 = degeneracy_value(&family, 10, &config.precision)?;
            let t20 = degeneracy_value(&family, 20, &config.precision)?;
            Ok(morse_index(&family, &just_below(&t20))? > morse_index(&family, &just_below(&t10))?)
        })();
        tally.case(matches!(grow, Ok(true)), || format!("{family}: N below t₂₀ vs t₁₀ {grow:?}"));
    }
    tally.finish("morse_closed_form_vs_enumeration", started)
}

fn check_oracles(config: &VerifyConfig) -> Check {
    let started = Instant::now();
    let mut sphere_cases = Vec::new();
    for m in 2..=config.sphere_m_max {
        for k in 0..=config.sphere_k_max {
            sphere_cases.push((m, k));
        }
    }
    let mut tally = par_tally(&sphere_cases, |&(m, k), tally| {
        let closed = sphere_multiplicity(m, k);
        let rank = harmonic_dimension_by_rank((m + 1) as u32, k as u32, DEFAULT_MONOMIAL_LIMIT);
        tally.case(closed.is_ok() && closed == rank, || format!("S^{m}, k = {k}: {closed:?} vs rank {rank:?}"));
    });
    let invariant_cases = [(1, 0), (1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)];
    let inv = par_tally(&invariant_cases, |&(n, q), tally| {
        let family = Family::sp(n).expect("n >= 1");
        let oracle = invariant_harmonic_dimension(n, q);
        let closed = base_multiplicity(&family, q);
        tally.case(oracle.is_ok() && oracle == closed, || {
            format!("{family}, q = {q}: oracle {oracle:?} vs closed {closed:?}")
        });
        if n == 1 {
            let sphere = sphere_multiplicity(4, i64::from(q));
            tally.case(oracle == sphere, || format!("ℍP¹ vs S⁴ at q = {q}: {oracle:?} vs {sphere:?}"));
        }
    });
    tally = tally.merge(inv);
    tally.finish("multiplicity_oracles", started)
}

fn check_second_variation(config: &VerifyConfig) -> Check {
    let started = Instant::now();
    par_tally(&degeneracy_cases(config), |(family, q), tally| {
        let ctx = || format!("{family}, q = {q}");
        let Some(s) = tally.result(crate::bifurcation::degeneracy_surd(family, *q), ctx) else {
            return;
        };
        let scale = FiberScale::from_s(s).expect("positive");
        let lambda = if *q == 0 {
            branch_value(family, 1, 1, &scale)
        } else {
            Ok(Surd::from_int(base_eigenvalue(family, *q) as i64))
        };
        let Some(lambda) = tally.result(lambda, ctx) else {
            return;
        };
        let coeff = second_variation_coefficient(family, &scale, &lambda);
        let enclosure = coeff.enclose(&config.precision);
        tally.case(coeff.is_zero() && enclosure.contains(&rat(0)), || format!("{}: coefficient {coeff}", ctx()));
    })
    .finish("second_variation_vanishes_at_degeneracies", started)
}

fn check_round_metric(config: &VerifyConfig) -> Check {
    let started = Instant::now();
    let mut tally = Tally::default();
    let one = FiberScale::one();
    for family in families(config.n_max) {
        let m = family.dim() as i64;
        tally.case(threshold(&family, &one) == Surd::from_int(m), || format!("{family}: threshold at t = 1"));
        let l1 = lambda1(&family, &one);
        tally.case(l1.as_ref().ok() == Some(&Surd::from_int(m)), || format!("{family}: λ₁(1) = {l1:?}"));
        for k in 0..=30u32 {
            let mu = total_eigenvalue(&family, k);
            let mut known = 0u128;
            for j in (0..=k).filter(|&j| is_admissible(k, j)) {
                let value = branch_value(&family, k, j, &one);
                tally.case(value.as_ref().ok() == Some(&Surd::from_int(mu as i64)), || {
                    format!("{family} ({k},{j}) at t = 1: {value:?}")
                });
                if let Ok(b) = branch(&family, k, j) {
                    known += b.multiplicity.known().unwrap_or(0);
                }
            }
            let total = sphere_multiplicity(m, i64::from(k));
            tally.case(total.as_ref().is_ok_and(|&t| known <= t), || {
                format!("{family} k = {k}: known multiplicities {known} exceed {total:?}")
            });
        }
    }
    tally.finish("round_metric_collapse", started)
}

fn check_base_branches(config: &VerifyConfig) -> Check {
    let started = Instant::now();
    let scales = log_spaced(1e-3, 1e3, 25);
    let mut tally = Tally::default();
    for family in families(config.n_max) {
        for k in (0..=20u32).step_by(2) {
            let mu = Surd::from_int(total_eigenvalue(&family, k) as i64);
            for scale in &scales {
                let value = branch_value(&family, k, 0, scale);
                tally.case(value.as_ref().ok() == Some(&mu), || {
                    format!("{family} ({k},0) at t = {}: {value:?}", scale.t_f64())
                });
            }
        }
    }
    tally.finish("base_branches_independent_of_t", started)
}

fn check_completeness(config: &VerifyConfig) -> Check {
    let started = Instant::now();
    let scales = log_spaced(1e-3, 1e3, 25);
    let cases: Vec<(Family, u32)> = families(config.n_max)
        .into_iter()
        .flat_map(|f| (0..=60u32).map(move |k| (f, k)))
        .collect();
    par_tally(&cases, |&(family, k), tally| {
        let bound = Surd::from_int(family.completeness_constant() as i64 * i64::from(k));
        for j in (0..=k).filter(|&j| is_admissible(k, j)) {
            for scale in &scales {
                let value = branch_value(&family, k, j, scale);
                tally.case(value.as_ref().is_ok_and(|v| *v >= bound), || {
                    format!("{family} ({k},{j}) at t = {}: {value:?} below {bound}", scale.t_f64())
                });
            }
        }
    })
    .finish("completeness_bound", started)
}

/// Runs every check.
pub fn verify(config: &VerifyConfig) -> VerificationReport {
    let started = Instant::now();
    let tqk = tqk_comparison(config.q_max);
    type CheckFn = fn(&VerifyConfig) -> Check;
    let runs: Vec<CheckFn> = vec![
        check_lambda1,
        check_breakpoints,
        check_degeneracy_closed_forms,
        check_u_rigidity,
        check_non_crossing,
        check_morse,
        check_oracles,
        check_second_variation,
        check_round_metric,
        check_base_branches,
        check_completeness,
    ];
    let mut checks: Vec<Check> = runs.par_iter().map(|f| f(config)).collect();
    checks.insert(3, check_tqk(&tqk));
    VerificationReport {
        schema_version: SCHEMA_VERSION,
        passed: checks.iter().all(|c| c.passed),
        checks,
        tqk_comparison: tqk,
        seconds: started.elapsed().as_secs_f64(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            n_max: 2,
            lambda1_samples: 10,
            q_max: 4,
            degeneracy_n_max: 2,
            noncrossing_n_max: 2,
            noncrossing_k_max: 10,
            rigidity_n_max: 2,
            morse_samples: 10,
            sphere_m_max: 4,
            sphere_k_max: 3,
            precision: crate::bifurcation::default_precision(),
        }
    }

    #[test]
    fn small_suite_passes() {
        let report = verify(&small());
        for check in &report.checks {
            assert!(check.passed, "{}: {:?}", check.name, check.failures);
            assert!(check.cases > 0, "{} ran no cases", check.name);
        }
        assert!(report.passed);
    }

    #[test]
    fn tqk_rows_show_deviation() {
        let rows = tqk_comparison(3);
        assert!(rows.iter().all(|r| r.deviates && r.printed_t.is_none()));
        assert!((rows[0].corrected_t - 0.423615).abs() < 1e-6);
    }

    #[test]
    fn a_wrong_value_is_reported() {
        let mut tally = Tally::default();
        tally.case(false, || "boom".into());
        let check = tally.finish("x", Instant::now());
        assert!(!check.passed);
        assert_eq!(check.failure_count, 1);
    }
}
