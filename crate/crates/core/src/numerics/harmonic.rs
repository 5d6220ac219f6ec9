//! Dimension counts of harmonic polynomial spaces by exact rank computation.
//!
//! These are deliberately brute-force: polynomials are expanded on the
//! monomial basis, the relevant differential operators become sparse integer
//! matrices, and the kernel dimension is `#columns − rank` with the rank found
//! by fraction-free elimination over ℤ. They serve as independent oracles for
//! the closed-form multiplicities in [`crate::spectra`].

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Default cap on the number of monomials an oracle may expand.
pub const DEFAULT_MONOMIAL_LIMIT: u128 = 200_000;

type SparseRow = Vec<(u32, BigInt)>;

/// Row-echelon basis over ℤ, keyed by leading column.
#[derive(Default)]
pub struct SparseRank {
    pivots: HashMap<u32, SparseRow>,
}

impl SparseRank {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the basis; returns `true` if it was independent.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|(_, v)| !v.is_zero());
        row.sort_unstable_by_key(|(c, _)| *c);
        loop {
            let Some((lead, lead_val)) = row.first().cloned() else {
                return false;
            };
            let Some(pivot) = self.pivots.get(&lead) else {
                normalize(&mut row);
                self.pivots.insert(lead, row);
                return true;
            };
            let pivot_val = &pivot[0].1;
            row = combine(&row, pivot_val, pivot, &lead_val);
            normalize(&mut row);
        }
    }
}

/// `a_scale · a − b_scale · b` on sorted sparse rows.
fn combine(a: &SparseRow, a_scale: &BigInt, b: &SparseRow, b_scale: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some((ca, va)), Some((cb, vb))) if ca == cb => {
                i += 1;
                j += 1;
                (*ca, va * a_scale - vb * b_scale)
            }
            (Some((ca, va)), Some((cb, _))) if ca < cb => {
                i += 1;
                (*ca, va * a_scale)
            }
            (Some((ca, va)), None) => {
                i += 1;
                (*ca, va * a_scale)
            }
            (_, Some((cb, vb))) => {
                j += 1;
                (*cb, -(vb * b_scale))
            }
            (None, None) => unreachable!(),
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }
    out
}

fn normalize(row: &mut SparseRow) {
    let g = row
        .iter()
        .fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
    if g.is_zero() {
        return;
    }
    let flip = row.first().is_some_and(|(_, v)| v.is_negative());
    for (_, v) in row.iter_mut() {
        *v /= &g;
        if flip {
            *v = -&*v;
        }
    }
}

pub fn binomial(n: u128, k: u128) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        // c * (n - i) is divisible by (i + 1) after the multiplication
        c = c.checked_mul(n - i)? / (i + 1);
    }
    Some(c)
}

/// Number of monomials of degree `degree` in `vars` variables.
pub fn monomial_count(vars: u32, degree: u32) -> u128 {
    if vars == 0 {
        return u128::from(degree == 0);
    }
    binomial(u128::from(degree + vars - 1), u128::from(vars - 1)).unwrap_or(u128::MAX)
}

/// Exponent vectors of a fixed degree with an index lookup.
struct MonomialBasis {
    exps: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, u32>,
}

impl MonomialBasis {
    fn new(vars: usize, degree: u32) -> Self {
        let mut exps = Vec::new();
        let mut current = vec![0u8; vars];
        fill(&mut exps, &mut current, 0, degree);
        let index = exps
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        MonomialBasis { exps, index }
    }

    fn len(&self) -> usize {
        self.exps.len()
    }

    fn index_of(&self, exp: &[u8]) -> u32 {
        self.index[exp]
    }
}

fn fill(out: &mut Vec<Vec<u8>>, current: &mut Vec<u8>, pos: usize, remaining: u32) {
    if pos + 1 == current.len() {
        current[pos] = remaining as u8;
        out.push(current.clone());
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e as u8;
        fill(out, current, pos + 1, remaining - e);
    }
    current[pos] = 0;
}

fn check_feasible(vars: u32, degree: u32, limit: u128) -> Result<()> {
    let count = monomial_count(vars, degree);
    if count > limit {
        return Err(Error::Resource {
            what: "monomial basis",
            required: count,
            limit,
        });
    }
    if degree > u32::from(u8::MAX) {
        return Err(Error::Resource {
            what: "polynomial degree",
            required: u128::from(degree),
            limit: u128::from(u8::MAX),
        });
    }
    Ok(())
}

/// Image of `x^exp` under the Euclidean Laplacian, written on `target`.
fn laplacian_image(exp: &[u8], target: &MonomialBasis, offset: u32) -> SparseRow {
    let mut row = Vec::new();
    let mut e = exp.to_vec();
    for i in 0..e.len() {
        let a = e[i];
        if a >= 2 {
            e[i] -= 2;
            let coeff = i64::from(a) * i64::from(a - 1);
            row.push((offset + target.index_of(&e), BigInt::from(coeff)));
            e[i] += 2;
        }
    }
    row
}

/// Dimension of degree-`degree` harmonic polynomials in `vars` variables,
/// as `dim P_d − rank(Δ: P_d → P_{d−2})`.
pub fn harmonic_dimension_by_rank(vars: u32, degree: u32, limit: u128) -> Result<u128> {
    check_feasible(vars, degree, limit)?;
    let domain = MonomialBasis::new(vars as usize, degree);
    if degree < 2 {
        return Ok(domain.len() as u128);
    }
    let target = MonomialBasis::new(vars as usize, degree - 2);
    let mut rank = SparseRank::new();
    for exp in &domain.exps {
        if rank.rank() == target.len() {
            break;
        }
        rank.insert(laplacian_image(exp, &target, 0));
    }
    Ok((domain.len() - rank.rank()) as u128)
}

/// Right multiplication by `i`, `j`, `k` on one quaternion block
/// `(a, b, c, d) ↦ (Ax)`, stored as `(source index, sign)` per component.
const QUATERNION_GENERATORS: [[(usize, i64); 4]; 3] = [
    // q·i = (−b, a, d, −c)
    [(1, -1), (0, 1), (3, 1), (2, -1)],
    // q·j = (−c, −d, a, b)
    [(2, -1), (3, -1), (0, 1), (1, 1)],
    // q·k = (−d, c, −b, a)
    [(3, -1), (2, 1), (1, -1), (0, 1)],
];

/// Image of `x^exp` under the linear vector field `Σ_i (Ax)_i ∂_i`.
fn vector_field_image(
    exp: &[u8],
    generator: &[(usize, i64); 4],
    basis: &MonomialBasis,
    offset: u32,
) -> SparseRow {
    let mut acc: HashMap<u32, i64> = HashMap::new();
    let mut e = exp.to_vec();
    for block in 0..exp.len() / 4 {
        for (local, &(src, sign)) in generator.iter().enumerate() {
            let i = 4 * block + local;
            let a = e[i];
            if a == 0 {
                continue;
            }
            let src = 4 * block + src;
            e[i] -= 1;
            e[src] += 1;
            *acc.entry(offset + basis.index_of(&e)).or_default() += sign * i64::from(a);
            e[src] -= 1;
            e[i] += 1;
        }
    }
    acc.into_iter()
        .filter(|(_, v)| *v != 0)
        .map(|(c, v)| (c, BigInt::from(v)))
        .collect()
}

/// Dimension of degree-`2q` harmonic polynomials on `ℝ^{4n+4} = ℍ^{n+1}`
/// annihilated by the three generators of right multiplication by unit
/// quaternions, i.e. the functions on `S^{4n+3}` constant along the fibers
/// of the quaternionic Hopf fibration.
pub fn invariant_harmonic_dimension_with_limit(n: u32, q: u32, limit: u128) -> Result<u128> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    let vars = 4 * n + 4;
    let degree = 2 * q;
    check_feasible(vars, degree, limit)?;
    if q == 0 {
        return Ok(1);
    }
    let domain = MonomialBasis::new(vars as usize, degree);
    let lower = MonomialBasis::new(vars as usize, degree - 2);
    let block = domain.len() as u32;
    let base = lower.len() as u32;
    let mut rank = SparseRank::new();
    for exp in &domain.exps {
        let mut row = laplacian_image(exp, &lower, 0);
        for (l, generator) in QUATERNION_GENERATORS.iter().enumerate() {
            row.extend(vector_field_image(exp, generator, &domain, base + l as u32 * block));
        }
        rank.insert(row);
    }
    Ok((domain.len() - rank.rank()) as u128)
}

fn invariant_table() -> &'static RwLock<HashMap<(u32, u32), u128>> {
    static TABLE: OnceLock<RwLock<HashMap<(u32, u32), u128>>> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

/// Memoized [`invariant_harmonic_dimension_with_limit`] at the default limit.
pub fn invariant_harmonic_dimension(n: u32, q: u32) -> Result<u128> {
    if let Some(&v) = invariant_table().read().expect("poisoned").get(&(n, q)) {
        return Ok(v);
    }
    let v = invariant_harmonic_dimension_with_limit(n, q, DEFAULT_MONOMIAL_LIMIT)?;
    invariant_table().write().expect("poisoned").insert((n, q), v);
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), Some(120));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(monomial_count(9, 2), 45);
        assert_eq!(monomial_count(5, 2), 15);
    }

    #[test]
    fn rank_of_small_matrices() {
        let mut r = SparseRank::new();
        let row = |v: &[(u32, i64)]| v.iter().map(|&(c, x)| (c, BigInt::from(x))).collect();
        assert!(r.insert(row(&[(0, 2), (1, 4)])));
        assert!(r.insert(row(&[(0, 3), (1, 5)])));
        assert!(!r.insert(row(&[(0, 1), (1, 1)])));
        assert!(!r.insert(row(&[])));
        assert_eq!(r.rank(), 2);
    }

    #[test]
    fn harmonic_counts_match_known_values() {
        // degree-2 harmonics in 9 variables: 45 monomials minus the trace
        assert_eq!(harmonic_dimension_by_rank(9, 2, DEFAULT_MONOMIAL_LIMIT).unwrap(), 44);
        assert_eq!(harmonic_dimension_by_rank(5, 2, DEFAULT_MONOMIAL_LIMIT).unwrap(), 14);
        assert_eq!(harmonic_dimension_by_rank(3, 1, DEFAULT_MONOMIAL_LIMIT).unwrap(), 3);
        assert_eq!(harmonic_dimension_by_rank(9, 1, DEFAULT_MONOMIAL_LIMIT).unwrap(), 9);
    }

    #[test]
    fn the_generators_are_skew() {
        for g in QUATERNION_GENERATORS {
            for (i, &(src, sign)) in g.iter().enumerate() {
                assert_eq!(g[src], (i, -sign));
            }
        }
    }

    #[test]
    fn invariant_dimension_small_cases() {
        assert_eq!(invariant_harmonic_dimension(1, 0).unwrap(), 1);
        assert_eq!(invariant_harmonic_dimension(1, 1).unwrap(), 5);
        assert_eq!(invariant_harmonic_dimension(2, 1).unwrap(), 14);
    }

    #[test]
    fn infeasible_sizes_are_reported() {
        let err = invariant_harmonic_dimension_with_limit(5, 4, 1000).unwrap_err();
        assert!(matches!(err, Error::Resource { limit: 1000, .. }));
    }
}
