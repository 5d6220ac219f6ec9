//! Sampled threshold and branch curves over a range of `t`, with the
//! degeneracy values falling inside the range.

use std::str::FromStr;

use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::bifurcation::{degeneracy_value, DegeneracyValue};
use crate::error::{Error, Result};
use crate::families::threshold;
use crate::numerics::rational::{parse_rational, Rational};
use crate::numerics::Surd;
use crate::spectra::{branch_value, is_admissible, Family, FamilyKind, FiberScale};

/// Branches up to this `k` are drawn by default.
pub const DEFAULT_K_LIMIT: u32 = 6;

/// Upper bound on the number of sample points.
pub const MAX_POINTS: usize = 1_000_000;

/// `start:stop:step`, all exact rationals; the points are
/// `start, start + step, …` up to and including `stop`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TRange {
    pub start: Rational,
    pub stop: Rational,
    pub step: Rational,
}

impl TRange {
    pub fn new(start: Rational, stop: Rational, step: Rational) -> Result<Self> {
        if !start.is_positive() {
            return Err(Error::Domain(format!("t-range start must be positive, got {start}")));
        }
        if stop < start {
            return Err(Error::Domain(format!("t-range stop {stop} is below start {start}")));
        }
        if !step.is_positive() {
            return Err(Error::Domain(format!("t-range step must be positive, got {step}")));
        }
        let range = TRange { start, stop, step };
        let count = range.len_checked()?;
        if count > MAX_POINTS {
            return Err(Error::Resource {
                what: "t-range points",
                required: count as u128,
                limit: MAX_POINTS as u128,
            });
        }
        Ok(range)
    }

    fn len_checked(&self) -> Result<usize> {
        let n = crate::numerics::rational::floor(&((&self.stop - &self.start) / &self.step));
        usize::try_from(n + 1).map_err(|_| Error::Resource {
            what: "t-range points",
            required: u128::MAX,
            limit: MAX_POINTS as u128,
        })
    }

    pub fn len(&self) -> usize {
        self.len_checked().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> Vec<Rational> {
        (0..self.len())
            .map(|i| &self.start + &self.step * Rational::from_integer(i.into()))
            .collect()
    }

    pub fn contains(&self, t: &Surd) -> bool {
        t.cmp_rational(&self.start).is_ge() && t.cmp_rational(&self.stop).is_le()
    }
}

impl FromStr for TRange {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("expected start:stop:step, got {text:?}")));
        }
        TRange::new(
            parse_rational(parts[0])?,
            parse_rational(parts[1])?,
            parse_rational(parts[2])?,
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagramRow {
    #[serde(serialize_with = "crate::numerics::rational::serialize_rational")]
    pub t: Rational,
    pub threshold: Surd,
    /// One value per entry of [`Diagram::branches`].
    pub values: Vec<Surd>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Diagram {
    pub family: Family,
    pub k_limit: u32,
    /// Admissible `(k, j)` with `k <= k_limit`, ordered by `k` then `j`.
    pub branches: Vec<(u32, u32)>,
    pub rows: Vec<DiagramRow>,
    /// Degeneracy values `t_q` inside the range, decreasing in `t`.
    pub degeneracies: Vec<DegeneracyValue>,
}

pub fn diagram_branches(k_limit: u32) -> Vec<(u32, u32)> {
    (0..=k_limit)
        .flat_map(|k| (0..=k).filter(move |&j| is_admissible(k, j)).map(move |j| (k, j)))
        .collect()
}

/// Degeneracy values with `t_q` in `[start, stop]`.
pub fn degeneracies_in_range(family: &Family, range: &TRange, precision: &Rational) -> Result<Vec<DegeneracyValue>> {
    let mut out = Vec::new();
    let last_q = if family.kind() == FamilyKind::U { 0 } else { u32::MAX };
    for q in 0..=last_q {
        let v = degeneracy_value(family, q, precision)?;
        let t = Surd::rational(v.t.mid());
        // t_q decreases with q
        if v.t.hi() < &range.start {
            break;
        }
        if range.contains(&t) || v.t.contains(&range.start) || v.t.contains(&range.stop) {
            out.push(v);
        }
    }
    Ok(out)
}

/// Threshold and every admissible branch with `k <= k_limit` at each `t` in
/// the range. Points are evaluated in parallel; row order follows the range.
pub fn diagram(family: &Family, range: &TRange, k_limit: u32, precision: &Rational) -> Result<Diagram> {
    let branches = diagram_branches(k_limit);
    let rows = range
        .points()
        .into_par_iter()
        .map(|t| {
            let scale = FiberScale::from_t(t.clone())?;
            let values = branches
                .iter()
                .map(|&(k, j)| branch_value(family, k, j, &scale))
                .collect::<Result<Vec<_>>>()?;
            Ok(DiagramRow {
                threshold: threshold(family, &scale),
                t,
                values,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Diagram {
        family: *family,
        k_limit,
        branches,
        rows,
        degeneracies: degeneracies_in_range(family, range, precision)?,
    })
}
