//! Exact and verified numerics: rationals, quadratic surds, interval
//! enclosures with certified bisection, and rank-based dimension oracles.

pub mod enclosure;
pub mod harmonic;
pub mod quadratic;
pub mod rational;
pub mod surd;

pub use enclosure::{bisect_root, Enclosure};
pub use harmonic::{harmonic_dimension_by_rank, invariant_harmonic_dimension};
pub use quadratic::solve_quadratic_positive;
pub use rational::Rational;
pub use surd::Surd;
