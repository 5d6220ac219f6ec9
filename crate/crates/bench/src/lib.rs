//! Inputs shared by the benchmarks.

use berger_core::{Family, FiberScale};

pub fn families() -> Vec<Family> {
    vec![
        Family::u(3).expect("n >= 1"),
        Family::sp(2).expect("n >= 1"),
        Family::spin9(),
    ]
}

/// Scales spread over the three regimes: below the λ₁ breakpoint, between it
/// and 1, and above 1.
pub fn scales() -> Vec<FiberScale> {
    ["0.05", "0.4", "3"]
        .iter()
        .map(|t| FiberScale::parse_t(t).expect("valid t"))
        .collect()
}
