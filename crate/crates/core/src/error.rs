use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation (t <= 0, negative degree, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// `(k, j)` violates `0 <= j <= k`, `k - j` even.
    #[error("inadmissible branch (k={k}, j={j}): need j <= k and k - j even")]
    Inadmissible { k: i64, j: i64 },

    #[error("invalid family descriptor: {0}")]
    Family(String),

    #[error("resource limit exceeded: {what} requires {required}, limit is {limit}")]
    Resource {
        what: &'static str,
        required: u128,
        limit: u128,
    },

    #[error("unsupported query: {0}")]
    Unsupported(String),

    /// The gap function of the requested branch has no positive zero.
    #[error("no degeneracy value: {0}")]
    NoDegeneracy(String),

    #[error("quadratic has no unique positive root: {0}")]
    NoPositiveRoot(String),

    #[error("quadratic has a double root at {0}")]
    DoubleRoot(String),

    /// Bisection could not certify a sign change.
    #[error("bracket error: {0}")]
    Bracket(String),

    /// Two independent computations disagreed.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}
