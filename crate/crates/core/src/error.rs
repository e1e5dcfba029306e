use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("side lengths must be positive, got ({a}, {b}, {c})")]
    NonPositiveSide { a: u64, b: u64, c: u64 },

    #[error("({a}, {b}, {c}) violates the strict triangle inequality")]
    DegenerateOrImpossible { a: u64, b: u64, c: u64 },

    #[error("m must exceed n (m = {m}, n = {n})")]
    OrderViolation { m: u64, n: u64 },

    #[error("m = {m} and n = {n} are not coprime")]
    NotCoprime { m: u64, n: u64 },

    #[error("m = {m} and n = {n} have the same parity")]
    SameParity { m: u64, n: u64 },

    #[error("scale parameter must be at least 1")]
    ZeroScale,

    #[error("square root of negative radicand")]
    NegativeRadicand,

    #[error("perimeter bound {bound} is below the minimum {min}")]
    InvalidBound { bound: u64, min: u64 },

    /// A fixed-width computation would have wrapped.
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    /// A brute-force hit that is not a valid isosceles record.
    #[error("base {alpha}, leg {beta}: {reason}")]
    NotIsoRecord { alpha: u64, beta: u64, reason: &'static str },
}
