use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Guard violations carry the offending multiplier so callers (and the CLI)
/// can report exactly which query left the range where a rational stand-in
/// is exact.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("value is rational: radicand is a perfect square or the surd coefficient is zero")]
    DegenerateRational,
    #[error("negative radicand {0}")]
    NegativeRadicand(i64),
    #[error("rational slope is an integer (zero after reduction mod 1)")]
    ZeroValue,
    #[error("guard {guard} exceeds reduced denominator {q}")]
    GuardTooLarge { guard: i64, q: i64 },
    #[error("guard must be positive, got {0}")]
    InvalidGuard(i64),
    #[error("guard violation at k={k}: rational slope is only exact for |k| < {guard}")]
    GuardViolation { k: i64, guard: i64 },
    #[error("interval [0, {m}*alpha) is not contained in [0,1)")]
    IntervalOutOfRange { m: u64 },
    #[error("fractional parts of {j}*alpha and {k}*alpha coincide")]
    TiedFractionalParts { j: u64, k: u64 },
    #[error("no {expected} distinct factors of length {n} within a prefix of length {budget}")]
    NonSturmianBudget { n: usize, expected: usize, budget: usize },
    #[error("factors of length {n} did not come out strictly increasing")]
    UnorderedFactors { n: usize },
    #[error("slope is exactly 1/2; the three-case recurrence needs alpha != 1/2")]
    HalfSlope,
    #[error("recurrence value at k={k} left [0, k-1]")]
    RecurrenceOutOfRange { k: u64 },
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("cannot parse slope {input:?}: {reason}")]
    ParseSlope { input: String, reason: String },
    #[error("cannot parse factor {0:?}: expected a non-empty string of 0 and 1")]
    ParseFactor(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
