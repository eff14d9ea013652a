//! Error type shared by the whole crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong outside of plain arithmetic.
///
/// All operations are exact, so there are no numerical-tolerance failures;
/// every variant is a contract violation on the inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Recurrence definition is malformed (wrong list lengths, order zero).
    #[error("invalid recurrence: {0}")]
    InvalidSpec(String),

    /// Backward evaluation needs a nonzero trailing coefficient.
    #[error("negative index {index} unsupported: trailing coefficient is zero")]
    NegativeIndexUnsupported { index: i64 },

    /// |n| exceeds the configured index cap.
    #[error("index {index} exceeds the cap of {cap} (see ZECKIT_INDEX_CAP)")]
    IndexCapExceeded { index: i64, cap: i64 },

    /// Operation is defined for second-order recurrences only.
    #[error("recurrence has order {order}, but a second-order sequence is required")]
    NotSecondOrder { order: usize },

    /// Spec is not in tiling convention (initials must equal the tiling
    /// counts produced by the truncated recurrence from a0 = 1, and every
    /// coefficient must be a nonnegative palette size).
    #[error("recurrence is not in tiling convention: {0}")]
    SpecNotTilingConvention(String),

    /// Inverse requested for a ring element whose norm is not a unit.
    #[error("element is not a unit of its ring; negative powers are undefined")]
    NotAUnit,

    /// Zeckendorf encoding is defined for n >= 1 only.
    #[error("expected a positive integer, got {0}")]
    NonPositiveInput(String),

    /// Index list violates its representation invariants.
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    /// Board size exceeds the exhaustive-enumeration guard.
    #[error("board size {n} exceeds the enumeration guard of {max}")]
    BoardTooLarge { n: i64, max: i64 },

    /// Break cell must satisfy 1 <= m < n.
    #[error("cell {m} out of range for an {n}-board (need 1 <= m < n)")]
    CellOutOfRange { m: i64, n: i64 },

    /// Numeric verification was asked to start below the pattern's min_n.
    #[error("range starts at {lo} but the identity is only claimed for n >= {min_n}")]
    RangeBelowMinN { lo: i64, min_n: i64 },

    /// The family-generator parameter must be an even integer >= 2.
    #[error("r = {r}: the identity family is generated for even r >= 2 only")]
    InvalidR { r: i64 },

    /// The family generator requires t = 1.
    #[error("the identity family requires t = 1, got t = {t}")]
    TNotOne { t: String },

    /// Discovery window exceeds the exhaustive-search guard.
    #[error("window {window} exceeds the search guard of {max}")]
    WindowTooLarge { window: i64, max: i64 },

    /// A Pell-Lucas value was odd where the Diophantine check must halve it.
    /// Never expected; signals a broken sequence definition.
    #[error("Pell-Lucas value at n = {n} is odd: {value}")]
    OddPellLucasValue { n: i64, value: String },

    /// Catch-all for argument contract violations (m, n >= 1 and the like).
    #[error("{0}")]
    InvalidArgument(&'static str),

    /// File access failed (CLI only; the library itself never touches disk).
    #[error("io: {0}")]
    Io(String),
}
