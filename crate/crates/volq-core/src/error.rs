//! Crate-wide error type.

use alloc::string::String;

use crate::day::Day;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("insufficient data: need at least {needed}, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("invalid price at position {index}: {value} (prices must be strictly positive)")]
    InvalidPrice { index: usize, value: f64 },

    #[error("date gap after {after}: expected {expected}, found {found}")]
    GapError { after: Day, expected: Day, found: Day },

    #[error("non-positive value at position {index}: {value}")]
    NonPositiveValue { index: usize, value: f64 },

    #[error("empty input")]
    EmptyInput,

    #[error("non-finite {what}")]
    NonFinite { what: &'static str },

    #[error("{what} did not converge within {iterations} iterations")]
    NonConvergent { what: &'static str, iterations: usize },

    #[error("need at least 2 interpolation anchors, got {got}")]
    InsufficientAnchors { got: usize },

    #[error("rank-deficient design matrix")]
    RankDeficient,

    #[error("invalid configuration: {0}")]
    ConfigError(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimError { expected: usize, got: usize },

    #[error("missing data at row {row}, column {column}")]
    MissingData { row: usize, column: usize },

    #[error("duplicate date {0}")]
    DuplicateDate(Day),

    #[error("dates out of order at {0}")]
    UnorderedDates(Day),

    #[error("empty residual set")]
    EmptyResiduals,

    #[error("no training history before {0}")]
    InsufficientHistory(Day),

    #[error("invalid quantile level {0} (must lie in the open interval (0,1))")]
    InvalidLevel(f64),

    #[error("solver error: {0}")]
    SolverError(&'static str),

    #[error("no out-of-bag observation is available for any sample")]
    NoOobData,

    #[error("length mismatch: {left} vs {right}")]
    AlignError { left: usize, right: usize },

    #[error("invalid interval: lower {lower} exceeds upper {upper}")]
    InvalidInterval { lower: f64, upper: f64 },

    #[error("degenerate loss-differential series (zero variance)")]
    DegenerateSeries,

    #[error("incomplete quantile curve: expected {expected} levels, got {got}")]
    IncompleteCurve { expected: usize, got: usize },

    #[error("unknown model `{0}`")]
    UnknownModel(String),
}
