//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The constant term of a series must be a unit (1 or -1) for inversion.
    #[error("series is not invertible: constant term must be 1 or -1, got {0}")]
    NonUnitConstant(String),

    /// A sequence passed to `Partition::new` was not a valid partition.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// A sequence passed to `Composition::new` was not a valid composition.
    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    /// The crank is defined only for nonempty partitions.
    #[error("crank is undefined for the empty partition")]
    EmptyPartitionCrank,

    /// A bijection was applied to an object outside its stated domain.
    #[error("{map}: input outside the map's domain: {reason}")]
    OutsideDomain { map: &'static str, reason: String },

    /// The enumeration and series backends of a statistic produced
    /// different values. This is a cross-oracle failure and always a bug.
    #[error("statistic backends disagree for {stat} at n={n}: enumeration={enumeration}, series={series}")]
    BackendMismatch {
        stat: String,
        n: i64,
        enumeration: String,
        series: String,
    },

    /// A coefficient beyond the fixed truncation order was requested.
    #[error("requested n={n} exceeds the series truncation order {order}")]
    OrderExceeded { n: i64, order: usize },

    /// Invalid caller-supplied configuration (CLI and bindings).
    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
