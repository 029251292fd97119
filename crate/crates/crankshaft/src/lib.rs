//! Exact enumerative-combinatorics engine for integer partitions, the Dyson
//! crank, and unimodal compositions.
//!
//! The crate computes partition/composition statistics (`u_m`, `C_m`, `M_k`,
//! `P~_k`, `N_V`, crank counts) through two independent routes — direct
//! object enumeration and truncated q-series coefficients — executes the
//! combinatorial bijections relating them, and machine-verifies the
//! identity, inequality, and truncated pentagonal number theorem families
//! connecting them over configurable ranges. All arithmetic is exact.
//!
//! Module map:
//! - [`series`]: truncated power series in `q` with bigint coefficients and
//!   every generating-function constructor.
//! - [`objects`]: partitions, compositions, staircases, vector partitions,
//!   and exhaustive iterators.
//! - [`statistics`]: memoized scalar statistics with dual
//!   enumeration/series backends.
//! - [`bijections`]: executable forward and inverse maps with exhaustive
//!   verifiers.
//! - [`identities`]: named checks for every identity, inequality, and series
//!   identity, each returning a structured report.
//! - [`cli`]: the `crankshaft` command-line front end.
//!
//! ```
//! use crankshaft::series::partition_gf;
//! use crankshaft::statistics::Statistics;
//!
//! let p = partition_gf(5);
//! assert_eq!(p.coeff(5), &num_bigint::BigInt::from(7));
//!
//! let stats = Statistics::new(30);
//! assert_eq!(stats.u(0, 4).unwrap(), num_bigint::BigInt::from(8));
//! assert_eq!(stats.c(1, 5).unwrap(), num_bigint::BigInt::from(4));
//! ```

pub mod bijections;
pub mod cli;
pub mod error;
pub mod identities;
pub mod objects;
pub mod series;
pub mod statistics;

pub use error::Error;
pub use objects::{Composition, Partition, VectorPartition};
pub use series::TruncatedSeries;
