//! Exact representations and exhaustive iterators for the combinatorial
//! objects of the crate: partitions, compositions (with unimodality
//! structure), pentagonal staircases, and signed vector partitions.
//!
//! All objects are immutable after construction and all iterators are
//! deterministic: partitions stream in reverse-lexicographic order and
//! compositions by first-part recursion, so golden tests and witness logs
//! are stable across runs.

mod composition;
mod partition;
mod vector_partition;

pub use composition::{
    compositions_of, unimodal_compositions_of, unimodal_with_max_mult, Composition, Compositions,
};
pub use partition::{
    distinct_partitions_of, partitions_bounded, partitions_of, staircase, Partition, Partitions,
};
pub use vector_partition::{vector_partitions_of, VectorPartition};
