//! Signed vector partitions: triples `(pi1, pi2, pi3)` with `pi1` having
//! distinct parts, carrying sign `(-1)^{ell(pi1)}` and crank
//! `ell(pi2) - ell(pi3)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objects::{distinct_partitions_of, partitions_of, Partition};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "VectorPartitionRepr", into = "VectorPartitionRepr")]
pub struct VectorPartition {
    pi1: Partition,
    pi2: Partition,
    pi3: Partition,
}

#[derive(Serialize, Deserialize)]
struct VectorPartitionRepr {
    pi1: Partition,
    pi2: Partition,
    pi3: Partition,
}

impl TryFrom<VectorPartitionRepr> for VectorPartition {
    type Error = Error;
    fn try_from(r: VectorPartitionRepr) -> Result<Self> {
        VectorPartition::new(r.pi1, r.pi2, r.pi3)
    }
}

impl From<VectorPartition> for VectorPartitionRepr {
    fn from(v: VectorPartition) -> Self {
        VectorPartitionRepr {
            pi1: v.pi1,
            pi2: v.pi2,
            pi3: v.pi3,
        }
    }
}

impl VectorPartition {
    /// Validates that `pi1` has distinct parts; `pi2` and `pi3` are
    /// unrestricted.
    pub fn new(pi1: Partition, pi2: Partition, pi3: Partition) -> Result<Self> {
        if !pi1.has_distinct_parts() {
            return Err(Error::InvalidPartition(format!(
                "pi1 must have distinct parts, got {:?}",
                pi1.parts()
            )));
        }
        Ok(Self { pi1, pi2, pi3 })
    }

    fn new_unchecked(pi1: Partition, pi2: Partition, pi3: Partition) -> Self {
        debug_assert!(pi1.has_distinct_parts());
        Self { pi1, pi2, pi3 }
    }

    pub fn pi1(&self) -> &Partition {
        &self.pi1
    }

    pub fn pi2(&self) -> &Partition {
        &self.pi2
    }

    pub fn pi3(&self) -> &Partition {
        &self.pi3
    }

    /// `|pi1| + |pi2| + |pi3|`.
    pub fn size(&self) -> u64 {
        self.pi1.size() + self.pi2.size() + self.pi3.size()
    }

    /// `(-1)^{ell(pi1)}`.
    pub fn sign(&self) -> i32 {
        if self.pi1.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The vector crank `r = ell(pi2) - ell(pi3)`.
    pub fn crank(&self) -> i64 {
        self.pi2.len() as i64 - self.pi3.len() as i64
    }
}

impl fmt::Debug for VectorPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.pi1, self.pi2, self.pi3)
    }
}

/// Every vector partition of `n`, exactly once: `pi1` runs over
/// distinct-part partitions, `pi2` and `pi3` over all partitions, with the
/// three sizes summing to `n`.
pub fn vector_partitions_of(n: u32) -> impl Iterator<Item = VectorPartition> {
    (0..=n).flat_map(move |a| {
        distinct_partitions_of(a).flat_map(move |p1| {
            let rest = n - a;
            (0..=rest).flat_map(move |b| {
                let p1 = p1.clone();
                partitions_of(b).flat_map(move |p2| {
                    let p1 = p1.clone();
                    partitions_of(rest - b)
                        .map(move |p3| VectorPartition::new_unchecked(p1.clone(), p2.clone(), p3))
                })
            })
        })
    })
}
