//! Integer partitions: non-increasing sequences of positive parts, with the
//! conjugate/rotation/crank accessors and exhaustive iterators.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objects::Composition;

/// A partition: positive parts in non-increasing order. The empty partition
/// is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl Partition {
    /// Validates that `parts` is non-increasing with every part >= 1.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be non-increasing, got {:?}",
                parts
            )));
        }
        Ok(Self { parts })
    }

    /// Builds a partition from an arbitrary multiset of positive parts.
    pub fn from_multiset(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p >= 1));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |lambda|: the sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// ell(lambda): the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    pub fn multiplicity(&self, v: u32) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// omega(lambda): the number of parts equal to 1.
    pub fn count_ones(&self) -> usize {
        self.multiplicity(1)
    }

    pub fn count_parts_greater_than(&self, v: u32) -> usize {
        self.parts.iter().filter(|&&p| p > v).count()
    }

    pub fn count_parts_less_than(&self, v: u32) -> usize {
        self.parts.iter().filter(|&&p| p < v).count()
    }

    /// The smallest part strictly greater than `v` ("the first part larger
    /// than `v`" reading the partition from its small end), if any.
    pub fn first_part_greater_than(&self, v: u32) -> Option<u32> {
        self.parts.iter().rev().find(|&&p| p > v).copied()
    }

    /// True when every value `1 ..= k` occurs as a part.
    pub fn contains_all_up_to(&self, k: u32) -> bool {
        (1..=k).all(|v| self.multiplicity(v) >= 1)
    }

    /// The Dyson crank: the largest part when there are no ones, and
    /// otherwise (number of parts exceeding the number of ones) minus
    /// (number of ones). Undefined for the empty partition.
    pub fn crank(&self) -> Result<i64> {
        if self.is_empty() {
            return Err(Error::EmptyPartitionCrank);
        }
        let omega = self.count_ones();
        if omega == 0 {
            Ok(self.parts[0] as i64)
        } else {
            let mu = self.count_parts_greater_than(omega as u32);
            Ok(mu as i64 - omega as i64)
        }
    }

    /// The conjugate partition: the transpose of the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let width = self.parts[0] as usize;
        let mut conj = Vec::with_capacity(width);
        for col in 1..=width as u32 {
            conj.push(self.parts.iter().take_while(|&&p| p >= col).count() as u32);
        }
        Partition::from_sorted_unchecked(conj)
    }

    /// The rotation `lambda*`: the parts of the conjugate written in
    /// non-decreasing order, as a composition (the Ferrers diagram rotated
    /// a quarter turn counterclockwise).
    pub fn rotate_star(&self) -> Composition {
        let mut parts: Vec<u32> = self.conjugate().parts.clone();
        parts.reverse();
        Composition::from_parts_unchecked(parts)
    }

    /// Multiset insertion of extra positive parts.
    pub fn with_parts(&self, extra: &[u32]) -> Result<Partition> {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(extra);
        Partition::from_multiset(parts)
    }

    /// Multiset removal of `count` copies of `v`; errors when fewer copies
    /// are present.
    pub fn without_parts(&self, v: u32, count: usize) -> Result<Partition> {
        if self.multiplicity(v) < count {
            return Err(Error::InvalidPartition(format!(
                "cannot remove {} copies of {} from {:?}",
                count, v, self.parts
            )));
        }
        let mut removed = 0;
        let parts = self
            .parts
            .iter()
            .filter(|&&p| {
                if p == v && removed < count {
                    removed += 1;
                    false
                } else {
                    true
                }
            })
            .copied()
            .collect();
        Ok(Partition::from_sorted_unchecked(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", part)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{}", self)
    }
}

/// The pentagonal staircase partition `G_j`:
/// `G_j = (2j-1, 2j-2, ..., j)` for `j > 0`, `G_{-j} = (2j, 2j-1, ..., j+1)`
/// for `j > 0`, and `G_0` empty. `|G_j| = j(3j-1)/2` for every integer `j`.
pub fn staircase(j: i64) -> Partition {
    if j == 0 {
        return Partition::empty();
    }
    let parts: Vec<u32> = if j > 0 {
        let j = j as u32;
        (j..=2 * j - 1).rev().collect()
    } else {
        let i = (-j) as u32;
        (i + 1..=2 * i).rev().collect()
    };
    Partition::from_sorted_unchecked(parts)
}

/// All partitions of `n` in reverse-lexicographic order, starting from `(n)`
/// and ending at `(1, 1, ..., 1)`. `n = 0` yields the empty partition.
pub fn partitions_of(n: u32) -> Partitions {
    partitions_bounded(n, n)
}

/// All partitions of `n` with every part at most `max_part`, in
/// reverse-lexicographic order.
pub fn partitions_bounded(n: u32, max_part: u32) -> Partitions {
    Partitions::new(n, max_part)
}

/// All partitions of `n` into distinct parts, in reverse-lexicographic
/// order.
pub fn distinct_partitions_of(n: u32) -> impl Iterator<Item = Partition> {
    partitions_of(n).filter(Partition::has_distinct_parts)
}

/// Iterator over partitions in reverse-lexicographic order.
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Partitions {
    fn new(n: u32, max_part: u32) -> Self {
        let current = if n == 0 {
            Some(Vec::new())
        } else if max_part == 0 {
            None
        } else {
            Some(greedy_fill(n, max_part))
        };
        Partitions { current }
    }
}

/// Largest partition of `n` (in reverse-lex order) with parts <= bound.
fn greedy_fill(mut n: u32, bound: u32) -> Vec<u32> {
    let mut parts = Vec::with_capacity((n / bound + 1) as usize);
    while n >= bound {
        parts.push(bound);
        n -= bound;
    }
    if n > 0 {
        parts.push(n);
    }
    parts
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        // successor: decrement the rightmost part exceeding 1 and refill the
        // tail greedily under the decremented value
        self.current = cur.iter().rposition(|&p| p > 1).map(|i| {
            let tail_total: u32 = cur[i..].iter().sum();
            let d = cur[i] - 1;
            let mut next = cur[..i].to_vec();
            next.extend(greedy_fill(tail_total, d));
            next
        });
        Some(Partition::from_sorted_unchecked(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_increasing_and_zero_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn partitions_of_five_in_reverse_lex_order() {
        let got: Vec<Partition> = partitions_of(5).collect();
        let expected = vec![
            p(&[5]),
            p(&[4, 1]),
            p(&[3, 2]),
            p(&[3, 1, 1]),
            p(&[2, 2, 1]),
            p(&[2, 1, 1, 1]),
            p(&[1, 1, 1, 1, 1]),
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn partitions_of_zero_is_the_empty_partition() {
        let got: Vec<Partition> = partitions_of(0).collect();
        assert_eq!(got, vec![Partition::empty()]);
    }

    #[test]
    fn thirty_partitions_of_nine() {
        assert_eq!(partitions_of(9).count(), 30);
    }

    #[test]
    fn bounded_partitions_respect_the_bound() {
        let all: Vec<Partition> = partitions_bounded(6, 2).collect();
        assert_eq!(all.len(), 4); // 2+2+2, 2+2+1+1, 2+1^4, 1^6
        assert!(all.iter().all(|q| q.largest().unwrap() <= 2));
    }

    #[test]
    fn conjugate_example() {
        assert_eq!(p(&[5, 4, 4, 1, 1, 1]).conjugate(), p(&[6, 3, 3, 3, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugate_is_an_involution() {
        for q in partitions_of(12) {
            assert_eq!(q.conjugate().conjugate(), q);
            assert_eq!(q.conjugate().size(), q.size());
            assert_eq!(q.conjugate().len() as u32, q.largest().unwrap_or(0));
        }
    }

    #[test]
    fn rotate_star_example() {
        let c = p(&[5, 4, 4, 1, 1, 1]).rotate_star();
        assert_eq!(c.parts(), &[1, 3, 3, 3, 6]);
        let row = p(&[4]).rotate_star();
        assert_eq!(row.parts(), &[1, 1, 1, 1]);
        assert!(Partition::empty().rotate_star().parts().is_empty());
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(staircase(2), p(&[3, 2]));
        assert_eq!(staircase(0), Partition::empty());
        assert_eq!(staircase(-2), p(&[4, 3]));
        assert_eq!(staircase(1), p(&[1]));
        assert_eq!(staircase(-1), p(&[2]));
    }

    #[test]
    fn staircase_sizes_match_pentagonal_numbers() {
        for j in -50..=50i64 {
            let expected = crate::series::pentagonal_number(j);
            assert_eq!(staircase(j).size() as i64, expected, "j={}", j);
            if j != 0 {
                assert!(staircase(j).has_distinct_parts());
            }
        }
    }

    #[test]
    fn crank_examples() {
        assert_eq!(p(&[5]).crank().unwrap(), 5);
        assert_eq!(p(&[4, 1]).crank().unwrap(), 0);
        // omega = 3, mu = 0
        assert_eq!(p(&[2, 1, 1, 1]).crank().unwrap(), -3);
        assert!(Partition::empty().crank().is_err());
    }

    #[test]
    fn crank_histogram_of_five() {
        let mut cranks: Vec<i64> = partitions_of(5).map(|q| q.crank().unwrap()).collect();
        cranks.sort_unstable();
        assert_eq!(cranks, vec![-5, -3, -1, 0, 1, 3, 5]);
    }

    #[test]
    fn first_part_greater_than_reads_from_the_small_end() {
        let q = p(&[5, 3, 3, 3, 2, 1]);
        assert_eq!(q.first_part_greater_than(2), Some(3));
        assert_eq!(q.first_part_greater_than(4), Some(5));
        assert_eq!(q.first_part_greater_than(5), None);
    }

    #[test]
    fn multiset_edits() {
        let q = p(&[3, 2, 2, 1]);
        assert_eq!(q.with_parts(&[2, 4]).unwrap(), p(&[4, 3, 2, 2, 2, 1]));
        assert_eq!(q.without_parts(2, 2).unwrap(), p(&[3, 1]));
        assert!(q.without_parts(2, 3).is_err());
    }

    #[test]
    fn serde_is_a_plain_array() {
        let q = p(&[3, 1, 1]);
        assert_eq!(serde_json::to_string(&q).unwrap(), "[3,1,1]");
        let back: Partition = serde_json::from_str("[3,1,1]").unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
