//! Compositions (ordered sequences of positive parts), the unimodality
//! test, and direct generators for unimodal compositions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objects::{partitions_bounded, Partition};

/// A composition: a sequence of positive parts in which order matters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Vec<u32> {
        c.parts
    }
}

impl Composition {
    /// Validates that every part is >= 1 (the empty composition is allowed).
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition("parts must be positive".into()));
        }
        Ok(Self { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p >= 1));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True when some pivot index `t` splits the composition into a
    /// non-decreasing prefix and a non-increasing suffix. In a unimodal
    /// composition all maximal parts are adjacent.
    pub fn is_unimodal(&self) -> bool {
        let mut i = 0;
        while i + 1 < self.parts.len() && self.parts[i] <= self.parts[i + 1] {
            i += 1;
        }
        while i + 1 < self.parts.len() && self.parts[i] >= self.parts[i + 1] {
            i += 1;
        }
        i + 1 >= self.parts.len()
    }

    pub fn max_part(&self) -> Option<u32> {
        self.parts.iter().copied().max()
    }

    /// Number of parts equal to the maximum.
    pub fn max_multiplicity(&self) -> usize {
        match self.max_part() {
            None => 0,
            Some(m) => self.parts.iter().filter(|&&p| p == m).count(),
        }
    }

    pub fn first_max_position(&self) -> Option<usize> {
        let m = self.max_part()?;
        self.parts.iter().position(|&p| p == m)
    }

    pub fn last_max_position(&self) -> Option<usize> {
        let m = self.max_part()?;
        self.parts.iter().rposition(|&p| p == m)
    }
}

impl fmt::Display for Composition {
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

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition{}", self)
    }
}

/// All compositions of `n`, enumerated by first-part recursion: every
/// composition beginning with 1 (recursively), then those beginning with 2,
/// and so on up to `(n)`. `n = 0` yields the empty composition.
pub fn compositions_of(n: u32) -> Compositions {
    let first = if n == 0 {
        Vec::new()
    } else {
        vec![1; n as usize]
    };
    Compositions {
        current: Some(first),
    }
}

pub struct Compositions {
    current: Option<Vec<u32>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let cur = self.current.take()?;
        self.current = if cur.len() <= 1 {
            None
        } else {
            // successor in first-part-recursion order: absorb the last part,
            // increment the new last, and re-expand the remainder as ones
            let mut next = cur.clone();
            let last = next.pop().unwrap();
            *next.last_mut().unwrap() += 1;
            next.extend(std::iter::repeat_n(1, last as usize - 1));
            Some(next)
        };
        Some(Composition::from_parts_unchecked(cur))
    }
}

/// Splices `left` (ascending), a block of `mult` copies of `v`, and `right`
/// (descending) into one unimodal composition. Both side partitions must
/// have all parts < v, which makes the decomposition unique.
fn splice(v: u32, mult: usize, left: &Partition, right: &Partition) -> Composition {
    let mut parts = Vec::with_capacity(left.len() + mult + right.len());
    parts.extend(left.parts().iter().rev());
    parts.extend(std::iter::repeat_n(v, mult));
    parts.extend(right.parts().iter());
    Composition::from_parts_unchecked(parts)
}

/// All unimodal compositions of `n`, each exactly once.
///
/// Enumeration order: by maximal part `v` ascending, then by the
/// multiplicity of the maximum, then by the weight of the ascending prefix,
/// with both side partitions in reverse-lexicographic order. `n = 0` yields
/// nothing (there is no unimodal composition of 0).
pub fn unimodal_compositions_of(n: u32) -> impl Iterator<Item = Composition> {
    (1..=n).flat_map(move |v| {
        (1..=(n / v) as usize).flat_map(move |mult| {
            let rest = n - mult as u32 * v;
            sides(v, mult, rest)
        })
    })
}

/// All unimodal compositions of `n + m` whose maximal part appears exactly
/// `m` times (`m >= 1`), each exactly once. For `n = 0` this is the single
/// composition `(1, 1, ..., 1)` with `m` parts.
pub fn unimodal_with_max_mult(n: u32, m: u32) -> impl Iterator<Item = Composition> {
    assert!(m >= 1, "unimodal_with_max_mult requires m >= 1");
    let total = n + m;
    (1..=total / m).flat_map(move |v| {
        let rest = total - m * v;
        sides(v, m as usize, rest)
    })
}

fn sides(v: u32, mult: usize, rest: u32) -> impl Iterator<Item = Composition> {
    (0..=rest).flat_map(move |a| {
        partitions_bounded(a, v.saturating_sub(1)).flat_map(move |left| {
            partitions_bounded(rest - a, v - 1).map(move |right| splice(v, mult, &left, &right))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_zero_parts() {
        assert!(Composition::new(vec![1, 0, 2]).is_err());
    }

    #[test]
    fn unimodality_examples() {
        assert!(c(&[1, 2, 1]).is_unimodal());
        assert!(!c(&[2, 1, 2]).is_unimodal());
        assert!(c(&[4]).is_unimodal());
        assert!(c(&[]).is_unimodal());
        assert!(c(&[1, 2, 2, 1]).is_unimodal());
        assert!(!c(&[1, 3, 1, 2]).is_unimodal());
    }

    #[test]
    fn max_part_accessors() {
        let x = c(&[1, 3, 3, 2]);
        assert_eq!(x.max_part(), Some(3));
        assert_eq!(x.max_multiplicity(), 2);
        assert_eq!(x.first_max_position(), Some(1));
        assert_eq!(x.last_max_position(), Some(2));
    }

    #[test]
    fn compositions_of_three_in_first_part_order() {
        let got: Vec<Composition> = compositions_of(3).collect();
        assert_eq!(got, vec![c(&[1, 1, 1]), c(&[1, 2]), c(&[2, 1]), c(&[3])]);
    }

    #[test]
    fn compositions_count_is_power_of_two() {
        for n in 1..=12u32 {
            assert_eq!(compositions_of(n).count(), 1 << (n - 1));
        }
    }

    #[test]
    fn unimodal_compositions_of_four_match_the_known_eight() {
        let got: BTreeSet<Composition> = unimodal_compositions_of(4).collect();
        let expected: BTreeSet<Composition> = [
            c(&[1, 1, 1, 1]),
            c(&[1, 1, 2]),
            c(&[1, 2, 1]),
            c(&[1, 3]),
            c(&[2, 1, 1]),
            c(&[2, 2]),
            c(&[3, 1]),
            c(&[4]),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn unimodal_compositions_of_one() {
        let got: Vec<Composition> = unimodal_compositions_of(1).collect();
        assert_eq!(got, vec![c(&[1])]);
    }

    #[test]
    fn unimodal_counts_match_the_filter_oracle() {
        for n in 1..=14u32 {
            let direct = unimodal_compositions_of(n).count();
            let filtered = compositions_of(n).filter(|x| x.is_unimodal()).count();
            assert_eq!(direct, filtered, "n={}", n);
        }
        assert_eq!(unimodal_compositions_of(5).count(), 15);
    }

    #[test]
    fn unimodal_streams_have_no_duplicates() {
        for n in 1..=12u32 {
            let all: Vec<Composition> = unimodal_compositions_of(n).collect();
            let set: BTreeSet<&Composition> = all.iter().collect();
            assert_eq!(all.len(), set.len(), "n={}", n);
        }
    }

    #[test]
    fn max_mult_stream_matches_the_filter_oracle() {
        for n in 0..=11u32 {
            for m in 1..=2u32 {
                let direct: BTreeSet<Composition> = unimodal_with_max_mult(n, m).collect();
                let filtered: BTreeSet<Composition> = compositions_of(n + m)
                    .filter(|x| x.is_unimodal() && x.max_multiplicity() == m as usize)
                    .collect();
                assert_eq!(direct, filtered, "n={}, m={}", n, m);
            }
        }
    }

    #[test]
    fn max_mult_examples() {
        let got: BTreeSet<Composition> = unimodal_with_max_mult(4, 2).collect();
        let expected: BTreeSet<Composition> = [
            c(&[1, 1, 2, 2]),
            c(&[1, 2, 2, 1]),
            c(&[2, 2, 1, 1]),
            c(&[3, 3]),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expected);

        let at_zero: Vec<Composition> = unimodal_with_max_mult(0, 2).collect();
        assert_eq!(at_zero, vec![c(&[1, 1])]);

        assert_eq!(unimodal_with_max_mult(4, 1).count(), 12);
    }

    #[test]
    fn serde_is_a_plain_array() {
        let x = c(&[1, 3, 1]);
        assert_eq!(serde_json::to_string(&x).unwrap(), "[1,3,1]");
        let back: Composition = serde_json::from_str("[1,3,1]").unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<Composition>("[1,0]").is_err());
    }
}
