//! Executable forward and inverse maps for the crate's four bijection
//! families, each paired with an exhaustive verifier:
//!
//! * `thm1_phi` / `thm1_psi`: the injection from double-max unimodal
//!   compositions into unique-max ones, and the bijection from the
//!   complement onto all unimodal compositions (together they witness
//!   `u_0(n) = u_1(n) - u_2(n)`).
//! * `franklin`: the sign-reversing involution on distinct-part partitions
//!   whose fixed points are exactly the pentagonal staircases.
//! * `sec5_psi`: for each staircase `G_j`, the bijection between vector
//!   partitions `(G_j, pi2, pi3)` with the `m`-appropriate length relation
//!   and unimodal compositions with `m` prescribed maximal parts.
//! * `sec6_f` / `sec6_g`: the small-part exchange bijections behind the
//!   truncated pentagonal relations `p(n-1)+p(n-2)-p(n) = P~_1(n)` and
//!   `p(n-g(k)) + p(n-h(k)) = P~_{k-1}(n) + P~_k(n)`, with explicit
//!   disjoint-union copy tags (intersection elements are hit once per copy).
//!
//! Domain membership is checked eagerly on every map call, so misuse
//! surfaces at the call site rather than as a corrupted witness downstream.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::identities::{run_check, CheckReport, Violation};
use crate::objects::{
    distinct_partitions_of, partitions_of, staircase, unimodal_compositions_of,
    unimodal_with_max_mult, Composition, Partition,
};
use crate::series::{pentagonal_number, pochhammer_inf};
use crate::statistics::is_p_tilde_partition;

fn outside<T>(map: &'static str, reason: impl Into<String>) -> Result<T> {
    Err(Error::OutsideDomain {
        map,
        reason: reason.into(),
    })
}

// ---------------------------------------------------------------------------
// The thm1 map pair on unimodal compositions
// ---------------------------------------------------------------------------

/// Decrements the second of the two adjacent maximal parts. Maps a unimodal
/// composition with exactly two maximal parts `>= 2` to one with a unique
/// maximal part followed by a part exactly one smaller.
pub fn thm1_phi(c: &Composition) -> Result<Composition> {
    const MAP: &str = "thm1_phi";
    if !c.is_unimodal() {
        return outside(MAP, format!("{} is not unimodal", c));
    }
    if c.max_multiplicity() != 2 {
        return outside(
            MAP,
            format!("{} does not have exactly two maximal parts", c),
        );
    }
    let max = c.max_part().unwrap();
    if max < 2 {
        return outside(MAP, format!("{} has maximal part 1", c));
    }
    let j = c.first_max_position().unwrap();
    let mut parts = c.parts().to_vec();
    parts[j + 1] -= 1;
    Ok(Composition::new(parts).expect("decremented part stays positive"))
}

/// Inverse of [`thm1_phi`]: increments the part right after the unique
/// maximum, which must equal the maximum minus one.
pub fn thm1_phi_inverse(c: &Composition) -> Result<Composition> {
    const MAP: &str = "thm1_phi_inverse";
    if !c.is_unimodal() {
        return outside(MAP, format!("{} is not unimodal", c));
    }
    if c.max_multiplicity() != 1 {
        return outside(MAP, format!("{} does not have a unique maximal part", c));
    }
    let j = c.first_max_position().unwrap();
    let max = c.max_part().unwrap();
    if j + 1 >= c.len() || c.parts()[j + 1] + 1 != max {
        return outside(
            MAP,
            format!("{} is not followed by a part equal to max - 1", c),
        );
    }
    let mut parts = c.parts().to_vec();
    parts[j + 1] += 1;
    Ok(Composition::new(parts).unwrap())
}

/// Decrements the unique maximal part. Defined on unimodal compositions
/// whose unique maximum `>= 2` is *not* followed by a part equal to
/// `max - 1` (the complement of the image of [`thm1_phi`]).
pub fn thm1_psi(c: &Composition) -> Result<Composition> {
    const MAP: &str = "thm1_psi";
    if !c.is_unimodal() {
        return outside(MAP, format!("{} is not unimodal", c));
    }
    if c.max_multiplicity() != 1 {
        return outside(MAP, format!("{} does not have a unique maximal part", c));
    }
    let max = c.max_part().unwrap();
    if max < 2 {
        return outside(MAP, format!("{} has maximal part 1", c));
    }
    let j = c.first_max_position().unwrap();
    if j + 1 < c.len() && c.parts()[j + 1] + 1 == max {
        return outside(MAP, format!("{} lies in the image of thm1_phi", c));
    }
    let mut parts = c.parts().to_vec();
    parts[j] -= 1;
    Ok(Composition::new(parts).expect("decremented max stays positive"))
}

/// Inverse of [`thm1_psi`]: adds one to the last of the largest parts.
pub fn thm1_psi_inverse(c: &Composition) -> Result<Composition> {
    const MAP: &str = "thm1_psi_inverse";
    if !c.is_unimodal() {
        return outside(MAP, format!("{} is not unimodal", c));
    }
    let Some(j) = c.last_max_position() else {
        return outside(MAP, "the empty composition has no maximal part");
    };
    let mut parts = c.parts().to_vec();
    parts[j] += 1;
    Ok(Composition::new(parts).unwrap())
}

// ---------------------------------------------------------------------------
// Franklin's involution
// ---------------------------------------------------------------------------

/// Franklin's involution on distinct-part partitions: the smallest part and
/// the staircase slope below the largest part exchange roles, flipping the
/// parity of the number of parts. Fixed points are exactly the staircases
/// `G_j`, `j != 0` (and the empty partition).
pub fn franklin(lambda: &Partition) -> Result<Partition> {
    const MAP: &str = "franklin";
    if !lambda.has_distinct_parts() {
        return outside(MAP, format!("{} does not have distinct parts", lambda));
    }
    if lambda.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = lambda.parts();
    let ell = parts.len();
    let smallest = parts[ell - 1] as usize;
    let mut slope = 1usize;
    while slope < ell && parts[slope] == parts[0] - slope as u32 {
        slope += 1;
    }
    if smallest <= slope {
        if smallest == ell {
            // lambda = G_ell = (2*ell - 1, ..., ell)
            return Ok(lambda.clone());
        }
        let mut out = parts[..ell - 1].to_vec();
        for p in out.iter_mut().take(smallest) {
            *p += 1;
        }
        Ok(Partition::from_sorted_unchecked(out))
    } else {
        if slope == ell && smallest == slope + 1 {
            // lambda = G_{-ell} = (2*ell, ..., ell + 1)
            return Ok(lambda.clone());
        }
        let mut out = parts.to_vec();
        for p in out.iter_mut().take(slope) {
            *p -= 1;
        }
        out.push(slope as u32);
        Ok(Partition::from_sorted_unchecked(out))
    }
}

// ---------------------------------------------------------------------------
// Staircase-decomposition maps (Corollary-4 bijections)
// ---------------------------------------------------------------------------

fn concat_parts(prefix: &Composition, tail: &Partition) -> Composition {
    let mut parts = prefix.parts().to_vec();
    parts.extend_from_slice(tail.parts());
    Composition::new(parts).expect("all parts positive")
}

/// Builds the unimodal composition attached to the vector partition
/// `(G_j, pi2, pi3)`:
///
/// * `m = 0` (requires `ell(pi2) > ell(pi3)`): `pi3* ++ pi2'`
/// * `m = 1` (requires `ell(pi2) >= ell(pi3)`): `pi3* ++ (pi2 + {1})'`
/// * `m = 2` (requires `ell(pi2) = ell(pi3)`): `(pi3 + {1})* ++ (pi2 + {1})'`
///
/// where `'` is conjugation and `*` is conjugation followed by reversal.
/// The output is a unimodal composition with exactly `m` maximal parts for
/// `m >= 1`, of total size `|pi2| + |pi3| + m`. The staircase index `j`
/// fixes the first component of the triple; it only enters the size
/// bookkeeping, which the exhaustive verifier checks.
pub fn sec5_psi(j: i64, pi2: &Partition, pi3: &Partition, m: u8) -> Result<Composition> {
    const MAP: &str = "sec5_psi";
    let _ = j;
    let (l2, l3) = (pi2.len(), pi3.len());
    match m {
        0 => {
            if l2 <= l3 {
                return outside(
                    MAP,
                    format!("m=0 requires ell(pi2) > ell(pi3), got {} <= {}", l2, l3),
                );
            }
            Ok(concat_parts(&pi3.rotate_star(), &pi2.conjugate()))
        }
        1 => {
            if l2 < l3 {
                return outside(
                    MAP,
                    format!("m=1 requires ell(pi2) >= ell(pi3), got {} < {}", l2, l3),
                );
            }
            let alpha2 = pi2.with_parts(&[1])?;
            Ok(concat_parts(&pi3.rotate_star(), &alpha2.conjugate()))
        }
        2 => {
            if l2 != l3 {
                return outside(
                    MAP,
                    format!("m=2 requires ell(pi2) = ell(pi3), got {} != {}", l2, l3),
                );
            }
            let alpha2 = pi2.with_parts(&[1])?;
            let alpha3 = pi3.with_parts(&[1])?;
            Ok(concat_parts(&alpha3.rotate_star(), &alpha2.conjugate()))
        }
        _ => outside(MAP, "m must be 0, 1, or 2"),
    }
}

/// Recovers `(pi2, pi3)` from a composition in the image of [`sec5_psi`]:
/// split at the first maximal part, undo the added unit parts, and
/// conjugate both halves back.
pub fn sec5_psi_inverse(c: &Composition, m: u8) -> Result<(Partition, Partition)> {
    const MAP: &str = "sec5_psi_inverse";
    if !c.is_unimodal() {
        return outside(MAP, format!("{} is not unimodal", c));
    }
    if c.is_empty() {
        return outside(MAP, "the empty composition is not in the image");
    }
    let parts = c.parts();
    let i = c.first_max_position().unwrap();
    let from_ascending = |prefix: &[u32]| -> Result<Partition> {
        let mut rev: Vec<u32> = prefix.iter().rev().copied().collect();
        rev.retain(|&p| p > 0);
        let conj = Partition::new(rev).map_err(|_| Error::OutsideDomain {
            map: MAP,
            reason: format!("prefix of {} is not weakly increasing", c),
        })?;
        Ok(conj.conjugate())
    };
    let from_descending = |suffix: &[u32]| -> Result<Partition> {
        let mut v: Vec<u32> = suffix.to_vec();
        v.retain(|&p| p > 0);
        let conj = Partition::new(v).map_err(|_| Error::OutsideDomain {
            map: MAP,
            reason: format!("suffix of {} is not weakly decreasing", c),
        })?;
        Ok(conj.conjugate())
    };
    match m {
        0 => {
            let pi3 = from_ascending(&parts[..i])?;
            let pi2 = from_descending(&parts[i..])?;
            if pi2.len() <= pi3.len() {
                return outside(
                    MAP,
                    format!("{} does not satisfy the m=0 length relation", c),
                );
            }
            Ok((pi2, pi3))
        }
        1 => {
            if c.max_multiplicity() != 1 {
                return outside(MAP, format!("m=1 requires a unique maximal part in {}", c));
            }
            let pi3 = from_ascending(&parts[..i])?;
            let mut suffix = parts[i..].to_vec();
            suffix[0] -= 1;
            let pi2 = from_descending(&suffix)?;
            if pi2.len() < pi3.len() {
                return outside(
                    MAP,
                    format!("{} does not satisfy the m=1 length relation", c),
                );
            }
            Ok((pi2, pi3))
        }
        2 => {
            if c.max_multiplicity() != 2 {
                return outside(
                    MAP,
                    format!("m=2 requires exactly two maximal parts in {}", c),
                );
            }
            let mut prefix = parts[..=i].to_vec();
            prefix[i] -= 1;
            let mut suffix = parts[i + 1..].to_vec();
            suffix[0] -= 1;
            let pi3 = from_ascending(&prefix)?;
            let pi2 = from_descending(&suffix)?;
            if pi2.len() != pi3.len() {
                return outside(
                    MAP,
                    format!("{} does not satisfy the m=2 length relation", c),
                );
            }
            Ok((pi2, pi3))
        }
        _ => outside(MAP, "m must be 0, 1, or 2"),
    }
}

// ---------------------------------------------------------------------------
// Small-part exchange maps (truncated pentagonal bijections)
// ---------------------------------------------------------------------------

/// Membership in `P*_{1,2}(n)`: the partition has a part 2 and either
/// (i) at least three parts 1, or (ii) one or two parts 1, a part greater
/// than 2, and the total of all parts <= 2 exceeding the smallest part > 2.
pub fn is_p_star12(mu: &Partition) -> bool {
    if mu.multiplicity(2) == 0 {
        return false;
    }
    let ones = mu.count_ones();
    if ones >= 3 {
        return true;
    }
    if ones == 0 {
        return false;
    }
    match mu.first_part_greater_than(2) {
        None => false,
        Some(b) => (ones + 2 * mu.multiplicity(2)) as u64 > b as u64,
    }
}

/// The bijection from `P*_{1,2}(n)` onto `P~_1(n)`: with three or more unit
/// parts, two of them merge into a 2; otherwise all parts <= 2 are traded
/// for one copy of the smallest part `b > 2` plus unit parts.
pub fn sec6_f(mu: &Partition) -> Result<Partition> {
    const MAP: &str = "sec6_f";
    if !is_p_star12(mu) {
        return outside(MAP, format!("{} is not in P*_(1,2)", mu));
    }
    let ones = mu.count_ones();
    if ones >= 3 {
        mu.without_parts(1, 2)?.with_parts(&[2])
    } else {
        let b = mu.first_part_greater_than(2).expect("membership checked");
        let total = ones as u32 + 2 * mu.multiplicity(2) as u32;
        let stripped = mu
            .without_parts(1, ones)?
            .without_parts(2, mu.multiplicity(2))?;
        let unit_count = (total - b) as usize;
        let mut extra = vec![1u32; unit_count];
        extra.push(b);
        stripped.with_parts(&extra)
    }
}

/// Inverse of [`sec6_f`] on `P~_1(n)`: split a 2 back into two unit parts
/// when a 2 is present; otherwise strip one copy of the smallest part
/// `b > 2` together with all unit parts and re-expand by parity.
pub fn sec6_f_inverse(lambda: &Partition) -> Result<Partition> {
    const MAP: &str = "sec6_f_inverse";
    if !is_p_tilde_partition(lambda, 1) {
        return outside(MAP, format!("{} is not in P~_1", lambda));
    }
    if lambda.multiplicity(2) >= 1 {
        lambda.without_parts(2, 1)?.with_parts(&[1, 1])
    } else {
        let b = lambda
            .first_part_greater_than(2)
            .expect("P~_1 members have a part > 1, and there is no 2");
        let m = lambda.count_ones();
        let t = m as u32 + b;
        let stripped = lambda.without_parts(b, 1)?.without_parts(1, m)?;
        let (ones, twos) = if t.is_multiple_of(2) {
            (2usize, ((t - 2) / 2) as usize)
        } else {
            (1usize, ((t - 1) / 2) as usize)
        };
        let mut extra = vec![1u32; ones];
        extra.extend(std::iter::repeat_n(2u32, twos));
        stripped.with_parts(&extra)
    }
}

/// Pre-step of the `k = 1` truncated pentagonal bijection: a partition with
/// no parts 1 or 2 trades its smallest part `a >= 3` for one or two unit
/// parts plus 2s according to the parity of `a`. The image is exactly the
/// set of partitions with parts 1 and 2 present that lie outside
/// `P*_{1,2}`.
pub fn split_small(lambda: &Partition) -> Result<Partition> {
    const MAP: &str = "split_small";
    if lambda.is_empty() {
        return outside(MAP, "the empty partition has no smallest part");
    }
    if lambda.count_ones() > 0 || lambda.multiplicity(2) > 0 {
        return outside(MAP, format!("{} has parts equal to 1 or 2", lambda));
    }
    let a = lambda.smallest().unwrap();
    let stripped = lambda.without_parts(a, 1)?;
    let (ones, twos) = if a % 2 == 1 {
        (1usize, ((a - 1) / 2) as usize)
    } else {
        (2usize, ((a - 2) / 2) as usize)
    };
    let mut extra = vec![1u32; ones];
    extra.extend(std::iter::repeat_n(2u32, twos));
    stripped.with_parts(&extra)
}

/// Inverse of [`split_small`]: merge all parts 1 and 2 back into a single
/// smallest part.
pub fn split_small_inverse(mu: &Partition) -> Result<Partition> {
    const MAP: &str = "split_small_inverse";
    let ones = mu.count_ones();
    let twos = mu.multiplicity(2);
    if !(1..=2).contains(&ones) || twos == 0 {
        return outside(
            MAP,
            format!("{} must have one or two 1s and at least one 2", mu),
        );
    }
    let s = ones as u32 + 2 * twos as u32;
    if let Some(b) = mu.first_part_greater_than(2) {
        if s > b {
            return outside(MAP, format!("{} lies in P*_(1,2)", mu));
        }
    }
    mu.without_parts(1, ones)?
        .without_parts(2, twos)?
        .with_parts(&[s])
}

/// Which copy of the source disjoint union a partition entered [`sec6_g`]
/// from: `A` holds partitions of `n - k(3k-1)/2`, `B` partitions of
/// `n - k(3k+1)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum GSource {
    A,
    B,
}

impl fmt::Display for GSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GSource::A => write!(f, "A"),
            GSource::B => write!(f, "B"),
        }
    }
}

impl FromStr for GSource {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(GSource::A),
            "B" | "b" => Ok(GSource::B),
            _ => Err(Error::Usage(format!("unknown source copy {:?}", s))),
        }
    }
}

/// Which copy of the target disjoint union `P~_{k-1}(n) ⊔ P~_k(n)` a
/// [`sec6_g`] image lands in. The copy tag is part of the data: partitions
/// in the intersection occur once per copy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum GTarget {
    #[serde(rename = "Pk-1")]
    PkMinus1,
    Pk,
}

impl fmt::Display for GTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GTarget::PkMinus1 => write!(f, "Pk-1"),
            GTarget::Pk => write!(f, "Pk"),
        }
    }
}

impl FromStr for GTarget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Pk-1" | "pk-1" | "PkMinus1" => Ok(GTarget::PkMinus1),
            "Pk" | "pk" => Ok(GTarget::Pk),
            _ => Err(Error::Usage(format!("unknown target copy {:?}", s))),
        }
    }
}

/// The disjoint-union bijection behind
/// `p(n - k(3k-1)/2) + p(n - k(3k+1)/2) = P~_{k-1}(n) + P~_k(n)` for
/// `k >= 2`:
///
/// * source `A`: insert one part equal to each `1 ..= k-1` and `k` parts
///   equal to `k` (lands in the `P~_{k-1}` copy);
/// * source `B`, case 1 (`lambda` has no part `> k`, or its first part
///   `x > k` satisfies `x >= k + m_k + 1` where `m_k` is the multiplicity
///   of `k`): remove all `k`s, insert `1 ..= k-1`, and insert `k` parts
///   equal to `k + m_k + 1` (lands in `P~_{k-1}`, with no part `k`);
/// * source `B`, case 2 (`x <= k + m_k`): remove all `k`s, insert
///   `1 ..= k-1`, `k + m_k + 1 - x` parts equal to `k`, and `k` parts equal
///   to `x` (lands in `P~_k`).
pub fn sec6_g(k: u32, lambda: &Partition, source: GSource) -> Result<(Partition, GTarget)> {
    const MAP: &str = "sec6_g";
    if k < 2 {
        return outside(MAP, "requires k >= 2");
    }
    let small: Vec<u32> = (1..k).collect();
    match source {
        GSource::A => {
            let mut extra = small;
            extra.extend(std::iter::repeat_n(k, k as usize));
            Ok((lambda.with_parts(&extra)?, GTarget::PkMinus1))
        }
        GSource::B => {
            let m_k = lambda.multiplicity(k);
            let x = lambda.first_part_greater_than(k);
            let stripped = lambda.without_parts(k, m_k)?;
            match x {
                Some(x) if (x as u64) <= k as u64 + m_k as u64 => {
                    // case 2; x <= k + m_k forces m_k >= 1
                    let mut extra = small;
                    let kcount = (k as u64 + m_k as u64 + 1 - x as u64) as usize;
                    extra.extend(std::iter::repeat_n(k, kcount));
                    extra.extend(std::iter::repeat_n(x, k as usize));
                    Ok((stripped.with_parts(&extra)?, GTarget::Pk))
                }
                _ => {
                    // case 1
                    let v = k + m_k as u32 + 1;
                    let mut extra = small;
                    extra.extend(std::iter::repeat_n(v, k as usize));
                    Ok((stripped.with_parts(&extra)?, GTarget::PkMinus1))
                }
            }
        }
    }
}

/// Inverse of [`sec6_g`] on the tagged disjoint union:
///
/// * copy `Pk` (case I): remove one part equal to each `1 ..= k-1` and `k`
///   copies of the first part `y > k`, then insert `y - k - 1` parts equal
///   to `k`; the preimage came from source `B`.
/// * copy `Pk-1` with a part `k` (case II(a)): remove `1 ..= k-1` and `k`
///   copies of `k`; the preimage came from source `A`.
/// * copy `Pk-1` without a part `k` (case II(b)): same exchange as case I;
///   the preimage came from source `B`.
pub fn sec6_g_inverse(k: u32, mu: &Partition, copy: GTarget) -> Result<(Partition, GSource)> {
    const MAP: &str = "sec6_g_inverse";
    if k < 2 {
        return outside(MAP, "requires k >= 2");
    }
    let strip_small = |p: &Partition| -> Result<Partition> {
        let mut out = p.clone();
        for i in 1..k {
            out = out.without_parts(i, 1)?;
        }
        Ok(out)
    };
    let swap_down = |p: &Partition| -> Result<Partition> {
        let y = p
            .first_part_greater_than(k)
            .expect("membership guarantees a part > k");
        let stripped = strip_small(p)?.without_parts(y, k as usize)?;
        let fill = vec![k; (y - k - 1) as usize];
        stripped.with_parts(&fill)
    };
    match copy {
        GTarget::Pk => {
            if !is_p_tilde_partition(mu, k) {
                return outside(MAP, format!("{} is not in P~_k for k={}", mu, k));
            }
            Ok((swap_down(mu)?, GSource::B))
        }
        GTarget::PkMinus1 => {
            if !is_p_tilde_partition(mu, k - 1) {
                return outside(MAP, format!("{} is not in P~_(k-1) for k={}", mu, k));
            }
            if mu.multiplicity(k) > 0 {
                if mu.multiplicity(k) < k as usize {
                    return outside(
                        MAP,
                        format!("{} has a part {} with multiplicity below {}", mu, k, k),
                    );
                }
                let out = strip_small(mu)?.without_parts(k, k as usize)?;
                Ok((out, GSource::A))
            } else {
                Ok((swap_down(mu)?, GSource::B))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Exhaustive verifiers
// ---------------------------------------------------------------------------

/// One record per domain object in a verification run.
#[derive(Clone, Debug, Serialize)]
pub struct BijectionWitness {
    pub map: String,
    pub params: BTreeMap<String, i64>,
    pub input: serde_json::Value,
    pub output: serde_json::Value,
    pub round_trip_ok: bool,
}

pub struct VerifyOutcome {
    pub report: CheckReport,
    pub witnesses: Vec<BijectionWitness>,
}

/// The bijection families the verifier can run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BijectionMap {
    /// `thm1_phi` and `thm1_psi` together, against `u_0 = u_1 - u_2`.
    Thm1,
    Franklin,
    Sec5Psi,
    Sec6F,
    Sec6G,
    /// The `split_small` reduction into `P*_{1,2}`.
    K1Split,
}

impl BijectionMap {
    pub fn name(self) -> &'static str {
        match self {
            BijectionMap::Thm1 => "thm1",
            BijectionMap::Franklin => "franklin",
            BijectionMap::Sec5Psi => "sec5_psi",
            BijectionMap::Sec6F => "sec6_f",
            BijectionMap::Sec6G => "sec6_g",
            BijectionMap::K1Split => "k1_split",
        }
    }
}

impl FromStr for BijectionMap {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "thm1" => Ok(BijectionMap::Thm1),
            "franklin" => Ok(BijectionMap::Franklin),
            "sec5_psi" => Ok(BijectionMap::Sec5Psi),
            "sec6_f" => Ok(BijectionMap::Sec6F),
            "sec6_g" => Ok(BijectionMap::Sec6G),
            "k1_split" => Ok(BijectionMap::K1Split),
            _ => Err(Error::Usage(format!(
                "unknown map {:?}; expected thm1 | franklin | sec5_psi | sec6_f | sec6_g | k1_split",
                s
            ))),
        }
    }
}

/// Parameters for one verification run.
#[derive(Clone, Copy, Debug)]
pub struct BijectionRun {
    pub map: BijectionMap,
    pub n: u32,
    pub m: Option<u8>,
    pub j: Option<i64>,
    pub k: Option<u32>,
    pub collect_witnesses: bool,
}

/// Exhaustively applies the named map to every domain object of size `n`:
/// image membership, injectivity, surjectivity onto the stated codomain,
/// and round trips are all checked object by object. Failures are reported
/// in the returned [`CheckReport`], never thrown; `Err` is reserved for
/// invalid parameter combinations.
pub fn verify_bijection(run: &BijectionRun) -> Result<VerifyOutcome> {
    match run.map {
        BijectionMap::Thm1 => Ok(verify_thm1(run.n, run.collect_witnesses)),
        BijectionMap::Franklin => Ok(verify_franklin(run.n, run.collect_witnesses)),
        BijectionMap::Sec5Psi => {
            let m = run
                .m
                .ok_or_else(|| Error::Usage("sec5_psi requires --m".into()))?;
            if m > 2 {
                return Err(Error::Usage("sec5_psi requires m in {0, 1, 2}".into()));
            }
            Ok(verify_sec5_psi(
                run.j.unwrap_or(0),
                m,
                run.n,
                run.collect_witnesses,
            ))
        }
        BijectionMap::Sec6F => Ok(verify_sec6_f(run.n, run.collect_witnesses)),
        BijectionMap::Sec6G => {
            let k = run
                .k
                .ok_or_else(|| Error::Usage("sec6_g requires --k".into()))?;
            if k < 2 {
                return Err(Error::Usage("sec6_g requires k >= 2".into()));
            }
            Ok(verify_sec6_g(k, run.n, run.collect_witnesses))
        }
        BijectionMap::K1Split => Ok(verify_k1_split(run.n, run.collect_witnesses)),
    }
}

struct WitnessSink {
    map: &'static str,
    params: BTreeMap<String, i64>,
    collect: bool,
    items: Vec<BijectionWitness>,
}

impl WitnessSink {
    fn new(map: &'static str, params: &[(&str, i64)], collect: bool) -> Self {
        WitnessSink {
            map,
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            collect,
            items: Vec::new(),
        }
    }

    fn push<I: Serialize, O: Serialize>(&mut self, input: &I, output: &O, round_trip_ok: bool) {
        if self.collect {
            self.items.push(BijectionWitness {
                map: self.map.to_string(),
                params: self.params.clone(),
                input: serde_json::to_value(input).unwrap(),
                output: serde_json::to_value(output).unwrap(),
                round_trip_ok,
            });
        }
    }
}

fn violation_at(
    n: u32,
    lhs: impl ToString,
    rhs: impl ToString,
    note: impl Into<String>,
) -> Violation {
    Violation {
        location: BTreeMap::from([("n".to_string(), n as i64)]),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        note: Some(note.into()),
    }
}

fn verify_thm1(n: u32, collect: bool) -> VerifyOutcome {
    let params = [("n", n as i64)];
    let mut sink = WitnessSink::new("thm1", &params, collect);
    let report = run_check("biject_thm1", &params, || {
        let u2: Vec<Composition> = unimodal_with_max_mult(n, 2).collect();
        let u1: BTreeSet<Composition> = unimodal_with_max_mult(n, 1).collect();
        let u0: BTreeSet<Composition> = unimodal_compositions_of(n).collect();

        let mut phi_image: BTreeSet<Composition> = BTreeSet::new();
        for c in &u2 {
            let img = thm1_phi(c).map_err(|e| {
                violation_at(n, c, "-", format!("phi rejected a domain element: {}", e))
            })?;
            if !u1.contains(&img) {
                return Err(violation_at(n, c, &img, "phi image is not in U_1"));
            }
            let rt = thm1_phi_inverse(&img)
                .map(|back| back == *c)
                .unwrap_or(false);
            sink.push(c, &img, rt);
            if !rt {
                return Err(violation_at(n, c, &img, "phi round trip failed"));
            }
            if !phi_image.insert(img.clone()) {
                return Err(violation_at(
                    n,
                    c,
                    &img,
                    "phi image repeated: not injective",
                ));
            }
        }

        let mut psi_image: BTreeSet<Composition> = BTreeSet::new();
        for c in u1.iter().filter(|c| !phi_image.contains(*c)) {
            let img = thm1_psi(c).map_err(|e| {
                violation_at(n, c, "-", format!("psi rejected a domain element: {}", e))
            })?;
            if !u0.contains(&img) {
                return Err(violation_at(n, c, &img, "psi image is not in U_0"));
            }
            let rt = thm1_psi_inverse(&img)
                .map(|back| back == *c)
                .unwrap_or(false);
            sink.push(c, &img, rt);
            if !rt {
                return Err(violation_at(n, c, &img, "psi round trip failed"));
            }
            if !psi_image.insert(img.clone()) {
                return Err(violation_at(
                    n,
                    c,
                    &img,
                    "psi image repeated: not injective",
                ));
            }
        }

        if psi_image != u0 {
            let missing = u0.difference(&psi_image).next().unwrap();
            return Err(violation_at(n, "-", missing, "psi is not onto U_0"));
        }
        if u0.len() + u2.len() != u1.len() {
            return Err(violation_at(
                n,
                u0.len(),
                u1.len() - u2.len(),
                "|U_0| != |U_1| - |U_2|",
            ));
        }
        Ok(Some(format!(
            "|U_0|={}, |U_1|={}, |U_2|={}",
            u0.len(),
            u1.len(),
            u2.len()
        )))
    });
    VerifyOutcome {
        report,
        witnesses: sink.items,
    }
}

fn verify_franklin(n: u32, collect: bool) -> VerifyOutcome {
    let params = [("n", n as i64)];
    let mut sink = WitnessSink::new("franklin", &params, collect);
    let report = run_check("biject_franklin", &params, || {
        let expected_fixed: BTreeSet<Partition> = (-((n as i64) + 1)..=(n as i64) + 1)
            .filter(|&j| j != 0 && pentagonal_number(j) == n as i64)
            .map(staircase)
            .collect();
        let mut fixed: BTreeSet<Partition> = BTreeSet::new();
        let mut signed: i64 = 0;
        for lambda in distinct_partitions_of(n) {
            let image =
                franklin(&lambda).map_err(|e| violation_at(n, &lambda, "-", e.to_string()))?;
            signed += if lambda.len() % 2 == 0 { 1 } else { -1 };
            if image == lambda {
                fixed.insert(lambda.clone());
                sink.push(&lambda, &image, true);
                continue;
            }
            if image.size() != lambda.size() || !image.has_distinct_parts() {
                return Err(violation_at(
                    n,
                    &lambda,
                    &image,
                    "image is not a distinct partition of n",
                ));
            }
            if (image.len() as i64 - lambda.len() as i64).abs() != 1 {
                return Err(violation_at(
                    n,
                    &lambda,
                    &image,
                    "length must change by exactly 1",
                ));
            }
            let rt = franklin(&image).map(|back| back == lambda).unwrap_or(false);
            sink.push(&lambda, &image, rt);
            if !rt {
                return Err(violation_at(
                    n,
                    &lambda,
                    &image,
                    "involution round trip failed",
                ));
            }
        }
        if fixed != expected_fixed {
            return Err(violation_at(
                n,
                format!("{:?}", fixed),
                format!("{:?}", expected_fixed),
                "fixed points are not exactly the staircases",
            ));
        }
        let theta = pochhammer_inf(1, n as usize);
        let expected_signed = theta.coeff(n as usize).clone();
        if num_bigint::BigInt::from(signed) != expected_signed {
            return Err(violation_at(
                n,
                signed,
                expected_signed,
                "signed count disagrees with the pentagonal coefficient",
            ));
        }
        let fixed_list: Vec<String> = expected_fixed.iter().map(|p| p.to_string()).collect();
        Ok(Some(format!("fixed points: [{}]", fixed_list.join(", "))))
    });
    VerifyOutcome {
        report,
        witnesses: sink.items,
    }
}

fn sec5_pairs(total: u32, m: u8) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for b in 0..=total {
        for pi2 in partitions_of(b) {
            for pi3 in partitions_of(total - b) {
                let ok = match m {
                    0 => pi2.len() > pi3.len(),
                    1 => pi2.len() >= pi3.len(),
                    _ => pi2.len() == pi3.len(),
                };
                if ok {
                    out.push((pi2.clone(), pi3));
                }
            }
        }
    }
    out
}

fn verify_sec5_psi(j: i64, m: u8, n: u32, collect: bool) -> VerifyOutcome {
    let params = [("j", j), ("m", m as i64), ("n", n as i64)];
    let mut sink = WitnessSink::new("sec5_psi", &params, collect);
    let report = run_check("biject_sec5_psi", &params, || {
        let g = pentagonal_number(j);
        if g > n as i64 {
            return Ok(Some(format!(
                "staircase size {} exceeds n={}: empty domain",
                g, n
            )));
        }
        let s = (n as i64 - g) as u32;
        let target: BTreeSet<Composition> = if m == 0 {
            unimodal_compositions_of(s).collect()
        } else {
            unimodal_with_max_mult(s, m as u32).collect()
        };
        let mut image: BTreeSet<Composition> = BTreeSet::new();
        for (pi2, pi3) in sec5_pairs(s, m) {
            let img = sec5_psi(j, &pi2, &pi3, m)
                .map_err(|e| violation_at(n, format!("({}, {})", pi2, pi3), "-", e.to_string()))?;
            if !target.contains(&img) {
                return Err(violation_at(
                    n,
                    format!("({}, {})", pi2, pi3),
                    &img,
                    "image is not in the stated codomain",
                ));
            }
            let rt = sec5_psi_inverse(&img, m)
                .map(|(b2, b3)| b2 == pi2 && b3 == pi3)
                .unwrap_or(false);
            sink.push(&(&pi2, &pi3), &img, rt);
            if !rt {
                return Err(violation_at(
                    n,
                    format!("({}, {})", pi2, pi3),
                    &img,
                    "round trip failed",
                ));
            }
            if !image.insert(img.clone()) {
                return Err(violation_at(
                    n,
                    format!("({}, {})", pi2, pi3),
                    &img,
                    "image repeated: not injective",
                ));
            }
        }
        if image != target {
            let missing = target.difference(&image).next().unwrap();
            return Err(violation_at(
                n,
                "-",
                missing,
                "map is not onto the codomain",
            ));
        }
        Ok(Some(format!(
            "|domain| = |U_{}({})| = {}",
            m,
            s,
            target.len()
        )))
    });
    VerifyOutcome {
        report,
        witnesses: sink.items,
    }
}

fn verify_sec6_f(n: u32, collect: bool) -> VerifyOutcome {
    let params = [("n", n as i64)];
    let mut sink = WitnessSink::new("sec6_f", &params, collect);
    let report = run_check("biject_sec6_f", &params, || {
        let domain: Vec<Partition> = partitions_of(n).filter(is_p_star12).collect();
        let target: BTreeSet<Partition> = partitions_of(n)
            .filter(|p| is_p_tilde_partition(p, 1))
            .collect();
        let mut image: BTreeSet<Partition> = BTreeSet::new();
        for mu in &domain {
            let img = sec6_f(mu).map_err(|e| violation_at(n, mu, "-", e.to_string()))?;
            if !target.contains(&img) {
                return Err(violation_at(n, mu, &img, "image is not in P~_1"));
            }
            let rt = sec6_f_inverse(&img)
                .map(|back| back == *mu)
                .unwrap_or(false);
            sink.push(mu, &img, rt);
            if !rt {
                return Err(violation_at(n, mu, &img, "round trip failed"));
            }
            if !image.insert(img.clone()) {
                return Err(violation_at(n, mu, &img, "image repeated: not injective"));
            }
        }
        if image != target {
            let missing = target.difference(&image).next().unwrap();
            return Err(violation_at(n, "-", missing, "map is not onto P~_1"));
        }
        Ok(Some(format!("|P*_(1,2)| = |P~_1| = {}", domain.len())))
    });
    VerifyOutcome {
        report,
        witnesses: sink.items,
    }
}

fn verify_sec6_g(k: u32, n: u32, collect: bool) -> VerifyOutcome {
    let params = [("k", k as i64), ("n", n as i64)];
    let mut sink = WitnessSink::new("sec6_g", &params, collect);
    let report = run_check("biject_sec6_g", &params, || {
        let k64 = k as i64;
        let size_a = n as i64 - k64 * (3 * k64 - 1) / 2;
        let size_b = n as i64 - k64 * (3 * k64 + 1) / 2;

        // expected tagged multiset: each member of P~_{k-1} once in its
        // copy, each member of P~_k once in its copy
        let mut expected: BTreeMap<(GTarget, Partition), usize> = BTreeMap::new();
        for mu in partitions_of(n) {
            if is_p_tilde_partition(&mu, k - 1) {
                *expected.entry((GTarget::PkMinus1, mu.clone())).or_default() += 1;
            }
            if is_p_tilde_partition(&mu, k) {
                *expected.entry((GTarget::Pk, mu)).or_default() += 1;
            }
        }

        let mut got: BTreeMap<(GTarget, Partition), usize> = BTreeMap::new();
        let sources = [(GSource::A, size_a), (GSource::B, size_b)];
        for (source, size) in sources {
            if size < 0 {
                continue;
            }
            for lambda in partitions_of(size as u32) {
                let (img, copy) = sec6_g(k, &lambda, source)
                    .map_err(|e| violation_at(n, &lambda, "-", e.to_string()))?;
                if img.size() != n as u64 {
                    return Err(violation_at(n, &lambda, &img, "image has the wrong size"));
                }
                let rt = sec6_g_inverse(k, &img, copy)
                    .map(|(back, src)| back == lambda && src == source)
                    .unwrap_or(false);
                sink.push(
                    &serde_json::json!({"source": source, "partition": &lambda}),
                    &serde_json::json!({"copy": copy, "partition": &img}),
                    rt,
                );
                if !rt {
                    return Err(violation_at(n, &lambda, &img, "round trip failed"));
                }
                *got.entry((copy, img)).or_default() += 1;
            }
        }

        if got != expected {
            let diff = expected
                .iter()
                .find(|(key, count)| got.get(key) != Some(count))
                .map(|((copy, p), _)| format!("{} in copy {}", p, copy))
                .or_else(|| {
                    got.keys()
                        .find(|key| !expected.contains_key(key))
                        .map(|(copy, p)| format!("unexpected {} in copy {}", p, copy))
                })
                .unwrap_or_else(|| "multiset mismatch".to_string());
            return Err(violation_at(n, "-", diff, "tagged multiset mismatch"));
        }
        let overlap = expected
            .keys()
            .filter(|(copy, p)| {
                *copy == GTarget::Pk && expected.contains_key(&(GTarget::PkMinus1, p.clone()))
            })
            .count();
        Ok(Some(format!(
            "p({}) + p({}) = |P~_{}| + |P~_{}| = {}; {} partitions counted once per copy",
            size_a,
            size_b,
            k - 1,
            k,
            expected.len(),
            overlap
        )))
    });
    VerifyOutcome {
        report,
        witnesses: sink.items,
    }
}

fn verify_k1_split(n: u32, collect: bool) -> VerifyOutcome {
    let params = [("n", n as i64)];
    let mut sink = WitnessSink::new("k1_split", &params, collect);
    let report = run_check("biject_k1_split", &params, || {
        let domain: Vec<Partition> = partitions_of(n)
            .filter(|p| !p.is_empty() && p.count_ones() == 0 && p.multiplicity(2) == 0)
            .collect();
        let with_ones_and_twos: BTreeSet<Partition> = partitions_of(n)
            .filter(|p| p.count_ones() >= 1 && p.multiplicity(2) >= 1)
            .collect();
        let p_star: BTreeSet<Partition> = with_ones_and_twos
            .iter()
            .filter(|p| is_p_star12(p))
            .cloned()
            .collect();
        let complement: BTreeSet<Partition> =
            with_ones_and_twos.difference(&p_star).cloned().collect();
        let mut image: BTreeSet<Partition> = BTreeSet::new();
        for lambda in &domain {
            let img =
                split_small(lambda).map_err(|e| violation_at(n, lambda, "-", e.to_string()))?;
            if !complement.contains(&img) {
                return Err(violation_at(
                    n,
                    lambda,
                    &img,
                    "image must have 1s and 2s and lie outside P*_(1,2)",
                ));
            }
            let rt = split_small_inverse(&img)
                .map(|back| back == *lambda)
                .unwrap_or(false);
            sink.push(lambda, &img, rt);
            if !rt {
                return Err(violation_at(n, lambda, &img, "round trip failed"));
            }
            if !image.insert(img.clone()) {
                return Err(violation_at(
                    n,
                    lambda,
                    &img,
                    "image repeated: not injective",
                ));
            }
        }
        if image != complement {
            let missing = complement.difference(&image).next().unwrap();
            return Err(violation_at(
                n,
                "-",
                missing,
                "map is not onto the complement",
            ));
        }
        // p_{1,2}(n) - p_{no 1, no 2}(n) = |P*_{1,2}(n)|
        if with_ones_and_twos.len() - domain.len() != p_star.len() {
            return Err(violation_at(
                n,
                with_ones_and_twos.len() - domain.len(),
                p_star.len(),
                "count identity failed",
            ));
        }
        Ok(Some(format!(
            "p_(1,2)({}) = {}, split image = {}, |P*_(1,2)| = {}",
            n,
            with_ones_and_twos.len(),
            complement.len(),
            p_star.len()
        )))
    });
    VerifyOutcome {
        report,
        witnesses: sink.items,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(thm1_phi(&comp(&[1, 2, 2, 1])).unwrap(), comp(&[1, 2, 1, 1]));
        assert_eq!(thm1_phi(&comp(&[3, 3])).unwrap(), comp(&[3, 2]));
        assert_eq!(thm1_phi(&comp(&[2, 2, 1, 1])).unwrap(), comp(&[2, 1, 1, 1]));
    }

    #[test]
    fn phi_rejects_unique_max_and_unit_max() {
        assert!(thm1_phi(&comp(&[3, 2])).is_err());
        assert!(thm1_phi(&comp(&[1, 1])).is_err());
        assert!(thm1_phi(&comp(&[2, 1, 2])).is_err());
    }

    #[test]
    fn psi_examples() {
        assert_eq!(thm1_psi(&comp(&[5])).unwrap(), comp(&[4]));
        assert_eq!(thm1_psi(&comp(&[1, 3, 1])).unwrap(), comp(&[1, 2, 1]));
        // (3, 2) is in the image of phi, so psi must reject it
        assert!(thm1_psi(&comp(&[3, 2])).is_err());
    }

    #[test]
    fn psi_inverse_adds_one_to_the_last_largest_part() {
        assert_eq!(
            thm1_psi_inverse(&comp(&[1, 2, 2, 1])).unwrap(),
            comp(&[1, 2, 3, 1])
        );
        assert_eq!(thm1_psi_inverse(&comp(&[4])).unwrap(), comp(&[5]));
    }

    #[test]
    fn franklin_fixes_staircases() {
        for j in (-10i64..=10).filter(|&j| j != 0) {
            let g = staircase(j);
            assert_eq!(franklin(&g).unwrap(), g, "G_{}", j);
        }
        assert_eq!(franklin(&part(&[3, 2])).unwrap(), part(&[3, 2]));
    }

    #[test]
    fn franklin_is_an_involution_off_fixed_points() {
        for n in 1..=25u32 {
            for lambda in distinct_partitions_of(n) {
                let image = franklin(&lambda).unwrap();
                assert_eq!(
                    franklin(&image).unwrap(),
                    lambda,
                    "n={} lambda={}",
                    n,
                    lambda
                );
                if image != lambda {
                    assert_eq!((image.len() as i64 - lambda.len() as i64).abs(), 1);
                }
            }
        }
    }

    #[test]
    fn franklin_rejects_repeated_parts() {
        assert!(franklin(&part(&[3, 3, 1])).is_err());
    }

    #[test]
    fn sec5_psi_examples() {
        assert_eq!(
            sec5_psi(0, &part(&[1]), &Partition::empty(), 0).unwrap(),
            comp(&[1])
        );
        assert_eq!(
            sec5_psi(0, &Partition::empty(), &Partition::empty(), 2).unwrap(),
            comp(&[1, 1])
        );
        assert_eq!(
            sec5_psi(0, &part(&[2, 1]), &part(&[1]), 1).unwrap(),
            comp(&[1, 3, 1])
        );
    }

    #[test]
    fn sec5_psi_rejects_bad_length_relations() {
        assert!(sec5_psi(0, &Partition::empty(), &part(&[1]), 0).is_err());
        assert!(sec5_psi(0, &part(&[2]), &part(&[1, 1]), 1).is_err());
        assert!(sec5_psi(0, &part(&[2]), &Partition::empty(), 2).is_err());
    }

    #[test]
    fn sec5_psi_inverse_examples() {
        let (pi2, pi3) = sec5_psi_inverse(&comp(&[1, 3, 1]), 0).unwrap();
        assert_eq!(pi2, part(&[2, 1, 1]));
        assert_eq!(pi3, part(&[1]));

        let (pi2, pi3) = sec5_psi_inverse(&comp(&[1, 1]), 2).unwrap();
        assert!(pi2.is_empty() && pi3.is_empty());

        let (pi2, pi3) = sec5_psi_inverse(&comp(&[5]), 1).unwrap();
        assert_eq!(pi2, part(&[1, 1, 1, 1]));
        assert!(pi3.is_empty());
    }

    #[test]
    fn sec6_f_paper_examples() {
        assert_eq!(
            sec6_f(&part(&[8, 8, 5, 3, 2, 2, 1, 1, 1, 1])).unwrap(),
            part(&[8, 8, 5, 3, 2, 2, 2, 1, 1])
        );
        assert_eq!(
            sec6_f(&part(&[8, 8, 5, 5, 2, 2, 2, 1, 1])).unwrap(),
            part(&[8, 8, 5, 5, 5, 1, 1, 1])
        );
    }

    #[test]
    fn sec6_f_round_trips_on_examples() {
        for mu in [
            part(&[8, 8, 5, 3, 2, 2, 1, 1, 1, 1]),
            part(&[8, 8, 5, 5, 2, 2, 2, 1, 1]),
            part(&[2, 1, 1, 1]),
        ] {
            let img = sec6_f(&mu).unwrap();
            assert_eq!(sec6_f_inverse(&img).unwrap(), mu);
        }
    }

    #[test]
    fn sec6_f_rejects_non_members() {
        assert!(sec6_f(&part(&[2, 2, 1])).is_err());
        assert!(sec6_f(&part(&[3, 1, 1])).is_err());
    }

    #[test]
    fn sec6_g_examples_at_k_two() {
        // (1) of 1 = 6 - 5: insert one part 1 and two parts 2
        let (img, copy) = sec6_g(2, &part(&[1]), GSource::A).unwrap();
        assert_eq!((img, copy), (part(&[2, 2, 1, 1]), GTarget::PkMinus1));

        let (img, copy) = sec6_g(2, &Partition::empty(), GSource::B).unwrap();
        assert_eq!((img, copy), (part(&[3, 3, 1]), GTarget::PkMinus1));

        let (img, copy) = sec6_g(2, &part(&[3, 2]), GSource::B).unwrap();
        assert_eq!((img, copy), (part(&[3, 3, 3, 2, 1]), GTarget::Pk));
    }

    #[test]
    fn sec6_g_inverse_examples_at_k_two() {
        assert_eq!(
            sec6_g_inverse(2, &part(&[2, 2, 1, 1]), GTarget::PkMinus1).unwrap(),
            (part(&[1]), GSource::A)
        );
        assert_eq!(
            sec6_g_inverse(2, &part(&[3, 3, 1]), GTarget::PkMinus1).unwrap(),
            (Partition::empty(), GSource::B)
        );
        assert_eq!(
            sec6_g_inverse(2, &part(&[3, 3, 3, 2, 1]), GTarget::Pk).unwrap(),
            (part(&[3, 2]), GSource::B)
        );
    }

    #[test]
    fn verify_thm1_at_four() {
        let run = BijectionRun {
            map: BijectionMap::Thm1,
            n: 4,
            m: None,
            j: None,
            k: None,
            collect_witnesses: true,
        };
        let outcome = verify_bijection(&run).unwrap();
        assert!(outcome.report.is_pass(), "{:?}", outcome.report);
        assert_eq!(outcome.witnesses.len(), 12);
    }

    #[test]
    fn verify_thm1_small_sweep() {
        for n in 1..=14u32 {
            let outcome = verify_thm1(n, false);
            assert!(outcome.report.is_pass(), "n={}: {:?}", n, outcome.report);
        }
    }

    #[test]
    fn verify_franklin_notes_fixed_points() {
        let outcome = verify_franklin(12, false);
        assert!(outcome.report.is_pass());
        assert_eq!(
            outcome.report.detail.as_deref(),
            Some("fixed points: [(5, 4, 3)]")
        );
    }

    #[test]
    fn verify_franklin_sweep() {
        for n in 1..=20u32 {
            let outcome = verify_franklin(n, false);
            assert!(outcome.report.is_pass(), "n={}: {:?}", n, outcome.report);
        }
    }

    #[test]
    fn verify_sec5_psi_small() {
        for n in 1..=12u32 {
            for m in 0..=2u8 {
                for j in [-2i64, -1, 0, 1, 2] {
                    let outcome = verify_sec5_psi(j, m, n, false);
                    assert!(
                        outcome.report.is_pass(),
                        "j={} m={} n={}: {:?}",
                        j,
                        m,
                        n,
                        outcome.report
                    );
                }
            }
        }
    }

    #[test]
    fn verify_sec6_f_small() {
        let outcome = verify_sec6_f(5, false);
        assert!(outcome.report.is_pass());
        assert_eq!(
            outcome.report.detail.as_deref(),
            Some("|P*_(1,2)| = |P~_1| = 1")
        );
        for n in 1..=20u32 {
            assert!(verify_sec6_f(n, false).report.is_pass(), "n={}", n);
        }
    }

    #[test]
    fn verify_sec6_g_small() {
        for k in 2..=3u32 {
            for n in 1..=20u32 {
                let outcome = verify_sec6_g(k, n, false);
                assert!(
                    outcome.report.is_pass(),
                    "k={} n={}: {:?}",
                    k,
                    n,
                    outcome.report
                );
            }
        }
    }

    #[test]
    fn verify_k1_split_small() {
        for n in 1..=20u32 {
            let outcome = verify_k1_split(n, false);
            assert!(outcome.report.is_pass(), "n={}: {:?}", n, outcome.report);
        }
    }

    #[test]
    fn verify_bijection_rejects_missing_params() {
        let run = BijectionRun {
            map: BijectionMap::Sec6G,
            n: 10,
            m: None,
            j: None,
            k: None,
            collect_witnesses: false,
        };
        assert!(verify_bijection(&run).is_err());
    }
}
