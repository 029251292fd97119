//! Exact arithmetic on power series in `q` truncated at a fixed order,
//! plus constructors for the generating functions used throughout the crate:
//! q-Pochhammer symbols, the partition generating function, Gaussian
//! binomial coefficients, pentagonal-number theta sums, the unimodal
//! composition series `u_m`, the vector-crank series `N_V(k, -)`, the
//! truncated-pentagonal tail series for `M_k` and `P~_k`, and the
//! cumulative crank series `C_m`.
//!
//! All coefficients are arbitrary-precision integers and every operation is
//! exact; truncation at the fixed order is the only approximation anywhere.
//! Two series may be combined only when they share the same order —
//! mixing orders is a caller bug and panics rather than silently
//! re-truncating.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient count above which `mul` fans out across the rayon pool.
const PARALLEL_MUL_MIN_ORDER: usize = 192;

/// A formal power series in `q` with integer coefficients, truncated at a
/// fixed `order`: exactly the coefficients of `q^0 ..= q^order` are kept.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        Self::constant(order, BigInt::one())
    }

    /// The constant series `c`.
    pub fn constant(order: usize, c: BigInt) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The monomial `c * q^exp`; zero if `exp` exceeds the order.
    pub fn monomial(order: usize, exp: usize, c: BigInt) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// Builds a series from exactly `order + 1` coefficients.
    pub fn from_coeffs(order: usize, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != order + 1 {
            return Err(Error::Usage(format!(
                "expected {} coefficients for order {}, got {}",
                order + 1,
                order,
                coeffs.len()
            )));
        }
        Ok(Self { order, coeffs })
    }

    /// Builds a series from the low coefficients of a polynomial, padding
    /// with zeros up to the order. Panics if more than `order + 1`
    /// coefficients are supplied.
    pub fn polynomial(order: usize, low_coeffs: &[i64]) -> Self {
        assert!(
            low_coeffs.len() <= order + 1,
            "polynomial has {} coefficients but the order is {}",
            low_coeffs.len(),
            order
        );
        let mut s = Self::zero(order);
        for (i, &c) in low_coeffs.iter().enumerate() {
            s.coeffs[i] = BigInt::from(c);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `q^i`. Panics if `i` exceeds the order.
    pub fn coeff(&self, i: usize) -> &BigInt {
        assert!(
            i <= self.order,
            "coefficient index {} exceeds truncation order {}",
            i,
            self.order
        );
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    fn assert_same_order(&self, other: &Self) {
        assert!(
            self.order == other.order,
            "series order mismatch: {} vs {}",
            self.order,
            other.order
        );
    }

    /// Coefficient-wise sum. Panics on mismatched orders.
    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Self {
            order: self.order,
            coeffs,
        }
    }

    /// Coefficient-wise difference. Panics on mismatched orders.
    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Self {
            order: self.order,
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Truncated Cauchy product: `coeffs[n] = sum_i a[i]*b[n-i]`.
    ///
    /// Panics on mismatched orders. The scan runs over the operand with the
    /// smaller support, and output coefficients are computed in parallel for
    /// large orders (each coefficient is an independent reduction).
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        let (a, b) = if self.support_len() <= other.support_len() {
            (self, other)
        } else {
            (other, self)
        };
        let support: Vec<usize> = (0..=a.order).filter(|&i| !a.coeffs[i].is_zero()).collect();
        let convolve = |n: usize| {
            let mut acc = BigInt::zero();
            for &i in &support {
                if i > n {
                    break;
                }
                acc += &a.coeffs[i] * &b.coeffs[n - i];
            }
            acc
        };
        let coeffs: Vec<BigInt> = if self.order >= PARALLEL_MUL_MIN_ORDER {
            (0..=self.order).into_par_iter().map(convolve).collect()
        } else {
            (0..=self.order).map(convolve).collect()
        };
        Self {
            order: self.order,
            coeffs,
        }
    }

    fn support_len(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplication by `q^s` (coefficients above the order fall off).
    pub fn shift(&self, s: usize) -> Self {
        let mut out = Self::zero(self.order);
        for i in s..=self.order {
            out.coeffs[i] = self.coeffs[i - s].clone();
        }
        out
    }

    /// Multiplicative inverse up to the order, by the recursive coefficient
    /// solve `b[n] = -a[0]^{-1} * sum_{i=1}^{n} a[i] b[n-i]`.
    ///
    /// The constant term must be 1 or -1 (so the inverse has integer
    /// coefficients); anything else is a domain error.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return Err(Error::NonUnitConstant(c0.to_string()));
        }
        let negate = c0.is_one();
        let mut out = vec![BigInt::zero(); self.order + 1];
        out[0] = c0.clone();
        for n in 1..=self.order {
            let mut acc = BigInt::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out[n - i];
                }
            }
            out[n] = if negate { -acc } else { acc };
        }
        Ok(Self {
            order: self.order,
            coeffs: out,
        })
    }

    /// In-place multiplication by `1/(1 - q^step)` (prefix sums with stride
    /// `step`). A no-op when `step` exceeds the order.
    fn div_one_minus(&mut self, step: usize) {
        debug_assert!(step >= 1);
        for i in step..=self.order {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - step];
        }
    }

    /// In-place multiplication by `(1 - q^step)`.
    fn mul_one_minus(&mut self, step: usize) {
        debug_assert!(step >= 1);
        for i in (step..=self.order).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] -= &lo[i - step];
        }
    }

    /// In-place multiplication by `q^s`.
    fn shift_in_place(&mut self, s: usize) {
        if s == 0 {
            return;
        }
        if s > self.order {
            for c in &mut self.coeffs {
                *c = BigInt::zero();
            }
            return;
        }
        self.coeffs.rotate_right(s);
        for c in &mut self.coeffs[..s] {
            *c = BigInt::zero();
        }
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::add(self, rhs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::sub(self, rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::neg(self)
    }
}

impl AddAssign<&TruncatedSeries> for TruncatedSeries {
    fn add_assign(&mut self, rhs: &TruncatedSeries) {
        self.assert_same_order(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", mag)?;
                    }
                    if i == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{}", i)?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries({})", self)
    }
}

// JSON form: {"order": N, "coeffs": ["1", "-1", ...]} — decimal strings so
// arbitrary-precision values survive any JSON reader.
#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        if repr.coeffs.len() != repr.order + 1 {
            return Err(D::Error::custom(format!(
                "series of order {} must have {} coefficients, got {}",
                repr.order,
                repr.order + 1,
                repr.coeffs.len()
            )));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Self {
            order: repr.order,
            coeffs,
        })
    }
}

/// The generalized pentagonal number `g(j) = j(3j-1)/2` for any integer `j`.
pub fn pentagonal_number(j: i64) -> i64 {
    j * (3 * j - 1) / 2
}

/// The finite q-Pochhammer symbol `(q^s; q)_n = prod_{i=0}^{n-1} (1 - q^{s+i})`
/// truncated at `order`; `n = 0` gives 1.
pub fn pochhammer(s: u32, n: u32, order: usize) -> TruncatedSeries {
    assert!(s >= 1, "pochhammer requires s >= 1");
    let mut out = TruncatedSeries::one(order);
    for i in 0..n as u64 {
        let e = s as u64 + i;
        if e > order as u64 {
            // (1 - q^e) is the identity modulo q^{order+1}
            break;
        }
        out.mul_one_minus(e as usize);
    }
    out
}

/// The infinite q-Pochhammer symbol `(q^s; q)_inf` truncated at `order`.
/// Only the factors `(1 - q^{s+i})` with `s + i <= order` contribute.
pub fn pochhammer_inf(s: u32, order: usize) -> TruncatedSeries {
    assert!(s >= 1, "pochhammer_inf requires s >= 1");
    let mut out = TruncatedSeries::one(order);
    for e in s as usize..=order {
        out.mul_one_minus(e);
    }
    out
}

/// `1/(q;q)_inf`: the coefficient of `q^n` is the partition number `p(n)`.
pub fn partition_gf(order: usize) -> TruncatedSeries {
    pochhammer_inf(1, order)
        .inverse()
        .expect("(q;q)_inf has constant term 1")
}

/// The Gaussian binomial coefficient `[n, k]_q`, an exact polynomial in `q`
/// truncated at `order`; zero when `k < 0` or `k > n`.
///
/// Computed by the Pascal-type recurrence `[n,k] = [n-1,k-1] + q^k [n-1,k]`,
/// which guarantees integer polynomial output without any series division.
pub fn gaussian_binomial(n: u32, k: i64, order: usize) -> TruncatedSeries {
    if k < 0 || k > n as i64 {
        return TruncatedSeries::zero(order);
    }
    // [n, k] = [n, n-k]; run the recurrence on the smaller column index.
    let k = (k as u32).min(n - k as u32) as usize;
    let mut row = vec![TruncatedSeries::one(order)];
    for t in 1..=n as usize {
        gaussian_row_advance(&mut row, t, k);
    }
    row[k].clone()
}

/// Advances a row of Gaussian binomials from top index `t - 1` to `t`,
/// keeping columns `0 ..= kmax`. `row[j]` holds `[t-1, j]` on entry and
/// `[t, j]` on exit.
fn gaussian_row_advance(row: &mut Vec<TruncatedSeries>, t: usize, kmax: usize) {
    let jmax = t.min(kmax);
    for j in (1..=jmax.min(t - 1)).rev() {
        row[j] = row[j - 1].add(&row[j].shift(j));
    }
    if t <= kmax && row.len() == t {
        // new diagonal entry [t, t] = 1
        row.push(TruncatedSeries::one(row[0].order()));
    }
}

/// The signed theta sum `sum_{j=jlo}^{jhi} (-1)^j q^{j(3j-1)/2}` with terms
/// above the order dropped.
pub fn pentagonal_sum(jlo: i64, jhi: i64, order: usize) -> TruncatedSeries {
    assert!(jlo <= jhi, "pentagonal_sum requires jlo <= jhi");
    let (wlo, whi) = pentagonal_window(order);
    let mut out = TruncatedSeries::zero(order);
    for j in jlo.max(wlo)..=jhi.min(whi) {
        let e = pentagonal_number(j);
        if e >= 0 && e as usize <= order {
            let sign = if j.rem_euclid(2) == 0 { 1 } else { -1 };
            out.coeffs[e as usize] += sign;
        }
    }
    out
}

/// The largest window `[jlo, jhi]` whose pentagonal exponents fit under the
/// order; `pentagonal_sum` over this window equals `(q;q)_inf` truncated at
/// `order` (Euler's pentagonal number theorem).
pub fn pentagonal_window(order: usize) -> (i64, i64) {
    let mut jhi = 0;
    while pentagonal_number(jhi + 1) <= order as i64 {
        jhi += 1;
    }
    let mut jlo = 0;
    while pentagonal_number(jlo - 1) <= order as i64 {
        jlo -= 1;
    }
    (jlo, jhi)
}

/// Generating function for `u_m(n)`, the number of unimodal compositions of
/// `n + m` whose maximal part appears exactly `m` times (for `m = 1, 2`),
/// or of all unimodal compositions of `n` (for `m = 0`).
///
/// * `m = 0`: `sum_{k>=1} q^k / ((q;q)_{k-1} (q;q)_k)`; summand `k` has
///   minimal exponent `k`, so the sum stops once `k > order`. The constant
///   term is 0 because the sum starts at `k = 1`.
/// * `m = 1, 2`: `sum_{k>=0} q^{mk} / (q;q)_k^2`; summand `k` has minimal
///   exponent `mk`, so the sum stops once `mk > order`. The `k = 0` summand
///   makes the constant term 1.
pub fn u_gf(m: u8, order: usize) -> TruncatedSeries {
    assert!(m <= 2, "u_gf is defined for m in {{0, 1, 2}}");
    if m == 0 {
        u0_gf(order)
    } else {
        um_gf(m as usize, order)
    }
}

fn u0_gf(order: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::zero(order);
    if order == 0 {
        return acc;
    }
    // term_1 = q / ((q;q)_0 (q;q)_1) = q / (1 - q)
    let mut term = TruncatedSeries::monomial(order, 1, BigInt::one());
    term.div_one_minus(1);
    let mut k = 1usize;
    loop {
        acc += &term;
        k += 1;
        if k > order {
            break;
        }
        // term_k = term_{k-1} * q / ((1 - q^{k-1})(1 - q^k))
        term.shift_in_place(1);
        term.div_one_minus(k - 1);
        term.div_one_minus(k);
    }
    acc
}

fn um_gf(m: usize, order: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::zero(order);
    let mut term = TruncatedSeries::one(order);
    let mut k = 0usize;
    loop {
        acc += &term;
        k += 1;
        if m * k > order {
            break;
        }
        // term_k = term_{k-1} * q^m / (1 - q^k)^2
        term.shift_in_place(m);
        term.div_one_minus(k);
        term.div_one_minus(k);
    }
    acc
}

/// The theta factor of the `N_V(k, -)` generating function:
/// `sum_{n>=1} (-1)^{n-1} q^{n(n-1)/2 + n|k|} (1 - q^n)`.
pub fn nv_theta(k: i64, order: usize) -> TruncatedSeries {
    let a = k.unsigned_abs();
    let mut out = TruncatedSeries::zero(order);
    let mut n: u64 = 1;
    loop {
        let e = n * (n - 1) / 2 + n * a;
        if e > order as u64 {
            break;
        }
        let sign = if n % 2 == 1 { 1 } else { -1 };
        out.coeffs[e as usize] += sign;
        if e + n <= order as u64 {
            out.coeffs[(e + n) as usize] -= sign;
        }
        n += 1;
    }
    out
}

/// Generating function for the signed vector-partition count `N_V(k, n)`:
/// the theta factor `nv_theta(k, -)` divided by `(q;q)_inf`.
pub fn nv_gf(k: i64, order: usize) -> TruncatedSeries {
    partition_gf(order).mul(&nv_theta(k, order))
}

/// Generating function for `M_k(n)`:
/// `sum_{n>=k} q^{binom(k,2) + (k+1)n} / (q;q)_n * [n-1, k-1]_q`.
///
/// Summand `n` has minimal exponent `binom(k,2) + (k+1)n`; the sum stops
/// once that exceeds the order. The running `1/(q;q)_n` and the Gaussian
/// binomial row are both extended incrementally.
pub fn mk_gf(k: u32, order: usize) -> TruncatedSeries {
    assert!(k >= 1, "mk_gf requires k >= 1");
    let kk = k as usize;
    let base = kk * (kk - 1) / 2;
    let mut acc = TruncatedSeries::zero(order);

    let mut inv = pochhammer(1, k, order)
        .inverse()
        .expect("(q;q)_k has constant term 1");
    // Gaussian row for top index n-1, columns 0 ..= k-1; start at n = k.
    let mut row = vec![TruncatedSeries::one(order)];
    for t in 1..kk {
        gaussian_row_advance(&mut row, t, kk - 1);
    }

    let mut n = kk;
    loop {
        let e = base + (kk + 1) * n;
        if e > order {
            break;
        }
        acc += &inv.shift(e).mul(&row[kk - 1]);
        n += 1;
        inv.div_one_minus(n);
        gaussian_row_advance(&mut row, n - 1, kk - 1);
    }
    acc
}

/// Generating function for `P~_k(n)`:
/// `q^{k(k+1)/2}/(q;q)_k * sum_{n>=0} q^{(n+k+1)(k+1)} / (q^{n+k+1}; q)_inf`.
///
/// Summand `n` has minimal exponent `k(k+1)/2 + (n+k+1)(k+1)`; the sum is
/// truncated once that exceeds the order. The inner infinite products are
/// built downward, extending `1/(q^s; q)_inf` one factor at a time.
pub fn pk_tilde_gf(k: u32, order: usize) -> TruncatedSeries {
    assert!(k >= 1, "pk_tilde_gf requires k >= 1");
    let kk = k as usize;
    let base = kk * (kk + 1) / 2;

    // largest n with base + (n+k+1)(k+1) <= order
    let budget = order as i64 - base as i64;
    let n_hi = budget / (kk as i64 + 1) - kk as i64 - 1;
    if n_hi < 0 {
        return TruncatedSeries::zero(order);
    }
    let n_hi = n_hi as usize;

    let mut inv = TruncatedSeries::one(order);
    for j in (n_hi + kk + 1)..=order {
        inv.div_one_minus(j);
    }
    let mut acc = TruncatedSeries::zero(order);
    for n in (0..=n_hi).rev() {
        if n < n_hi {
            inv.div_one_minus(n + kk + 1);
        }
        acc += &inv.shift((n + kk + 1) * (kk + 1));
    }

    let prefactor = pochhammer(1, k, order)
        .inverse()
        .expect("(q;q)_k has constant term 1")
        .shift(base);
    prefactor.mul(&acc)
}

/// The alternating triangular-number series `sum (-1)^n q^{n(n+1)/2}`,
/// starting at `n = 0` when `include_zero` is set and at `n = 1` otherwise.
pub fn triangular_sum(include_zero: bool, order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(order);
    let mut n: u64 = if include_zero { 0 } else { 1 };
    loop {
        let e = n * (n + 1) / 2;
        if e > order as u64 {
            break;
        }
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        out.coeffs[e as usize] += sign;
        n += 1;
    }
    out
}

/// Generating function for the cumulative crank counts `C_m(n)`:
///
/// * `m = 0` (crank > 0): `-1/(q;q)_inf * sum_{n>=1} (-1)^n q^{n(n+1)/2}`
/// * `m = 1` (crank >= 0): `1/(q;q)_inf * sum_{n>=0} (-1)^n q^{n(n+1)/2}`
/// * `m = 2` (crank = 0): the difference of the two.
///
/// The decreed boundary values `C_0(1)=1, C_1(1)=0, C_2(1)=-1` fall out of
/// these series without any correction.
pub fn crank_cumulative_gf(m: u8, order: usize) -> TruncatedSeries {
    assert!(
        m <= 2,
        "crank_cumulative_gf is defined for m in {{0, 1, 2}}"
    );
    let theta = match m {
        0 => triangular_sum(false, order).neg(),
        1 => triangular_sum(true, order),
        _ => triangular_sum(true, order).add(&triangular_sum(false, order)),
    };
    partition_gf(order).mul(&theta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(order: usize, coeffs: &[i64]) -> TruncatedSeries {
        TruncatedSeries::polynomial(order, coeffs)
    }

    #[test]
    fn add_cancels() {
        let a = poly(3, &[1, 1]);
        let b = poly(3, &[1, -1]);
        assert_eq!(a.add(&b), poly(3, &[2]));
    }

    #[test]
    fn add_zero_is_identity() {
        let a = poly(4, &[3, 0, -2, 7]);
        assert_eq!(a.add(&TruncatedSeries::zero(4)), a);
    }

    #[test]
    fn add_direct() {
        let a = poly(2, &[1, 0, 1]);
        let b = poly(2, &[0, 1, 1]);
        assert_eq!(a.add(&b), poly(2, &[1, 1, 2]));
    }

    #[test]
    #[should_panic(expected = "series order mismatch")]
    fn add_order_mismatch_panics() {
        let _ = poly(2, &[1]).add(&poly(3, &[1]));
    }

    #[test]
    fn mul_telescopes_geometric() {
        let order = 12;
        let mut geometric = TruncatedSeries::one(order);
        geometric.div_one_minus(1);
        let one_minus_q = poly(order, &[1, -1]);
        assert!(one_minus_q.mul(&geometric).is_one());
    }

    #[test]
    fn mul_one_is_identity() {
        let a = poly(5, &[2, -1, 0, 4, 0, 1]);
        assert_eq!(a.mul(&TruncatedSeries::one(5)), a);
    }

    #[test]
    fn mul_binomial_square() {
        let a = poly(3, &[1, 1]);
        assert_eq!(a.mul(&a), poly(3, &[1, 2, 1]));
    }

    #[test]
    #[should_panic(expected = "series order mismatch")]
    fn mul_order_mismatch_panics() {
        let _ = poly(2, &[1]).mul(&poly(3, &[1]));
    }

    #[test]
    fn inverse_of_euler_product_counts_partitions() {
        let inv = pochhammer_inf(1, 5).inverse().unwrap();
        assert_eq!(inv, poly(5, &[1, 1, 2, 3, 5, 7]));
    }

    #[test]
    fn inverse_of_one_is_one() {
        assert!(TruncatedSeries::one(6).inverse().unwrap().is_one());
    }

    #[test]
    fn inverse_times_self_is_one() {
        let a = poly(9, &[-1, 3, 0, -2, 5]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_one());
    }

    #[test]
    fn inverse_rejects_non_unit_constant() {
        let a = poly(3, &[2, 1]);
        assert!(matches!(a.inverse(), Err(Error::NonUnitConstant(_))));
    }

    #[test]
    fn pochhammer_empty_product() {
        assert!(pochhammer(1, 0, 8).is_one());
    }

    #[test]
    fn pochhammer_two_factors() {
        assert_eq!(pochhammer(1, 2, 4), poly(4, &[1, -1, -1, 1]));
    }

    #[test]
    fn pochhammer_single_shifted_factor() {
        assert_eq!(pochhammer(3, 1, 5), poly(5, &[1, 0, 0, -1]));
    }

    #[test]
    fn pochhammer_inf_pentagonal_exponents() {
        assert_eq!(pochhammer_inf(1, 7), poly(7, &[1, -1, -1, 0, 0, 1, 0, 1]));
    }

    #[test]
    fn pochhammer_inf_beyond_order_is_one() {
        assert!(pochhammer_inf(11, 10).is_one());
    }

    #[test]
    fn pochhammer_inf_times_partition_gf_is_one() {
        let order = 40;
        assert!(pochhammer_inf(1, order).mul(&partition_gf(order)).is_one());
    }

    #[test]
    fn partition_gf_values() {
        let p = partition_gf(9);
        assert_eq!(*p.coeff(0), BigInt::from(1));
        assert_eq!(*p.coeff(5), BigInt::from(7));
        // 30 partitions of 9; cross-checked against the object enumeration
        // in the objects module tests.
        assert_eq!(*p.coeff(9), BigInt::from(30));
    }

    #[test]
    fn gaussian_binomial_small_cases() {
        assert_eq!(gaussian_binomial(2, 1, 4), poly(4, &[1, 1]));
        for n in 0..6 {
            assert!(gaussian_binomial(n, 0, 6).is_one());
        }
        assert_eq!(gaussian_binomial(4, 2, 6), poly(6, &[1, 1, 2, 1, 1]));
    }

    #[test]
    fn gaussian_binomial_out_of_range_is_zero() {
        assert!(gaussian_binomial(3, -1, 5).is_zero());
        assert!(gaussian_binomial(3, 4, 5).is_zero());
    }

    #[test]
    fn gaussian_binomial_symmetry() {
        for n in 0..9u32 {
            for k in 0..=n {
                assert_eq!(
                    gaussian_binomial(n, k as i64, 20),
                    gaussian_binomial(n, (n - k) as i64, 20),
                    "[{}, {}]",
                    n,
                    k
                );
            }
        }
    }

    #[test]
    fn pentagonal_sum_single_term() {
        assert!(pentagonal_sum(0, 0, 9).is_one());
    }

    #[test]
    fn pentagonal_sum_small_window() {
        assert_eq!(pentagonal_sum(-1, 1, 7), poly(7, &[1, -1, -1]));
    }

    #[test]
    fn pentagonal_sum_full_window_matches_euler_product() {
        for order in [7usize, 30, 100] {
            let (jlo, jhi) = pentagonal_window(order);
            assert_eq!(pentagonal_sum(jlo, jhi, order), pochhammer_inf(1, order));
        }
    }

    #[test]
    fn u_gf_matches_hand_counts_at_four() {
        assert_eq!(*u_gf(0, 6).coeff(4), BigInt::from(8));
        assert_eq!(*u_gf(1, 6).coeff(4), BigInt::from(12));
        assert_eq!(*u_gf(2, 6).coeff(4), BigInt::from(4));
    }

    #[test]
    fn u_gf_constant_terms() {
        assert_eq!(*u_gf(0, 5).coeff(0), BigInt::zero());
        assert_eq!(*u_gf(1, 5).coeff(0), BigInt::one());
        assert_eq!(*u_gf(2, 5).coeff(0), BigInt::one());
    }

    #[test]
    fn u_gf_difference_identity() {
        let order = 60;
        let lhs = u_gf(1, order).sub(&u_gf(2, order));
        assert_eq!(lhs, u_gf(0, order));
    }

    #[test]
    fn nv_gf_positive_crank_total_at_five() {
        let order = 8;
        let mut total = BigInt::zero();
        for k in 1..=5 {
            total += nv_gf(k, order).coeff(5);
        }
        assert_eq!(total, BigInt::from(3));
    }

    #[test]
    fn nv_gf_constant_term() {
        assert_eq!(*nv_gf(0, 6).coeff(0), BigInt::one());
    }

    #[test]
    fn nv_gf_symmetric_in_k() {
        for k in 0..6 {
            assert_eq!(nv_gf(k, 20), nv_gf(-k, 20));
        }
    }

    #[test]
    fn mk_gf_values() {
        assert_eq!(*mk_gf(3, 20).coeff(18), BigInt::from(3));
        for k in 1..5 {
            assert_eq!(*mk_gf(k, 12).coeff(0), BigInt::zero());
        }
        // M_1(5) = p(5) - p(4) = 2
        assert_eq!(*mk_gf(1, 8).coeff(5), BigInt::from(2));
    }

    #[test]
    fn pk_tilde_gf_values() {
        assert_eq!(*pk_tilde_gf(2, 20).coeff(17), BigInt::from(9));
        // P~_1(5) = p(4) + p(3) - p(5) = 1 and P~_1(3) = p(2) + p(1) - p(3) = 0
        assert_eq!(*pk_tilde_gf(1, 8).coeff(5), BigInt::one());
        assert_eq!(*pk_tilde_gf(1, 8).coeff(3), BigInt::zero());
    }

    #[test]
    fn pk_tilde_gf_below_minimal_exponent_is_zero() {
        // minimal exponent for k = 1 is 1 + 4 = 5
        assert!(pk_tilde_gf(1, 4).is_zero());
    }

    #[test]
    fn crank_cumulative_gf_boundary_values() {
        for (m, expect0, expect1) in [(0u8, 0i64, 1i64), (1, 1, 0), (2, 1, -1)] {
            let gf = crank_cumulative_gf(m, 6);
            assert_eq!(*gf.coeff(0), BigInt::from(expect0), "C_{}(0)", m);
            assert_eq!(*gf.coeff(1), BigInt::from(expect1), "C_{}(1)", m);
        }
    }

    #[test]
    fn crank_cumulative_gf_at_five() {
        assert_eq!(*crank_cumulative_gf(0, 6).coeff(5), BigInt::from(3));
        assert_eq!(*crank_cumulative_gf(1, 6).coeff(5), BigInt::from(4));
        assert_eq!(*crank_cumulative_gf(2, 6).coeff(5), BigInt::from(1));
    }

    #[test]
    fn shift_drops_overflow() {
        let a = poly(3, &[1, 2, 3, 4]);
        assert_eq!(a.shift(2), poly(3, &[0, 0, 1, 2]));
        assert!(a.shift(7).is_zero());
    }

    #[test]
    fn json_round_trip() {
        let a = poly(4, &[1, -2, 0, 3, -4]);
        let text = serde_json::to_string(&a).unwrap();
        assert!(text.contains("\"coeffs\":[\"1\",\"-2\",\"0\",\"3\",\"-4\"]"));
        let back: TruncatedSeries = serde_json::from_str(&text).unwrap();
        assert_eq!(a, back);
    }

    #[test]
    fn json_rejects_wrong_length() {
        let text = r#"{"order": 3, "coeffs": ["1", "2"]}"#;
        assert!(serde_json::from_str::<TruncatedSeries>(text).is_err());
    }

    #[test]
    fn display_renders_polynomial() {
        let a = poly(7, &[1, -1, -1, 0, 0, 1]);
        assert_eq!(format!("{}", a), "1 - q - q^2 + q^5 + O(q^8)");
    }
}
