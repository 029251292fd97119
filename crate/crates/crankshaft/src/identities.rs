//! Named, parameterized verification checks for the crate's identities,
//! inequalities, and truncated pentagonal number theorems. Every check
//! returns a structured [`CheckReport`] carrying the first counterexample
//! on failure; nothing is thrown.
//!
//! Checks consume the statistics module's default accessors, which
//! cross-validate the enumeration and series backends below the configured
//! cutoffs — a backend disagreement therefore surfaces as a failed check
//! with the two values as the counterexample.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::objects::partitions_of;
use crate::series::{
    crank_cumulative_gf, gaussian_binomial, mk_gf, nv_gf, nv_theta, partition_gf,
    pentagonal_number, pentagonal_sum, pentagonal_window, pk_tilde_gf, pochhammer_inf,
    triangular_sum, u_gf, TruncatedSeries,
};
use crate::statistics::{is_p_tilde_partition, Backend, Statistics};

/// Outcome of one verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// The first witness of a failed check: where it failed and the two values
/// that were supposed to agree (decimal strings, since values are bigints).
#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub location: BTreeMap<String, i64>,
    pub lhs: String,
    pub rhs: String,
}

/// Result of one identity verification. `status` is `Fail` exactly when a
/// counterexample is present (enforced by construction).
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: BTreeMap<String, Value>,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn is_pass(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    /// JSON rendering; elapsed time is included only on request so that
    /// default output stays byte-identical across runs.
    pub fn to_json(&self, include_timing: bool) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if include_timing {
            v.as_object_mut().unwrap().insert(
                "elapsed_ms".to_string(),
                json!(self.elapsed.as_millis() as u64),
            );
        }
        v
    }
}

/// Internal failure record produced inside check bodies.
pub(crate) struct Violation {
    pub location: BTreeMap<String, i64>,
    pub lhs: String,
    pub rhs: String,
    pub note: Option<String>,
}

impl Violation {
    pub(crate) fn new(at: &[(&str, i64)], lhs: impl ToString, rhs: impl ToString) -> Self {
        Violation {
            location: at.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            note: None,
        }
    }

    pub(crate) fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn from_error(err: Error, at: &[(&str, i64)]) -> Self {
        match err {
            Error::BackendMismatch {
                ref enumeration,
                ref series,
                ..
            } => {
                let (e, s) = (enumeration.clone(), series.clone());
                Violation::new(at, e, s).with_note(err.to_string())
            }
            other => Violation::new(at, "-", "-").with_note(other.to_string()),
        }
    }
}

/// Runs a check body under timing, turning its result into a report with
/// the pass/fail <-> counterexample invariant enforced.
pub(crate) fn run_check(
    name: &str,
    params: &[(&str, i64)],
    body: impl FnOnce() -> std::result::Result<Option<String>, Violation>,
) -> CheckReport {
    let started = Instant::now();
    let outcome = body();
    let elapsed = started.elapsed();
    let params = params
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    match outcome {
        Ok(detail) => CheckReport {
            check: name.to_string(),
            params,
            status: CheckStatus::Pass,
            counterexample: None,
            detail,
            elapsed,
        },
        Err(violation) => CheckReport {
            check: name.to_string(),
            params,
            status: CheckStatus::Fail,
            counterexample: Some(Counterexample {
                location: violation.location,
                lhs: violation.lhs,
                rhs: violation.rhs,
            }),
            detail: violation.note,
            elapsed,
        },
    }
}

fn fetch(
    r: crate::error::Result<BigInt>,
    at: &[(&str, i64)],
) -> std::result::Result<BigInt, Violation> {
    r.map_err(|e| Violation::from_error(e, at))
}

/// `u_0(n) = u_1(n) - u_2(n)` for `0 <= n <= n_max`. With `backend = None`
/// the default cross-validating accessors are used; otherwise the named
/// backend is forced.
pub fn check_thm1(stats: &Statistics, n_max: i64, backend: Option<Backend>) -> CheckReport {
    let params = [("n_max", n_max)];
    let mut report = run_check("thm1", &params, || {
        for n in 0..=n_max {
            let at = [("n", n)];
            let value = |m: u8| match backend {
                None => fetch(stats.u(m, n), &at),
                Some(b) => fetch(stats.u_backend(m, n, b), &at),
            };
            let lhs = value(0)?;
            let rhs = value(1)? - value(2)?;
            if lhs != rhs {
                return Err(Violation::new(&at, lhs, rhs));
            }
        }
        Ok(None)
    });
    report.params.insert(
        "backend".to_string(),
        json!(match backend {
            None => "auto",
            Some(Backend::Enumeration) => "enumeration",
            Some(Backend::Series) => "series",
        }),
    );
    report
}

fn pentagonal_alternating_u(
    stats: &Statistics,
    m: u8,
    n: i64,
    jlo: i64,
    jhi: i64,
) -> crate::error::Result<BigInt> {
    let mut acc = BigInt::zero();
    for j in jlo..=jhi {
        let term = stats.u(m, n - pentagonal_number(j))?;
        if j.rem_euclid(2) == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

fn crank_convolution(
    stats: &Statistics,
    m: u8,
    n: i64,
    other: impl Fn(i64) -> crate::error::Result<BigInt>,
) -> crate::error::Result<BigInt> {
    let mut acc = BigInt::zero();
    for j in 0..=n {
        let c = stats.c(m, j)?;
        if c.is_zero() {
            continue;
        }
        acc += c * other(n - j)?;
    }
    Ok(acc)
}

/// `(-1)^k (C_m(n) - sum_{j=1-k}^{k} (-1)^j u_m(n - j(3j-1)/2))
///  = sum_{j=0}^{n} C_m(j) M_k(n-j)` for `1 <= n <= n_max`.
pub fn check_thm2(stats: &Statistics, m: u8, k: u32, n_max: i64) -> CheckReport {
    let params = [("m", m as i64), ("k", k as i64), ("n_max", n_max)];
    run_check("thm2", &params, || {
        for n in 1..=n_max {
            let at = [("m", m as i64), ("k", k as i64), ("n", n)];
            let inner = fetch(stats.c(m, n), &at)?
                - fetch(
                    pentagonal_alternating_u(stats, m, n, 1 - k as i64, k as i64),
                    &at,
                )?;
            let lhs = if k.is_multiple_of(2) { inner } else { -inner };
            let rhs = fetch(crank_convolution(stats, m, n, |x| stats.m_k(k, x)), &at)?;
            if lhs != rhs {
                return Err(Violation::new(&at, lhs, rhs));
            }
        }
        Ok(None)
    })
}

/// `(-1)^{k-1} (C_m(n) - sum_{j=-k}^{k} (-1)^j u_m(n - j(3j-1)/2))
///  = sum_{j=0}^{n} C_m(j) P~_k(n-j)` for `1 <= n <= n_max`.
pub fn check_thm3(stats: &Statistics, m: u8, k: u32, n_max: i64) -> CheckReport {
    let params = [("m", m as i64), ("k", k as i64), ("n_max", n_max)];
    run_check("thm3", &params, || {
        for n in 1..=n_max {
            let at = [("m", m as i64), ("k", k as i64), ("n", n)];
            let inner = fetch(stats.c(m, n), &at)?
                - fetch(
                    pentagonal_alternating_u(stats, m, n, -(k as i64), k as i64),
                    &at,
                )?;
            let lhs = if k % 2 == 1 { inner } else { -inner };
            let rhs = fetch(crank_convolution(stats, m, n, |x| stats.p_tilde(k, x)), &at)?;
            if lhs != rhs {
                return Err(Violation::new(&at, lhs, rhs));
            }
        }
        Ok(None)
    })
}

/// The inequality family from the `M_k` truncation:
/// `v(n) = (-1)^k (C_m(n) - sum_{j=1-k}^{k} (-1)^j u_m(n - j(3j-1)/2)) >= 0`.
///
/// The exact strictness pattern is pinned: `v(n) = 0` for `n` below the
/// threshold `t = k(3k+1)/2`, and `v(n) > 0` for `n >= t` with exactly two
/// exception points where `v` returns to zero — `n = t` when `m = 0`
/// (because `C_0(0) = 0`) and `n = t + 1` when `m = 2` (because
/// `C_2(1) = -1` cancels the single minimal `M_k` contribution).
pub fn check_cor2(stats: &Statistics, m: u8, k: u32, n_max: i64) -> CheckReport {
    let params = [("m", m as i64), ("k", k as i64), ("n_max", n_max)];
    run_check("cor2", &params, || {
        let k64 = k as i64;
        let threshold = k64 * (3 * k64 + 1) / 2;
        for n in 1..=n_max {
            let at = [("m", m as i64), ("k", k as i64), ("n", n)];
            let inner = fetch(stats.c(m, n), &at)?
                - fetch(pentagonal_alternating_u(stats, m, n, 1 - k64, k64), &at)?;
            let v = if k.is_multiple_of(2) { inner } else { -inner };
            if v.is_negative() {
                return Err(Violation::new(&at, v, "0").with_note("sign condition violated"));
            }
            let equality_expected =
                n < threshold || (m == 0 && n == threshold) || (m == 2 && n == threshold + 1);
            if equality_expected && !v.is_zero() {
                return Err(Violation::new(&at, v, "0").with_note("expected equality"));
            }
            if !equality_expected && v.is_zero() {
                return Err(Violation::new(&at, v, "> 0").with_note("expected strict inequality"));
            }
        }
        let exception = match m {
            0 => format!(" except the boundary n = {}", threshold),
            2 => format!(" except n = {}", threshold + 1),
            _ => String::new(),
        };
        Ok(Some(format!(
            "zero below n = {t}, strict for n >= {t}{e}",
            t = threshold,
            e = exception
        )))
    })
}

/// The weak inequality family from the `P~_k` truncation:
/// `(-1)^{k-1} (C_m(n) - sum_{j=-k}^{k} (-1)^j u_m(n - j(3j-1)/2)) >= 0`.
pub fn check_cor4_ineq(stats: &Statistics, m: u8, k: u32, n_max: i64) -> CheckReport {
    let params = [("m", m as i64), ("k", k as i64), ("n_max", n_max)];
    run_check("cor4_ineq", &params, || {
        for n in 1..=n_max {
            let at = [("m", m as i64), ("k", k as i64), ("n", n)];
            let inner = fetch(stats.c(m, n), &at)?
                - fetch(
                    pentagonal_alternating_u(stats, m, n, -(k as i64), k as i64),
                    &at,
                )?;
            let w = if k % 2 == 1 { inner } else { -inner };
            if w.is_negative() {
                return Err(Violation::new(&at, w, ">= 0").with_note("sign condition violated"));
            }
        }
        Ok(None)
    })
}

/// The full decomposition `C_m(n) = sum_j (-1)^j u_m(n - j(3j-1)/2)` with
/// the window truncated to the pentagonal numbers `<= n`.
pub fn check_cor4(stats: &Statistics, m: u8, n_max: i64) -> CheckReport {
    let params = [("m", m as i64), ("n_max", n_max)];
    run_check("cor4", &params, || {
        for n in 0..=n_max {
            let at = [("m", m as i64), ("n", n)];
            let (jlo, jhi) = pentagonal_window(n.max(0) as usize);
            let lhs = fetch(stats.c(m, n), &at)?;
            let rhs = fetch(pentagonal_alternating_u(stats, m, n, jlo, jhi), &at)?;
            if lhs != rhs {
                return Err(Violation::new(&at, lhs, rhs));
            }
        }
        Ok(None)
    })
}

/// The dual decomposition
/// `u_m(n) = sum_{j=0}^{n + k(3k+1)/2} C_m(n + k(3k+1)/2 - j) (M_k(j) + P~_k(j))`.
pub fn check_cor5(stats: &Statistics, m: u8, k: u32, n_max: i64) -> CheckReport {
    let params = [("m", m as i64), ("k", k as i64), ("n_max", n_max)];
    run_check("cor5", &params, || {
        let shift = {
            let k = k as i64;
            k * (3 * k + 1) / 2
        };
        for n in 0..=n_max {
            let at = [("m", m as i64), ("k", k as i64), ("n", n)];
            let lhs = fetch(stats.u(m, n), &at)?;
            let rhs = fetch(
                crank_convolution(stats, m, n + shift, |x| {
                    Ok(stats.m_k(k, x)? + stats.p_tilde(k, x)?)
                }),
                &at,
            )?;
            if lhs != rhs {
                return Err(Violation::new(&at, lhs, rhs));
            }
        }
        Ok(None)
    })
}

/// `p(n - k(3k+1)/2) = M_k(n) + P~_k(n)` for `1 <= n <= n_max`.
pub fn check_mp(stats: &Statistics, k: u32, n_max: i64) -> CheckReport {
    let params = [("k", k as i64), ("n_max", n_max)];
    run_check("mp", &params, || {
        let shift = {
            let k = k as i64;
            k * (3 * k + 1) / 2
        };
        for n in 1..=n_max {
            let at = [("k", k as i64), ("n", n)];
            let lhs = stats.p(n - shift);
            let rhs = fetch(stats.m_k(k, n), &at)? + fetch(stats.p_tilde(k, n), &at)?;
            if lhs != rhs {
                return Err(Violation::new(&at, lhs, rhs));
            }
        }
        Ok(None)
    })
}

/// The truncated pentagonal theorem in partition-number form:
/// `(-1)^k sum_{j=-k}^{k} (-1)^j p(n - j(3j+1)/2) = P~_k(n)`.
pub fn check_xz(stats: &Statistics, k: u32, n_max: i64) -> CheckReport {
    let params = [("k", k as i64), ("n_max", n_max)];
    run_check("xz", &params, || {
        for n in 1..=n_max {
            let at = [("k", k as i64), ("n", n)];
            let mut acc = BigInt::zero();
            for j in -(k as i64)..=k as i64 {
                let term = stats.p(n - j * (3 * j + 1) / 2);
                if j.rem_euclid(2) == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            let lhs = if k.is_multiple_of(2) { acc } else { -acc };
            let rhs = fetch(stats.p_tilde(k, n), &at)?;
            if lhs != rhs {
                return Err(Violation::new(&at, lhs, rhs));
            }
        }
        Ok(None)
    })
}

/// The two-term reformulations of the truncated pentagonal theorem:
/// `p(n-1) + p(n-2) - p(n) = P~_1(n)` for `k = 1`, and
/// `p(n - k(3k-1)/2) + p(n - k(3k+1)/2) = P~_{k-1}(n) + P~_k(n)` for
/// `k >= 2`.
pub fn check_k1_genk(stats: &Statistics, k: u32, n_max: i64) -> CheckReport {
    let params = [("k", k as i64), ("n_max", n_max)];
    run_check("k1_genk", &params, || {
        let k64 = k as i64;
        for n in 1..=n_max {
            let at = [("k", k as i64), ("n", n)];
            let (lhs, rhs) = if k == 1 {
                (
                    stats.p(n - 1) + stats.p(n - 2) - stats.p(n),
                    fetch(stats.p_tilde(1, n), &at)?,
                )
            } else {
                (
                    stats.p(n - k64 * (3 * k64 - 1) / 2) + stats.p(n - k64 * (3 * k64 + 1) / 2),
                    fetch(stats.p_tilde(k - 1, n), &at)? + fetch(stats.p_tilde(k, n), &at)?,
                )
            };
            if lhs != rhs {
                return Err(Violation::new(&at, lhs, rhs));
            }
        }
        Ok(None)
    })
}

/// Subtracting the two truncation families re-derives the pentagonal-step
/// relation `u_m(n - k(3k+1)/2) = sum_j C_m(j) (M_k(n-j) + P~_k(n-j))`.
pub fn check_consistency(stats: &Statistics, m: u8, k: u32, n_max: i64) -> CheckReport {
    let params = [("m", m as i64), ("k", k as i64), ("n_max", n_max)];
    run_check("consistency", &params, || {
        let shift = {
            let k = k as i64;
            k * (3 * k + 1) / 2
        };
        for n in 1..=n_max {
            let at = [("m", m as i64), ("k", k as i64), ("n", n)];
            let lhs = fetch(stats.u(m, n - shift), &at)?;
            let rhs = fetch(
                crank_convolution(stats, m, n, |x| Ok(stats.m_k(k, x)? + stats.p_tilde(k, x)?)),
                &at,
            )?;
            if lhs != rhs {
                return Err(Violation::new(&at, lhs, rhs));
            }
        }
        Ok(None)
    })
}

/// `N_V(k, n)` equals the ordinary crank count for `2 <= n <= n_max` and
/// every `k`, and differs at `n = 1` exactly as the conventions predict:
/// the vector histogram is `{-1: 1, 0: -1, 1: 1}` while the single
/// partition of 1 has crank `-1`.
pub fn check_nv_vs_crank(stats: &Statistics, n_max: i64) -> CheckReport {
    let params = [("n_max", n_max)];
    run_check("nv_crank", &params, || {
        for n in 2..=n_max.max(1) {
            let at = [("n", n)];
            let nv = stats.nv_histogram(n as u32);
            let crank = stats.crank_histogram(n as u32);
            if *nv != *crank {
                return Err(
                    Violation::new(&at, format!("{:?}", nv), format!("{:?}", crank))
                        .with_note("signed vector counts disagree with crank counts"),
                );
            }
        }
        let at = [("n", 1i64)];
        let nv = stats.nv_histogram(1);
        let expected: BTreeMap<i64, BigInt> = BTreeMap::from([
            (-1, BigInt::from(1)),
            (0, BigInt::from(-1)),
            (1, BigInt::from(1)),
        ]);
        if *nv != expected {
            return Err(
                Violation::new(&at, format!("{:?}", nv), format!("{:?}", expected))
                    .with_note("vector histogram at n = 1"),
            );
        }
        let crank = stats.crank_histogram(1);
        let expected_crank: BTreeMap<i64, BigInt> = BTreeMap::from([(-1, BigInt::from(1))]);
        if *crank != expected_crank {
            return Err(Violation::new(
                &at,
                format!("{:?}", crank),
                format!("{:?}", expected_crank),
            ));
        }
        Ok(Some("n = 1 anomaly matches the decreed conventions".into()))
    })
}

/// Every statistic's enumeration backend equals its series backend on the
/// overlap range.
pub fn check_backend_agreement(
    stats: &Statistics,
    n_objects: i64,
    n_vectors: i64,
    k_max: u32,
) -> CheckReport {
    let params = [
        ("n_objects", n_objects),
        ("n_vectors", n_vectors),
        ("k_max", k_max as i64),
    ];
    run_check("backends", &params, || {
        let pair = |e: crate::error::Result<BigInt>,
                    s: crate::error::Result<BigInt>,
                    stat: &str,
                    at: &[(&str, i64)]|
         -> std::result::Result<(), Violation> {
            let e = fetch(e, at)?;
            let s = fetch(s, at)?;
            if e != s {
                return Err(
                    Violation::new(at, e, s).with_note(format!("{} backends disagree", stat))
                );
            }
            Ok(())
        };
        for n in 0..=n_objects {
            let at = [("n", n)];
            pair(
                stats.p_backend(n, Backend::Enumeration),
                stats.p_backend(n, Backend::Series),
                "p",
                &at,
            )?;
            let rec = stats.p(n);
            let ser = fetch(stats.p_backend(n, Backend::Series), &at)?;
            if rec != ser {
                return Err(Violation::new(&at, rec, ser).with_note("p recurrence vs series"));
            }
            for m in 0..=2u8 {
                let at = [("m", m as i64), ("n", n)];
                pair(
                    stats.u_backend(m, n, Backend::Enumeration),
                    stats.u_backend(m, n, Backend::Series),
                    "u",
                    &at,
                )?;
                pair(
                    stats.c_backend(m, n, Backend::Enumeration),
                    stats.c_backend(m, n, Backend::Series),
                    "C",
                    &at,
                )?;
            }
            for k in 1..=k_max {
                let at = [("k", k as i64), ("n", n)];
                pair(
                    stats.m_k_backend(k, n, Backend::Enumeration),
                    stats.m_k_backend(k, n, Backend::Series),
                    "M",
                    &at,
                )?;
                pair(
                    stats.p_tilde_backend(k, n, Backend::Enumeration),
                    stats.p_tilde_backend(k, n, Backend::Series),
                    "Ptilde",
                    &at,
                )?;
            }
        }
        for n in 0..=n_vectors {
            for k in -n_vectors..=n_vectors {
                let at = [("k", k), ("n", n)];
                pair(
                    stats.n_v_backend(k, n, Backend::Enumeration),
                    stats.n_v_backend(k, n, Backend::Series),
                    "NV",
                    &at,
                )?;
            }
        }
        Ok(None)
    })
}

/// Exploratory cross-count: `M_k(n)` against the number of partitions in
/// `P~_{k-1}(n)` without any part equal to `k` (for `k = 1` the reference
/// set is all nonempty partitions, every part `<= 0` being vacuous). The
/// report records agreement over the range; it is informational rather
/// than a pinned ground truth.
pub fn check_mk_vs_ptilde_without_k(stats: &Statistics, k: u32, n_max: i64) -> CheckReport {
    let params = [("k", k as i64), ("n_max", n_max)];
    run_check("mk_membership", &params, || {
        let mut agreements = 0usize;
        for n in 1..=n_max {
            let at = [("k", k as i64), ("n", n)];
            let lhs = fetch(stats.m_k(k, n), &at)?;
            let rhs = BigInt::from(
                partitions_of(n as u32)
                    .filter(|p| {
                        p.multiplicity(k) == 0
                            && if k == 1 {
                                !p.is_empty()
                            } else {
                                is_p_tilde_partition(p, k - 1)
                            }
                    })
                    .count(),
            );
            if lhs != rhs {
                return Err(Violation::new(&at, lhs, rhs)
                    .with_note("exploratory reading disagrees at this point"));
            }
            agreements += 1;
        }
        Ok(Some(format!(
            "both readings agree at all {} checked values",
            agreements
        )))
    })
}

fn series_eq(
    name: &str,
    params: &[(&str, i64)],
    lhs: &TruncatedSeries,
    rhs: &TruncatedSeries,
) -> CheckReport {
    run_check(name, params, || {
        for i in 0..=lhs.order().min(rhs.order()) {
            if lhs.coeff(i) != rhs.coeff(i) {
                let mut v =
                    Violation::new(&[("coefficient", i as i64)], lhs.coeff(i), rhs.coeff(i));
                for (k, val) in params {
                    v.location.insert(k.to_string(), *val);
                }
                return Err(v);
            }
        }
        Ok(None)
    })
}

/// Memoized count of partitions of `n` with at most `max_len` parts, each
/// at most `max_part` — the independent oracle for the Gaussian binomial
/// coefficients, built on a different recurrence (remove a largest part vs.
/// the q-Pascal rule).
fn bounded_partition_count(
    memo: &mut BTreeMap<(u32, u32, i64), BigInt>,
    max_part: u32,
    max_len: u32,
    n: i64,
) -> BigInt {
    if n == 0 {
        return BigInt::from(1);
    }
    if n < 0 || max_part == 0 || max_len == 0 {
        return BigInt::zero();
    }
    if let Some(v) = memo.get(&(max_part, max_len, n)) {
        return v.clone();
    }
    let without = bounded_partition_count(memo, max_part - 1, max_len, n);
    let with = bounded_partition_count(memo, max_part, max_len - 1, n - max_part as i64);
    let result = without + with;
    memo.insert((max_part, max_len, n), result.clone());
    result
}

/// The bundled series-level identities, checked coefficient-wise up to
/// `order` (and for each `k <= k_max` where a family is involved):
/// Euler's pentagonal number theorem, the two cumulative-crank evaluations
/// of the `u_0`/`u_1` series, the difference identity `u_0 = u_1 - u_2`,
/// the master relation, the two truncated pentagonal theorems, the
/// Gaussian-binomial/bounded-partition correspondence, and the crank split.
pub fn check_series_identities(order: usize, k_max: u32) -> Vec<CheckReport> {
    let mut reports = Vec::new();
    let pgf = partition_gf(order);

    let (jlo, jhi) = pentagonal_window(order);
    reports.push(series_eq(
        "series_pentagonal",
        &[("order", order as i64)],
        &pochhammer_inf(1, order),
        &pentagonal_sum(jlo, jhi, order),
    ));

    let pgf_sq = pgf.mul(&pgf);
    reports.push(series_eq(
        "series_stanley_u0",
        &[("order", order as i64)],
        &u_gf(0, order),
        &pgf_sq.mul(&triangular_sum(false, order).neg()),
    ));
    reports.push(series_eq(
        "series_stanley_u1",
        &[("order", order as i64)],
        &u_gf(1, order),
        &pgf_sq.mul(&triangular_sum(true, order)),
    ));

    reports.push(series_eq(
        "series_u_difference",
        &[("order", order as i64)],
        &u_gf(0, order),
        &u_gf(1, order).sub(&u_gf(2, order)),
    ));

    for m in 0..=2u8 {
        reports.push(series_eq(
            "series_master_relation",
            &[("m", m as i64), ("order", order as i64)],
            &u_gf(m, order),
            &pgf.mul(&crank_cumulative_gf(m, order)),
        ));
    }

    for k in 1..=k_max {
        let ps = pentagonal_sum(1 - k as i64, k as i64, order);
        let mut lhs = pgf.mul(&ps);
        let mut constant = TruncatedSeries::one(order);
        if k % 2 == 0 {
            lhs = lhs.neg();
            constant = constant.neg();
        }
        reports.push(series_eq(
            "series_tpnt",
            &[("k", k as i64), ("order", order as i64)],
            &lhs,
            &constant.add(&mk_gf(k, order)),
        ));

        let lhs2 = pgf.mul(&pentagonal_sum(-(k as i64), k as i64, order));
        let mut tail = pk_tilde_gf(k, order);
        if k % 2 == 1 {
            tail = tail.neg();
        }
        reports.push(series_eq(
            "series_tpnt2",
            &[("k", k as i64), ("order", order as i64)],
            &TruncatedSeries::one(order).add(&tail),
            &lhs2,
        ));
    }

    reports.push(run_check(
        "series_qbin_bounded",
        &[("n_max", 12), ("k_max", k_max as i64)],
        || {
            let mut memo = BTreeMap::new();
            for n in 0..=12u32 {
                for k in 0..=n.min(k_max) {
                    let degree = (k * (n - k)) as usize;
                    let qbin = gaussian_binomial(n, k as i64, degree.max(1));
                    for e in 0..=degree {
                        let counted = bounded_partition_count(&mut memo, k, n - k, e as i64);
                        let mirrored = bounded_partition_count(&mut memo, n - k, k, e as i64);
                        let at = [("n", n as i64), ("k", k as i64), ("coefficient", e as i64)];
                        if *qbin.coeff(e) != counted {
                            return Err(Violation::new(&at, qbin.coeff(e), counted));
                        }
                        if counted != mirrored {
                            return Err(Violation::new(&at, counted, mirrored)
                                .with_note("bounded-partition conjugation symmetry"));
                        }
                    }
                }
            }
            Ok(None)
        },
    ));

    // crank split: the theta factors over all k sum to 1, equivalently the
    // N_V series over all k sum to the partition series
    reports.push(run_check(
        "series_crank_split",
        &[("order", order as i64)],
        || {
            let mut theta_total = TruncatedSeries::zero(order);
            for k in -(order as i64)..=order as i64 {
                theta_total += &nv_theta(k, order);
            }
            if !theta_total.is_one() {
                let bad = (0..=order)
                    .find(|&i| theta_total.coeff(i) != TruncatedSeries::one(order).coeff(i))
                    .unwrap();
                return Err(Violation::new(
                    &[("coefficient", bad as i64)],
                    theta_total.coeff(bad),
                    if bad == 0 { "1" } else { "0" },
                ));
            }
            let small = order.min(60);
            let mut nv_total = TruncatedSeries::zero(small);
            for k in -(small as i64)..=small as i64 {
                nv_total += &nv_gf(k, small);
            }
            let pgf_small = partition_gf(small);
            for i in 0..=small {
                if nv_total.coeff(i) != pgf_small.coeff(i) {
                    return Err(Violation::new(
                        &[("coefficient", i as i64)],
                        nv_total.coeff(i),
                        pgf_small.coeff(i),
                    ));
                }
            }
            Ok(None)
        },
    ));

    reports
}

/// Parameter grid for [`run_named`].
#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    pub n_max: i64,
    pub k_lo: u32,
    pub k_hi: u32,
    pub series_order: usize,
    pub series_k_max: u32,
}

impl SweepConfig {
    /// Default series order: `n_max` plus twice the largest pentagonal
    /// offset `k(3k+1)/2` in play, so no check in the sweep can read past
    /// the truncation (the dual decomposition shifts its argument by one
    /// offset; the second is headroom).
    pub fn required_order(&self) -> usize {
        let k = self.k_hi as i64;
        (self.n_max + k * (3 * k + 1)).max(0) as usize
    }
}

/// The names accepted by `verify --check`.
pub const CHECK_NAMES: &[&str] = &[
    "thm1",
    "thm2",
    "thm3",
    "cor2",
    "cor4_ineq",
    "cor4",
    "cor5",
    "mp",
    "xz",
    "k1_genk",
    "consistency",
    "nv_crank",
    "backends",
    "mk_membership",
    "series",
    "all",
];

/// Runs the named check (or every check for `"all"`) over the sweep grid.
/// Independent (check, parameter) pairs run in parallel; the report order
/// is deterministic.
pub fn run_named(
    name: &str,
    stats: &Statistics,
    cfg: &SweepConfig,
    m_values: &[u8],
    backend: Option<Backend>,
) -> crate::error::Result<Vec<CheckReport>> {
    type Job<'a> = Box<dyn Fn() -> CheckReport + Send + Sync + 'a>;
    let mut jobs: Vec<Job> = Vec::new();
    let ks: Vec<u32> = (cfg.k_lo..=cfg.k_hi).collect();
    let want = |n: &str| name == n || name == "all";

    if want("thm1") {
        jobs.push(Box::new(move || check_thm1(stats, cfg.n_max, backend)));
    }
    for &m in m_values {
        for &k in &ks {
            if want("thm2") {
                jobs.push(Box::new(move || check_thm2(stats, m, k, cfg.n_max)));
            }
            if want("thm3") {
                jobs.push(Box::new(move || check_thm3(stats, m, k, cfg.n_max)));
            }
            if want("cor2") {
                jobs.push(Box::new(move || check_cor2(stats, m, k, cfg.n_max)));
            }
            if want("cor4_ineq") {
                jobs.push(Box::new(move || check_cor4_ineq(stats, m, k, cfg.n_max)));
            }
            if want("cor5") {
                jobs.push(Box::new(move || check_cor5(stats, m, k, cfg.n_max)));
            }
            if want("consistency") {
                jobs.push(Box::new(move || check_consistency(stats, m, k, cfg.n_max)));
            }
        }
        if want("cor4") {
            jobs.push(Box::new(move || check_cor4(stats, m, cfg.n_max)));
        }
    }
    for &k in &ks {
        if want("mp") {
            jobs.push(Box::new(move || check_mp(stats, k, cfg.n_max)));
        }
        if want("xz") {
            jobs.push(Box::new(move || check_xz(stats, k, cfg.n_max)));
        }
        if want("k1_genk") {
            jobs.push(Box::new(move || check_k1_genk(stats, k, cfg.n_max)));
        }
        if want("mk_membership") {
            let n_max = cfg.n_max.min(stats.config().enum_cutoff);
            jobs.push(Box::new(move || {
                check_mk_vs_ptilde_without_k(stats, k, n_max)
            }));
        }
    }
    if want("nv_crank") {
        let n_max = cfg.n_max.min(stats.config().vector_enum_cutoff);
        jobs.push(Box::new(move || check_nv_vs_crank(stats, n_max)));
    }
    if want("backends") {
        let n_objects = cfg.n_max.min(stats.config().enum_cutoff);
        let n_vectors = cfg.n_max.min(stats.config().vector_enum_cutoff);
        jobs.push(Box::new(move || {
            check_backend_agreement(stats, n_objects, n_vectors, cfg.k_hi)
        }));
    }

    if jobs.is_empty() && !(name == "series" || name == "all") {
        return Err(Error::Usage(format!(
            "unknown check {:?}; expected one of {}",
            name,
            CHECK_NAMES.join(" | ")
        )));
    }

    let mut reports: Vec<CheckReport> = jobs.par_iter().map(|job| job()).collect();
    if want("series") {
        reports.extend(check_series_identities(cfg.series_order, cfg.series_k_max));
    }
    Ok(reports)
}
