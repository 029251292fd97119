//! Memoized scalar statistic functions with dual implementations: direct
//! object enumeration and series coefficients.
//!
//! A [`Statistics`] engine is constructed with a fixed series truncation
//! order; every series it builds is cached at that order. Below the
//! configured enumeration cutoffs the default accessors evaluate *both*
//! backends and return an error if they disagree, so that every consumer is
//! simultaneously a cross-oracle test. Boundary conventions:
//!
//! * `p(n) = 0` and `u_m(n) = 0` for `n < 0`; `u_0(0) = 0`, `u_1(0) = u_2(0) = 1`.
//! * `C_0(1) = 1`, `C_1(1) = 0`, `C_2(1) = -1` (the raw enumeration at
//!   `n = 1` gives the single crank `-1`, so these are decreed).
//! * `C_0(0) = 0`, `C_1(0) = C_2(0) = 1`, forced by the constant terms of
//!   the cumulative crank series.
//! * `M_k(n) = P~_k(n) = 0` for `n <= 0`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::io::Write;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::objects::{
    partitions_of, unimodal_compositions_of, unimodal_with_max_mult, vector_partitions_of,
    Partition,
};
use crate::series::{
    crank_cumulative_gf, mk_gf, nv_gf, partition_gf, pentagonal_number, pk_tilde_gf, u_gf,
    TruncatedSeries,
};

/// Which implementation of a statistic to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Enumeration,
    Series,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Enumeration => write!(f, "enumeration"),
            Backend::Series => write!(f, "series"),
        }
    }
}

/// Enumeration cutoffs and cross-validation policy.
#[derive(Clone, Copy, Debug)]
pub struct StatConfig {
    /// Largest `n` at which composition/partition scans run by default.
    pub enum_cutoff: i64,
    /// Largest `n` at which vector-partition triples are enumerated.
    pub vector_enum_cutoff: i64,
    /// When set, default accessors evaluate both backends below the cutoff
    /// and fail loudly on disagreement.
    pub cross_validate: bool,
}

impl Default for StatConfig {
    fn default() -> Self {
        StatConfig {
            enum_cutoff: 30,
            vector_enum_cutoff: 14,
            cross_validate: true,
        }
    }
}

/// The statistics a [`Statistics`] engine can tabulate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatKind {
    /// `p(n)`, the partition numbers.
    P,
    /// `u_m(n)`, unimodal composition counts (`m` in 0..=2).
    U,
    /// `C_m(n)`, cumulative crank counts (`m` in 0..=2).
    C,
    /// `M_k(n)` (`k >= 1`).
    M,
    /// `P~_k(n)` (`k >= 1`).
    PTilde,
    /// `N_V(k, n)`, signed vector-partition counts (any integer `k`).
    Nv,
    /// `|{partitions of n with crank k}|` (enumeration only).
    CrankCount,
}

impl StatKind {
    pub fn name(self) -> &'static str {
        match self {
            StatKind::P => "p",
            StatKind::U => "u",
            StatKind::C => "C",
            StatKind::M => "M",
            StatKind::PTilde => "Ptilde",
            StatKind::Nv => "NV",
            StatKind::CrankCount => "crank",
        }
    }

    pub fn parse(name: &str) -> Option<StatKind> {
        match name {
            "p" => Some(StatKind::P),
            "u" => Some(StatKind::U),
            "C" | "c" => Some(StatKind::C),
            "M" => Some(StatKind::M),
            "Ptilde" | "ptilde" => Some(StatKind::PTilde),
            "NV" | "nv" => Some(StatKind::Nv),
            "crank" => Some(StatKind::CrankCount),
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum SeriesKey {
    PartitionGf,
    U(u8),
    C(u8),
    M(u32),
    PTilde(u32),
    Nv(i64),
}

/// A tabulated statistic over a range of `n`, with values as decimal
/// strings so arbitrary precision survives serialization.
#[derive(Clone, Debug, Serialize)]
pub struct StatTable {
    pub name: String,
    pub params: BTreeMap<String, i64>,
    pub provenance: Backend,
    pub values: Vec<StatRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StatRow {
    pub n: i64,
    pub value: String,
}

impl StatTable {
    /// CSV form: a `n,value` header row followed by one row per entry.
    pub fn write_csv(&self, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(out, "n,value")?;
        for row in &self.values {
            writeln!(out, "{},{}", row.n, row.value)?;
        }
        Ok(())
    }
}

/// Memoized statistic evaluator with a fixed series truncation order.
pub struct Statistics {
    order: usize,
    config: StatConfig,
    p_cache: RwLock<Vec<BigInt>>,
    series: RwLock<HashMap<SeriesKey, Arc<TruncatedSeries>>>,
    crank_hists: RwLock<HashMap<u32, Arc<BTreeMap<i64, BigInt>>>>,
    nv_hists: RwLock<HashMap<u32, Arc<BTreeMap<i64, BigInt>>>>,
    u_enum_cache: RwLock<HashMap<(u8, i64), BigInt>>,
}

impl Statistics {
    /// Engine with the default cutoffs (30 for object scans, 14 for vector
    /// partitions) and cross-validation enabled.
    pub fn new(order: usize) -> Self {
        Self::with_config(order, StatConfig::default())
    }

    pub fn with_config(order: usize, config: StatConfig) -> Self {
        Statistics {
            order,
            config,
            p_cache: RwLock::new(vec![BigInt::from(1)]),
            series: RwLock::new(HashMap::new()),
            crank_hists: RwLock::new(HashMap::new()),
            nv_hists: RwLock::new(HashMap::new()),
            u_enum_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn config(&self) -> &StatConfig {
        &self.config
    }

    fn cached_series(
        &self,
        key: SeriesKey,
        build: impl FnOnce() -> TruncatedSeries,
    ) -> Arc<TruncatedSeries> {
        if let Some(s) = self.series.read().unwrap().get(&key) {
            return Arc::clone(s);
        }
        // Built outside the lock; a racing duplicate build is idempotent.
        let built = Arc::new(build());
        let mut map = self.series.write().unwrap();
        Arc::clone(map.entry(key).or_insert(built))
    }

    fn series_coeff(
        &self,
        key: SeriesKey,
        build: impl FnOnce() -> TruncatedSeries,
        n: i64,
    ) -> Result<BigInt> {
        if n < 0 {
            return Ok(BigInt::zero());
        }
        if n as usize > self.order {
            return Err(Error::OrderExceeded {
                n,
                order: self.order,
            });
        }
        Ok(self.cached_series(key, build).coeff(n as usize).clone())
    }

    /// Euler's partition function `p(n)` by the pentagonal-number
    /// recurrence, memoized; `p(0) = 1` and `p(n) = 0` for `n < 0`.
    pub fn p(&self, n: i64) -> BigInt {
        if n < 0 {
            return BigInt::zero();
        }
        let n = n as usize;
        {
            let cache = self.p_cache.read().unwrap();
            if let Some(v) = cache.get(n) {
                return v.clone();
            }
        }
        let mut cache = self.p_cache.write().unwrap();
        while cache.len() <= n {
            let m = cache.len() as i64;
            let mut acc = BigInt::zero();
            for j in 1.. {
                let g_pos = pentagonal_number(j);
                let g_neg = pentagonal_number(-j);
                if g_pos > m && g_neg > m {
                    break;
                }
                let sign_plus = j % 2 == 1;
                for g in [g_pos, g_neg] {
                    if g <= m {
                        let prev = &cache[(m - g) as usize];
                        if sign_plus {
                            acc += prev;
                        } else {
                            acc -= prev;
                        }
                    }
                }
            }
            cache.push(acc);
        }
        cache[n].clone()
    }

    pub fn p_backend(&self, n: i64, backend: Backend) -> Result<BigInt> {
        match backend {
            Backend::Enumeration => Ok(if n < 0 {
                BigInt::zero()
            } else {
                BigInt::from(partitions_of(n as u32).count())
            }),
            Backend::Series => {
                self.series_coeff(SeriesKey::PartitionGf, || partition_gf(self.order), n)
            }
        }
    }

    /// `u_m(n)` with the default policy: enumeration up to the cutoff
    /// (cross-validated against the series when enabled), series beyond it.
    pub fn u(&self, m: u8, n: i64) -> Result<BigInt> {
        self.dual(
            "u",
            n,
            self.config.enum_cutoff,
            || self.u_backend(m, n, Backend::Enumeration),
            || self.u_backend(m, n, Backend::Series),
        )
    }

    pub fn u_backend(&self, m: u8, n: i64, backend: Backend) -> Result<BigInt> {
        assert!(m <= 2, "u is defined for m in {{0, 1, 2}}");
        if n < 0 {
            return Ok(BigInt::zero());
        }
        match backend {
            Backend::Series => self.series_coeff(SeriesKey::U(m), || u_gf(m, self.order), n),
            Backend::Enumeration => {
                if let Some(v) = self.u_enum_cache.read().unwrap().get(&(m, n)) {
                    return Ok(v.clone());
                }
                let count = if m == 0 {
                    if n == 0 {
                        0
                    } else {
                        unimodal_compositions_of(n as u32).count()
                    }
                } else {
                    unimodal_with_max_mult(n as u32, m as u32).count()
                };
                let v = BigInt::from(count);
                self.u_enum_cache
                    .write()
                    .unwrap()
                    .entry((m, n))
                    .or_insert_with(|| v.clone());
                Ok(v)
            }
        }
    }

    /// Crank histogram of the partitions of `n >= 1`, by direct scan.
    pub fn crank_histogram(&self, n: u32) -> Arc<BTreeMap<i64, BigInt>> {
        if let Some(h) = self.crank_hists.read().unwrap().get(&n) {
            return Arc::clone(h);
        }
        let mut hist: BTreeMap<i64, BigInt> = BTreeMap::new();
        for lambda in partitions_of(n) {
            let c = lambda.crank().expect("partitions of n >= 1 are nonempty");
            *hist.entry(c).or_default() += 1;
        }
        let hist = Arc::new(hist);
        let mut map = self.crank_hists.write().unwrap();
        Arc::clone(map.entry(n).or_insert(hist))
    }

    /// `|{partitions of n : crank = k}|` by enumeration; `n = 1` returns the
    /// raw value (the single partition `(1)` has crank `-1`).
    pub fn crank_count(&self, k: i64, n: i64) -> Result<BigInt> {
        if n < 1 {
            return Err(Error::Usage(format!(
                "crank_count requires n >= 1, got n={}",
                n
            )));
        }
        let hist = self.crank_histogram(n as u32);
        Ok(hist.get(&k).cloned().unwrap_or_default())
    }

    /// `C_m(n)` with the default policy (see [`Statistics::u`]).
    pub fn c(&self, m: u8, n: i64) -> Result<BigInt> {
        self.dual(
            "C",
            n,
            self.config.enum_cutoff,
            || self.c_backend(m, n, Backend::Enumeration),
            || self.c_backend(m, n, Backend::Series),
        )
    }

    pub fn c_backend(&self, m: u8, n: i64, backend: Backend) -> Result<BigInt> {
        assert!(m <= 2, "C is defined for m in {{0, 1, 2}}");
        if n < 0 {
            return Ok(BigInt::zero());
        }
        match backend {
            Backend::Series => {
                self.series_coeff(SeriesKey::C(m), || crank_cumulative_gf(m, self.order), n)
            }
            Backend::Enumeration => Ok(match n {
                0 => BigInt::from([0, 1, 1][m as usize]),
                1 => BigInt::from([1, 0, -1][m as usize]),
                _ => {
                    let hist = self.crank_histogram(n as u32);
                    let lo = match m {
                        0 => 1,
                        _ => 0,
                    };
                    if m == 2 {
                        hist.get(&0).cloned().unwrap_or_default()
                    } else {
                        hist.range(lo..).map(|(_, v)| v).sum()
                    }
                }
            }),
        }
    }

    /// `M_k(n)` with the default policy.
    pub fn m_k(&self, k: u32, n: i64) -> Result<BigInt> {
        self.dual(
            "M",
            n,
            self.config.enum_cutoff,
            || self.m_k_backend(k, n, Backend::Enumeration),
            || self.m_k_backend(k, n, Backend::Series),
        )
    }

    pub fn m_k_backend(&self, k: u32, n: i64, backend: Backend) -> Result<BigInt> {
        assert!(k >= 1, "M requires k >= 1");
        if n <= 0 {
            return Ok(BigInt::zero());
        }
        match backend {
            Backend::Series => self.series_coeff(SeriesKey::M(k), || mk_gf(k, self.order), n),
            Backend::Enumeration => Ok(BigInt::from(
                partitions_of(n as u32)
                    .filter(|p| is_m_partition(p, k))
                    .count(),
            )),
        }
    }

    /// `P~_k(n)` with the default policy.
    pub fn p_tilde(&self, k: u32, n: i64) -> Result<BigInt> {
        self.dual(
            "Ptilde",
            n,
            self.config.enum_cutoff,
            || self.p_tilde_backend(k, n, Backend::Enumeration),
            || self.p_tilde_backend(k, n, Backend::Series),
        )
    }

    pub fn p_tilde_backend(&self, k: u32, n: i64, backend: Backend) -> Result<BigInt> {
        assert!(k >= 1, "Ptilde requires k >= 1");
        if n <= 0 {
            return Ok(BigInt::zero());
        }
        match backend {
            Backend::Series => {
                self.series_coeff(SeriesKey::PTilde(k), || pk_tilde_gf(k, self.order), n)
            }
            Backend::Enumeration => Ok(BigInt::from(
                partitions_of(n as u32)
                    .filter(|p| is_p_tilde_partition(p, k))
                    .count(),
            )),
        }
    }

    /// Signed vector-partition histogram of size `n`, by triple enumeration.
    pub fn nv_histogram(&self, n: u32) -> Arc<BTreeMap<i64, BigInt>> {
        if let Some(h) = self.nv_hists.read().unwrap().get(&n) {
            return Arc::clone(h);
        }
        let mut hist: BTreeMap<i64, BigInt> = BTreeMap::new();
        for v in vector_partitions_of(n) {
            *hist.entry(v.crank()).or_default() += v.sign();
        }
        hist.retain(|_, v| !v.is_zero());
        let hist = Arc::new(hist);
        let mut map = self.nv_hists.write().unwrap();
        Arc::clone(map.entry(n).or_insert(hist))
    }

    /// `N_V(k, n)`: enumeration up to the vector cutoff, series beyond.
    pub fn n_v(&self, k: i64, n: i64) -> Result<BigInt> {
        self.dual(
            "NV",
            n,
            self.config.vector_enum_cutoff,
            || self.n_v_backend(k, n, Backend::Enumeration),
            || self.n_v_backend(k, n, Backend::Series),
        )
    }

    pub fn n_v_backend(&self, k: i64, n: i64, backend: Backend) -> Result<BigInt> {
        if n < 0 {
            return Ok(BigInt::zero());
        }
        match backend {
            Backend::Series => self.series_coeff(SeriesKey::Nv(k), || nv_gf(k, self.order), n),
            Backend::Enumeration => Ok(self
                .nv_histogram(n as u32)
                .get(&k)
                .cloned()
                .unwrap_or_default()),
        }
    }

    /// Default backend policy shared by the scalar accessors.
    fn dual(
        &self,
        stat: &str,
        n: i64,
        cutoff: i64,
        enumeration: impl FnOnce() -> Result<BigInt>,
        series: impl FnOnce() -> Result<BigInt>,
    ) -> Result<BigInt> {
        if n > cutoff {
            return series();
        }
        let e = enumeration()?;
        if self.config.cross_validate && n >= 0 && (n as usize) <= self.order {
            let s = series()?;
            if s != e {
                return Err(Error::BackendMismatch {
                    stat: stat.to_string(),
                    n,
                    enumeration: e.to_string(),
                    series: s.to_string(),
                });
            }
        }
        Ok(e)
    }

    /// Tabulates one statistic over `from ..= to` with a fixed backend.
    pub fn table(
        &self,
        kind: StatKind,
        param: Option<i64>,
        from: i64,
        to: i64,
        backend: Backend,
    ) -> Result<StatTable> {
        if from > to {
            return Err(Error::Usage(format!("empty range {}..={}", from, to)));
        }
        let mut params = BTreeMap::new();
        let value = |n: i64| -> Result<BigInt> {
            match kind {
                StatKind::P => self.p_backend(n, backend),
                StatKind::U => {
                    let m = param.ok_or_else(|| Error::Usage("u requires --m".into()))?;
                    if !(0..=2).contains(&m) {
                        return Err(Error::Usage("u requires m in {0, 1, 2}".into()));
                    }
                    self.u_backend(m as u8, n, backend)
                }
                StatKind::C => {
                    let m = param.ok_or_else(|| Error::Usage("C requires --m".into()))?;
                    if !(0..=2).contains(&m) {
                        return Err(Error::Usage("C requires m in {0, 1, 2}".into()));
                    }
                    self.c_backend(m as u8, n, backend)
                }
                StatKind::M => {
                    let k = param.ok_or_else(|| Error::Usage("M requires --k".into()))?;
                    if k < 1 {
                        return Err(Error::Usage("M requires k >= 1".into()));
                    }
                    self.m_k_backend(k as u32, n, backend)
                }
                StatKind::PTilde => {
                    let k = param.ok_or_else(|| Error::Usage("Ptilde requires --k".into()))?;
                    if k < 1 {
                        return Err(Error::Usage("Ptilde requires k >= 1".into()));
                    }
                    self.p_tilde_backend(k as u32, n, backend)
                }
                StatKind::Nv => {
                    let k = param.ok_or_else(|| Error::Usage("NV requires --k".into()))?;
                    self.n_v_backend(k, n, backend)
                }
                StatKind::CrankCount => {
                    let k = param.ok_or_else(|| Error::Usage("crank requires --k".into()))?;
                    if backend == Backend::Series {
                        return Err(Error::Usage(
                            "crank counts have no series backend; use --backend enum".into(),
                        ));
                    }
                    if n < 1 {
                        Ok(BigInt::zero())
                    } else {
                        self.crank_count(k, n)
                    }
                }
            }
        };
        match kind {
            StatKind::U | StatKind::C => {
                params.insert("m".to_string(), param.unwrap_or_default());
            }
            StatKind::M | StatKind::PTilde | StatKind::Nv | StatKind::CrankCount => {
                params.insert("k".to_string(), param.unwrap_or_default());
            }
            StatKind::P => {}
        }
        let mut values = Vec::with_capacity((to - from + 1) as usize);
        for n in from..=to {
            values.push(StatRow {
                n,
                value: value(n)?.to_string(),
            });
        }
        Ok(StatTable {
            name: kind.name().to_string(),
            params,
            provenance: backend,
            values,
        })
    }
}

/// Membership test for `M_k`: `k` is the least positive integer that is not
/// a part, and there are more parts greater than `k` than parts less than
/// `k`.
pub fn is_m_partition(lambda: &Partition, k: u32) -> bool {
    lambda.contains_all_up_to(k - 1)
        && lambda.multiplicity(k) == 0
        && lambda.count_parts_greater_than(k) > lambda.count_parts_less_than(k)
}

/// Membership test for `P~_k`: every part `1 ..= k` appears at least once,
/// some part exceeds `k`, and the smallest part exceeding `k` appears at
/// least `k + 1` times.
pub fn is_p_tilde_partition(lambda: &Partition, k: u32) -> bool {
    if !lambda.contains_all_up_to(k) {
        return false;
    }
    match lambda.first_part_greater_than(k) {
        None => false,
        Some(v) => lambda.multiplicity(v) > k as usize,
    }
}
