//! Python bindings for the crankshaft engine: truncated series, partition
//! objects, statistics with dual backends, bijections, and the check
//! runner. Reports come back as JSON strings.

use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use num_bigint::BigInt;

use crankshaft::bijections as bij;
use crankshaft::error::Error;
use crankshaft::identities;
use crankshaft::objects;
use crankshaft::series;
use crankshaft::statistics::{Backend, StatKind, Statistics as CoreStatistics};
use crankshaft::{Composition, Partition, TruncatedSeries, VectorPartition};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::NonUnitConstant(_) => PyZeroDivisionError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn partition_from(parts: Vec<u32>) -> PyResult<Partition> {
    Partition::new(parts).map_err(to_py_err)
}

fn composition_from(parts: Vec<u32>) -> PyResult<Composition> {
    Composition::new(parts).map_err(to_py_err)
}

/// A truncated power series with exact integer coefficients.
#[pyclass(name = "Series", frozen)]
struct PySeries {
    inner: TruncatedSeries,
}

#[pymethods]
impl PySeries {
    #[new]
    fn new(order: usize, coeffs: Vec<BigInt>) -> PyResult<Self> {
        Ok(PySeries {
            inner: TruncatedSeries::from_coeffs(order, coeffs).map_err(to_py_err)?,
        })
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn coeff(&self, i: usize) -> PyResult<BigInt> {
        if i > self.inner.order() {
            return Err(PyValueError::new_err(format!(
                "coefficient {} exceeds order {}",
                i,
                self.inner.order()
            )));
        }
        Ok(self.inner.coeff(i).clone())
    }

    fn coeffs(&self) -> Vec<BigInt> {
        self.inner.coeffs().to_vec()
    }

    fn inverse(&self) -> PyResult<PySeries> {
        Ok(PySeries {
            inner: self.inner.inverse().map_err(to_py_err)?,
        })
    }

    fn shift(&self, s: usize) -> PySeries {
        PySeries {
            inner: self.inner.shift(s),
        }
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("series serializes")
    }

    fn __add__(&self, other: &PySeries) -> PyResult<PySeries> {
        self.check_order(other)?;
        Ok(PySeries {
            inner: self.inner.add(&other.inner),
        })
    }

    fn __sub__(&self, other: &PySeries) -> PyResult<PySeries> {
        self.check_order(other)?;
        Ok(PySeries {
            inner: self.inner.sub(&other.inner),
        })
    }

    fn __mul__(&self, other: &PySeries) -> PyResult<PySeries> {
        self.check_order(other)?;
        Ok(PySeries {
            inner: self.inner.mul(&other.inner),
        })
    }

    fn __neg__(&self) -> PySeries {
        PySeries {
            inner: self.inner.neg(),
        }
    }

    fn __eq__(&self, other: &PySeries) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Series({})", self.inner)
    }
}

impl PySeries {
    fn check_order(&self, other: &PySeries) -> PyResult<()> {
        if self.inner.order() != other.inner.order() {
            return Err(PyValueError::new_err(format!(
                "series order mismatch: {} vs {}",
                self.inner.order(),
                other.inner.order()
            )));
        }
        Ok(())
    }
}

fn wrap(inner: TruncatedSeries) -> PySeries {
    PySeries { inner }
}

#[pyfunction]
fn partition_gf(order: usize) -> PySeries {
    wrap(series::partition_gf(order))
}

#[pyfunction]
fn pochhammer(s: u32, n: u32, order: usize) -> PyResult<PySeries> {
    if s < 1 {
        return Err(PyValueError::new_err("pochhammer requires s >= 1"));
    }
    Ok(wrap(series::pochhammer(s, n, order)))
}

#[pyfunction]
fn pochhammer_inf(s: u32, order: usize) -> PyResult<PySeries> {
    if s < 1 {
        return Err(PyValueError::new_err("pochhammer_inf requires s >= 1"));
    }
    Ok(wrap(series::pochhammer_inf(s, order)))
}

#[pyfunction]
fn gaussian_binomial(n: u32, k: i64, order: usize) -> PySeries {
    wrap(series::gaussian_binomial(n, k, order))
}

#[pyfunction]
fn pentagonal_sum(jlo: i64, jhi: i64, order: usize) -> PyResult<PySeries> {
    if jlo > jhi {
        return Err(PyValueError::new_err("pentagonal_sum requires jlo <= jhi"));
    }
    Ok(wrap(series::pentagonal_sum(jlo, jhi, order)))
}

#[pyfunction]
fn pentagonal_number(j: i64) -> i64 {
    series::pentagonal_number(j)
}

#[pyfunction]
fn u_gf(m: u8, order: usize) -> PyResult<PySeries> {
    if m > 2 {
        return Err(PyValueError::new_err("u_gf requires m in {0, 1, 2}"));
    }
    Ok(wrap(series::u_gf(m, order)))
}

#[pyfunction]
fn nv_gf(k: i64, order: usize) -> PySeries {
    wrap(series::nv_gf(k, order))
}

#[pyfunction]
fn mk_gf(k: u32, order: usize) -> PyResult<PySeries> {
    if k < 1 {
        return Err(PyValueError::new_err("mk_gf requires k >= 1"));
    }
    Ok(wrap(series::mk_gf(k, order)))
}

#[pyfunction]
fn pk_tilde_gf(k: u32, order: usize) -> PyResult<PySeries> {
    if k < 1 {
        return Err(PyValueError::new_err("pk_tilde_gf requires k >= 1"));
    }
    Ok(wrap(series::pk_tilde_gf(k, order)))
}

#[pyfunction]
fn crank_cumulative_gf(m: u8, order: usize) -> PyResult<PySeries> {
    if m > 2 {
        return Err(PyValueError::new_err(
            "crank_cumulative_gf requires m in {0, 1, 2}",
        ));
    }
    Ok(wrap(series::crank_cumulative_gf(m, order)))
}

#[pyfunction]
fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    objects::partitions_of(n)
        .map(|p| p.parts().to_vec())
        .collect()
}

#[pyfunction]
fn distinct_partitions_of(n: u32) -> Vec<Vec<u32>> {
    objects::distinct_partitions_of(n)
        .map(|p| p.parts().to_vec())
        .collect()
}

#[pyfunction]
fn unimodal_compositions_of(n: u32) -> Vec<Vec<u32>> {
    objects::unimodal_compositions_of(n)
        .map(|c| c.parts().to_vec())
        .collect()
}

#[pyfunction]
fn unimodal_with_max_mult(n: u32, m: u32) -> PyResult<Vec<Vec<u32>>> {
    if m < 1 {
        return Err(PyValueError::new_err("m must be at least 1"));
    }
    Ok(objects::unimodal_with_max_mult(n, m)
        .map(|c| c.parts().to_vec())
        .collect())
}

#[pyfunction]
fn vector_partitions_of(n: u32) -> Vec<(Vec<u32>, Vec<u32>, Vec<u32>)> {
    objects::vector_partitions_of(n)
        .map(|v: VectorPartition| {
            (
                v.pi1().parts().to_vec(),
                v.pi2().parts().to_vec(),
                v.pi3().parts().to_vec(),
            )
        })
        .collect()
}

#[pyfunction]
fn is_unimodal(parts: Vec<u32>) -> PyResult<bool> {
    Ok(composition_from(parts)?.is_unimodal())
}

#[pyfunction]
fn conjugate(parts: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(partition_from(parts)?.conjugate().parts().to_vec())
}

#[pyfunction]
fn rotate_star(parts: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(partition_from(parts)?.rotate_star().parts().to_vec())
}

#[pyfunction]
fn staircase(j: i64) -> Vec<u32> {
    objects::staircase(j).parts().to_vec()
}

#[pyfunction]
fn crank(parts: Vec<u32>) -> PyResult<i64> {
    partition_from(parts)?.crank().map_err(to_py_err)
}

#[pyfunction]
fn thm1_phi(parts: Vec<u32>) -> PyResult<Vec<u32>> {
    let c = composition_from(parts)?;
    Ok(bij::thm1_phi(&c).map_err(to_py_err)?.parts().to_vec())
}

#[pyfunction]
fn thm1_psi(parts: Vec<u32>) -> PyResult<Vec<u32>> {
    let c = composition_from(parts)?;
    Ok(bij::thm1_psi(&c).map_err(to_py_err)?.parts().to_vec())
}

#[pyfunction]
fn franklin(parts: Vec<u32>) -> PyResult<Vec<u32>> {
    let p = partition_from(parts)?;
    Ok(bij::franklin(&p).map_err(to_py_err)?.parts().to_vec())
}

#[pyfunction]
#[pyo3(signature = (j, pi2, pi3, m))]
fn sec5_psi(j: i64, pi2: Vec<u32>, pi3: Vec<u32>, m: u8) -> PyResult<Vec<u32>> {
    let p2 = partition_from(pi2)?;
    let p3 = partition_from(pi3)?;
    Ok(bij::sec5_psi(j, &p2, &p3, m)
        .map_err(to_py_err)?
        .parts()
        .to_vec())
}

#[pyfunction]
fn sec5_psi_inverse(parts: Vec<u32>, m: u8) -> PyResult<(Vec<u32>, Vec<u32>)> {
    let c = composition_from(parts)?;
    let (p2, p3) = bij::sec5_psi_inverse(&c, m).map_err(to_py_err)?;
    Ok((p2.parts().to_vec(), p3.parts().to_vec()))
}

#[pyfunction]
fn sec6_f(parts: Vec<u32>) -> PyResult<Vec<u32>> {
    let p = partition_from(parts)?;
    Ok(bij::sec6_f(&p).map_err(to_py_err)?.parts().to_vec())
}

#[pyfunction]
fn sec6_f_inverse(parts: Vec<u32>) -> PyResult<Vec<u32>> {
    let p = partition_from(parts)?;
    Ok(bij::sec6_f_inverse(&p).map_err(to_py_err)?.parts().to_vec())
}

#[pyfunction]
fn sec6_g(k: u32, parts: Vec<u32>, source: &str) -> PyResult<(Vec<u32>, String)> {
    let p = partition_from(parts)?;
    let source: bij::GSource = source.parse().map_err(to_py_err)?;
    let (img, copy) = bij::sec6_g(k, &p, source).map_err(to_py_err)?;
    Ok((img.parts().to_vec(), copy.to_string()))
}

#[pyfunction]
fn sec6_g_inverse(k: u32, parts: Vec<u32>, copy: &str) -> PyResult<(Vec<u32>, String)> {
    let p = partition_from(parts)?;
    let copy: bij::GTarget = copy.parse().map_err(to_py_err)?;
    let (pre, source) = bij::sec6_g_inverse(k, &p, copy).map_err(to_py_err)?;
    Ok((pre.parts().to_vec(), source.to_string()))
}

/// Exhaustively verifies the named bijection at size `n` and returns the
/// report as a JSON string.
#[pyfunction]
#[pyo3(signature = (map, n, m=None, j=None, k=None))]
fn verify_bijection(
    map: &str,
    n: u32,
    m: Option<u8>,
    j: Option<i64>,
    k: Option<u32>,
) -> PyResult<String> {
    let run = bij::BijectionRun {
        map: map.parse().map_err(to_py_err)?,
        n,
        m,
        j,
        k,
        collect_witnesses: false,
    };
    let outcome = bij::verify_bijection(&run).map_err(to_py_err)?;
    Ok(serde_json::to_string(&outcome.report.to_json(false)).expect("report serializes"))
}

/// Runs the named identity check (or "all") and returns the JSON report
/// array as a string.
#[pyfunction]
#[pyo3(signature = (check, n_max, k_lo=1, k_hi=4, order=None))]
fn run_check(
    check: &str,
    n_max: i64,
    k_lo: u32,
    k_hi: u32,
    order: Option<usize>,
) -> PyResult<String> {
    if k_lo < 1 || k_lo > k_hi {
        return Err(PyValueError::new_err("need 1 <= k_lo <= k_hi"));
    }
    let cfg = identities::SweepConfig {
        n_max,
        k_lo,
        k_hi,
        series_order: 0,
        series_k_max: k_hi,
    };
    let order = order.unwrap_or_else(|| cfg.required_order());
    let cfg = identities::SweepConfig {
        series_order: order,
        ..cfg
    };
    let stats = CoreStatistics::new(order);
    let reports =
        identities::run_named(check, &stats, &cfg, &[0, 1, 2], None).map_err(to_py_err)?;
    let doc: Vec<serde_json::Value> = reports.iter().map(|r| r.to_json(false)).collect();
    Ok(serde_json::to_string(&doc).expect("reports serialize"))
}

/// Memoized statistic evaluator with a fixed truncation order and
/// cross-validating dual backends.
#[pyclass(name = "Statistics", frozen)]
struct PyStatistics {
    inner: CoreStatistics,
}

#[pymethods]
impl PyStatistics {
    #[new]
    fn new(order: usize) -> Self {
        PyStatistics {
            inner: CoreStatistics::new(order),
        }
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn p(&self, n: i64) -> BigInt {
        self.inner.p(n)
    }

    fn u(&self, m: u8, n: i64) -> PyResult<BigInt> {
        if m > 2 {
            return Err(PyValueError::new_err("u requires m in {0, 1, 2}"));
        }
        self.inner.u(m, n).map_err(to_py_err)
    }

    fn c(&self, m: u8, n: i64) -> PyResult<BigInt> {
        if m > 2 {
            return Err(PyValueError::new_err("C requires m in {0, 1, 2}"));
        }
        self.inner.c(m, n).map_err(to_py_err)
    }

    fn m_k(&self, k: u32, n: i64) -> PyResult<BigInt> {
        if k < 1 {
            return Err(PyValueError::new_err("M requires k >= 1"));
        }
        self.inner.m_k(k, n).map_err(to_py_err)
    }

    fn p_tilde(&self, k: u32, n: i64) -> PyResult<BigInt> {
        if k < 1 {
            return Err(PyValueError::new_err("Ptilde requires k >= 1"));
        }
        self.inner.p_tilde(k, n).map_err(to_py_err)
    }

    fn n_v(&self, k: i64, n: i64) -> PyResult<BigInt> {
        self.inner.n_v(k, n).map_err(to_py_err)
    }

    fn crank_count(&self, k: i64, n: i64) -> PyResult<BigInt> {
        self.inner.crank_count(k, n).map_err(to_py_err)
    }

    /// One statistic tabulated over `from_n ..= to_n`, as a JSON string.
    #[pyo3(signature = (stat, from_n, to_n, m=None, k=None, backend="series"))]
    fn table(
        &self,
        stat: &str,
        from_n: i64,
        to_n: i64,
        m: Option<i64>,
        k: Option<i64>,
        backend: &str,
    ) -> PyResult<String> {
        let kind = StatKind::parse(stat)
            .ok_or_else(|| PyValueError::new_err(format!("unknown statistic {:?}", stat)))?;
        let backend = match backend {
            "enum" | "enumeration" => Backend::Enumeration,
            "series" => Backend::Series,
            other => {
                return Err(PyValueError::new_err(format!(
                    "unknown backend {:?}; expected enum or series",
                    other
                )))
            }
        };
        let param = m.or(k);
        let table = self
            .inner
            .table(kind, param, from_n, to_n, backend)
            .map_err(to_py_err)?;
        Ok(serde_json::to_string(&table).expect("table serializes"))
    }
}

#[pymodule]
fn crankshaft_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySeries>()?;
    m.add_class::<PyStatistics>()?;
    m.add_function(wrap_pyfunction!(partition_gf, m)?)?;
    m.add_function(wrap_pyfunction!(pochhammer, m)?)?;
    m.add_function(wrap_pyfunction!(pochhammer_inf, m)?)?;
    m.add_function(wrap_pyfunction!(gaussian_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(pentagonal_sum, m)?)?;
    m.add_function(wrap_pyfunction!(pentagonal_number, m)?)?;
    m.add_function(wrap_pyfunction!(u_gf, m)?)?;
    m.add_function(wrap_pyfunction!(nv_gf, m)?)?;
    m.add_function(wrap_pyfunction!(mk_gf, m)?)?;
    m.add_function(wrap_pyfunction!(pk_tilde_gf, m)?)?;
    m.add_function(wrap_pyfunction!(crank_cumulative_gf, m)?)?;
    m.add_function(wrap_pyfunction!(partitions_of, m)?)?;
    m.add_function(wrap_pyfunction!(distinct_partitions_of, m)?)?;
    m.add_function(wrap_pyfunction!(unimodal_compositions_of, m)?)?;
    m.add_function(wrap_pyfunction!(unimodal_with_max_mult, m)?)?;
    m.add_function(wrap_pyfunction!(vector_partitions_of, m)?)?;
    m.add_function(wrap_pyfunction!(is_unimodal, m)?)?;
    m.add_function(wrap_pyfunction!(conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(rotate_star, m)?)?;
    m.add_function(wrap_pyfunction!(staircase, m)?)?;
    m.add_function(wrap_pyfunction!(crank, m)?)?;
    m.add_function(wrap_pyfunction!(thm1_phi, m)?)?;
    m.add_function(wrap_pyfunction!(thm1_psi, m)?)?;
    m.add_function(wrap_pyfunction!(franklin, m)?)?;
    m.add_function(wrap_pyfunction!(sec5_psi, m)?)?;
    m.add_function(wrap_pyfunction!(sec5_psi_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(sec6_f, m)?)?;
    m.add_function(wrap_pyfunction!(sec6_f_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(sec6_g, m)?)?;
    m.add_function(wrap_pyfunction!(sec6_g_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(verify_bijection, m)?)?;
    m.add_function(wrap_pyfunction!(run_check, m)?)?;
    Ok(())
}
