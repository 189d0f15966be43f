//! Python bindings for the staircase-tableaux ASEP toolkit.
//!
//! Exact values cross the boundary as strings (`p/q` rationals, canonical
//! polynomial text, JSON reports) so nothing is ever rounded.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use asep_tableaux::exactmath::parse_rational;
use asep_tableaux::{ansatz, asep, bijections, moments, tableaux};

fn err(e: asep_tableaux::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn chain_params(
    alpha: &str,
    beta: &str,
    gamma: &str,
    delta: &str,
    q: &str,
    u: &str,
) -> PyResult<asep::AsepParams> {
    Ok(asep::AsepParams::new(
        parse_rational(alpha).map_err(err)?,
        parse_rational(beta).map_err(err)?,
        parse_rational(gamma).map_err(err)?,
        parse_rational(delta).map_err(err)?,
        parse_rational(q).map_err(err)?,
        parse_rational(u).map_err(err)?,
    ))
}

fn aw_params(a: &str, b: &str, c: &str, d: &str, q: &str) -> PyResult<moments::AwParams> {
    Ok(moments::AwParams::new(
        parse_rational(a).map_err(err)?,
        parse_rational(b).map_err(err)?,
        parse_rational(c).map_err(err)?,
        parse_rational(d).map_err(err)?,
        parse_rational(q).map_err(err)?,
    ))
}

fn dist_map(dist: &asep::StationaryDist) -> BTreeMap<String, String> {
    dist.iter()
        .map(|(w, p)| (w.to_string(), p.to_string()))
        .collect()
}

/// A staircase-shaped tableau over the labels `. a b g d`.
#[pyclass(name = "StaircaseTableau", skip_from_py_object)]
#[derive(Clone)]
struct PyStaircaseTableau {
    inner: tableaux::StaircaseTableau,
}

#[pymethods]
impl PyStaircaseTableau {
    /// Parse the text format: size, then one line of `.abgd` per row.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyStaircaseTableau {
            inner: tableaux::StaircaseTableau::parse_text(text).map_err(err)?,
        })
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn size(&self) -> usize {
        self.inner.size()
    }

    fn is_valid(&self) -> bool {
        self.inner.is_valid()
    }

    /// The 0/1 type word read along the diagonal.
    fn tableau_type(&self) -> PyResult<String> {
        Ok(self.inner.tableau_type().map_err(err)?.to_string())
    }

    /// The weight monomial in canonical text form.
    fn weight(&self) -> PyResult<String> {
        Ok(self.inner.weight().map_err(err)?.to_string())
    }

    fn dual_weight(&self) -> PyResult<String> {
        Ok(self.inner.dual_weight().map_err(err)?.to_string())
    }

    fn transpose_swap(&self) -> Self {
        PyStaircaseTableau {
            inner: self.inner.transpose_swap(),
        }
    }

    fn __repr__(&self) -> String {
        format!("StaircaseTableau({:?})", self.inner.to_text())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// Number of staircase tableaux of the given size (4^n n!).
#[pyfunction]
fn count_tableaux(n: usize) -> PyResult<u128> {
    tableaux::count(n).map_err(err)
}

/// All tableaux of one size, in the deterministic enumeration order.
#[pyfunction]
fn enumerate_tableaux(n: usize) -> PyResult<Vec<PyStaircaseTableau>> {
    Ok(tableaux::enumerate(n)
        .map_err(err)?
        .map(|inner| PyStaircaseTableau { inner })
        .collect())
}

/// Z_n in canonical polynomial text; `keep_u=False` sets u = 1.
#[pyfunction]
#[pyo3(signature = (n, keep_u = true))]
fn gf_total(n: usize, keep_u: bool) -> PyResult<String> {
    Ok(tableaux::gf_total(n, keep_u).map_err(err)?.to_text())
}

/// The generating function of one type, given as a 0/1 word.
#[pyfunction]
fn gf_by_type(n: usize, type_word: &str) -> PyResult<String> {
    let word = type_word.parse().map_err(err)?;
    Ok(tableaux::gf_by_type(n, &word).map_err(err)?.to_text())
}

/// Stationary distribution from the tableaux route: {state: "p/q"}.
#[pyfunction]
#[pyo3(signature = (n, alpha, beta, gamma, delta, q, u = "1"))]
fn stationary_tableaux(
    n: usize,
    alpha: &str,
    beta: &str,
    gamma: &str,
    delta: &str,
    q: &str,
    u: &str,
) -> PyResult<BTreeMap<String, String>> {
    let params = chain_params(alpha, beta, gamma, delta, q, u)?;
    Ok(dist_map(&asep::stationary_tableaux(n, &params).map_err(err)?))
}

/// Stationary distribution from the exact linear solver: {state: "p/q"}.
#[pyfunction]
#[pyo3(signature = (n, alpha, beta, gamma, delta, q, u = "1"))]
fn stationary_exact(
    n: usize,
    alpha: &str,
    beta: &str,
    gamma: &str,
    delta: &str,
    q: &str,
    u: &str,
) -> PyResult<BTreeMap<String, String>> {
    let params = chain_params(alpha, beta, gamma, delta, q, u)?;
    let chain = asep::build_chain(n, &params).map_err(err)?;
    Ok(dist_map(&asep::stationary_exact(&chain).map_err(err)?))
}

/// Steady-state current `Z_{n-1}(ab - gd q^(n-1))/Z_n` at the parameters.
#[pyfunction]
#[pyo3(signature = (n, alpha, beta, gamma, delta, q, u = "1"))]
fn current(
    n: usize,
    alpha: &str,
    beta: &str,
    gamma: &str,
    delta: &str,
    q: &str,
    u: &str,
) -> PyResult<String> {
    let params = chain_params(alpha, beta, gamma, delta, q, u)?;
    Ok(asep::current(n, &params).map_err(err)?.to_string())
}

/// m-point function: probability that all given 1-based sites are occupied.
#[pyfunction]
#[pyo3(signature = (n, positions, alpha, beta, gamma, delta, q, u = "1"))]
#[allow(clippy::too_many_arguments)]
fn m_point(
    n: usize,
    positions: Vec<usize>,
    alpha: &str,
    beta: &str,
    gamma: &str,
    delta: &str,
    q: &str,
    u: &str,
) -> PyResult<String> {
    let params = chain_params(alpha, beta, gamma, delta, q, u)?;
    Ok(asep::m_point(n, &positions, &params)
        .map_err(err)?
        .to_string())
}

/// True when the three boundary symmetries hold as polynomial identities.
#[pyfunction]
fn check_symmetries(n: usize) -> PyResult<bool> {
    Ok(asep::check_symmetries(n).map_err(err)?.is_ok())
}

/// One transfer-matrix entry (letter "D" or "E") as polynomial text.
#[pyfunction]
fn transfer_entry(letter: &str, i: i64, j: i64, k: i64, l: i64) -> PyResult<String> {
    let letter = match letter {
        "D" => ansatz::Letter::D,
        "E" => ansatz::Letter::E,
        _ => return Err(PyValueError::new_err("letter must be \"D\" or \"E\"")),
    };
    Ok(ansatz::TransferCache::new()
        .entry(letter, i, j, k, l)
        .to_text())
}

/// The type generating function of a word over {D, E}, at u = 1.
#[pyfunction]
fn wxv(word: &str) -> PyResult<String> {
    let word: ansatz::AnsatzWord = word.parse().map_err(err)?;
    Ok(ansatz::TransferCache::new().wxv(&word).to_text())
}

/// JSON report list for the three ansatz identity families.
#[pyfunction]
fn verify_gma(max_len: usize) -> PyResult<String> {
    let reports = ansatz::verify_gma(max_len).map_err(err)?;
    serde_json::to_string(&reports).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// JSON report for the index-decrease identity sweep.
#[pyfunction]
fn verify_decrease(max_len: usize, max_index: i64) -> PyResult<String> {
    let report = ansatz::verify_decrease(max_len, max_index).map_err(err)?;
    serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// JSON report list for the two row-level identity families.
#[pyfunction]
fn verify_identities(max_len: usize) -> PyResult<String> {
    let reports = ansatz::verify_identities(max_len).map_err(err)?;
    serde_json::to_string(&reports).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// The substitution from (a, b, c, d, q) to the four chain parameters.
#[pyfunction]
fn forward_params(
    a: &str,
    b: &str,
    c: &str,
    d: &str,
    q: &str,
) -> PyResult<(String, String, String, String)> {
    let aw = aw_params(a, b, c, d, q)?;
    let (alpha, beta, gamma, delta) = moments::forward_params(&aw).map_err(err)?;
    Ok((
        alpha.to_string(),
        beta.to_string(),
        gamma.to_string(),
        delta.to_string(),
    ))
}

/// Normalized moments from the staircase formula, as "p/q" strings.
#[pyfunction]
fn moments_staircase(k: usize, a: &str, b: &str, c: &str, d: &str, q: &str) -> PyResult<Vec<String>> {
    let aw = aw_params(a, b, c, d, q)?;
    Ok(moments::moments_staircase(k, &aw)
        .map_err(err)?
        .iter()
        .map(|v| v.to_string())
        .collect())
}

/// Normalized moments from the Motzkin-path recurrence, as "p/q" strings.
#[pyfunction]
fn moments_motzkin(k: usize, a: &str, b: &str, c: &str, d: &str, q: &str) -> PyResult<Vec<String>> {
    let aw = aw_params(a, b, c, d, q)?;
    Ok(moments::moments_motzkin(k, &aw)
        .map_err(err)?
        .iter()
        .map(|v| v.to_string())
        .collect())
}

/// True when both moment pipelines agree exactly and the binomial bridge
/// holds up to k.
#[pyfunction]
fn compare_moments(k: usize, a: &str, b: &str, c: &str, d: &str, q: &str) -> PyResult<bool> {
    let aw = aw_params(a, b, c, d, q)?;
    let cmp = moments::compare_moments(k, &aw).map_err(err)?;
    Ok(cmp.equal && cmp.bridge_ok)
}

/// Convert a tableau between the three families; kinds are "staircase",
/// "alt", "perm". Input and output use the text formats.
#[pyfunction]
fn biject(from_kind: &str, to_kind: &str, text: &str) -> PyResult<String> {
    let hub = match from_kind {
        "staircase" => bijections::staircase_to_alt(
            &tableaux::StaircaseTableau::parse_text(text).map_err(err)?,
        )
        .map_err(err)?,
        "alt" => bijections::AlternativeTableau::parse_text(text).map_err(err)?,
        "perm" => bijections::perm_to_alt(
            &bijections::PermutationTableau::parse_text(text).map_err(err)?,
        )
        .map_err(err)?,
        _ => return Err(PyValueError::new_err("from_kind must be staircase|alt|perm")),
    };
    match to_kind {
        "staircase" => Ok(bijections::alt_to_staircase(&hub).map_err(err)?.to_text()),
        "alt" => Ok(hub.to_text()),
        "perm" => Ok(bijections::alt_to_perm(&hub).map_err(err)?.to_text()),
        _ => Err(PyValueError::new_err("to_kind must be staircase|alt|perm")),
    }
}

#[pymodule]
fn pyasep(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyStaircaseTableau>()?;
    m.add_function(wrap_pyfunction!(count_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(gf_total, m)?)?;
    m.add_function(wrap_pyfunction!(gf_by_type, m)?)?;
    m.add_function(wrap_pyfunction!(stationary_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(stationary_exact, m)?)?;
    m.add_function(wrap_pyfunction!(current, m)?)?;
    m.add_function(wrap_pyfunction!(m_point, m)?)?;
    m.add_function(wrap_pyfunction!(check_symmetries, m)?)?;
    m.add_function(wrap_pyfunction!(transfer_entry, m)?)?;
    m.add_function(wrap_pyfunction!(wxv, m)?)?;
    m.add_function(wrap_pyfunction!(verify_gma, m)?)?;
    m.add_function(wrap_pyfunction!(verify_decrease, m)?)?;
    m.add_function(wrap_pyfunction!(verify_identities, m)?)?;
    m.add_function(wrap_pyfunction!(forward_params, m)?)?;
    m.add_function(wrap_pyfunction!(moments_staircase, m)?)?;
    m.add_function(wrap_pyfunction!(moments_motzkin, m)?)?;
    m.add_function(wrap_pyfunction!(compare_moments, m)?)?;
    m.add_function(wrap_pyfunction!(biject, m)?)?;
    Ok(())
}
