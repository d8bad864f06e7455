//! Python module `uwm`: matrices, blocks, decomposition counts and the
//! exhaustive search.

use num_bigint::BigUint;
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use uwm_core::blocks::{BlockId, XValue};
use uwm_core::compose::{self, PartMultiset};
use uwm_core::format;
use uwm_core::matrix::{canonical_form_with_budget, DEFAULT_CANONICAL_BUDGET};
use uwm_core::search::{self, SearchConfig, Verdict};
use uwm_core::Error;

create_exception!(uwm, BudgetExceeded, PyRuntimeError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded(_) => BudgetExceeded::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn parse_x(x: Option<&Bound<'_, PyAny>>) -> PyResult<Option<XValue>> {
    let Some(x) = x else { return Ok(None) };
    let text = if let Ok(k) = x.extract::<u32>() {
        k.to_string()
    } else {
        x.extract::<String>()?
    };
    text.parse::<XValue>()
        .map(Some)
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// A unit weighing matrix candidate with exact entries.
#[pyclass(name = "UnitMatrix", module = "uwm", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyUnitMatrix {
    inner: uwm_core::UnitMatrix,
}

impl From<uwm_core::UnitMatrix> for PyUnitMatrix {
    fn from(inner: uwm_core::UnitMatrix) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyUnitMatrix {
    /// Parse the `uwm n= w= L= vars=` text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        format::parse_matrix(text).map(Into::into).map_err(to_py)
    }

    fn to_text(&self) -> String {
        format::serialize_matrix(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn w(&self) -> usize {
        self.inner.weight()
    }

    #[getter]
    fn order(&self) -> u32 {
        self.inner.order()
    }

    #[getter]
    fn symbolic(&self) -> bool {
        self.inner.is_symbolic()
    }

    /// Entry tokens row by row (`0`, `z<k>`, `z<k>x<e>`).
    fn rows(&self) -> Vec<Vec<String>> {
        self.inner
            .rows()
            .map(|r| r.iter().map(|&e| format::entry_token(e)).collect())
            .collect()
    }

    fn gram_check(&self) -> bool {
        self.inner.gram_check()
    }

    fn is_standard_form(&self) -> PyResult<bool> {
        self.inner.is_standard_form().map_err(to_py)
    }

    fn standardize(&self) -> PyResult<Self> {
        self.inner.standardize().map(Into::into).map_err(to_py)
    }

    #[pyo3(signature = (budget=None))]
    fn canonical_form(&self, budget: Option<u64>) -> PyResult<Self> {
        canonical_form_with_budget(&self.inner, budget.unwrap_or(DEFAULT_CANONICAL_BUDGET))
            .map(Into::into)
            .map_err(to_py)
    }

    /// A random equivalent matrix (row/column permutations and scalings).
    fn scramble(&self, seed: u64) -> Self {
        self.inner.random_equivalence_scramble(seed).into()
    }

    fn __str__(&self) -> String {
        self.to_text()
    }

    fn __repr__(&self) -> String {
        format!(
            "UnitMatrix(n={}, w={}, L={}, symbolic={})",
            self.inner.n(),
            self.inner.weight(),
            self.inner.order(),
            self.inner.is_symbolic()
        )
    }
}

/// A named block; `x` is `K` for ζ_12^K or `"var"` for the formal variable.
#[pyfunction]
#[pyo3(signature = (label, m=None, x=None))]
fn block(label: &str, m: Option<usize>, x: Option<&Bound<'_, PyAny>>) -> PyResult<PyUnitMatrix> {
    let id = BlockId::new(label, m, parse_x(x)?).map_err(to_py)?;
    Ok(id.build().into())
}

/// Direct sum of blocks named by a decomposition such as `"5*,4"`.
#[pyfunction]
#[pyo3(signature = (weight, parts, x=None, real=false))]
fn compose_parts(
    weight: usize,
    parts: &str,
    x: Option<&Bound<'_, PyAny>>,
    real: bool,
) -> PyResult<PyUnitMatrix> {
    let p = PartMultiset::parse(weight, parts, real).map_err(to_py)?;
    compose::compose_from_parts(&p, parse_x(x)?)
        .map(Into::into)
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (n, weight, real=false))]
fn count_decompositions(n: usize, weight: usize, real: bool) -> PyResult<BigUint> {
    compose::count_decompositions(n, weight, real).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (n, weight, real=false))]
fn enumerate_part_multisets(n: usize, weight: usize, real: bool) -> PyResult<Vec<String>> {
    Ok(
        compose::enumerate_part_multisets(n, weight, real, compose::DEFAULT_ENUMERATION_BOUND)
            .map_err(to_py)?
            .iter()
            .map(|p| p.to_string())
            .collect(),
    )
}

/// `"exists"`, `"not_exists"` or `"unknown"`.
#[pyfunction]
#[pyo3(signature = (n, w, real=false))]
fn exists(n: usize, w: usize, real: bool) -> String {
    let answer = if real {
        compose::exists_w_real(n, w)
    } else {
        compose::exists_uw(n, w)
    };
    answer.to_string()
}

#[pyfunction]
fn m_orth_solutions(m: usize, order: u32) -> PyResult<Vec<Vec<u32>>> {
    Ok(search::m_orth_solutions(m, order)
        .map_err(to_py)?
        .into_iter()
        .map(|t| t.values)
        .collect())
}

#[pyfunction]
#[pyo3(signature = (m, order, budget=search::DEFAULT_BRUTE_BUDGET))]
fn orth_brute(m: usize, order: u32, budget: u64) -> PyResult<Vec<Vec<u32>>> {
    Ok(search::orth_brute(m, order, budget)
        .map_err(to_py)?
        .into_iter()
        .map(|t| t.values)
        .collect())
}

/// `(passes, required_orthogonality)`.
#[pyfunction]
fn zero_pattern_necessary(n: usize, w: usize, order: u32) -> PyResult<(bool, Option<usize>)> {
    let r = search::zero_pattern_necessary(n, w, order).map_err(to_py)?;
    Ok((r.verdict == Verdict::Pass, r.required_orthogonality))
}

/// One representative per equivalence class of UW(n, w) over the L-th roots.
#[pyfunction]
#[pyo3(signature = (n, w, order=12, budget=None, parallel=false))]
fn dfs_classify(
    py: Python<'_>,
    n: usize,
    w: usize,
    order: u32,
    budget: Option<u64>,
    parallel: bool,
) -> PyResult<Vec<PyUnitMatrix>> {
    let cfg = SearchConfig::new(n, w, order)
        .with_budget(budget.unwrap_or(search::DEFAULT_NODE_BUDGET))
        .with_parallel(parallel);
    let out = py.detach(|| search::dfs_classify(&cfg)).map_err(to_py)?;
    Ok(out.matrices.into_iter().map(Into::into).collect())
}

/// The order-7 weight-5 refutation as a dict.
#[pyfunction]
fn uw75_refute(py: Python<'_>) -> PyResult<Bound<'_, PyDict>> {
    let cert = search::uw75_refute();
    let d = PyDict::new(py);
    d.set_item("verdict", "UNSAT")?;
    d.set_item("verified", cert.verify())?;
    d.set_item("template", cert.template.clone())?;
    d.set_item("assignments", cert.assignments.len())?;
    d.set_item("text", cert.to_string())?;
    Ok(d)
}

#[pymodule]
fn uwm(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyUnitMatrix>()?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    m.add_function(wrap_pyfunction!(block, m)?)?;
    m.add_function(wrap_pyfunction!(compose_parts, m)?)?;
    m.add_function(wrap_pyfunction!(count_decompositions, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_part_multisets, m)?)?;
    m.add_function(wrap_pyfunction!(exists, m)?)?;
    m.add_function(wrap_pyfunction!(m_orth_solutions, m)?)?;
    m.add_function(wrap_pyfunction!(orth_brute, m)?)?;
    m.add_function(wrap_pyfunction!(zero_pattern_necessary, m)?)?;
    m.add_function(wrap_pyfunction!(dfs_classify, m)?)?;
    m.add_function(wrap_pyfunction!(uw75_refute, m)?)?;
    Ok(())
}
