use std::collections::BTreeMap;
use std::sync::Arc;

use dedekind::algebra::AlgebraElement;
use dedekind::det::DetStrategy;
use dedekind::factor::{
    dedekind_factorization, group_determinant, verify_factorization, FactorOptions, DEFAULT_ORDER_CAP,
};
use dedekind::group::{builtin_group, FiniteGroup, Subgroup};
use dedekind::index2::Index2Context;
use dedekind::report::CheckStatus;
use dedekind::suite::{self, SuiteConfig};
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;

fn err(e: dedekind::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn strategy(name: &str) -> PyResult<DetStrategy> {
    name.parse().map_err(err)
}

/// A finite group given by its Cayley table.
#[pyclass(frozen, name = "Group")]
struct PyGroup {
    inner: Arc<FiniteGroup>,
}

#[pymethods]
impl PyGroup {
    /// Catalog key such as `cyclic:4`, `sym:3`, `dihedral:4` or `quaternion8`.
    #[new]
    fn new(key: &str) -> PyResult<Self> {
        Ok(PyGroup {
            inner: builtin_group(key).map_err(err)?,
        })
    }

    #[staticmethod]
    #[pyo3(signature = (table, names=None))]
    fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> PyResult<Self> {
        Ok(PyGroup {
            inner: FiniteGroup::from_table(table, names).map_err(err)?,
        })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label().to_string()
    }

    #[getter]
    fn names(&self) -> Vec<String> {
        self.inner.names().to_vec()
    }

    fn is_abelian(&self) -> bool {
        self.inner.is_abelian()
    }

    fn mul(&self, a: usize, b: usize) -> PyResult<usize> {
        let n = self.inner.order();
        if a >= n || b >= n {
            return Err(PyValueError::new_err("element index out of range"));
        }
        Ok(self.inner.mul(a, b))
    }

    /// `Theta(G)` rendered as text.
    #[pyo3(signature = (order_cap=DEFAULT_ORDER_CAP))]
    fn theta(&self, order_cap: usize) -> PyResult<String> {
        Ok(group_determinant(&self.inner, order_cap).map_err(err)?.to_string())
    }

    /// The element `sum_g c_g g` with integer coefficients by element index.
    fn element(&self, coeffs: Vec<i64>) -> PyResult<PyElement> {
        if coeffs.len() != self.inner.order() {
            return Err(PyValueError::new_err(format!(
                "expected {} coefficients, got {}",
                self.inner.order(),
                coeffs.len()
            )));
        }
        Ok(PyElement {
            inner: AlgebraElement::from_ints(&self.inner, &coeffs),
        })
    }

    /// The generic element `sum_g x_g g`.
    fn generic(&self) -> PyElement {
        PyElement {
            inner: AlgebraElement::generic(&self.inner),
        }
    }

    fn __repr__(&self) -> String {
        format!("Group('{}')", self.inner.label())
    }
}

/// An element of the group algebra with polynomial coefficients.
#[pyclass(frozen, name = "Element")]
struct PyElement {
    inner: AlgebraElement,
}

impl PyElement {
    fn same_group(&self, other: &PyElement) -> PyResult<()> {
        if FiniteGroup::same(self.inner.group(), other.inner.group()) {
            Ok(())
        } else {
            Err(PyTypeError::new_err("elements belong to different groups"))
        }
    }
}

#[pymethods]
impl PyElement {
    fn __add__(&self, other: &PyElement) -> PyResult<PyElement> {
        self.same_group(other)?;
        Ok(PyElement {
            inner: &self.inner + &other.inner,
        })
    }

    fn __sub__(&self, other: &PyElement) -> PyResult<PyElement> {
        self.same_group(other)?;
        Ok(PyElement {
            inner: &self.inner - &other.inner,
        })
    }

    fn __mul__(&self, other: &PyElement) -> PyResult<PyElement> {
        self.same_group(other)?;
        Ok(PyElement {
            inner: &self.inner * &other.inner,
        })
    }

    fn __neg__(&self) -> PyElement {
        PyElement { inner: -&self.inner }
    }

    fn __eq__(&self, other: &PyElement) -> bool {
        self.inner == other.inner
    }

    fn is_central(&self) -> bool {
        self.inner.is_central()
    }

    fn augmentation(&self) -> String {
        self.inner.augmentation().to_string()
    }

    /// Conjugation across an abelian subgroup of index 2.
    fn conjugate(&self, subgroup: &str) -> PyResult<PyElement> {
        let h = Subgroup::parse(self.inner.group(), subgroup).map_err(err)?;
        let ctx = Index2Context::new(&h).map_err(err)?;
        Ok(PyElement {
            inner: ctx.conjugate(&self.inner),
        })
    }

    fn to_latex(&self) -> String {
        self.inner.to_latex()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element({})", self.inner)
    }
}

/// `Theta(G)` factored over an abelian subgroup.
#[pyclass(frozen, name = "Factorization")]
struct PyFactorization {
    #[pyo3(get)]
    theta: String,
    /// `a_h` keyed by element name.
    #[pyo3(get)]
    coefficients: BTreeMap<String, String>,
    #[pyo3(get)]
    factors: Vec<String>,
    /// `True`/`False`, or `None` for skipped checks.
    #[pyo3(get)]
    checks: BTreeMap<String, Option<bool>>,
    #[pyo3(get)]
    passed: bool,
    json: String,
}

#[pymethods]
impl PyFactorization {
    fn to_json(&self) -> String {
        self.json.clone()
    }

    fn __repr__(&self) -> String {
        format!("Factorization(factors={}, passed={})", self.factors.len(), self.passed)
    }
}

#[pyfunction]
#[pyo3(signature = (group, subgroup, det_strategy="dft", order_cap=DEFAULT_ORDER_CAP))]
fn factorize(group: &PyGroup, subgroup: &str, det_strategy: &str, order_cap: usize) -> PyResult<PyFactorization> {
    let g = &group.inner;
    let h = Subgroup::parse(g, subgroup).map_err(err)?;
    let options = FactorOptions {
        strategy: strategy(det_strategy)?,
        order_cap,
    };
    let result = dedekind_factorization(g, &h, options).map_err(err)?;
    let report = verify_factorization(&result);
    Ok(PyFactorization {
        theta: result.theta().to_string(),
        coefficients: result
            .coefficients
            .iter()
            .map(|(x, a)| (g.name(*x).to_string(), a.to_string()))
            .collect(),
        factors: result.factors_algebra.iter().map(ToString::to_string).collect(),
        checks: report
            .checks
            .iter()
            .map(|c| {
                let v = match c.status {
                    CheckStatus::Pass => Some(true),
                    CheckStatus::Fail => Some(false),
                    CheckStatus::Skipped | CheckStatus::Info => None,
                };
                (c.name.clone(), v)
            })
            .collect(),
        passed: report.passed(),
        json: result.to_json().to_string(),
    })
}

/// Runs the acceptance matrix; returns `(id, title, passed)` per criterion.
#[pyfunction]
#[pyo3(signature = (seed=42, det_strategy="dft"))]
fn verify_all(py: Python<'_>, seed: u64, det_strategy: &str) -> PyResult<Vec<(String, String, bool)>> {
    let cfg = SuiteConfig {
        seed,
        strategy: strategy(det_strategy)?,
        ..SuiteConfig::default()
    };
    let outcomes = py.detach(|| suite::run_all(&cfg)).map_err(err)?;
    Ok(outcomes
        .into_iter()
        .map(|o| (o.id.to_string(), o.title.to_string(), o.passed()))
        .collect())
}

#[pymodule]
#[pyo3(name = "dedekind")]
fn dedekind_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroup>()?;
    m.add_class::<PyElement>()?;
    m.add_class::<PyFactorization>()?;
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    Ok(())
}
