//! Python bindings for `alcove_ideals`.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use pyo3::IntoPyObjectExt;

use alcove_ideals::verify::{self, SuiteOptions, Theorem};
use alcove_ideals::{affine, classify, ideals, lattice, Coweight, RootSet};

fn err(e: alcove_ideals::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    use serde_json::Value;
    match v {
        Value::Null => Ok(py.None().into_bound(py)),
        Value::Bool(b) => b.into_bound_py_any(py),
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => i.into_bound_py_any(py),
            (None, Some(u)) => u.into_bound_py_any(py),
            _ => n.as_f64().unwrap_or(f64::NAN).into_bound_py_any(py),
        },
        Value::String(s) => s.into_bound_py_any(py),
        Value::Array(a) => {
            let list = PyList::empty(py);
            for x in a {
                list.append(json_to_py(py, x)?)?;
            }
            Ok(list.into_any())
        }
        Value::Object(m) => {
            let dict = PyDict::new(py);
            for (k, x) in m {
                dict.set_item(k, json_to_py(py, x)?)?;
            }
            Ok(dict.into_any())
        }
    }
}

/// A finite crystallographic root system, e.g. `RootSystem("B3")`.
#[pyclass(frozen, module = "alcove_ideals_py")]
struct RootSystem {
    inner: Arc<alcove_ideals::RootSystem>,
}

/// An upper ideal of the positive roots.
#[pyclass(frozen, module = "alcove_ideals_py")]
struct Ideal {
    rs: Arc<alcove_ideals::RootSystem>,
    inner: ideals::Ideal,
}

/// An affine Weyl group element `x τ_λ`.
#[pyclass(frozen, module = "alcove_ideals_py")]
struct AffineElement {
    rs: Arc<alcove_ideals::RootSystem>,
    inner: affine::AffineElement,
}

impl RootSystem {
    fn wrap_ideal(&self, inner: ideals::Ideal) -> Ideal {
        Ideal { rs: self.inner.clone(), inner }
    }

    fn wrap_element(&self, inner: affine::AffineElement) -> AffineElement {
        AffineElement { rs: self.inner.clone(), inner }
    }

    fn coweight(&self, lam: Vec<i64>) -> PyResult<Coweight> {
        if lam.len() != self.inner.rank() {
            return Err(PyValueError::new_err(format!("expected {} coordinates", self.inner.rank())));
        }
        Ok(Coweight(lam))
    }
}

#[pymethods]
impl RootSystem {
    #[new]
    fn new(ty: &str) -> PyResult<Self> {
        Ok(RootSystem { inner: Arc::new(alcove_ideals::RootSystem::parse(ty).map_err(err)?) })
    }

    #[getter]
    fn cartan_type(&self) -> String {
        self.inner.cartan_type().to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn n_pos(&self) -> usize {
        self.inner.n_pos()
    }

    #[getter]
    fn coxeter_number(&self) -> i64 {
        self.inner.coxeter_number()
    }

    #[getter]
    fn exponents(&self) -> Vec<i64> {
        self.inner.exponents().to_vec()
    }

    #[getter]
    fn weyl_order(&self) -> u128 {
        self.inner.weyl_order()
    }

    #[getter]
    fn cartan(&self) -> Vec<Vec<i64>> {
        self.inner.cartan().to_vec()
    }

    /// Positive roots in bit order, as simple-root coefficients.
    #[getter]
    fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.inner.positive_roots().iter().map(|r| r.coeffs.clone()).collect()
    }

    #[getter]
    fn highest_root(&self) -> Vec<i64> {
        self.inner.root(self.inner.theta()).coeffs.clone()
    }

    #[pyo3(signature = (strict = false))]
    fn ideals(&self, strict: bool) -> Vec<Ideal> {
        ideals::enumerate_ideals(&self.inner, strict).map(|i| self.wrap_ideal(i)).collect()
    }

    /// The ideal with the given bitmask over the positive roots.
    fn ideal(&self, mask: u128) -> PyResult<Ideal> {
        if mask & !RootSet::full(self.inner.n_pos()).0 != 0 {
            return Err(PyValueError::new_err("mask has bits beyond the positive roots"));
        }
        Ok(self.wrap_ideal(ideals::Ideal::new(&self.inner, RootSet(mask)).map_err(err)?))
    }

    /// Smallest ideal containing the given root indices.
    fn close_up(&self, roots: Vec<usize>) -> PyResult<Ideal> {
        if roots.iter().any(|&r| r >= self.inner.n_pos()) {
            return Err(PyValueError::new_err("root index out of range"));
        }
        Ok(self.wrap_ideal(ideals::close_up(&self.inner, RootSet::from_indices(roots))))
    }

    #[pyo3(signature = (lam, strict = false))]
    fn lambda_to_ideal(&self, lam: Vec<i64>, strict: bool) -> PyResult<Ideal> {
        let lam = self.coweight(lam)?;
        let i = if strict {
            lattice::lambda_to_strict_ideal(&self.inner, &lam)
        } else {
            lattice::lambda_to_ideal(&self.inner, &lam)
        };
        Ok(self.wrap_ideal(i.map_err(err)?))
    }

    fn d_set(&self, t: i64) -> PyResult<Vec<Vec<i64>>> {
        Ok(lattice::d_set(&self.inner, t).map_err(err)?.into_iter().map(|c| c.0).collect())
    }

    /// Product formula `∏ (t + e_i) / (e_i + 1)` as a `fractions.Fraction`.
    fn count_formula<'py>(&self, py: Python<'py>, t: i64) -> PyResult<Bound<'py, PyAny>> {
        let f = lattice::count_formula(&self.inner, t);
        py.import("fractions")?.getattr("Fraction")?.call1((*f.numer(), *f.denom()))
    }

    #[pyo3(signature = (t, cap = lattice::DEFAULT_RESIDUE_CAP))]
    fn count_orbits(&self, t: i64, cap: u128) -> PyResult<u64> {
        lattice::count_orbits_mod(&self.inner, t, cap).map_err(err)
    }

    fn alcove_walk(&self, k: Vec<i64>) -> PyResult<AffineElement> {
        if k.len() != self.inner.n_pos() {
            return Err(PyValueError::new_err(format!("expected {} entries", self.inner.n_pos())));
        }
        Ok(self.wrap_element(affine::alcove_walk(&self.inner, &k).map_err(err)?))
    }

    /// Product of affine simple reflections; node 0 is the affine node.
    fn element(&self, word: Vec<usize>) -> PyResult<AffineElement> {
        if word.iter().any(|&s| s > self.inner.rank()) {
            return Err(PyValueError::new_err("node out of range"));
        }
        Ok(self.wrap_element(affine::from_word(&self.inner, &word)))
    }

    fn simplex_map(&self, t: i64) -> PyResult<AffineElement> {
        Ok(self.wrap_element(lattice::find_simplex_map(&self.inner, t).map_err(err)?))
    }

    #[pyo3(signature = (strict = false))]
    fn classify<'py>(&self, py: Python<'py>, strict: bool) -> PyResult<Bound<'py, PyAny>> {
        let rows = classify::classify_ideals(&self.inner, strict).map_err(err)?;
        let v = serde_json::to_value(rows).map_err(|e| PyValueError::new_err(e.to_string()))?;
        json_to_py(py, &v)
    }

    #[pyo3(signature = (theorem, seed = verify::DEFAULT_SEED, budget = verify::DEFAULT_BUDGET))]
    fn verify<'py>(&self, py: Python<'py>, theorem: &str, seed: u64, budget: u64) -> PyResult<Bound<'py, PyAny>> {
        let th: Theorem = theorem.parse().map_err(err)?;
        let report = verify::run(&self.inner, th, SuiteOptions { seed, budget }).map_err(err)?;
        let v = serde_json::to_value(report).map_err(|e| PyValueError::new_err(e.to_string()))?;
        json_to_py(py, &v)
    }

    fn __repr__(&self) -> String {
        format!("RootSystem('{}')", self.inner.cartan_type())
    }
}

#[pymethods]
impl Ideal {
    #[getter]
    fn mask(&self) -> u128 {
        self.inner.members().0
    }

    #[getter]
    fn roots(&self) -> Vec<usize> {
        self.inner.members().to_vec()
    }

    #[getter]
    fn min_roots(&self) -> Vec<usize> {
        self.inner.min_roots().to_vec()
    }

    #[getter]
    fn is_strict(&self) -> bool {
        self.inner.is_strict()
    }

    fn to_lambda(&self) -> PyResult<Vec<i64>> {
        Ok(lattice::ideal_to_lambda(&self.rs, &self.inner).map_err(err)?.0)
    }

    fn strict_to_lambda(&self) -> PyResult<Vec<i64>> {
        Ok(lattice::strict_ideal_to_lambda(&self.rs, &self.inner).map_err(err)?.0)
    }

    fn plus_stats(&self) -> Vec<i64> {
        ideals::plus_stats(&self.rs, &self.inner)
    }

    fn minus_stats(&self) -> PyResult<Vec<i64>> {
        ideals::minus_stats(&self.rs, &self.inner).map_err(err)
    }

    fn w_min(&self) -> PyResult<AffineElement> {
        let inner = affine::w_min(&self.rs, &self.inner).map_err(err)?;
        Ok(AffineElement { rs: self.rs.clone(), inner })
    }

    fn w_max(&self) -> PyResult<AffineElement> {
        let inner = affine::w_max(&self.rs, &self.inner).map_err(err)?;
        Ok(AffineElement { rs: self.rs.clone(), inner })
    }

    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, &self.inner.to_json(&self.rs))
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __eq__(&self, other: &Ideal) -> bool {
        self.inner == other.inner && self.rs.cartan_type() == other.rs.cartan_type()
    }

    fn __hash__(&self) -> u64 {
        let m = self.inner.members().0;
        (m as u64) ^ ((m >> 64) as u64)
    }

    fn __repr__(&self) -> String {
        format!("Ideal('{}', 0x{:x})", self.rs.cartan_type(), self.inner.members())
    }
}

#[pymethods]
impl AffineElement {
    /// Finite part as a permutation of root indices.
    #[getter]
    fn x(&self) -> Vec<u16> {
        self.inner.x.perm().to_vec()
    }

    /// Translation part in simple-coroot coordinates.
    #[getter]
    fn translation(&self) -> Vec<i64> {
        self.inner.lambda.0.clone()
    }

    #[getter]
    fn k(&self) -> Vec<i64> {
        affine::k_vector(&self.rs, &self.inner)
    }

    #[getter]
    fn length(&self) -> i64 {
        affine::length(&self.rs, &self.inner)
    }

    fn is_dominant(&self) -> bool {
        affine::is_dominant(&self.rs, &self.inner)
    }

    fn compose(&self, other: &AffineElement) -> AffineElement {
        AffineElement { rs: self.rs.clone(), inner: self.inner.compose(&self.rs, &other.inner) }
    }

    fn inverse(&self) -> AffineElement {
        AffineElement { rs: self.rs.clone(), inner: self.inner.inverse(&self.rs) }
    }

    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, &self.inner.to_json(&self.rs))
    }

    fn __mul__(&self, other: &AffineElement) -> AffineElement {
        self.compose(other)
    }

    fn __eq__(&self, other: &AffineElement) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("AffineElement(x={:?}, translation={:?})", self.inner.x.perm(), self.inner.lambda.0)
    }
}

#[pymodule]
fn alcove_ideals_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<RootSystem>()?;
    m.add_class::<Ideal>()?;
    m.add_class::<AffineElement>()?;
    m.add("THEOREMS", Theorem::ALL.iter().map(|t| t.name()).collect::<Vec<_>>())?;
    Ok(())
}
