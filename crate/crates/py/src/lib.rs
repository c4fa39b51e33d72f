//! Python bindings: scalars of the cyclotomic field, module labels,
//! classification, fusion, the loop eigenvalues, the fusion ring and the
//! verification suites.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use nichols_core::classify::{classify_coinvariant, decompose_space, ModuleDescriptor};
use nichols_core::fusion::{fuse_brute, fuse_closed};
use nichols_core::fusionring::{ring_multiply, RingElt};
use nichols_core::loop_op::{lambda_closed, mu_closed, mu_uv_basis};
use nichols_core::suites::{run_suite, Suite};
use nichols_core::{AlgebraError, CycNum, Field};

fn err(e: AlgebraError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Exact element of Q(ζ) with ζ = exp(iπ/(2p)).
#[pyclass(name = "Scalar", module = "nichols", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyScalar(CycNum);

impl PyScalar {
    fn same_field(&self, other: &PyScalar) -> PyResult<()> {
        if self.0.field().p() == other.0.field().p() {
            Ok(())
        } else {
            Err(PyValueError::new_err("scalars live in different fields"))
        }
    }
}

#[pymethods]
impl PyScalar {
    #[getter]
    fn p(&self) -> u32 {
        self.0.field().p()
    }

    /// Rational coefficients of 1, ζ, ζ², … as strings.
    fn coeffs(&self) -> Vec<String> {
        self.0.coeff_strings()
    }

    fn to_complex(&self) -> (f64, f64) {
        self.0.to_complex()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __add__(&self, other: &PyScalar) -> PyResult<PyScalar> {
        self.same_field(other)?;
        Ok(PyScalar(&self.0 + &other.0))
    }

    fn __sub__(&self, other: &PyScalar) -> PyResult<PyScalar> {
        self.same_field(other)?;
        Ok(PyScalar(&self.0 - &other.0))
    }

    fn __mul__(&self, other: &PyScalar) -> PyResult<PyScalar> {
        self.same_field(other)?;
        Ok(PyScalar(&self.0 * &other.0))
    }

    fn __truediv__(&self, other: &PyScalar) -> PyResult<PyScalar> {
        self.same_field(other)?;
        self.0.div(&other.0).map(PyScalar).map_err(|e| PyZeroDivisionError::new_err(e.to_string()))
    }

    fn __neg__(&self) -> PyScalar {
        PyScalar(-&self.0)
    }

    fn __pow__(&self, e: u32, _modulo: Option<u32>) -> PyScalar {
        PyScalar(self.0.pow(e))
    }

    fn __eq__(&self, other: &PyScalar) -> bool {
        self.0.field().p() == other.0.field().p() && self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Scalar(p={}, {})", self.0.field().p(), self.0)
    }
}

/// The field Q(ζ_{4p}) with q = ζ².
#[pyclass(name = "Field", module = "nichols", frozen, skip_from_py_object)]
struct PyField(Field);

#[pymethods]
impl PyField {
    #[new]
    fn new(p: u32) -> PyResult<Self> {
        Field::new(p).map(PyField).map_err(err)
    }

    #[getter]
    fn p(&self) -> u32 {
        self.0.p()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn integer(&self, n: i64) -> PyScalar {
        PyScalar(self.0.from_int(n))
    }

    fn zeta_pow(&self, k: i64) -> PyScalar {
        PyScalar(self.0.zeta_pow(k))
    }

    fn q_pow(&self, k: i64) -> PyScalar {
        PyScalar(self.0.q_pow(k))
    }

    fn xi(&self) -> PyScalar {
        PyScalar(self.0.xi())
    }

    fn q_int(&self, r: i64) -> PyScalar {
        PyScalar(self.0.q_int(r))
    }

    fn q_binom(&self, n: i64, k: i64) -> PyScalar {
        PyScalar(self.0.q_binom(n, k))
    }

    fn __repr__(&self) -> String {
        format!("Field(p={})", self.0.p())
    }
}

/// Indecomposable label: kind in X, S, V, L, B, P, length r, sector ν mod 4.
#[pyclass(name = "Module", module = "nichols", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
struct PyModule_ {
    kind: String,
    r: u32,
    nu: u8,
    dim: u32,
}

impl PyModule_ {
    fn of(d: &ModuleDescriptor, p: u32) -> Self {
        PyModule_ { kind: d.kind.to_string(), r: d.r, nu: d.nu(), dim: d.dim(p) }
    }
}

#[pymethods]
impl PyModule_ {
    fn __eq__(&self, other: &PyModule_) -> bool {
        (&self.kind, self.r, self.nu) == (&other.kind, other.r, other.nu)
    }

    fn __repr__(&self) -> String {
        format!("Module({}, r={}, nu={})", self.kind, self.r, self.nu)
    }
}

/// Classifies the submodule generated by the coinvariant with charges a, b and t crosses.
#[pyfunction]
fn classify(a: i64, b: i64, t: i64, p: u32) -> PyResult<PyModule_> {
    classify_coinvariant(a, b, t, p).map(|d| PyModule_::of(&d, p)).map_err(err)
}

/// Summands of X(r1)_{nu1} ⊗ X(r2)_{nu2}, by the closed rule or by brute force.
#[pyfunction]
#[pyo3(signature = (r1, nu1, r2, nu2, p, brute = false))]
fn fuse(r1: u32, nu1: i64, r2: u32, nu2: i64, p: u32, brute: bool) -> PyResult<Vec<PyModule_>> {
    let res = if brute { fuse_brute(r1, nu1, r2, nu2, p) } else { fuse_closed(r1, nu1, r2, nu2, p) };
    res.map(|f| f.summands.iter().map(|d| PyModule_::of(d, p)).collect()).map_err(err)
}

/// Multiplicities `{(kind, r): count}` and the total dimension of the 1- or 2-vertex space.
#[pyfunction]
fn decompose(vertices: u32, p: u32) -> PyResult<(BTreeMap<(String, u32), u64>, u64)> {
    let d = decompose_space(vertices, p).map_err(err)?;
    let m = d.multiplicities.iter().map(|&(k, r, c)| ((k.to_string(), r), c)).collect();
    Ok((m, d.total_dim))
}

/// Eigenvalue of the loop around X(r1)_{nu1} on X(r)_{nu}.
#[pyfunction]
fn loop_lambda(r1: u32, nu1: i64, r: u32, nu: i64, p: u32) -> PyResult<PyScalar> {
    lambda_closed(r1, nu1, r, nu, p).map(PyScalar).map_err(err)
}

/// Top-to-bottom coefficient of the loop on P[r]_{nu}; `printed=True` gives the uncorrected form.
#[pyfunction]
#[pyo3(signature = (r1, nu1, r, nu, p, printed = false))]
fn loop_mu(r1: u32, nu1: i64, r: u32, nu: i64, p: u32, printed: bool) -> PyResult<PyScalar> {
    let f = if printed { mu_closed } else { mu_uv_basis };
    f(r1, nu1, r, nu, p).map(PyScalar).map_err(err)
}

/// Integer combination of the simple classes 𝔛(r)_ν, ν mod 2.
#[pyclass(name = "RingElt", module = "nichols", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyRingElt(RingElt);

impl PyRingElt {
    fn check(&self, other: &PyRingElt) -> PyResult<()> {
        if self.0.p == other.0.p {
            Ok(())
        } else {
            Err(PyValueError::new_err("ring elements for different p"))
        }
    }
}

fn check_r(p: u32, r: u32) -> PyResult<()> {
    if (1..=p).contains(&r) {
        Ok(())
    } else {
        Err(PyValueError::new_err(format!("r must lie in 1..={p}")))
    }
}

#[pymethods]
impl PyRingElt {
    #[staticmethod]
    fn simple(p: u32, r: u32, nu: i64) -> PyResult<Self> {
        check_r(p, r)?;
        Ok(PyRingElt(RingElt::simple(p, r, nu)))
    }

    #[staticmethod]
    fn projective(p: u32, r: u32, nu: i64) -> PyResult<Self> {
        check_r(p, r)?;
        Ok(PyRingElt(RingElt::projective(p, r, nu)))
    }

    #[staticmethod]
    fn unit(p: u32) -> Self {
        PyRingElt(RingElt::unit(p))
    }

    /// `{(r, nu mod 2): coefficient}`.
    fn coeffs(&self) -> BTreeMap<(u32, u8), i64> {
        self.0.coeffs.clone()
    }

    fn __add__(&self, other: &PyRingElt) -> PyResult<Self> {
        self.check(other)?;
        Ok(PyRingElt(self.0.add(&other.0)))
    }

    fn __mul__(&self, other: &PyRingElt) -> PyResult<Self> {
        self.check(other)?;
        Ok(PyRingElt(ring_multiply(&self.0, &other.0)))
    }

    fn __eq__(&self, other: &PyRingElt) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        self.0.to_string()
    }
}

/// Runs a verification suite; returns `[(check, total, failed, first failures)]`.
#[pyfunction]
fn verify(suite: &str, p: u32) -> PyResult<Vec<(String, usize, usize, Vec<String>)>> {
    let s = Suite::All
        .expand()
        .into_iter()
        .chain([Suite::All])
        .find(|s| s.name() == suite)
        .ok_or_else(|| PyValueError::new_err(format!("unknown suite {suite:?}")))?;
    Ok(run_suite(s, p).into_iter().map(|r| (r.name, r.total, r.failed, r.failures)).collect())
}

/// Runs the command-line interface with `args` (without the program name); returns the exit code.
#[pyfunction]
fn cli(args: Vec<String>) -> i32 {
    nichols_core::cli::run(std::iter::once("nichols".to_string()).chain(args))
}

#[pymodule]
pub fn nichols(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyScalar>()?;
    m.add_class::<PyField>()?;
    m.add_class::<PyModule_>()?;
    m.add_class::<PyRingElt>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(fuse, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(loop_lambda, m)?)?;
    m.add_function(wrap_pyfunction!(loop_mu, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(cli, m)?)?;
    Ok(())
}
