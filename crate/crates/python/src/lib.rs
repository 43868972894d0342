//! Python bindings. Exact numbers cross the boundary as strings (`"-3/2"`);
//! structured results are returned as native Python objects decoded from the
//! library's JSON encoding.

use std::str::FromStr;

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyAny;

use spinor_s3::exactnum::{Axis, Rational as RationalCore, RationalQuaternion};
use spinor_s3::geometry::{self, QuadratureSpec};
use spinor_s3::polyring::{Polynomial as PolyCore, SpinorSection as SectionCore, View};
use spinor_s3::transfer::LoweringOperator;
use spinor_s3::{cli, dirac, repspace, transfer};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Accepts an int or a string like `"3/4"`.
fn rational(obj: &Bound<'_, PyAny>) -> PyResult<RationalCore> {
    RationalCore::from_str(&obj.str()?.to_string()).map_err(value_error)
}

fn axis(i: usize) -> PyResult<Axis> {
    Axis::new(i).map_err(value_error)
}

fn from_json<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(value_error)?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(
    name = "Quaternion",
    module = "spinor_s3",
    eq,
    frozen,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct Quaternion(RationalQuaternion);

#[pymethods]
impl Quaternion {
    #[new]
    fn new(
        c0: &Bound<'_, PyAny>,
        c1: &Bound<'_, PyAny>,
        c2: &Bound<'_, PyAny>,
        c3: &Bound<'_, PyAny>,
    ) -> PyResult<Self> {
        Ok(Quaternion(RationalQuaternion::new(
            rational(c0)?,
            rational(c1)?,
            rational(c2)?,
            rational(c3)?,
        )))
    }

    #[staticmethod]
    fn basis(i: usize) -> PyResult<Self> {
        if i > 3 {
            return Err(value_error(format!("basis index {i} is not in 0..=3")));
        }
        Ok(Quaternion(RationalQuaternion::basis(i)))
    }

    fn components(&self) -> Vec<String> {
        self.0.c.iter().map(ToString::to_string).collect()
    }

    fn __mul__(&self, other: &Quaternion) -> Self {
        Quaternion(self.0.multiply(&other.0))
    }

    fn conj(&self) -> Self {
        Quaternion(self.0.conj())
    }

    fn norm(&self) -> String {
        self.0.norm().to_string()
    }

    /// `(f, g)` with `q = f + g e2`, each a `(re, im)` pair of strings.
    fn complex_split(&self) -> ((String, String), (String, String)) {
        let (f, g) = self.0.complex_split();
        (
            (f.re.to_string(), f.im.to_string()),
            (g.re.to_string(), g.im.to_string()),
        )
    }

    /// Clifford action of `e_i`, `i` in 1..=3.
    fn clifford_multiply(&self, i: usize) -> PyResult<Self> {
        Ok(Quaternion(self.0.clifford_multiply(axis(i)?)))
    }

    fn __repr__(&self) -> String {
        format!("Quaternion({})", self.components().join(", "))
    }
}

#[pyclass(
    name = "Polynomial",
    module = "spinor_s3",
    eq,
    frozen,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct Polynomial(PolyCore);

#[pymethods]
impl Polynomial {
    #[staticmethod]
    fn g2() -> Self {
        Polynomial(PolyCore::g2())
    }

    #[staticmethod]
    fn g2_bar() -> Self {
        Polynomial(PolyCore::g2_bar())
    }

    #[staticmethod]
    fn g_minus1() -> Self {
        Polynomial(PolyCore::g_minus1())
    }

    #[staticmethod]
    fn g1_bar() -> Self {
        Polynomial(PolyCore::g1_bar())
    }

    #[staticmethod]
    fn z1() -> Self {
        Polynomial(PolyCore::z1())
    }

    #[staticmethod]
    fn z2() -> Self {
        Polynomial(PolyCore::z2())
    }

    #[staticmethod]
    fn x(i: usize) -> PyResult<Self> {
        if i > 3 {
            return Err(value_error(format!("coordinate index {i} is not in 0..=3")));
        }
        Ok(Polynomial(PolyCore::x(i)))
    }

    #[staticmethod]
    fn constant(c: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Polynomial(PolyCore::constant(View::Z, rational(c)?.into())))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text)
            .map(Polynomial)
            .map_err(value_error)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(value_error)
    }

    fn __add__(&self, other: &Polynomial) -> Self {
        Polynomial(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Polynomial) -> Self {
        Polynomial(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Polynomial) -> Self {
        Polynomial(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        Polynomial(-&self.0)
    }

    fn __pow__(&self, exp: u32, modulo: Option<u32>) -> PyResult<Self> {
        if modulo.is_some() {
            return Err(value_error("modular powers are not supported"));
        }
        Ok(Polynomial(self.0.pow(exp)))
    }

    fn scale(&self, c: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Polynomial(self.0.scale_rational(&rational(c)?)))
    }

    /// `"x"` or `"z"`.
    fn view(&self) -> &'static str {
        match self.0.view() {
            View::X => "x",
            View::Z => "z",
        }
    }

    fn in_view(&self, view: &str) -> PyResult<Self> {
        let v = match view {
            "x" => View::X,
            "z" => View::Z,
            other => return Err(value_error(format!("unknown view {other:?}"))),
        };
        Ok(Polynomial(self.0.change_view(v)))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn degree(&self) -> Option<u32> {
        self.0.homogeneous_degree()
    }

    fn laplacian(&self) -> Self {
        Polynomial(self.0.laplacian_r4())
    }

    fn is_harmonic(&self) -> bool {
        self.0.is_harmonic()
    }

    fn conj(&self) -> Self {
        Polynomial(self.0.conj())
    }

    fn evaluate(&self, z1: Complex64, z2: Complex64) -> Complex64 {
        self.0.evaluate_complex(z1, z2)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({})", self.0)
    }
}

#[pyclass(
    name = "SpinorSection",
    module = "spinor_s3",
    eq,
    frozen,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct SpinorSection(SectionCore);

#[pymethods]
impl SpinorSection {
    #[new]
    fn new(k: u32, f: &Polynomial, g: &Polynomial) -> Self {
        SpinorSection(SectionCore::new(k, f.0.clone(), g.0.clone()))
    }

    #[getter]
    fn k(&self) -> u32 {
        self.0.k
    }

    #[getter]
    fn f(&self) -> Polynomial {
        Polynomial(self.0.f.clone())
    }

    #[getter]
    fn g(&self) -> Polynomial {
        Polynomial(self.0.g.clone())
    }

    fn dirac(&self) -> Self {
        SpinorSection(geometry::dirac_section(&self.0))
    }

    fn laplace(&self) -> Self {
        SpinorSection(geometry::laplace_section(&self.0))
    }

    fn scale(&self, c: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(SpinorSection(self.0.scale_rational(&rational(c)?)))
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!(
            "SpinorSection(k={}, f={}, g={})",
            self.0.k, self.0.f, self.0.g
        )
    }
}

/// Rows `(k, eigenvalue, multiplicity)` for `k = 0..=k_max`.
#[pyfunction]
fn spectrum_table(k_max: usize) -> Vec<(usize, String, usize)> {
    dirac::spectrum_table(k_max)
        .into_iter()
        .map(|r| (r.k, r.eigenvalue.to_string(), r.multiplicity))
        .collect()
}

/// Same rows obtained by exact diagonalization of the block matrices.
#[pyfunction]
fn spectrum_brute_force(k: usize) -> Option<Vec<(usize, String, usize)>> {
    dirac::spectrum_from_blocks(k).map(|rows| {
        rows.into_iter()
            .map(|r| (r.k, r.eigenvalue.to_string(), r.multiplicity))
            .collect()
    })
}

#[pyfunction]
fn casimir_is_scalar(k: usize) -> bool {
    let v = (k * (k + 2)) as i64;
    repspace::casimir(k).is_scalar(&v.into())
}

#[pyfunction]
fn commutators_hold(k: usize) -> bool {
    repspace::commutators_hold(k)
}

#[pyfunction]
fn quadratic_check(k: usize) -> bool {
    dirac::quadratic_check(k)
}

/// The two eigenvector families on `H (x) (H_k (x) H_k)` as decoded JSON.
#[pyfunction]
fn eigenbasis_abstract(py: Python<'_>, k: usize) -> PyResult<Bound<'_, PyAny>> {
    let (plus, minus) = dirac::eigenbasis_abstract(k);
    from_json(py, &(plus, minus))
}

#[pyfunction]
fn iso_closed_form(k: usize, p: usize, q: usize) -> PyResult<Polynomial> {
    transfer::iso_closed_form(k, p, q)
        .map(|im| Polynomial(im.poly))
        .map_err(value_error)
}

#[pyfunction]
fn iso_recursive(k: usize, p: usize, q: usize) -> PyResult<Polynomial> {
    transfer::iso_recursive(k, p, q)
        .map(|im| Polynomial(im.poly))
        .map_err(value_error)
}

/// `side` is `"left"` or `"right"`.
#[pyfunction]
fn beta_lower(side: &str, poly: &Polynomial) -> PyResult<Polynomial> {
    let op = match side {
        "left" => LoweringOperator::Left,
        "right" => LoweringOperator::Right,
        other => {
            return Err(value_error(format!(
                "side must be 'left' or 'right', got {other:?}"
            )))
        }
    };
    Ok(Polynomial(op.apply(&poly.0)))
}

/// `(family, p, q, eigenvalue, section)` tuples ordered by family, `q`, `p`.
#[pyfunction]
fn transfer_eigenbasis(k: usize) -> Vec<(String, usize, usize, String, SpinorSection)> {
    transfer::transfer_eigenbasis(k)
        .into_iter()
        .map(|v| {
            (
                v.family.to_string(),
                v.p,
                v.q,
                v.eigenvalue.to_string(),
                SpinorSection(v.section),
            )
        })
        .collect()
}

/// Exact integral as `(re, im)` strings in units of `2 pi^2`.
#[pyfunction]
fn monomial_integral(l1: u32, l2: u32, l3: u32, l4: u32) -> (String, String) {
    let v = geometry::monomial_integral([l1, l2, l3, l4]).coefficient;
    (v.re.to_string(), v.im.to_string())
}

#[pyfunction]
fn l2_inner_product(a: &Polynomial, b: &Polynomial) -> (String, String) {
    let v = geometry::l2_inner_product(&a.0, &b.0).coefficient;
    (v.re.to_string(), v.im.to_string())
}

/// `spec` is a JSON string such as `{"rule":"tensor","n_angular":9,"n_radial":5}`.
/// Returns `(value, standard_error_or_None)`.
#[pyfunction]
fn eta_quadrature(poly: &Polynomial, spec: &str) -> PyResult<(Complex64, Option<f64>)> {
    let spec: QuadratureSpec = serde_json::from_str(spec).map_err(value_error)?;
    let est = geometry::eta_quadrature(&poly.0, &spec).map_err(value_error)?;
    Ok((est.value, est.std_error))
}

/// Exact Gram matrix entries `(re, im)` in units of `2 pi^2`.
#[pyfunction]
fn gram_matrix(k: usize) -> Vec<Vec<(String, String)>> {
    geometry::gram_matrix(k)
        .to_rows()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|c| (c.re.to_string(), c.im.to_string()))
                .collect()
        })
        .collect()
}

/// Runs the command-line interface in-process: `(exit_code, stdout, stderr)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(
        std::iter::once("spinor-s3".to_string()).chain(args),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}

#[pymodule]
#[pyo3(name = "spinor_s3")]
pub fn python_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Quaternion>()?;
    m.add_class::<Polynomial>()?;
    m.add_class::<SpinorSection>()?;
    m.add_function(wrap_pyfunction!(spectrum_table, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum_brute_force, m)?)?;
    m.add_function(wrap_pyfunction!(casimir_is_scalar, m)?)?;
    m.add_function(wrap_pyfunction!(commutators_hold, m)?)?;
    m.add_function(wrap_pyfunction!(quadratic_check, m)?)?;
    m.add_function(wrap_pyfunction!(eigenbasis_abstract, m)?)?;
    m.add_function(wrap_pyfunction!(iso_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(iso_recursive, m)?)?;
    m.add_function(wrap_pyfunction!(beta_lower, m)?)?;
    m.add_function(wrap_pyfunction!(transfer_eigenbasis, m)?)?;
    m.add_function(wrap_pyfunction!(monomial_integral, m)?)?;
    m.add_function(wrap_pyfunction!(l2_inner_product, m)?)?;
    m.add_function(wrap_pyfunction!(eta_quadrature, m)?)?;
    m.add_function(wrap_pyfunction!(gram_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
