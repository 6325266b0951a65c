//! Python bindings: `pydyh.YokonumaAlgebra`, `pydyh.Element` and a few
//! module-level helpers. Elements and images cross the boundary either as
//! `Element` objects or as the JSON documents used by the command-line tool.

use std::sync::Arc;

use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;

use dyh::combinatorics::{Character, Permutation};
use dyh::element::Element as CoreElement;
use dyh::error::Error;
use dyh::hecke::{HAlgebra, HMonomial};
use dyh::io;
use dyh::iso::Isomorphism;
use dyh::representation::builtin_simple_modules;
use dyh::rewrite::Variant;
use dyh::scalar::{parse_rational, Rational};
use dyh::structure::{self, gram_matrix};
use dyh::verify::{self, Scope};
use dyh::yokonuma::{YAlgebra, YElement, YMonomial, YParams};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::DimensionBound { .. } => PyOverflowError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn parse_params(v: Vec<String>) -> PyResult<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s).map_err(py_err)).collect()
}

fn to_json_string(v: &serde_json::Value) -> String {
    serde_json::to_string(v).expect("JSON values serialize")
}

fn from_json_string(s: &str) -> PyResult<serde_json::Value> {
    serde_json::from_str(s).map_err(|e| PyValueError::new_err(format!("malformed JSON: {e}")))
}

/// A degenerate cyclotomic Yokonuma-Hecke algebra with rational parameters.
///
/// `v` lists the cyclotomic parameters as strings such as `"1/2"` or ints.
#[pyclass(frozen, module = "pydyh")]
pub struct YokonumaAlgebra {
    iso: Arc<Isomorphism>,
}

impl YokonumaAlgebra {
    fn y(&self) -> &YAlgebra {
        self.iso.yokonuma()
    }

    fn wrap(&self, e: YElement) -> Element {
        Element {
            iso: self.iso.clone(),
            inner: e,
        }
    }
}

#[pymethods]
impl YokonumaAlgebra {
    #[new]
    fn new(r: usize, n: usize, v: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        let v: Vec<String> = v.iter().map(|x| x.str().map(|s| s.to_string())).collect::<PyResult<_>>()?;
        let y = YAlgebra::new(YParams::cyclotomic(r, n, parse_params(v)?)).map_err(py_err)?;
        Ok(YokonumaAlgebra {
            iso: Arc::new(Isomorphism::new(y).map_err(py_err)?),
        })
    }

    #[getter]
    fn r(&self) -> usize {
        self.y().r()
    }

    #[getter]
    fn n(&self) -> usize {
        self.y().n()
    }

    #[getter]
    fn level(&self) -> Option<usize> {
        self.y().level()
    }

    #[getter]
    fn parameters(&self) -> Vec<String> {
        self.y().params().variant.parameters().iter().map(|q| q.to_string()).collect()
    }

    fn dimension(&self) -> PyResult<usize> {
        self.y().dimension().map_err(py_err)
    }

    fn one(&self) -> Element {
        self.wrap(self.y().one())
    }

    /// `E_χ` for a character given as values in `1..=r`.
    fn idempotent(&self, chi: Vec<usize>) -> PyResult<Element> {
        Ok(self.wrap(self.y().idempotent(&Character::new(chi)).map_err(py_err)?))
    }

    /// Generators; strand indices are 0-based.
    fn x(&self, j: usize) -> PyResult<Element> {
        self.check_strand(j, 0)?;
        Ok(self.wrap(self.y().x(j)))
    }

    fn f(&self, i: usize) -> PyResult<Element> {
        self.check_strand(i, 1)?;
        Ok(self.wrap(self.y().f(i)))
    }

    fn t(&self, j: usize) -> PyResult<Element> {
        self.check_strand(j, 0)?;
        Ok(self.wrap(self.y().t(j)))
    }

    fn e(&self, i: usize) -> PyResult<Element> {
        self.check_strand(i, 1)?;
        Ok(self.wrap(self.y().e(i)))
    }

    /// `E_χ x^α f_w` with `w` in 1-based one-line notation.
    fn basis_element(&self, chi: Vec<usize>, x: Vec<u32>, w: Vec<usize>) -> PyResult<Element> {
        let w = Permutation::from_one_line(&w).map_err(py_err)?;
        let m = YMonomial::new(Character::new(chi), x, w);
        Ok(self.wrap(self.y().basis_element(&m).map_err(py_err)?))
    }

    /// Parses an element document (idempotent or `t` terms).
    fn element_from_json(&self, doc: &str) -> PyResult<Element> {
        let doc = from_json_string(doc)?;
        if io::read_params(&doc).map_err(py_err)? != *self.y().params() {
            return Err(PyValueError::new_err("document parameters differ from this algebra"));
        }
        Ok(self.wrap(io::read_y_element(self.y(), &doc).map_err(py_err)?))
    }

    fn multiply(&self, a: &Element, b: &Element) -> PyResult<Element> {
        a.mul(b)
    }

    fn form_tau_hat(&self, a: &Element) -> PyResult<String> {
        Ok(self.y().form_tau_hat(&a.inner).map_err(py_err)?.to_string())
    }

    fn form_rho_hat_n(&self, a: &Element) -> PyResult<String> {
        Ok(self.y().form_rho_hat_n(&a.inner).map_err(py_err)?.to_string())
    }

    fn form_rho_n(&self, a: &Element) -> PyResult<String> {
        Ok(structure::form_rho_n(&self.iso, &a.inner).map_err(py_err)?.to_string())
    }

    /// Image in the direct sum of matrix algebras, as a JSON document.
    fn phi(&self, a: &Element) -> PyResult<String> {
        let img = self.iso.phi_full(&a.inner).map_err(py_err)?;
        Ok(to_json_string(&io::full_image_to_json(self.y().params(), &img)))
    }

    fn psi(&self, image: &str) -> PyResult<Element> {
        let doc = from_json_string(image)?;
        let img = io::read_full_image(&self.iso, &doc).map_err(py_err)?;
        Ok(self.wrap(self.iso.psi_full(&img).map_err(py_err)?))
    }

    /// Runs the homomorphism, bijection and exponent-exchange sweeps and
    /// returns `(passed, summary_json)`.
    #[pyo3(signature = (samples=None, seed=None))]
    fn verify_isomorphism(&self, samples: Option<usize>, seed: Option<u64>) -> PyResult<(bool, String)> {
        let scope = match (samples, seed) {
            (None, _) => Scope::Exhaustive,
            (Some(count), Some(seed)) => Scope::Sampled { count, seed },
            (Some(_), None) => return Err(PyValueError::new_err("sampling requires a seed")),
        };
        let sweeps = [
            verify::homomorphism(&self.iso, scope).map_err(py_err)?,
            verify::bijection(&self.iso).map_err(py_err)?,
            verify::crucial_equality(self.y()).map_err(py_err)?,
        ];
        let summary: Vec<_> = sweeps.iter().map(verify::Sweep::summary).collect();
        Ok((
            sweeps.iter().all(verify::Sweep::passed),
            to_json_string(&serde_json::Value::Array(summary)),
        ))
    }

    fn is_semisimple(&self) -> PyResult<bool> {
        structure::semisimplicity_criterion(self.y().params()).map_err(py_err)
    }

    /// Semisimplicity decided from the regular trace form.
    #[pyo3(signature = (max_dim=128))]
    fn radical_is_zero(&self, max_dim: usize) -> PyResult<bool> {
        structure::radical_oracle(self.y(), max_dim).map_err(py_err)
    }

    /// Determinant of the Gram matrix of `"tau"`, `"rho-hat-n"` or `"rho-n"`.
    #[pyo3(signature = (form, max_dim=256))]
    fn gram_determinant(&self, form: &str, max_dim: usize) -> PyResult<String> {
        let y = self.y();
        let dim = y.dimension().map_err(py_err)?;
        if dim > max_dim {
            return Err(py_err(Error::DimensionBound { dim, bound: max_dim }));
        }
        let basis = y.enumerate_basis(None).map_err(py_err)?;
        let g = match form {
            "tau" => gram_matrix(y, basis, &|e: &YElement| y.form_tau_hat(e), form),
            "rho-hat-n" => gram_matrix(y, basis, &|e: &YElement| y.form_rho_hat_n(e), form),
            "rho-n" => gram_matrix(y, basis, &|e: &YElement| structure::form_rho_n(&self.iso, e), form),
            other => return Err(PyValueError::new_err(format!("unknown form {other:?}"))),
        }
        .map_err(py_err)?;
        Ok(g.determinant().map_err(py_err)?.to_string())
    }

    /// The Schur-element table as JSON.
    fn schur_table(&self) -> PyResult<String> {
        let rows = structure::schur_table(&self.iso).map_err(py_err)?;
        Ok(serde_json::to_string(&rows).expect("rows serialize"))
    }

    fn __repr__(&self) -> String {
        format!(
            "YokonumaAlgebra(r={}, n={}, v={:?})",
            self.r(),
            self.n(),
            self.parameters()
        )
    }
}

impl YokonumaAlgebra {
    fn check_strand(&self, j: usize, reserve: usize) -> PyResult<()> {
        if j + reserve >= self.n() {
            return Err(PyValueError::new_err(format!("index {j} out of range for n = {}", self.n())));
        }
        Ok(())
    }
}

type Term = (String, Vec<usize>, Vec<u32>, Vec<usize>);

/// An element of a `YokonumaAlgebra`, kept in normal form.
#[pyclass(frozen, module = "pydyh")]
pub struct Element {
    iso: Arc<Isomorphism>,
    inner: YElement,
}

impl Element {
    fn same_algebra(&self, other: &Element) -> PyResult<()> {
        if self.iso.yokonuma().params() != other.iso.yokonuma().params() {
            return Err(PyValueError::new_err("elements belong to different algebras"));
        }
        Ok(())
    }

    fn with(&self, inner: YElement) -> Element {
        Element {
            iso: self.iso.clone(),
            inner,
        }
    }
}

#[pymethods]
impl Element {
    fn __add__(&self, other: &Element) -> PyResult<Element> {
        self.same_algebra(other)?;
        let mut out = self.inner.clone();
        out.add_assign(&other.inner);
        Ok(self.with(out))
    }

    fn __sub__(&self, other: &Element) -> PyResult<Element> {
        self.same_algebra(other)?;
        let mut out = self.inner.clone();
        out.sub_assign(&other.inner);
        Ok(self.with(out))
    }

    fn __mul__(&self, other: &Element) -> PyResult<Element> {
        self.mul(other)
    }

    fn __neg__(&self) -> Element {
        let y = self.iso.yokonuma();
        self.with(self.inner.scaled(&y.scalar(-1)))
    }

    /// Multiplies by a rational scalar given as a string or int.
    fn scale(&self, c: Bound<'_, PyAny>) -> PyResult<Element> {
        let q = parse_rational(&c.str()?.to_string()).map_err(py_err)?;
        let y = self.iso.yokonuma();
        Ok(self.with(self.inner.scaled(&dyh::scalar::CycScalar::from_rational(y.field(), q))))
    }

    fn __eq__(&self, other: &Element) -> bool {
        self.iso.yokonuma().params() == other.iso.yokonuma().params() && self.inner == other.inner
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// `(coefficient, chi, x, w)` tuples; coefficients are strings and `w`
    /// is in 1-based one-line notation.
    fn terms(&self) -> Vec<Term> {
        self.inner
            .iter()
            .map(|(m, c)| (c.to_string(), m.chi.values.clone(), m.x.clone(), m.w.one_line()))
            .collect()
    }

    fn to_json(&self) -> String {
        to_json_string(&io::y_element_to_json(self.iso.yokonuma().params(), &self.inner))
    }

    /// The same element in the `t`-presentation, as JSON.
    fn to_t_json(&self) -> String {
        let y = self.iso.yokonuma();
        to_json_string(&io::t_element_to_json(y.params(), &y.to_t(&self.inner)))
    }

    fn __repr__(&self) -> String {
        if self.inner.is_zero() {
            return "0".into();
        }
        self.inner
            .iter()
            .map(|(m, c)| format!("({c})*E{:?}x{:?}f{:?}", m.chi.values, m.x, m.w.one_line()))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Element {
    fn mul(&self, other: &Element) -> PyResult<Element> {
        self.same_algebra(other)?;
        Ok(self.with(self.iso.yokonuma().multiply(&self.inner, &other.inner).map_err(py_err)?))
    }
}

/// Both sides of the block dimension identity, as integers.
#[pyfunction]
fn dimension_identity(r: usize, n: usize, d: usize) -> (u128, u128) {
    structure::dimension_identity_sides(r, n, d)
}

/// Schur elements of the built-in simple modules of `H_n^d` (n ≤ 2) with
/// respect to its symmetrizing trace.
#[pyfunction]
fn hecke_schur_elements(n: usize, v: Vec<Bound<'_, PyAny>>) -> PyResult<Vec<String>> {
    let v: Vec<String> = v.iter().map(|x| x.str().map(|s| s.to_string())).collect::<PyResult<_>>()?;
    let h = HAlgebra::single(n, Variant::cyclotomic(parse_params(v)?).map_err(py_err)?).map_err(py_err)?;
    let tau = |e: &CoreElement<HMonomial>| h.form_tau_n(e);
    let g = gram_matrix(&h, h.enumerate_basis(None).map_err(py_err)?, &tau, "tau").map_err(py_err)?;
    builtin_simple_modules(&h)
        .map_err(py_err)?
        .iter()
        .map(|m| structure::schur_element(&g, &m.rep).map(|s| s.to_string()).map_err(py_err))
        .collect()
}

#[pymodule]
fn pydyh(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<YokonumaAlgebra>()?;
    m.add_class::<Element>()?;
    m.add_function(wrap_pyfunction!(dimension_identity, m)?)?;
    m.add_function(wrap_pyfunction!(hecke_schur_elements, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
