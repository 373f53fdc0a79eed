//! Python bindings. Elements, maps and matrices cross the boundary as strings
//! in the polynomial grammar.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use nbhd::algebra::{parse_presentation, AlgebraMap, FpAlgebra, Strategy};
use nbhd::neighbour::{
    affine_combination_rows, decompose_difference as decompose, extend_matrix as extend, in_dtilde as dtilde, is_neighbour as neighbour,
    is_simplex as simplex, matrix_domain, CoefficientVector, SimplexMatrix,
};
use nbhd::verify::{emit_report, run_suite as suite, SuiteConfig};
use nbhd::{parse_poly, MonomialOrder, RingSpec, VarSet};

fn err(e: nbhd::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A finitely presented commutative algebra.
#[pyclass(name = "Algebra", module = "pynbhd", frozen)]
struct PyAlgebra {
    inner: FpAlgebra,
}

#[pymethods]
impl PyAlgebra {
    /// `strategy` is "monomial" or "groebner"; by default monomial relations use
    /// deletion and anything else Groebner bases.
    #[new]
    #[pyo3(signature = (ring, vars, relations = Vec::new(), strategy = None))]
    fn new(ring: &str, vars: Vec<String>, relations: Vec<String>, strategy: Option<&str>) -> PyResult<Self> {
        let ring: RingSpec = ring.parse().map_err(err)?;
        let names: Vec<&str> = vars.iter().map(String::as_str).collect();
        let rels: Vec<&str> = relations.iter().map(String::as_str).collect();
        let vs = VarSet::new(names.iter().copied()).map_err(err)?;
        let monomial = rels
            .iter()
            .map(|r| parse_poly(r, &vs, ring).map(|p| p.as_monomial().is_some()))
            .collect::<nbhd::Result<Vec<bool>>>()
            .map_err(err)?
            .into_iter()
            .all(|m| m);
        let strategy = match strategy {
            Some("monomial") => Strategy::MonomialDeletion,
            Some("groebner") => Strategy::Groebner(MonomialOrder::DegRevLex),
            Some(other) => return Err(PyValueError::new_err(format!("unknown strategy `{other}`"))),
            None if monomial => Strategy::MonomialDeletion,
            None => Strategy::Groebner(MonomialOrder::DegRevLex),
        };
        let inner = FpAlgebra::presented(ring, &names, &rels, strategy).map_err(err)?;
        Ok(PyAlgebra { inner })
    }

    /// Parses the presentation file format.
    #[staticmethod]
    fn from_presentation(text: &str) -> PyResult<Self> {
        Ok(PyAlgebra { inner: parse_presentation(text).map_err(err)? })
    }

    fn normal_form(&self, poly: &str) -> PyResult<String> {
        Ok(self.inner.parse(poly).map_err(err)?.to_string())
    }

    #[getter]
    fn ring(&self) -> String {
        self.inner.ring().to_string()
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        self.inner.varset().names().to_vec()
    }

    #[getter]
    fn relations(&self) -> Vec<String> {
        self.inner.relations().generators().iter().map(|p| p.to_string()).collect()
    }

    fn __repr__(&self) -> String {
        format!("Algebra({})", self.inner)
    }
}

fn matrix(c: &PyAlgebra, rows: Vec<Vec<String>>) -> PyResult<SimplexMatrix> {
    let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
    let refs: Vec<&[&str]> = rows.iter().map(Vec::as_slice).collect();
    SimplexMatrix::from_texts(&c.inner, &refs).map_err(err)
}

fn texts(xs: &[String]) -> Vec<&str> {
    xs.iter().map(String::as_str).collect()
}

/// Whether `x ↦ a`, `x ↦ b` are neighbours; returns `(verdict, witness)`.
#[pyfunction]
#[pyo3(signature = (codomain, a, b, domain = None))]
fn is_neighbour(codomain: &PyAlgebra, a: Vec<String>, b: Vec<String>, domain: Option<&PyAlgebra>) -> PyResult<(bool, Option<String>)> {
    let dom = match domain {
        Some(d) => d.inner.clone(),
        None => matrix_domain(codomain.inner.ring(), a.len()),
    };
    let f = AlgebraMap::parse(&dom, &codomain.inner, &texts(&a)).map_err(err)?;
    let g = AlgebraMap::parse(&dom, &codomain.inner, &texts(&b)).map_err(err)?;
    let v = neighbour(&f, &g).map_err(err)?;
    Ok((v.holds(), v.witness.map(|w| w.to_string())))
}

#[pyfunction]
fn is_simplex(codomain: &PyAlgebra, rows: Vec<Vec<String>>) -> PyResult<(bool, Option<String>)> {
    let v = simplex(&matrix(codomain, rows)?);
    Ok((v.holds(), v.witness.map(|w| w.to_string())))
}

#[pyfunction]
fn in_dtilde(codomain: &PyAlgebra, rows: Vec<Vec<String>>) -> PyResult<bool> {
    Ok(dtilde(&matrix(codomain, rows)?).holds())
}

#[pyfunction]
fn affine_combination(codomain: &PyAlgebra, rows: Vec<Vec<String>>, coeffs: Vec<String>) -> PyResult<Vec<String>> {
    let m = matrix(codomain, rows)?;
    let t = CoefficientVector::parse(&codomain.inner, &texts(&coeffs)).map_err(err)?;
    Ok(affine_combination_rows(&m, &t).map_err(err)?.iter().map(|x| x.to_string()).collect())
}

#[pyfunction]
fn extend_matrix(codomain: &PyAlgebra, rows: Vec<Vec<String>>, coeffs: Vec<String>) -> PyResult<Vec<Vec<String>>> {
    let m = matrix(codomain, rows)?;
    let c = coeffs.iter().map(|s| codomain.inner.parse(s)).collect::<nbhd::Result<Vec<_>>>().map_err(err)?;
    let x = extend(&m, &c).map_err(err)?;
    Ok(x.rows().iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect())
}

/// Quotients `Q_i` with `P(Z) - P(Y) = Σ (Z_i - Y_i) Q_i`, in the variables `X_0`, `X_1`.
#[pyfunction]
#[pyo3(signature = (poly, vars, ring = "Q"))]
fn decompose_difference(poly: &str, vars: Vec<String>, ring: &str) -> PyResult<Vec<String>> {
    let ring: RingSpec = ring.parse().map_err(err)?;
    let vs = VarSet::new(vars).map_err(err)?;
    let d = decompose(&parse_poly(poly, &vs, ring).map_err(err)?).map_err(err)?;
    Ok(d.quotients.iter().map(|q| q.to_string()).collect())
}

/// Runs the check suite and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (seed = 0, cases = 200, rings = None, p_max = 2, n_max = 3, degree = 3))]
fn run_suite(py: Python<'_>, seed: u64, cases: usize, rings: Option<Vec<String>>, p_max: usize, n_max: usize, degree: u32) -> PyResult<String> {
    let mut cfg = SuiteConfig::new(seed).with_case_count(cases).and_then(|c| c.with_bounds(p_max, n_max, degree)).map_err(err)?;
    if let Some(rs) = rings {
        let rs = rs.iter().map(|r| r.parse()).collect::<nbhd::Result<Vec<RingSpec>>>().map_err(err)?;
        cfg = cfg.with_rings(&rs).map_err(err)?;
    }
    let report = py.detach(|| suite(&cfg));
    let bytes = emit_report(&report, "json").map_err(err)?;
    Ok(String::from_utf8(bytes).expect("JSON is UTF-8"))
}

#[pymodule]
fn pynbhd(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_function(wrap_pyfunction!(is_neighbour, m)?)?;
    m.add_function(wrap_pyfunction!(is_simplex, m)?)?;
    m.add_function(wrap_pyfunction!(in_dtilde, m)?)?;
    m.add_function(wrap_pyfunction!(affine_combination, m)?)?;
    m.add_function(wrap_pyfunction!(extend_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(decompose_difference, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
