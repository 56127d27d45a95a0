//! Python bindings: the representation builders, algebra checks,
//! decomposition and plane-wave machinery, driven in-process.
//!
//! All matrix entries cross the boundary as canonical rational strings
//! ("0", "i", "-1/2"), so nothing is ever rounded.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use dkp_core::analysis::{commutant, decompose, intertwiner, is_irreducible, unitarize};
use dkp_core::gaussian::{parse_rational, Rational};
use dkp_core::json::{representation_from_str, representation_to_string};
use dkp_core::matrix::Matrix;
use dkp_core::planewave::{
    field_map_check, kg_relations_check, proca_relations_check, solution_space, Momentum,
};
use dkp_core::projectors::{
    build_projectors, verify_orthogonality, verify_r01_scalar, verify_rels_1p1,
    verify_scalar_covariance, verify_vector_covariance, VectorFamily,
};
use dkp_core::report::{CheckStatus, Report};
use dkp_core::reps::{
    build_gamma, build_kronecker_rep, build_scalar_rep, build_vector_rep, builtin_irrep_1p1,
    trivial_rep, verify_clifford, verify_dkp, GammaBasis,
};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn matrix_to_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.at(r, c).to_string()).collect())
        .collect()
}

fn status_str(status: CheckStatus) -> &'static str {
    match status {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "fail",
        CheckStatus::Vacuous => "vacuous",
        CheckStatus::Partial => "partial",
    }
}

fn report_to_py<'py>(py: Python<'py>, report: &Report) -> PyResult<Bound<'py, PyList>> {
    let out = PyList::empty(py);
    for check in &report.checks {
        let d = PyDict::new(py);
        d.set_item("name", &check.name)?;
        d.set_item("status", status_str(check.status))?;
        d.set_item("residual_summary", &check.residual_summary)?;
        d.set_item("details", &check.details)?;
        out.append(d)?;
    }
    Ok(out)
}

fn momentum_from_py(p: Vec<String>, m: &str) -> PyResult<Momentum> {
    let components: Vec<Rational> = p
        .iter()
        .map(|s| parse_rational(s).map_err(value_error))
        .collect::<PyResult<_>>()?;
    let mass = parse_rational(m).map_err(value_error)?;
    Momentum::new(components, mass).map_err(value_error)
}

/// A metric signature plus one exact matrix per spacetime index.
#[pyclass(name = "Representation", from_py_object)]
#[derive(Clone)]
struct PyRepresentation {
    inner: dkp_core::Representation,
}

#[pymethods]
impl PyRepresentation {
    /// The 2x2 gamma matrices in (1+1) dimensions.
    #[staticmethod]
    fn dirac2() -> Self {
        Self {
            inner: build_gamma(GammaBasis::Dirac2),
        }
    }

    /// The standard 4x4 Dirac gamma matrices in (3+1) dimensions.
    #[staticmethod]
    fn dirac4() -> Self {
        Self {
            inner: build_gamma(GammaBasis::Dirac4),
        }
    }

    /// The explicit 3x3 DKP representation in (1+1) dimensions.
    #[staticmethod]
    fn irrep_1p1() -> Self {
        Self {
            inner: builtin_irrep_1p1(),
        }
    }

    /// The one-dimensional representation with all generators zero.
    #[staticmethod]
    fn trivial(d: usize) -> PyResult<Self> {
        Ok(Self {
            inner: trivial_rep(d).map_err(value_error)?,
        })
    }

    /// First-order Klein-Gordon representation, dimension D+1.
    #[staticmethod]
    fn scalar(d: usize) -> PyResult<Self> {
        Ok(Self {
            inner: build_scalar_rep(d).map_err(value_error)?,
        })
    }

    /// First-order Proca representation, dimension D(D+1)/2.
    #[staticmethod]
    fn vector(d: usize) -> PyResult<Self> {
        Ok(Self {
            inner: build_vector_rep(d).map_err(value_error)?,
        })
    }

    /// beta^mu = c (gamma^mu x I + I x gamma^mu), c = 1/2 when
    /// include_half else 1.
    #[staticmethod]
    #[pyo3(signature = (gammas, include_half = true))]
    fn kronecker(gammas: &PyRepresentation, include_half: bool) -> PyResult<Self> {
        Ok(Self {
            inner: build_kronecker_rep(&gammas.inner, include_half).map_err(value_error)?,
        })
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        Ok(Self {
            inner: representation_from_str(s).map_err(value_error)?,
        })
    }

    fn to_json(&self) -> String {
        representation_to_string(&self.inner)
    }

    #[getter]
    fn d(&self) -> usize {
        self.inner.d()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn metric(&self) -> Vec<i8> {
        self.inner.metric().signature().to_vec()
    }

    /// Rows of beta^mu as canonical entry strings.
    fn beta(&self, mu: usize) -> PyResult<Vec<Vec<String>>> {
        if mu >= self.inner.d() {
            return Err(value_error(format!(
                "index {mu} out of range for D={}",
                self.inner.d()
            )));
        }
        Ok(matrix_to_rows(self.inner.beta(mu)))
    }

    /// {"passed": bool, "violations": [(mu, nu, rho), ...]}
    fn verify_dkp<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let report = verify_dkp(&self.inner);
        let d = PyDict::new(py);
        d.set_item("passed", report.passed)?;
        let violations: Vec<Vec<usize>> = report
            .violations
            .iter()
            .map(|v| v.indices.clone())
            .collect();
        d.set_item("violations", violations)?;
        Ok(d)
    }

    /// {"passed": bool, "violations": [(mu, nu), ...]}
    fn verify_clifford<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let report = verify_clifford(&self.inner);
        let d = PyDict::new(py);
        d.set_item("passed", report.passed)?;
        let violations: Vec<Vec<usize>> = report
            .violations
            .iter()
            .map(|v| v.indices.clone())
            .collect();
        d.set_item("violations", violations)?;
        Ok(d)
    }

    fn commutant_dimension(&self) -> usize {
        commutant(&self.inner).dim()
    }

    fn is_irreducible(&self) -> bool {
        is_irreducible(&self.inner).0
    }

    /// {"block_dims": [...], "complete": bool, "blocks": [Representation],
    ///  "change_of_basis": rows}
    fn decompose<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let result = decompose(&self.inner).map_err(value_error)?;
        let d = PyDict::new(py);
        let dims: Vec<usize> = result.blocks.iter().map(|b| b.basis.len()).collect();
        d.set_item("block_dims", dims)?;
        d.set_item("complete", result.complete)?;
        d.set_item("notes", result.notes.clone())?;
        let blocks: Vec<PyRepresentation> = result
            .blocks
            .iter()
            .map(|b| PyRepresentation {
                inner: b.subrep.clone(),
            })
            .collect();
        d.set_item("blocks", blocks.into_pyobject(py)?)?;
        d.set_item("change_of_basis", matrix_to_rows(&result.change_of_basis))?;
        Ok(d)
    }

    /// Equivalence certificate against another representation, or None.
    /// {"matrix": rows, "lambda": str | None, "unitary_witness": rows | None}
    fn intertwiner<'py>(
        &self,
        py: Python<'py>,
        other: &PyRepresentation,
    ) -> PyResult<Option<Bound<'py, PyDict>>> {
        let Some(cert) = intertwiner(&self.inner, &other.inner).map_err(value_error)? else {
            return Ok(None);
        };
        let d = PyDict::new(py);
        d.set_item("matrix", matrix_to_rows(&cert.s))?;
        match unitarize(&cert, &self.inner, &other.inner) {
            Ok(upgraded) => {
                d.set_item("lambda", upgraded.lambda.map(|l| l.to_string()))?;
                d.set_item(
                    "unitary_witness",
                    upgraded.unitary_witness.as_ref().map(matrix_to_rows),
                )?;
            }
            Err(_) => {
                d.set_item("lambda", None::<String>)?;
                d.set_item("unitary_witness", None::<Vec<Vec<String>>>)?;
            }
        }
        Ok(Some(d))
    }

    /// Full projector verification: covariance laws, the (1+1)
    /// identities where applicable, and the orthogonality scan.
    fn projector_report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let ps = build_projectors(&self.inner).map_err(value_error)?;
        let mut report = verify_scalar_covariance(&ps);
        report.merge(verify_vector_covariance(
            &ps,
            &self.inner,
            VectorFamily::PUp,
        ));
        report.merge(verify_vector_covariance(
            &ps,
            &self.inner,
            VectorFamily::RUp,
        ));
        if self.inner.d() == 2 {
            report.merge(verify_r01_scalar(&ps).map_err(value_error)?);
            report.merge(verify_rels_1p1(&ps, &self.inner).map_err(value_error)?);
        }
        let listing = report_to_py(py, &report)?;
        let orth = verify_orthogonality(&ps);
        let d = PyDict::new(py);
        d.set_item("name", "orthogonality-scan")?;
        d.set_item("status", "pass")?;
        d.set_item(
            "residual_summary",
            format!("all_vanish = {}", orth.all_vanish),
        )?;
        d.set_item("details", orth.nonzero_products.join(", "))?;
        listing.append(d)?;
        Ok(listing)
    }

    /// Whether every cross-sector projector product vanishes.
    fn orthogonality_all_vanish(&self) -> PyResult<bool> {
        let ps = build_projectors(&self.inner).map_err(value_error)?;
        Ok(verify_orthogonality(&ps).all_vanish)
    }

    /// {"on_shell": bool, "kernel_dim": int, "amplitudes": [columns]}
    fn solution_space<'py>(
        &self,
        py: Python<'py>,
        p: Vec<String>,
        m: &str,
    ) -> PyResult<Bound<'py, PyDict>> {
        let momentum = momentum_from_py(p, m)?;
        let sol = solution_space(&self.inner, &momentum).map_err(value_error)?;
        let d = PyDict::new(py);
        d.set_item("on_shell", momentum.on_shell(self.inner.metric()))?;
        d.set_item("kernel_dim", sol.amplitude_basis.len())?;
        let amps: Vec<Vec<String>> = sol
            .amplitude_basis
            .iter()
            .map(|u| (0..u.rows()).map(|r| u.at(r, 0).to_string()).collect())
            .collect();
        d.set_item("amplitudes", amps)?;
        Ok(d)
    }

    /// Scalar- and vector-sector plane-wave checks at an on-shell
    /// momentum.
    fn planewave_report<'py>(
        &self,
        py: Python<'py>,
        p: Vec<String>,
        m: &str,
    ) -> PyResult<Bound<'py, PyList>> {
        let momentum = momentum_from_py(p, m)?;
        let ps = build_projectors(&self.inner).map_err(value_error)?;
        let sol = solution_space(&self.inner, &momentum).map_err(value_error)?;
        let mut report = kg_relations_check(&self.inner, &ps, &sol).map_err(value_error)?;
        report.merge(proca_relations_check(&self.inner, &ps, &sol).map_err(value_error)?);
        report_to_py(py, &report)
    }

    fn __repr__(&self) -> String {
        format!(
            "Representation(D={}, dim={})",
            self.inner.d(),
            self.inner.dim()
        )
    }
}

/// The (1+1) spin-0 / "spin-1" field map checks on the builtin
/// representation at an on-shell momentum.
#[pyfunction]
fn field_map_report<'py>(py: Python<'py>, p: Vec<String>, m: &str) -> PyResult<Bound<'py, PyList>> {
    let momentum = momentum_from_py(p, m)?;
    let report = field_map_check(&momentum).map_err(value_error)?;
    report_to_py(py, &report)
}

#[pymodule]
fn dkp_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRepresentation>()?;
    m.add_function(wrap_pyfunction!(field_map_report, m)?)?;
    Ok(())
}
