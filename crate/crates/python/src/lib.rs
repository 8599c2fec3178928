use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use dqho::coherent::{self, CoherentMethod, EvolutionConvention};
use dqho::repmat::{self, HamiltonianConvention, IndexConvention, RepMatrix};
use dqho::states::{self, LadderOp, RescaleMode};
use dqho::wick::{self, NamedOp, OperatorPoly};
use dqho::{specfn, VerificationReport};

fn py_err(e: dqho::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr<Err = dqho::Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(py_err)
}

type Rows = Vec<Vec<Complex64>>;

fn rows(m: &RepMatrix) -> Rows {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect()).collect()
}

fn report_rows(r: &VerificationReport) -> Vec<(String, bool, String)> {
    r.entries.iter().map(|e| (e.identity.clone(), e.status == dqho::Status::Pass, e.residual.clone())).collect()
}

/// Normal-ordered polynomial in the two boson modes.
#[pyclass(name = "Operator", module = "dqho", skip_from_py_object)]
#[derive(Clone)]
struct PyOperator(OperatorPoly);

#[pymethods]
impl PyOperator {
    /// `Operator("D")`, `Operator("H_I")` and so on.
    #[new]
    fn new(symbol: &str) -> PyResult<Self> {
        wick::named_by_symbol(symbol).map(Self).map_err(py_err)
    }

    #[staticmethod]
    fn symbols() -> Vec<String> {
        NamedOp::ALL.iter().map(|op| op.symbol().to_string()).collect()
    }

    fn __mul__(&self, rhs: &Self) -> Self {
        Self(self.0.multiply(&rhs.0))
    }

    fn commutator(&self, rhs: &Self) -> Self {
        Self(self.0.commutator(&rhs.0))
    }

    fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn resolution_shift(&self) -> Option<i64> {
        self.0.resolution_shift()
    }

    /// Matrix on the resolution-`s` position basis.
    fn matrix(&self, s: usize) -> PyResult<Rows> {
        repmat::evaluate(&self.0, s).map(|m| rows(&m)).map_err(py_err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Operator({})", self.0)
    }
}

/// `Σ_n d_n |n,s⟩` in the energy basis.
#[pyclass(name = "EnergyState", module = "dqho", skip_from_py_object)]
#[derive(Clone)]
struct PyEnergyState(states::EnergyState);

#[pymethods]
impl PyEnergyState {
    #[new]
    fn new(amplitudes: Vec<Complex64>) -> PyResult<Self> {
        states::EnergyState::new(amplitudes).map(Self).map_err(py_err)
    }

    #[staticmethod]
    fn basis(s: usize, n: usize) -> PyResult<Self> {
        states::EnergyState::basis(s, n).map(Self).map_err(py_err)
    }

    #[getter]
    fn s(&self) -> usize {
        self.0.s
    }

    #[getter]
    fn amplitudes(&self) -> Vec<Complex64> {
        self.0.amplitudes.clone()
    }

    fn norm(&self) -> f64 {
        self.0.norm()
    }

    fn normalized(&self) -> PyResult<Self> {
        self.0.normalized().map(Self).map_err(py_err)
    }

    fn inner(&self, other: &Self) -> PyResult<Complex64> {
        self.0.inner(&other.0).map_err(py_err)
    }

    /// One of `D`, `D†`, `B1`, `B1†`, `B2`, `B2†`.
    fn apply(&self, op: &str) -> PyResult<Self> {
        states::apply_ladder(parse::<LadderOp>(op)?, &self.0).map(Self).map_err(py_err)
    }

    #[pyo3(signature = (t, convention = "paper-phase"))]
    fn evolve(&self, t: f64, convention: &str) -> PyResult<Self> {
        Ok(Self(coherent::evolve(&self.0, t, parse::<EvolutionConvention>(convention)?)))
    }

    fn expectation_x(&self) -> PyResult<f64> {
        states::expectation_x(&self.0).map_err(py_err)
    }

    fn expectation_p(&self) -> PyResult<f64> {
        states::expectation_p(&self.0).map_err(py_err)
    }

    /// `(σ_X², σ_P²)`.
    fn uncertainty(&self) -> PyResult<(f64, f64)> {
        states::uncertainty(&self.0).map_err(py_err)
    }

    /// Amplitudes `a_{n1}` on the position basis.
    fn to_position(&self) -> PyResult<Vec<Complex64>> {
        states::WavefunctionBasis::new(self.0.s).to_position(&self.0).map(|p| p.amplitudes).map_err(py_err)
    }

    /// Returns `(state, lost_norm)`.
    #[pyo3(signature = (target_s, mode = "ladder", force = false))]
    fn rescale(&self, target_s: usize, mode: &str, force: bool) -> PyResult<(Self, f64)> {
        let r = states::rescale_resolution(&self.0, target_s, parse::<RescaleMode>(mode)?, force).map_err(py_err)?;
        Ok((Self(r.state), r.lost_norm))
    }

    fn __len__(&self) -> usize {
        self.0.amplitudes.len()
    }

    fn __repr__(&self) -> String {
        format!("EnergyState(s={}, amplitudes={:?})", self.0.s, self.0.amplitudes)
    }
}

/// Printed commutation tables as `(identity, passed, residual)` rows.
#[pyfunction]
fn verify_tables() -> Vec<(String, bool, String)> {
    report_rows(&wick::verify_tables())
}

/// Full numerical verification; same checks as `dqho verify`.
#[pyfunction]
#[pyo3(signature = (hamiltonian = "canonical"))]
fn run_verification(hamiltonian: &str) -> PyResult<Vec<(String, bool, String)>> {
    let opts = dqho::cli::verify::VerifyOptions {
        hamiltonian: parse::<HamiltonianConvention>(hamiltonian)?,
        self_test_corrupt: false,
    };
    dqho::cli::verify::run_verification(opts).map(|r| report_rows(&r)).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (op, s, index_convention = "n1-ascending"))]
fn matrix(op: &str, s: usize, index_convention: &str) -> PyResult<Rows> {
    let m =
        repmat::build_with(parse::<NamedOp>(op)?, s, parse::<IndexConvention>(index_convention)?).map_err(py_err)?;
    Ok(rows(&m))
}

#[pyfunction]
#[pyo3(signature = (s, convention = "canonical"))]
fn hamiltonian(s: usize, convention: &str) -> PyResult<Rows> {
    Ok(rows(&repmat::hamiltonian_with(s, parse::<HamiltonianConvention>(convention)?)))
}

/// Ascending eigenvalues of the resolution-`s` Hamiltonian.
#[pyfunction]
#[pyo3(signature = (s, convention = "canonical"))]
fn spectrum(s: usize, convention: &str) -> PyResult<Vec<f64>> {
    repmat::eigvals_sym_tridiag(&repmat::hamiltonian_with(s, parse::<HamiltonianConvention>(convention)?))
        .map_err(py_err)
}

/// Rows `α^n_{n1,s}` for `n = 0..=n_max`, built with the ladder operators.
#[pyfunction]
#[pyo3(signature = (s, n_max = None))]
fn wavefunctions(s: usize, n_max: Option<usize>) -> Vec<Vec<f64>> {
    states::wavefunctions_float(s, n_max.unwrap_or(s).min(s))
}

/// `α^n_{n1,s}` from the Kravchuk closed form.
#[pyfunction]
fn kravchuk(n: u64, n1: u64, s: u64) -> PyResult<f64> {
    specfn::kravchuk_wavefunction(n, n1, s).map_err(py_err)
}

#[pyfunction]
fn hermite_function(n: u32, xi: f64) -> f64 {
    specfn::hermite_function(n, xi)
}

#[pyfunction]
#[pyo3(signature = (beta, s, method = "oracle"))]
fn coherent_state(beta: Complex64, s: usize, method: &str) -> PyResult<PyEnergyState> {
    coherent::coherent_state(beta, s, parse::<CoherentMethod>(method)?).map(PyEnergyState).map_err(py_err)
}

/// Closed-form `⟨X(t)⟩` of a coherent state.
#[pyfunction]
fn position_expectation(beta: Complex64, t: f64, s: usize) -> f64 {
    coherent::position_expectation_closed(beta, t, s)
}

/// Displacement operator on the position basis.
#[pyfunction]
fn displacement_matrix(beta: Complex64, s: usize) -> PyResult<Rows> {
    coherent::displacement_matrix_position(beta, s).map(|m| rows(&m)).map_err(py_err)
}

/// Unitary dilation of `op / alpha`; `alpha` defaults to the spectral norm.
#[pyfunction]
#[pyo3(signature = (op, s, alpha = None))]
fn dilation(op: &str, s: usize, alpha: Option<f64>) -> PyResult<Rows> {
    let m = repmat::build(parse::<NamedOp>(op)?, s).map_err(py_err)?;
    let alpha = alpha.unwrap_or_else(|| repmat::spectral_norm(&m));
    repmat::unitary_dilation(&m, alpha).map(|u| rows(&u)).map_err(py_err)
}

#[pymodule(name = "dqho")]
fn dqho_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyOperator>()?;
    m.add_class::<PyEnergyState>()?;
    m.add_function(wrap_pyfunction!(verify_tables, m)?)?;
    m.add_function(wrap_pyfunction!(run_verification, m)?)?;
    m.add_function(wrap_pyfunction!(matrix, m)?)?;
    m.add_function(wrap_pyfunction!(hamiltonian, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(wavefunctions, m)?)?;
    m.add_function(wrap_pyfunction!(kravchuk, m)?)?;
    m.add_function(wrap_pyfunction!(hermite_function, m)?)?;
    m.add_function(wrap_pyfunction!(coherent_state, m)?)?;
    m.add_function(wrap_pyfunction!(position_expectation, m)?)?;
    m.add_function(wrap_pyfunction!(displacement_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(dilation, m)?)?;
    Ok(())
}
