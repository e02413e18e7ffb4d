//! Python bindings. Structured results come back as plain dicts and lists.

use dpp_core::asymptotics::{self, RateQuantity};
use dpp_core::quadrature::{QuadConfig, CHECK_TOL};
use dpp_core::render::to_json;
use dpp_core::{kernels, oracle, repulsion, AlphaRule, Error, Family};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

create_exception!(dpp_reach, DppError, PyValueError, "Base class for library errors.");
create_exception!(
    dpp_reach,
    InvalidSpecError,
    DppError,
    "The kernel violates an existence constraint."
);
create_exception!(
    dpp_reach,
    UnsupportedError,
    DppError,
    "Operation not available for this family, or a divergent moment."
);
create_exception!(
    dpp_reach,
    NumericError,
    DppError,
    "Quadrature or another numerical step failed."
);

fn err(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::InvalidSpec(_) => InvalidSpecError::new_err(msg),
        Error::Unsupported { .. } | Error::MomentDivergence { .. } => UnsupportedError::new_err(msg),
        Error::NotConverged { .. } | Error::InfiniteMass | Error::Numeric(_) => NumericError::new_err(msg),
        Error::Domain(_) | Error::InfeasibleDistances { .. } => DppError::new_err(msg),
    }
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (to_json(value),))
}

fn rule(name: &str) -> PyResult<AlphaRule> {
    match name {
        "fixed" => Ok(AlphaRule::Fixed),
        "scaled" => Ok(AlphaRule::Scaled),
        _ => Err(PyValueError::new_err(format!(
            "alpha rule must be 'fixed' or 'scaled', got {name:?}"
        ))),
    }
}

fn quantity(name: &str) -> PyResult<RateQuantity> {
    match name {
        "eta_ball" => Ok(RateQuantity::EtaBall),
        "eta_ball_ratio" => Ok(RateQuantity::EtaBallRatio),
        "eta_boolean_ratio" => Ok(RateQuantity::EtaBooleanRatio),
        _ => Err(PyValueError::new_err(format!("unknown rate quantity {name:?}"))),
    }
}

fn quad(tol: f64) -> PyResult<QuadConfig> {
    if tol > 0.0 && tol < 1.0 {
        Ok(QuadConfig::with_tol(tol))
    } else {
        Err(PyValueError::new_err(format!(
            "tolerance must lie in (0, 1), got {tol}"
        )))
    }
}

/// A kernel family instance in dimension n with intensity exp(n*rho).
#[pyclass(name = "KernelSpec", module = "dpp_reach", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PySpec(dpp_core::KernelSpec);

#[pymethods]
impl PySpec {
    #[staticmethod]
    fn laguerre_gauss(n: u32, rho: f64, m: u32, alpha: f64) -> Self {
        PySpec(dpp_core::KernelSpec::laguerre_gauss(n, rho, m, alpha))
    }

    #[staticmethod]
    #[pyo3(signature = (n, rho, nu, alpha, alpha_rule = "fixed"))]
    fn power_exponential(n: u32, rho: f64, nu: f64, alpha: f64, alpha_rule: &str) -> PyResult<Self> {
        Ok(PySpec(dpp_core::KernelSpec::power_exponential(
            n,
            rho,
            nu,
            alpha,
            rule(alpha_rule)?,
        )))
    }

    #[staticmethod]
    fn bessel_type(n: u32, rho: f64, sigma: f64, alpha: f64) -> Self {
        PySpec(dpp_core::KernelSpec::bessel_type(n, rho, sigma, alpha))
    }

    #[staticmethod]
    fn whittle_matern(n: u32, rho: f64, nu: f64, alpha: f64) -> Self {
        PySpec(dpp_core::KernelSpec::whittle_matern(n, rho, nu, alpha))
    }

    #[staticmethod]
    #[pyo3(signature = (n, rho, nu, alpha, alpha_rule = "fixed"))]
    fn cauchy(n: u32, rho: f64, nu: f64, alpha: f64, alpha_rule: &str) -> PyResult<Self> {
        Ok(PySpec(dpp_core::KernelSpec::cauchy(
            n,
            rho,
            nu,
            alpha,
            rule(alpha_rule)?,
        )))
    }

    #[staticmethod]
    fn indicator_spectral(n: u32, rho: f64, c: f64) -> Self {
        PySpec(dpp_core::KernelSpec::indicator_spectral(n, rho, c))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text)
            .map(PySpec)
            .map_err(|e| PyValueError::new_err(format!("malformed kernel spec: {e}")))
    }

    fn to_json(&self) -> String {
        to_json(&self.0)
    }

    fn with_n(&self, n: u32) -> Self {
        PySpec(self.0.with_n(n))
    }

    #[getter]
    fn family(&self) -> &'static str {
        self.0.family.name()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.0.n
    }

    #[getter]
    fn rho(&self) -> f64 {
        self.0.rho
    }

    /// Dict with effective_scale, bound and notes; raises InvalidSpecError.
    fn validate<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        match kernels::validate(&self.0) {
            Ok(v) => to_py(py, &v),
            Err(v) => Err(err(Error::InvalidSpec(v))),
        }
    }

    fn is_valid(&self) -> bool {
        kernels::validate(&self.0).is_ok()
    }

    /// Largest admissible scale parameter (alpha, or c) at this n and rho.
    fn max_param(&self) -> PyResult<f64> {
        kernels::max_param(&self.0).map_err(err)
    }

    fn effective_scale(&self) -> PyResult<f64> {
        kernels::effective_scale(&self.0).map_err(err)
    }

    /// K(r) as a float; may underflow where the log-domain value does not.
    fn kernel(&self, r: f64) -> PyResult<f64> {
        let v = kernels::kernel_radial(&self.0, r).map_err(err)?;
        Ok(f64::from(v.sign) * v.log_magnitude.exp())
    }

    fn spectral(&self, xi: f64) -> PyResult<f64> {
        kernels::spectral_radial(&self.0, xi).map_err(err)
    }

    fn squared_norm_log(&self) -> PyResult<f64> {
        kernels::squared_norm_log(&self.0).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("KernelSpec({})", to_json(&self.0))
    }
}

#[pyfunction]
fn example_specs(n: u32) -> Vec<PySpec> {
    kernels::example_specs(n).into_iter().map(PySpec).collect()
}

#[pyfunction]
fn family_names() -> Vec<&'static str> {
    Family::ALL.iter().map(Family::name).collect()
}

#[pyfunction]
fn eta_total_log(spec: PyRef<'_, PySpec>) -> PyResult<f64> {
    repulsion::eta_total_log(&spec.0).map_err(err)
}

#[pyfunction]
fn eta_total_bound_log(spec: PyRef<'_, PySpec>) -> PyResult<f64> {
    repulsion::eta_total_bound_log(&spec.0).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (spec, big_r, tol = CHECK_TOL))]
fn eta_ball_log(spec: PyRef<'_, PySpec>, big_r: f64, tol: f64) -> PyResult<f64> {
    repulsion::eta_ball_log(&spec.0, big_r, &quad(tol)?).map_err(err)
}

#[pyfunction]
fn eta_ball_ratio(spec: PyRef<'_, PySpec>, big_r: f64) -> PyResult<f64> {
    repulsion::eta_ball_ratio(&spec.0, big_r).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (spec, radii, tol = CHECK_TOL))]
fn eta_ball_ratios(spec: PyRef<'_, PySpec>, radii: Vec<f64>, tol: f64) -> PyResult<Vec<f64>> {
    repulsion::eta_ball_ratios(&spec.0, &radii, &quad(tol)?).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (spec, grid, tol = CHECK_TOL))]
fn eta_report<'py>(py: Python<'py>, spec: PyRef<'_, PySpec>, grid: Vec<f64>, tol: f64) -> PyResult<Bound<'py, PyAny>> {
    let report = repulsion::eta_report(&spec.0, &grid, &quad(tol)?).map_err(err)?;
    to_py(py, &report)
}

#[pyfunction]
fn boolean_degree_ratio(spec: PyRef<'_, PySpec>, big_r: f64) -> PyResult<f64> {
    repulsion::boolean_degree_ratio(&spec.0, big_r).map_err(err)
}

#[pyfunction]
fn radial_moment(spec: PyRef<'_, PySpec>, k: u32) -> PyResult<f64> {
    repulsion::radial_moment(&spec.0, k).map_err(err)
}

#[pyfunction]
fn radial_moment_log(spec: PyRef<'_, PySpec>, k: u32) -> PyResult<f64> {
    repulsion::radial_moment_log(&spec.0, k).map_err(err)
}

#[pyfunction]
fn pair_correlation(spec: PyRef<'_, PySpec>, r: f64) -> PyResult<f64> {
    repulsion::pair_correlation(&spec.0, r).map_err(err)
}

#[pyfunction]
fn nn_bounds<'py>(py: Python<'py>, spec: PyRef<'_, PySpec>, big_r: f64) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &repulsion::nn_bounds(&spec.0, big_r).map_err(err)?)
}

#[pyfunction]
fn reach(spec: PyRef<'_, PySpec>) -> PyResult<Option<f64>> {
    asymptotics::reach(&spec.0).map_err(err)
}

#[pyfunction]
fn nn_threshold(rho: f64) -> f64 {
    asymptotics::nn_threshold(rho)
}

#[pyfunction]
fn reach_exceeds_nn<'py>(py: Python<'py>, spec: PyRef<'_, PySpec>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &asymptotics::reach_exceeds_nn(&spec.0).map_err(err)?)
}

#[pyfunction]
fn whittle_matern_rms_scale(spec: PyRef<'_, PySpec>) -> PyResult<f64> {
    asymptotics::whittle_matern_rms_scale(&spec.0).map_err(err)
}

#[pyfunction]
fn laguerre_rate(x: f64, m: u32, alpha: f64) -> PyResult<f64> {
    asymptotics::laguerre_rate(x, m, alpha).map_err(err)
}

#[pyfunction]
fn laguerre_eta_rate(big_r: f64, m: u32, alpha: f64, rho: f64) -> PyResult<f64> {
    asymptotics::laguerre_eta_rate(big_r, m, alpha, rho).map_err(err)
}

#[pyfunction]
fn laguerre_ratio_rate(big_r: f64, m: u32, alpha: f64) -> PyResult<f64> {
    asymptotics::laguerre_ratio_rate(big_r, m, alpha).map_err(err)
}

#[pyfunction]
fn boolean_rate(big_r: f64, m: u32, alpha: f64) -> PyResult<f64> {
    asymptotics::boolean_rate(big_r, m, alpha).map_err(err)
}

/// Rows of the summary table as dicts.
#[pyfunction]
fn summary_table<'py>(py: Python<'py>, specs: Vec<PyRef<'_, PySpec>>) -> PyResult<Bound<'py, PyAny>> {
    let specs: Vec<_> = specs.iter().map(|s| s.0.clone()).collect();
    let table = asymptotics::summary_table(&specs).map_err(err)?;
    to_py(py, &table.rows)
}

#[pyfunction]
fn summary_markdown(specs: Vec<PyRef<'_, PySpec>>) -> PyResult<String> {
    let specs: Vec<_> = specs.iter().map(|s| s.0.clone()).collect();
    Ok(asymptotics::summary_table(&specs).map_err(err)?.to_markdown())
}

#[pyfunction]
fn sample_radius(py: Python<'_>, spec: PyRef<'_, PySpec>, count: usize, seed: u64) -> PyResult<Vec<f64>> {
    let spec = spec.0.clone();
    py.detach(|| oracle::sample_radius(&spec, count, seed)).map_err(err)
}

#[pyfunction]
fn mc_ball_ratio<'py>(
    py: Python<'py>,
    spec: PyRef<'_, PySpec>,
    big_r: f64,
    count: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let spec = spec.0.clone();
    let est = py
        .detach(|| oracle::mc_ball_ratio(&spec, big_r, count, seed))
        .map_err(err)?;
    to_py(py, &est)
}

#[pyfunction]
fn cartesian_mc_integral<'py>(
    py: Python<'py>,
    spec: PyRef<'_, PySpec>,
    big_r: f64,
    count: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let spec = spec.0.clone();
    let est = py
        .detach(|| oracle::cartesian_mc_integral(&spec, big_r, count, seed))
        .map_err(err)?;
    to_py(py, &est)
}

/// Finite-n rates -(1/n) ln q_n(R) as dicts with keys n, big_r, rate.
#[pyfunction]
#[pyo3(signature = (spec, big_r, n_list, quantity = "eta_ball", tol = CHECK_TOL))]
fn empirical_rate<'py>(
    py: Python<'py>,
    spec: PyRef<'_, PySpec>,
    big_r: f64,
    n_list: Vec<u32>,
    quantity: &str,
    tol: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let (q, cfg, spec) = (self::quantity(quantity)?, quad(tol)?, spec.0.clone());
    let rows = py
        .detach(|| oracle::empirical_rate(&spec, big_r, &n_list, q, &cfg))
        .map_err(err)?;
    to_py(py, &rows)
}

#[pymodule]
fn dpp_reach(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("DppError", py.get_type::<DppError>())?;
    m.add("InvalidSpecError", py.get_type::<InvalidSpecError>())?;
    m.add("UnsupportedError", py.get_type::<UnsupportedError>())?;
    m.add("NumericError", py.get_type::<NumericError>())?;
    m.add_class::<PySpec>()?;
    m.add_function(wrap_pyfunction!(example_specs, m)?)?;
    m.add_function(wrap_pyfunction!(family_names, m)?)?;
    m.add_function(wrap_pyfunction!(eta_total_log, m)?)?;
    m.add_function(wrap_pyfunction!(eta_total_bound_log, m)?)?;
    m.add_function(wrap_pyfunction!(eta_ball_log, m)?)?;
    m.add_function(wrap_pyfunction!(eta_ball_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(eta_ball_ratios, m)?)?;
    m.add_function(wrap_pyfunction!(eta_report, m)?)?;
    m.add_function(wrap_pyfunction!(boolean_degree_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(radial_moment, m)?)?;
    m.add_function(wrap_pyfunction!(radial_moment_log, m)?)?;
    m.add_function(wrap_pyfunction!(pair_correlation, m)?)?;
    m.add_function(wrap_pyfunction!(nn_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(reach, m)?)?;
    m.add_function(wrap_pyfunction!(nn_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(reach_exceeds_nn, m)?)?;
    m.add_function(wrap_pyfunction!(whittle_matern_rms_scale, m)?)?;
    m.add_function(wrap_pyfunction!(laguerre_rate, m)?)?;
    m.add_function(wrap_pyfunction!(laguerre_eta_rate, m)?)?;
    m.add_function(wrap_pyfunction!(laguerre_ratio_rate, m)?)?;
    m.add_function(wrap_pyfunction!(boolean_rate, m)?)?;
    m.add_function(wrap_pyfunction!(summary_table, m)?)?;
    m.add_function(wrap_pyfunction!(summary_markdown, m)?)?;
    m.add_function(wrap_pyfunction!(sample_radius, m)?)?;
    m.add_function(wrap_pyfunction!(mc_ball_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(cartesian_mc_integral, m)?)?;
    m.add_function(wrap_pyfunction!(empirical_rate, m)?)?;
    Ok(())
}
