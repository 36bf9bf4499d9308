//! Python module `ga3py`: multivectors in the four signatures of three-dimensional
//! geometric algebra, their closed-form exponentials and the spin sweep.

use ga3::functions::{hyperbolic_exact, normalize, ratio_exact, trig_exact, HyperbolicFn, NormPolicy, RatioFn, TrigFn};
use ga3::{GaError, RampSweep, SeriesFamily, SeriesSpec, Signature, SweepMode};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: GaError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_sig(algebra: &str) -> PyResult<Signature> {
    algebra.parse().map_err(err)
}

#[pyclass(name = "Multivector", module = "ga3py", frozen, from_py_object)]
#[derive(Clone, Copy)]
struct PyMultivector {
    inner: ga3::Multivector,
}

impl From<ga3::Multivector> for PyMultivector {
    fn from(inner: ga3::Multivector) -> Self {
        Self { inner }
    }
}

impl PyMultivector {
    fn same_sig(&self, other: &Self) -> PyResult<()> {
        if self.inner.sig == other.inner.sig {
            Ok(())
        } else {
            Err(err(GaError::SignatureMismatch { left: self.inner.sig, right: other.inner.sig }))
        }
    }
}

#[pymethods]
impl PyMultivector {
    /// `Multivector(algebra, coeffs)` with coefficients in blade order 1, e1, e2, e3, e12, e13, e23, e123.
    #[new]
    #[pyo3(signature = (algebra, coeffs))]
    fn new(algebra: &str, coeffs: [f64; 8]) -> PyResult<Self> {
        Ok(ga3::Multivector::new(parse_sig(algebra)?, coeffs).into())
    }

    /// Parse a literal such as `"1 + 0.5*e12 - I"` or `"4,1,3,-5,10,9,-9,-4 / 17"`.
    #[staticmethod]
    fn parse(text: &str, algebra: &str) -> PyResult<Self> {
        Ok(ga3::parse_mv(text, parse_sig(algebra)?).map_err(err)?.into())
    }

    #[getter]
    fn algebra(&self) -> &'static str {
        self.inner.sig.name()
    }

    #[getter]
    fn coeffs(&self) -> [f64; 8] {
        self.inner.c
    }

    fn __getitem__(&self, index: usize) -> PyResult<f64> {
        self.inner.c.get(index).copied().ok_or_else(|| PyValueError::new_err("blade index out of range 0..8"))
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.same_sig(other)?;
        Ok((self.inner + other.inner).into())
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.same_sig(other)?;
        Ok((self.inner - other.inner).into())
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(m) = other.extract::<Self>() {
            self.same_sig(&m)?;
            Ok((self.inner * m.inner).into())
        } else {
            Ok((self.inner * other.extract::<f64>()?).into())
        }
    }

    fn __rmul__(&self, other: f64) -> Self {
        (self.inner * other).into()
    }

    fn __truediv__(&self, other: f64) -> Self {
        (self.inner / other).into()
    }

    fn __neg__(&self) -> Self {
        (-self.inner).into()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        ga3::render(&self.inner, None)
    }

    fn __repr__(&self) -> String {
        format!("Multivector('{}', {:?})", self.inner.sig.name(), self.inner.c)
    }

    fn reverse(&self) -> Self {
        self.inner.reverse().into()
    }

    fn grade(&self, k: usize) -> PyResult<Self> {
        Ok(self.inner.grade_select(k).map_err(err)?.into())
    }

    fn determinant(&self) -> f64 {
        self.inner.determinant()
    }

    fn det_norm(&self) -> PyResult<f64> {
        self.inner.det_norm().map_err(err)
    }

    fn inverse(&self) -> PyResult<Self> {
        Ok(self.inner.inverse().map_err(err)?.inv.into())
    }

    fn max_diff(&self, other: &Self) -> PyResult<f64> {
        self.same_sig(other)?;
        Ok(self.inner.max_diff(&other.inner))
    }

    /// Closed-form exponential.
    fn exp(&self) -> Self {
        ga3::exp(&self.inner).into()
    }
}

/// Closed-form evaluation of `exp`, `sin`, `cos`, `tan`, `sinh`, `cosh` or `tanh`.
#[pyfunction]
fn evaluate(name: &str, x: &PyMultivector) -> PyResult<PyMultivector> {
    let x = &x.inner;
    let v = match name {
        "exp" => ga3::exp(x),
        "sin" => trig_exact(x, TrigFn::Sin).map_err(err)?,
        "cos" => trig_exact(x, TrigFn::Cos).map_err(err)?,
        "tan" => ratio_exact(x, RatioFn::Tan).map_err(err)?,
        "sinh" => hyperbolic_exact(x, HyperbolicFn::Sinh),
        "cosh" => hyperbolic_exact(x, HyperbolicFn::Cosh),
        "tanh" => ratio_exact(x, RatioFn::Tanh).map_err(err)?,
        other => return Err(PyValueError::new_err(format!("unknown function `{other}`"))),
    };
    Ok(v.into())
}

/// Truncated power series with powers `0..=terms`; returns `(value, last_term)`.
#[pyfunction]
fn series(family: &str, x: &PyMultivector, terms: usize) -> PyResult<(PyMultivector, f64)> {
    let family: SeriesFamily = family.parse().map_err(err)?;
    let r = ga3::series_eval_with_delta(&x.inner, SeriesSpec::new(family, terms)).map_err(err)?;
    Ok((r.value.into(), r.last_term))
}

/// Divide by `max(1, ceil(det_norm))`; returns `(normalized, scale)`.
#[pyfunction]
fn normalize_ceil(x: &PyMultivector) -> PyResult<(PyMultivector, f64)> {
    let (y, s) = normalize(&x.inner, NormPolicy::CeilInt).map_err(err)?;
    Ok((y.into(), s))
}

#[pyfunction]
fn remap(x: &PyMultivector, table: &str) -> PyResult<PyMultivector> {
    let table: ga3::RemapTable = table.parse().map_err(err)?;
    Ok(ga3::basis_remap(&x.inner, table).map_err(err)?.into())
}

/// Isolated square roots of `a_s + a_i I`, as `(a_s, a_i)` pairs.
#[pyfunction]
fn sqrt_center(a_s: f64, a_i: f64, algebra: &str) -> PyResult<Vec<(f64, f64)>> {
    let roots = ga3::sqrt_center(ga3::CenterElement::new(a_s, a_i), parse_sig(algebra)?).map_err(err)?;
    Ok(roots.into_iter().map(|r| (r.a_s, r.a_i)).collect())
}

#[pyfunction]
#[pyo3(signature = (b0, b1, omega, sigma, t, gamma = 1.0))]
fn down_probability(b0: f64, b1: f64, omega: f64, sigma: f64, t: f64, gamma: f64) -> PyResult<f64> {
    let cfg = ga3::FieldConfig::new(b0, b1, omega, sigma).and_then(|c| c.with_gamma(gamma)).map_err(err)?;
    Ok(ga3::down_probability(&cfg, t))
}

/// Linear `B0` ramp; returns `(times, b0, p_down)` lists.
#[pyfunction]
#[pyo3(signature = (sigma, b0_start = -2.0, b0_end = 2.0, duration = 500.0, samples = 5000, omega = 1.0, omega1 = 0.05, gamma = 1.0, stepped = false))]
#[allow(clippy::too_many_arguments)]
fn sweep_ramp(
    sigma: f64,
    b0_start: f64,
    b0_end: f64,
    duration: f64,
    samples: usize,
    omega: f64,
    omega1: f64,
    gamma: f64,
    stepped: bool,
) -> PyResult<(Vec<f64>, Vec<f64>, Vec<f64>)> {
    let sweep = RampSweep { b0_start, b0_end, duration, samples, omega, omega1, gamma };
    let mode = if stepped { SweepMode::Stepped } else { SweepMode::Adiabatic };
    let trace = ga3::sweep_ramp_with(&sweep, sigma, mode).map_err(err)?;
    Ok((trace.times, trace.b0, trace.p_down))
}

#[pymodule]
fn ga3py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMultivector>()?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(series, m)?)?;
    m.add_function(wrap_pyfunction!(normalize_ceil, m)?)?;
    m.add_function(wrap_pyfunction!(remap, m)?)?;
    m.add_function(wrap_pyfunction!(sqrt_center, m)?)?;
    m.add_function(wrap_pyfunction!(down_probability, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_ramp, m)?)?;
    Ok(())
}
