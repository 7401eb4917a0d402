//! Python bindings. Rationals go in as `int`, `str` ("p/q", "1.25",
//! "0.4(9)") or anything with integer `numerator` and `denominator`
//! attributes (`fractions.Fraction`), and come back as `fractions.Fraction`.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::sync::PyOnceLock;
use pyo3::types::{PyString, PyTuple};
use redim_core::atlas::semicircle_points as core_semicircle_points;
use redim_core::expansion::PeriodicExpansion;
use redim_core::{BijectionHandle, ExactRational, KVector, RealTuple};

fn err(e: redim_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<ExactRational> {
    if let Ok(s) = obj.cast::<PyString>() {
        return s.to_str()?.parse().map_err(err);
    }
    if let Ok(n) = obj.extract::<BigInt>() {
        return Ok(ExactRational::from_integer(n));
    }
    let num: BigInt = obj.getattr("numerator")?.extract()?;
    let den: BigInt = obj.getattr("denominator")?.extract()?;
    ExactRational::new(num, den).map_err(err)
}

fn tuple(items: &Bound<'_, PyAny>) -> PyResult<RealTuple> {
    let coords = items.try_iter()?.map(|x| rational(&x?)).collect::<PyResult<Vec<_>>>()?;
    RealTuple::new(coords).map_err(err)
}

fn kvector(items: &Bound<'_, PyAny>) -> PyResult<KVector> {
    Ok(tuple(items)?.into())
}

fn fraction<'py>(py: Python<'py>, x: &ExactRational) -> PyResult<Bound<'py, PyAny>> {
    static FRACTION: PyOnceLock<Py<PyAny>> = PyOnceLock::new();
    let cls = FRACTION.import(py, "fractions", "Fraction")?;
    cls.call1((x.numer().clone(), x.denom().clone()))
}

fn py_tuple<'py>(py: Python<'py>, coords: &[ExactRational]) -> PyResult<Bound<'py, PyTuple>> {
    let items = coords.iter().map(|c| fraction(py, c)).collect::<PyResult<Vec<_>>>()?;
    PyTuple::new(py, items)
}

fn json<'py>(py: Python<'py>, report: serde_json::Result<String>) -> PyResult<Bound<'py, PyAny>> {
    let text = report.map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// Canonical nines-form expansion text of a value in `(0, 1]`.
#[pyfunction]
fn to_expansion(x: &Bound<'_, PyAny>) -> PyResult<String> {
    Ok(redim_core::to_expansion(&rational(x)?).map_err(err)?.to_string())
}

/// Value of expansion text such as "0.0024(9)".
#[pyfunction]
fn from_expansion<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    let e: PeriodicExpansion = text.parse().map_err(err)?;
    fraction(py, &redim_core::from_expansion(&e).map_err(err)?)
}

#[pyfunction]
fn pair_unit<'py>(py: Python<'py>, a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &redim_core::pair_unit(&rational(a)?, &rational(b)?).map_err(err)?)
}

#[pyfunction]
fn unpair_unit<'py>(py: Python<'py>, y: &Bound<'_, PyAny>) -> PyResult<Bound<'py, PyTuple>> {
    let (a, b) = redim_core::unpair_unit(&rational(y)?).map_err(err)?;
    py_tuple(py, &[a, b])
}

#[pyfunction]
fn pair_reals<'py>(py: Python<'py>, a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &redim_core::pair_reals(&rational(a)?, &rational(b)?).map_err(err)?)
}

#[pyfunction]
fn unpair_reals<'py>(py: Python<'py>, y: &Bound<'_, PyAny>) -> PyResult<Bound<'py, PyTuple>> {
    let (a, b) = redim_core::unpair_reals(&rational(y)?).map_err(err)?;
    py_tuple(py, &[a, b])
}

/// Fold an n-tuple into one real.
#[pyfunction]
fn fold<'py>(py: Python<'py>, x: &Bound<'_, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &redim_core::fold_tuple(&tuple(x)?).map_err(err)?)
}

/// Unfold one real into a k-tuple.
#[pyfunction]
fn unfold<'py>(py: Python<'py>, y: &Bound<'_, PyAny>, k: usize) -> PyResult<Bound<'py, PyTuple>> {
    py_tuple(py, redim_core::unfold_tuple(&rational(y)?, k).map_err(err)?.coords())
}

/// Map the n-tuple `x` to `R^k` by `Φ: R^n -> R^k`, or with `inverse` by
/// the inverse of `Φ: R^k -> R^n` (as the `redim phi` command does).
#[pyfunction]
#[pyo3(signature = (n, k, x, inverse = false))]
fn phi<'py>(py: Python<'py>, n: usize, k: usize, x: &Bound<'_, PyAny>, inverse: bool) -> PyResult<Bound<'py, PyTuple>> {
    let x = tuple(x)?;
    let y = if inverse {
        redim_core::build_phi(k, n).and_then(|h| h.backward(&x))
    } else {
        redim_core::build_phi(n, k).and_then(|h| h.forward(&x))
    }
    .map_err(err)?;
    py_tuple(py, y.coords())
}

/// `(x, f(x))` samples of the semicircle map.
#[pyfunction]
fn semicircle_points(samples: usize) -> Vec<(f64, f64)> {
    core_semicircle_points(samples)
}

/// The bijection `R^n -> R^k`.
#[pyclass(frozen, name = "Bijection")]
struct PyBijection(BijectionHandle);

#[pymethods]
impl PyBijection {
    #[new]
    fn new(n: usize, k: usize) -> PyResult<Self> {
        Ok(PyBijection(redim_core::build_phi(n, k).map_err(err)?))
    }

    #[getter]
    fn name(&self) -> String {
        self.0.name().to_string()
    }

    fn forward<'py>(&self, py: Python<'py>, x: &Bound<'_, PyAny>) -> PyResult<Bound<'py, PyTuple>> {
        py_tuple(py, self.0.forward(&tuple(x)?).map_err(err)?.coords())
    }

    fn backward<'py>(&self, py: Python<'py>, y: &Bound<'_, PyAny>) -> PyResult<Bound<'py, PyTuple>> {
        py_tuple(py, self.0.backward(&tuple(y)?).map_err(err)?.coords())
    }

    fn __repr__(&self) -> String {
        format!("Bijection({:?})", self.0.name())
    }
}

/// `R^n_k`: n-tuples with the vector space structure of `R^k` transported
/// along the pairing bijection.
#[pyclass(frozen, name = "TransportedSpace")]
struct PyTransportedSpace(redim_core::TransportedSpace);

#[pymethods]
impl PyTransportedSpace {
    #[new]
    fn new(n: usize, k: usize) -> PyResult<Self> {
        Ok(PyTransportedSpace(redim_core::TransportedSpace::pairing(n, k).map_err(err)?))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    fn vadd<'py>(&self, py: Python<'py>, x: &Bound<'_, PyAny>, y: &Bound<'_, PyAny>) -> PyResult<Bound<'py, PyTuple>> {
        py_tuple(py, self.0.vadd(&tuple(x)?, &tuple(y)?).map_err(err)?.coords())
    }

    fn smul<'py>(&self, py: Python<'py>, c: &Bound<'_, PyAny>, x: &Bound<'_, PyAny>) -> PyResult<Bound<'py, PyTuple>> {
        py_tuple(py, self.0.smul(&rational(c)?, &tuple(x)?).map_err(err)?.coords())
    }

    fn zero<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyTuple>> {
        py_tuple(py, self.0.zero().map_err(err)?.coords())
    }

    fn neg<'py>(&self, py: Python<'py>, x: &Bound<'_, PyAny>) -> PyResult<Bound<'py, PyTuple>> {
        py_tuple(py, self.0.neg(&tuple(x)?).map_err(err)?.coords())
    }

    fn to_target<'py>(&self, py: Python<'py>, x: &Bound<'_, PyAny>) -> PyResult<Bound<'py, PyTuple>> {
        py_tuple(py, self.0.to_target(&tuple(x)?).map_err(err)?.coords())
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_target<'py>(&self, py: Python<'py>, v: &Bound<'_, PyAny>) -> PyResult<Bound<'py, PyTuple>> {
        py_tuple(py, self.0.from_target(&kvector(v)?).map_err(err)?.coords())
    }

    /// Pull a basis of `R^k` (default: the standard one) back to n-tuples.
    #[pyo3(signature = (alphas = None))]
    fn basis<'py>(&self, py: Python<'py>, alphas: Option<Vec<Bound<'_, PyAny>>>) -> PyResult<Vec<Bound<'py, PyTuple>>> {
        let alphas = self.alphas(alphas)?;
        let basis = self.0.basis(&alphas).map_err(err)?;
        basis.iter().map(|t| py_tuple(py, t.coords())).collect()
    }

    #[pyo3(signature = (x, alphas = None))]
    fn coordinates<'py>(
        &self,
        py: Python<'py>,
        x: &Bound<'_, PyAny>,
        alphas: Option<Vec<Bound<'_, PyAny>>>,
    ) -> PyResult<Bound<'py, PyTuple>> {
        let alphas = self.alphas(alphas)?;
        py_tuple(py, &self.0.coordinates(&alphas, &tuple(x)?).map_err(err)?)
    }

    fn combine<'py>(
        &self,
        py: Python<'py>,
        coeffs: &Bound<'_, PyAny>,
        tuples: Vec<Bound<'_, PyAny>>,
    ) -> PyResult<Bound<'py, PyTuple>> {
        let coeffs = coeffs.try_iter()?.map(|c| rational(&c?)).collect::<PyResult<Vec<_>>>()?;
        let tuples = tuples.iter().map(tuple).collect::<PyResult<Vec<_>>>()?;
        py_tuple(py, self.0.combine(&coeffs, &tuples).map_err(err)?.coords())
    }

    /// The eight-axiom report as a dict.
    #[pyo3(signature = (trials = 100, seed = 0))]
    fn check_axioms<'py>(&self, py: Python<'py>, trials: usize, seed: u64) -> PyResult<Bound<'py, PyAny>> {
        let report = py.detach(|| self.0.check_axioms(trials, seed));
        json(py, serde_json::to_string(&report))
    }

    #[pyo3(signature = (trials = 100, seed = 0))]
    fn check_isomorphism<'py>(&self, py: Python<'py>, trials: usize, seed: u64) -> PyResult<Bound<'py, PyAny>> {
        let report = py.detach(|| self.0.check_isomorphism(trials, seed));
        json(py, serde_json::to_string(&report))
    }

    fn __repr__(&self) -> String {
        format!("TransportedSpace(n={}, k={})", self.0.n(), self.0.k())
    }
}

impl PyTransportedSpace {
    fn alphas(&self, alphas: Option<Vec<Bound<'_, PyAny>>>) -> PyResult<Vec<KVector>> {
        match alphas {
            Some(list) => list.iter().map(kvector).collect(),
            None => KVector::standard_basis(self.0.k()).map_err(err),
        }
    }
}

#[pymodule]
fn redim(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(to_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(from_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(pair_unit, m)?)?;
    m.add_function(wrap_pyfunction!(unpair_unit, m)?)?;
    m.add_function(wrap_pyfunction!(pair_reals, m)?)?;
    m.add_function(wrap_pyfunction!(unpair_reals, m)?)?;
    m.add_function(wrap_pyfunction!(fold, m)?)?;
    m.add_function(wrap_pyfunction!(unfold, m)?)?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(semicircle_points, m)?)?;
    m.add_class::<PyBijection>()?;
    m.add_class::<PyTransportedSpace>()?;
    Ok(())
}
