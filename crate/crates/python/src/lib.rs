use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use cyclic_shuffle::sweep::{parse_theorems, Sample, DEFAULT_SAMPLE_TOTAL, DEFAULT_SWEEP_ORACLE_BOUND};
use cyclic_shuffle::theorems::{self, CyclicShufflePair, PsiImage};
use cyclic_shuffle::{report, shuffle, SweepConfig};

fn err(e: cyclic_shuffle::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "LinearPerm", module = "cyclic_shuffle", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyLinearPerm(cyclic_shuffle::LinearPerm);

#[pymethods]
impl PyLinearPerm {
    #[new]
    fn new(letters: Vec<u32>) -> PyResult<Self> {
        cyclic_shuffle::LinearPerm::new(letters).map(Self).map_err(err)
    }

    /// Parses a literal such as `"6,3,1,4"`.
    #[staticmethod]
    fn parse(literal: &str) -> PyResult<Self> {
        literal.parse().map(Self).map_err(err)
    }

    #[getter]
    fn letters(&self) -> Vec<u32> {
        self.0.letters().to_vec()
    }

    fn descent_set(&self) -> Vec<usize> {
        self.0.descent_set().into_iter().collect()
    }

    fn des(&self) -> usize {
        self.0.des()
    }

    fn maj(&self) -> usize {
        self.0.maj()
    }

    fn cyclic_descent_set(&self) -> PyResult<Vec<usize>> {
        Ok(self.0.cyclic_descent_set().map_err(err)?.into_iter().collect())
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LinearPerm({:?})", self.0.letters())
    }
}

#[pyclass(name = "CyclicPerm", module = "cyclic_shuffle", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyCyclicPerm(cyclic_shuffle::CyclicPerm);

#[pymethods]
impl PyCyclicPerm {
    /// Any rotation of the class; stored from its largest letter.
    #[new]
    fn new(letters: Vec<u32>) -> PyResult<Self> {
        cyclic_shuffle::CyclicPerm::new(&letters).map(Self).map_err(err)
    }

    #[staticmethod]
    fn parse(literal: &str) -> PyResult<Self> {
        literal.parse().map(Self).map_err(err)
    }

    #[getter]
    fn letters(&self) -> Vec<u32> {
        self.0.letters().to_vec()
    }

    #[getter]
    fn rep(&self) -> PyLinearPerm {
        PyLinearPerm(self.0.rep().clone())
    }

    fn cdes(&self) -> usize {
        self.0.cdes()
    }

    fn cmaj(&self) -> usize {
        self.0.cmaj()
    }

    fn descent_bottoms(&self) -> Vec<u32> {
        self.0.descent_bottoms().into_iter().collect()
    }

    fn tail(&self) -> PyLinearPerm {
        PyLinearPerm(self.0.tail())
    }

    /// The rotation starting at `letter`.
    fn split(&self, letter: u32) -> PyResult<PyLinearPerm> {
        self.0.split(letter).map(PyLinearPerm).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("CyclicPerm({:?})", self.0.letters())
    }
}

#[pyclass(name = "QPoly", module = "cyclic_shuffle", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyQPoly(cyclic_shuffle::QPoly);

#[pymethods]
impl PyQPoly {
    /// Builds a polynomial from `(exponent, coefficient)` pairs.
    #[new]
    #[pyo3(signature = (terms=Vec::new()))]
    fn new(terms: Vec<(u32, i64)>) -> Self {
        Self(cyclic_shuffle::QPoly::from_terms(terms))
    }

    #[getter]
    fn terms(&self) -> Vec<(u32, i64)> {
        self.0.terms().to_vec()
    }

    fn coeff(&self, exp: u32) -> i64 {
        self.0.coeff(exp)
    }

    fn degree(&self) -> Option<u32> {
        self.0.degree()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn eval_at_one(&self) -> i64 {
        self.0.eval_at_one()
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(self.0.add(&other.0))
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(self.0.mul(&other.0))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QPoly({})", self.0)
    }
}

fn pair(csigma: &PyCyclicPerm, cpi: &PyCyclicPerm) -> PyResult<CyclicShufflePair> {
    CyclicShufflePair::normalized(csigma.0.clone(), cpi.0.clone()).map_err(err)
}

#[pyfunction]
fn gauss_binomial(n: i64, m: i64) -> PyQPoly {
    PyQPoly(cyclic_shuffle::gauss_binomial(n, m))
}

#[pyfunction]
fn linear_shuffles(sigma: &PyLinearPerm, pi: &PyLinearPerm) -> PyResult<Vec<PyLinearPerm>> {
    let set = shuffle::linear_shuffles(&sigma.0, &pi.0).map_err(err)?;
    Ok(set.into_vec().into_iter().map(PyLinearPerm).collect())
}

#[pyfunction]
fn cyclic_shuffles(csigma: &PyCyclicPerm, cpi: &PyCyclicPerm) -> PyResult<Vec<PyCyclicPerm>> {
    let set = shuffle::cyclic_shuffles(&csigma.0, &cpi.0).map_err(err)?;
    Ok(set.into_vec().into_iter().map(PyCyclicPerm).collect())
}

#[pyfunction]
fn is_circular_subsequence(inner: &PyCyclicPerm, outer: &PyCyclicPerm) -> PyResult<bool> {
    shuffle::is_circular_subsequence(&inner.0, &outer.0).map_err(err)
}

#[pyfunction]
fn stanley_rhs(sigma: &PyLinearPerm, pi: &PyLinearPerm, k: i64) -> PyResult<PyQPoly> {
    theorems::stanley_rhs(&sigma.0, &pi.0, k).map(PyQPoly).map_err(err)
}

#[pyfunction]
fn shuffle_maj_gf(sigma: &PyLinearPerm, pi: &PyLinearPerm, k: i64) -> PyResult<PyQPoly> {
    theorems::shuffle_maj_gf(&sigma.0, &pi.0, k).map(PyQPoly).map_err(err)
}

#[pyfunction]
fn cyclic_stanley_rhs(csigma: &PyCyclicPerm, cpi: &PyCyclicPerm, k: i64) -> PyResult<PyQPoly> {
    Ok(PyQPoly(theorems::cyclic_stanley_rhs(&pair(csigma, cpi)?, k)))
}

#[pyfunction]
fn cyclic_shuffle_maj_gf(csigma: &PyCyclicPerm, cpi: &PyCyclicPerm, k: i64) -> PyResult<PyQPoly> {
    theorems::cyclic_shuffle_maj_gf(&csigma.0, &cpi.0, k).map(PyQPoly).map_err(err)
}

#[pyfunction]
fn agrr_count(m: i64, n: i64, r: i64, s: i64, k: i64) -> PyResult<u64> {
    theorems::agrr_count(m, n, r, s, k).map_err(err)
}

/// Returns `(anchor, word)` for a cyclic shuffle `alpha`.
#[pyfunction]
fn psi_forward(alpha: &PyCyclicPerm, csigma: &PyCyclicPerm, cpi: &PyCyclicPerm) -> PyResult<(u32, PyLinearPerm)> {
    let img = theorems::psi_forward(&alpha.0, &pair(csigma, cpi)?).map_err(err)?;
    Ok((img.anchor, PyLinearPerm(img.word)))
}

#[pyfunction]
fn psi_inverse(
    anchor: u32,
    word: &PyLinearPerm,
    csigma: &PyCyclicPerm,
    cpi: &PyCyclicPerm,
) -> PyResult<PyCyclicPerm> {
    let img = PsiImage {
        anchor,
        word: word.0.clone(),
    };
    theorems::psi_inverse(&img, &pair(csigma, cpi)?).map(PyCyclicPerm).map_err(err)
}

/// Runs a verification sweep and returns the report as a JSON string.
#[pyfunction]
#[pyo3(signature = (max_total=8, theorems="all", oracle_bound=None, sample=None, seed=0, sample_total=None))]
fn run_sweep(
    py: Python<'_>,
    max_total: usize,
    theorems: &str,
    oracle_bound: Option<usize>,
    sample: Option<usize>,
    seed: u64,
    sample_total: Option<usize>,
) -> PyResult<String> {
    let config = SweepConfig {
        max_total,
        oracle_bound: oracle_bound.unwrap_or(DEFAULT_SWEEP_ORACLE_BOUND.min(max_total)),
        theorems: parse_theorems(theorems).map_err(err)?,
        sample: sample.map(|count| Sample {
            count,
            seed,
            total: sample_total.unwrap_or(DEFAULT_SAMPLE_TOTAL.max(max_total + 1)),
        }),
        ..SweepConfig::default()
    };
    let report = py.detach(|| cyclic_shuffle::run_sweep(&config)).map_err(err)?;
    Ok(report::to_json(&report))
}

#[pymodule]
#[pyo3(name = "cyclic_shuffle")]
fn cyclic_shuffle_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLinearPerm>()?;
    m.add_class::<PyCyclicPerm>()?;
    m.add_class::<PyQPoly>()?;
    m.add_function(wrap_pyfunction!(gauss_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(linear_shuffles, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_shuffles, m)?)?;
    m.add_function(wrap_pyfunction!(is_circular_subsequence, m)?)?;
    m.add_function(wrap_pyfunction!(stanley_rhs, m)?)?;
    m.add_function(wrap_pyfunction!(shuffle_maj_gf, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_stanley_rhs, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_shuffle_maj_gf, m)?)?;
    m.add_function(wrap_pyfunction!(agrr_count, m)?)?;
    m.add_function(wrap_pyfunction!(psi_forward, m)?)?;
    m.add_function(wrap_pyfunction!(psi_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(run_sweep, m)?)?;
    Ok(())
}
