//! Python bindings: exact values come back as `fractions.Fraction`, alpha
//! arguments accept anything whose `str()` is an integer or `p/q`.

use kerov_core::clt::{run_clt, w_statistic, Normalization};
use kerov_core::exact::format_scalar;
use kerov_core::growth::{sample_path as core_sample_path, up_distribution};
use kerov_core::measures::{dim_alpha as core_dim_alpha, jack_weight as core_jack_weight};
use kerov_core::moments::{jack_expect_s as core_jack_expect_s, s_moment_bruteforce};
use kerov_core::{Alpha, Error, Partition, Scalar};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Domain(_) | Error::Parse(_) | Error::Unsupported(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn alpha_arg(obj: &Bound<'_, PyAny>) -> PyResult<Alpha> {
    obj.str()?.to_str()?.parse::<Alpha>().map_err(to_py_err)
}

fn partition_arg(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts).map_err(to_py_err)
}

fn fraction<'py>(py: Python<'py>, x: &Scalar) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((format_scalar(x),))
}

/// All partitions of `n` in reverse lexicographic order.
#[pyfunction]
fn partitions(n: usize) -> Vec<Vec<usize>> {
    kerov_core::partitions_of(n).map(|p| p.parts().to_vec()).collect()
}

#[pyfunction]
fn conjugate(parts: Vec<usize>) -> PyResult<Vec<usize>> {
    Ok(partition_arg(parts)?.conjugate().parts().to_vec())
}

/// Jack measure of a partition; `alpha = 1` is Plancherel measure.
#[pyfunction]
#[pyo3(signature = (parts, alpha = None))]
fn jack_weight<'py>(
    py: Python<'py>,
    parts: Vec<usize>,
    alpha: Option<&Bound<'py, PyAny>>,
) -> PyResult<Bound<'py, PyAny>> {
    let a = alpha.map(alpha_arg).transpose()?.unwrap_or_else(Alpha::one);
    fraction(py, &core_jack_weight(&partition_arg(parts)?, &a))
}

#[pyfunction]
fn dim_alpha<'py>(py: Python<'py>, parts: Vec<usize>, alpha: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &core_dim_alpha(&partition_arg(parts)?, &alpha_arg(alpha)?))
}

/// Coefficient of `p_mu` in the Jack polynomial `J_lambda`.
#[pyfunction]
fn theta<'py>(
    py: Python<'py>,
    lam: Vec<usize>,
    mu: Vec<usize>,
    alpha: &Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyAny>> {
    let value = kerov_core::jack::theta(&partition_arg(lam)?, &partition_arg(mu)?, &alpha_arg(alpha)?)
        .map_err(to_py_err)?;
    fraction(py, &value)
}

/// Irreducible character value `chi^lam` on the class `mu`.
#[pyfunction]
fn character(lam: Vec<usize>, mu: Vec<usize>) -> PyResult<i64> {
    let lam = partition_arg(lam)?;
    let table = kerov_core::group::character_table(lam.size()).map_err(to_py_err)?;
    table.value(&lam, &partition_arg(mu)?).map_err(to_py_err)
}

/// Kerov growth transitions out of `lam` as `(target, probability)` pairs.
#[pyfunction]
fn up_transitions<'py>(
    py: Python<'py>,
    lam: Vec<usize>,
    alpha: &Bound<'py, PyAny>,
) -> PyResult<Vec<(Vec<usize>, Bound<'py, PyAny>)>> {
    let dist = up_distribution(&partition_arg(lam)?, &alpha_arg(alpha)?);
    dist.targets
        .iter()
        .map(|(t, p)| Ok((t.parts().to_vec(), fraction(py, p)?)))
        .collect()
}

/// Cells `(row, col)` added along one seeded growth path of length `n`.
#[pyfunction]
fn sample_path(n: usize, alpha: &Bound<'_, PyAny>, seed: u64) -> PyResult<Vec<(usize, usize)>> {
    let path = core_sample_path(n, &alpha_arg(alpha)?, seed).map_err(to_py_err)?;
    Ok(path.added_cells().iter().map(|c| (c.row, c.col)).collect())
}

/// `E(c_alpha(new cell)^r)` for one growth step out of `lam`.
#[pyfunction]
fn content_moment<'py>(
    py: Python<'py>,
    lam: Vec<usize>,
    r: usize,
    alpha: &Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &s_moment_bruteforce(&partition_arg(lam)?, r, &alpha_arg(alpha)?))
}

/// The same moment averaged over Jack measure on partitions of `n`.
#[pyfunction]
fn jack_expect_s<'py>(
    py: Python<'py>,
    n: usize,
    r: usize,
    alpha: &Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &core_jack_expect_s(n, r, &alpha_arg(alpha)?).map_err(to_py_err)?)
}

#[pyfunction]
fn w(lam: Vec<usize>, alpha: &Bound<'_, PyAny>) -> PyResult<f64> {
    w_statistic(&partition_arg(lam)?, &alpha_arg(alpha)?).map_err(to_py_err)
}

/// Monte Carlo Kolmogorov distance of `W` to the normal, one dict per size.
#[pyfunction]
#[pyo3(signature = (n_grid, alpha, samples, seed, delta = 1.0, normalization = "canonical"))]
fn clt<'py>(
    py: Python<'py>,
    n_grid: Vec<usize>,
    alpha: &Bound<'py, PyAny>,
    samples: usize,
    seed: u64,
    delta: f64,
    normalization: &str,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let norm: Normalization = normalization.parse().map_err(to_py_err)?;
    let a = alpha_arg(alpha)?;
    let exp = py
        .detach(|| run_clt(&n_grid, &a, samples, seed, delta, norm))
        .map_err(to_py_err)?;
    exp.results
        .iter()
        .map(|row| {
            let d = PyDict::new(py);
            d.set_item("n", row.n)?;
            d.set_item("ks", row.ks)?;
            d.set_item("mean", row.mean)?;
            d.set_item("var", row.var)?;
            d.set_item("l_delta", row.l_delta)?;
            Ok(d)
        })
        .collect()
}

/// Runs the exact identity suite; returns `(all_pass, number_of_reports)`.
#[pyfunction]
fn verify(py: Python<'_>, max_n: usize, alphas: Vec<Bound<'_, PyAny>>) -> PyResult<(bool, usize)> {
    let alphas: Vec<Alpha> = alphas.iter().map(alpha_arg).collect::<PyResult<_>>()?;
    let outcome = py.detach(|| kerov_core::verify::run_suite(max_n, &alphas));
    if let Some(e) = outcome.resource_error {
        return Err(to_py_err(e));
    }
    Ok((outcome.all_pass(), outcome.reports.len()))
}

#[pymodule]
fn kerov(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(jack_weight, m)?)?;
    m.add_function(wrap_pyfunction!(dim_alpha, m)?)?;
    m.add_function(wrap_pyfunction!(theta, m)?)?;
    m.add_function(wrap_pyfunction!(character, m)?)?;
    m.add_function(wrap_pyfunction!(up_transitions, m)?)?;
    m.add_function(wrap_pyfunction!(sample_path, m)?)?;
    m.add_function(wrap_pyfunction!(content_moment, m)?)?;
    m.add_function(wrap_pyfunction!(jack_expect_s, m)?)?;
    m.add_function(wrap_pyfunction!(w, m)?)?;
    m.add_function(wrap_pyfunction!(clt, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
