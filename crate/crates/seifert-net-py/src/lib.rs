//! Python bindings over the surgery-network library: classification,
//! Seifert-invariant algebra, seiferter twists, catalog lookups, graph
//! exports, and the verification sweeps.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use seifert_net_core::network::GRAPH_SCHEMA_VERSION;
use seifert_net_core::twist::ScriptStep;
use seifert_net_core::verify::VerifyBounds;
use seifert_net_core::{
    build_figure2, build_subcomplex_t, canonical_torus_knot, classify_surgery, run_all,
    spreader_slope, surgered_invariants, twist_along_seiferter, twist_sequence, Catalog,
    LensSpace, NetworkGraph, SeifertInvariants, SeifertSurgery, TorusKnotId,
};

fn value_err(err: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn knot(p: i64, q: i64) -> PyResult<TorusKnotId> {
    canonical_torus_knot(p, q).map_err(value_err)
}

fn invariants_from(b: i64, fibers: Vec<(i64, i64)>) -> PyResult<SeifertInvariants> {
    SeifertInvariants::new(b, &fibers).map_err(value_err)
}

fn invariants_dict<'py>(
    py: Python<'py>,
    invariants: &SeifertInvariants,
) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    dict.set_item("b", invariants.b())?;
    let fibers: Vec<(i64, i64)> = invariants
        .fibers()
        .iter()
        .map(|f| (f.alpha, f.beta))
        .collect();
    dict.set_item("fibers", fibers)?;
    dict.set_item("degenerate", invariants.is_degenerate())?;
    Ok(dict)
}

/// Classification report for `m`-surgery on the torus knot `T(p, q)`.
#[pyfunction]
fn classify<'py>(py: Python<'py>, p: i64, q: i64, m: i64) -> PyResult<Bound<'py, PyDict>> {
    let host = knot(p, q)?;
    let description = if host.is_unknot() {
        seifert_net_core::classify::unknot_surgery(m)
    } else {
        classify_surgery(host.p(), host.q(), m).map_err(value_err)?
    };
    let invariants = if host.is_unknot() {
        Some(SeifertInvariants::new(m, &[]).expect("empty fiber list is valid"))
    } else if m == host.fiber_slope() {
        None
    } else {
        let raw = surgered_invariants(host.p(), host.q(), m).map_err(value_err)?;
        Some(raw.normalize().map_err(value_err)?)
    };
    let dict = PyDict::new(py);
    dict.set_item("host", host.label())?;
    dict.set_item("slope", m)?;
    dict.set_item("summary", description.to_string())?;
    dict.set_item("first_homology_order", description.first_homology_order())?;
    dict.set_item("spreader", spreader_slope(host, m))?;
    match &invariants {
        Some(invariants) => dict.set_item("invariants", invariants_dict(py, invariants)?)?,
        None => dict.set_item("invariants", py.None())?,
    }
    Ok(dict)
}

/// Seiferters the catalog places at `m`-surgery on `T(p, q)`.
#[pyfunction]
fn seiferters_at<'py>(py: Python<'py>, p: i64, q: i64, m: i64) -> PyResult<Bound<'py, PyList>> {
    let host = knot(p, q)?;
    let entries = Catalog::embedded().lookup(host, m).map_err(value_err)?;
    let list = PyList::empty(py);
    for entry in entries {
        let dict = PyDict::new(py);
        dict.set_item("id", &entry.id)?;
        dict.set_item("kind", entry.kind.to_string())?;
        dict.set_item("linking", entry.linking_magnitude)?;
        dict.set_item("linking_sign", entry.linking_sign)?;
        dict.set_item("hyperbolic", entry.hyperbolic)?;
        dict.set_item("irrelevant_for_twisting", entry.irrelevant_for_twisting)?;
        dict.set_item("aliases", entry.aliases.clone())?;
        dict.set_item("n", entry.n)?;
        list.append(dict)?;
    }
    Ok(list)
}

fn surgery_dict<'py>(py: Python<'py>, surgery: &SeifertSurgery) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    dict.set_item("key", surgery.key())?;
    dict.set_item("knot", surgery.knot.label())?;
    dict.set_item("slope", surgery.slope)?;
    let classification = surgery.knot.as_torus().and_then(|torus| {
        if torus.is_unknot() {
            Some(seifert_net_core::classify::unknot_surgery(surgery.slope).to_string())
        } else {
            classify_surgery(torus.p(), torus.q(), surgery.slope)
                .ok()
                .map(|d| d.to_string())
        }
    });
    dict.set_item("classification", classification)?;
    Ok(dict)
}

/// One twist along a cataloged seiferter, starting from `m`-surgery on
/// `T(p, q)`.
#[pyfunction]
fn twist<'py>(
    py: Python<'py>,
    p: i64,
    q: i64,
    m: i64,
    seiferter: &str,
    turns: i64,
) -> PyResult<Bound<'py, PyDict>> {
    let start = SeifertSurgery::torus(knot(p, q)?, m);
    let result =
        twist_along_seiferter(Catalog::embedded(), &start, seiferter, turns).map_err(value_err)?;
    surgery_dict(py, &result)
}

/// A sequence of `(seiferter, turns)` twists, applied left to right.
#[pyfunction]
fn twist_script<'py>(
    py: Python<'py>,
    p: i64,
    q: i64,
    m: i64,
    steps: Vec<(String, i64)>,
) -> PyResult<Bound<'py, PyDict>> {
    let start = SeifertSurgery::torus(knot(p, q)?, m);
    let script: Vec<ScriptStep> = steps
        .into_iter()
        .map(|(seiferter, turns)| ScriptStep { seiferter, turns })
        .collect();
    let result = twist_sequence(Catalog::embedded(), &start, &script).map_err(value_err)?;
    surgery_dict(py, &result)
}

/// Normalized form of the invariants `(b; beta_1/alpha_1, ...)`.
#[pyfunction]
fn normalize(b: i64, fibers: Vec<(i64, i64)>) -> PyResult<(i64, Vec<(i64, i64)>)> {
    let normalized = invariants_from(b, fibers)?.normalize().map_err(value_err)?;
    Ok((
        normalized.b(),
        normalized.fibers().iter().map(|f| (f.alpha, f.beta)).collect(),
    ))
}

/// Euler number of the fibration as an exact `(numerator, denominator)`.
#[pyfunction]
fn euler_number(b: i64, fibers: Vec<(i64, i64)>) -> PyResult<(i64, i64)> {
    let e = invariants_from(b, fibers)?.euler_number().map_err(value_err)?;
    Ok((*e.numer(), *e.denom()))
}

/// Order of the first homology group; `0` means infinite.
#[pyfunction]
fn first_homology_order(b: i64, fibers: Vec<(i64, i64)>) -> PyResult<u64> {
    invariants_from(b, fibers)?
        .first_homology_order()
        .map_err(value_err)
}

/// Canonical `(p, q)` parameters of the lens space `L(p, q)`.
#[pyfunction]
fn lens_canonical(p: i64, q: i64) -> PyResult<(u64, u64)> {
    let space = LensSpace::new(p, q).map_err(value_err)?;
    Ok((space.p(), space.q()))
}

/// Whether `L(p1, q1)` and `L(p2, q2)` are homeomorphic, oriented or not.
#[pyfunction]
#[pyo3(signature = (p1, q1, p2, q2, oriented = false))]
fn lens_equivalent(p1: i64, q1: i64, p2: i64, q2: i64, oriented: bool) -> PyResult<bool> {
    let a = LensSpace::new(p1, q1).map_err(value_err)?;
    let b = LensSpace::new(p2, q2).map_err(value_err)?;
    Ok(if oriented {
        a.oriented_equivalent(&b)
    } else {
        a.unoriented_equivalent(&b)
    })
}

/// First homology order of `m`-surgery on `T(p, q)` away from the fiber
/// slope, via the surgered Seifert invariants.
#[pyfunction]
fn surgery_homology_order(p: i64, q: i64, m: i64) -> PyResult<u64> {
    surgered_invariants(p, q, m)
        .map_err(value_err)?
        .first_homology_order()
        .map_err(value_err)
}

fn figure2_graph() -> PyResult<NetworkGraph> {
    build_figure2(Catalog::embedded()).map_err(value_err)
}

fn subcomplex_graph(p_max: i64, radius: i64) -> PyResult<NetworkGraph> {
    build_subcomplex_t(p_max, radius).map_err(value_err)
}

/// DOT rendering of the worked-example slice of the network.
#[pyfunction]
fn figure2_dot() -> PyResult<String> {
    Ok(figure2_graph()?.export_dot())
}

/// JSON rendering of the worked-example slice of the network.
#[pyfunction]
fn figure2_json() -> PyResult<String> {
    Ok(figure2_graph()?.export_json())
}

/// DOT rendering of the torus-knot subcomplex within the given bounds.
#[pyfunction]
fn subcomplex_dot(p_max: i64, radius: i64) -> PyResult<String> {
    Ok(subcomplex_graph(p_max, radius)?.export_dot())
}

/// JSON rendering of the torus-knot subcomplex within the given bounds.
#[pyfunction]
fn subcomplex_json(p_max: i64, radius: i64) -> PyResult<String> {
    Ok(subcomplex_graph(p_max, radius)?.export_json())
}

/// Shortest path from the vertex with the given key to a torus-knot
/// vertex, as a list of keys; `None` when unreachable.  Searches the
/// worked-example slice unless both bounds are given.
#[pyfunction]
#[pyo3(signature = (key, p_max = None, radius = None))]
fn path_to_torus(key: &str, p_max: Option<i64>, radius: Option<i64>) -> PyResult<Option<Vec<String>>> {
    let graph = match (p_max, radius) {
        (Some(p_max), Some(radius)) => subcomplex_graph(p_max, radius)?,
        (None, None) => figure2_graph()?,
        _ => {
            return Err(PyValueError::new_err(
                "p_max and radius must be given together",
            ))
        }
    };
    let start = graph
        .vertices()
        .iter()
        .find(|v| v.key() == key)
        .cloned()
        .ok_or_else(|| PyValueError::new_err(format!("vertex {key} is not in the graph")))?;
    let path = graph.find_path_to_torus(&start).map_err(value_err)?;
    Ok(path.map(|steps| steps.iter().map(SeifertSurgery::key).collect()))
}

/// Runs every verification sweep and reports per-check outcomes.
#[pyfunction]
#[pyo3(signature = (
    x_max = 99,
    b_span = 10,
    pq_max = 60,
    n_max = 10_000,
    p_max_meridian = 100,
    slope_n_max = 1_000,
    workers = 0,
))]
fn verify<'py>(
    py: Python<'py>,
    x_max: i64,
    b_span: i64,
    pq_max: i64,
    n_max: i64,
    p_max_meridian: i64,
    slope_n_max: i64,
    workers: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let bounds = VerifyBounds {
        x_max,
        b_span,
        pq_max,
        n_max,
        p_max_meridian,
        slope_n_max,
    };
    let report = run_all(&bounds, workers);
    let records = PyList::empty(py);
    for record in &report.records {
        let dict = PyDict::new(py);
        dict.set_item("name", &record.name)?;
        dict.set_item("parameters", &record.parameters)?;
        dict.set_item("cases_checked", record.cases_checked)?;
        dict.set_item("passed", record.passed)?;
        dict.set_item("counterexample", record.counterexample.clone())?;
        records.append(dict)?;
    }
    let out = PyDict::new(py);
    out.set_item("passed", report.passed)?;
    out.set_item("records", records)?;
    Ok(out)
}

#[pymodule]
fn seifert_net(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("GRAPH_SCHEMA_VERSION", GRAPH_SCHEMA_VERSION)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(seiferters_at, m)?)?;
    m.add_function(wrap_pyfunction!(twist, m)?)?;
    m.add_function(wrap_pyfunction!(twist_script, m)?)?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(euler_number, m)?)?;
    m.add_function(wrap_pyfunction!(first_homology_order, m)?)?;
    m.add_function(wrap_pyfunction!(lens_canonical, m)?)?;
    m.add_function(wrap_pyfunction!(lens_equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(surgery_homology_order, m)?)?;
    m.add_function(wrap_pyfunction!(figure2_dot, m)?)?;
    m.add_function(wrap_pyfunction!(figure2_json, m)?)?;
    m.add_function(wrap_pyfunction!(subcomplex_dot, m)?)?;
    m.add_function(wrap_pyfunction!(subcomplex_json, m)?)?;
    m.add_function(wrap_pyfunction!(path_to_torus, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
