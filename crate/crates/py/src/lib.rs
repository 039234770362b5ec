//! Python bindings. Reports come back as plain dicts and lists; graphs are
//! immutable `Graph` objects.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyType;
use serde::Serialize;

use hypodom_core::canon::{are_isomorphic, canonical_form};
use hypodom_core::domination::{self, enumerate_min_dominating_sets};
use hypodom_core::eds::{self, enumerate_eds};
use hypodom_core::families;
use hypodom_core::harness::{self, ClaimId, ClaimParams, ProblemId, SearchLimits};
use hypodom_core::hypo;
use hypodom_core::io::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use hypodom_core::{CirculantSpec, Error, VertexSet};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Round-trips a serde value through Python's `json` module.
fn to_python<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn sets(list: &[VertexSet]) -> Vec<Vec<usize>> {
    list.iter().map(VertexSet::to_vec).collect()
}

#[pyclass(name = "Graph", module = "hypodom", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyGraph(hypodom_core::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        hypodom_core::Graph::from_edges(n, &edges).map(PyGraph).map_err(err)
    }

    #[classmethod]
    fn from_graph6(_cls: &Bound<'_, PyType>, text: &str) -> PyResult<Self> {
        parse_graph6(text).map(PyGraph).map_err(err)
    }

    /// `n m` header followed by `m` lines `u v`.
    #[classmethod]
    fn from_edge_list(_cls: &Bound<'_, PyType>, text: &str) -> PyResult<Self> {
        parse_edge_list(text).map(PyGraph).map_err(err)
    }

    fn to_graph6(&self) -> String {
        write_graph6(&self.0)
    }

    fn to_edge_list(&self) -> String {
        write_edge_list(&self.0)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn __len__(&self) -> usize {
        self.0.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={}, g6={:?})", self.0.order(), self.0.size(), write_graph6(&self.0))
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.check(v)?;
        Ok(self.0.neighbors(v).to_vec())
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.check(v)?;
        Ok(self.0.degree(v))
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.0.order() && v < self.0.order() && self.0.has_edge(u, v)
    }

    fn min_degree(&self) -> usize {
        self.0.min_degree()
    }

    fn max_degree(&self) -> usize {
        self.0.max_degree()
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn is_regular(&self) -> bool {
        self.0.is_regular()
    }

    fn complement(&self) -> Self {
        PyGraph(self.0.complement())
    }

    fn corona(&self) -> Self {
        PyGraph(self.0.corona())
    }

    fn disjoint_union(&self, other: &PyGraph) -> Self {
        PyGraph(self.0.disjoint_union(&other.0))
    }

    fn coalescence(&self, u: usize, other: &PyGraph, v: usize) -> PyResult<Self> {
        self.0.coalescence(u, &other.0, v).map(PyGraph).map_err(err)
    }

    fn delete_vertex(&self, v: usize) -> PyResult<Self> {
        self.0.delete_vertex(v).map(PyGraph).map_err(err)
    }

    fn delete_edge(&self, u: usize, v: usize) -> PyResult<Self> {
        self.0.delete_edge(u, v).map(PyGraph).map_err(err)
    }

    fn add_edge(&self, u: usize, v: usize) -> PyResult<Self> {
        self.0.add_edge(u, v).map(PyGraph).map_err(err)
    }

    fn canonical(&self) -> PyResult<Self> {
        canonical_form(&self.0).map(PyGraph).map_err(err)
    }

    fn is_isomorphic(&self, other: &PyGraph) -> PyResult<bool> {
        are_isomorphic(&self.0, &other.0).map_err(err)
    }
}

impl PyGraph {
    fn check(&self, v: usize) -> PyResult<()> {
        if v < self.0.order() {
            Ok(())
        } else {
            Err(err(Error::VertexOutOfRange { vertex: v, n: self.0.order() }))
        }
    }
}

#[pyfunction]
fn cycle(n: usize) -> PyResult<PyGraph> {
    if n < 3 {
        return Err(PyValueError::new_err("a cycle needs n >= 3"));
    }
    Ok(PyGraph(families::cycle(n)))
}

#[pyfunction]
fn path(n: usize) -> PyGraph {
    PyGraph(families::path(n))
}

#[pyfunction]
fn complete(n: usize) -> PyGraph {
    PyGraph(families::complete(n))
}

#[pyfunction]
fn complete_minus_perfect_matching(n: usize) -> PyResult<PyGraph> {
    families::complete_minus_perfect_matching(n).map(PyGraph).map_err(err)
}

#[pyfunction]
fn circulant(n: usize, connections: Vec<usize>) -> PyResult<PyGraph> {
    CirculantSpec::new(n, connections).map(|s| PyGraph(families::circulant(&s))).map_err(err)
}

#[pyfunction]
fn extr1(k: usize, t: usize) -> PyResult<PyGraph> {
    families::extr1_spec(k, t).map(|s| PyGraph(families::circulant(&s))).map_err(err)
}

#[pyfunction]
fn extr2(k: usize) -> PyResult<PyGraph> {
    families::extr2_spec(k).map(|s| PyGraph(families::circulant(&s))).map_err(err)
}

#[pyfunction]
fn bull() -> PyGraph {
    PyGraph(families::bull())
}

#[pyfunction]
fn domination_number(g: &PyGraph) -> usize {
    domination::domination_number(&g.0)
}

#[pyfunction]
fn minimum_dominating_set(g: &PyGraph) -> Vec<usize> {
    domination::minimum_dominating_set(&g.0).to_vec()
}

/// Returns `(exact_count, sets)`; at most `cap` sets are listed.
#[pyfunction]
#[pyo3(signature = (g, cap = None))]
fn gamma_sets(py: Python<'_>, g: &PyGraph, cap: Option<usize>) -> (u64, Vec<Vec<usize>>) {
    let found = py.detach(|| enumerate_min_dominating_sets(&g.0, cap.unwrap_or(usize::MAX)));
    (found.count, sets(&found.sets))
}

#[pyfunction]
fn has_eds(g: &PyGraph) -> bool {
    eds::has_eds(&g.0)
}

/// Returns `(exact_count, sets)`; at most `cap` sets are listed.
#[pyfunction]
#[pyo3(signature = (g, cap = None))]
fn efficient_dominating_sets(g: &PyGraph, cap: Option<usize>) -> (u64, Vec<Vec<usize>>) {
    let found = enumerate_eds(&g.0, cap.unwrap_or(usize::MAX));
    (found.count, sets(&found.sets))
}

/// `None` when no removal of at most `cap` edges raises γ.
#[pyfunction]
#[pyo3(signature = (g, cap = None))]
fn bondage_number(py: Python<'_>, g: &PyGraph, cap: Option<usize>) -> PyResult<Option<usize>> {
    py.detach(|| domination::bondage_number(&g.0, cap)).map_err(err)
}

#[pyfunction]
fn is_vc_graph(g: &PyGraph) -> bool {
    domination::is_vc_graph(&g.0)
}

#[pyfunction]
fn is_hypo_ed(g: &PyGraph) -> bool {
    hypo::is_hypo_ed(&g.0)
}

#[pyfunction]
fn is_hypo_ud(g: &PyGraph) -> bool {
    hypo::is_hypo_ud(&g.0)
}

#[pyfunction]
fn classify<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let report = py.detach(|| hypo::classify(&g.0));
    to_python(py, &report)
}

#[pyfunction]
fn exception_catalog() -> PyResult<Vec<PyGraph>> {
    let catalog = harness::derive_exception_catalog().map_err(err)?;
    Ok(catalog.graphs.into_iter().map(PyGraph).collect())
}

fn owned(stream: Option<Vec<PyRef<'_, PyGraph>>>) -> Option<Vec<hypodom_core::Graph>> {
    stream.map(|graphs| graphs.iter().map(|g| g.0.clone()).collect())
}

#[pyfunction]
#[pyo3(signature = (claim, max_n = None, k_max = None, stream = None))]
fn verify_claim<'py>(
    py: Python<'py>,
    claim: &str,
    max_n: Option<usize>,
    k_max: Option<usize>,
    stream: Option<Vec<PyRef<'py, PyGraph>>>,
) -> PyResult<Bound<'py, PyAny>> {
    let id: ClaimId = claim.parse().map_err(err)?;
    let params = ClaimParams { max_n, k_max, stream: owned(stream), ..Default::default() };
    let report = py.detach(|| harness::verify_claim(id, &params)).map_err(err)?;
    to_python(py, &report)
}

#[pyfunction]
fn claim_ids() -> Vec<&'static str> {
    ClaimId::ALL.iter().map(|c| c.as_str()).collect()
}

#[pyfunction]
#[pyo3(signature = (problem, stream = None, max_n = None))]
fn search<'py>(
    py: Python<'py>,
    problem: &str,
    stream: Option<Vec<PyRef<'py, PyGraph>>>,
    max_n: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let id: ProblemId = problem.parse().map_err(err)?;
    let graphs = owned(stream);
    let limits = SearchLimits { max_n };
    let report = py.detach(|| harness::search_open_problems(id, graphs.as_deref(), &limits)).map_err(err)?;
    to_python(py, &report)
}

#[pyfunction]
#[pyo3(signature = (n, connected = false))]
fn graphs_of_order(n: usize, connected: bool) -> PyResult<Vec<PyGraph>> {
    let graphs = hypodom_core::enumerate::graphs_in_range(n, n, connected).map_err(err)?;
    Ok(graphs.into_iter().map(PyGraph).collect())
}

#[pymodule]
fn hypodom(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(path, m)?)?;
    m.add_function(wrap_pyfunction!(complete, m)?)?;
    m.add_function(wrap_pyfunction!(complete_minus_perfect_matching, m)?)?;
    m.add_function(wrap_pyfunction!(circulant, m)?)?;
    m.add_function(wrap_pyfunction!(extr1, m)?)?;
    m.add_function(wrap_pyfunction!(extr2, m)?)?;
    m.add_function(wrap_pyfunction!(bull, m)?)?;
    m.add_function(wrap_pyfunction!(domination_number, m)?)?;
    m.add_function(wrap_pyfunction!(minimum_dominating_set, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_sets, m)?)?;
    m.add_function(wrap_pyfunction!(has_eds, m)?)?;
    m.add_function(wrap_pyfunction!(efficient_dominating_sets, m)?)?;
    m.add_function(wrap_pyfunction!(bondage_number, m)?)?;
    m.add_function(wrap_pyfunction!(is_vc_graph, m)?)?;
    m.add_function(wrap_pyfunction!(is_hypo_ed, m)?)?;
    m.add_function(wrap_pyfunction!(is_hypo_ud, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(exception_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(verify_claim, m)?)?;
    m.add_function(wrap_pyfunction!(claim_ids, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    m.add_function(wrap_pyfunction!(graphs_of_order, m)?)?;
    Ok(())
}
