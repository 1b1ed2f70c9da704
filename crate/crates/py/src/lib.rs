//! Python bindings. Graphs cross the boundary as `Graph` objects, results as
//! plain lists, and reports and certificates as JSON strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use minorforge as mf;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn pattern(name: &str) -> PyResult<mf::Pattern> {
    mf::Pattern::parse(name).map_err(err)
}

#[pyclass(name = "Graph", module = "minorforge_py", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph(mf::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        mf::Graph::from_edges(n, &edges).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        mf::parse_graph6(text.trim()).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn named(pattern_name: &str) -> PyResult<Self> {
        Ok(PyGraph(pattern(pattern_name)?.graph().clone()))
    }

    fn graph6(&self) -> String {
        mf::emit_graph6(&self.0)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().collect()
    }

    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.0.n() && v < self.0.n() && self.0.has_edge(u, v)
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.0.check_vertex(v).map_err(err)?;
        Ok(self.0.degree(v))
    }

    fn complement(&self) -> Self {
        PyGraph(self.0.complement())
    }

    fn contract_edge(&self, u: usize, v: usize) -> PyResult<Self> {
        self.0.contract_edge(u, v).map(PyGraph).map_err(err)
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn canonical_form(&self) -> String {
        mf::canonical_form(&self.0).as_str().to_string()
    }

    fn is_isomorphic(&self, other: &PyGraph) -> bool {
        mf::isomorphic(&self.0, &other.0)
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.rows().hash(&mut h);
        h.finish()
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", mf::emit_graph6(&self.0))
    }
}

fn bags(m: &mf::Model) -> Vec<Vec<usize>> {
    m.bags.iter().map(|b| b.to_vec()).collect()
}

/// Bags of a model of the named pattern, or `None`.
#[pyfunction]
fn find_model(py: Python<'_>, g: &PyGraph, pattern_name: &str) -> PyResult<Option<Vec<Vec<usize>>>> {
    let p = pattern(pattern_name)?;
    Ok(py.detach(|| mf::find_model(&g.0, &p)).as_ref().map(bags))
}

/// Bags of a model with the pattern's roots bound to `roots`, or `None`.
#[pyfunction]
fn find_rooted_model(
    py: Python<'_>,
    g: &PyGraph,
    pattern_name: &str,
    roots: Vec<usize>,
) -> PyResult<Option<Vec<Vec<usize>>>> {
    let p = pattern(pattern_name)?;
    let found = py.detach(|| mf::find_rooted_model(&g.0, &p, &roots)).map_err(err)?;
    Ok(found.as_ref().map(bags))
}

/// JSON certificate of a (rooted) model search, found or not.
#[pyfunction]
#[pyo3(signature = (g, pattern_name, roots = Vec::new()))]
fn model_certificate(py: Python<'_>, g: &PyGraph, pattern_name: &str, roots: Vec<usize>) -> PyResult<String> {
    let p = pattern(pattern_name)?;
    let cert = py.detach(|| -> PyResult<mf::Certificate> {
        let found = if roots.is_empty() {
            mf::find_model(&g.0, &p)
        } else {
            mf::find_rooted_model(&g.0, &p, &roots).map_err(err)?
        };
        Ok(match found {
            Some(m) => mf::Certificate::from_model(&m),
            None => mf::Certificate::no_model(&g.0, &p, &roots),
        })
    })?;
    Ok(mf::write_certificate(&cert))
}

#[pyfunction]
fn has_subgraph(g: &PyGraph, pattern_name: &str) -> PyResult<Option<Vec<usize>>> {
    Ok(mf::has_subgraph(&g.0, pattern(pattern_name)?.graph()))
}

#[pyfunction]
fn chromatic_number(py: Python<'_>, g: &PyGraph) -> usize {
    py.detach(|| mf::chromatic_number(&g.0))
}

#[pyfunction]
fn find_coloring(py: Python<'_>, g: &PyGraph, k: usize) -> Option<Vec<usize>> {
    py.detach(|| mf::find_coloring(&g.0, k)).map(|c| c.colors().to_vec())
}

#[pyfunction]
fn clique_number(g: &PyGraph) -> usize {
    mf::clique_number(&g.0)
}

#[pyfunction]
fn independence_number(g: &PyGraph) -> usize {
    mf::independence_number(&g.0)
}

#[pyfunction]
fn two_disjoint_paths(
    g: &PyGraph,
    s1: usize,
    t1: usize,
    s2: usize,
    t2: usize,
) -> PyResult<Option<(Vec<usize>, Vec<usize>)>> {
    mf::two_disjoint_paths(&g.0, s1, t1, s2, t2).map_err(err)
}

#[pyfunction]
fn is_k_connected(g: &PyGraph, k: usize) -> bool {
    mf::is_k_connected(&g.0, k)
}

#[pyfunction]
fn vertex_connectivity(g: &PyGraph) -> usize {
    mf::vertex_connectivity(&g.0)
}

#[pyfunction]
fn is_internally_k_connected(g: &PyGraph, z: Vec<usize>, k: usize) -> PyResult<bool> {
    for &v in &z {
        g.0.check_vertex(v).map_err(err)?;
    }
    Ok(mf::is_internally_k_connected(&g.0, mf::VertexSet::from_vertices(z), k))
}

/// One canonical representative per isomorphism class, in canonical order.
#[pyfunction]
#[pyo3(signature = (n, min_edges = 0, max_edges = None, min_connectivity = 0))]
fn generate_graphs(
    py: Python<'_>,
    n: usize,
    min_edges: usize,
    max_edges: Option<usize>,
    min_connectivity: usize,
) -> PyResult<Vec<PyGraph>> {
    let mut f = mf::GraphFilter::new(n).min_edges(min_edges).min_connectivity(min_connectivity);
    f.max_edges = max_edges;
    let graphs = py.detach(|| mf::generate_graphs(&f)).map_err(err)?;
    Ok(graphs.into_iter().map(PyGraph).collect())
}

/// Runs a verification sweep and returns its JSON report.
#[pyfunction]
#[pyo3(signature = (claim, n, jobs = 1, graphs = None))]
fn verify(py: Python<'_>, claim: &str, n: usize, jobs: usize, graphs: Option<Vec<PyGraph>>) -> PyResult<String> {
    let opts = mf::Options { jobs, input: graphs.map(|v| v.into_iter().map(|g| g.0).collect()), keep_witnesses: false };
    let report = py.detach(|| mf::verify::verify(claim, n, &opts)).map_err(err)?;
    Ok(report.to_json(false))
}

/// Parses and revalidates certificates; returns how many there were.
#[pyfunction]
fn check_certificates(text: &str) -> PyResult<usize> {
    mf::read_certificates(text).map(|c| c.len()).map_err(err)
}

#[pyfunction]
fn pattern_roster() -> Vec<String> {
    mf::pattern_roster().iter().map(|p| p.name()).collect()
}

#[pymodule]
fn minorforge_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", mf::verify::VERSION)?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(find_model, m)?)?;
    m.add_function(wrap_pyfunction!(find_rooted_model, m)?)?;
    m.add_function(wrap_pyfunction!(model_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(has_subgraph, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_number, m)?)?;
    m.add_function(wrap_pyfunction!(find_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(clique_number, m)?)?;
    m.add_function(wrap_pyfunction!(independence_number, m)?)?;
    m.add_function(wrap_pyfunction!(two_disjoint_paths, m)?)?;
    m.add_function(wrap_pyfunction!(is_k_connected, m)?)?;
    m.add_function(wrap_pyfunction!(vertex_connectivity, m)?)?;
    m.add_function(wrap_pyfunction!(is_internally_k_connected, m)?)?;
    m.add_function(wrap_pyfunction!(generate_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(check_certificates, m)?)?;
    m.add_function(wrap_pyfunction!(pattern_roster, m)?)?;
    Ok(())
}
