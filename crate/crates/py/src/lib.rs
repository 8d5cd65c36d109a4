//! Python bindings: graphs, colorings, fans and the lemma verifier.

use std::sync::Arc;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use edgefan::chromatic::{self, SolverConfig, SolverError};
use edgefan::fan::{self, FanError, FanSearchConfig, DEFAULT_SEED};
use edgefan::verify::{self, VerifyConfig};
use edgefan::{EdgeId, Vertex};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn solver_error(e: SolverError) -> PyErr {
    match e {
        SolverError::Undecided { .. } => PyRuntimeError::new_err(e.to_string()),
        other => value_error(other),
    }
}

fn solver(budget: f64) -> PyResult<SolverConfig> {
    if !(budget.is_finite() && budget >= 1.0) {
        return Err(PyValueError::new_err("budget must be a positive count"));
    }
    Ok(SolverConfig { budget: budget as u64 })
}

#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: Arc<edgefan::Graph>,
}

#[pymethods]
impl PyGraph {
    /// Build from a vertex count and an edge list.
    #[new]
    fn new(n: usize, edges: Vec<(Vertex, Vertex)>) -> PyResult<Self> {
        let g = edgefan::Graph::from_edges(n, edges).map_err(value_error)?;
        Ok(PyGraph { inner: Arc::new(g) })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        let g = edgefan::parse_graph6(text.trim().as_bytes()).map_err(value_error)?;
        Ok(PyGraph { inner: Arc::new(g) })
    }

    /// A named family such as `"cycle:5"`, `"complete:4"` or `"petersen-v"`.
    #[staticmethod]
    fn family(spec: &str) -> PyResult<Self> {
        let g = edgefan::make_family(spec).map_err(value_error)?;
        Ok(PyGraph { inner: Arc::new(g) })
    }

    fn graph6(&self) -> PyResult<String> {
        edgefan::write_graph6(&self.inner).map_err(value_error)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    #[getter]
    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.inner.edges().to_vec()
    }

    fn degree(&self, v: Vertex) -> PyResult<usize> {
        self.check_vertex(v)?;
        Ok(self.inner.degree(v))
    }

    fn neighbors(&self, v: Vertex) -> PyResult<Vec<Vertex>> {
        self.check_vertex(v)?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    /// Minimum degree of the subgraph induced by maximum-degree vertices.
    fn core_min_degree(&self) -> PyResult<usize> {
        Ok(self.inner.core_info().map_err(value_error)?.core_min_degree)
    }

    fn light_vertices(&self) -> PyResult<Vec<Vertex>> {
        self.inner.light_vertices().map_err(value_error)
    }

    fn is_overfull(&self) -> PyResult<bool> {
        self.inner.is_overfull().map_err(value_error)
    }

    #[pyo3(signature = (budget=1e8))]
    fn chromatic_index(&self, py: Python<'_>, budget: f64) -> PyResult<usize> {
        let cfg = solver(budget)?;
        let g = self.inner.clone();
        py.detach(|| chromatic::chromatic_index(&g, &cfg))
            .map(|c| c.chi_prime)
            .map_err(solver_error)
    }

    /// Class 2 and every edge critical.
    #[pyo3(signature = (budget=1e8))]
    fn is_critical(&self, py: Python<'_>, budget: f64) -> PyResult<bool> {
        let cfg = solver(budget)?;
        let g = self.inner.clone();
        py.detach(|| chromatic::is_critical(&g, &cfg)).map_err(solver_error)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }
}

impl PyGraph {
    fn check_vertex(&self, v: Vertex) -> PyResult<()> {
        if v < self.inner.n() {
            Ok(())
        } else {
            Err(PyValueError::new_err(format!("vertex {v} out of range")))
        }
    }

    fn edge(&self, u: Vertex, v: Vertex) -> PyResult<EdgeId> {
        self.inner
            .edge_id(u, v)
            .ok_or_else(|| PyValueError::new_err(format!("{u}-{v} is not an edge")))
    }
}

/// A proper partial edge coloring with one uncolored edge.
#[pyclass(name = "Coloring", frozen)]
struct PyColoring {
    inner: edgefan::PartialColoring,
}

#[pymethods]
impl PyColoring {
    /// Parse a dump (`u-v:color` lines plus `uncolored:u-v`).
    #[staticmethod]
    #[pyo3(signature = (graph, text, palette=None))]
    fn from_dump(graph: PyRef<'_, PyGraph>, text: &str, palette: Option<usize>) -> PyResult<Self> {
        let c = edgefan::PartialColoring::from_dump(graph.inner.clone(), text, palette).map_err(value_error)?;
        Ok(PyColoring { inner: c })
    }

    fn dump(&self) -> String {
        self.inner.to_dump()
    }

    #[getter]
    fn palette(&self) -> usize {
        self.inner.palette_size()
    }

    fn uncolored(&self) -> Option<(Vertex, Vertex)> {
        self.inner.uncolored_edge().map(|e| self.inner.host().endpoints(e))
    }

    fn color(&self, u: Vertex, v: Vertex) -> Option<u32> {
        self.inner.color_between(u, v).map(u32::from)
    }

    fn missing(&self, v: Vertex) -> PyResult<Vec<u32>> {
        Ok(self
            .inner
            .missing_colors(v)
            .map_err(value_error)?
            .iter()
            .map(u32::from)
            .collect())
    }

    fn is_elementary(&self, vertices: Vec<Vertex>) -> bool {
        self.inner.is_elementary(&vertices).is_ok()
    }

    /// Vertices of the (alpha, beta) Kempe chain through `v`.
    fn kempe_chain(&self, v: Vertex, alpha: u32, beta: u32) -> PyResult<Vec<Vertex>> {
        let chain = self
            .inner
            .kempe_chain(v, to_color(alpha)?, to_color(beta)?)
            .map_err(value_error)?;
        Ok(chain.vertices.clone())
    }

    /// A new coloring with alpha and beta exchanged on the chain through `v`.
    fn kempe_swap(&self, v: Vertex, alpha: u32, beta: u32) -> PyResult<PyColoring> {
        let chain = self
            .inner
            .kempe_chain(v, to_color(alpha)?, to_color(beta)?)
            .map_err(value_error)?;
        Ok(PyColoring {
            inner: self.inner.kempe_swap(&chain).map_err(value_error)?,
        })
    }

    fn fingerprint(&self) -> String {
        self.inner.fingerprint()
    }

    /// The maximal multi-fan at `center`.
    fn fan(&self, center: Vertex) -> PyResult<PyFan> {
        let f = fan::grow_multifan(&self.inner, center).map_err(value_error)?;
        Ok(PyFan { inner: f })
    }

    fn __repr__(&self) -> String {
        format!(
            "Coloring(palette={}, uncolored={:?})",
            self.inner.palette_size(),
            self.uncolored()
        )
    }
}

fn to_color(c: u32) -> PyResult<edgefan::Color> {
    edgefan::Color::try_from(c)
        .ok()
        .filter(|&c| c > 0)
        .ok_or_else(|| PyValueError::new_err(format!("{c} is not a color")))
}

#[pyclass(name = "MultiFan", frozen)]
struct PyFan {
    inner: edgefan::MultiFan,
}

#[pymethods]
impl PyFan {
    #[getter]
    fn center(&self) -> Vertex {
        self.inner.center()
    }

    /// Center first, then fan vertices in growth order.
    fn vertices(&self) -> Vec<Vertex> {
        self.inner.vertices()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn is_maximal(&self) -> bool {
        self.inner.is_maximal()
    }

    fn is_elementary(&self) -> bool {
        self.inner.is_elementary().is_ok()
    }

    /// Pairs (alpha, beta) with alpha strictly before beta in the fan order.
    fn order(&self) -> PyResult<Vec<(u32, u32)>> {
        let order = fan::fan_order(&self.inner).map_err(value_error)?;
        Ok(order.relation.iter().map(|&(a, b)| (a.into(), b.into())).collect())
    }

    /// (K, K_F): center-edge colors to maximum-degree neighbors, and those
    /// not missing anywhere on the fan.
    fn stopping_colors(&self) -> (Vec<u32>, Vec<u32>) {
        let s = fan::stopping_colors(&self.inner);
        (
            s.all.iter().map(u32::from).collect(),
            s.outside.iter().map(u32::from).collect(),
        )
    }

    /// Vertex set of the extended multi-fan at `pivot` with stopping color `beta`.
    fn extend(&self, pivot: Vertex, beta: u32) -> PyResult<Vec<Vertex>> {
        let ext = fan::extend_multifan(&self.inner, pivot, to_color(beta)?).map_err(value_error)?;
        Ok(ext.vertices())
    }

    fn coloring(&self) -> PyColoring {
        PyColoring {
            inner: self.inner.coloring().clone(),
        }
    }

    fn render(&self) -> String {
        fan::render_fan(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("MultiFan({})", self.inner)
    }
}

/// Largest maximal multi-fan at `center` over all Δ-colorings of G − uv.
#[pyfunction]
#[pyo3(signature = (graph, u, v, center=None, budget=1e8, seed=DEFAULT_SEED))]
fn maximum_fan(
    py: Python<'_>,
    graph: PyRef<'_, PyGraph>,
    u: Vertex,
    v: Vertex,
    center: Option<Vertex>,
    budget: f64,
    seed: u64,
) -> PyResult<(PyFan, bool)> {
    let e = graph.edge(u, v)?;
    let cfg = FanSearchConfig {
        solver: solver(budget)?,
        seed,
        ..FanSearchConfig::default()
    };
    let g = graph.inner.clone();
    let best = py
        .detach(|| fan::maximum_multifan(&g, e, center.unwrap_or(u), &cfg))
        .map_err(|e| match e {
            FanError::Solver(s) => solver_error(s),
            other => value_error(other),
        })?;
    let certified = best.certainty == fan::Certainty::Certified;
    Ok((PyFan { inner: best.fan }, certified))
}

/// Runs lemma checks over graph6 strings. Returns (failures, summary, jsonl).
#[pyfunction]
#[pyo3(signature = (graphs, checks="all", budget=1e8, seed=DEFAULT_SEED))]
fn verify_corpus(
    py: Python<'_>,
    graphs: Vec<String>,
    checks: &str,
    budget: f64,
    seed: u64,
) -> PyResult<(usize, String, String)> {
    let checks = verify::parse_checks(checks).map_err(value_error)?;
    let config = VerifyConfig::with_budget(solver(budget)?.budget).with_seed(seed);
    let corpus = verify::read_corpus(&graphs.join("\n"));
    let report = py.detach(|| verify::scan("python", corpus, &checks, &config));
    Ok((report.failures(), report.summary(), report.to_jsonl()))
}

/// graph6 strings of all connected graphs on `n` vertices up to isomorphism.
#[pyfunction]
fn connected_graphs(n: usize) -> PyResult<Vec<String>> {
    edgefan::enumerate_connected(n)
        .map_err(value_error)?
        .map(|g| edgefan::write_graph6(&g).map_err(value_error))
        .collect()
}

#[pymodule]
fn pyedgefan(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyColoring>()?;
    m.add_class::<PyFan>()?;
    m.add_function(wrap_pyfunction!(maximum_fan, m)?)?;
    m.add_function(wrap_pyfunction!(verify_corpus, m)?)?;
    m.add_function(wrap_pyfunction!(connected_graphs, m)?)?;
    Ok(())
}
