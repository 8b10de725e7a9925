//! Python bindings for `sginertia`.
//!
//! Inertia triples are returned as `(i_plus, i_minus, nullity)` tuples,
//! signs as `+1`/`-1` integers and half-integral bounds as
//! `fractions.Fraction`, so nothing is ever rounded.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use sginertia::families::{self, CycleSpec};
use sginertia::inertia::{adjacency_matrix, char_poly, graph_inertia, inertia_from_char_poly};
use sginertia::structure::{self, TreeNode};
use sginertia::verify::{self, SuiteOptions};
use sginertia::{Inertia, Sign};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn triple(i: Inertia) -> (usize, usize, usize) {
    (i.positive, i.negative, i.zero)
}

fn sign_from_int(s: i64) -> PyResult<Sign> {
    Sign::from_value(s).ok_or_else(|| err(format!("edge sign must be +1 or -1, got {s}")))
}

fn fraction<'py>(py: Python<'py>, (num, den): (i64, i64)) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((num, den))
}

/// An undirected simple graph with a ±1 sign on every edge.
#[pyclass(name = "SignedGraph", module = "pysginertia", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PySignedGraph {
    inner: sginertia::SignedGraph,
}

impl From<sginertia::SignedGraph> for PySignedGraph {
    fn from(inner: sginertia::SignedGraph) -> Self {
        PySignedGraph { inner }
    }
}

#[pymethods]
impl PySignedGraph {
    /// `SignedGraph(order, [(u, v, sign), ...])` with sign in {+1, -1}.
    #[new]
    #[pyo3(signature = (order, edges = Vec::new()))]
    fn new(order: usize, edges: Vec<(usize, usize, i64)>) -> PyResult<Self> {
        let edges = edges
            .into_iter()
            .map(|(u, v, s)| Ok((u, v, sign_from_int(s)?)))
            .collect::<PyResult<Vec<_>>>()?;
        sginertia::SignedGraph::new(order, edges).map(Self::from).map_err(err)
    }

    /// Parses a `.sg` document.
    #[staticmethod]
    fn from_sg(text: &str) -> PyResult<Self> {
        sginertia::format::parse_sg(text).map(Self::from).map_err(err)
    }

    fn to_sg(&self) -> String {
        sginertia::format::to_sg(&self.inner)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn edges(&self) -> Vec<(usize, usize, i8)> {
        self.inner.edges().map(|(u, v, s)| (u, v, s.value())).collect()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.inner.degree(v).map_err(err)
    }

    fn pendant_vertices(&self) -> Vec<usize> {
        self.inner.pendant_vertices()
    }

    fn connected_components(&self) -> Vec<Vec<usize>> {
        self.inner.connected_components()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn cyclomatic_number(&self) -> usize {
        self.inner.cyclomatic_number()
    }

    fn is_balanced(&self) -> bool {
        structure::is_balanced(&self.inner)
    }

    fn is_cycle_disjoint(&self) -> bool {
        structure::is_cycle_disjoint(&self.inner)
    }

    /// Exact `(i_plus, i_minus, nullity)` by symmetric elimination.
    fn inertia(&self) -> (usize, usize, usize) {
        triple(graph_inertia(&self.inner))
    }

    /// Characteristic polynomial coefficients, constant term first.
    fn char_poly(&self) -> PyResult<Vec<BigInt>> {
        let p = char_poly(&adjacency_matrix(&self.inner)).map_err(err)?;
        Ok(p.coefficients().to_vec())
    }

    /// Inertia read off the characteristic polynomial (independent route).
    fn inertia_from_char_poly(&self) -> PyResult<(usize, usize, usize)> {
        let p = char_poly(&adjacency_matrix(&self.inner)).map_err(err)?;
        inertia_from_char_poly(&p).map(triple).map_err(err)
    }

    /// Negates every edge with exactly one endpoint in `vertices`.
    fn switch(&self, vertices: Vec<usize>) -> PyResult<Self> {
        structure::switch(&self.inner, &vertices).map(Self::from).map_err(err)
    }

    fn negate(&self) -> Self {
        structure::negate(&self.inner).into()
    }

    /// Induced subgraph on the remaining vertices, relabelled in order.
    fn delete_vertices(&self, vertices: Vec<usize>) -> PyResult<Self> {
        self.inner
            .delete_vertices(&vertices)
            .map(|(g, _)| g.into())
            .map_err(err)
    }

    fn disjoint_union(&self, other: &Self) -> Self {
        self.inner.disjoint_union(&other.inner).into()
    }

    fn __repr__(&self) -> String {
        format!("SignedGraph(order={}, size={})", self.inner.order(), self.inner.size())
    }
}

/// Inequality checks and equality flags for one graph.
#[pyclass(name = "BoundsReport", module = "pysginertia", frozen)]
pub struct PyBoundsReport {
    inner: verify::TheoremReport,
}

#[pymethods]
impl PyBoundsReport {
    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn p(&self) -> usize {
        self.inner.p
    }

    #[getter]
    fn theta(&self) -> usize {
        self.inner.theta
    }

    #[getter]
    fn inertia(&self) -> (usize, usize, usize) {
        triple(self.inner.inertia)
    }

    #[getter]
    fn strict_applicable(&self) -> bool {
        self.inner.strict_applicable()
    }

    /// `(n - p)/2 - θ` as a `Fraction`.
    fn weak_bound<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let b = self.inner.weak_bound();
        fraction(py, (*b.numer(), *b.denom()))
    }

    /// `(n - p + 1)/2 - θ` as a `Fraction`.
    fn strict_bound<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let b = self.inner.strict_bound();
        fraction(py, (*b.numer(), *b.denom()))
    }

    fn nullity_bound(&self) -> usize {
        self.inner.nullity_bound()
    }

    /// `(i_plus, i_minus, nullity)` equality flags.
    fn equality(&self) -> (bool, bool, bool) {
        let f = self.inner.equality_flags();
        (f.positive, f.negative, f.nullity)
    }

    #[getter]
    fn extremal(&self) -> bool {
        self.inner.extremal.verdict
    }

    fn passes(&self) -> bool {
        self.inner.passes()
    }

    fn failures(&self) -> Vec<&'static str> {
        self.inner.failures()
    }

    /// The one-line `key=value` record.
    fn record(&self) -> String {
        verify::report_record(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("BoundsReport({})", verify::report_record(&self.inner))
    }
}

#[pyfunction]
fn check_bounds(g: &PySignedGraph) -> PyResult<PyBoundsReport> {
    verify::check_bounds(&g.inner)
        .map(|inner| PyBoundsReport { inner })
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, balanced = true))]
fn make_cycle(n: usize, balanced: bool) -> PyResult<PySignedGraph> {
    let spec = CycleSpec::new(n, balanced).map_err(err)?;
    Ok(families::make_cycle(spec).into())
}

#[pyfunction]
fn make_path(n: usize) -> PyResult<PySignedGraph> {
    families::make_path(n).map(Into::into).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, balanced = true))]
fn cycle_inertia_formula(n: usize, balanced: bool) -> PyResult<(usize, usize, usize)> {
    let spec = CycleSpec::new(n, balanced).map_err(err)?;
    Ok(triple(families::cycle_inertia_formula(spec)))
}

#[pyfunction]
fn path_inertia_formula(n: usize) -> PyResult<(usize, usize, usize)> {
    families::path_inertia_formula(n).map(triple).map_err(err)
}

/// `(verdict, reason)`; reason is `None` for extremal graphs.
#[pyfunction]
fn is_extremal_family(g: &PySignedGraph) -> (bool, Option<&'static str>) {
    let cert = families::is_extremal_family(&g.inner);
    (cert.verdict, cert.reason.map(|r| r.code()))
}

type LabelledTree = (Vec<String>, Vec<(usize, usize)>);

/// `(labels, edges)`: node labels (`"v3"` or `"C4+[0 1 2 3]"`) and tree
/// edges as index pairs.
#[pyfunction]
fn contraction_tree(g: &PySignedGraph) -> PyResult<LabelledTree> {
    let tree = structure::contraction_tree(&g.inner).map_err(err)?;
    let labels = tree
        .nodes
        .iter()
        .map(|node| match node {
            TreeNode::Vertex(v) => format!("v{v}"),
            TreeNode::Cycle(c) => c.to_string(),
        })
        .collect();
    Ok((labels, tree.edges))
}

/// One skeleton per isomorphism class on `n` vertices, all edges positive.
#[pyfunction]
#[pyo3(signature = (n, connected_only = true))]
fn enumerate_underlying_graphs(n: usize, connected_only: bool) -> PyResult<Vec<PySignedGraph>> {
    let graphs = verify::enumerate_underlying_graphs(n, connected_only).map_err(err)?;
    Ok(graphs.into_iter().map(Into::into).collect())
}

/// The 2^θ signatures of `g` that fix a spanning forest positive.
#[pyfunction]
fn signature_representatives(g: &PySignedGraph) -> PyResult<Vec<PySignedGraph>> {
    let reps = verify::signature_representatives(&g.inner).map_err(err)?;
    Ok(reps.map(Into::into).collect())
}

/// Runs the exhaustive suite and returns its machine-readable summary
/// lines; the first line is the `summary ...` record.
#[pyfunction]
#[pyo3(signature = (max_n, connected_only = true, allow_n8 = false, union_samples = 200, seed = 0x5eed))]
fn run_suite(
    py: Python<'_>,
    max_n: usize,
    connected_only: bool,
    allow_n8: bool,
    union_samples: usize,
    seed: u64,
) -> PyResult<(bool, Vec<String>)> {
    let opts = SuiteOptions {
        max_n,
        connected_only,
        allow_n8,
        union_samples,
        seed,
        ..SuiteOptions::default()
    };
    let summary = py.detach(|| verify::run_suite(&opts)).map_err(err)?;
    let lines = verify::summary_records(&summary).lines().map(str::to_owned).collect();
    Ok((summary.passed(), lines))
}

/// Exact inertia indices of signed graphs.
#[pymodule]
fn pysginertia(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySignedGraph>()?;
    m.add_class::<PyBoundsReport>()?;
    m.add_function(wrap_pyfunction!(check_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(make_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(make_path, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_inertia_formula, m)?)?;
    m.add_function(wrap_pyfunction!(path_inertia_formula, m)?)?;
    m.add_function(wrap_pyfunction!(is_extremal_family, m)?)?;
    m.add_function(wrap_pyfunction!(contraction_tree, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_underlying_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(signature_representatives, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
