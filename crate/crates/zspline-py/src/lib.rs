//! Python bindings for the integer-spline library.
//!
//! Exposes the Rust types through plain Python values: splines and label
//! lists are `list[int]` (arbitrary precision on both sides), congruence
//! solutions are `(value, modulus)` tuples, and "no solution" is `None`.
//! Domain errors raise `ValueError`; internal invariant violations raise
//! `RuntimeError`.

use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use zspline::arith::{self, Congruence, CrtSolution};
use zspline::cycle;
use zspline::families;
use zspline::graph::EdgeLabeledGraph;
use zspline::oracle::{self, MinimalityVerdict, SpanVerdict, DEFAULT_BUDGET};
use zspline::spline::{verify, Spline, Verdict};
use zspline::Error;

fn to_py_err(err: Error) -> PyErr {
    match err {
        Error::Internal(_) => PyRuntimeError::new_err(err.to_string()),
        _ => PyValueError::new_err(err.to_string()),
    }
}

fn solution_tuple(solution: Option<CrtSolution>) -> Option<(BigInt, BigInt)> {
    solution.map(|s| (s.value, s.modulus))
}

/// An edge-labeled graph; construct through the family staticmethods.
#[pyclass(name = "Graph", frozen)]
struct Graph {
    inner: EdgeLabeledGraph,
}

#[pymethods]
impl Graph {
    /// Cycle on n >= 3 vertices; edge i joins vertices i and i+1, the
    /// last edge closes back to vertex 1.
    #[staticmethod]
    fn cycle(labels: Vec<BigInt>) -> PyResult<Self> {
        EdgeLabeledGraph::cycle(labels)
            .map(|inner| Self { inner })
            .map_err(to_py_err)
    }

    /// Star with one leaf per label; the center is the last vertex.
    #[staticmethod]
    fn star(labels: Vec<BigInt>) -> PyResult<Self> {
        EdgeLabeledGraph::star(labels)
            .map(|inner| Self { inner })
            .map_err(to_py_err)
    }

    /// Wheel: a rim cycle plus one spoke from each rim vertex to the hub.
    #[staticmethod]
    fn wheel(rim: Vec<BigInt>, spokes: Vec<BigInt>) -> PyResult<Self> {
        EdgeLabeledGraph::wheel(rim, spokes)
            .map(|inner| Self { inner })
            .map_err(to_py_err)
    }

    /// Complete graph assembled as a triangle plus one star per later
    /// vertex; `stars[j]` must hold 3 + j labels.
    #[staticmethod]
    fn complete(c3: Vec<BigInt>, stars: Vec<Vec<BigInt>>) -> PyResult<Self> {
        EdgeLabeledGraph::complete(c3, stars)
            .map(|inner| Self { inner })
            .map_err(to_py_err)
    }

    /// Arbitrary simple graph from 1-based `(u, v, label)` triples.
    #[staticmethod]
    fn general(vertices: usize, edges: Vec<(usize, usize, BigInt)>) -> PyResult<Self> {
        EdgeLabeledGraph::general(vertices, edges)
            .map(|inner| Self { inner })
            .map_err(to_py_err)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn family(&self) -> &'static str {
        self.inner.family().name()
    }

    /// Edges as 1-based `(u, v, label)` triples, in canonical order.
    fn edges(&self) -> Vec<(usize, usize, BigInt)> {
        self.inner
            .edges()
            .iter()
            .map(|e| (e.u, e.v, e.label.clone()))
            .collect()
    }

    /// Does the labeling satisfy every edge congruence?
    fn is_spline(&self, values: Vec<BigInt>) -> PyResult<bool> {
        verify(&self.inner, &Spline::new(values))
            .map(|verdict| verdict.is_valid())
            .map_err(to_py_err)
    }

    /// The first failing edge as `(edge, u, v, label)`, or None if the
    /// labeling is a spline.
    fn first_violation(
        &self,
        values: Vec<BigInt>,
    ) -> PyResult<Option<(usize, usize, usize, BigInt)>> {
        match verify(&self.inner, &Spline::new(values)).map_err(to_py_err)? {
            Verdict::Valid => Ok(None),
            Verdict::Violation(v) => Ok(Some((v.edge, v.u, v.v, v.label))),
        }
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(family={:?}, vertices={}, edges={})",
            self.inner.family().name(),
            self.inner.vertex_count(),
            self.inner.edges().len(),
        )
    }
}

/// Greatest common divisor of the values (0 for an all-zero list).
#[pyfunction]
fn gcd_all(values: Vec<BigInt>) -> PyResult<BigInt> {
    arith::gcd_all(&values).map_err(to_py_err)
}

/// Least common multiple of the values; every value must be nonzero.
#[pyfunction]
fn lcm_all(values: Vec<BigInt>) -> PyResult<BigInt> {
    arith::lcm_all(&values).map_err(to_py_err)
}

/// Solve x = r1 (mod m1), x = r2 (mod m2); None when incompatible.
#[pyfunction]
fn crt_pair(
    r1: BigInt,
    m1: BigInt,
    r2: BigInt,
    m2: BigInt,
) -> PyResult<Option<(BigInt, BigInt)>> {
    let a = Congruence::new(r1, m1).map_err(to_py_err)?;
    let b = Congruence::new(r2, m2).map_err(to_py_err)?;
    Ok(solution_tuple(arith::crt_pair(&a, &b)))
}

/// Solve a system of (residue, modulus) pairs; None when incompatible.
#[pyfunction]
fn crt_system(pairs: Vec<(BigInt, BigInt)>) -> PyResult<Option<(BigInt, BigInt)>> {
    let congruences = pairs
        .into_iter()
        .map(|(r, m)| Congruence::new(r, m))
        .collect::<Result<Vec<_>, _>>()
        .map_err(to_py_err)?;
    arith::crt_system(&congruences)
        .map(solution_tuple)
        .map_err(to_py_err)
}

/// The smallest positive leading entry of a flow-up class with k leading
/// zeros on the cycle.
#[pyfunction]
fn smallest_leading_entry(labels: Vec<BigInt>, k: usize) -> PyResult<BigInt> {
    cycle::smallest_leading_entry(&labels, k).map_err(to_py_err)
}

/// The entry-wise smallest flow-up class with k leading zeros.
#[pyfunction]
fn smallest_flow_up(labels: Vec<BigInt>, k: usize) -> PyResult<Vec<BigInt>> {
    cycle::smallest_flow_up(&labels, k)
        .map(|class| class.into_spline().values)
        .map_err(to_py_err)
}

/// The full flow-up basis, one row per leading-zero count.
#[pyfunction]
fn flow_up_basis(labels: Vec<BigInt>) -> PyResult<Vec<Vec<BigInt>>> {
    cycle::flow_up_basis(&labels)
        .map(|basis| {
            basis
                .classes()
                .iter()
                .map(|class| class.spline().values.clone())
                .collect()
        })
        .map_err(to_py_err)
}

/// Integer coefficients expressing the spline over the flow-up basis.
#[pyfunction]
fn decompose(labels: Vec<BigInt>, values: Vec<BigInt>) -> PyResult<Vec<BigInt>> {
    cycle::decompose(&labels, &Spline::new(values)).map_err(to_py_err)
}

/// The spline with the given basis coefficients.
#[pyfunction]
fn recombine(labels: Vec<BigInt>, coefficients: Vec<BigInt>) -> PyResult<Vec<BigInt>> {
    cycle::recombine(&labels, &coefficients)
        .map(|spline| spline.values)
        .map_err(to_py_err)
}

/// Merge the first edge's endpoints (both entries must be zero), giving
/// `(shorter_labels, shorter_values)` on the cycle one vertex smaller.
#[pyfunction]
fn contract_first_edge(
    labels: Vec<BigInt>,
    values: Vec<BigInt>,
) -> PyResult<(Vec<BigInt>, Vec<BigInt>)> {
    cycle::contract_first_edge(&labels, &Spline::new(values))
        .map(|(shorter_labels, shorter)| (shorter_labels, shorter.values))
        .map_err(to_py_err)
}

/// Split a new first edge off a spline whose first entry is zero, giving
/// `(longer_labels, longer_values)` on the cycle one vertex larger.
#[pyfunction]
fn add_leading_zero(
    labels: Vec<BigInt>,
    values: Vec<BigInt>,
    new_label: BigInt,
) -> PyResult<(Vec<BigInt>, Vec<BigInt>)> {
    cycle::add_leading_zero(&labels, &Spline::new(values), &new_label)
        .map(|(longer_labels, longer)| (longer_labels, longer.values))
        .map_err(to_py_err)
}

/// The star's center as `(value, modulus)`, or None when the leaves are
/// incompatible.
#[pyfunction]
fn star_center(labels: Vec<BigInt>, leaves: Vec<BigInt>) -> PyResult<Option<(BigInt, BigInt)>> {
    families::star_center(&labels, &leaves)
        .map(solution_tuple)
        .map_err(to_py_err)
}

/// The hub value extending a rim spline to the wheel, as
/// `(value, modulus)`, or None when no hub works.
#[pyfunction]
fn wheel_extend(
    rim: Vec<BigInt>,
    spokes: Vec<BigInt>,
    values: Vec<BigInt>,
) -> PyResult<Option<(BigInt, BigInt)>> {
    families::wheel_extend(&rim, &spokes, &Spline::new(values))
        .map(solution_tuple)
        .map_err(to_py_err)
}

/// Extend a complete-graph spline by one vertex, giving the grown graph
/// and the extended values, or None when the star labels are
/// incompatible.
#[pyfunction]
fn complete_extend(
    graph: &Graph,
    values: Vec<BigInt>,
    star_labels: Vec<BigInt>,
) -> PyResult<Option<(Graph, Vec<BigInt>)>> {
    families::complete_extend(&graph.inner, &Spline::new(values), &star_labels)
        .map(|extension| {
            extension.map(|(grown, extended)| (Graph { inner: grown }, extended.values))
        })
        .map_err(to_py_err)
}

/// Every spline on the graph with entries in [0, bound), in
/// lexicographic order.
#[pyfunction]
#[pyo3(signature = (graph, bound, budget = DEFAULT_BUDGET))]
fn enumerate_splines(graph: &Graph, bound: u64, budget: u64) -> PyResult<Vec<Vec<BigInt>>> {
    oracle::enumerate_splines(&graph.inner, bound, budget)
        .map(|report| report.splines.into_iter().map(|s| s.values).collect())
        .map_err(to_py_err)
}

/// Search for a valid class at or below the candidate (entry-wise, within
/// the bound) with the same leading-zero count. Returns the first
/// counterexample, or None if the candidate is minimal within the bound.
#[pyfunction]
#[pyo3(signature = (labels, k, candidate, bound, budget = DEFAULT_BUDGET))]
fn minimality_scan(
    labels: Vec<BigInt>,
    k: usize,
    candidate: Vec<BigInt>,
    bound: u64,
    budget: u64,
) -> PyResult<Option<Vec<BigInt>>> {
    let class = cycle::FlowUpClass::new(&labels, Spline::new(candidate)).map_err(to_py_err)?;
    match oracle::minimality_scan(&labels, k, &class, bound, budget).map_err(to_py_err)? {
        MinimalityVerdict::MinimalWithinBound => Ok(None),
        MinimalityVerdict::Counterexample(spline) => Ok(Some(spline.values)),
    }
}

/// Decompose every spline with entries in [0, bound) against the flow-up
/// basis; returns how many were checked. A spline the basis cannot
/// reproduce raises RuntimeError.
#[pyfunction]
#[pyo3(signature = (labels, bound, budget = DEFAULT_BUDGET))]
fn span_check(labels: Vec<BigInt>, bound: u64, budget: u64) -> PyResult<usize> {
    match oracle::span_check(&labels, bound, budget).map_err(to_py_err)? {
        SpanVerdict::Spanned { count } => Ok(count),
        SpanVerdict::Failure { spline, detail } => Err(PyRuntimeError::new_err(format!(
            "basis failed to reproduce {:?}: {detail}",
            spline.values
        ))),
    }
}

#[pymodule]
fn zspline_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(gcd_all, m)?)?;
    m.add_function(wrap_pyfunction!(lcm_all, m)?)?;
    m.add_function(wrap_pyfunction!(crt_pair, m)?)?;
    m.add_function(wrap_pyfunction!(crt_system, m)?)?;
    m.add_function(wrap_pyfunction!(smallest_leading_entry, m)?)?;
    m.add_function(wrap_pyfunction!(smallest_flow_up, m)?)?;
    m.add_function(wrap_pyfunction!(flow_up_basis, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(recombine, m)?)?;
    m.add_function(wrap_pyfunction!(contract_first_edge, m)?)?;
    m.add_function(wrap_pyfunction!(add_leading_zero, m)?)?;
    m.add_function(wrap_pyfunction!(star_center, m)?)?;
    m.add_function(wrap_pyfunction!(wheel_extend, m)?)?;
    m.add_function(wrap_pyfunction!(complete_extend, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_splines, m)?)?;
    m.add_function(wrap_pyfunction!(minimality_scan, m)?)?;
    m.add_function(wrap_pyfunction!(span_check, m)?)?;
    m.add("DEFAULT_BUDGET", DEFAULT_BUDGET)?;
    Ok(())
}
