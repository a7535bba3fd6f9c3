//! Edge-labeled graphs and the constructors for the supported families.
//!
//! Vertices are numbered from 1. Each family fixes a vertex and edge
//! numbering, and the rest of the crate relies on it:
//!
//! * **cycle** `C_n` (`n >= 3`): edge `i` joins `v_i` and `v_{i+1}` for
//!   `i < n`; edge `n` closes the cycle between `v_1` and `v_n`.
//! * **star** `S_n` (`n` edges): leaves are `v_1 ... v_n`, the center is
//!   `v_{n+1}`, and edge `i` joins `v_i` to the center.
//! * **wheel** `W_n`: a rim cycle on `v_1 ... v_n` (edges `1 ..= n`, cycle
//!   numbering) plus spokes, where edge `n + i` joins `v_i` to the hub
//!   `v_{n+1}`.
//! * **complete** `K_n`: a triangle on `v_1 v_2 v_3` followed by one star
//!   per additional vertex; the star on `v_{i+1}` contributes edges to
//!   `v_1 ... v_i` in that order.
//!
//! Labels must be positive. Self-loops and parallel edges are rejected;
//! the model is plain graphs only.

use num_bigint::BigInt;
use num_traits::One;
use std::collections::HashSet;

use crate::error::Error;

/// An edge between two distinct 1-based vertices, carrying a positive label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: BigInt,
}

/// How a graph was built, with the label lists the constructor consumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Cycle { labels: Vec<BigInt> },
    Star { labels: Vec<BigInt> },
    Wheel { rim: Vec<BigInt>, spokes: Vec<BigInt> },
    Complete { c3: Vec<BigInt>, stars: Vec<Vec<BigInt>> },
    General,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Cycle { .. } => "cycle",
            Family::Star { .. } => "star",
            Family::Wheel { .. } => "wheel",
            Family::Complete { .. } => "complete",
            Family::General => "general",
        }
    }
}

/// A finite graph with positive integer edge labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeledGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    family: Family,
}

impl EdgeLabeledGraph {
    /// The cycle `C_n` with edge `i` labeled `labels[i-1]`.
    pub fn cycle(labels: Vec<BigInt>) -> Result<Self, Error> {
        let n = labels.len();
        if n < 3 {
            return Err(Error::InvalidGraph(format!(
                "a cycle needs at least 3 edges, got {n}"
            )));
        }
        check_labels(&labels)?;
        let mut edges = Vec::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            let (u, v) = if i + 1 < n { (i + 1, i + 2) } else { (1, n) };
            edges.push(Edge {
                u,
                v,
                label: label.clone(),
            });
        }
        Ok(EdgeLabeledGraph {
            vertex_count: n,
            edges,
            family: Family::Cycle { labels },
        })
    }

    /// The star with `labels.len()` leaves; edge `i` joins leaf `v_i` to the
    /// center `v_{n+1}`.
    pub fn star(labels: Vec<BigInt>) -> Result<Self, Error> {
        let n = labels.len();
        if n < 1 {
            return Err(Error::InvalidGraph(
                "a star needs at least 1 edge".to_string(),
            ));
        }
        check_labels(&labels)?;
        let edges = labels
            .iter()
            .enumerate()
            .map(|(i, label)| Edge {
                u: i + 1,
                v: n + 1,
                label: label.clone(),
            })
            .collect();
        Ok(EdgeLabeledGraph {
            vertex_count: n + 1,
            edges,
            family: Family::Star { labels },
        })
    }

    /// The wheel with rim `C_n` and one spoke per rim vertex; edge `n + i`
    /// joins `v_i` to the hub `v_{n+1}`.
    pub fn wheel(rim: Vec<BigInt>, spokes: Vec<BigInt>) -> Result<Self, Error> {
        let n = rim.len();
        if n < 3 {
            return Err(Error::InvalidGraph(format!(
                "a wheel rim needs at least 3 edges, got {n}"
            )));
        }
        if spokes.len() != n {
            return Err(Error::InvalidGraph(format!(
                "a wheel needs one spoke per rim vertex: {n} rim edges, {} spokes",
                spokes.len()
            )));
        }
        check_labels(&rim)?;
        check_labels(&spokes)?;
        let mut edges = EdgeLabeledGraph::cycle(rim.clone())?.edges;
        for (i, label) in spokes.iter().enumerate() {
            edges.push(Edge {
                u: i + 1,
                v: n + 1,
                label: label.clone(),
            });
        }
        Ok(EdgeLabeledGraph {
            vertex_count: n + 1,
            edges,
            family: Family::Wheel { rim, spokes },
        })
    }

    /// The complete graph assembled as a triangle plus one star per further
    /// vertex. `stars[j]` labels the star joining vertex `v_{4+j}` back to
    /// all earlier vertices, so it must hold `3 + j` labels.
    pub fn complete(c3: Vec<BigInt>, stars: Vec<Vec<BigInt>>) -> Result<Self, Error> {
        if c3.len() != 3 {
            return Err(Error::InvalidGraph(format!(
                "the triangle part needs exactly 3 labels, got {}",
                c3.len()
            )));
        }
        check_labels(&c3)?;
        let mut edges = EdgeLabeledGraph::cycle(c3.clone())?.edges;
        let mut vertex_count = 3;
        for (j, star) in stars.iter().enumerate() {
            if star.len() != 3 + j {
                return Err(Error::InvalidGraph(format!(
                    "star {} must label edges to the {} earlier vertices, got {} labels",
                    j + 1,
                    3 + j,
                    star.len()
                )));
            }
            check_labels(star)?;
            vertex_count += 1;
            for (i, label) in star.iter().enumerate() {
                edges.push(Edge {
                    u: i + 1,
                    v: vertex_count,
                    label: label.clone(),
                });
            }
        }
        Ok(EdgeLabeledGraph {
            vertex_count,
            edges,
            family: Family::Complete { c3, stars },
        })
    }

    /// An arbitrary plain graph from an explicit edge list.
    pub fn general(vertex_count: usize, edges: Vec<(usize, usize, BigInt)>) -> Result<Self, Error> {
        let mut seen = HashSet::new();
        let mut built = Vec::with_capacity(edges.len());
        for (u, v, label) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if u < 1 || v < 1 || u > vertex_count || v > vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) leaves the vertex range 1..={vertex_count}"
                )));
            }
            if label < BigInt::one() {
                return Err(Error::NonPositive {
                    what: "edge label",
                    value: label,
                });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!(
                    "parallel edge between {u} and {v}"
                )));
            }
            built.push(Edge { u, v, label });
        }
        Ok(EdgeLabeledGraph {
            vertex_count,
            edges: built,
            family: Family::General,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// The cycle labels when this graph is a cycle.
    pub fn cycle_labels(&self) -> Result<&[BigInt], Error> {
        match &self.family {
            Family::Cycle { labels } => Ok(labels),
            other => Err(Error::FamilyMismatch {
                expected: "cycle",
                actual: other.name(),
            }),
        }
    }
}

fn check_labels(labels: &[BigInt]) -> Result<(), Error> {
    for label in labels {
        if label < &BigInt::one() {
            return Err(Error::NonPositive {
                what: "edge label",
                value: label.clone(),
            });
        }
    }
    Ok(())
}
