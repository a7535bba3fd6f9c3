//! Vertex labelings and the spline test.
//!
//! A labeling is a spline exactly when, for every edge, the two endpoint
//! values agree modulo the edge label. Splines are closed under addition
//! and integer scaling, so the set of splines on a fixed graph is a module
//! over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::Error;
use crate::graph::EdgeLabeledGraph;

/// An integer value per vertex, indexed in vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spline {
    pub values: Vec<BigInt>,
}

impl Spline {
    pub fn new(values: Vec<BigInt>) -> Self {
        Spline { values }
    }

    pub fn from_i64(values: &[i64]) -> Self {
        Spline::new(values.iter().copied().map(BigInt::from).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Componentwise sum; the lengths must match.
    pub fn add(&self, other: &Spline) -> Result<Spline, Error> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                actual: other.len(),
            });
        }
        Ok(Spline::new(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    /// Componentwise multiple by an integer scalar.
    pub fn scale(&self, factor: &BigInt) -> Spline {
        Spline::new(self.values.iter().map(|v| v * factor).collect())
    }

    /// Number of leading zero entries.
    pub fn leading_zeros(&self) -> usize {
        self.values.iter().take_while(|v| v.is_zero()).count()
    }
}

/// Outcome of checking a labeling against a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Violation(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// The first edge whose congruence fails, in edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// 1-based position in the graph's edge list.
    pub edge: usize,
    pub u: usize,
    pub v: usize,
    pub label: BigInt,
}

/// Checks every edge congruence, reporting the first violation in edge
/// order. A labeling of the wrong length is a usage error, not a violation.
pub fn verify(graph: &EdgeLabeledGraph, spline: &Spline) -> Result<Verdict, Error> {
    if spline.len() != graph.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: graph.vertex_count(),
            actual: spline.len(),
        });
    }
    for (i, edge) in graph.edges().iter().enumerate() {
        let difference = &spline.values[edge.u - 1] - &spline.values[edge.v - 1];
        if !difference.mod_floor(&edge.label).is_zero() {
            return Ok(Verdict::Violation(Violation {
                edge: i + 1,
                u: edge.u,
                v: edge.v,
                label: edge.label.clone(),
            }));
        }
    }
    Ok(Verdict::Valid)
}
