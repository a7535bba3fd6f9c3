//! Splines on stars, wheels, and complete graphs.
//!
//! On a star, every leaf value is free and the center must match each leaf
//! modulo the connecting label, so finding a center is exactly a
//! congruence system: one exists if and only if every pair of leaves
//! agrees modulo the gcd of their labels, and then the admissible centers
//! form one residue class modulo the lcm of all labels.
//!
//! A wheel is a rim cycle plus a star into the hub, and a complete graph
//! decomposes as a triangle plus one star per added vertex. Extension over
//! both families reduces to the star solver; verification just walks the
//! family's edge layers in order, which matches the generic edge-by-edge
//! check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{crt_system, Congruence, CrtSolution};
use crate::cycle;
use crate::error::Error;
use crate::graph::{EdgeLabeledGraph, Family};
use crate::spline::{Spline, Verdict, Violation};

/// Solves for a star center given the leaf values.
///
/// `labels[i]` is the label on the edge from leaf `i+1` to the center. The
/// returned solution describes every admissible center value: the
/// canonical representative plus any multiple of the modulus (the lcm of
/// the labels). `None` means some pair of leaves is incompatible and no
/// center exists; that is a normal outcome, not an error.
pub fn star_center(labels: &[BigInt], leaves: &[BigInt]) -> Result<Option<CrtSolution>, Error> {
    if labels.is_empty() {
        return Err(Error::EmptyInput("star center"));
    }
    if labels.len() != leaves.len() {
        return Err(Error::LengthMismatch {
            expected: labels.len(),
            actual: leaves.len(),
        });
    }
    let congruences = leaves
        .iter()
        .zip(labels)
        .map(|(leaf, label)| Congruence::new(leaf.clone(), label.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    crt_system(&congruences)
}

/// Checks a wheel labeling layer by layer: rim chain, rim closing edge,
/// then each spoke against the hub (the last value). Agrees with the
/// generic [`crate::spline::verify`] including the reported edge index.
pub fn wheel_verify(graph: &EdgeLabeledGraph, spline: &Spline) -> Result<Verdict, Error> {
    let (rim, spokes) = match graph.family() {
        Family::Wheel { rim, spokes } => (rim, spokes),
        other => {
            return Err(Error::FamilyMismatch {
                expected: "wheel",
                actual: other.name(),
            })
        }
    };
    let n = rim.len();
    if spline.len() != n + 1 {
        return Err(Error::LengthMismatch {
            expected: n + 1,
            actual: spline.len(),
        });
    }
    let values = &spline.values;
    if let Some(edge) = cycle::first_violation(rim, &values[..n]) {
        let (u, v) = if edge < n { (edge, edge + 1) } else { (1, n) };
        return Ok(Verdict::Violation(Violation {
            edge,
            u,
            v,
            label: rim[edge - 1].clone(),
        }));
    }
    let hub = &values[n];
    for (i, label) in spokes.iter().enumerate() {
        if !(&values[i] - hub).mod_floor(label).is_zero() {
            return Ok(Verdict::Violation(Violation {
                edge: n + i + 1,
                u: i + 1,
                v: n + 1,
                label: label.clone(),
            }));
        }
    }
    Ok(Verdict::Valid)
}

/// Extends a rim spline to the whole wheel, if the spokes allow it.
///
/// Returns the admissible hub values as a residue class, or `None` when
/// the spoke congruences clash. The rim spline must already be valid on
/// the rim cycle.
pub fn wheel_extend(
    rim: &[BigInt],
    spokes: &[BigInt],
    rim_spline: &Spline,
) -> Result<Option<CrtSolution>, Error> {
    cycle::check_cycle(rim)?;
    if spokes.len() != rim.len() {
        return Err(Error::LengthMismatch {
            expected: rim.len(),
            actual: spokes.len(),
        });
    }
    if rim_spline.len() != rim.len() {
        return Err(Error::LengthMismatch {
            expected: rim.len(),
            actual: rim_spline.len(),
        });
    }
    if let Some(edge) = cycle::first_violation(rim, &rim_spline.values) {
        return Err(Error::InvalidSpline(format!(
            "rim edge {edge} congruence fails; extension needs a valid rim spline"
        )));
    }
    star_center(spokes, &rim_spline.values)
}

/// Checks a complete-graph labeling layer by layer: the triangle, then
/// each star in assembly order. Agrees with the generic
/// [`crate::spline::verify`] including the reported edge index.
pub fn complete_verify(graph: &EdgeLabeledGraph, spline: &Spline) -> Result<Verdict, Error> {
    let (c3, stars) = match graph.family() {
        Family::Complete { c3, stars } => (c3, stars),
        other => {
            return Err(Error::FamilyMismatch {
                expected: "complete",
                actual: other.name(),
            })
        }
    };
    if spline.len() != graph.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: graph.vertex_count(),
            actual: spline.len(),
        });
    }
    let values = &spline.values;
    if let Some(edge) = cycle::first_violation(c3, &values[..3]) {
        let (u, v) = if edge < 3 { (edge, edge + 1) } else { (1, 3) };
        return Ok(Verdict::Violation(Violation {
            edge,
            u,
            v,
            label: c3[edge - 1].clone(),
        }));
    }
    let mut edge = 3;
    for (j, star) in stars.iter().enumerate() {
        let new_vertex = 4 + j;
        for (i, label) in star.iter().enumerate() {
            edge += 1;
            if !(&values[i] - &values[new_vertex - 1]).mod_floor(label).is_zero() {
                return Ok(Verdict::Violation(Violation {
                    edge,
                    u: i + 1,
                    v: new_vertex,
                    label: label.clone(),
                }));
            }
        }
    }
    Ok(Verdict::Valid)
}

/// Extends a spline on a complete graph by one vertex.
///
/// `star_labels[i]` labels the new edge from existing vertex `i+1` to the
/// added vertex. On success returns the grown graph and the extended
/// spline, using the canonical (least nonnegative) value for the new
/// vertex; `None` means the new star's congruences clash.
pub fn complete_extend(
    graph: &EdgeLabeledGraph,
    spline: &Spline,
    star_labels: &[BigInt],
) -> Result<Option<(EdgeLabeledGraph, Spline)>, Error> {
    let (c3, stars) = match graph.family() {
        Family::Complete { c3, stars } => (c3.clone(), stars.clone()),
        other => {
            return Err(Error::FamilyMismatch {
                expected: "complete",
                actual: other.name(),
            })
        }
    };
    match complete_verify(graph, spline)? {
        Verdict::Valid => {}
        Verdict::Violation(violation) => {
            return Err(Error::InvalidSpline(format!(
                "edge {} congruence fails; extension needs a valid spline",
                violation.edge
            )))
        }
    }
    if star_labels.len() != graph.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: graph.vertex_count(),
            actual: star_labels.len(),
        });
    }
    let Some(center) = star_center(star_labels, &spline.values)? else {
        return Ok(None);
    };
    let mut grown_stars = stars;
    grown_stars.push(star_labels.to_vec());
    let grown = EdgeLabeledGraph::complete(c3, grown_stars)?;
    let mut values = spline.values.clone();
    values.push(center.value);
    Ok(Some((grown, Spline::new(values))))
}
