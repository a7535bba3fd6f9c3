//! JSON documents for graphs, splines, and bases.
//!
//! Integers are the one non-obvious part: values whose magnitude exceeds
//! 2⁵³−1 are emitted as decimal strings so that readers without big-integer
//! support never silently round them, and smaller values stay plain JSON
//! numbers. Parsing accepts both forms and rejects floats outright.
//!
//! Serialized objects use sorted keys (the default `serde_json` map), so
//! identical inputs always produce identical bytes.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use std::str::FromStr;

use crate::cycle::FlowUpBasis;
use crate::error::Error;
use crate::graph::{EdgeLabeledGraph, Family};
use crate::spline::Spline;

/// Largest magnitude safely representable as a plain JSON number (2⁵³−1).
pub const JSON_SAFE_MAX: i64 = 9_007_199_254_740_991;

/// Encodes an integer as a JSON number, or as a decimal string when its
/// magnitude exceeds [`JSON_SAFE_MAX`].
pub fn int_to_value(value: &BigInt) -> Value {
    match i64::try_from(value) {
        Ok(small) if small.abs() <= JSON_SAFE_MAX => Value::from(small),
        _ => Value::String(value.to_string()),
    }
}

/// Decodes an integer from either a plain JSON number or a decimal string.
/// Floats are rejected; huge bare numerals parse as floats in JSON, so the
/// error points at the string form.
pub fn int_from_value(value: &Value, what: &str) -> Result<BigInt, Error> {
    match value {
        Value::Number(n) => {
            if let Some(v) = n.as_i64() {
                Ok(BigInt::from(v))
            } else if let Some(v) = n.as_u64() {
                Ok(BigInt::from(v))
            } else {
                Err(Error::Document(format!(
                    "{what}: expected an integer, found {n}; integers beyond \
                     the float-safe range must be written as decimal strings"
                )))
            }
        }
        Value::String(s) => BigInt::from_str(s).map_err(|_| {
            Error::Document(format!("{what}: {s:?} is not a decimal integer"))
        }),
        other => Err(Error::Document(format!(
            "{what}: expected an integer, found {other}"
        ))),
    }
}

/// Encodes a list of integers, each per [`int_to_value`].
pub fn ints_to_value(values: &[BigInt]) -> Value {
    Value::Array(values.iter().map(int_to_value).collect())
}

/// Decodes a JSON array of integers.
pub fn ints_from_value(value: &Value, what: &str) -> Result<Vec<BigInt>, Error> {
    let items = value
        .as_array()
        .ok_or_else(|| Error::Document(format!("{what}: expected an array")))?;
    items
        .iter()
        .enumerate()
        .map(|(i, item)| int_from_value(item, &format!("{what}[{}]", i + 1)))
        .collect()
}

/// Encodes a graph as its family document.
pub fn graph_to_value(graph: &EdgeLabeledGraph) -> Value {
    match graph.family() {
        Family::Cycle { labels } => json!({
            "family": "cycle",
            "labels": ints_to_value(labels),
        }),
        Family::Star { labels } => json!({
            "family": "star",
            "labels": ints_to_value(labels),
        }),
        Family::Wheel { rim, spokes } => json!({
            "family": "wheel",
            "rim": ints_to_value(rim),
            "spokes": ints_to_value(spokes),
        }),
        Family::Complete { c3, stars } => json!({
            "family": "complete",
            "c3": ints_to_value(c3),
            "stars": Value::Array(stars.iter().map(|s| ints_to_value(s)).collect()),
        }),
        Family::General => json!({
            "family": "general",
            "vertices": graph.vertex_count(),
            "edges": Value::Array(
                graph
                    .edges()
                    .iter()
                    .map(|e| {
                        Value::Array(vec![
                            Value::from(e.u),
                            Value::from(e.v),
                            int_to_value(&e.label),
                        ])
                    })
                    .collect(),
            ),
        }),
    }
}

/// Decodes a graph document, dispatching on its `family` field. Unknown
/// fields are rejected so that typos fail loudly instead of being ignored.
pub fn graph_from_value(value: &Value) -> Result<EdgeLabeledGraph, Error> {
    let map = expect_object(value, "graph document")?;
    let family = require(map, "family", "graph document")?
        .as_str()
        .ok_or_else(|| Error::Document("graph document: family must be a string".into()))?;
    match family {
        "cycle" => {
            only_fields(map, &["family", "labels"], "cycle document")?;
            let labels = ints_from_value(require(map, "labels", "cycle document")?, "labels")?;
            EdgeLabeledGraph::cycle(labels)
        }
        "star" => {
            only_fields(map, &["family", "labels"], "star document")?;
            let labels = ints_from_value(require(map, "labels", "star document")?, "labels")?;
            EdgeLabeledGraph::star(labels)
        }
        "wheel" => {
            only_fields(map, &["family", "rim", "spokes"], "wheel document")?;
            let rim = ints_from_value(require(map, "rim", "wheel document")?, "rim")?;
            let spokes = ints_from_value(require(map, "spokes", "wheel document")?, "spokes")?;
            EdgeLabeledGraph::wheel(rim, spokes)
        }
        "complete" => {
            only_fields(map, &["family", "c3", "stars"], "complete document")?;
            let c3 = ints_from_value(require(map, "c3", "complete document")?, "c3")?;
            let stars_value = require(map, "stars", "complete document")?
                .as_array()
                .ok_or_else(|| Error::Document("stars: expected an array of arrays".into()))?;
            let stars = stars_value
                .iter()
                .enumerate()
                .map(|(i, s)| ints_from_value(s, &format!("stars[{}]", i + 1)))
                .collect::<Result<Vec<_>, _>>()?;
            EdgeLabeledGraph::complete(c3, stars)
        }
        "general" => {
            only_fields(map, &["family", "vertices", "edges"], "general document")?;
            let vertices = usize_from_value(
                require(map, "vertices", "general document")?,
                "vertices",
            )?;
            let edges_value = require(map, "edges", "general document")?
                .as_array()
                .ok_or_else(|| Error::Document("edges: expected an array".into()))?;
            let mut edges = Vec::with_capacity(edges_value.len());
            for (i, item) in edges_value.iter().enumerate() {
                let what = format!("edges[{}]", i + 1);
                let triple = item
                    .as_array()
                    .filter(|a| a.len() == 3)
                    .ok_or_else(|| {
                        Error::Document(format!("{what}: expected [u, v, label]"))
                    })?;
                let u = usize_from_value(&triple[0], &format!("{what} endpoint"))?;
                let v = usize_from_value(&triple[1], &format!("{what} endpoint"))?;
                let label = int_from_value(&triple[2], &format!("{what} label"))?;
                edges.push((u, v, label));
            }
            EdgeLabeledGraph::general(vertices, edges)
        }
        other => Err(Error::Document(format!(
            "graph document: unknown family {other:?}"
        ))),
    }
}

/// Encodes a spline as `{"values":[...]}`.
pub fn spline_to_value(spline: &Spline) -> Value {
    json!({ "values": ints_to_value(&spline.values) })
}

/// Decodes a `{"values":[...]}` document.
pub fn spline_from_value(value: &Value) -> Result<Spline, Error> {
    let map = expect_object(value, "spline document")?;
    only_fields(map, &["values"], "spline document")?;
    let values = ints_from_value(require(map, "values", "spline document")?, "values")?;
    Ok(Spline::new(values))
}

/// Encodes a flow-up basis as `{"basis":[[...],...],"labels":[...]}` with
/// rows in leading-zero order.
pub fn basis_to_value(basis: &FlowUpBasis) -> Value {
    json!({
        "basis": Value::Array(
            basis
                .classes()
                .iter()
                .map(|class| ints_to_value(&class.spline().values))
                .collect(),
        ),
        "labels": ints_to_value(basis.labels()),
    })
}

fn expect_object<'v>(value: &'v Value, what: &str) -> Result<&'v Map<String, Value>, Error> {
    value
        .as_object()
        .ok_or_else(|| Error::Document(format!("{what}: expected a JSON object")))
}

fn require<'v>(map: &'v Map<String, Value>, key: &str, what: &str) -> Result<&'v Value, Error> {
    map.get(key)
        .ok_or_else(|| Error::Document(format!("{what}: missing field {key:?}")))
}

fn only_fields(map: &Map<String, Value>, allowed: &[&str], what: &str) -> Result<(), Error> {
    for key in map.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(Error::Document(format!("{what}: unknown field {key:?}")));
        }
    }
    Ok(())
}

fn usize_from_value(value: &Value, what: &str) -> Result<usize, Error> {
    let big = int_from_value(value, what)?;
    usize::try_from(&big)
        .map_err(|_| Error::Document(format!("{what}: {big} is not a valid count")))
}
