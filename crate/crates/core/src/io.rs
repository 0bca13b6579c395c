//! JSON graph documents.
//!
//! ```json
//! {"n": 4, "edges": [[0, 1], [1, 2, 2.5], [2, 3, "inf"]], "labels": {"0": "a"}}
//! ```
//!
//! A missing weight means 1. As soon as one edge carries a weight the graph
//! is treated as weighted and every edge is emitted with its weight. Edges are
//! emitted sorted by `(min endpoint, max endpoint)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::{Graph, Weight};

/// A JSON number, written as an integer when it has no fractional part.
pub fn number(x: f64) -> Value {
    if x.fract() == 0.0 && x.abs() < 9.0e15 {
        Value::from(x as i64)
    } else {
        Value::from(x)
    }
}

/// Serializes a slice of distances with [`number`].
pub fn numbers(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| number(x)).collect())
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WeightField {
    Number(f64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum EdgeEntry {
    Plain((usize, usize)),
    Weighted((usize, usize, WeightField)),
}

#[derive(Deserialize)]
struct GraphDoc {
    n: usize,
    edges: Vec<EdgeEntry>,
    #[serde(default)]
    labels: BTreeMap<String, String>,
}

/// Serializable view of a graph in the document format.
#[derive(Serialize)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<Value>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<usize, String>,
}

impl From<&Graph> for GraphDocument {
    fn from(g: &Graph) -> Self {
        let edges = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                if !g.is_weighted() {
                    return Value::from(vec![u, v]);
                }
                let w = match g.weight(i) {
                    Weight::Finite(x) => number(x),
                    Weight::Infinite => Value::from("inf"),
                };
                Value::Array(vec![Value::from(u), Value::from(v), w])
            })
            .collect();
        GraphDocument {
            n: g.order(),
            edges,
            labels: g.labels().clone(),
        }
    }
}

fn graph_from_doc(doc: GraphDoc) -> Result<Graph> {
    let mut pairs = Vec::with_capacity(doc.edges.len());
    let mut weights = Vec::with_capacity(doc.edges.len());
    let mut weighted = false;
    for entry in doc.edges {
        match entry {
            EdgeEntry::Plain((u, v)) => {
                pairs.push((u, v));
                weights.push(Weight::Finite(1.0));
            }
            EdgeEntry::Weighted((u, v, w)) => {
                weighted = true;
                pairs.push((u, v));
                weights.push(match w {
                    WeightField::Number(x) => Weight::Finite(x),
                    WeightField::Text(s) if s.eq_ignore_ascii_case("inf") => Weight::Infinite,
                    WeightField::Text(s) => {
                        return Err(Error::Format(format!("edge weight {s:?} is not a number or \"inf\"")))
                    }
                });
            }
        }
    }
    let mut labels = BTreeMap::new();
    for (k, v) in doc.labels {
        let id: usize = k
            .parse()
            .map_err(|_| Error::Format(format!("label key {k:?} is not a vertex id")))?;
        if id >= doc.n {
            return Err(Error::VertexOutOfRange { vertex: id, n: doc.n });
        }
        labels.insert(id, v);
    }
    let g = if weighted {
        Graph::with_weights(doc.n, &pairs, &weights)?
    } else {
        Graph::new(doc.n, &pairs)?
    };
    Ok(g.with_labels(labels))
}

/// Parses a graph document. Unknown top-level fields are ignored.
pub fn parse_graph(text: &str) -> Result<Graph> {
    graph_from_doc(serde_json::from_str(text)?)
}

/// Builds a graph from an already-parsed JSON value.
pub fn graph_from_value(value: Value) -> Result<Graph> {
    graph_from_doc(serde_json::from_value(value)?)
}

/// Compact single-line document.
pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphDocument::from(g)).expect("graph documents always serialize")
}
