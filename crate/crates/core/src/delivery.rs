//! Customer codes from a local metric basis.
//!
//! Customers sit at distinct vertices of a weighted road network. Two
//! customers are adjacent in the customer graph when a shortest route
//! between them passes no other customer (weight: the route length), or when
//! their family names share a first letter (weight: `Infinite` if that is the
//! only reason). A local metric basis S of the customer graph then gives each
//! customer the code `(first letter, r(v|S))`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use unicode_segmentation::UnicodeSegmentation;

use crate::dimension::{find_dimension_with, representation, DimensionKind, Representation, SearchOptions};
use crate::distance::{all_pairs_distances, dijkstra_avoiding, distances_differ, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSubset, Weight};
use crate::io::{graph_from_value, numbers};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Customer {
    pub id: String,
    pub family_name: String,
    pub location: usize,
}

impl Customer {
    /// First grapheme of the family name, lowercased for comparison.
    pub fn initial_key(&self) -> String {
        self.initial().to_lowercase()
    }

    /// First grapheme of the family name, uppercased for display.
    pub fn letter(&self) -> String {
        self.initial().to_uppercase()
    }

    fn initial(&self) -> &str {
        self.family_name.graphemes(true).next().unwrap_or("")
    }
}

#[derive(Clone, Debug)]
pub struct CustomerRoster {
    pub ambient: Graph,
    pub customers: Vec<Customer>,
}

#[derive(Deserialize)]
struct RosterDoc {
    ambient: Value,
    customers: Vec<Customer>,
}

impl CustomerRoster {
    pub fn new(ambient: Graph, customers: Vec<Customer>) -> Result<Self> {
        let mut at: BTreeMap<usize, &str> = BTreeMap::new();
        for c in &customers {
            if c.location >= ambient.order() {
                return Err(Error::UnknownVertex {
                    customer: c.id.clone(),
                    vertex: c.location,
                });
            }
            if c.family_name.trim().is_empty() {
                return Err(Error::EmptyFamilyName(c.id.clone()));
            }
            if let Some(prev) = at.insert(c.location, &c.id) {
                return Err(Error::DuplicateLocation(prev.to_string(), c.id.clone()));
            }
        }
        if customers.is_empty() {
            return Err(Error::BadParameter("roster has no customers".into()));
        }
        Ok(CustomerRoster { ambient, customers })
    }

    /// `{"ambient": <graph document>, "customers": [{"id", "family_name", "location"}]}`
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: RosterDoc = serde_json::from_str(text)?;
        Self::new(graph_from_value(doc.ambient)?, doc.customers)
    }
}

/// How the shortest-route rule treats several shortest routes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum GeodesicRule {
    /// Some shortest route avoids every other customer.
    #[default]
    Any,
    /// No other customer lies on any shortest route.
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EdgeOrigin {
    Geodesic,
    NameOnly,
    Both,
}

#[derive(Clone, Debug)]
pub struct CustomerGraph {
    /// Vertex `i` is `customers[i]`.
    pub graph: Graph,
    /// Parallel to `graph.edges()`.
    pub origins: Vec<EdgeOrigin>,
    pub customers: Vec<Customer>,
}

impl CustomerGraph {
    pub fn origin(&self, a: usize, b: usize) -> Option<EdgeOrigin> {
        self.graph.edge_index(a, b).map(|e| self.origins[e])
    }

    /// The customer graph without its name-only edges.
    pub fn without_name_only_edges(&self) -> Result<Graph> {
        let mut edges = Vec::new();
        let mut weights = Vec::new();
        for (i, &e) in self.graph.edges().iter().enumerate() {
            if self.origins[i] != EdgeOrigin::NameOnly {
                edges.push(e);
                weights.push(self.graph.weight(i));
            }
        }
        Graph::with_weights(self.graph.order(), &edges, &weights)
    }
}

pub fn build_customer_graph(roster: &CustomerRoster, rule: GeodesicRule) -> Result<CustomerGraph> {
    let cs = &roster.customers;
    let amb = &roster.ambient;
    let dm = all_pairs_distances(amb);
    let mut is_customer = vec![false; amb.order()];
    for c in cs {
        is_customer[c.location] = true;
    }

    let mut edges = Vec::new();
    let mut weights = Vec::new();
    let mut origins = Vec::new();
    let mut row = vec![0.0; amb.order()];
    for a in 0..cs.len() {
        let la = cs[a].location;
        if rule == GeodesicRule::Any {
            dijkstra_avoiding(amb, la, &mut row, &is_customer);
        }
        for b in a + 1..cs.len() {
            let lb = cs[b].location;
            let d = dm.get(la, lb);
            let geodesic = match rule {
                GeodesicRule::Any => !distances_differ(row[lb], d),
                GeodesicRule::All => cs.iter().enumerate().all(|(w, c)| {
                    w == a || w == b || distances_differ(dm.get(la, c.location) + dm.get(c.location, lb), d)
                }),
            };
            let same_letter = cs[a].initial_key() == cs[b].initial_key();
            let origin = match (geodesic, same_letter) {
                (true, true) => EdgeOrigin::Both,
                (true, false) => EdgeOrigin::Geodesic,
                (false, true) => EdgeOrigin::NameOnly,
                (false, false) => continue,
            };
            edges.push((a, b));
            weights.push(if geodesic { Weight::Finite(d) } else { Weight::Infinite });
            origins.push(origin);
        }
    }
    let graph = match Graph::with_weights(cs.len(), &edges, &weights) {
        Err(Error::Disconnected) => return Err(Error::DisconnectedResult),
        other => other?,
    };
    // edges were generated in sorted order, so `origins` lines up with them
    debug_assert_eq!(graph.edges(), &edges[..]);
    Ok(CustomerGraph {
        graph,
        origins,
        customers: cs.clone(),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Code {
    pub letter: String,
    pub representation: Representation,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CodeBook {
    pub basis: VertexSubset,
    /// `codes[i]` belongs to customer `i`.
    pub codes: Vec<Code>,
}

/// Codes from the lexicographically least local metric basis.
pub fn assign_codes(cg: &CustomerGraph) -> Result<CodeBook> {
    let dm = all_pairs_distances(&cg.graph);
    let basis = find_dimension_with(&cg.graph, &dm, &DimensionKind::Local, &SearchOptions::default())?.basis;
    codes_for_basis(cg, &dm, basis)
}

/// Codes for an arbitrary landmark list.
pub fn codes_for_basis(cg: &CustomerGraph, dm: &DistanceMatrix, basis: VertexSubset) -> Result<CodeBook> {
    let codes = cg
        .customers
        .iter()
        .enumerate()
        .map(|(v, c)| {
            Ok(Code {
                letter: c.letter(),
                representation: representation(dm, &basis, v)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(CodeBook { basis, codes })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DimensionComparison {
    pub local: usize,
    pub metric: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CodeBookReport {
    pub passed: bool,
    pub failures: Vec<String>,
    pub dimension_comparison: DimensionComparison,
}

/// Checks that adjacent customers get different codes and compares the
/// code length with the metric dimension of the same graph.
pub fn validate_codebook(cg: &CustomerGraph, cb: &CodeBook) -> Result<CodeBookReport> {
    let mut failures = Vec::new();
    if cb.basis.is_empty() {
        failures.push("basis is empty".to_string());
    }
    if cb.codes.len() != cg.customers.len() {
        failures.push(format!("{} codes for {} customers", cb.codes.len(), cg.customers.len()));
    }
    for &(a, b) in cg.graph.edges() {
        let (Some(x), Some(y)) = (cb.codes.get(a), cb.codes.get(b)) else {
            continue;
        };
        let same_rep = x.representation.is_empty() || !x.representation.differs_from(&y.representation);
        if x.letter == y.letter && same_rep {
            failures.push(format!(
                "customers {} and {} share code {}",
                cg.customers[a].id, cg.customers[b].id, x.letter
            ));
        }
    }
    let dm = all_pairs_distances(&cg.graph);
    let metric = find_dimension_with(&cg.graph, &dm, &DimensionKind::Metric, &SearchOptions::default())?.value;
    Ok(CodeBookReport {
        passed: failures.is_empty(),
        failures,
        dimension_comparison: DimensionComparison {
            local: cb.basis.len(),
            metric,
        },
    })
}

/// One customer's entry in the output document.
#[derive(Clone, Debug, Serialize)]
pub struct CodeEntry {
    pub letter: String,
    pub code: Value,
}

/// The output document: `basis` (customer ids), `codes` keyed by customer
/// id, and `dimension_comparison`.
#[derive(Clone, Debug, Serialize)]
pub struct CodeBookDocument {
    pub basis: Vec<String>,
    pub codes: BTreeMap<String, CodeEntry>,
    pub dimension_comparison: DimensionComparison,
}

pub fn codebook_document(cg: &CustomerGraph, cb: &CodeBook, report: &CodeBookReport) -> CodeBookDocument {
    CodeBookDocument {
        basis: cb.basis.members().iter().map(|&v| cg.customers[v].id.clone()).collect(),
        codes: cg
            .customers
            .iter()
            .zip(&cb.codes)
            .map(|(c, code)| {
                (
                    c.id.clone(),
                    CodeEntry {
                        letter: code.letter.clone(),
                        code: numbers(code.representation.coords()),
                    },
                )
            })
            .collect(),
        dimension_comparison: report.dimension_comparison.clone(),
    }
}
