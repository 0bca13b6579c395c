//! Simple connected graphs on dense vertex ids `0..n`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Edge weight. `Infinite` edges keep adjacency but are never traversed by
/// shortest-path computations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Weight {
    Finite(f64),
    Infinite,
}

impl Weight {
    pub fn is_finite(self) -> bool {
        matches!(self, Weight::Finite(_))
    }

    pub fn value(self) -> Option<f64> {
        match self {
            Weight::Finite(w) => Some(w),
            Weight::Infinite => None,
        }
    }
}

/// An immutable simple graph.
///
/// Construction validates that there are no loops or multi-edges, that all
/// finite weights are positive, and that the graph stays connected when the
/// `Infinite` edges are removed.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    weights: Option<Vec<Weight>>,
    labels: BTreeMap<usize, String>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Unweighted graph; every edge has implicit weight 1.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::build(n, edges, None)
    }

    /// Weighted graph; `weights[i]` belongs to `edges[i]`.
    pub fn with_weights(n: usize, edges: &[(usize, usize)], weights: &[Weight]) -> Result<Self> {
        if weights.len() != edges.len() {
            return Err(Error::WeightCountMismatch {
                edges: edges.len(),
                weights: weights.len(),
            });
        }
        Self::build(n, edges, Some(weights))
    }

    fn build(n: usize, edges: &[(usize, usize)], weights: Option<&[Weight]>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut normalized: Vec<((usize, usize), Weight)> = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            let w = weights.map_or(Weight::Finite(1.0), |ws| ws[i]);
            if let Weight::Finite(x) = w {
                if !(x.is_finite() && x > 0.0) {
                    return Err(Error::NonPositiveWeight(u, v));
                }
            }
            normalized.push(((u.min(v), u.max(v)), w));
        }
        normalized.sort_by_key(|&(e, _)| e);
        if let Some(pair) = normalized.windows(2).find(|p| p[0].0 == p[1].0) {
            let (u, v) = pair[0].0;
            return Err(Error::DuplicateEdge(u, v));
        }

        let mut adj = vec![Vec::new(); n];
        for (i, &((u, v), _)) in normalized.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        let graph = Graph {
            n,
            edges: normalized.iter().map(|&(e, _)| e).collect(),
            weights: weights.map(|_| normalized.iter().map(|&(_, w)| w).collect()),
            labels: BTreeMap::new(),
            adj,
        };
        if !graph.finite_part_connected() {
            return Err(Error::Disconnected);
        }
        Ok(graph)
    }

    /// Attaches cosmetic vertex labels. Ids outside the graph are ignored.
    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Self {
        self.labels = labels.into_iter().filter(|&(v, _)| v < self.n).collect();
        self
    }

    fn finite_part_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &(v, e) in &self.adj[u] {
                if !seen[v] && self.weight(e).is_finite() {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// n(G).
    pub fn order(&self) -> usize {
        self.n
    }

    /// m(G), `Infinite` edges included.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in sorted order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weight(&self, edge: usize) -> Weight {
        self.weights.as_ref().map_or(Weight::Finite(1.0), |w| w[edge])
    }

    /// True when weights were supplied explicitly.
    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    /// True when every edge has finite weight exactly 1.
    pub fn is_unit_weighted(&self) -> bool {
        self.weights
            .as_ref()
            .is_none_or(|ws| ws.iter().all(|&w| w == Weight::Finite(1.0)))
    }

    /// `(neighbor, edge index)` pairs.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    /// The label of `v`, or its id when unlabeled.
    pub fn label(&self, v: usize) -> String {
        self.labels.get(&v).cloned().unwrap_or_else(|| v.to_string())
    }

    /// Two-colorability over all edges, `Infinite` ones included.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        color[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &self.adj[u] {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    return false;
                }
            }
        }
        true
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(v, _) in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn triangle_count(&self) -> usize {
        let mut count = 0;
        for &(u, v) in &self.edges {
            for &(w, _) in &self.adj[v] {
                if w > v && self.has_edge(u, w) {
                    count += 1;
                }
            }
        }
        count
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }
}

/// Structural equality: labels are cosmetic and not compared.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.edges == other.edges
            && (0..self.edges.len()).all(|e| self.weight(e) == other.weight(e))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .field("weights", &self.weights)
            .finish()
    }
}

/// An ordered list of distinct vertex ids of some host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(transparent)]
pub struct VertexSubset(Vec<usize>);

impl VertexSubset {
    pub fn new(members: Vec<usize>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        for &v in &members {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::DuplicateMember(v));
            }
        }
        Ok(VertexSubset(members))
    }

    /// Like [`VertexSubset::new`] but rejects the empty set.
    pub fn nonempty(members: Vec<usize>, n: usize) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptySubset);
        }
        Self::new(members, n)
    }

    /// V(G) in id order.
    pub fn all(n: usize) -> Self {
        VertexSubset((0..n).collect())
    }

    pub(crate) fn from_sorted_unchecked(members: Vec<usize>) -> Self {
        VertexSubset(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn is_subset_of(&self, other: &VertexSubset) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    /// Copy with members in increasing id order.
    pub fn sorted(&self) -> Self {
        let mut m = self.0.clone();
        m.sort_unstable();
        VertexSubset(m)
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.0.is_empty() {
            Err(Error::EmptySubset)
        } else {
            Ok(())
        }
    }
}

impl<'a> IntoIterator for &'a VertexSubset {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
