//! Generalized hierarchical products G(U) ⊓ H and the operations built on
//! them.
//!
//! The product has vertex set V(G) × V(H). Every H-layer carries a copy of
//! G, and the H-edges are only present above vertices of U. Product vertex
//! `(g, h)` has id `g * n(H) + h`.

use std::collections::BTreeMap;

use crate::dimension::{is_local_metric_generator, local_dimension};
use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSubset};

/// A product instance (G, U, H).
#[derive(Clone, Debug)]
pub struct ProductSpec {
    pub g: Graph,
    pub u: VertexSubset,
    pub h: Graph,
}

impl ProductSpec {
    pub fn new(g: Graph, u: VertexSubset, h: Graph) -> Result<Self> {
        u.require_nonempty()?;
        let u = VertexSubset::new(u.members().to_vec(), g.order())?;
        if g.is_weighted() || h.is_weighted() {
            return Err(Error::WeightedFactor);
        }
        Ok(ProductSpec { g, u, h })
    }

    /// U = V(G), i.e. the Cartesian product.
    pub fn cartesian(g: Graph, h: Graph) -> Result<Self> {
        let u = VertexSubset::all(g.order());
        Self::new(g, u, h)
    }

    pub fn id(&self, g: usize, h: usize) -> usize {
        g * self.h.order() + h
    }
}

/// The constructed product together with its coordinate map.
#[derive(Clone, Debug)]
pub struct ProductGraph {
    graph: Graph,
    n_h: usize,
}

impl ProductGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn id(&self, g: usize, h: usize) -> usize {
        g * self.n_h + h
    }

    pub fn coords(&self, id: usize) -> (usize, usize) {
        (id / self.n_h, id % self.n_h)
    }
}

/// G(U) ⊓ H.
pub fn hierarchical_product(spec: &ProductSpec) -> Result<ProductGraph> {
    let (g, h, u) = (&spec.g, &spec.h, &spec.u);
    u.require_nonempty()?;
    let n_h = h.order();
    let id = |a: usize, b: usize| a * n_h + b;
    let mut edges = Vec::with_capacity(g.size() * n_h + u.len() * h.size());
    for &(a, b) in g.edges() {
        for x in 0..n_h {
            edges.push((id(a, x), id(b, x)));
        }
    }
    for &a in u {
        for &(x, y) in h.edges() {
            edges.push((id(a, x), id(a, y)));
        }
    }
    let mut labels = BTreeMap::new();
    for a in 0..g.order() {
        for x in 0..n_h {
            labels.insert(id(a, x), format!("{},{}", g.label(a), h.label(x)));
        }
    }
    let graph = Graph::new(g.order() * n_h, &edges)?.with_labels(labels);
    Ok(ProductGraph { graph, n_h })
}

/// G □ H.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    hierarchical_product(&ProductSpec::cartesian(g.clone(), h.clone())?)
}

/// Distances in G(U) ⊓ H computed from the factors alone:
/// `d_{G(U)}(g, g') + d_H(h, h')` across layers and `d_G(g, g')` within one.
pub struct HierarchicalDistance {
    dm_g: DistanceMatrix,
    through_g: DistanceMatrix,
    dm_h: DistanceMatrix,
}

impl HierarchicalDistance {
    pub fn new(spec: &ProductSpec) -> Result<Self> {
        let dm_g = all_pairs_distances(&spec.g);
        let through_g = dm_g.through(&spec.u)?;
        Ok(HierarchicalDistance {
            dm_g,
            through_g,
            dm_h: all_pairs_distances(&spec.h),
        })
    }

    pub fn distance(&self, (g, h): (usize, usize), (g2, h2): (usize, usize)) -> f64 {
        if h == h2 {
            self.dm_g.get(g, g2)
        } else {
            self.through_g.get(g, g2) + self.dm_h.get(h, h2)
        }
    }
}

/// One-off distance between two product vertices given as coordinates.
pub fn hierarchical_distance(spec: &ProductSpec, a: (usize, usize), b: (usize, usize)) -> Result<f64> {
    Ok(HierarchicalDistance::new(spec)?.distance(a, b))
}

fn require_unweighted(gs: &[&Graph]) -> Result<()> {
    if gs.iter().any(|g| g.is_weighted()) {
        Err(Error::WeightedFactor)
    } else {
        Ok(())
    }
}

/// G + H: disjoint union plus every G–H edge. H's vertices follow G's.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    require_unweighted(&[g, h])?;
    let off = g.order();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(a, b)| (a + off, b + off)));
    for a in 0..g.order() {
        for b in 0..h.order() {
            edges.push((a, b + off));
        }
    }
    Graph::new(off + h.order(), &edges)
}

/// G ⊙ H built as (H + K₁)({K₁}) ⊓ G.
///
/// Vertex `i < n(G)` is vertex `i` of G; vertex `j` of the copy of H hanging
/// off `i` is `n(G) + i * n(H) + j`.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    require_unweighted(&[g, h])?;
    let (n_g, n_h) = (g.order(), h.order());
    let k1 = Graph::new(1, &[])?;
    let cone = join(h, &k1)?;
    let spec = ProductSpec::new(cone, VertexSubset::new(vec![n_h], n_h + 1)?, g.clone())?;
    let product = hierarchical_product(&spec)?;
    let relabel = |id: usize| {
        let (x, i) = product.coords(id);
        if x == n_h {
            i
        } else {
            n_g + i * n_h + x
        }
    };
    let edges: Vec<_> = product
        .graph()
        .edges()
        .iter()
        .map(|&(a, b)| (relabel(a), relabel(b)))
        .collect();
    Graph::new(n_g * (n_h + 1), &edges)
}

/// G ⊙ H from the definition: a copy of G and n(G) copies of H, every vertex
/// of the i-th copy adjacent to vertex i of G. Same numbering as [`corona`].
pub fn corona_direct(g: &Graph, h: &Graph) -> Result<Graph> {
    require_unweighted(&[g, h])?;
    let (n_g, n_h) = (g.order(), h.order());
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    for i in 0..n_g {
        let base = n_g + i * n_h;
        edges.extend(h.edges().iter().map(|&(a, b)| (base + a, base + b)));
        edges.extend((0..n_h).map(|j| (i, base + j)));
    }
    Graph::new(n_g * (n_h + 1), &edges)
}

fn check_local_generator(name: &str, g: &Graph, s: &VertexSubset) -> Result<()> {
    s.require_nonempty()?;
    VertexSubset::new(s.members().to_vec(), g.order())?;
    if !is_local_metric_generator(g, &all_pairs_distances(g), s)? {
        return Err(Error::PreconditionViolated(format!(
            "{name} is not a local metric generator"
        )));
    }
    Ok(())
}

fn check_local_basis(name: &str, g: &Graph, s: &VertexSubset) -> Result<()> {
    check_local_generator(name, g, s)?;
    if s.len() != local_dimension(g)?.value {
        return Err(Error::PreconditionViolated(format!(
            "{name} is not a minimum local metric generator"
        )));
    }
    Ok(())
}

/// Pairs the i-th landmark of `s_g` with the i-th landmark of `s_h`, cycling
/// the shorter list, giving `max(|s_g|, |s_h|)` product landmarks.
///
/// Requires `s_g ⊆ U` and both sets to be local metric generators of their
/// factors; under these conditions the result is a local metric generator of
/// the product.
pub fn diagonal_generator(spec: &ProductSpec, s_g: &VertexSubset, s_h: &VertexSubset) -> Result<VertexSubset> {
    check_local_generator("S_G", &spec.g, s_g)?;
    check_local_generator("S_H", &spec.h, s_h)?;
    if !s_g.is_subset_of(&spec.u) {
        return Err(Error::PreconditionViolated("S_G is not contained in U".into()));
    }
    let (a, b) = (s_g.members(), s_h.members());
    let k = a.len().max(b.len());
    let members = (0..k).map(|i| spec.id(a[i % a.len()], b[i % b.len()])).collect();
    VertexSubset::new(members, spec.g.order() * spec.h.order())
}

/// `((s_g ∖ U) × V(H)) ∪ {(g_i, h_i)}` where `g_1..g_k` are the landmarks of
/// `s_g` inside U (in the given order) and `h_i` cycles through `s_h`.
///
/// Both inputs must be minimum local metric generators of their factors.
/// The result has `n(H)(|s_g| − k) + k` members.
pub fn fiber_generator(spec: &ProductSpec, s_g: &VertexSubset, s_h: &VertexSubset) -> Result<VertexSubset> {
    check_local_basis("S_G", &spec.g, s_g)?;
    check_local_basis("S_H", &spec.h, s_h)?;
    let inside: Vec<usize> = s_g.members().iter().copied().filter(|&g| spec.u.contains(g)).collect();
    let hs = s_h.members();
    let mut members: Vec<usize> = inside
        .iter()
        .enumerate()
        .map(|(i, &g)| spec.id(g, hs[i % hs.len()]))
        .collect();
    for &g in s_g.members().iter().filter(|&&g| !spec.u.contains(g)) {
        members.extend((0..spec.h.order()).map(|h| spec.id(g, h)));
    }
    VertexSubset::new(members, spec.g.order() * spec.h.order())
}
