//! Landmark representations, generator predicates, and exact computation of
//! the metric, local metric, and U-metric local dimensions.

mod bitset;
mod search;

use serde::Serialize;

use crate::distance::{distances_differ, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSubset};
use search::{CoverInstance, Parallelism};

/// Distances from a vertex to an ordered landmark list.
#[derive(Clone, Debug, Serialize)]
#[serde(transparent)]
pub struct Representation(Vec<f64>);

impl Representation {
    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when some coordinate differs beyond the distance tolerance.
    pub fn differs_from(&self, other: &Representation) -> bool {
        self.0.len() != other.0.len() || self.0.iter().zip(&other.0).any(|(&a, &b)| distances_differ(a, b))
    }
}

/// Coordinate-wise equality up to [`crate::distance::DISTANCE_TOLERANCE`].
impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        !self.differs_from(other)
    }
}

/// r(v|S): the distances from `v` to each landmark of `s`, in order.
pub fn representation(dm: &DistanceMatrix, s: &VertexSubset, v: usize) -> Result<Representation> {
    s.require_nonempty()?;
    Ok(Representation(s.members().iter().map(|&x| dm.get(v, x)).collect()))
}

/// r_{G(U)}(v|S): like [`representation`] with walk-through-U distances.
pub fn u_representation(dm: &DistanceMatrix, u: &VertexSubset, s: &VertexSubset, v: usize) -> Result<Representation> {
    s.require_nonempty()?;
    let through = dm.through(u)?;
    representation(&through, s, v)
}

/// All vertices have pairwise different representations.
pub fn is_metric_generator(dm: &DistanceMatrix, s: &VertexSubset) -> Result<bool> {
    s.require_nonempty()?;
    let reps: Vec<Representation> = (0..dm.order())
        .map(|v| representation(dm, s, v))
        .collect::<Result<_>>()?;
    Ok((0..reps.len()).all(|a| (a + 1..reps.len()).all(|b| reps[a].differs_from(&reps[b]))))
}

fn separates_edges(g: &Graph, dm: &DistanceMatrix, s: &VertexSubset) -> Result<bool> {
    s.require_nonempty()?;
    for &(a, b) in g.edges() {
        if !representation(dm, s, a)?.differs_from(&representation(dm, s, b)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The endpoints of every edge, `Infinite` ones included, have different
/// representations.
pub fn is_local_metric_generator(g: &Graph, dm: &DistanceMatrix, s: &VertexSubset) -> Result<bool> {
    separates_edges(g, dm, s)
}

/// Local generator test with walk-through-`u` distances.
pub fn is_u_local_generator(g: &Graph, dm: &DistanceMatrix, u: &VertexSubset, s: &VertexSubset) -> Result<bool> {
    separates_edges(g, &dm.through(u)?, s)
}

/// Which pairs a landmark set has to separate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DimensionKind {
    /// Every pair of vertices: dim(G).
    Metric,
    /// Endpoints of every edge: dimℓ(G).
    Local,
    /// Endpoints of every edge under walk-through-U distances: dimℓ(G|U).
    ULocal(VertexSubset),
}

/// How [`find_dimension`] searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Branching cover search with bounds.
    #[default]
    Pruned,
    /// Every subset in lexicographic order, by increasing size.
    Naive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Also return every minimum generator.
    pub enumerate_all: bool,
    pub strategy: Strategy,
    /// Worker threads: 1 runs sequentially, 0 uses the global rayon pool.
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            enumerate_all: false,
            strategy: Strategy::Pruned,
            threads: 1,
        }
    }
}

impl SearchOptions {
    pub fn all_bases() -> Self {
        SearchOptions {
            enumerate_all: true,
            ..Self::default()
        }
    }
}

/// A dimension with its lexicographically least basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionResult {
    pub value: usize,
    pub basis: VertexSubset,
    /// Every minimum generator, in lexicographic order, when requested.
    pub all_minimum_bases: Option<Vec<VertexSubset>>,
}

struct Targets {
    pairs: Vec<(usize, usize)>,
    distances: DistanceMatrix,
}

fn targets(g: &Graph, dm: &DistanceMatrix, kind: &DimensionKind) -> Result<Targets> {
    Ok(match kind {
        DimensionKind::Metric => {
            let n = g.order();
            Targets {
                pairs: (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect(),
                distances: dm.clone(),
            }
        }
        DimensionKind::Local => Targets {
            pairs: g.edges().to_vec(),
            distances: dm.clone(),
        },
        DimensionKind::ULocal(u) => Targets {
            pairs: g.edges().to_vec(),
            distances: dm.through(u)?,
        },
    })
}

/// Pairs (vertex pairs for `Metric`, edges otherwise) whose representations
/// differ in the coordinate of landmark `v`.
pub fn distinguishing_pairs(
    g: &Graph,
    dm: &DistanceMatrix,
    v: usize,
    kind: &DimensionKind,
) -> Result<Vec<(usize, usize)>> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.order(),
        });
    }
    let t = targets(g, dm, kind)?;
    Ok(t.pairs
        .into_iter()
        .filter(|&(a, b)| distances_differ(t.distances.get(v, a), t.distances.get(v, b)))
        .collect())
}

/// Exact minimum generator of the requested kind.
///
/// Sizes are tried in increasing order; the reported basis is the
/// lexicographically least minimum generator regardless of strategy or
/// thread count. Fails with [`Error::NoGenerator`] when even V(G) does not
/// separate every target, which can happen for `ULocal`.
pub fn find_dimension(g: &Graph, kind: &DimensionKind, opts: &SearchOptions) -> Result<DimensionResult> {
    let dm = crate::distance::all_pairs_distances(g);
    find_dimension_with(g, &dm, kind, opts)
}

/// [`find_dimension`] with a precomputed distance matrix.
pub fn find_dimension_with(
    g: &Graph,
    dm: &DistanceMatrix,
    kind: &DimensionKind,
    opts: &SearchOptions,
) -> Result<DimensionResult> {
    if let DimensionKind::ULocal(u) = kind {
        u.require_nonempty()?;
        VertexSubset::new(u.members().to_vec(), g.order())?;
    }
    let t = targets(g, dm, kind)?;
    let inst = CoverInstance::new(g.order(), t.pairs.len(), |c, i| {
        let (a, b) = t.pairs[i];
        distances_differ(t.distances.get(c, a), t.distances.get(c, b))
    });
    let found = match opts.strategy {
        Strategy::Naive => search::naive(&inst, opts.enumerate_all),
        Strategy::Pruned => {
            // One landmark separates every edge exactly when hop distances
            // to it alternate in parity, i.e. when the graph is bipartite.
            // Weighted distances have no such parity structure.
            let lower = if *kind == DimensionKind::Local && g.is_unit_weighted() && !g.is_bipartite() {
                2
            } else {
                1
            };
            match opts.threads {
                1 => search::pruned(&inst, lower, opts.enumerate_all, Parallelism::Sequential),
                0 => search::pruned(&inst, lower, opts.enumerate_all, Parallelism::Rayon),
                k => rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build()
                    .map_err(|e| Error::BadParameter(e.to_string()))?
                    .install(|| search::pruned(&inst, lower, opts.enumerate_all, Parallelism::Rayon)),
            }
        }
    }
    .ok_or(Error::NoGenerator)?;
    Ok(DimensionResult {
        value: found.size,
        basis: VertexSubset::from_sorted_unchecked(found.witness),
        all_minimum_bases: found
            .all
            .map(|all| all.into_iter().map(VertexSubset::from_sorted_unchecked).collect()),
    })
}

/// dim(G).
pub fn metric_dimension(g: &Graph) -> Result<DimensionResult> {
    find_dimension(g, &DimensionKind::Metric, &SearchOptions::default())
}

/// dimℓ(G).
pub fn local_dimension(g: &Graph) -> Result<DimensionResult> {
    find_dimension(g, &DimensionKind::Local, &SearchOptions::default())
}

/// dimℓ(G|U).
pub fn u_local_dimension(g: &Graph, u: &VertexSubset) -> Result<DimensionResult> {
    find_dimension(g, &DimensionKind::ULocal(u.clone()), &SearchOptions::default())
}
