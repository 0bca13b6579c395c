//! Shortest-path distances and walk-through-U distances.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, VecDeque};

use crate::error::Result;
use crate::graph::{Graph, VertexSubset, Weight};

/// Two distances closer than this are considered equal. Hop counts are
/// integral, so this only matters for weighted graphs.
pub const DISTANCE_TOLERANCE: f64 = 1e-9;

/// Whether two distances count as different.
#[inline]
pub fn distances_differ(a: f64, b: f64) -> bool {
    (a - b).abs() > DISTANCE_TOLERANCE
}

/// Dense symmetric matrix of distances.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<f64>,
    integral: bool,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> f64 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[f64] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// True when every entry is a hop count.
    pub fn is_integral(&self) -> bool {
        self.integral
    }

    pub fn diameter(&self) -> f64 {
        self.d.iter().copied().fold(0.0, f64::max)
    }

    /// The matrix of walk-through-`u` distances d_{G(U)}.
    ///
    /// The result is symmetric but, unlike a metric, its diagonal is
    /// `2 d(v, U)` rather than zero for `v` outside `u`.
    pub fn through(&self, u: &VertexSubset) -> Result<DistanceMatrix> {
        u.require_nonempty()?;
        let n = self.n;
        let mut d = vec![f64::INFINITY; n * n];
        for a in 0..n {
            for b in a..n {
                let best = u
                    .members()
                    .iter()
                    .map(|&w| self.get(a, w) + self.get(w, b))
                    .fold(f64::INFINITY, f64::min);
                d[a * n + b] = best;
                d[b * n + a] = best;
            }
        }
        Ok(DistanceMatrix {
            n,
            d,
            integral: self.integral,
        })
    }
}

#[derive(PartialEq)]
struct Key(f64);

impl Eq for Key {}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

fn bfs_row(g: &Graph, s: usize, row: &mut [f64]) {
    row.fill(f64::INFINITY);
    row[s] = 0.0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &(v, _) in g.neighbors(u) {
            if row[v].is_infinite() {
                row[v] = row[u] + 1.0;
                queue.push_back(v);
            }
        }
    }
}

fn dijkstra_row(g: &Graph, s: usize, row: &mut [f64]) {
    dijkstra_avoiding(g, s, row, &[]);
}

/// Dijkstra from `s` where vertices marked in `blocked` may be reached but
/// are never passed through. An empty `blocked` slice blocks nothing.
pub(crate) fn dijkstra_avoiding(g: &Graph, s: usize, row: &mut [f64], blocked: &[bool]) {
    row.fill(f64::INFINITY);
    row[s] = 0.0;
    let mut heap = BinaryHeap::from([(Reverse(Key(0.0)), s)]);
    while let Some((Reverse(Key(du)), u)) = heap.pop() {
        if du > row[u] {
            continue;
        }
        if u != s && blocked.get(u).copied().unwrap_or(false) {
            continue;
        }
        for &(v, e) in g.neighbors(u) {
            let Weight::Finite(w) = g.weight(e) else {
                continue;
            };
            let cand = du + w;
            if cand < row[v] {
                row[v] = cand;
                heap.push((Reverse(Key(cand)), v));
            }
        }
    }
}

/// All-pairs shortest-path distances. `Infinite` edges are never traversed.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let unit = g.is_unit_weighted();
    let mut d = vec![0.0; n * n];
    for (s, row) in d.chunks_mut(n).enumerate() {
        if unit {
            bfs_row(g, s, row);
        } else {
            dijkstra_row(g, s, row);
        }
    }
    let integral = unit || d.iter().all(|x| x.fract() == 0.0);
    DistanceMatrix { n, d, integral }
}

/// Length of a shortest u,v-walk that visits some vertex of `subset`.
pub fn u_distance(dm: &DistanceMatrix, subset: &VertexSubset, u: usize, v: usize) -> Result<f64> {
    subset.require_nonempty()?;
    Ok(subset
        .members()
        .iter()
        .map(|&w| dm.get(u, w) + dm.get(w, v))
        .fold(f64::INFINITY, f64::min))
}
