//! Standard families and the named example graphs, each with a structural
//! self-check and, where applicable, the product chain that builds it.

use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSubset};
use crate::products::{hierarchical_product, ProductSpec};

/// P_n on `0..n` in path order.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

/// C_n on `0..n` in cyclic order.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameter("cycle needs n >= 3".into()));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// K_n.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("complete graph needs n >= 1".into()));
    }
    let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    Graph::new(n, &edges)
}

/// The `rows × cols` grid; cell `(r, c)` has id `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
    if rows == 0 || cols == 0 {
        return Err(Error::BadParameter("grid needs positive dimensions".into()));
    }
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::new(rows * cols, &edges)
}

/// A random connected graph: a random recursive tree plus every other pair
/// independently with probability `p`.
pub fn random_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        edges.push((parent, v));
    }
    for a in 0..n {
        for b in a + 1..n {
            if !edges.contains(&(a, b)) && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n.max(1), &edges).expect("tree plus edges is connected")
}

/// Expected structure of a named graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expected {
    pub order: usize,
    pub size: usize,
    pub regular: Option<usize>,
    pub girth: Option<usize>,
    pub triangles: Option<usize>,
    pub bipartite: Option<bool>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SelfCheck {
    pub order: usize,
    pub size: usize,
    pub regular_degree: Option<usize>,
    pub girth: Option<usize>,
    pub triangles: usize,
    pub bipartite: bool,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
    /// Product steps; each step's first factor is the previous step's result
    /// and the last step yields `graph`.
    pub decomposition: Vec<ProductSpec>,
    pub expected: Expected,
}

impl NamedGraph {
    pub fn self_check(&self) -> SelfCheck {
        let g = &self.graph;
        let observed = SelfCheck {
            order: g.order(),
            size: g.size(),
            regular_degree: g.regular_degree(),
            girth: g.girth(),
            triangles: g.triangle_count(),
            bipartite: g.is_bipartite(),
            passed: true,
            failures: Vec::new(),
        };
        let e = &self.expected;
        let mut failures = Vec::new();
        let mut check = |what: &str, ok: bool, detail: String| {
            if !ok {
                failures.push(format!("{what}: {detail}"));
            }
        };
        check(
            "order",
            observed.order == e.order,
            format!("{} != {}", observed.order, e.order),
        );
        check(
            "size",
            observed.size == e.size,
            format!("{} != {}", observed.size, e.size),
        );
        if let Some(d) = e.regular {
            check(
                "regular",
                observed.regular_degree == Some(d),
                format!("{:?} != {d}", observed.regular_degree),
            );
        }
        if let Some(girth) = e.girth {
            check(
                "girth",
                observed.girth == Some(girth),
                format!("{:?} != {girth}", observed.girth),
            );
        }
        if let Some(t) = e.triangles {
            check(
                "triangles",
                observed.triangles == t,
                format!("{} != {t}", observed.triangles),
            );
        }
        if let Some(b) = e.bipartite {
            check(
                "bipartite",
                observed.bipartite == b,
                format!("{} != {b}", observed.bipartite),
            );
        }
        SelfCheck {
            passed: failures.is_empty(),
            failures,
            ..observed
        }
    }

    /// Replays the decomposition chain and returns the final product.
    pub fn rebuild(&self) -> Result<Graph> {
        let mut current: Option<Graph> = None;
        for step in &self.decomposition {
            if let Some(prev) = &current {
                if *prev != step.g {
                    return Err(Error::PreconditionViolated(
                        "decomposition step does not start from the previous product".into(),
                    ));
                }
            }
            current = Some(hierarchical_product(step)?.into_graph());
        }
        current.ok_or_else(|| Error::PreconditionViolated(format!("{} has no decomposition", self.name)))
    }
}

fn simple(name: String, graph: Graph, expected: Expected) -> NamedGraph {
    NamedGraph {
        name,
        graph,
        decomposition: Vec::new(),
        expected,
    }
}

/// Γ_{n,k} = P_{2n+1}(U) ⊓ C_k with U the odd-position path vertices
/// v₁, v₃, …, v_{2n+1} (ids 0, 2, …, 2n).
pub fn gamma(n: usize, k: usize) -> Result<NamedGraph> {
    if n < 1 || k < 3 {
        return Err(Error::BadParameter("gamma needs n >= 1 and k >= 3".into()));
    }
    let p = path(2 * n + 1)?;
    let u = VertexSubset::new((0..=n).map(|i| 2 * i).collect(), 2 * n + 1)?;
    let spec = ProductSpec::new(p, u, cycle(k)?)?;
    let graph = hierarchical_product(&spec)?.into_graph();
    Ok(NamedGraph {
        name: format!("gamma_{n}_{k}"),
        graph,
        decomposition: vec![spec],
        expected: Expected {
            order: (2 * n + 1) * k,
            size: 2 * n * k + (n + 1) * k,
            bipartite: Some(k.is_multiple_of(2)),
            girth: Some(k.min(6)),
            ..Expected::default()
        },
    })
}

/// The dodecahedral graph, as the generalized Petersen graph GP(10, 2):
/// outer 10-cycle `0..10`, spokes `i — 10+i`, inner edges `10+i — 10+(i+2)`.
pub fn dodecahedron() -> NamedGraph {
    let mut edges = Vec::with_capacity(30);
    for i in 0..10 {
        edges.push((i, (i + 1) % 10));
        edges.push((i, 10 + i));
        edges.push((10 + i, 10 + (i + 2) % 10));
    }
    let graph = Graph::new(20, &edges).expect("dodecahedron is a valid graph");
    simple(
        "dodecahedron".into(),
        graph,
        Expected {
            order: 20,
            size: 30,
            regular: Some(3),
            girth: Some(5),
            triangles: Some(0),
            bipartite: Some(false),
        },
    )
}

/// The three-step construction of the truncated cube from a triangle
/// `a, b, c` (ids 0, 1, 2):
///
/// * `W = C₃({a}) ⊓ P₂`, two triangles joined at `a`;
/// * `G = W({(b,0), (b,1)}) ⊓ P₂`;
/// * `H = G(c-fiber) ⊓ P₂`, the four copies of `c` in G.
///
/// Each vertex of H receives exactly one rung, one per step, so H is the
/// cube with every corner replaced by a triangle.
pub fn truncated_cube_chain() -> (NamedGraph, NamedGraph, NamedGraph) {
    let labels: BTreeMap<usize, String> = [(0, "a"), (1, "b"), (2, "c")]
        .into_iter()
        .map(|(i, s)| (i, s.to_string()))
        .collect();
    let c3 = cycle(3).expect("C3").with_labels(labels);
    let p2 = path(2).expect("P2");

    let step_a = ProductSpec::new(c3, VertexSubset::new(vec![0], 3).expect("U"), p2.clone()).expect("spec");
    let w = hierarchical_product(&step_a).expect("W").into_graph();
    // (b, h) has id 2 + h in W.
    let step_b = ProductSpec::new(w.clone(), VertexSubset::new(vec![2, 3], 6).expect("U"), p2.clone()).expect("spec");
    let g = hierarchical_product(&step_b).expect("G").into_graph();
    // (c, h1) is 4 + h1 in W, so ((c, h1), h2) is 2 * (4 + h1) + h2 in G.
    let step_c = ProductSpec::new(g.clone(), VertexSubset::new(vec![8, 9, 10, 11], 12).expect("U"), p2).expect("spec");
    let h = hierarchical_product(&step_c).expect("H").into_graph();

    let w = NamedGraph {
        name: "truncated_cube_w".into(),
        graph: w,
        decomposition: vec![step_a.clone()],
        expected: Expected {
            order: 6,
            size: 7,
            girth: Some(3),
            triangles: Some(2),
            bipartite: Some(false),
            ..Expected::default()
        },
    };
    let g = NamedGraph {
        name: "truncated_cube_g".into(),
        graph: g,
        decomposition: vec![step_a.clone(), step_b.clone()],
        expected: Expected {
            order: 12,
            size: 16,
            girth: Some(3),
            triangles: Some(4),
            bipartite: Some(false),
            ..Expected::default()
        },
    };
    let h = NamedGraph {
        name: "truncated_cube".into(),
        graph: h,
        decomposition: vec![step_a, step_b, step_c],
        expected: Expected {
            order: 24,
            size: 36,
            regular: Some(3),
            girth: Some(3),
            triangles: Some(8),
            bipartite: Some(false),
        },
    };
    (w, g, h)
}

/// Gallery lookup used by the command line.
pub fn by_name(name: &str, n: Option<usize>, k: Option<usize>) -> Result<NamedGraph> {
    let need = |x: Option<usize>, flag: &str| x.ok_or_else(|| Error::BadParameter(format!("{name} needs --{flag}")));
    Ok(match name {
        "path" => {
            let n = need(n, "n")?;
            simple(
                format!("path_{n}"),
                path(n)?,
                Expected {
                    order: n,
                    size: n - 1,
                    bipartite: Some(true),
                    ..Expected::default()
                },
            )
        }
        "cycle" => {
            let n = need(n, "n")?;
            simple(
                format!("cycle_{n}"),
                cycle(n)?,
                Expected {
                    order: n,
                    size: n,
                    regular: Some(2),
                    girth: Some(n),
                    bipartite: Some(n % 2 == 0),
                    ..Expected::default()
                },
            )
        }
        "complete" => {
            let n = need(n, "n")?;
            simple(
                format!("complete_{n}"),
                complete(n)?,
                Expected {
                    order: n,
                    size: n * (n - 1) / 2,
                    regular: Some(n - 1),
                    bipartite: Some(n <= 2),
                    ..Expected::default()
                },
            )
        }
        "gamma" => gamma(need(n, "n")?, need(k, "k")?)?,
        "dodecahedron" => dodecahedron(),
        "truncated-cube" => truncated_cube_chain().2,
        "truncated-cube-w" => truncated_cube_chain().0,
        "truncated-cube-g" => truncated_cube_chain().1,
        other => return Err(Error::BadParameter(format!("unknown gallery entry {other:?}"))),
    })
}

/// Names accepted by [`by_name`].
pub const GALLERY_NAMES: &[&str] = &[
    "path",
    "cycle",
    "complete",
    "gamma",
    "dodecahedron",
    "truncated-cube",
    "truncated-cube-w",
    "truncated-cube-g",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_families() {
        assert_eq!(path(2).unwrap().size(), 1);
        assert_eq!(cycle(5).unwrap().size(), 5);
        assert_eq!(complete(4).unwrap().size(), 6);
        assert!(matches!(cycle(2), Err(Error::BadParameter(_))));
        assert!(matches!(path(0), Err(Error::BadParameter(_))));
        let g = grid(3, 4).unwrap();
        assert_eq!((g.order(), g.size()), (12, 17));
    }

    #[test]
    fn every_entry_passes_its_self_check() {
        let mut entries = vec![dodecahedron()];
        let (w, g, h) = truncated_cube_chain();
        entries.extend([w, g, h]);
        for n in 1..=3 {
            for k in 3..=8 {
                entries.push(gamma(n, k).unwrap());
            }
        }
        for name in ["path", "cycle", "complete"] {
            entries.push(by_name(name, Some(5), None).unwrap());
        }
        for e in &entries {
            let report = e.self_check();
            assert!(report.passed, "{}: {:?}", e.name, report.failures);
        }
    }

    #[test]
    fn gamma_is_bipartite_iff_k_even() {
        for n in 1..=3 {
            for k in 3..=8 {
                assert_eq!(gamma(n, k).unwrap().graph.is_bipartite(), k % 2 == 0);
            }
        }
        assert_eq!(gamma(2, 5).unwrap().graph.order(), 25);
    }

    #[test]
    fn chains_rebuild_exactly() {
        let (w, g, h) = truncated_cube_chain();
        for e in [w, g, h, gamma(2, 3).unwrap()] {
            assert_eq!(e.rebuild().unwrap(), e.graph, "{}", e.name);
        }
        assert!(dodecahedron().rebuild().is_err());
    }

    #[test]
    fn truncated_cube_labels() {
        let (w, _, h) = truncated_cube_chain();
        assert_eq!(w.graph.label(0), "a,0");
        assert_eq!(h.graph.label(23), "c,1,1,1");
    }

    #[test]
    fn lookup_errors() {
        assert!(by_name("gamma", Some(1), None).is_err());
        assert!(by_name("petersen", None, None).is_err());
    }
}
