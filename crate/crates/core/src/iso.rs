//! Canonical labeling of small graphs by individualization and refinement.
//!
//! Every leaf of the search tree is explored (no automorphism pruning), so
//! this is meant for graphs of a few dozen vertices with modest symmetry.
//! Edge weights are ignored.

use crate::graph::Graph;

type Partition = Vec<Vec<usize>>;

fn refine(g: &Graph, mut part: Partition) -> Partition {
    let n = g.order();
    loop {
        let mut cell_of = vec![0; n];
        for (i, cell) in part.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut next: Partition = Vec::with_capacity(part.len());
        for cell in &part {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0; part.len()];
                    for &(w, _) in g.neighbors(v) {
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == part.len() {
            return next;
        }
        part = next;
    }
}

fn relabeled_edges(g: &Graph, part: &Partition) -> Vec<(usize, usize)> {
    let mut pos = vec![0; g.order()];
    for (i, cell) in part.iter().enumerate() {
        pos[cell[0]] = i;
    }
    let mut edges: Vec<_> = g
        .edges()
        .iter()
        .map(|&(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b])))
        .collect();
    edges.sort_unstable();
    edges
}

fn search(g: &Graph, part: Partition, best: &mut Option<Vec<(usize, usize)>>) {
    let Some(target) = part.iter().position(|c| c.len() > 1) else {
        let form = relabeled_edges(g, &part);
        if best.as_ref().is_none_or(|b| form < *b) {
            *best = Some(form);
        }
        return;
    };
    for &v in &part[target] {
        let mut next = part.clone();
        let rest: Vec<usize> = part[target].iter().copied().filter(|&w| w != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        search(g, refine(g, next), best);
    }
}

/// Canonical edge list: isomorphic graphs, and only those, get equal forms.
pub fn canonical_form(g: &Graph) -> (usize, Vec<(usize, usize)>) {
    let part = refine(g, vec![(0..g.order()).collect()]);
    let mut best = None;
    search(g, part, &mut best);
    (g.order(), best.unwrap_or_default())
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && a.triangle_count() == b.triangle_count()
        && canonical_form(a) == canonical_form(b)
}
