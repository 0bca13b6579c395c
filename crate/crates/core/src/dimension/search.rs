//! Exact minimum-generator search over precomputed distinguishing sets.
//!
//! A landmark set is a generator iff the union of the target sets of its
//! members covers every target, so the search is an exact set cover. Two
//! routes are provided: plain lexicographic enumeration of subsets in
//! increasing size, and a branching cover search that branches on the
//! uncovered target with the fewest available coverers, excluding earlier
//! coverers in later branches so every cover is produced once.

use rayon::prelude::*;

use super::bitset::BitSet;

/// Targets and, for each candidate landmark, the targets it distinguishes.
pub(crate) struct CoverInstance {
    pub n_candidates: usize,
    pub n_targets: usize,
    /// Per candidate: targets it distinguishes.
    pub sets: Vec<BitSet>,
    /// Per target: candidates that distinguish it.
    pub coverers: Vec<BitSet>,
}

impl CoverInstance {
    pub fn new(n_candidates: usize, n_targets: usize, distinguishes: impl Fn(usize, usize) -> bool) -> Self {
        let mut sets = vec![BitSet::new(n_targets); n_candidates];
        let mut coverers = vec![BitSet::new(n_candidates); n_targets];
        for (c, set) in sets.iter_mut().enumerate() {
            for (t, cov) in coverers.iter_mut().enumerate() {
                if distinguishes(c, t) {
                    set.insert(t);
                    cov.insert(c);
                }
            }
        }
        CoverInstance {
            n_candidates,
            n_targets,
            sets,
            coverers,
        }
    }

    fn coverable(&self) -> bool {
        self.coverers.iter().all(|c| c.count() > 0)
    }
}

/// Outcome of a search: the minimum size, the lexicographically least
/// minimum cover, and optionally every minimum cover in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Found {
    pub size: usize,
    pub witness: Vec<usize>,
    pub all: Option<Vec<Vec<usize>>>,
}

/// Degree of parallelism for the branching search.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Parallelism {
    Sequential,
    Rayon,
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Lexicographic enumeration of all subsets by increasing size.
pub(crate) fn naive(inst: &CoverInstance, enumerate_all: bool) -> Option<Found> {
    let n = inst.n_candidates;
    for k in 1..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        let mut hits: Vec<Vec<usize>> = Vec::new();
        loop {
            let mut covered = BitSet::new(inst.n_targets);
            for &c in &combo {
                covered.union_with(&inst.sets[c]);
            }
            if covered.is_full() {
                hits.push(combo.clone());
                if !enumerate_all {
                    break;
                }
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
        if let Some(first) = hits.first() {
            return Some(Found {
                size: k,
                witness: first.clone(),
                all: enumerate_all.then_some(hits),
            });
        }
    }
    None
}

struct Brancher<'a> {
    inst: &'a CoverInstance,
}

impl Brancher<'_> {
    /// Uncovered target with the fewest allowed coverers, and those coverers.
    fn pick(&self, covered: &BitSet, allowed: &BitSet) -> Option<Vec<usize>> {
        let mut best: Option<(usize, usize)> = None;
        for t in covered.zeros() {
            let c = self.inst.coverers[t].intersection_count(allowed);
            if best.is_none_or(|(_, bc)| c < bc) {
                best = Some((t, c));
                if c == 0 {
                    break;
                }
            }
        }
        best.map(|(t, _)| self.inst.coverers[t].intersection(allowed).ones().collect())
    }

    /// Lower bound on the landmarks still needed: uncovered targets whose
    /// available coverers are pairwise disjoint each need their own landmark.
    fn packing_bound(&self, covered: &BitSet, allowed: &BitSet) -> usize {
        let mut used = BitSet::new(self.inst.n_candidates);
        let mut count = 0;
        for t in covered.zeros() {
            let cov = self.inst.coverers[t].intersection(allowed);
            if !cov.intersects(&used) {
                used.union_with(&cov);
                count += 1;
            }
        }
        count
    }

    fn branches(&self, covered: &BitSet, allowed: &BitSet, budget: usize) -> Option<Vec<(BitSet, BitSet)>> {
        if budget == 0 || self.packing_bound(covered, allowed) > budget {
            return None;
        }
        let coverers = self.pick(covered, allowed)?;
        let mut out = Vec::with_capacity(coverers.len());
        let mut allowed = allowed.clone();
        for c in coverers {
            allowed.remove(c);
            out.push((covered.union(&self.inst.sets[c]), allowed.clone()));
        }
        Some(out)
    }

    /// Is there a cover of at most `budget` further landmarks from `allowed`?
    fn exists(&self, covered: &BitSet, allowed: &BitSet, budget: usize, par: Parallelism) -> bool {
        if covered.is_full() {
            return true;
        }
        let Some(branches) = self.branches(covered, allowed, budget) else {
            return false;
        };
        match par {
            Parallelism::Sequential => branches
                .iter()
                .any(|(cov, al)| self.exists(cov, al, budget - 1, Parallelism::Sequential)),
            Parallelism::Rayon => branches
                .par_iter()
                .any(|(cov, al)| self.exists(cov, al, budget - 1, Parallelism::Sequential)),
        }
    }

    fn enumerate(
        &self,
        covered: &BitSet,
        allowed: &BitSet,
        budget: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if covered.is_full() {
            let mut s = chosen.clone();
            s.sort_unstable();
            out.push(s);
            return;
        }
        if budget == 0 || self.packing_bound(covered, allowed) > budget {
            return;
        }
        let Some(coverers) = self.pick(covered, allowed) else {
            return;
        };
        let mut allowed = allowed.clone();
        for c in coverers {
            allowed.remove(c);
            chosen.push(c);
            self.enumerate(&covered.union(&self.inst.sets[c]), &allowed, budget - 1, chosen, out);
            chosen.pop();
        }
    }

    fn enumerate_root(&self, budget: usize, par: Parallelism) -> Vec<Vec<usize>> {
        let n = self.inst.n_candidates;
        let covered = BitSet::new(self.inst.n_targets);
        let allowed = BitSet::full(n);
        let coverers = self.pick(&covered, &allowed).unwrap_or_default();
        let branch = |j: usize| {
            let mut allowed = allowed.clone();
            for &c in &coverers[..=j] {
                allowed.remove(c);
            }
            let c = coverers[j];
            let mut out = Vec::new();
            let mut chosen = vec![c];
            self.enumerate(&self.inst.sets[c].clone(), &allowed, budget - 1, &mut chosen, &mut out);
            out
        };
        let mut all: Vec<Vec<usize>> = match par {
            Parallelism::Sequential => (0..coverers.len()).flat_map(branch).collect(),
            Parallelism::Rayon => (0..coverers.len()).into_par_iter().flat_map_iter(branch).collect(),
        };
        all.sort();
        all
    }

    /// Lexicographically least cover of exactly `size` landmarks, assuming
    /// no smaller cover exists.
    fn lex_least(&self, size: usize, par: Parallelism) -> Vec<usize> {
        let n = self.inst.n_candidates;
        let mut covered = BitSet::new(self.inst.n_targets);
        let mut prefix = Vec::with_capacity(size);
        let mut start = 0;
        for pos in 0..size {
            let rest = size - pos - 1;
            let feasible = |i: usize| {
                let cov = covered.union(&self.inst.sets[i]);
                let mut allowed = BitSet::new(n);
                for j in i + 1..n {
                    allowed.insert(j);
                }
                self.exists(&cov, &allowed, rest, Parallelism::Sequential)
            };
            let pick = match par {
                Parallelism::Sequential => (start..n).find(|&i| feasible(i)),
                Parallelism::Rayon => (start..n).into_par_iter().find_first(|&i| feasible(i)),
            }
            .expect("a cover of this size exists");
            covered.union_with(&self.inst.sets[pick]);
            prefix.push(pick);
            start = pick + 1;
        }
        prefix
    }
}

/// Branching cover search starting at `min_size`, which must be a valid
/// lower bound on the answer.
pub(crate) fn pruned(inst: &CoverInstance, min_size: usize, enumerate_all: bool, par: Parallelism) -> Option<Found> {
    if inst.n_targets == 0 {
        // every singleton is a cover
        return naive(inst, enumerate_all);
    }
    if !inst.coverable() {
        return None;
    }
    let n = inst.n_candidates;
    let b = Brancher { inst };
    let empty = BitSet::new(inst.n_targets);
    let everyone = BitSet::full(n);
    let size = (min_size.max(1)..=n).find(|&k| b.exists(&empty, &everyone, k, par))?;
    let witness = b.lex_least(size, par);
    let all = enumerate_all.then(|| b.enumerate_root(size, par));
    if let Some(all) = &all {
        debug_assert_eq!(all.first(), Some(&witness));
    }
    Some(Found { size, witness, all })
}
