//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fail.

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, Stdio};

use common::{bfs, random_graph, random_spec, rng, small_factors};
use lmdim::bounds::{general_bound_for, verify_bounds};
use lmdim::delivery::{assign_codes, build_customer_graph, CustomerRoster, EdgeOrigin, GeodesicRule};
use lmdim::dimension::{find_dimension, is_local_metric_generator, DimensionKind, SearchOptions};
use lmdim::gallery::{complete, cycle, dodecahedron, gamma, path, truncated_cube_chain};
use lmdim::io::graph_to_json;
use lmdim::iso::is_isomorphic;
use lmdim::products::{cartesian_product, diagonal_generator, fiber_generator, hierarchical_distance, join};
use lmdim::{all_pairs_distances, hierarchical_product, local_dimension, metric_dimension};
use lmdim::{ProductSpec, VertexSubset};
use rand::seq::SliceRandom;
use rand::Rng;

/// Exact dimℓ of the dodecahedron found by the search.
const DODECAHEDRON_LOCAL_DIMENSION: usize = 2;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ldim(g: &lmdim::Graph) -> usize {
    local_dimension(g).unwrap().value
}

fn c1_hierarchical_distance() -> Outcome {
    let mut r = rng(1);
    let mut pairs = 0;
    for i in 0..200 {
        let spec = random_spec(&mut r, 6, 5);
        let p = hierarchical_product(&spec).unwrap();
        for a in 0..p.graph().order() {
            let row = bfs(p.graph(), a);
            for (b, &d) in row.iter().enumerate() {
                let formula = hierarchical_distance(&spec, p.coords(a), p.coords(b)).unwrap();
                ensure(formula == d as f64, || {
                    format!(
                        "spec {i}: {:?} to {:?} formula {formula} bfs {d}",
                        p.coords(a),
                        p.coords(b)
                    )
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("200 specs, {pairs} vertex pairs"))
}

fn c2_cartesian_equality() -> Outcome {
    let factors = small_factors();
    for (gn, g) in &factors {
        for (hn, h) in &factors {
            let exact = ldim(cartesian_product(g, h).unwrap().graph());
            let want = ldim(g).max(ldim(h));
            ensure(exact == want, || format!("{gn} x {hn}: exact {exact}, max {want}"))?;
        }
    }
    Ok(format!("{} ordered pairs", factors.len() * factors.len()))
}

fn c3_bipartite_factor() -> Outcome {
    let gs = [
        ("P2", path(2).unwrap()),
        ("P3", path(3).unwrap()),
        ("C4", cycle(4).unwrap()),
        ("C6", cycle(6).unwrap()),
    ];
    let hs = [
        ("C3", cycle(3).unwrap()),
        ("C5", cycle(5).unwrap()),
        ("K4", complete(4).unwrap()),
    ];
    for (gn, g) in &gs {
        for (hn, h) in &hs {
            let exact = ldim(cartesian_product(g, h).unwrap().graph());
            ensure(exact == ldim(h), || {
                format!("{gn} x {hn}: exact {exact}, dimℓ(H) {}", ldim(h))
            })?;
        }
    }
    Ok("12 pairs".into())
}

fn c4_sandwich() -> Outcome {
    let mut r = rng(4);
    for i in 0..100 {
        let g = random_graph(&mut r, 1, 6);
        let h = random_graph(&mut r, 1, 5);
        let bases = find_dimension(&g, &DimensionKind::Local, &SearchOptions::all_bases())
            .unwrap()
            .all_minimum_bases
            .unwrap();
        let s_g = bases.choose(&mut r).unwrap().clone();
        let mut u: Vec<usize> = s_g.members().to_vec();
        u.extend((0..g.order()).filter(|v| !s_g.contains(*v) && r.gen_bool(0.3)));
        let n = g.order();
        let spec = ProductSpec::new(g, VertexSubset::new(u, n).unwrap(), h).unwrap();
        let rep = verify_bounds(&spec, 64).unwrap();
        ensure(rep.sandwich_applicable, || format!("spec {i}: not applicable"))?;
        let (lo, hi) = (rep.sandwich_lower.unwrap(), rep.sandwich_upper.unwrap());
        ensure(lo <= rep.exact && rep.exact <= hi, || {
            format!("spec {i}: {lo} <= {} <= {hi} fails", rep.exact)
        })?;
        let s_h = local_dimension(&spec.h).unwrap().basis;
        let s = diagonal_generator(&spec, &s_g, &s_h).unwrap();
        let p = hierarchical_product(&spec).unwrap();
        let ok = is_local_metric_generator(p.graph(), &all_pairs_distances(p.graph()), &s).unwrap();
        ensure(ok, || {
            format!("spec {i}: diagonal generator {:?} rejected", s.members())
        })?;
    }
    Ok("100 applicable specs, bounds and generator hold".into())
}

fn c5_general_bound() -> Outcome {
    let mut r = rng(5);
    let mut checked = 0;
    let mut bound_failures = Vec::new();
    let mut generator_failures = Vec::new();
    for i in 0..100 {
        let spec = random_spec(&mut r, 6, 5);
        let exact = ldim(hierarchical_product(&spec).unwrap().graph());
        let bases = find_dimension(&spec.g, &DimensionKind::Local, &SearchOptions::all_bases())
            .unwrap()
            .all_minimum_bases
            .unwrap();
        let s_h = local_dimension(&spec.h).unwrap().basis;
        let p = hierarchical_product(&spec).unwrap();
        let dm = all_pairs_distances(p.graph());
        for s_g in &bases {
            checked += 1;
            let bound = general_bound_for(&spec, s_g);
            if exact > bound {
                bound_failures.push(format!(
                    "spec {i} (n(G)={}, U={:?}, n(H)={}, S_G={:?}): exact {exact} > bound {bound}",
                    spec.g.order(),
                    spec.u.members(),
                    spec.h.order(),
                    s_g.members()
                ));
            }
            let s = fiber_generator(&spec, s_g, &s_h).unwrap();
            if !is_local_metric_generator(p.graph(), &dm, &s).unwrap() {
                generator_failures.push(i);
            }
        }
    }
    if bound_failures.is_empty() && generator_failures.is_empty() {
        Ok(format!("100 specs, {checked} (spec, S_G) pairs"))
    } else {
        Err(format!(
            "{} of {checked} (spec, S_G) pairs exceed the bound, {} generator outputs rejected; first: {}",
            bound_failures.len(),
            generator_failures.len(),
            bound_failures.first().map_or("-", String::as_str)
        ))
    }
}

fn c6_gamma() -> Outcome {
    for n in 1..=2 {
        for k in 3..=6 {
            let gm = gamma(n, k).unwrap();
            let want = if k % 2 == 0 { 1 } else { 2 };
            let got = ldim(&gm.graph);
            ensure(got == want, || format!("gamma({n},{k}): {got}, expected {want}"))?;
        }
    }
    Ok("n in {1,2}, k in 3..=6".into())
}

fn c7_dodecahedron() -> Outcome {
    let d = dodecahedron();
    ensure(d.self_check().passed, || {
        format!("self-check {:?}", d.self_check().failures)
    })?;
    let v = ldim(&d.graph);
    ensure(v <= 4, || format!("dimℓ = {v} > 4"))?;
    ensure(v == DODECAHEDRON_LOCAL_DIMENSION, || {
        format!("dimℓ = {v}, recorded {DODECAHEDRON_LOCAL_DIMENSION}")
    })?;
    Ok(format!("dimℓ = {v} <= 4"))
}

fn c8_truncated_cube() -> Outcome {
    let (w, g, h) = truncated_cube_chain();
    let dw = ldim(&w.graph);
    ensure(dw == 2, || format!("dimℓ(W) = {dw}"))?;

    // G = W(U) ⊓ P₂ with U a local metric basis of W.
    let step_b = &g.decomposition[1];
    ensure(step_b.g == w.graph, || "step (b) does not start from W".into())?;
    let u_is_basis =
        step_b.u.len() == dw && is_local_metric_generator(&w.graph, &all_pairs_distances(&w.graph), &step_b.u).unwrap();
    ensure(u_is_basis, || {
        format!("U = {:?} is not a local metric basis of W", step_b.u.members())
    })?;
    ensure(!g.graph.is_bipartite(), || "G is bipartite".into())?;
    let upper = dw.max(ldim(&step_b.h));
    let dg = ldim(&g.graph);
    ensure(upper == 2 && dg == 2, || format!("dimℓ(G) = {dg}, upper bound {upper}"))?;

    let dh = ldim(&h.graph);
    ensure(dh <= 4, || format!("dimℓ(H) = {dh}"))?;
    let check = h.self_check();
    ensure(check.passed, || format!("self-check {:?}", check.failures))?;
    ensure(
        check.order == 24
            && check.regular_degree == Some(3)
            && check.size == 36
            && check.triangles == 8
            && check.girth == Some(3),
        || format!("{check:?}"),
    )?;
    Ok(format!("dimℓ(W) = 2, dimℓ(G) = 2, dimℓ(H) = {dh}"))
}

fn c9_join() -> Outcome {
    // dimℓ(G + K_t) against n(G)(t − 1)
    let formula = |g: &lmdim::Graph, t: usize| g.order() * (t - 1);
    let (p2, p3, k2) = (path(2).unwrap(), path(3).unwrap(), complete(2).unwrap());
    let v = ldim(&join(&p3, &k2).unwrap());
    ensure(v == 3 && v == formula(&p3, 2), || {
        format!("dimℓ(P3 + K2) = {v}, formula {}", formula(&p3, 2))
    })?;
    let k4 = join(&p2, &k2).unwrap();
    ensure(is_isomorphic(&k4, &complete(4).unwrap()), || "P2 + K2 is not K4".into())?;
    let vk = ldim(&k4);
    ensure(vk == 3, || format!("dimℓ(P2 + K2) = {vk}"))?;
    Ok(format!(
        "dimℓ(P3 + K2) = 3; dimℓ(P2 + K2) = {vk} recorded (formula gives {})",
        formula(&p2, 2)
    ))
}

fn c10_delivery() -> Outcome {
    let roster = CustomerRoster::from_json(&common::fixture("grid_plan.json")).unwrap();
    let cg = build_customer_graph(&roster, GeodesicRule::Any).unwrap();
    ensure(cg.graph.is_bipartite(), || "customer graph is not bipartite".into())?;
    let book = assign_codes(&cg).unwrap();
    ensure(book.basis.len() == 1, || {
        format!("local basis {:?}", book.basis.members())
    })?;
    let dim = metric_dimension(&cg.graph).unwrap().value;
    ensure(dim >= 2, || format!("metric dimension {dim}"))?;

    let mut name_only = 0;
    for (i, &(a, b)) in cg.graph.edges().iter().enumerate() {
        if cg.origins[i] == EdgeOrigin::NameOnly {
            name_only += 1;
        }
        ensure(
            book.codes[a].representation.differs_from(&book.codes[b].representation),
            || format!("{} and {} share a code", cg.customers[a].id, cg.customers[b].id),
        )?;
    }
    ensure(name_only > 0, || "fixture has no name-only edges".into())?;
    let stripped = cg.without_name_only_edges().unwrap();
    ensure(all_pairs_distances(&stripped) == all_pairs_distances(&cg.graph), || {
        "distances change without name-only edges".into()
    })?;
    Ok(format!(
        "local basis 1, metric dimension {dim}, {} edges ({name_only} name-only) distinct",
        cg.graph.size()
    ))
}

fn run_ldim(input: &str, threads: usize, all: bool) -> Vec<u8> {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lmdim"));
    cmd.args(["--threads", &threads.to_string(), "ldim", "-g", "-"]);
    if all {
        cmd.arg("--all-bases");
    }
    let mut child = cmd.stdin(Stdio::piped()).stdout(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    out.stdout
}

fn c11_determinism() -> Outcome {
    let mut r = rng(11);
    for i in 0..20 {
        let g = random_graph(&mut r, 2, 12);
        let doc = graph_to_json(&g);
        for all in [false, true] {
            let base = run_ldim(&doc, 1, all);
            for t in [2, 8] {
                ensure(run_ldim(&doc, t, all) == base, || {
                    format!("graph {i} differs at {t} threads")
                })?;
            }
        }
    }
    Ok("20 graphs, threads 1/2/8, with and without --all-bases".into())
}

fn c12_local_below_metric() -> Outcome {
    let mut r = rng(12);
    for i in 0..100 {
        let g = random_graph(&mut r, 2, 10);
        let (l, m) = (ldim(&g), metric_dimension(&g).unwrap().value);
        ensure(l <= m, || format!("graph {i}: dimℓ {l} > dim {m}"))?;
    }
    Ok("100 graphs".into())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("hierarchical distance matches BFS", c1_hierarchical_distance),
        ("Cartesian product equality", c2_cartesian_equality),
        ("bipartite factor equality", c3_bipartite_factor),
        ("sandwich bounds and diagonal generator", c4_sandwich),
        ("general upper bound and fiber generator", c5_general_bound),
        ("gamma family", c6_gamma),
        ("dodecahedron", c7_dodecahedron),
        ("truncated cube chain", c8_truncated_cube),
        ("join sharpness", c9_join),
        ("delivery codes on the grid plan", c10_delivery),
        ("parallel determinism", c11_determinism),
        ("local dimension at most metric dimension", c12_local_below_metric),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
