//! One pass/fail line per acceptance criterion. Runs without the libtest
//! harness so the lines come out in order; exits nonzero on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::Rng;
use treeflip_core::crosscheck::{run_crosscheck, CrosscheckConfig, Suite, Verdict};
use treeflip_core::generate::{interval_graph, planar_catalog, random_tree, rng};
use treeflip_core::graph::{leaf_count_from_degrees, Graph, SpanningTree, Vertex};
use treeflip_core::oracle::{
    component_census, ds_tar_reachable, enumerate_spanning_trees, explore_component, min_cover_size,
    st_reachable, vc_tj_reachable, vertex_covers_of_size, SearchBudget,
};
use treeflip_core::reductions::{
    build_ds_to_st_instance, build_vc_to_st_instance, build_vc_to_st_planar, certify_gadget,
    cover_seq_to_flip_seq, cover_to_ham_path, dominating_to_tree, extract_cover, outerplanar_obstruction,
    planar_cover_tree, ManyLeavesVariant, ObstructionFamily,
};
use treeflip_core::solvers::interval::canonical_set;

const SEED: u64 = 20_240_601;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn sweep(suite: Suite, limit: Duration) -> Outcome {
    let start = Instant::now();
    let report = run_crosscheck(&CrosscheckConfig::new(suite, SEED, 200));
    let took = start.elapsed();
    for c in report.cases.iter().filter(|c| c.verdict != Verdict::Agree).take(5) {
        eprintln!("  {} {:?}: tested {:?} oracle {:?} witness {:?} {}", c.id, c.verdict, c.tested, c.oracle, c.witness_ok, c.note);
    }
    outcome(
        report.passed() && !report.cases.is_empty() && took < limit,
        format!("{} in {:.1}s", report.summary(), took.as_secs_f64()),
    )
}

/// Every connected labelled graph with `1..=max_m` edges.
fn small_connected(max_m: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=max_m + 1 {
        let all: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        for m in n - 1..=max_m.min(all.len()) {
            for pick in all.iter().copied().combinations(m) {
                let g = Graph::from_pairs(n, &pick);
                if g.is_connected() {
                    out.push(g);
                }
            }
        }
    }
    out
}

fn leaf_formula() -> Outcome {
    let mut r = rng(SEED);
    let mut bad = 0;
    for _ in 0..10_000 {
        let n = r.gen_range(2..=40);
        let (_, t) = random_tree(n, &mut r);
        let d = t.degrees();
        let leaves = d.iter().filter(|&&x| x == 1).count();
        let internal = d.iter().filter(|&&x| x >= 2).count();
        if leaf_count_from_degrees(d) != n - internal || leaves != n - internal || t.leaf_count() != leaves {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("10000 trees, {bad} mismatches"))
}

fn gadget() -> Outcome {
    let start = Instant::now();
    let c = certify_gadget();
    let took = start.elapsed();
    let shapes_ok = c.both.boundary() == 4 && c.one_side.iter().all(|p| p.boundary() == 2);
    outcome(
        c.crossing_paths == 0 && shapes_ok && took < Duration::from_secs(1),
        format!(
            "{} crossing paths, {} configurations (boundary 4 and {} one-sided of boundary 2) in {:?}",
            c.crossing_paths,
            c.patterns.len(),
            c.one_side.len(),
            took
        ),
    )
}

fn token_jump_compile() -> Outcome {
    let (mut compiled, mut failures) = (0, Vec::new());
    for g in small_connected(4) {
        let k = min_cover_size(&g).unwrap();
        let inst = build_vc_to_st_instance(&g, k, 3).unwrap();
        let covers = vertex_covers_of_size(&g, k).unwrap();
        for (x, y) in covers.iter().cartesian_product(&covers) {
            let res = vc_tj_reachable(&g, x, y).unwrap();
            let Some(seq) = res.witness() else { continue };
            let ok = (|| {
                let flips = cover_seq_to_flip_seq(&inst, seq).ok()?;
                let t1 = cover_to_ham_path(&inst, x).ok()?;
                let t2 = cover_to_ham_path(&inst, y).ok()?;
                flips.validate(&inst.graph, &t1, &t2, Some(&inst.constraint())).ok()?;
                let ends = (extract_cover(&inst, &t1).ok()?, extract_cover(&inst, &t2).ok()?);
                Some(&ends.0 == x && &ends.1 == y)
            })();
            if ok == Some(true) {
                compiled += 1;
            } else {
                failures.push(format!("{:?} {x:?}->{y:?}", g.edges()));
            }
        }
    }
    for f in failures.iter().take(5) {
        eprintln!("  {f}");
    }
    outcome(
        failures.is_empty() && compiled > 0,
        format!("{compiled} witnesses compiled, {} failures", failures.len()),
    )
}

fn backward_check() -> Outcome {
    let (mut graphs, mut visited, mut truncated, mut violations) = (0, 0, 0, Vec::new());
    for g in small_connected(4) {
        let k = min_cover_size(&g).unwrap();
        let inst = build_vc_to_st_instance(&g, k, 3).unwrap();
        let x = vertex_covers_of_size(&g, k).unwrap().remove(0);
        let start = cover_to_ham_path(&inst, &x).unwrap();
        let walk = explore_component(&inst.graph, &start, Some(&inst.constraint()), SearchBudget::states(1_000_000), |t, parent| {
            let s = match extract_cover(&inst, t) {
                Ok(s) => s,
                Err(e) => return violations.push(e.to_string()),
            };
            if let Some((p, _)) = parent {
                let ps = extract_cover(&inst, p).unwrap_or_default();
                let gone = ps.iter().filter(|v| !s.contains(v)).count();
                let new = s.iter().filter(|v| !ps.contains(v)).count();
                let ok = gone + new <= 1 || (gone == 1 && new == 1 && ps.len() + new <= k + 1);
                if !ok {
                    violations.push(format!("{ps:?} -> {s:?}"));
                }
            }
        })
        .unwrap();
        graphs += 1;
        visited += walk.visited;
        truncated += usize::from(!walk.complete);
    }
    for v in violations.iter().take(5) {
        eprintln!("  {v}");
    }
    outcome(
        violations.is_empty(),
        format!(
            "{graphs} sources, {visited} trees visited, {truncated} searches truncated, {} violations",
            violations.len()
        ),
    )
}

fn planar() -> Outcome {
    let (mut checked, mut enumerated, mut bad) = (0, 0, Vec::new());
    for e in planar_catalog() {
        let inst = build_vc_to_st_planar(&e.graph, &e.embedding).unwrap();
        let k = min_cover_size(&e.graph).unwrap();
        let cover = &vertex_covers_of_size(&e.graph, k).unwrap()[0];
        let t = planar_cover_tree(&inst, cover).unwrap();
        let expected = 2 * (e.graph.m() + 1) - k;
        checked += 1;
        if t.leaf_count() != expected {
            bad.push(format!("{}: {} leaves, expected {expected}", e.name, t.leaf_count()));
        }
        if inst.graph.n() <= 12 {
            let best = enumerate_spanning_trees(&inst.graph).unwrap().iter().map(SpanningTree::leaf_count).max();
            enumerated += 1;
            if best != Some(expected) {
                bad.push(format!("{}: maximum {best:?}, expected {expected}", e.name));
            }
        }
    }
    for b in &bad {
        eprintln!("  {b}");
    }
    let names: Vec<&str> = planar_catalog().iter().map(|e| e.name).collect();
    let has_k3_k4 = names.contains(&"triangle") && names.contains(&"tetrahedron");
    outcome(
        bad.is_empty() && has_k3_k4 && checked >= 10,
        format!("{checked} graphs, {enumerated} outputs enumerated, {} failures", bad.len()),
    )
}

fn dominating_sets(g: &Graph) -> Vec<Vec<Vertex>> {
    (1u32..1 << g.n())
        .map(|m| (0..g.n()).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>())
        .filter(|s| g.dominates(s))
        .collect()
}

fn many_leaves() -> Outcome {
    let all: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (1, 2)];
    let (mut agree, mut disagree, mut over) = (0, 0, 0);
    for m in 0..=3 {
        for pick in all.iter().copied().combinations(m) {
            let g = Graph::from_pairs(3, &pick);
            let ds = dominating_sets(&g);
            for variant in [ManyLeavesVariant::Bipartite, ManyLeavesVariant::Split] {
                let inst = build_ds_to_st_instance(&g, variant);
                for (d1, d2) in ds.iter().cartesian_product(&ds) {
                    let threshold = d1.len().max(d2.len()) + 1;
                    let tar = ds_tar_reachable(&g, d1, d2, threshold).unwrap().decision();
                    let t1 = dominating_to_tree(&inst, d1).unwrap();
                    let t2 = dominating_to_tree(&inst, d2).unwrap();
                    let st = st_reachable(&inst.graph, &t1, &t2, &inst.constraint(threshold), SearchBudget::default())
                        .unwrap()
                        .decision();
                    match st {
                        None => over += 1,
                        Some(d) if Some(d) == tar => agree += 1,
                        Some(_) => {
                            disagree += 1;
                            eprintln!("  {variant:?} {:?} {d1:?}->{d2:?}: sets {tar:?}, trees {st:?}", g.edges());
                        }
                    }
                }
            }
        }
    }
    outcome(
        disagree == 0 && agree > 0,
        format!("{agree} agree, {disagree} disagree, {over} budget exceeded"),
    )
}

fn obstructions() -> Outcome {
    let mut lines = Vec::new();
    let mut pass = true;
    for (family, size) in [(ObstructionFamily::ChordedC4, 0), (ObstructionFamily::ParallelLadder, 7)] {
        let o = outerplanar_obstruction(family, size).unwrap();
        let census = component_census(&o.graph, &o.constraint, SearchBudget::default()).unwrap();
        let mut comp = Vec::new();
        let mut frozen = true;
        for t in [&o.t1, &o.t2] {
            let mut members = Vec::new();
            let walk = explore_component(&o.graph, t, Some(&o.constraint), SearchBudget::default(), |s, _| {
                members.push(s.clone())
            })
            .unwrap();
            frozen &= walk.complete && members.iter().all(|s| s.internal_nodes() == t.internal_nodes());
            comp.push(members);
        }
        let separate = !comp[0].contains(&o.t2) && !comp[1].contains(&o.t1);
        let all_frozen = census.iter().all(|e| e.frozen);
        pass &= separate && frozen && all_frozen;
        lines.push(format!(
            "{family:?}: {} components, sizes {:?}, separate {separate}, frozen {frozen}",
            census.len(),
            comp.iter().map(Vec::len).collect::<Vec<_>>()
        ));
    }
    outcome(pass, lines.join("; "))
}

fn canonical_minimality() -> Outcome {
    let mut r = rng(SEED);
    let (mut trees, mut size_bad, mut prefix_bad) = (0usize, 0, 0);
    for _ in 0..200 {
        let n = r.gen_range(3..=8);
        let (g, rep) = interval_graph(n, &mut r);
        let x = canonical_set(&g, &rep).unwrap().vertices;
        let mut best = usize::MAX;
        for t in enumerate_spanning_trees(&g).unwrap() {
            trees += 1;
            best = best.min(t.internal_count());
            let mut inner = t.internal_nodes();
            inner.sort_by_key(|&v| rep.right(v));
            if inner.iter().zip(&x).any(|(&a, &b)| rep.right(a) > rep.right(b)) {
                prefix_bad += 1;
            }
        }
        // stars have one internal node; a lone vertex or edge has none
        if best != x.len() && !(best == 0 && x.len() == 1) {
            size_bad += 1;
        }
    }
    outcome(
        size_bad == 0 && prefix_bad == 0,
        format!("200 graphs, {trees} trees, {size_bad} size mismatches, {prefix_bad} prefix violations"),
    )
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("cograph decider matches search", Box::new(|| sweep(Suite::Cograph, Duration::from_secs(600)))),
        ("interval decider matches search", Box::new(|| sweep(Suite::Interval, Duration::from_secs(1800)))),
        ("two-internal decider matches search", Box::new(|| sweep(Suite::TwoInternal, Duration::from_secs(600)))),
        ("leaf count formula", Box::new(leaf_formula)),
        ("gadget certification", Box::new(gadget)),
        ("token jumping witnesses compile to flips", Box::new(token_jump_compile)),
        ("bounded backward sweep", Box::new(backward_check)),
        ("planar cover tree is maximum-leaf", Box::new(planar)),
        ("dominating set reduction matches search", Box::new(many_leaves)),
        ("outerplanar obstructions are frozen", Box::new(obstructions)),
        ("canonical set is minimum with prefix property", Box::new(canonical_minimality)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        failed += usize::from(!o.pass);
        println!("criterion {:>2} {}: {name}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
