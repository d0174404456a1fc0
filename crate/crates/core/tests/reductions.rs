use itertools::Itertools;
use treeflip_core::graph::Graph;
use treeflip_core::oracle::{
    explore_component, min_cover_size, st_reachable, vc_tj_reachable,
    vertex_covers_of_size, SearchBudget,
};
use treeflip_core::reductions::*;

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

#[test]
fn gadget_certificate() {
    let c = certify_gadget();
    assert_eq!(c.crossing_paths, 0);
    assert_eq!(c.patterns.len(), 3);
    assert_eq!(c.both.boundary(), 4);
    assert!(c.one_side.iter().all(|p| p.boundary() == 2));
}

#[test]
fn ham_path_round_trip() {
    for g in small_connected(4) {
        let k = min_cover_size(&g).unwrap();
        let inst = build_vc_to_st_instance(&g, k, 3).unwrap();
        assert_eq!(inst.graph.n(), 12 * g.m() + k + 3);
        for x in vertex_covers_of_size(&g, k).unwrap() {
            for order in x.iter().copied().permutations(k) {
                let t = cover_to_ham_path(&inst, &order).unwrap();
                assert_eq!(t.leaf_count(), 2);
                assert!(t.degrees().iter().all(|&d| d <= 2));
                assert_eq!(extract_cover(&inst, &t).unwrap(), x);
            }
        }
    }
}

#[test]
fn triangle_uses_both_patterns() {
    let g = Graph::complete(3);
    let inst = build_vc_to_st_instance(&g, 2, 3).unwrap();
    let t = cover_to_ham_path(&inst, &[0, 1]).unwrap();
    let (both, _) = regular_patterns();
    // edge 0 is {0, 1}
    for e in &both.edges {
        assert!(t.contains(treeflip_core::graph::Edge::new(
            inst.gadget_vertex(0, e.u()),
            inst.gadget_vertex(0, e.v())
        )));
    }
}

#[test]
fn token_jump_witnesses_compile() {
    let mut compiled = 0;
    for g in small_connected(4) {
        let k = min_cover_size(&g).unwrap();
        let inst = build_vc_to_st_instance(&g, k, 3).unwrap();
        let covers = vertex_covers_of_size(&g, k).unwrap();
        for (x, y) in covers.iter().cartesian_product(&covers) {
            let res = vc_tj_reachable(&g, x, y).unwrap();
            let Some(seq) = res.witness() else { continue };
            let flips = cover_seq_to_flip_seq(&inst, seq).unwrap();
            let t1 = cover_to_ham_path(&inst, x).unwrap();
            let t2 = cover_to_ham_path(&inst, y).unwrap();
            flips.validate(&inst.graph, &t1, &t2, Some(&inst.constraint())).unwrap();
            assert_eq!(&extract_cover(&inst, &t1).unwrap(), x);
            assert_eq!(&extract_cover(&inst, &t2).unwrap(), y);
            compiled += 1;
        }
    }
    assert!(compiled > 0);
}

#[test]
fn reordering_witness_on_path() {
    let g = Graph::path(3);
    let inst = build_vc_to_st_instance(&g, 1, 3).unwrap();
    let flips = cover_seq_to_flip_seq(&inst, &[vec![1], vec![1]]).unwrap();
    assert!(flips.is_empty());
}

#[test]
fn non_adjacent_covers_rejected() {
    let g = Graph::cycle(4);
    let inst = build_vc_to_st_instance(&g, 2, 3).unwrap();
    let err = cover_seq_to_flip_seq(&inst, &[vec![0, 2], vec![1, 3]]).unwrap_err();
    assert!(matches!(err, ReductionError::NotTJAdjacent(..)));
}

/// Walks the ≤ 3-leaf component of an associated path and checks every
/// tree's good set, and every parent/child pair of good sets.
fn backward_sweep(g: &Graph, states: usize) -> (usize, Vec<String>) {
    let k = min_cover_size(g).unwrap();
    let inst = build_vc_to_st_instance(g, k, 3).unwrap();
    let x = vertex_covers_of_size(g, k).unwrap().remove(0);
    let start = cover_to_ham_path(&inst, &x).unwrap();
    let mut violations = Vec::new();
    let walk = explore_component(
        &inst.graph,
        &start,
        Some(&inst.constraint()),
        SearchBudget::states(states),
        |t, parent| {
            let s = match extract_cover(&inst, t) {
                Ok(s) => s,
                Err(e) => return violations.push(e.to_string()),
            };
            if let Some((p, _)) = parent {
                let ps = extract_cover(&inst, p).unwrap();
                let gone = ps.iter().filter(|v| !s.contains(v)).count();
                let new = s.iter().filter(|v| !ps.contains(v)).count();
                let union = ps.len() + new;
                let ok = gone + new <= 1 || (gone == 1 && new == 1 && union <= k + 1);
                if !ok {
                    violations.push(format!("{ps:?} -> {s:?}"));
                }
            }
        },
    )
    .unwrap();
    (walk.visited, violations)
}

#[test]
fn backward_sweep_small() {
    for g in [Graph::path(2), Graph::path(3), Graph::complete(3), Graph::star(3)] {
        let (visited, violations) = backward_sweep(&g, 200_000);
        assert!(visited > 1);
        assert!(violations.is_empty(), "{violations:?}");
    }
}

#[test]
fn wider_bound_on_single_edge() {
    let g = Graph::path(2);
    let inst = build_vc_to_st_instance(&g, 1, 4).unwrap();
    assert_eq!(inst.graph.n(), 12 + 2 + 4);
    let t1 = cover_to_ham_path(&inst, &[0]).unwrap();
    let t2 = cover_to_ham_path(&inst, &[1]).unwrap();
    assert_eq!(t1.leaf_count(), 3);
    let flips = cover_seq_to_flip_seq(&inst, &[vec![0], vec![1]]).unwrap();
    flips.validate(&inst.graph, &t1, &t2, Some(&inst.constraint())).unwrap();
    let truth = st_reachable(&inst.graph, &t1, &t2, &inst.constraint(), SearchBudget::states(2_000_000)).unwrap();
    assert_eq!(truth.decision(), Some(true));
}
