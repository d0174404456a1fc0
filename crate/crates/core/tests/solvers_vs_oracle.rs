use rand::seq::SliceRandom;
use rand::Rng;
use treeflip_core::generate::{cograph, connected_graph, rng};
use treeflip_core::graph::{Graph, LeafConstraint, SpanningTree};
use treeflip_core::oracle::{enumerate_spanning_trees, st_reachable, SearchBudget};
use treeflip_core::solvers::{decide_cograph, decide_two_internal};

fn admissible(g: &Graph, c: &LeafConstraint) -> Vec<SpanningTree> {
    enumerate_spanning_trees(g)
        .unwrap()
        .into_iter()
        .filter(|t| c.admits(t))
        .collect()
}

#[test]
fn two_internal_matches_oracle() {
    let mut r = rng(101);
    let mut yes = 0;
    let mut no = 0;
    for _ in 0..150 {
        let n = r.gen_range(5..=8);
        let g = connected_graph(n, &mut r);
        let c = LeafConstraint::at_least(n - 2);
        let trees = admissible(&g, &c);
        if trees.is_empty() {
            continue;
        }
        for _ in 0..6 {
            let t1 = trees.choose(&mut r).unwrap();
            let t2 = trees.choose(&mut r).unwrap();
            let out = decide_two_internal(&g, t1, t2).unwrap();
            let truth = st_reachable(&g, t1, t2, &c, SearchBudget::default()).unwrap();
            assert_eq!(Some(out.reachable), truth.decision(), "{g:?}\n{t1}\n{t2}");
            if out.reachable {
                yes += 1;
                out.witness.unwrap().validate(&g, t1, t2, Some(&c)).unwrap();
            } else {
                no += 1;
            }
        }
    }
    assert!(yes > 0 && no > 0, "yes {yes} no {no}");
}

#[test]
fn cograph_matches_oracle() {
    let mut r = rng(202);
    for _ in 0..60 {
        let n = r.gen_range(2..=8);
        let (g, cot) = cograph(n, &mut r);
        for budget in 1..=4usize {
            let Some(c) = LeafConstraint::new(
                treeflip_core::graph::ConstraintKind::AtLeast,
                n.saturating_sub(budget).max(2),
            ) else {
                continue;
            };
            let trees = admissible(&g, &c);
            if trees.is_empty() {
                continue;
            }
            for _ in 0..3 {
                let t1 = trees.choose(&mut r).unwrap();
                let t2 = trees.choose(&mut r).unwrap();
                let out = decide_cograph(&g, Some(&cot), t1, t2, &c).unwrap();
                let truth = st_reachable(&g, t1, t2, &c, SearchBudget::default()).unwrap();
                assert_eq!(Some(out.reachable), truth.decision(), "{g:?} K={budget}\n{t1}\n{t2}");
                if let Some(w) = out.witness {
                    w.validate(&g, t1, t2, Some(&c)).unwrap();
                }
            }
        }
    }
}
