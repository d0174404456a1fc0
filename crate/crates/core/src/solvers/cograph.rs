use std::collections::VecDeque;

use crate::graph::{build_cotree, CoTree, FlipSequence, Graph, LeafConstraint, SpanningTree, Vertex};

use super::{
    decide_two_internal, internal_budget, transform_same_internal, unconstrained, Outcome,
    SolveError,
};

/// Decides reachability on a connected cograph under an "at least `k`
/// leaves" constraint. Builds the cotree when none is supplied.
///
/// With budget `K = n - k`: one internal node allows only stars, which are
/// all frozen once `n >= 4`; two internal nodes go to the two-internal
/// decider; three or more always connect.
pub fn decide_cograph(
    g: &Graph,
    cotree: Option<&CoTree>,
    t1: &SpanningTree,
    t2: &SpanningTree,
    c: &LeafConstraint,
) -> Result<Outcome, SolveError> {
    if !g.is_connected() {
        return Err(SolveError::DisconnectedGraph);
    }
    let built;
    let cotree = match cotree {
        Some(t) => t,
        None => {
            built = build_cotree(g).ok_or(SolveError::NotACograph)?;
            &built
        }
    };
    if &cotree.evaluate(g.n()) != g {
        return Err(SolveError::NotACograph);
    }
    let budget = internal_budget(g, t1, t2, c)?;
    let n = g.n();
    if budget + 2 >= n {
        return Ok(unconstrained(g, t1, t2));
    }
    match budget {
        0 | 1 => Ok(if t1 == t2 {
            Outcome::yes(Some(FlipSequence::default()))
        } else {
            Outcome::no()
        }
        .note("case", "stars are frozen")),
        2 => decide_two_internal(g, t1, t2),
        _ => {
            let mut seq = to_canonical(g, t1);
            seq.extend(to_canonical(g, t2).reversed());
            Ok(Outcome::yes(Some(seq)).note("case", "three or more internal nodes"))
        }
    }
}

/// Tree with edge `ab` where every other vertex hangs off `a` when adjacent
/// to it and off `b` otherwise. Requires `a ~ b` and `{a, b}` dominating.
fn double_star(g: &Graph, a: Vertex, b: Vertex) -> SpanningTree {
    let mut edges = vec![(a, b)];
    for x in (0..g.n()).filter(|&x| x != a && x != b) {
        edges.push(if g.has_edge(a, x) { (a, x) } else { (b, x) });
    }
    SpanningTree::from_pairs(g, &edges).expect("dominating edge spans the graph")
}

fn dominating_edge(g: &Graph, a: Vertex, b: Vertex) -> bool {
    g.has_edge(a, b) && g.dominates(&[a, b])
}

/// Flips `t` to the double star on the lexicographically smallest
/// dominating edge, with at most `max(|in(t)|, 3)` internal nodes.
///
/// In a cograph, the smallest cotree node holding `in(t)` is a join, some
/// tree edge between internal nodes crosses two of its children, and every
/// leaf of `t` sees all of that node; so that edge dominates and `t`
/// reaches its double star without leaving `in(t)`.
fn to_canonical(g: &Graph, t: &SpanningTree) -> FlipSequence {
    let start = match t.edges().iter().find(|e| {
        t.is_internal(e.u()) && t.is_internal(e.v()) && dominating_edge(g, e.u(), e.v())
    }) {
        Some(e) => (e.u(), e.v()),
        None => {
            // a star; any edge at its centre dominates
            let u = t.internal_nodes().first().copied().unwrap_or(0);
            (u, g.neighbors(u)[0])
        }
    };
    let start = (start.0.min(start.1), start.0.max(start.1));
    let mut cur = double_star(g, start.0, start.1);
    let mut seq = transform_same_internal(g, t, &cur);
    for &(x, y) in &edge_route(g, start)[1..] {
        let next = double_star(g, x, y);
        seq.extend(transform_same_internal(g, &cur, &next));
        cur = next;
    }
    seq
}

/// Shortest route through dominating edges from `from` to the smallest one,
/// changing one endpoint per step. Ties go to the lowest ids.
fn edge_route(g: &Graph, from: (Vertex, Vertex)) -> Vec<(Vertex, Vertex)> {
    let n = g.n();
    let key = |(x, y): (Vertex, Vertex)| (x.min(y), x.max(y));
    let to = g
        .edges()
        .iter()
        .map(|e| (e.u(), e.v()))
        .find(|&(x, y)| dominating_edge(g, x, y))
        .expect("a cograph with a join root has a dominating edge");
    let from = key(from);
    let mut prev = vec![vec![None; n]; n];
    prev[from.0][from.1] = Some(from);
    let mut queue = VecDeque::from([from]);
    while let Some(cur) = queue.pop_front() {
        if cur == to {
            break;
        }
        for keep in [cur.0, cur.1] {
            for &z in g.neighbors(keep) {
                let next = key((keep, z));
                if prev[next.0][next.1].is_none() && dominating_edge(g, keep, z) {
                    prev[next.0][next.1] = Some(cur);
                    queue.push_back(next);
                }
            }
        }
    }
    let mut route = vec![to];
    let mut at = to;
    while at != from {
        at = prev[at.0][at.1].expect("dominating edges of a cograph are linked");
        route.push(at);
    }
    route.reverse();
    route
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cograph, random_spanning_tree, rng};

    #[test]
    fn stars_on_k4_are_frozen() {
        let g = Graph::complete(4);
        let s0 = SpanningTree::from_pairs(&g, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let s1 = SpanningTree::from_pairs(&g, &[(1, 0), (1, 2), (1, 3)]).unwrap();
        let c = LeafConstraint::at_least(3);
        assert!(!decide_cograph(&g, None, &s0, &s1, &c).unwrap().reachable);
        assert!(decide_cograph(&g, None, &s0, &s0, &c).unwrap().reachable);
    }

    #[test]
    fn rejects_path_on_four() {
        let g = Graph::path(4);
        let t = SpanningTree::from_pairs(&g, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(
            decide_cograph(&g, None, &t, &t, &LeafConstraint::at_least(2)),
            Err(SolveError::NotACograph)
        );
    }

    #[test]
    fn large_budget_witnesses_replay() {
        let mut r = rng(17);
        for _ in 0..30 {
            let (g, cot) = cograph(8, &mut r);
            let n = g.n();
            for budget in 3..n - 2 {
                let c = LeafConstraint::at_least(n - budget);
                let (t1, t2) = loop {
                    let a = random_spanning_tree(&g, &mut r);
                    let b = random_spanning_tree(&g, &mut r);
                    if c.admits(&a) && c.admits(&b) {
                        break (a, b);
                    }
                };
                let out = decide_cograph(&g, Some(&cot), &t1, &t2, &c).unwrap();
                assert!(out.reachable);
                out.witness.unwrap().validate(&g, &t1, &t2, Some(&c)).unwrap();
            }
        }
    }
}
