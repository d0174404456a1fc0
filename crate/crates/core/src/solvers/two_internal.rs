use std::collections::VecDeque;

use crate::graph::{EdgeFlip, FlipSequence, Graph, SpanningTree, Vertex};

use super::{transform_same_internal, unconstrained, Outcome, SolveError};

/// Vertices adjacent to all but at most one other vertex.
pub fn pivot_vertices(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    (0..n).filter(|&v| g.degree(v) + 2 >= n).collect()
}

/// Decides reachability between two spanning trees when every tree along
/// the way may have at most two internal nodes.
///
/// Trees whose internal nodes avoid every pivot are frozen. All trees with
/// a given pivot internal form one component, and two pivot classes merge
/// exactly when the pivots are adjacent and dominate the graph together.
pub fn decide_two_internal(
    g: &Graph,
    t1: &SpanningTree,
    t2: &SpanningTree,
) -> Result<Outcome, SolveError> {
    if !g.is_connected() {
        return Err(SolveError::DisconnectedGraph);
    }
    for (which, t) in [("source", t1), ("target", t2)] {
        if t.internal_count() > 2 {
            return Err(SolveError::TooManyInternalNodes {
                which,
                count: t.internal_count(),
            });
        }
        if let Some(&e) = t.edges().iter().find(|e| !g.contains_edge(**e)) {
            return Err(crate::graph::GraphError::EdgeNotInGraph(e).into());
        }
    }
    let n = g.n();
    if n <= 4 {
        return Ok(unconstrained(g, t1, t2));
    }
    let (i1, i2) = (t1.internal_nodes(), t2.internal_nodes());
    if i1 == i2 {
        return Ok(Outcome::yes(Some(transform_same_internal(g, t1, t2))).note("case", "same internal set"));
    }
    let is_pivot = |v: Vertex| g.degree(v) + 2 >= n;
    let p1: Vec<Vertex> = i1.iter().copied().filter(|&v| is_pivot(v)).collect();
    let p2: Vec<Vertex> = i2.iter().copied().filter(|&v| is_pivot(v)).collect();
    if p1.is_empty() || p2.is_empty() {
        return Ok(Outcome::no().note("case", "frozen: no pivot among internal nodes"));
    }
    match pivot_route(g, &p1, &p2) {
        None => Ok(Outcome::no().note("case", "pivot classes differ")),
        Some(route) => {
            let witness = route_witness(g, t1, t2, &route);
            Ok(Outcome::yes(Some(witness))
                .note("case", "pivot route")
                .note("route", route))
        }
    }
}

/// True iff some spanning tree has internal nodes inside `{p, q}` with both
/// present: `p` and `q` adjacent and jointly dominating.
fn pivot_link(g: &Graph, p: Vertex, q: Vertex) -> bool {
    g.has_edge(p, q) && g.dominates(&[p, q])
}

/// Shortest path of pivots from `from` to `to` where consecutive pivots are
/// linked. Ties go to the lowest vertex id.
fn pivot_route(g: &Graph, from: &[Vertex], to: &[Vertex]) -> Option<Vec<Vertex>> {
    let n = g.n();
    let pivots = pivot_vertices(g);
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &p in from {
        prev[p] = p;
        queue.push_back(p);
    }
    while let Some(p) = queue.pop_front() {
        if to.contains(&p) {
            let mut route = vec![p];
            let mut at = p;
            while prev[at] != at {
                at = prev[at];
                route.push(at);
            }
            route.reverse();
            return Some(route);
        }
        for &q in &pivots {
            if prev[q] == usize::MAX && pivot_link(g, p, q) {
                prev[q] = p;
                queue.push_back(q);
            }
        }
    }
    None
}

fn route_witness(g: &Graph, t1: &SpanningTree, t2: &SpanningTree, route: &[Vertex]) -> FlipSequence {
    let mut seq = FlipSequence::default();
    let mut cur = t1.clone();
    for w in route.windows(2) {
        let (s, next) = pivot_swap(g, &cur, w[0], w[1]);
        seq.extend(s);
        cur = next;
    }
    let last = *route.last().unwrap();
    let partner = t2
        .internal_nodes()
        .into_iter()
        .find(|&v| v != last)
        .or_else(|| g.neighbors(last).first().copied())
        .expect("a pivot has neighbours");
    let (s, next) = pivot_swap(g, &cur, last, partner);
    seq.extend(s);
    seq.extend(transform_same_internal(g, &next, t2));
    seq
}

/// From a tree with internal nodes inside `{p, v}` (`p` a pivot) reaches a
/// tree with internal nodes inside `{p, w}`, never exceeding two internal
/// nodes. Requires `{p, w}` to be a connected dominating set or `p` to be
/// universal.
fn pivot_swap(g: &Graph, t: &SpanningTree, p: Vertex, w: Vertex) -> (FlipSequence, SpanningTree) {
    let internal = t.internal_nodes();
    if internal.iter().all(|&x| x == p || x == w) {
        return (FlipSequence::default(), t.clone());
    }
    let v = *internal.iter().find(|&&x| x != p).unwrap();
    let missing = (0..g.n()).find(|&x| x != p && !g.has_edge(p, x));
    let z = missing.unwrap_or_else(|| {
        *g.neighbors(v)
            .iter()
            .find(|&&x| x != p)
            .expect("an internal node has two neighbours")
    });
    // p takes every vertex except z; v hangs between p and z
    let mut edges = vec![(p, v), (v, z)];
    edges.extend((0..g.n()).filter(|&x| x != p && x != v && x != z).map(|x| (p, x)));
    let staged = SpanningTree::from_pairs(g, &edges).expect("staging tree is spanning");
    let mut seq = transform_same_internal(g, t, &staged);
    let hook = if g.has_edge(p, z) { p } else { w };
    let flip = EdgeFlip::new((v, z), (hook, z));
    let done = staged.apply_flip(g, flip).expect("z reattaches across the cut");
    seq.push(flip);
    (seq, done)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::LeafConstraint;
    use crate::oracle::{st_reachable, SearchBudget};

    #[test]
    fn chorded_square_paths() {
        // a=0, b=1, c=2, d=3 with chord ac
        let g = Graph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        let t1 = SpanningTree::from_pairs(&g, &[(3, 0), (0, 1), (1, 2)]).unwrap();
        let t2 = SpanningTree::from_pairs(&g, &[(1, 2), (2, 3), (3, 0)]).unwrap();
        let out = decide_two_internal(&g, &t1, &t2).unwrap();
        let oracle = st_reachable(&g, &t1, &t2, &LeafConstraint::at_least(2), SearchBudget::default()).unwrap();
        assert_eq!(Some(out.reachable), oracle.decision());
    }

    #[test]
    fn path_graph_has_one_tree() {
        let g = Graph::path(4);
        let t = SpanningTree::from_pairs(&g, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(decide_two_internal(&g, &t, &t).unwrap().reachable);
    }

    #[test]
    fn rejects_three_internal_nodes() {
        let g = Graph::path(5);
        let t = SpanningTree::from_pairs(&g, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(matches!(
            decide_two_internal(&g, &t, &t),
            Err(SolveError::TooManyInternalNodes { count: 3, .. })
        ));
    }
}
