use crate::graph::{Edge, EdgeFlip, FlipSequence, Graph, SpanningTree};

/// Flips `t1` into `t2` so that every intermediate tree has its internal
/// nodes inside `in(t1) ∪ in(t2)`.
///
/// Each step adds the smallest edge `uv` of `t2` missing from the current
/// tree. If `u` must stay a leaf, the cycle edge at `u` is removed (it cannot
/// belong to `t2`, whose only edge at `u` is `uv`); likewise for `v`;
/// otherwise the smallest cycle edge outside `t2` goes.
pub fn transform_same_internal(g: &Graph, t1: &SpanningTree, t2: &SpanningTree) -> FlipSequence {
    let n = g.n();
    let mut allowed = vec![false; n];
    for v in t1.internal_nodes().into_iter().chain(t2.internal_nodes()) {
        allowed[v] = true;
    }
    let mut cur = t1.clone();
    let mut seq = FlipSequence::default();
    while let Some(&add) = t2.edges().iter().find(|e| !cur.contains(**e)) {
        let (u, v) = add.endpoints();
        let path = cur.path_between(u, v);
        let cycle: Vec<Edge> = path.windows(2).map(|w| Edge::new(w[0], w[1])).collect();
        let removed = if !allowed[u] {
            cycle[0]
        } else if !allowed[v] {
            cycle[cycle.len() - 1]
        } else {
            *cycle
                .iter()
                .filter(|e| !t2.contains(**e))
                .min()
                .expect("a cycle cannot lie inside a tree")
        };
        let flip = EdgeFlip::new(removed, add);
        cur = cur.apply_flip(g, flip).expect("cycle edge swap keeps a spanning tree");
        debug_assert!(cur.internal_nodes().iter().all(|&x| allowed[x]));
        seq.push(flip);
    }
    seq
}
