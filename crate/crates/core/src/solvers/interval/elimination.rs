use crate::graph::{Edge, EdgeFlip, FlipSequence, Graph, IntervalRepresentation, SpanningTree, Vertex};

/// Demotes internal nodes that other internal nodes make redundant, until
/// the internal nodes induce a path in `g`. Never raises the internal count
/// and keeps every intermediate internal set inside the original one.
///
/// Two patterns are removed: an internal interval nested in another
/// internal interval, and three pairwise adjacent internal nodes where two
/// of them cover the closed neighbourhood of the third.
pub fn eliminate_redundant_internal(
    g: &Graph,
    rep: &IntervalRepresentation,
    t: &SpanningTree,
) -> (SpanningTree, FlipSequence) {
    let mut cur = t.clone();
    let mut seq = FlipSequence::default();
    while let Some((u, helpers)) = find_redundant(g, rep, &cur) {
        demote(g, &mut cur, &mut seq, u, &helpers);
    }
    (cur, seq)
}

/// An internal node `u` together with one or two internal helpers whose
/// closed neighbourhoods cover `N[u]`.
fn find_redundant(
    g: &Graph,
    rep: &IntervalRepresentation,
    t: &SpanningTree,
) -> Option<(Vertex, Vec<Vertex>)> {
    let internal = t.internal_nodes();
    for &u in &internal {
        for &v in &internal {
            if u != v && rep.get(v).contains(&rep.get(u)) {
                return Some((u, vec![v]));
            }
        }
    }
    for &u in &internal {
        for &v in &internal {
            for &w in internal.iter().filter(|&&w| w > v) {
                if u == v || u == w || !g.has_edge(u, v) || !g.has_edge(u, w) || !g.has_edge(v, w) {
                    continue;
                }
                let covered = g
                    .neighbors(u)
                    .iter()
                    .all(|&f| f == v || f == w || g.has_edge(f, v) || g.has_edge(f, w));
                if covered {
                    return Some((u, vec![v, w]));
                }
            }
        }
    }
    None
}

/// Adds `ab` to the tree if missing, removing the smallest cycle edge not
/// in `keep`.
fn ensure_edge(
    g: &Graph,
    cur: &mut SpanningTree,
    seq: &mut FlipSequence,
    a: Vertex,
    b: Vertex,
    keep: &[Edge],
) {
    let add = Edge::new(a, b);
    if cur.contains(add) {
        return;
    }
    let path = cur.path_between(a, b);
    let removed = path
        .windows(2)
        .map(|w| Edge::new(w[0], w[1]))
        .filter(|e| !keep.contains(e))
        .min()
        .expect("a cycle has an edge outside the kept ones");
    apply(g, cur, seq, EdgeFlip::new(removed, add));
}

fn apply(g: &Graph, cur: &mut SpanningTree, seq: &mut FlipSequence, f: EdgeFlip) {
    *cur = cur.apply_flip(g, f).expect("reattachment keeps a spanning tree");
    seq.push(f);
}

/// Makes `u` a leaf by hanging its other tree neighbours on the helpers,
/// which must be adjacent to `u` and to each other and cover `N[u]`.
pub(crate) fn demote(
    g: &Graph,
    cur: &mut SpanningTree,
    seq: &mut FlipSequence,
    u: Vertex,
    helpers: &[Vertex],
) {
    let v = helpers[0];
    ensure_edge(g, cur, seq, u, v, &[]);
    if let Some(&w) = helpers.get(1) {
        ensure_edge(g, cur, seq, v, w, &[Edge::new(u, v)]);
    }
    let others: Vec<Vertex> = cur
        .adjacency()[u]
        .iter()
        .copied()
        .filter(|&f| f != v)
        .collect();
    for f in others {
        let hub = helpers
            .iter()
            .copied()
            .find(|&h| g.has_edge(h, f))
            .expect("helpers cover the neighbourhood");
        apply(g, cur, seq, EdgeFlip::new((u, f), (hub, f)));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep6() -> IntervalRepresentation {
        // 0 nested in 1; 2 and 3 hang off the ends
        IntervalRepresentation::from_ints(&[(3, 5), (1, 8), (0, 2), (7, 10), (4, 6), (9, 11)])
    }

    #[test]
    fn nested_internal_becomes_leaf() {
        let rep = rep6();
        let g = rep.intersection_graph();
        let t = SpanningTree::from_pairs(&g, &[(2, 1), (1, 0), (0, 4), (1, 3), (3, 5)]).unwrap();
        assert!(t.is_internal(0));
        let (out, seq) = eliminate_redundant_internal(&g, &rep, &t);
        assert!(!out.is_internal(0));
        seq.validate(&g, &t, &out, None).unwrap();
        let allowed = t.internal_nodes();
        for s in seq.replay(&g, &t, None).unwrap() {
            assert!(s.internal_nodes().iter().all(|v| allowed.contains(v)));
        }
    }

    #[test]
    fn path_of_internal_nodes_is_kept() {
        let rep = IntervalRepresentation::from_ints(&[(0, 2), (1, 4), (3, 6), (5, 7)]);
        let g = rep.intersection_graph();
        let t = SpanningTree::from_pairs(&g, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (out, seq) = eliminate_redundant_internal(&g, &rep, &t);
        assert_eq!(out, t);
        assert!(seq.is_empty());
    }

    #[test]
    fn covered_triangle_member_becomes_leaf() {
        // 0, 1, 2 pairwise overlap in a staircase; 3 and 4 pin the ends
        let rep = IntervalRepresentation::from_ints(&[(1, 5), (3, 7), (4, 9), (0, 2), (8, 10)]);
        let g = rep.intersection_graph();
        let t = SpanningTree::from_pairs(&g, &[(3, 0), (0, 1), (1, 2), (2, 4)]).unwrap();
        assert!(g.has_edge(0, 2));
        let (out, seq) = eliminate_redundant_internal(&g, &rep, &t);
        assert!(!out.is_internal(1));
        assert_eq!(out.internal_count(), 2);
        seq.validate(&g, &t, &out, None).unwrap();
    }
}
