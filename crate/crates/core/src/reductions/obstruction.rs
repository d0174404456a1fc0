use crate::graph::{Graph, LeafConstraint, SpanningTree, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObstructionFamily {
    /// A 4-cycle with one chord.
    ChordedC4,
    /// Two paths joined by rungs at every position except the two ends.
    ParallelLadder,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub graph: Graph,
    pub t1: SpanningTree,
    pub t2: SpanningTree,
    pub constraint: LeafConstraint,
}

/// Two paths `p_0..p_{len-1}` (ids `0..len`) and `q_0..q_{len-1}` (ids
/// `len..2 len`) with rungs `p_i q_i` for `0 < i < len - 1`.
pub fn ladder(len: usize) -> Graph {
    let p = |i: usize| i;
    let q = |i: usize| len + i;
    let mut pairs: Vec<(Vertex, Vertex)> = Vec::new();
    for i in 0..len.saturating_sub(1) {
        pairs.push((p(i), p(i + 1)));
        pairs.push((q(i), q(i + 1)));
    }
    for i in 1..len.saturating_sub(1) {
        pairs.push((p(i), q(i)));
    }
    Graph::from_pairs(2 * len, &pairs)
}

/// Whole spine path, every rung, and the two end edges of the other path.
fn comb(g: &Graph, len: usize, spine: usize, other: usize) -> SpanningTree {
    let mut pairs: Vec<(Vertex, Vertex)> = (0..len - 1).map(|i| (spine + i, spine + i + 1)).collect();
    pairs.extend((1..len - 1).map(|i| (spine + i, other + i)));
    pairs.push((other, other + 1));
    pairs.push((other + len - 2, other + len - 1));
    SpanningTree::from_pairs(g, &pairs).expect("comb is a spanning tree")
}

/// Graph, two maximum-leaf trees in different flip components, and the
/// maximum-leaf constraint. Ladders separate their combs from length 7 on;
/// `None` when `size < 4` for ladders.
pub fn outerplanar_obstruction(family: ObstructionFamily, size: usize) -> Option<Obstruction> {
    match family {
        ObstructionFamily::ChordedC4 => {
            let graph = Graph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
            let t1 = SpanningTree::from_pairs(&graph, &[(0, 1), (0, 2), (0, 3)]).ok()?;
            let t2 = SpanningTree::from_pairs(&graph, &[(2, 1), (2, 0), (2, 3)]).ok()?;
            Some(Obstruction {
                graph,
                t1,
                t2,
                constraint: LeafConstraint::at_least(3),
            })
        }
        ObstructionFamily::ParallelLadder => {
            if size < 4 {
                return None;
            }
            let graph = ladder(size);
            Some(Obstruction {
                t1: comb(&graph, size, 0, size),
                t2: comb(&graph, size, size, 0),
                graph,
                constraint: LeafConstraint::at_least(size),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trees_meet_the_bound() {
        for (family, size) in [(ObstructionFamily::ChordedC4, 0), (ObstructionFamily::ParallelLadder, 7)] {
            let o = outerplanar_obstruction(family, size).unwrap();
            assert!(o.constraint.admits(&o.t1));
            assert!(o.constraint.admits(&o.t2));
            assert_ne!(o.t1, o.t2);
        }
        assert!(outerplanar_obstruction(ObstructionFamily::ParallelLadder, 3).is_none());
    }
}
