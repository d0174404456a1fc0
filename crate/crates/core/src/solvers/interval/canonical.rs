use crate::graph::{Graph, IntervalRepresentation, SpanningTree, Vertex};

use super::check_instance;
use crate::solvers::SolveError;

/// Greedy dominating path of an interval graph, ordered by right endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalSet {
    pub vertices: Vec<Vertex>,
}

impl CanonicalSet {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }
}

/// Runs the greedy loop on the intervals of `members`: while the remaining
/// vertices are not a clique, take the vertex ending last among those
/// meeting the earliest-ending one, then drop everything ending before it.
///
/// A clique yields its last-ending vertex. Returns `None` when the members
/// induce a disconnected graph.
pub(crate) fn greedy_path(rep: &IntervalRepresentation, members: &[Vertex]) -> Option<Vec<Vertex>> {
    let mut remaining: Vec<Vertex> = members.to_vec();
    remaining.sort_by_key(|&v| rep.right(v));
    let mut out = Vec::new();
    while let Some(&first) = remaining.first() {
        let is_clique = remaining.iter().map(|&v| rep.left(v)).max().unwrap() < rep.right(first);
        if is_clique && !out.is_empty() {
            break;
        }
        let reach = rep.right(first);
        let pick = *remaining
            .iter()
            .filter(|&&v| rep.left(v) < reach)
            .max_by_key(|&&v| rep.right(v))
            .unwrap();
        if is_clique {
            out.push(pick);
            break;
        }
        if pick == first {
            return None;
        }
        out.push(pick);
        remaining.retain(|&v| rep.right(v) >= rep.right(pick));
    }
    Some(out)
}

pub fn canonical_set(g: &Graph, rep: &IntervalRepresentation) -> Result<CanonicalSet, SolveError> {
    check_instance(g, rep)?;
    let all: Vec<Vertex> = (0..g.n()).collect();
    let vertices = greedy_path(rep, &all).ok_or(SolveError::DisconnectedGraph)?;
    Ok(CanonicalSet { vertices })
}

/// Spanning tree on the path of `set`, every other vertex hanging off its
/// lowest-id neighbour in `set`.
pub(crate) fn tree_on_path(g: &Graph, set: &[Vertex]) -> SpanningTree {
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    let mut edges: Vec<(Vertex, Vertex)> = set.windows(2).map(|w| (w[0], w[1])).collect();
    for v in (0..g.n()).filter(|&v| !inside[v]) {
        let hub = *g
            .neighbors(v)
            .iter()
            .find(|&&u| inside[u])
            .expect("the set dominates the graph");
        edges.push((v, hub));
    }
    SpanningTree::from_pairs(g, &edges).expect("a dominating path yields a spanning tree")
}

/// Spanning tree with internal nodes inside the canonical set.
pub fn canonical_tree(g: &Graph, rep: &IntervalRepresentation) -> Result<SpanningTree, SolveError> {
    let x = canonical_set(g, rep)?;
    Ok(tree_on_path(g, &x.vertices))
}
