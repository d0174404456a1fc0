use crate::graph::{Edge, Graph, LeafConstraint, SpanningTree, Vertex};

use super::ReductionError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ManyLeavesVariant {
    Bipartite,
    /// `A` together with `x` forms a clique.
    Split,
}

/// Dominating set reconfiguration on `source` encoded as spanning tree
/// reconfiguration with many leaves.
///
/// Layout: `a_i = i`, `b_{i,t} = n + 2i + t`, `x = 3n`, `y = 3n + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManyLeavesInstance {
    pub source: Graph,
    pub variant: ManyLeavesVariant,
    pub graph: Graph,
    pub a: Vec<Vertex>,
    pub b: Vec<[Vertex; 2]>,
    pub x: Vertex,
    pub y: Vertex,
}

impl ManyLeavesInstance {
    /// Trees whose internal nodes allow a dominating set of size at most
    /// `threshold` (plus `x`).
    pub fn constraint(&self, threshold: usize) -> LeafConstraint {
        LeafConstraint::internal_budget(self.graph.n(), threshold + 1)
    }
}

pub fn build_ds_to_st_instance(source: &Graph, variant: ManyLeavesVariant) -> ManyLeavesInstance {
    let n = source.n();
    let a: Vec<Vertex> = (0..n).collect();
    let b: Vec<[Vertex; 2]> = (0..n).map(|i| [n + 2 * i, n + 2 * i + 1]).collect();
    let (x, y) = (3 * n, 3 * n + 1);
    let mut edges: Vec<Edge> = Vec::new();
    for i in 0..n {
        for j in source.closed_neighborhood(i) {
            edges.push(Edge::new(a[i], b[j][0]));
            edges.push(Edge::new(a[i], b[j][1]));
        }
        edges.push(Edge::new(x, a[i]));
    }
    edges.push(Edge::new(x, y));
    if variant == ManyLeavesVariant::Split {
        for i in 0..n {
            for j in i + 1..n {
                edges.push(Edge::new(a[i], a[j]));
            }
        }
    }
    let graph = Graph::new(3 * n + 2, edges).expect("construction yields a simple graph");
    ManyLeavesInstance {
        source: source.clone(),
        variant,
        graph,
        a,
        b,
        x,
        y,
    }
}

/// Star on `A ∪ {y}` at `x`, with each `b_{i,·}` hanging from `a_i` when
/// `i ∈ D` and otherwise from its smallest-index dominator in `D`.
pub fn dominating_to_tree(inst: &ManyLeavesInstance, d: &[Vertex]) -> Result<SpanningTree, ReductionError> {
    let n = inst.source.n();
    let mut in_d = vec![false; n];
    for &v in d {
        if v >= n || in_d[v] {
            return Err(ReductionError::NotADominatingSet(d.to_vec()));
        }
        in_d[v] = true;
    }
    if !inst.source.dominates(d) {
        return Err(ReductionError::NotADominatingSet(d.to_vec()));
    }
    let mut edges: Vec<Edge> = inst.a.iter().map(|&a| Edge::new(inst.x, a)).collect();
    edges.push(Edge::new(inst.x, inst.y));
    for i in 0..n {
        let host = if in_d[i] {
            i
        } else {
            *inst
                .source
                .neighbors(i)
                .iter()
                .filter(|&&j| in_d[j])
                .min()
                .expect("dominated")
        };
        for &b in &inst.b[i] {
            edges.push(Edge::new(inst.a[host], b));
        }
    }
    Ok(SpanningTree::new(&inst.graph, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_three_sizes() {
        let g = Graph::path(3);
        let inst = build_ds_to_st_instance(&g, ManyLeavesVariant::Bipartite);
        assert_eq!(inst.graph.n(), 11);
        let t = dominating_to_tree(&inst, &[1]).unwrap();
        assert_eq!(t.internal_count(), 2);
        assert_eq!(t.leaf_count(), 9);
        assert!(matches!(dominating_to_tree(&inst, &[0]), Err(ReductionError::NotADominatingSet(_))));
    }

    #[test]
    fn twins_share_neighbourhoods() {
        let g = Graph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        for variant in [ManyLeavesVariant::Bipartite, ManyLeavesVariant::Split] {
            let inst = build_ds_to_st_instance(&g, variant);
            for [b0, b1] in &inst.b {
                assert_eq!(inst.graph.neighbors(*b0), inst.graph.neighbors(*b1));
            }
            assert_eq!(inst.graph.neighbors(inst.y), &[inst.x]);
        }
    }
}
