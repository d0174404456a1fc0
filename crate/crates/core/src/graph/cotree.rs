use std::fmt;

use super::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoTreeKind {
    Union,
    Join,
}

/// Cotree of a cograph. Leaves carry vertex ids of the host graph.
///
/// Trees built by [`build_cotree`] are canonical: internal labels alternate
/// along every root-to-leaf path and each internal node has at least two
/// children, ordered by smallest contained vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoTree {
    Leaf(Vertex),
    Node {
        kind: CoTreeKind,
        children: Vec<CoTree>,
    },
}

/// Cotree of `g`, or `None` if `g` contains an induced P4.
pub fn build_cotree(g: &Graph) -> Option<CoTree> {
    if g.n() == 0 {
        return None;
    }
    let all: Vec<Vertex> = (0..g.n()).collect();
    decompose(g, &all)
}

fn decompose(g: &Graph, verts: &[Vertex]) -> Option<CoTree> {
    if verts.len() == 1 {
        return Some(CoTree::Leaf(verts[0]));
    }
    let sub = g.induced(verts);
    let lift = |comps: Vec<Vec<Vertex>>| -> Vec<Vec<Vertex>> {
        comps
            .into_iter()
            .map(|c| c.into_iter().map(|i| verts[i]).collect())
            .collect()
    };
    let comps = sub.components();
    let (kind, parts) = if comps.len() > 1 {
        (CoTreeKind::Union, lift(comps))
    } else {
        let co = sub.complement().components();
        if co.len() == 1 {
            return None;
        }
        (CoTreeKind::Join, lift(co))
    };
    let children = parts
        .iter()
        .map(|p| decompose(g, p))
        .collect::<Option<Vec<_>>>()?;
    Some(CoTree::Node { kind, children })
}

impl CoTree {
    /// Host vertices below this node, ascending.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out.sort_unstable();
        out
    }

    fn collect(&self, out: &mut Vec<Vertex>) {
        match self {
            CoTree::Leaf(v) => out.push(*v),
            CoTree::Node { children, .. } => children.iter().for_each(|c| c.collect(out)),
        }
    }

    pub fn kind(&self) -> Option<CoTreeKind> {
        match self {
            CoTree::Leaf(_) => None,
            CoTree::Node { kind, .. } => Some(*kind),
        }
    }

    pub fn children(&self) -> &[CoTree] {
        match self {
            CoTree::Leaf(_) => &[],
            CoTree::Node { children, .. } => children,
        }
    }

    /// Rebuilds the graph on `n` vertices that this cotree describes.
    pub fn evaluate(&self, n: usize) -> Graph {
        let mut edges = Vec::new();
        self.join_edges(&mut edges);
        Graph::new(n, edges).expect("cotree leaves are distinct vertices below n")
    }

    fn join_edges(&self, out: &mut Vec<(Vertex, Vertex)>) {
        if let CoTree::Node { kind, children } = self {
            for c in children {
                c.join_edges(out);
            }
            if *kind == CoTreeKind::Join {
                let sets: Vec<_> = children.iter().map(CoTree::vertices).collect();
                for i in 0..sets.len() {
                    for j in i + 1..sets.len() {
                        for &a in &sets[i] {
                            for &b in &sets[j] {
                                out.push((a, b));
                            }
                        }
                    }
                }
            }
        }
    }

    /// True iff no node has a child of its own kind and every node has two
    /// or more children.
    pub fn is_canonical(&self) -> bool {
        match self {
            CoTree::Leaf(_) => true,
            CoTree::Node { kind, children } => {
                children.len() >= 2
                    && children
                        .iter()
                        .all(|c| c.kind() != Some(*kind) && c.is_canonical())
            }
        }
    }
}

impl fmt::Display for CoTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoTree::Leaf(v) => write!(f, "{v}"),
            CoTree::Node { kind, children } => {
                let name = match kind {
                    CoTreeKind::Union => "Union",
                    CoTreeKind::Join => "Join",
                };
                write!(f, "{name}(")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_is_flat_join() {
        let t = build_cotree(&Graph::complete(4)).unwrap();
        assert_eq!(t.to_string(), "Join(0,1,2,3)");
        assert!(t.is_canonical());
    }

    #[test]
    fn p4_is_rejected() {
        assert!(build_cotree(&Graph::path(4)).is_none());
    }

    #[test]
    fn four_cycle_is_join_of_unions() {
        let c4 = Graph::cycle(4);
        let t = build_cotree(&c4).unwrap();
        assert_eq!(t.to_string(), "Join(Union(0,2),Union(1,3))");
        assert_eq!(t.evaluate(4), c4);
    }

    #[test]
    fn nested_evaluation_round_trips() {
        // (0 + 1) join ((2 join 3) + 4)
        let g = Graph::from_pairs(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)]);
        let t = build_cotree(&g).unwrap();
        assert!(t.is_canonical());
        assert_eq!(t.evaluate(5), g);
        assert_eq!(t.vertices(), vec![0, 1, 2, 3, 4]);
    }
}
