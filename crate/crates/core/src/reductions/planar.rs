use std::collections::{BTreeSet, VecDeque};

use crate::graph::{validate_embedding, Edge, Graph, PlanarEmbedding, SpanningTree, Vertex};
use crate::oracle::min_cover_size;

use super::ReductionError;

/// Vertex cover on a plane graph encoded as a maximum-leaf question.
///
/// Layout: original vertices `0..n`, then one vertex per edge (in edge
/// order), one per face (in face order), and one pendant per face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManyLeavesPlanarInstance {
    pub source: Graph,
    pub embedding: PlanarEmbedding,
    pub graph: Graph,
    pub edge_vertices: Vec<Vertex>,
    pub face_vertices: Vec<Vertex>,
    pub leaf_vertices: Vec<Vertex>,
}

impl ManyLeavesPlanarInstance {
    /// Leaves of the tree built from a cover of size `cover`.
    pub fn leaves_for_cover(&self, cover: usize) -> usize {
        2 * (self.source.m() + 1) - cover
    }
}

/// Subdivides every edge and adds, for each face, a vertex joined to the
/// face's original vertices and a pendant on it.
pub fn build_vc_to_st_planar(
    source: &Graph,
    emb: &PlanarEmbedding,
) -> Result<ManyLeavesPlanarInstance, ReductionError> {
    if !validate_embedding(source, emb) {
        return Err(ReductionError::InvalidEmbedding);
    }
    let (n, m, f) = (source.n(), source.m(), emb.faces.len());
    // outer face first, the rest in input order
    let mut faces = vec![emb.faces[emb.outer].clone()];
    faces.extend((0..f).filter(|&i| i != emb.outer).map(|i| emb.faces[i].clone()));
    let embedding = PlanarEmbedding::new(0, faces);
    let edge_vertices: Vec<Vertex> = (n..n + m).collect();
    let face_vertices: Vec<Vertex> = (n + m..n + m + f).collect();
    let leaf_vertices: Vec<Vertex> = (n + m + f..n + m + 2 * f).collect();
    let mut edges = Vec::new();
    for (j, e) in source.edges().iter().enumerate() {
        edges.push(Edge::new(e.u(), edge_vertices[j]));
        edges.push(Edge::new(e.v(), edge_vertices[j]));
    }
    for i in 0..f {
        for v in embedding.face_vertices(i) {
            edges.push(Edge::new(v, face_vertices[i]));
        }
        edges.push(Edge::new(face_vertices[i], leaf_vertices[i]));
    }
    let graph = Graph::new(n + m + 2 * f, edges)?;
    Ok(ManyLeavesPlanarInstance {
        source: source.clone(),
        embedding,
        graph,
        edge_vertices,
        face_vertices,
        leaf_vertices,
    })
}

/// Tree with `2(|E| + 1) - |C|` leaves from a minimum cover `C`: edge
/// vertices hang from their smallest cover endpoint, the outer face vertex
/// takes its whole face, and faces are then reached in breadth-first order
/// over the dual, each hanging from the cover vertex of a shared edge.
pub fn planar_cover_tree(
    inst: &ManyLeavesPlanarInstance,
    cover: &[Vertex],
) -> Result<SpanningTree, ReductionError> {
    let g = &inst.source;
    let n = g.n();
    let mut in_c = vec![false; n];
    for &c in cover {
        if c >= n || in_c[c] {
            return Err(ReductionError::NotACover(cover.to_vec()));
        }
        in_c[c] = true;
    }
    if !g.is_vertex_cover(cover) {
        return Err(ReductionError::NotACover(cover.to_vec()));
    }
    let tau = min_cover_size(g).map_err(|e| ReductionError::ContractViolation(e.to_string()))?;
    if cover.len() != tau {
        return Err(ReductionError::NotMinimumCover(cover.to_vec()));
    }
    let keeper = |e: Edge| if in_c[e.u()] { e.u() } else { e.v() };
    let mut edges = Vec::new();
    for (j, &e) in g.edges().iter().enumerate() {
        edges.push(Edge::new(keeper(e), inst.edge_vertices[j]));
    }
    let emb = &inst.embedding;
    let f = emb.faces.len();
    for i in 0..f {
        edges.push(Edge::new(inst.face_vertices[i], inst.leaf_vertices[i]));
    }
    let face_edges: Vec<BTreeSet<Edge>> = (0..f).map(|i| emb.face_edges(i).into_iter().collect()).collect();
    let mut placed = vec![false; n];
    let mut seen = vec![false; f];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    for v in emb.face_vertices(0) {
        placed[v] = true;
        edges.push(Edge::new(v, inst.face_vertices[0]));
    }
    while let Some(fj) = queue.pop_front() {
        for fi in 0..f {
            if seen[fi] {
                continue;
            }
            let anchor = face_edges[fi]
                .intersection(&face_edges[fj])
                .map(|&e| keeper(e))
                .min();
            let Some(u) = anchor else { continue };
            seen[fi] = true;
            edges.push(Edge::new(inst.face_vertices[fi], u));
            for v in emb.face_vertices(fi) {
                if !placed[v] {
                    placed[v] = true;
                    edges.push(Edge::new(v, inst.face_vertices[fi]));
                }
            }
            queue.push_back(fi);
        }
    }
    Ok(SpanningTree::new(&inst.graph, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> (Graph, PlanarEmbedding) {
        (
            Graph::complete(3),
            PlanarEmbedding::new(0, vec![vec![0, 2, 1], vec![0, 1, 2]]),
        )
    }

    #[test]
    fn triangle_instance() {
        let (g, emb) = triangle();
        let inst = build_vc_to_st_planar(&g, &emb).unwrap();
        assert_eq!(inst.graph.n(), 10);
        let t = planar_cover_tree(&inst, &[0, 1]).unwrap();
        assert_eq!(t.leaf_count(), 6);
        assert!(matches!(planar_cover_tree(&inst, &[0, 1, 2]), Err(ReductionError::NotMinimumCover(_))));
    }

    #[test]
    fn degree_audit() {
        let (g, emb) = triangle();
        let inst = build_vc_to_st_planar(&g, &emb).unwrap();
        for &w in &inst.edge_vertices {
            assert_eq!(inst.graph.degree(w), 2);
        }
        for &u in &inst.leaf_vertices {
            assert_eq!(inst.graph.degree(u), 1);
        }
        for &w in &inst.face_vertices {
            assert_eq!(inst.graph.degree(w), 4);
        }
        for v in 0..3 {
            assert_eq!(inst.graph.degree(v), 2 + 2);
        }
    }

    #[test]
    fn rejects_bad_embedding() {
        let (g, _) = triangle();
        let bad = PlanarEmbedding::new(0, vec![vec![0, 1, 2]]);
        assert_eq!(build_vc_to_st_planar(&g, &bad), Err(ReductionError::InvalidEmbedding));
    }
}
