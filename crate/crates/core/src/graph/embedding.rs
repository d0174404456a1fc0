use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{Edge, Graph, Vertex};

/// Faces of a plane graph as closed vertex walks, plus the outer face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarEmbedding {
    pub outer: usize,
    #[serde(rename = "cycles")]
    pub faces: Vec<Vec<Vertex>>,
}

impl PlanarEmbedding {
    pub fn new(outer: usize, faces: Vec<Vec<Vertex>>) -> Self {
        PlanarEmbedding { outer, faces }
    }

    /// Edges along the boundary walk of face `f`, in walk order.
    pub fn face_edges(&self, f: usize) -> Vec<Edge> {
        let walk = &self.faces[f];
        let k = walk.len();
        if k < 2 {
            return Vec::new();
        }
        (0..k).map(|i| Edge::new(walk[i], walk[(i + 1) % k])).collect()
    }

    /// Distinct vertices of face `f`, ascending.
    pub fn face_vertices(&self, f: usize) -> Vec<Vertex> {
        let mut v = self.faces[f].clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// For every edge, the faces whose walk uses it (a face may appear
    /// twice when the edge is a bridge).
    pub fn edge_faces(&self) -> HashMap<Edge, Vec<usize>> {
        let mut out: HashMap<Edge, Vec<usize>> = HashMap::new();
        for f in 0..self.faces.len() {
            for e in self.face_edges(f) {
                out.entry(e).or_default().push(f);
            }
        }
        out
    }
}

/// True iff each face walk follows edges of `g`, every edge is traversed
/// exactly twice over all walks, and Euler's relation holds.
pub fn validate_embedding(g: &Graph, emb: &PlanarEmbedding) -> bool {
    if emb.faces.is_empty() || emb.outer >= emb.faces.len() || !g.is_connected() {
        return false;
    }
    let mut uses: HashMap<Edge, usize> = HashMap::new();
    for (f, walk) in emb.faces.iter().enumerate() {
        if walk.is_empty() || walk.iter().any(|&v| v >= g.n()) {
            return false;
        }
        if walk.len() == 1 {
            if g.m() != 0 {
                return false;
            }
            continue;
        }
        if walk.len() == 2 && walk[0] == walk[1] {
            return false;
        }
        for e in emb.face_edges(f) {
            if e.u() == e.v() || !g.contains_edge(e) {
                return false;
            }
            *uses.entry(e).or_default() += 1;
        }
    }
    if uses.len() != g.m() || uses.values().any(|&c| c != 2) {
        return false;
    }
    emb.faces.len() as i64 == 2 - g.n() as i64 + g.m() as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_two_faces() {
        let k3 = Graph::complete(3);
        assert!(validate_embedding(&k3, &PlanarEmbedding::new(0, vec![vec![0, 1, 2], vec![0, 2, 1]])));
        assert!(!validate_embedding(&k3, &PlanarEmbedding::new(0, vec![vec![0, 1, 2]])));
    }

    #[test]
    fn tetrahedron() {
        let k4 = Graph::complete(4);
        let emb = PlanarEmbedding::new(
            0,
            vec![vec![0, 1, 2], vec![0, 3, 1], vec![1, 3, 2], vec![0, 2, 3]],
        );
        assert!(validate_embedding(&k4, &emb));
    }

    #[test]
    fn path_has_one_face() {
        let p3 = Graph::path(3);
        assert!(validate_embedding(&p3, &PlanarEmbedding::new(0, vec![vec![0, 1, 2, 1]])));
        assert!(!validate_embedding(&p3, &PlanarEmbedding::new(1, vec![vec![0, 1, 2, 1]])));
    }
}
