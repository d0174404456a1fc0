use std::sync::OnceLock;

use crate::graph::{Edge, Graph, Vertex};

/// Vertices per edge gadget.
pub const GADGET_SIZE: usize = 12;

/// Local ids of the special vertices.
pub const X_U: Vertex = 0;
pub const Y_U: Vertex = 1;
pub const X_V: Vertex = 2;
pub const Y_V: Vertex = 3;
/// Local ids of `r1..r8`: `R[i]` is `r_{i+1}`.
pub const R: [Vertex; 8] = [4, 5, 6, 7, 8, 9, 10, 11];

/// Two six-vertex paths `x_u r1 r2 r3 r4 y_u` and `x_v r5 r6 r7 r8 y_v`
/// with cross edges `x_u r6`, `x_v r2`, `y_u r7`, `y_v r3`.
pub const GADGET_EDGES: [(Vertex, Vertex); 14] = [
    (X_U, 4),
    (4, 5),
    (5, 6),
    (6, 7),
    (7, Y_U),
    (X_V, 8),
    (8, 9),
    (9, 10),
    (10, 11),
    (11, Y_V),
    (X_U, 9),
    (X_V, 5),
    (Y_U, 10),
    (Y_V, 6),
];

const SPECIALS: [Vertex; 4] = [X_U, Y_U, X_V, Y_V];

pub fn gadget_graph() -> Graph {
    Graph::from_pairs(GADGET_SIZE, &GADGET_EDGES)
}

/// Edges of a gadget as it sits inside a tree with every gadget vertex of
/// degree 2, plus which special vertices take an edge from outside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetPattern {
    pub edges: Vec<Edge>,
    /// Indexed by `X_U, Y_U, X_V, Y_V`.
    pub outside: [bool; 4],
}

impl GadgetPattern {
    pub fn boundary(&self) -> usize {
        self.outside.iter().filter(|&&o| o).count()
    }
}

/// Results of the exhaustive checks on the gadget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetCertificate {
    pub hamiltonian_paths: usize,
    /// Hamiltonian paths with one end on each side; must be zero.
    pub crossing_paths: usize,
    /// Every admissible degree-2 configuration.
    pub patterns: Vec<GadgetPattern>,
    /// Both sides pass through: two separate paths.
    pub both: GadgetPattern,
    /// Traversal by the u side, then by the v side.
    pub one_side: [GadgetPattern; 2],
}

fn adjacency() -> Vec<Vec<Vertex>> {
    let mut adj = vec![Vec::new(); GADGET_SIZE];
    for &(a, b) in &GADGET_EDGES {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

fn hamiltonian_paths() -> Vec<Vec<Vertex>> {
    fn extend(adj: &[Vec<Vertex>], path: &mut Vec<Vertex>, used: &mut [bool], out: &mut Vec<Vec<Vertex>>) {
        if path.len() == GADGET_SIZE {
            if path[0] < path[GADGET_SIZE - 1] {
                out.push(path.clone());
            }
            return;
        }
        let last = *path.last().unwrap();
        for &w in &adj[last] {
            if !used[w] {
                used[w] = true;
                path.push(w);
                extend(adj, path, used, out);
                path.pop();
                used[w] = false;
            }
        }
    }
    let adj = adjacency();
    let mut out = Vec::new();
    for s in 0..GADGET_SIZE {
        let mut used = vec![false; GADGET_SIZE];
        used[s] = true;
        extend(&adj, &mut vec![s], &mut used, &mut out);
    }
    out
}

/// Edge subsets where local vertices have degree 2, special vertices make
/// up the rest of degree 2 with outside edges, the subset is a forest, and
/// every component reaches outside.
fn degree_two_configurations() -> Vec<GadgetPattern> {
    let mut out = Vec::new();
    for mask in 0u32..1 << GADGET_EDGES.len() {
        let chosen: Vec<(Vertex, Vertex)> = (0..GADGET_EDGES.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| GADGET_EDGES[i])
            .collect();
        let mut deg = [0usize; GADGET_SIZE];
        for &(a, b) in &chosen {
            deg[a] += 1;
            deg[b] += 1;
        }
        if R.iter().any(|&r| deg[r] != 2) || SPECIALS.iter().any(|&s| deg[s] > 2) {
            continue;
        }
        // forest check and component roots
        let mut parent: Vec<Vertex> = (0..GADGET_SIZE).collect();
        fn find(p: &mut [Vertex], x: Vertex) -> Vertex {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut acyclic = true;
        for &(a, b) in &chosen {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                acyclic = false;
                break;
            }
            parent[ra] = rb;
        }
        if !acyclic {
            continue;
        }
        let outside = SPECIALS.map(|s| deg[s] < 2);
        let mut reaches = [false; GADGET_SIZE];
        for (i, &s) in SPECIALS.iter().enumerate() {
            if outside[i] {
                let root = find(&mut parent, s);
                reaches[root] = true;
            }
        }
        if (0..GADGET_SIZE).all(|v| reaches[find(&mut parent, v)]) {
            out.push(GadgetPattern {
                edges: chosen.into_iter().map(Edge::from).collect(),
                outside,
            });
        }
    }
    out
}

fn certify() -> GadgetCertificate {
    let g = gadget_graph();
    for v in (0..GADGET_SIZE).filter(|&v| [R[0], R[3], R[4], R[7]].contains(&v) || SPECIALS.contains(&v)) {
        assert_eq!(g.degree(v), 2, "gadget vertex {v} must have degree 2");
    }
    let paths = hamiltonian_paths();
    let u_side = |v: Vertex| v == X_U || v == Y_U;
    let v_side = |v: Vertex| v == X_V || v == Y_V;
    let crossing = paths
        .iter()
        .filter(|p| {
            let (a, b) = (p[0], p[GADGET_SIZE - 1]);
            (u_side(a) && v_side(b)) || (v_side(a) && u_side(b))
        })
        .count();
    assert_eq!(crossing, 0, "gadget admits a Hamiltonian path across sides");

    let patterns = degree_two_configurations();
    let find = |outside: [bool; 4]| -> GadgetPattern {
        let hits: Vec<&GadgetPattern> = patterns.iter().filter(|p| p.outside == outside).collect();
        assert_eq!(hits.len(), 1, "expected one gadget pattern for {outside:?}");
        hits[0].clone()
    };
    let both = find([true, true, true, true]);
    let one_side = [find([true, true, false, false]), find([false, false, true, true])];
    assert_eq!(patterns.len(), 3, "gadget has unexpected degree-2 configurations");
    GadgetCertificate {
        hamiltonian_paths: paths.len(),
        crossing_paths: crossing,
        patterns,
        both,
        one_side,
    }
}

/// Runs the exhaustive gadget checks once and caches the result. Panics
/// if the gadget fails them, since every construction relies on it.
pub fn certify_gadget() -> &'static GadgetCertificate {
    static CERT: OnceLock<GadgetCertificate> = OnceLock::new();
    CERT.get_or_init(certify)
}

/// `(both, u-side traversal, v-side traversal)`.
pub fn regular_patterns() -> (&'static GadgetPattern, &'static [GadgetPattern; 2]) {
    let c = certify_gadget();
    (&c.both, &c.one_side)
}
