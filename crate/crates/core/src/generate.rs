//! Seeded random instances with class certificates.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

use crate::graph::{
    build_cotree, CoTree, CoTreeKind, Graph, Interval, IntervalRepresentation, PlanarEmbedding,
    Rational, SpanningTree, Vertex,
};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random connected interval graph with endpoints `0..2n` (all distinct).
///
/// Interval lengths are drawn around a per-call density so that a batch
/// of calls mixes sparse paths with near-cliques.
pub fn interval_graph(n: usize, rng: &mut Rng64) -> (Graph, IntervalRepresentation) {
    assert!(n >= 1);
    loop {
        let span = 100 * n as i64;
        let mean = rng.gen_range(span / (2 * n as i64).max(1)..=span / 2).max(2);
        let mut raw: Vec<(i64, i64)> = (0..n)
            .map(|_| {
                let l = rng.gen_range(0..span);
                let len = rng.gen_range(1..=2 * mean);
                (l, l + len)
            })
            .collect();
        raw.shuffle(rng);
        let rep = rank_endpoints(&raw);
        let g = rep.intersection_graph();
        if g.is_connected() {
            return (g, rep);
        }
    }
}

/// Replaces endpoints by their ranks, breaking ties so that touching
/// intervals stay intersecting.
fn rank_endpoints(raw: &[(i64, i64)]) -> IntervalRepresentation {
    // (coordinate, 0 for left / 1 for right, vertex)
    let mut pts: Vec<(i64, u8, usize)> = Vec::with_capacity(2 * raw.len());
    for (v, &(l, r)) in raw.iter().enumerate() {
        pts.push((l, 0, v));
        pts.push((r, 1, v));
    }
    pts.sort_unstable();
    let mut out = vec![(0i64, 0i64); raw.len()];
    for (rank, &(_, side, v)) in pts.iter().enumerate() {
        if side == 0 {
            out[v].0 = rank as i64;
        } else {
            out[v].1 = rank as i64;
        }
    }
    IntervalRepresentation::from_ints(&out)
}

/// Random connected cograph together with its cotree.
pub fn cograph(n: usize, rng: &mut Rng64) -> (Graph, CoTree) {
    assert!(n >= 1);
    let mut verts: Vec<Vertex> = (0..n).collect();
    verts.shuffle(rng);
    let mut edges = Vec::new();
    build_random_cotree(&verts, CoTreeKind::Join, rng, &mut edges);
    let g = Graph::new(n, edges).expect("generated cograph edges are valid");
    let t = build_cotree(&g).expect("generated graph is a cograph");
    (g, t)
}

fn build_random_cotree(
    verts: &[Vertex],
    kind: CoTreeKind,
    rng: &mut Rng64,
    edges: &mut Vec<(Vertex, Vertex)>,
) {
    if verts.len() == 1 {
        return;
    }
    let parts = rng.gen_range(2..=verts.len().min(3));
    // random composition of verts.len() into `parts` positive pieces
    let mut cuts: Vec<usize> = (1..verts.len()).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(parts - 1).collect();
    cuts.sort_unstable();
    let mut pieces = Vec::new();
    let mut start = 0;
    for c in cuts.into_iter().chain(std::iter::once(verts.len())) {
        pieces.push(&verts[start..c]);
        start = c;
    }
    if kind == CoTreeKind::Join {
        for i in 0..pieces.len() {
            for j in i + 1..pieces.len() {
                for &a in pieces[i] {
                    for &b in pieces[j] {
                        edges.push((a, b));
                    }
                }
            }
        }
    }
    let next = match kind {
        CoTreeKind::Join => CoTreeKind::Union,
        CoTreeKind::Union => CoTreeKind::Join,
    };
    for p in pieces {
        build_random_cotree(p, next, rng, edges);
    }
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// with a per-call probability.
pub fn connected_graph(n: usize, rng: &mut Rng64) -> Graph {
    let p: f64 = rng.gen_range(0.1..0.9);
    connected_graph_with_density(n, p, rng)
}

pub fn connected_graph_with_density(n: usize, p: f64, rng: &mut Rng64) -> Graph {
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = std::collections::BTreeSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (order[i], order[j]);
        edges.insert((a.min(b), a.max(b)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated edges are valid")
}

/// Uniformly random spanning tree (Wilson's algorithm).
pub fn random_spanning_tree(g: &Graph, rng: &mut Rng64) -> SpanningTree {
    let n = g.n();
    assert!(g.is_connected(), "graph must be connected");
    if n <= 1 {
        return SpanningTree::new(g, Vec::<(usize, usize)>::new()).unwrap();
    }
    let mut in_tree = vec![false; n];
    let mut next = vec![usize::MAX; n];
    in_tree[rng.gen_range(0..n)] = true;
    for start in 0..n {
        let mut u = start;
        while !in_tree[u] {
            let nb = g.neighbors(u);
            next[u] = nb[rng.gen_range(0..nb.len())];
            u = next[u];
        }
        let mut u = start;
        while !in_tree[u] {
            in_tree[u] = true;
            u = next[u];
        }
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .filter(|&v| next[v] != usize::MAX)
        .map(|v| (v, next[v]))
        .collect();
    SpanningTree::new(g, edges).expect("Wilson's walk yields a spanning tree")
}

/// Random spanning tree with at most `budget` internal nodes, or `None` if
/// no connected dominating set is that small. A connected dominating set
/// of size at most `budget` is drawn uniformly, then a random tree inside
/// it, and every other vertex hangs from a random neighbour in the set.
/// Meant for graphs of up to about 20 vertices.
pub fn random_tree_within_budget(g: &Graph, budget: usize, rng: &mut Rng64) -> Option<SpanningTree> {
    let n = g.n();
    assert!(n <= 24 && g.is_connected());
    if n <= 1 {
        return Some(SpanningTree::new(g, Vec::<(usize, usize)>::new()).unwrap());
    }
    let sets: Vec<Vec<Vertex>> = (1u32..1 << n)
        .filter(|m| m.count_ones() as usize <= budget.max(1))
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>())
        .filter(|s| g.dominates(s) && g.induces_connected(s))
        .collect();
    let set = sets.choose(rng)?;
    let inner = g.induced(set);
    let mut edges: Vec<(Vertex, Vertex)> = random_spanning_tree(&inner, rng)
        .edges()
        .iter()
        .map(|e| (set[e.u()], set[e.v()]))
        .collect();
    for v in (0..n).filter(|v| !set.contains(v)) {
        let hosts: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|u| set.contains(u)).collect();
        edges.push((v, *hosts.choose(rng).unwrap()));
    }
    Some(SpanningTree::new(g, edges).expect("set plus hanging vertices is a spanning tree"))
}

/// Random labelled tree on `n` vertices (uniform over all `n^(n-2)`).
pub fn random_tree(n: usize, rng: &mut Rng64) -> (Graph, SpanningTree) {
    let k = Graph::complete(n);
    let t = random_spanning_tree(&k, rng);
    let g = Graph::new(n, t.edges().iter().copied()).unwrap();
    let t = SpanningTree::new(&g, t.edges().iter().copied()).unwrap();
    (g, t)
}

/// A small embedded planar graph from a fixed catalog.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: Graph,
    pub embedding: PlanarEmbedding,
}

fn entry(name: &'static str, n: usize, faces: Vec<Vec<Vertex>>) -> CatalogEntry {
    let mut edges = std::collections::BTreeSet::new();
    for f in &faces {
        for i in 0..f.len() {
            let (a, b) = (f[i], f[(i + 1) % f.len()]);
            edges.insert((a.min(b), a.max(b)));
        }
    }
    let graph = Graph::new(n, edges).unwrap();
    CatalogEntry {
        name,
        graph,
        embedding: PlanarEmbedding::new(0, faces),
    }
}

/// Embedded planar graphs used by the planar generator and tests. Each
/// face list starts with the outer face.
pub fn planar_catalog() -> Vec<CatalogEntry> {
    vec![
        entry("triangle", 3, vec![vec![0, 2, 1], vec![0, 1, 2]]),
        entry(
            "tetrahedron",
            4,
            vec![vec![0, 2, 1], vec![0, 1, 3], vec![1, 2, 3], vec![0, 3, 2]],
        ),
        entry("square", 4, vec![vec![0, 3, 2, 1], vec![0, 1, 2, 3]]),
        entry("pentagon", 5, vec![vec![0, 4, 3, 2, 1], vec![0, 1, 2, 3, 4]]),
        entry(
            "chorded-square",
            4,
            vec![vec![0, 3, 2, 1], vec![0, 1, 2], vec![0, 2, 3]],
        ),
        entry(
            "diamond-pendant",
            5,
            vec![vec![0, 3, 4, 3, 2, 1], vec![0, 1, 2], vec![0, 2, 3]],
        ),
        entry("path-3", 3, vec![vec![0, 1, 2, 1]]),
        entry("star-3", 4, vec![vec![0, 1, 0, 2, 0, 3]]),
        entry(
            "wheel-4",
            5,
            vec![
                vec![0, 3, 2, 1],
                vec![0, 1, 4],
                vec![1, 2, 4],
                vec![2, 3, 4],
                vec![3, 0, 4],
            ],
        ),
        entry(
            "triangular-prism",
            6,
            vec![
                vec![0, 2, 1],
                vec![3, 4, 5],
                vec![0, 1, 4, 3],
                vec![1, 2, 5, 4],
                vec![2, 0, 3, 5],
            ],
        ),
        entry(
            "bowtie",
            5,
            vec![vec![0, 2, 4, 3, 2, 1], vec![0, 1, 2], vec![2, 3, 4]],
        ),
    ]
}

/// Random catalog entry, with vertex labels shuffled and faces rotated.
pub fn planar_embedded(rng: &mut Rng64) -> CatalogEntry {
    let cat = planar_catalog();
    let base = &cat[rng.gen_range(0..cat.len())];
    let n = base.graph.n();
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    let faces: Vec<Vec<Vertex>> = base
        .embedding
        .faces
        .iter()
        .map(|f| {
            let mut g: Vec<Vertex> = f.iter().map(|&v| perm[v]).collect();
            let k = rng.gen_range(0..g.len());
            g.rotate_left(k);
            g
        })
        .collect();
    let graph = Graph::new(
        n,
        base.graph.edges().iter().map(|e| (perm[e.u()], perm[e.v()])),
    )
    .unwrap();
    CatalogEntry {
        name: base.name,
        graph,
        embedding: PlanarEmbedding::new(base.embedding.outer, faces),
    }
}

/// Interval with small-integer rational endpoints; handy in tests.
pub fn interval(l: (i64, i64), r: (i64, i64)) -> Interval {
    Interval::new(Rational::new(l.0, l.1), Rational::new(r.0, r.1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{validate_embedding, validate_interval};

    #[test]
    fn interval_graphs_validate() {
        let mut r = rng(1);
        for n in 1..10 {
            let (g, rep) = interval_graph(n, &mut r);
            assert!(validate_interval(&g, &rep));
            assert!(g.is_connected());
        }
    }

    #[test]
    fn cographs_have_cotrees() {
        let mut r = rng(2);
        for n in 1..10 {
            let (g, t) = cograph(n, &mut r);
            assert!(g.is_connected());
            assert_eq!(t.evaluate(n), g);
        }
    }

    #[test]
    fn catalog_embeddings_validate() {
        for e in planar_catalog() {
            assert!(validate_embedding(&e.graph, &e.embedding), "{}", e.name);
        }
        let mut r = rng(3);
        for _ in 0..20 {
            let e = planar_embedded(&mut r);
            assert!(validate_embedding(&e.graph, &e.embedding), "{}", e.name);
        }
    }

    #[test]
    fn same_seed_same_graph() {
        let a = interval_graph(8, &mut rng(9));
        let b = interval_graph(8, &mut rng(9));
        assert_eq!(a, b);
        assert_eq!(connected_graph(7, &mut rng(4)), connected_graph(7, &mut rng(4)));
    }

    #[test]
    fn wilson_trees_are_spanning() {
        let mut r = rng(5);
        let g = connected_graph(9, &mut r);
        for _ in 0..20 {
            let t = random_spanning_tree(&g, &mut r);
            assert_eq!(t.edges().len(), 8);
        }
    }
}
