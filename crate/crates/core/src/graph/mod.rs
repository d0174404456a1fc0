//! Simple undirected graphs on dense vertex ids, spanning trees, edge flips
//! and the class certificates (cotrees, interval models, planar embeddings).

mod cotree;
mod embedding;
mod interval;
mod tree;

pub use cotree::{build_cotree, CoTree, CoTreeKind};
pub use embedding::{validate_embedding, PlanarEmbedding};
pub use interval::{validate_interval, Interval, IntervalRepresentation, Rational};
pub(crate) use tree::Dsu;
pub use tree::{
    is_spanning_tree, leaf_count_from_degrees, ConstraintKind, EdgeFlip, FlipSequence,
    LeafConstraint, ReplayError, SpanningTree,
};

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub type Vertex = usize;

/// An undirected edge stored with its endpoints in increasing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    /// Builds the normalized edge `{u, v}`. Self-loops are representable here
    /// and rejected by [`Graph::new`].
    pub fn new(u: Vertex, v: Vertex) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn u(self) -> Vertex {
        self.0
    }

    pub fn v(self) -> Vertex {
        self.1
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }

    pub fn touches(self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint opposite to `x`. Panics if `x` is not an endpoint.
    pub fn other(self, x: Vertex) -> Vertex {
        if self.0 == x {
            self.1
        } else {
            assert_eq!(self.1, x, "{x} is not an endpoint of {self}");
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from((u, v): (Vertex, Vertex)) -> Self {
        Edge::new(u, v)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.0, self.1].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [u, v] = <[Vertex; 2]>::deserialize(d)?;
        Ok(Edge::new(u, v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge {0} listed twice")]
    DuplicateEdge(Edge),
    #[error("edge {0} is not an edge of the host graph")]
    EdgeNotInGraph(Edge),
    #[error("expected {expected} tree edges, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error("edge set contains a cycle through {0}")]
    Cycle(Edge),
    #[error("edge set does not connect all vertices")]
    Disconnected,
    #[error("flip removes {0}, which is not a tree edge")]
    RemovedNotInTree(Edge),
    #[error("flip adds {0}, which is already a tree edge")]
    AddedAlreadyInTree(Edge),
    #[error("removing {removed} and adding {added} leaves the tree disconnected")]
    ResultDisconnected { removed: Edge, added: Edge },
}

/// A simple undirected graph on the vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
    index: HashMap<Edge, usize>,
}

impl Graph {
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut list = Vec::new();
        for e in edges {
            let e: Edge = e.into();
            for x in [e.0, e.1] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if e.0 == e.1 {
                return Err(GraphError::SelfLoop(e.0));
            }
            list.push(e);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0]));
        }
        let mut adj = vec![Vec::new(); n];
        for e in &list {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        let index = list.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Ok(Graph {
            n,
            edges: list,
            adj,
            index,
        })
    }

    /// Convenience constructor for literals; panics on invalid input.
    pub fn from_pairs(n: usize, pairs: &[(Vertex, Vertex)]) -> Self {
        Graph::new(n, pairs.iter().copied()).expect("invalid edge list")
    }

    pub fn empty(n: usize) -> Self {
        Graph::from_pairs(n, &[])
    }

    pub fn complete(n: usize) -> Self {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::from_pairs(n, &e)
    }

    pub fn path(n: usize) -> Self {
        let e: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_pairs(n, &e)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let e: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_pairs(n, &e)
    }

    /// Star with centre 0 and `leaves` further vertices.
    pub fn star(leaves: usize) -> Self {
        let e: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_pairs(leaves + 1, &e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.index.contains_key(&Edge::new(u, v))
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.index.contains_key(&e)
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.index.get(&e).copied()
    }

    /// Closed neighbourhood `N[v]`, sorted.
    pub fn closed_neighborhood(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = self.adj[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut e = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    e.push((u, v));
                }
            }
        }
        Graph::from_pairs(self.n, &e)
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let pos: HashMap<Vertex, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut e = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for w in &self.adj[v] {
                if let Some(&j) = pos.get(w) {
                    if i < j {
                        e.push((i, j));
                    }
                }
            }
        }
        Graph::from_pairs(vertices.len(), &e)
    }

    pub fn is_clique(&self) -> bool {
        self.m() * 2 == self.n * self.n.saturating_sub(1)
    }

    /// True iff every vertex is in `set` or has a neighbour in it.
    pub fn dominates(&self, set: &[Vertex]) -> bool {
        let mut hit = vec![false; self.n];
        for &s in set {
            hit[s] = true;
            for &w in &self.adj[s] {
                hit[w] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }

    /// True iff every edge has an endpoint in `set`.
    pub fn is_vertex_cover(&self, set: &[Vertex]) -> bool {
        let mut inside = vec![false; self.n];
        for &s in set {
            inside[s] = true;
        }
        self.edges.iter().all(|e| inside[e.0] || inside[e.1])
    }

    /// True iff `set` induces a connected subgraph (the empty set does not).
    pub fn induces_connected(&self, set: &[Vertex]) -> bool {
        !set.is_empty() && self.induced(set).is_connected()
    }
}
