use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Edge, Graph, GraphError, Vertex};

/// Leaves of a tree from its degree sequence: `sum(max(0, d - 2)) + 2`.
///
/// Only meaningful for trees on at least two vertices.
pub fn leaf_count_from_degrees(degrees: &[usize]) -> usize {
    degrees.iter().map(|&d| d.saturating_sub(2)).sum::<usize>() + 2
}

/// True iff `edges` is a spanning tree of `g`.
pub fn is_spanning_tree(g: &Graph, edges: &[Edge]) -> Result<bool, GraphError> {
    if let Some(&e) = edges.iter().find(|e| !g.contains_edge(**e)) {
        return Err(GraphError::EdgeNotInGraph(e));
    }
    Ok(check_tree_shape(g.n(), edges).is_ok())
}

fn check_tree_shape(n: usize, edges: &[Edge]) -> Result<(), GraphError> {
    let expected = n.saturating_sub(1);
    if edges.len() != expected {
        return Err(GraphError::WrongEdgeCount {
            expected,
            found: edges.len(),
        });
    }
    let mut dsu = Dsu::new(n);
    for &e in edges {
        if !dsu.union(e.u(), e.v()) {
            return Err(GraphError::Cycle(e));
        }
    }
    // n - 1 acyclic edges on n vertices always connect them.
    Ok(())
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// A spanning tree of some host graph, with cached degrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpanningTree {
    edges: Vec<Edge>,
    degree: Vec<usize>,
    leaves: usize,
}

impl SpanningTree {
    pub fn new<I, E>(g: &Graph, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut list: Vec<Edge> = edges.into_iter().map(Into::into).collect();
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0]));
        }
        for &e in &list {
            for x in [e.u(), e.v()] {
                if x >= g.n() {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n: g.n() });
                }
            }
            if !g.contains_edge(e) {
                return Err(GraphError::EdgeNotInGraph(e));
            }
        }
        check_tree_shape(g.n(), &list)?;
        Ok(Self::from_sorted_unchecked(g.n(), list))
    }

    /// Builds from a sorted edge list already known to be a spanning tree.
    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut degree = vec![0; n];
        for e in &edges {
            degree[e.u()] += 1;
            degree[e.v()] += 1;
        }
        let internal = degree.iter().filter(|&&d| d >= 2).count();
        let leaves = n - internal;
        if n >= 2 {
            debug_assert_eq!(leaves, leaf_count_from_degrees(&degree));
        }
        SpanningTree {
            edges,
            degree,
            leaves,
        }
    }

    pub fn from_pairs(g: &Graph, pairs: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        SpanningTree::new(g, pairs.iter().copied())
    }

    pub fn n(&self) -> usize {
        self.degree.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.degree[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    /// Number of vertices of degree at most one.
    pub fn leaf_count(&self) -> usize {
        self.leaves
    }

    pub fn internal_count(&self) -> usize {
        self.n() - self.leaves
    }

    pub fn is_internal(&self, v: Vertex) -> bool {
        self.degree[v] >= 2
    }

    /// Vertices of degree at least two, ascending.
    pub fn internal_nodes(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| self.degree[v] >= 2).collect()
    }

    pub fn adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.n()];
        for e in &self.edges {
            adj[e.u()].push(e.v());
            adj[e.v()].push(e.u());
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Vertices on the same side as `side` once `cut` is deleted.
    pub fn side_of(&self, cut: Edge, side: Vertex) -> Vec<bool> {
        let adj = self.adjacency();
        let mut mark = vec![false; self.n()];
        mark[side] = true;
        let mut stack = vec![side];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !mark[y] && Edge::new(x, y) != cut {
                    mark[y] = true;
                    stack.push(y);
                }
            }
        }
        mark
    }

    /// Vertices on the tree path from `a` to `b`, inclusive.
    pub fn path_between(&self, a: Vertex, b: Vertex) -> Vec<Vertex> {
        let adj = self.adjacency();
        let mut parent = vec![usize::MAX; self.n()];
        parent[a] = a;
        let mut stack = vec![a];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    stack.push(y);
                }
            }
        }
        let mut out = vec![b];
        let mut x = b;
        while x != a {
            x = parent[x];
            out.push(x);
        }
        out.reverse();
        out
    }

    /// `(T - removed) + added`, leaving `self` untouched.
    pub fn apply_flip(&self, g: &Graph, flip: EdgeFlip) -> Result<SpanningTree, GraphError> {
        let EdgeFlip { removed, added } = flip;
        if !self.contains(removed) {
            return Err(GraphError::RemovedNotInTree(removed));
        }
        if self.contains(added) {
            return Err(GraphError::AddedAlreadyInTree(added));
        }
        if !g.contains_edge(added) {
            return Err(GraphError::EdgeNotInGraph(added));
        }
        let side = self.side_of(removed, removed.u());
        if side[added.u()] == side[added.v()] {
            return Err(GraphError::ResultDisconnected { removed, added });
        }
        Ok(self.apply_unchecked(flip))
    }

    pub(crate) fn apply_unchecked(&self, flip: EdgeFlip) -> SpanningTree {
        let mut edges = self.edges.clone();
        let at = edges.binary_search(&flip.removed).expect("removed edge in tree");
        edges.remove(at);
        let at = edges.binary_search(&flip.added).unwrap_err();
        edges.insert(at, flip.added);
        let mut degree = self.degree.clone();
        degree[flip.removed.u()] -= 1;
        degree[flip.removed.v()] -= 1;
        degree[flip.added.u()] += 1;
        degree[flip.added.v()] += 1;
        let leaves = degree.iter().filter(|&&d| d < 2).count();
        SpanningTree {
            edges,
            degree,
            leaves,
        }
    }

    /// The flip turning `self` into `other`, if they differ by exactly one.
    pub fn flip_to(&self, other: &SpanningTree) -> Option<EdgeFlip> {
        let gone: Vec<_> = self.edges.iter().filter(|e| !other.contains(**e)).collect();
        let new: Vec<_> = other.edges.iter().filter(|e| !self.contains(**e)).collect();
        match (gone.as_slice(), new.as_slice()) {
            ([r], [a]) => Some(EdgeFlip::new(**r, **a)),
            _ => None,
        }
    }
}

impl fmt::Display for SpanningTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Replace one tree edge by one non-tree edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeFlip {
    #[serde(rename = "remove")]
    pub removed: Edge,
    #[serde(rename = "add")]
    pub added: Edge,
}

impl EdgeFlip {
    pub fn new(removed: impl Into<Edge>, added: impl Into<Edge>) -> Self {
        EdgeFlip {
            removed: removed.into(),
            added: added.into(),
        }
    }

    pub fn inverse(self) -> Self {
        EdgeFlip {
            removed: self.added,
            added: self.removed,
        }
    }
}

impl fmt::Display for EdgeFlip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "-{} +{}", self.removed, self.added)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstraintKind {
    AtLeast,
    AtMost,
}

/// A bound on the number of leaves of every tree along a transformation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawConstraint", into = "RawConstraint")]
pub struct LeafConstraint {
    kind: ConstraintKind,
    bound: usize,
}

#[derive(Serialize, Deserialize)]
struct RawConstraint {
    kind: ConstraintKind,
    leaves: usize,
}

impl TryFrom<RawConstraint> for LeafConstraint {
    type Error = String;

    fn try_from(raw: RawConstraint) -> Result<Self, String> {
        LeafConstraint::new(raw.kind, raw.leaves)
            .ok_or_else(|| format!("leaf bound must be at least 2, got {}", raw.leaves))
    }
}

impl From<LeafConstraint> for RawConstraint {
    fn from(c: LeafConstraint) -> Self {
        RawConstraint {
            kind: c.kind,
            leaves: c.bound,
        }
    }
}

impl LeafConstraint {
    pub fn new(kind: ConstraintKind, bound: usize) -> Option<Self> {
        (bound >= 2).then_some(LeafConstraint { kind, bound })
    }

    pub fn at_least(bound: usize) -> Self {
        Self::new(ConstraintKind::AtLeast, bound).expect("leaf bound below 2")
    }

    pub fn at_most(bound: usize) -> Self {
        Self::new(ConstraintKind::AtMost, bound).expect("leaf bound below 2")
    }

    /// "At most `budget` internal nodes" on an `n`-vertex graph, i.e. at
    /// least `n - budget` leaves. Budgets that leave fewer than two leaves
    /// are clamped to the vacuous bound 2.
    pub fn internal_budget(n: usize, budget: usize) -> Self {
        Self::at_least(n.saturating_sub(budget).max(2))
    }

    pub fn kind(&self) -> ConstraintKind {
        self.kind
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn admits_leaves(&self, leaves: usize) -> bool {
        match self.kind {
            ConstraintKind::AtLeast => leaves >= self.bound,
            ConstraintKind::AtMost => leaves <= self.bound,
        }
    }

    pub fn admits(&self, t: &SpanningTree) -> bool {
        self.admits_leaves(t.leaf_count())
    }
}

impl fmt::Display for LeafConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ConstraintKind::AtLeast => write!(f, "at least {} leaves", self.bound),
            ConstraintKind::AtMost => write!(f, "at most {} leaves", self.bound),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("step {step}: {source}")]
    InvalidFlip { step: usize, source: GraphError },
    #[error("step {step}: tree has {leaves} leaves, violating {constraint}")]
    ConstraintViolated {
        step: usize,
        leaves: usize,
        constraint: LeafConstraint,
    },
    #[error("sequence ends at {reached} instead of the expected target")]
    WrongTarget { reached: String },
}

/// An ordered list of flips; serialized as `{"flips": [...]}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlipSequence {
    pub flips: Vec<EdgeFlip>,
}

impl FlipSequence {
    pub fn new(flips: Vec<EdgeFlip>) -> Self {
        FlipSequence { flips }
    }

    pub fn len(&self) -> usize {
        self.flips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flips.is_empty()
    }

    pub fn push(&mut self, f: EdgeFlip) {
        self.flips.push(f);
    }

    pub fn extend(&mut self, other: FlipSequence) {
        self.flips.extend(other.flips);
    }

    pub fn reversed(&self) -> FlipSequence {
        FlipSequence {
            flips: self.flips.iter().rev().map(|f| f.inverse()).collect(),
        }
    }

    /// Applies every flip in order, checking each intermediate tree (the
    /// start included) against `constraint`. Returns all visited trees.
    pub fn replay(
        &self,
        g: &Graph,
        start: &SpanningTree,
        constraint: Option<&LeafConstraint>,
    ) -> Result<Vec<SpanningTree>, ReplayError> {
        let check = |step: usize, t: &SpanningTree| match constraint {
            Some(c) if !c.admits(t) => Err(ReplayError::ConstraintViolated {
                step,
                leaves: t.leaf_count(),
                constraint: *c,
            }),
            _ => Ok(()),
        };
        check(0, start)?;
        let mut trees = vec![start.clone()];
        for (i, &f) in self.flips.iter().enumerate() {
            let next = trees
                .last()
                .unwrap()
                .apply_flip(g, f)
                .map_err(|source| ReplayError::InvalidFlip { step: i + 1, source })?;
            check(i + 1, &next)?;
            trees.push(next);
        }
        Ok(trees)
    }

    /// Replays and additionally requires the final tree to equal `target`.
    pub fn validate(
        &self,
        g: &Graph,
        start: &SpanningTree,
        target: &SpanningTree,
        constraint: Option<&LeafConstraint>,
    ) -> Result<(), ReplayError> {
        let trees = self.replay(g, start, constraint)?;
        let last = trees.last().unwrap();
        if last != target {
            return Err(ReplayError::WrongTarget {
                reached: last.to_string(),
            });
        }
        Ok(())
    }
}
