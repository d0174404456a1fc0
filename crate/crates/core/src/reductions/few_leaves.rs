use std::collections::{HashMap, VecDeque};

use crate::graph::{Edge, EdgeFlip, FlipSequence, Graph, LeafConstraint, SpanningTree, Vertex};

use super::gadget::{certify_gadget, regular_patterns, GADGET_EDGES, GADGET_SIZE, X_U, X_V, Y_U, Y_V};
use super::ReductionError;

/// Vertex cover reconfiguration on `source` encoded as spanning tree
/// reconfiguration on `graph` with at most `leaf_bound` leaves.
///
/// Layout: gadget `j` (for source edge `j`) occupies `12j..12j+12` with
/// local ids from the gadget module, then `z_1..z_{k+1}`, then `s_1`, `s_2`
/// and any extra pendants on `s_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FewLeavesInstance {
    pub source: Graph,
    pub k: usize,
    pub leaf_bound: usize,
    pub graph: Graph,
    pub z: Vec<Vertex>,
    /// `s_1`, `s_2`, then `s_3..` hanging from `s_1`.
    pub pendants: Vec<Vertex>,
    /// Incident source edges of each source vertex, by neighbour id.
    pub edge_order: Vec<Vec<usize>>,
    /// `y_u` of each gadget to `x_u` of the next one in `u`'s order.
    pub special_edges: Vec<Edge>,
}

impl FewLeavesInstance {
    pub fn gadget_vertex(&self, edge: usize, local: Vertex) -> Vertex {
        edge * GADGET_SIZE + local
    }

    /// `(edge, local id)` for a gadget vertex.
    pub fn gadget_of(&self, v: Vertex) -> Option<(usize, Vertex)> {
        (v < self.source.m() * GADGET_SIZE).then(|| (v / GADGET_SIZE, v % GADGET_SIZE))
    }

    fn is_u_side(&self, u: Vertex, edge: usize) -> bool {
        let e = self.source.edges()[edge];
        debug_assert!(e.touches(u));
        e.u() == u
    }

    /// Where `u`'s traversal enters the gadget of `edge`.
    pub fn entering(&self, u: Vertex, edge: usize) -> Vertex {
        let local = if self.is_u_side(u, edge) { X_U } else { X_V };
        self.gadget_vertex(edge, local)
    }

    /// Where `u`'s traversal leaves the gadget of `edge`.
    pub fn exit(&self, u: Vertex, edge: usize) -> Vertex {
        let local = if self.is_u_side(u, edge) { Y_U } else { Y_V };
        self.gadget_vertex(edge, local)
    }

    pub fn first_entering(&self, u: Vertex) -> Vertex {
        self.entering(u, self.edge_order[u][0])
    }

    pub fn last_exit(&self, u: Vertex) -> Vertex {
        self.exit(u, *self.edge_order[u].last().unwrap())
    }

    pub fn constraint(&self) -> LeafConstraint {
        LeafConstraint::at_most(self.leaf_bound)
    }

    fn s1(&self) -> Vertex {
        self.pendants[0]
    }

    fn s2(&self) -> Vertex {
        self.pendants[1]
    }
}

pub fn build_vc_to_st_instance(
    source: &Graph,
    k: usize,
    leaf_bound: usize,
) -> Result<FewLeavesInstance, ReductionError> {
    certify_gadget();
    if source.m() == 0 || !source.is_connected() {
        return Err(ReductionError::Disconnected);
    }
    if k == 0 {
        return Err(ReductionError::ZeroBudget);
    }
    if leaf_bound < 3 {
        return Err(ReductionError::LeafBoundTooSmall(leaf_bound));
    }
    let m = source.m();
    let mut edge_order: Vec<Vec<usize>> = vec![Vec::new(); source.n()];
    for (j, e) in source.edges().iter().enumerate() {
        edge_order[e.u()].push(j);
        edge_order[e.v()].push(j);
    }
    for (u, order) in edge_order.iter_mut().enumerate() {
        order.sort_by_key(|&j| source.edges()[j].other(u));
    }
    let z: Vec<Vertex> = (0..=k).map(|i| m * GADGET_SIZE + i).collect();
    let first_pendant = m * GADGET_SIZE + k + 1;
    let pendant_count = if leaf_bound == 3 { 2 } else { leaf_bound };
    let pendants: Vec<Vertex> = (first_pendant..first_pendant + pendant_count).collect();
    let n = first_pendant + pendant_count;

    let mut inst = FewLeavesInstance {
        source: source.clone(),
        k,
        leaf_bound,
        graph: Graph::empty(0),
        z,
        pendants,
        edge_order,
        special_edges: Vec::new(),
    };
    let mut edges: Vec<Edge> = Vec::new();
    for j in 0..m {
        for &(a, b) in &GADGET_EDGES {
            edges.push(Edge::new(inst.gadget_vertex(j, a), inst.gadget_vertex(j, b)));
        }
    }
    for u in 0..source.n() {
        let order = &inst.edge_order[u];
        if order.is_empty() {
            continue;
        }
        for &zi in &inst.z {
            edges.push(Edge::new(zi, inst.first_entering(u)));
            edges.push(Edge::new(zi, inst.last_exit(u)));
        }
        for w in order.windows(2) {
            inst.special_edges.push(Edge::new(inst.exit(u, w[0]), inst.entering(u, w[1])));
        }
    }
    edges.extend(inst.special_edges.iter().copied());
    edges.push(Edge::new(inst.s1(), inst.z[0]));
    edges.push(Edge::new(inst.s2(), inst.z[k]));
    for &s in &inst.pendants[2..] {
        edges.push(Edge::new(s, inst.s1()));
    }
    edges.sort_unstable();
    edges.dedup();
    inst.graph = Graph::new(n, edges)?;
    Ok(inst)
}

/// One position of an associated path: the path runs `s1 z_1 P_{o_1} z_2
/// ... P_{o_k} z_{k+1} s2`, where each `P_o` is traversed forwards (first
/// entering vertex towards `z_i`) or backwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    S1,
    Z(usize),
    Cover(Vertex, bool),
    S2,
}

impl Slot {
    fn same_item(self, other: Slot) -> bool {
        match (self, other) {
            (Slot::Cover(a, _), Slot::Cover(b, _)) => a == b,
            _ => self == other,
        }
    }

    fn toggled(self) -> Slot {
        match self {
            Slot::Cover(x, f) => Slot::Cover(x, !f),
            s => s,
        }
    }
}

impl FewLeavesInstance {
    fn left_end(&self, s: Slot) -> Vertex {
        match s {
            Slot::S1 => self.s1(),
            Slot::S2 => self.s2(),
            Slot::Z(i) => self.z[i],
            Slot::Cover(x, true) => self.first_entering(x),
            Slot::Cover(x, false) => self.last_exit(x),
        }
    }

    fn right_end(&self, s: Slot) -> Vertex {
        match s {
            Slot::Cover(x, f) => self.left_end(Slot::Cover(x, !f)),
            s => self.left_end(s),
        }
    }

    fn sequence(&self, order: &[Vertex]) -> Vec<Slot> {
        let mut seq = vec![Slot::S1, Slot::Z(0)];
        for (i, &x) in order.iter().enumerate() {
            seq.push(Slot::Cover(x, true));
            seq.push(Slot::Z(i + 1));
        }
        seq.push(Slot::S2);
        seq
    }

    /// Gadget patterns for a set of traversing vertices, their special
    /// edges, and the pendant edges.
    fn base_edges(&self, members: &[bool]) -> Result<Vec<Edge>, ReductionError> {
        let (both, one_side) = regular_patterns();
        let mut out = Vec::new();
        for (j, e) in self.source.edges().iter().enumerate() {
            let pattern = match (members[e.u()], members[e.v()]) {
                (true, true) => both,
                (true, false) => &one_side[0],
                (false, true) => &one_side[1],
                (false, false) => {
                    let set: Vec<Vertex> = (0..members.len()).filter(|&v| members[v]).collect();
                    return Err(ReductionError::NotACover(set));
                }
            };
            for pe in &pattern.edges {
                out.push(Edge::new(self.gadget_vertex(j, pe.u()), self.gadget_vertex(j, pe.v())));
            }
        }
        for u in (0..members.len()).filter(|&u| members[u]) {
            for w in self.edge_order[u].windows(2) {
                out.push(Edge::new(self.exit(u, w[0]), self.entering(u, w[1])));
            }
        }
        for &s in &self.pendants[2..] {
            out.push(Edge::new(s, self.s1()));
        }
        Ok(out)
    }

    fn chain_edges(&self, seq: &[Slot]) -> impl Iterator<Item = Edge> + '_ {
        let pairs: Vec<(Slot, Slot)> = seq.windows(2).map(|w| (w[0], w[1])).collect();
        pairs
            .into_iter()
            .map(|(a, b)| Edge::new(self.right_end(a), self.left_end(b)))
    }

    fn members(&self, xs: &[Vertex]) -> Vec<bool> {
        let mut m = vec![false; self.source.n()];
        for &x in xs {
            m[x] = true;
        }
        m
    }

    fn tree_of(&self, seq: &[Slot]) -> Result<SpanningTree, ReductionError> {
        let covers: Vec<Vertex> = seq
            .iter()
            .filter_map(|s| match s {
                Slot::Cover(x, _) => Some(*x),
                _ => None,
            })
            .collect();
        let mut edges = self.base_edges(&self.members(&covers))?;
        edges.extend(self.chain_edges(seq));
        Ok(SpanningTree::new(&self.graph, edges)?)
    }

    /// `w_order` traversed after `a`, with `b` also traversing its gadgets
    /// and hanging from `z_2` by its last exit; its first entering vertex
    /// is a leaf.
    fn half_tree(&self, w_order: &[Vertex], a: Vertex, b: Vertex) -> Result<SpanningTree, ReductionError> {
        let mut order = vec![a];
        order.extend_from_slice(w_order);
        let seq = self.sequence(&order);
        order.push(b);
        let mut edges = self.base_edges(&self.members(&order))?;
        edges.extend(self.chain_edges(&seq));
        edges.push(Edge::new(self.z[1], self.last_exit(b)));
        Ok(SpanningTree::new(&self.graph, edges)?)
    }

    /// Distinct, in range, a cover, and of size `k`.
    fn check_cover(&self, xs: &[Vertex]) -> Result<(), ReductionError> {
        let mut sorted = xs.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != xs.len()
            || xs.iter().any(|&x| x >= self.source.n())
            || !self.source.is_vertex_cover(xs)
        {
            return Err(ReductionError::NotACover(xs.to_vec()));
        }
        if xs.len() != self.k {
            return Err(ReductionError::WrongCoverSize {
                expected: self.k,
                found: xs.len(),
            });
        }
        Ok(())
    }
}

/// The Hamiltonian path (plus pendants when the leaf bound exceeds 3)
/// associated with the cover `x` in the given order.
pub fn cover_to_ham_path(inst: &FewLeavesInstance, x: &[Vertex]) -> Result<SpanningTree, ReductionError> {
    inst.check_cover(x)?;
    inst.tree_of(&inst.sequence(x))
}

/// Source vertices whose special vertex has degree 1 inside some incident
/// gadget. Fails with a contract violation if the result is not a cover
/// or exceeds `k + 1`.
pub fn extract_cover(inst: &FewLeavesInstance, t: &SpanningTree) -> Result<Vec<Vertex>, ReductionError> {
    if t.n() != inst.graph.n() {
        return Err(ReductionError::Graph(crate::graph::GraphError::WrongEdgeCount {
            expected: inst.graph.n() - 1,
            found: t.edges().len(),
        }));
    }
    if t.leaf_count() > inst.leaf_bound {
        return Err(ReductionError::TooManyLeaves {
            leaves: t.leaf_count(),
            bound: inst.leaf_bound,
        });
    }
    let m = inst.source.m();
    let mut inner = vec![[0usize; GADGET_SIZE]; m];
    for e in t.edges() {
        if let (Some((ja, la)), Some((jb, lb))) = (inst.gadget_of(e.u()), inst.gadget_of(e.v())) {
            if ja == jb {
                inner[ja][la] += 1;
                inner[ja][lb] += 1;
            }
        }
    }
    let mut good = vec![false; inst.source.n()];
    for (j, e) in inst.source.edges().iter().enumerate() {
        let d = &inner[j];
        if d[X_U] == 1 || d[Y_U] == 1 {
            good[e.u()] = true;
        }
        if d[X_V] == 1 || d[Y_V] == 1 {
            good[e.v()] = true;
        }
    }
    let s: Vec<Vertex> = (0..inst.source.n()).filter(|&v| good[v]).collect();
    if !inst.source.is_vertex_cover(&s) {
        return Err(ReductionError::ContractViolation(format!(
            "good vertices {s:?} do not cover the source graph"
        )));
    }
    if s.len() > inst.k + 1 {
        return Err(ReductionError::ContractViolation(format!(
            "good vertices {s:?} exceed k + 1 = {}",
            inst.k + 1
        )));
    }
    Ok(s)
}

/// A tree together with the flips that produced it, checked one by one.
struct Walk<'a> {
    inst: &'a FewLeavesInstance,
    tree: SpanningTree,
    flips: FlipSequence,
}

impl<'a> Walk<'a> {
    fn new(inst: &'a FewLeavesInstance, tree: SpanningTree) -> Self {
        Walk {
            inst,
            tree,
            flips: FlipSequence::default(),
        }
    }

    fn flip(&mut self, removed: Edge, added: Edge) -> Result<(), ReductionError> {
        let f = EdgeFlip::new(removed, added);
        let next = self.tree.apply_flip(&self.inst.graph, f).map_err(|e| {
            ReductionError::ContractViolation(format!("compiled flip {f} is invalid: {e}"))
        })?;
        if next.leaf_count() > self.inst.leaf_bound {
            return Err(ReductionError::ContractViolation(format!(
                "compiled flip {f} leaves {} leaves",
                next.leaf_count()
            )));
        }
        self.tree = next;
        self.flips.push(f);
        Ok(())
    }

    /// Reorders and reorients the traversals in `cur` to match `target`,
    /// reversing one segment per mismatch and then fixing orientations.
    fn normalize(&mut self, cur: &mut [Slot], target: &[Slot]) -> Result<(), ReductionError> {
        let inst = self.inst;
        debug_assert_eq!(cur.len(), target.len());
        for p in 1..cur.len() - 1 {
            if cur[p].same_item(target[p]) {
                continue;
            }
            let q = (p + 1..cur.len())
                .find(|&q| cur[q].same_item(target[p]))
                .expect("same items in both sequences");
            let (before, after) = (cur[p - 1], cur[q + 1]);
            self.flip(
                Edge::new(inst.right_end(before), inst.left_end(cur[p])),
                Edge::new(inst.right_end(before), inst.right_end(cur[q])),
            )?;
            self.flip(
                Edge::new(inst.right_end(cur[q]), inst.left_end(after)),
                Edge::new(inst.left_end(cur[p]), inst.left_end(after)),
            )?;
            cur[p..=q].reverse();
            for s in &mut cur[p..=q] {
                *s = s.toggled();
            }
        }
        for p in 1..cur.len() - 1 {
            if cur[p] == target[p] {
                continue;
            }
            let (before, after) = (cur[p - 1], cur[p + 1]);
            let (l, r) = (inst.left_end(cur[p]), inst.right_end(cur[p]));
            self.flip(Edge::new(inst.right_end(before), l), Edge::new(inst.right_end(before), r))?;
            self.flip(Edge::new(r, inst.left_end(after)), Edge::new(l, inst.left_end(after)))?;
            cur[p] = cur[p].toggled();
        }
        debug_assert_eq!(cur, target);
        Ok(())
    }

    /// Breadth-first search over flips touching one gadget until the edges
    /// at that gadget agree with `target`. Everything else stays fixed.
    fn settle_gadget(&mut self, edge: usize, target: &SpanningTree) -> Result<(), ReductionError> {
        const LOCAL_STATES: usize = 200_000;
        let inst = self.inst;
        let in_region = |v: Vertex| inst.gadget_of(v).is_some_and(|(j, _)| j == edge);
        let cand: Vec<Edge> = inst
            .graph
            .edges()
            .iter()
            .copied()
            .filter(|e| in_region(e.u()) || in_region(e.v()))
            .collect();
        assert!(cand.len() <= 128, "gadget region too large for local search");
        let key = |t: &SpanningTree| -> u128 {
            cand.iter()
                .enumerate()
                .filter(|(_, e)| t.contains(**e))
                .fold(0u128, |k, (i, _)| k | 1 << i)
        };
        let goal = key(target);
        let start = key(&self.tree);
        if start == goal {
            return Ok(());
        }
        let mut parent: HashMap<u128, (u128, EdgeFlip)> = HashMap::new();
        let mut queue = VecDeque::from([(start, self.tree.clone())]);
        parent.insert(start, (start, EdgeFlip::new(cand[0], cand[0])));
        let mut found = false;
        'bfs: while let Some((k, t)) = queue.pop_front() {
            for &rem in cand.iter().filter(|e| t.contains(**e)) {
                let side = t.side_of(rem, rem.u());
                for &add in cand.iter().filter(|e| !t.contains(**e)) {
                    if side[add.u()] == side[add.v()] {
                        continue;
                    }
                    let f = EdgeFlip::new(rem, add);
                    let next = t.apply_unchecked(f);
                    if next.leaf_count() > inst.leaf_bound {
                        continue;
                    }
                    let nk = key(&next);
                    if parent.contains_key(&nk) {
                        continue;
                    }
                    parent.insert(nk, (k, f));
                    if nk == goal {
                        found = true;
                        break 'bfs;
                    }
                    if parent.len() > LOCAL_STATES {
                        break 'bfs;
                    }
                    queue.push_back((nk, next));
                }
            }
        }
        if !found {
            return Err(ReductionError::ContractViolation(format!(
                "no local route settles gadget {edge}"
            )));
        }
        let mut path = Vec::new();
        let mut at = goal;
        while at != start {
            let (p, f) = parent[&at];
            path.push(f);
            at = p;
        }
        for f in path.into_iter().rev() {
            self.flip(f.removed, f.added)?;
        }
        Ok(())
    }

    fn append(&mut self, flips: &FlipSequence) -> Result<(), ReductionError> {
        for f in &flips.flips {
            self.flip(f.removed, f.added)?;
        }
        Ok(())
    }
}

fn covers_in(seq: &[Slot]) -> Vec<Vertex> {
    seq.iter()
        .filter_map(|s| match s {
            Slot::Cover(x, _) => Some(*x),
            _ => None,
        })
        .collect()
}

/// Token jump `u -> v` starting from any associated path of the current
/// cover; ends on the associated path of `v` followed by the rest.
fn jump(walk: &mut Walk, cur: &mut Vec<Slot>, u: Vertex, v: Vertex) -> Result<(), ReductionError> {
    let inst = walk.inst;
    let w_order: Vec<Vertex> = covers_in(cur).into_iter().filter(|&x| x != u).collect();
    let with_first = |a: Vertex| {
        let mut o = vec![a];
        o.extend_from_slice(&w_order);
        inst.sequence(&o)
    };
    walk.normalize(cur, &with_first(u))?;

    // from the path of u, let v take over z_1, then settle v's gadgets
    let towards = |walk: &mut Walk, from: Vertex, to: Vertex| -> Result<(), ReductionError> {
        walk.flip(
            Edge::new(inst.z[0], inst.first_entering(from)),
            Edge::new(inst.z[0], inst.first_entering(to)),
        )?;
        let target = inst.half_tree(&w_order, to, from)?;
        for &j in &inst.edge_order[to] {
            walk.settle_gadget(j, &target)?;
        }
        if walk.tree != target {
            return Err(ReductionError::ContractViolation(format!(
                "gadget-local moves did not reach the half path for {from} -> {to}"
            )));
        }
        Ok(())
    };
    towards(walk, u, v)?;
    walk.flip(
        Edge::new(inst.z[0], inst.first_entering(v)),
        Edge::new(inst.z[0], inst.first_entering(u)),
    )?;
    let end = with_first(v);
    let mut back = Walk::new(inst, inst.tree_of(&end)?);
    towards(&mut back, v, u)?;
    // both halves meet at the tree with u on z_1 and v hanging
    if back.tree != walk.tree {
        return Err(ReductionError::ContractViolation(format!(
            "half paths for {u} -> {v} do not meet"
        )));
    }
    walk.append(&back.flips.reversed())?;
    *cur = end;
    Ok(())
}

/// Flip sequence from the path associated with the first cover (in its
/// given order) to the path associated with the last, passing through
/// trees with at most `leaf_bound` leaves. Consecutive covers must be equal
/// as sets or differ by one token jump.
pub fn cover_seq_to_flip_seq(
    inst: &FewLeavesInstance,
    covers: &[Vec<Vertex>],
) -> Result<FlipSequence, ReductionError> {
    let Some(first) = covers.first() else {
        return Ok(FlipSequence::default());
    };
    for c in covers {
        inst.check_cover(c)?;
    }
    let mut cur = inst.sequence(first);
    let mut walk = Walk::new(inst, inst.tree_of(&cur)?);
    for pair in covers.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let gone: Vec<Vertex> = a.iter().copied().filter(|x| !b.contains(x)).collect();
        let new: Vec<Vertex> = b.iter().copied().filter(|x| !a.contains(x)).collect();
        match (gone.as_slice(), new.as_slice()) {
            ([], []) => {}
            ([u], [v]) => jump(&mut walk, &mut cur, *u, *v)?,
            _ => return Err(ReductionError::NotTJAdjacent(a.clone(), b.clone())),
        }
    }
    walk.normalize(&mut cur, &inst.sequence(covers.last().unwrap()))?;
    Ok(walk.flips)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_counts() {
        let g = Graph::path(2);
        let inst = build_vc_to_st_instance(&g, 1, 3).unwrap();
        assert_eq!(inst.graph.n(), 16);
        let t = cover_to_ham_path(&inst, &[0]).unwrap();
        assert_eq!(t.leaf_count(), 2);
        assert_eq!(extract_cover(&inst, &t).unwrap(), vec![0]);
    }

    #[test]
    fn path_three_counts() {
        let inst = build_vc_to_st_instance(&Graph::path(3), 1, 3).unwrap();
        assert_eq!(inst.graph.n(), 28);
        assert_eq!(inst.special_edges.len(), 1);
    }

    #[test]
    fn wider_leaf_bound_adds_pendants() {
        let inst = build_vc_to_st_instance(&Graph::path(2), 1, 5).unwrap();
        assert_eq!(inst.pendants.len(), 5);
        let t = cover_to_ham_path(&inst, &[1]).unwrap();
        assert_eq!(t.leaf_count(), 4);
    }

    #[test]
    fn rejects_bad_covers() {
        let inst = build_vc_to_st_instance(&Graph::cycle(4), 2, 3).unwrap();
        assert!(matches!(cover_to_ham_path(&inst, &[0, 1]), Err(ReductionError::NotACover(_))));
        assert!(matches!(
            cover_to_ham_path(&inst, &[0, 1, 2]),
            Err(ReductionError::WrongCoverSize { .. })
        ));
    }

    #[test]
    fn reordering_one_cover() {
        let inst = build_vc_to_st_instance(&Graph::cycle(4), 2, 3).unwrap();
        let seq = cover_seq_to_flip_seq(&inst, &[vec![0, 2], vec![2, 0]]).unwrap();
        let t1 = cover_to_ham_path(&inst, &[0, 2]).unwrap();
        let t2 = cover_to_ham_path(&inst, &[2, 0]).unwrap();
        seq.validate(&inst.graph, &t1, &t2, Some(&inst.constraint())).unwrap();
        assert!(!seq.is_empty());
    }

    #[test]
    fn one_jump_on_single_edge() {
        let inst = build_vc_to_st_instance(&Graph::path(2), 1, 3).unwrap();
        let seq = cover_seq_to_flip_seq(&inst, &[vec![0], vec![1]]).unwrap();
        let t1 = cover_to_ham_path(&inst, &[0]).unwrap();
        let t2 = cover_to_ham_path(&inst, &[1]).unwrap();
        seq.validate(&inst.graph, &t1, &t2, Some(&inst.constraint())).unwrap();
    }
}
