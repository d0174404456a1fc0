use std::collections::{HashMap, VecDeque};
use std::time::Instant;

use smallvec::SmallVec;

use crate::graph::{Edge, EdgeFlip, FlipSequence, Graph, LeafConstraint, SpanningTree};

use super::{
    enumerate::for_each_spanning_tree, OracleError, Reachability, ReachabilityResult,
    SearchBudget,
};

type State = SmallVec<[u64; 4]>;

/// The reconfiguration graph of `g` under an optional leaf constraint,
/// with trees stored as bitsets over edge indices.
pub struct FlipSpace<'a> {
    g: &'a Graph,
    constraint: Option<LeafConstraint>,
    words: usize,
}

impl<'a> FlipSpace<'a> {
    pub fn new(g: &'a Graph, constraint: Option<LeafConstraint>) -> Self {
        FlipSpace {
            g,
            constraint,
            words: g.m().div_ceil(64).max(1),
        }
    }

    pub fn admits(&self, t: &SpanningTree) -> bool {
        self.constraint.map_or(true, |c| c.admits(t))
    }

    fn encode(&self, t: &SpanningTree) -> Result<State, OracleError> {
        let mut s: State = SmallVec::from_elem(0, self.words);
        for &e in t.edges() {
            let i = self
                .g
                .edge_index(e)
                .ok_or(crate::graph::GraphError::EdgeNotInGraph(e))?;
            s[i / 64] |= 1 << (i % 64);
        }
        if t.n() != self.g.n() {
            return Err(crate::graph::GraphError::WrongEdgeCount {
                expected: self.g.n().saturating_sub(1),
                found: t.edges().len(),
            }
            .into());
        }
        Ok(s)
    }

    fn decode(&self, s: &State) -> SpanningTree {
        let edges = self.edge_ids(s).map(|i| self.g.edges()[i]).collect();
        SpanningTree::from_sorted_unchecked(self.g.n(), edges)
    }

    fn edge_ids<'s>(&self, s: &'s State) -> impl Iterator<Item = usize> + 's {
        let m = self.g.m();
        s.iter().enumerate().flat_map(move |(w, &bits)| {
            (0..64)
                .filter(move |b| bits >> b & 1 == 1)
                .map(move |b| w * 64 + b)
                .filter(move |&i| i < m)
        })
    }

    /// All constraint-respecting flips out of `s`, sorted by
    /// (removed edge, added edge).
    fn neighbors(&self, s: &State, out: &mut Vec<(EdgeFlip, State)>) {
        out.clear();
        let g = self.g;
        let n = g.n();
        if n < 2 {
            return;
        }
        let mut adj: Vec<SmallVec<[(usize, usize); 6]>> = vec![SmallVec::new(); n];
        let mut deg = vec![0usize; n];
        for i in self.edge_ids(s) {
            let (u, v) = g.edges()[i].endpoints();
            adj[u].push((v, i));
            adj[v].push((u, i));
            deg[u] += 1;
            deg[v] += 1;
        }
        let leaves = deg.iter().filter(|&&d| d < 2).count();
        // root at 0: parent vertex, parent edge index, depth
        let mut parent = vec![(usize::MAX, usize::MAX); n];
        let mut depth = vec![0usize; n];
        let mut order = vec![0usize];
        parent[0] = (0, usize::MAX);
        let mut k = 0;
        while k < order.len() {
            let x = order[k];
            k += 1;
            for &(y, i) in &adj[x] {
                if parent[y].0 == usize::MAX {
                    parent[y] = (x, i);
                    depth[y] = depth[x] + 1;
                    order.push(y);
                }
            }
        }
        let in_tree = |i: usize| s[i / 64] >> (i % 64) & 1 == 1;
        let mut cycle = Vec::new();
        for (j, &f) in g.edges().iter().enumerate() {
            if in_tree(j) {
                continue;
            }
            cycle.clear();
            let (mut a, mut b) = f.endpoints();
            while a != b {
                if depth[a] >= depth[b] {
                    cycle.push(parent[a].1);
                    a = parent[a].0;
                } else {
                    cycle.push(parent[b].1);
                    b = parent[b].0;
                }
            }
            for &i in &cycle {
                let e = g.edges()[i];
                if let Some(c) = self.constraint {
                    let after = leaves_after(&deg, leaves, e, f);
                    if !c.admits_leaves(after) {
                        continue;
                    }
                }
                let mut t = s.clone();
                t[i / 64] ^= 1 << (i % 64);
                t[j / 64] ^= 1 << (j % 64);
                out.push((EdgeFlip::new(e, f), t));
            }
        }
        out.sort_by_key(|(fl, _)| (fl.removed, fl.added));
    }
}

fn leaves_after(deg: &[usize], leaves: usize, removed: Edge, added: Edge) -> usize {
    let mut touched: SmallVec<[(usize, isize); 4]> = SmallVec::new();
    let mut bump = |v: usize, d: isize| match touched.iter_mut().find(|(x, _)| *x == v) {
        Some(entry) => entry.1 += d,
        None => touched.push((v, d)),
    };
    bump(removed.u(), -1);
    bump(removed.v(), -1);
    bump(added.u(), 1);
    bump(added.v(), 1);
    let mut out = leaves as isize;
    for &(v, d) in &touched {
        let before = deg[v] < 2;
        let after = (deg[v] as isize + d) < 2;
        out += after as isize - before as isize;
    }
    out as usize
}

struct Timer {
    start: Instant,
    budget: SearchBudget,
}

impl Timer {
    fn new(budget: SearchBudget) -> Self {
        Timer {
            start: Instant::now(),
            budget,
        }
    }

    fn exhausted(&self, states: usize) -> bool {
        states > self.budget.max_states
            || (states % 1024 == 0 && self.start.elapsed() > self.budget.max_time)
    }
}

fn check_endpoint(
    space: &FlipSpace,
    which: &'static str,
    t: &SpanningTree,
) -> Result<(), OracleError> {
    match space.constraint {
        Some(c) if !c.admits(t) => Err(OracleError::ConstraintViolatedByEndpoint {
            which,
            leaves: t.leaf_count(),
            constraint: c,
        }),
        _ => Ok(()),
    }
}

/// Breadth-first search from `t1` to `t2` through trees satisfying `c`.
/// A Yes answer carries a shortest flip sequence.
pub fn st_reachable(
    g: &Graph,
    t1: &SpanningTree,
    t2: &SpanningTree,
    c: &LeafConstraint,
    budget: SearchBudget,
) -> Result<ReachabilityResult<FlipSequence>, OracleError> {
    let space = FlipSpace::new(g, Some(*c));
    let s1 = space.encode(t1)?;
    let s2 = space.encode(t2)?;
    check_endpoint(&space, "source", t1)?;
    check_endpoint(&space, "target", t2)?;
    if s1 == s2 {
        return Ok(ReachabilityResult {
            status: Reachability::Yes(FlipSequence::default()),
            states_explored: 1,
        });
    }
    let timer = Timer::new(budget);
    let mut states = vec![s1.clone()];
    let mut parent: Vec<(u32, Option<EdgeFlip>)> = vec![(0, None)];
    let mut index: HashMap<State, u32> = HashMap::new();
    index.insert(s1, 0);
    let mut buf = Vec::new();
    let mut head = 0;
    while head < states.len() {
        if timer.exhausted(states.len()) {
            return Ok(ReachabilityResult {
                status: Reachability::BudgetExceeded,
                states_explored: states.len(),
            });
        }
        let cur = states[head].clone();
        space.neighbors(&cur, &mut buf);
        for (flip, next) in buf.drain(..) {
            if index.contains_key(&next) {
                continue;
            }
            let id = states.len() as u32;
            index.insert(next.clone(), id);
            parent.push((head as u32, Some(flip)));
            let found = next == s2;
            states.push(next);
            if found {
                let mut flips = Vec::new();
                let mut at = id as usize;
                while let (p, Some(f)) = parent[at] {
                    flips.push(f);
                    at = p as usize;
                }
                flips.reverse();
                return Ok(ReachabilityResult {
                    status: Reachability::Yes(FlipSequence::new(flips)),
                    states_explored: states.len(),
                });
            }
        }
        head += 1;
    }
    Ok(ReachabilityResult {
        status: Reachability::No,
        states_explored: states.len(),
    })
}

/// Outcome of [`explore_component`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentWalk {
    pub visited: usize,
    /// False when the budget stopped the walk before the component was
    /// exhausted.
    pub complete: bool,
}

/// Breadth-first walk over the flip component of `start`. `visit` sees each
/// tree once, together with the tree it was discovered from.
pub fn explore_component<F>(
    g: &Graph,
    start: &SpanningTree,
    c: Option<&LeafConstraint>,
    budget: SearchBudget,
    mut visit: F,
) -> Result<ComponentWalk, OracleError>
where
    F: FnMut(&SpanningTree, Option<(&SpanningTree, EdgeFlip)>),
{
    let space = FlipSpace::new(g, c.copied());
    let s0 = space.encode(start)?;
    check_endpoint(&space, "start", start)?;
    let timer = Timer::new(budget);
    visit(start, None);
    let mut seen: HashMap<State, ()> = HashMap::new();
    seen.insert(s0.clone(), ());
    let mut queue = VecDeque::from([s0]);
    let mut buf = Vec::new();
    while let Some(cur) = queue.pop_front() {
        let tree = space.decode(&cur);
        space.neighbors(&cur, &mut buf);
        for (flip, next) in buf.drain(..) {
            if seen.contains_key(&next) {
                continue;
            }
            if timer.exhausted(seen.len() + 1) {
                return Ok(ComponentWalk {
                    visited: seen.len(),
                    complete: false,
                });
            }
            visit(&space.decode(&next), Some((&tree, flip)));
            seen.insert(next.clone(), ());
            queue.push_back(next);
        }
    }
    Ok(ComponentWalk {
        visited: seen.len(),
        complete: true,
    })
}

/// One flip component of the constrained reconfiguration graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub size: usize,
    /// First member in enumeration order.
    pub representative: SpanningTree,
    /// Number of distinct internal-node sets among the members.
    pub internal_sets: usize,
    /// True when every member has the representative's internal-node set.
    pub frozen: bool,
}

/// Partitions every tree satisfying `c` into flip components, ordered by
/// representative.
pub fn component_census(
    g: &Graph,
    c: &LeafConstraint,
    budget: SearchBudget,
) -> Result<Vec<CensusEntry>, OracleError> {
    let space = FlipSpace::new(g, Some(*c));
    let timer = Timer::new(budget);
    let mut trees = Vec::new();
    let mut over = false;
    for_each_spanning_tree(g, |t| {
        if !over && c.admits(t) {
            trees.push(t.clone());
            over = timer.exhausted(trees.len());
        }
    })?;
    if over {
        return Err(OracleError::BudgetExceeded(trees.len()));
    }
    let mut index: HashMap<State, usize> = HashMap::new();
    for (i, t) in trees.iter().enumerate() {
        index.insert(space.encode(t)?, i);
    }
    let mut comp = vec![usize::MAX; trees.len()];
    let mut out = Vec::new();
    let mut buf = Vec::new();
    for root in 0..trees.len() {
        if comp[root] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[root] = id;
        let mut members = vec![root];
        let mut k = 0;
        while k < members.len() {
            let cur = space.encode(&trees[members[k]])?;
            k += 1;
            space.neighbors(&cur, &mut buf);
            for (_, next) in buf.drain(..) {
                let j = index[&next];
                if comp[j] == usize::MAX {
                    comp[j] = id;
                    members.push(j);
                }
            }
        }
        let mut sets: Vec<Vec<usize>> = members.iter().map(|&i| trees[i].internal_nodes()).collect();
        sets.sort();
        sets.dedup();
        out.push(CensusEntry {
            size: members.len(),
            representative: trees[root].clone(),
            internal_sets: sets.len(),
            frozen: sets.len() == 1,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn five_cycle_trees_are_adjacent() {
        let c5 = Graph::cycle(5);
        let t1 = SpanningTree::from_pairs(&c5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let t2 = SpanningTree::from_pairs(&c5, &[(0, 1), (1, 2), (3, 4), (4, 0)]).unwrap();
        let r = st_reachable(&c5, &t1, &t2, &LeafConstraint::at_most(2), budget()).unwrap();
        assert_eq!(r.witness().unwrap().len(), 1);
        let census = component_census(&c5, &LeafConstraint::at_most(2), budget()).unwrap();
        assert_eq!(census.len(), 1);
        assert_eq!(census[0].size, 5);
    }

    #[test]
    fn chorded_square_stars_disconnected() {
        let g = Graph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        let sa = SpanningTree::from_pairs(&g, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let sc = SpanningTree::from_pairs(&g, &[(2, 1), (2, 0), (2, 3)]).unwrap();
        let c = LeafConstraint::at_least(3);
        assert!(st_reachable(&g, &sa, &sc, &c, budget()).unwrap().is_no());
        assert!(component_census(&g, &c, budget()).unwrap().len() >= 2);
    }

    #[test]
    fn identical_trees_need_no_flips() {
        let k4 = Graph::complete(4);
        let t = SpanningTree::from_pairs(&k4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = st_reachable(&k4, &t, &t, &LeafConstraint::at_least(2), budget()).unwrap();
        assert_eq!(r.witness(), Some(&FlipSequence::default()));
    }

    #[test]
    fn stars_of_k4_are_isolated() {
        let census = component_census(&Graph::complete(4), &LeafConstraint::at_least(3), budget()).unwrap();
        assert_eq!(census.len(), 4);
        assert!(census.iter().all(|e| e.size == 1 && e.frozen));
    }

    #[test]
    fn endpoint_violation_reported() {
        let k4 = Graph::complete(4);
        let path = SpanningTree::from_pairs(&k4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let err = st_reachable(&k4, &path, &path, &LeafConstraint::at_least(3), budget()).unwrap_err();
        assert!(matches!(err, OracleError::ConstraintViolatedByEndpoint { which: "source", .. }));
    }

    #[test]
    fn tiny_budget_is_reported() {
        let k5 = Graph::complete(5);
        let t1 = SpanningTree::from_pairs(&k5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let t2 = SpanningTree::from_pairs(&k5, &[(0, 4), (4, 2), (2, 1), (1, 3)]).unwrap();
        let r = st_reachable(&k5, &t1, &t2, &LeafConstraint::at_least(2), SearchBudget::states(3)).unwrap();
        assert!(r.is_budget_exceeded());
    }
}
