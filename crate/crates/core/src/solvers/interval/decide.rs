use crate::graph::{FlipSequence, Graph, IntervalRepresentation, LeafConstraint, SpanningTree, Vertex};
use crate::solvers::{
    decide_cograph, decide_two_internal, internal_budget, transform_same_internal, unconstrained,
    Outcome, SolveError,
};

use super::canonical::{canonical_set, tree_on_path};
use super::elimination::{demote, eliminate_redundant_internal};
use super::full_access::{compute_full_access, is_clique, AccessEntry, FullAccessTable};
use super::check_instance;

/// Where a tree sits in the reconfiguration graph with a given budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeClass {
    /// Its component contains the canonical tree.
    Reducible,
    /// No tree of its component has fewer internal nodes. `signature`
    /// lists the rightmost reachable first internal node, then the
    /// rightmost second internal node of each nested auxiliary graph.
    Minimal { signature: Vec<Vertex> },
}

/// Classifies a tree whose internal nodes induce a path.
pub fn classify(g: &Graph, rep: &IntervalRepresentation, budget: usize, t: &SpanningTree) -> TreeClass {
    let mut internal = t.internal_nodes();
    if internal.len() < budget {
        return TreeClass::Reducible;
    }
    internal.sort_by_key(|&v| rep.left(v));
    let table = compute_full_access(rep, t);
    let first = internal[0];
    let Some(AccessEntry::Normal { ell_prime, .. }) = table.get(first) else {
        return TreeClass::Reducible;
    };
    if second_swaps_to_container(g, rep, &table, first) {
        return TreeClass::Reducible;
    }
    let start = match ell_prime {
        None => first,
        Some(i) => {
            let missed = (0..g.n())
                .filter(|&y| (y == first || g.has_edge(first, y)) && y != i && !g.has_edge(i, y))
                .count();
            match missed {
                0 => return TreeClass::Reducible,
                1 => {
                    let z = canonical_set(g, rep).expect("checked instance").vertices[0];
                    match table.get(z) {
                        Some(AccessEntry::Normal { .. }) => z,
                        _ => return TreeClass::Reducible,
                    }
                }
                _ => first,
            }
        }
    };
    match signature(&table, start) {
        // after a swap to z the chain can be shorter than the tree: the
        // swapped-in vertex made some internal node redundant
        Some(signature) if signature.len() >= internal.len() => TreeClass::Minimal { signature },
        _ => TreeClass::Reducible,
    }
}

/// A vertex containing `first` that can take the place of a reachable
/// second node `j`: it must see the node after `j` and everything only `j`
/// dominated. `first` is then redundant.
fn second_swaps_to_container(g: &Graph, rep: &IntervalRepresentation, table: &FullAccessTable, first: Vertex) -> bool {
    let Some(AccessEntry::Normal { ell_prime, r_prime }) = table.get(first) else {
        return false;
    };
    let sees = |a: Vertex, b: Vertex| a == b || g.has_edge(a, b);
    let mut seconds: Vec<Vertex> = ell_prime.into_iter().chain(r_prime).collect();
    seconds.dedup();
    seconds.into_iter().any(|j| {
        let third = match table.get(j) {
            Some(AccessEntry::Normal { ell_prime, .. }) => ell_prime,
            _ => return false,
        };
        let private: Vec<Vertex> = (0..g.n())
            .filter(|&y| sees(j, y) && !sees(first, y) && third.map_or(true, |i| !sees(i, y)))
            .collect();
        (0..g.n()).any(|u| {
            u != j
                && rep.left(u) < rep.left(first)
                && rep.right(u) > rep.right(first)
                && third.map_or(true, |i| u != i && g.has_edge(u, i))
                && private.iter().all(|&y| sees(u, y))
        })
    })
}

fn signature(table: &FullAccessTable, start: Vertex) -> Option<Vec<Vertex>> {
    let mut out = vec![start];
    let mut v = start;
    loop {
        match table.get(v)? {
            AccessEntry::Good => return None,
            AccessEntry::Normal { r_prime: None, .. } => return Some(out),
            AccessEntry::Normal { r_prime: Some(r), .. } => {
                out.push(r);
                v = r;
            }
        }
    }
}

/// Decides reachability on an interval graph with distinct endpoints under
/// an "at least `k` leaves" constraint.
///
/// Budgets of one or two internal nodes, and cliques, go to the dedicated
/// deciders. Otherwise both trees are cleaned up so their internal nodes
/// form paths, then compared by class. Witnesses are attached when the
/// route is constructive: equal internal sets, or both trees below the
/// budget.
pub fn decide_interval(
    g: &Graph,
    rep: &IntervalRepresentation,
    t1: &SpanningTree,
    t2: &SpanningTree,
    c: &LeafConstraint,
) -> Result<Outcome, SolveError> {
    check_instance(g, rep)?;
    if !g.is_connected() {
        return Err(SolveError::DisconnectedGraph);
    }
    let budget = internal_budget(g, t1, t2, c)?;
    let n = g.n();
    if budget + 2 >= n {
        return Ok(unconstrained(g, t1, t2));
    }
    let all: Vec<Vertex> = (0..n).collect();
    if is_clique(rep, &all) {
        return decide_cograph(g, None, t1, t2, c);
    }
    if budget <= 1 {
        return Ok(if t1 == t2 {
            Outcome::yes(Some(FlipSequence::default()))
        } else {
            Outcome::no()
        }
        .note("case", "stars are frozen"));
    }
    if budget == 2 {
        return decide_two_internal(g, t1, t2);
    }
    let (p1, s1) = eliminate_redundant_internal(g, rep, t1);
    let (p2, s2) = eliminate_redundant_internal(g, rep, t2);
    if p1.internal_nodes() == p2.internal_nodes() {
        let mut seq = s1;
        seq.extend(transform_same_internal(g, &p1, &p2));
        seq.extend(s2.reversed());
        return Ok(Outcome::yes(Some(seq)).note("case", "same internal path"));
    }
    let c1 = classify(g, rep, budget, &p1);
    let c2 = classify(g, rep, budget, &p2);
    let describe = |c: &TreeClass| match c {
        TreeClass::Reducible => serde_json::json!("reducible"),
        TreeClass::Minimal { signature } => serde_json::json!({ "signature": signature }),
    };
    let (d1, d2) = (describe(&c1), describe(&c2));
    let out = match (&c1, &c2) {
        (TreeClass::Reducible, TreeClass::Reducible) => {
            let witness = to_canonical(g, rep, budget, &p1).zip(to_canonical(g, rep, budget, &p2)).map(
                |(a, b)| {
                    let mut seq = s1;
                    seq.extend(a);
                    seq.extend(b.reversed());
                    seq.extend(s2.reversed());
                    seq
                },
            );
            Outcome::yes(witness)
        }
        (TreeClass::Minimal { signature: a }, TreeClass::Minimal { signature: b }) if a == b => {
            Outcome::yes(None)
        }
        _ => Outcome::no(),
    };
    Ok(out.note("source_class", d1).note("target_class", d2))
}

/// Flips a tree with fewer than `budget` internal nodes, whose internal
/// nodes form a path, to the canonical tree. Each round brings in the first
/// canonical vertex it lacks and demotes the internal node it replaces.
/// Returns `None` if a round finds its preconditions unmet.
pub(crate) fn to_canonical(
    g: &Graph,
    rep: &IntervalRepresentation,
    budget: usize,
    t: &SpanningTree,
) -> Option<FlipSequence> {
    let x = canonical_set(g, rep).ok()?.vertices;
    let target = tree_on_path(g, &x);
    let mut cur = t.clone();
    let mut seq = FlipSequence::default();
    for _ in 0..=g.n() * g.n() {
        if cur.internal_count() >= budget {
            return None;
        }
        let Some(pos) = x.iter().position(|&v| !cur.is_internal(v)) else {
            seq.extend(transform_same_internal(g, &cur, &target));
            return Some(seq);
        };
        let xv = x[pos];
        let prev = pos.checked_sub(1).map(|p| x[p]);
        let mut internal = cur.internal_nodes();
        internal.sort_by_key(|&v| rep.right(v));
        let y = match prev {
            Some(z) => *internal.iter().find(|&&v| rep.right(v) > rep.right(z))?,
            None => internal[0],
        };
        let mut helpers = vec![xv];
        helpers.extend(prev);
        let covered = g.neighbors(y).iter().all(|&f| helpers.iter().any(|&h| h == f || g.has_edge(h, f)));
        if y == xv || !covered || !helpers.iter().all(|&h| g.has_edge(h, y)) {
            return None;
        }
        demote(g, &mut cur, &mut seq, y, &helpers);
        let (cleaned, more) = eliminate_redundant_internal(g, rep, &cur);
        cur = cleaned;
        seq.extend(more);
    }
    None
}
