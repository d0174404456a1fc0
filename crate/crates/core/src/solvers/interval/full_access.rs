use serde::Serialize;

use crate::graph::{IntervalRepresentation, SpanningTree, Vertex};

use super::auxiliary::{auxiliary_members, build_auxiliary};
use super::canonical::greedy_path;

/// Per-vertex summary of a tree's restriction to the auxiliary graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AccessEntry {
    /// The restriction's component holds a tree with fewer internal nodes.
    Good,
    /// Extremal second internal nodes over the restriction's component;
    /// `None` stands for minus and plus infinity respectively.
    Normal {
        ell_prime: Option<Vertex>,
        r_prime: Option<Vertex>,
    },
}

/// Entries indexed by vertex; `None` where the restricted internal set does
/// not span the auxiliary graph, so no restriction exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FullAccessTable {
    pub entries: Vec<Option<AccessEntry>>,
}

impl FullAccessTable {
    pub fn get(&self, v: Vertex) -> Option<AccessEntry> {
        self.entries[v]
    }
}

/// `{v}` plus the members of `internal` that start and end after `v`,
/// ordered by left endpoint.
pub fn restricted_set(rep: &IntervalRepresentation, internal: &[Vertex], v: Vertex) -> Vec<Vertex> {
    let mut s: Vec<Vertex> = internal
        .iter()
        .copied()
        .filter(|&w| w != v && rep.left(w) > rep.left(v) && rep.right(w) > rep.right(v))
        .collect();
    s.push(v);
    s.sort_by_key(|&w| rep.left(w));
    s
}

fn meets(rep: &IntervalRepresentation, a: Vertex, b: Vertex) -> bool {
    rep.get(a).intersects(&rep.get(b))
}

/// True iff `set` induces a connected graph and dominates `universe`.
pub(crate) fn spans(rep: &IntervalRepresentation, set: &[Vertex], universe: &[Vertex]) -> bool {
    let dominated = universe
        .iter()
        .all(|&u| set.iter().any(|&s| s == u || meets(rep, s, u)));
    if !dominated || set.is_empty() {
        return false;
    }
    let mut seen = vec![false; set.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..set.len() {
            if !seen[j] && meets(rep, set[i], set[j]) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

pub(crate) fn is_clique(rep: &IntervalRepresentation, set: &[Vertex]) -> bool {
    let max_l = set.iter().map(|&v| rep.left(v)).max();
    let min_r = set.iter().map(|&v| rep.right(v)).min();
    max_l < min_r
}

/// Canonical set of the auxiliary graph on `v`, artificial vertex dropped.
/// Starts with `v`.
pub(crate) fn auxiliary_canonical(rep: &IntervalRepresentation, v: Vertex) -> Option<Vec<Vertex>> {
    let h = build_auxiliary(rep, v);
    let all: Vec<Vertex> = (0..h.n()).collect();
    let path = greedy_path(&h.rep, &all)?;
    Some(path.into_iter().filter_map(|u| h.original(u)).collect())
}

/// Fills the table by decreasing right endpoint. Each entry concerns the
/// restriction of `t` to the auxiliary graph on that vertex, with budget
/// equal to the size of the restricted internal set.
pub fn compute_full_access(rep: &IntervalRepresentation, t: &SpanningTree) -> FullAccessTable {
    let internal = t.internal_nodes();
    let n = rep.len();
    let mut entries: Vec<Option<AccessEntry>> = vec![None; n];
    let mut order = rep.by_right();
    order.reverse();
    for v in order {
        entries[v] = entry_for(rep, &internal, v, &entries);
    }
    FullAccessTable { entries }
}

/// A vertex starting before `w` and ending after it can replace the last
/// internal node `i'` when it sees everything `v` and `w` miss; `w` is then
/// redundant.
fn container_takes_over(
    rep: &IntervalRepresentation,
    universe: &[Vertex],
    v: Vertex,
    w: Vertex,
    i_prime: Option<Vertex>,
    done: &[Option<AccessEntry>],
) -> bool {
    let Some(i) = i_prime else { return false };
    let last = matches!(
        done[i],
        Some(AccessEntry::Normal {
            ell_prime: None,
            r_prime: None
        })
    );
    if !last {
        return false;
    }
    let missed: Vec<Vertex> = universe
        .iter()
        .copied()
        .filter(|&y| y != i && !meets(rep, y, v) && !meets(rep, y, w))
        .collect();
    universe.iter().any(|&u| {
        u != v
            && u != w
            && rep.left(u) < rep.left(w)
            && rep.right(u) > rep.right(w)
            && missed.iter().all(|&y| meets(rep, u, y))
    })
}

fn entry_for(
    rep: &IntervalRepresentation,
    internal: &[Vertex],
    v: Vertex,
    done: &[Option<AccessEntry>],
) -> Option<AccessEntry> {
    let s = restricted_set(rep, internal, v);
    let mut universe = auxiliary_members(rep, v);
    universe.push(v);
    if !spans(rep, &s, &universe) {
        return None;
    }
    if is_clique(rep, &universe) {
        return Some(if s.len() >= 2 {
            AccessEntry::Good
        } else {
            AccessEntry::Normal {
                ell_prime: None,
                r_prime: None,
            }
        });
    }
    let w = s[1];
    let i_prime = match done[w]? {
        AccessEntry::Good => return Some(AccessEntry::Good),
        AccessEntry::Normal { ell_prime, .. } => ell_prime,
    };
    let in_h = |u: Vertex| universe.contains(&u);
    if i_prime.is_none() {
        // w ends the path: it can trade places with any vertex seeing v and
        // the single vertex only w dominates
        let private: Vec<Vertex> = universe.iter().copied().filter(|&y| !meets(rep, v, y)).collect();
        if private.len() != 1 {
            return Some(AccessEntry::Normal {
                ell_prime: Some(w),
                r_prime: Some(w),
            });
        }
        let swaps: Vec<Vertex> = universe
            .iter()
            .copied()
            .filter(|&y| y != v && meets(rep, y, v) && meets(rep, y, private[0]))
            .collect();
        return Some(AccessEntry::Normal {
            ell_prime: swaps.iter().copied().min_by_key(|&y| rep.left(y)),
            r_prime: swaps.iter().copied().max_by_key(|&y| rep.right(y)),
        });
    }
    // closed neighbourhoods inside the auxiliary graph
    let covered = universe.iter().filter(|&&y| meets(rep, w, y)).all(|&y| {
        meets(rep, v, y) || i_prime.is_some_and(|i| in_h(i) && meets(rep, i, y))
    });
    let linked = i_prime.map_or(true, |i| meets(rep, v, i));
    if covered && linked {
        return Some(AccessEntry::Good);
    }
    if !covered {
        if container_takes_over(rep, &universe, v, w, i_prime, done) {
            return Some(AccessEntry::Good);
        }
        return Some(AccessEntry::Normal {
            ell_prime: Some(w),
            r_prime: Some(w),
        });
    }
    let z = *auxiliary_canonical(rep, v)?.get(1)?;
    if i_prime.is_some_and(|i| rep.right(i) < rep.right(z)) {
        // bringing in z swallows i'
        return Some(AccessEntry::Good);
    }
    match done[z]? {
        AccessEntry::Good => Some(AccessEntry::Good),
        AccessEntry::Normal { .. } => {
            // w swaps with any vertex bridging v and i'
            let i = i_prime.expect("handled above");
            let z_left = universe
                .iter()
                .copied()
                .filter(|&u| u != v && meets(rep, u, v) && meets(rep, u, i))
                .min_by_key(|&u| rep.left(u));
            Some(AccessEntry::Normal {
                ell_prime: z_left,
                r_prime: Some(z),
            })
        }
    }
}
