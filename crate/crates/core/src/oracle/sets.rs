use std::collections::HashMap;

use crate::graph::{Graph, Vertex};

use super::{check_cap, OracleError, Reachability, ReachabilityResult};

/// Consecutive vertex sets of a token reconfiguration, endpoints included.
pub type SetSequence = Vec<Vec<Vertex>>;

const MAX_MASK_N: usize = 64;

fn mask_of(set: &[Vertex]) -> u64 {
    set.iter().fold(0, |m, &v| m | 1 << v)
}

fn set_of(mask: u64) -> Vec<Vertex> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn edge_masks(g: &Graph) -> Vec<u64> {
    g.edges().iter().map(|e| 1 << e.u() | 1 << e.v()).collect()
}

fn covers(edges: &[u64], mask: u64) -> bool {
    edges.iter().all(|&e| e & mask != 0)
}

fn closed_masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| mask_of(&g.closed_neighborhood(v))).collect()
}

/// True iff every closed neighbourhood in `closed` meets `mask`.
pub fn is_dominating_mask(closed: &[u64], mask: u64) -> bool {
    closed.iter().all(|&c| c & mask != 0)
}

fn check_mask_size(g: &Graph) -> Result<(), OracleError> {
    if g.n() > MAX_MASK_N {
        return Err(OracleError::GraphTooLarge { n: g.n(), cap: MAX_MASK_N });
    }
    Ok(())
}

fn check_set(g: &Graph, set: &[Vertex]) -> Result<(), OracleError> {
    if let Some(&v) = set.iter().find(|&&v| v >= g.n()) {
        return Err(crate::graph::GraphError::VertexOutOfRange { vertex: v, n: g.n() }.into());
    }
    Ok(())
}

/// Breadth-first search over masks; `moves` lists the successors of a mask.
fn bfs<F>(start: u64, goal: u64, mut moves: F) -> ReachabilityResult<SetSequence>
where
    F: FnMut(u64, &mut Vec<u64>),
{
    if start == goal {
        return ReachabilityResult {
            status: Reachability::Yes(vec![set_of(start)]),
            states_explored: 1,
        };
    }
    let mut order = vec![start];
    let mut parent: HashMap<u64, u64> = HashMap::from([(start, start)]);
    let mut buf = Vec::new();
    let mut head = 0;
    while head < order.len() {
        let cur = order[head];
        head += 1;
        buf.clear();
        moves(cur, &mut buf);
        buf.sort_unstable();
        for &next in &buf {
            if parent.contains_key(&next) {
                continue;
            }
            parent.insert(next, cur);
            order.push(next);
            if next == goal {
                let mut seq = vec![set_of(goal)];
                let mut at = goal;
                while at != start {
                    at = parent[&at];
                    seq.push(set_of(at));
                }
                seq.reverse();
                return ReachabilityResult {
                    status: Reachability::Yes(seq),
                    states_explored: order.len(),
                };
            }
        }
    }
    ReachabilityResult {
        status: Reachability::No,
        states_explored: order.len(),
    }
}

fn tar_moves(n: usize, threshold: usize, ok: impl Fn(u64) -> bool) -> impl FnMut(u64, &mut Vec<u64>) {
    move |cur, out| {
        for v in 0..n {
            let next = cur ^ 1 << v;
            if (next.count_ones() as usize) <= threshold && ok(next) {
                out.push(next);
            }
        }
    }
}

/// Token addition/removal between vertex covers of size at most `threshold`.
pub fn vc_tar_reachable(
    g: &Graph,
    x: &[Vertex],
    y: &[Vertex],
    threshold: usize,
) -> Result<ReachabilityResult<SetSequence>, OracleError> {
    check_mask_size(g)?;
    let edges = edge_masks(g);
    let (mx, my) = cover_endpoints(g, &edges, x, y)?;
    for m in [mx, my] {
        let size = m.count_ones() as usize;
        if size > threshold {
            return Err(OracleError::AboveThreshold { size, threshold });
        }
    }
    Ok(bfs(mx, my, tar_moves(g.n(), threshold, |m| covers(&edges, m))))
}

fn cover_endpoints(
    g: &Graph,
    edges: &[u64],
    x: &[Vertex],
    y: &[Vertex],
) -> Result<(u64, u64), OracleError> {
    check_set(g, x)?;
    check_set(g, y)?;
    let (mx, my) = (mask_of(x), mask_of(y));
    for (m, s) in [(mx, x), (my, y)] {
        if !covers(edges, m) {
            return Err(OracleError::NotAVertexCover(s.to_vec()));
        }
    }
    Ok((mx, my))
}

/// Token jumping between vertex covers of equal size.
pub fn vc_tj_reachable(
    g: &Graph,
    x: &[Vertex],
    y: &[Vertex],
) -> Result<ReachabilityResult<SetSequence>, OracleError> {
    check_mask_size(g)?;
    let edges = edge_masks(g);
    let (mx, my) = cover_endpoints(g, &edges, x, y)?;
    if mx.count_ones() != my.count_ones() {
        return Err(OracleError::SizeMismatch(
            mx.count_ones() as usize,
            my.count_ones() as usize,
        ));
    }
    let n = g.n();
    Ok(bfs(mx, my, |cur, out| {
        for a in (0..n).filter(|&a| cur >> a & 1 == 1) {
            for b in (0..n).filter(|&b| cur >> b & 1 == 0) {
                let next = cur ^ 1 << a ^ 1 << b;
                if covers(&edges, next) {
                    out.push(next);
                }
            }
        }
    }))
}

/// Token addition/removal between dominating sets of size at most
/// `threshold`.
pub fn ds_tar_reachable(
    g: &Graph,
    d1: &[Vertex],
    d2: &[Vertex],
    threshold: usize,
) -> Result<ReachabilityResult<SetSequence>, OracleError> {
    check_mask_size(g)?;
    check_set(g, d1)?;
    check_set(g, d2)?;
    let closed = closed_masks(g);
    let (m1, m2) = (mask_of(d1), mask_of(d2));
    for (m, s) in [(m1, d1), (m2, d2)] {
        if !is_dominating_mask(&closed, m) {
            return Err(OracleError::NotADominatingSet(s.to_vec()));
        }
        let size = m.count_ones() as usize;
        if size > threshold {
            return Err(OracleError::AboveThreshold { size, threshold });
        }
    }
    Ok(bfs(m1, m2, tar_moves(g.n(), threshold, |m| is_dominating_mask(&closed, m))))
}

/// Smallest `k` such that some `k`-subset satisfies `ok`.
fn min_subset(n: usize, ok: impl Fn(u64) -> bool) -> usize {
    for k in 0..=n {
        if subsets_of_size(n, k).any(&ok) {
            return k;
        }
    }
    n
}

/// All `k`-subsets of `0..n` as masks, in increasing order.
pub(crate) fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let first: Option<u64> = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::successors(first, move |&m| {
        if m == 0 {
            return None;
        }
        // Gosper's hack
        let c = m & m.wrapping_neg();
        let r = m.checked_add(c)?;
        let next = (((r ^ m) >> 2) / c) | r;
        (next <= limit && next.count_ones() as usize == k).then_some(next)
    })
}

/// Minimum vertex cover size.
pub fn min_cover_size(g: &Graph) -> Result<usize, OracleError> {
    check_cap(g.n())?;
    let edges = edge_masks(g);
    Ok(min_subset(g.n(), |m| covers(&edges, m)))
}

/// Minimum dominating set size.
pub fn min_domset_size(g: &Graph) -> Result<usize, OracleError> {
    check_cap(g.n())?;
    let closed = closed_masks(g);
    Ok(min_subset(g.n(), |m| is_dominating_mask(&closed, m)))
}

/// All vertex covers of size exactly `k`, ascending by mask.
pub fn vertex_covers_of_size(g: &Graph, k: usize) -> Result<Vec<Vec<Vertex>>, OracleError> {
    check_cap(g.n())?;
    let edges = edge_masks(g);
    Ok(subsets_of_size(g.n(), k)
        .filter(|&m| covers(&edges, m))
        .map(set_of)
        .collect())
}
