use crate::graph::{Dsu, Edge, Graph, SpanningTree};

use super::{check_cap, OracleError};

/// Every spanning tree of `g` exactly once.
///
/// Branches on edges in sorted order: take the edge when it joins two
/// components of the partial forest, skip it when the unused edges can
/// still connect everything.
pub fn enumerate_spanning_trees(g: &Graph) -> Result<Vec<SpanningTree>, OracleError> {
    let mut out = Vec::new();
    for_each_spanning_tree(g, |t| out.push(t.clone()))?;
    Ok(out)
}

/// Streaming form of [`enumerate_spanning_trees`].
pub fn for_each_spanning_tree<F: FnMut(&SpanningTree)>(
    g: &Graph,
    mut f: F,
) -> Result<(), OracleError> {
    check_cap(g.n())?;
    if !g.is_connected() {
        return Err(OracleError::Disconnected);
    }
    if g.n() <= 1 {
        f(&SpanningTree::from_sorted_unchecked(g.n(), Vec::new()));
        return Ok(());
    }
    let mut state = Enum {
        g,
        comp: (0..g.n()).collect(),
        chosen: Vec::with_capacity(g.n() - 1),
        skipped: vec![false; g.m()],
    };
    state.rec(0, &mut f);
    Ok(())
}

struct Enum<'a> {
    g: &'a Graph,
    // component label of each vertex in the partial forest
    comp: Vec<usize>,
    chosen: Vec<Edge>,
    skipped: Vec<bool>,
}

impl Enum<'_> {
    fn rec<F: FnMut(&SpanningTree)>(&mut self, i: usize, f: &mut F) {
        let n = self.g.n();
        if self.chosen.len() == n - 1 {
            f(&SpanningTree::from_sorted_unchecked(n, self.chosen.clone()));
            return;
        }
        if i == self.g.m() {
            return;
        }
        let e = self.g.edges()[i];
        let (cu, cv) = (self.comp[e.u()], self.comp[e.v()]);
        if cu != cv {
            let saved = self.comp.clone();
            for c in self.comp.iter_mut() {
                if *c == cv {
                    *c = cu;
                }
            }
            self.chosen.push(e);
            self.rec(i + 1, f);
            self.chosen.pop();
            self.comp = saved;
        }
        self.skipped[i] = true;
        if self.still_connects() {
            self.rec(i + 1, f);
        }
        self.skipped[i] = false;
    }

    fn still_connects(&self) -> bool {
        let n = self.g.n();
        let mut dsu = Dsu::new(n);
        let mut parts = n;
        for (j, e) in self.g.edges().iter().enumerate() {
            if !self.skipped[j] && dsu.union(e.u(), e.v()) {
                parts -= 1;
            }
        }
        parts == 1
    }
}

/// Number of spanning trees by the matrix-tree theorem (exact, fraction-free
/// elimination). Intended for small graphs.
pub fn kirchhoff_count(g: &Graph) -> u128 {
    let n = g.n();
    if n <= 1 {
        return 1;
    }
    let k = n - 1;
    let mut a = vec![vec![0i128; k]; k];
    for e in g.edges() {
        let (u, v) = e.endpoints();
        for (x, y) in [(u, v), (v, u)] {
            if x < k {
                a[x][x] += 1;
                if y < k {
                    a[x][y] -= 1;
                }
            }
        }
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for p in 0..k {
        if a[p][p] == 0 {
            match (p + 1..k).find(|&r| a[r][p] != 0) {
                Some(r) => {
                    a.swap(p, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in p + 1..k {
            for j in p + 1..k {
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
            }
        }
        prev = a[p][p];
    }
    (sign * a[k - 1][k - 1]) as u128
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_spanning_trees(&Graph::cycle(3)).unwrap().len(), 3);
        assert_eq!(enumerate_spanning_trees(&Graph::cycle(4)).unwrap().len(), 4);
        assert_eq!(enumerate_spanning_trees(&Graph::complete(4)).unwrap().len(), 16);
        assert_eq!(kirchhoff_count(&Graph::complete(5)), 125);
    }

    #[test]
    fn trees_are_distinct() {
        let g = Graph::complete(5);
        let mut all = enumerate_spanning_trees(&g).unwrap();
        let before = all.len();
        all.sort_by(|a, b| a.edges().cmp(b.edges()));
        all.dedup();
        assert_eq!(all.len(), before);
    }

    #[test]
    fn disconnected_rejected() {
        assert_eq!(
            enumerate_spanning_trees(&Graph::empty(2)),
            Err(OracleError::Disconnected)
        );
    }
}
