use num_rational::Ratio;

use crate::graph::{Graph, Interval, IntervalRepresentation, Rational, Vertex};

/// Vertices starting after `v` starts and ending after `v` ends, by id.
pub fn auxiliary_members(rep: &IntervalRepresentation, v: Vertex) -> Vec<Vertex> {
    (0..rep.len())
        .filter(|&w| w != v && rep.left(w) > rep.left(v) && rep.right(w) > rep.right(v))
        .collect()
}

/// The suffix graph anchored at a host vertex, with a pendant artificial
/// vertex that forces the host to be internal.
///
/// Local ids: `0` is the host, `1..` follow `members` in id order, and the
/// artificial vertex comes last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxiliaryGraph {
    pub host: Vertex,
    /// Original ids of the host followed by the members.
    pub vertices: Vec<Vertex>,
    pub graph: Graph,
    pub rep: IntervalRepresentation,
}

impl AuxiliaryGraph {
    pub fn artificial(&self) -> Vertex {
        self.vertices.len()
    }

    pub fn n(&self) -> usize {
        self.vertices.len() + 1
    }

    /// Local id of an original vertex.
    pub fn local(&self, v: Vertex) -> Option<Vertex> {
        self.vertices.iter().position(|&u| u == v)
    }

    /// Original id of a local vertex; `None` for the artificial one.
    pub fn original(&self, local: Vertex) -> Option<Vertex> {
        self.vertices.get(local).copied()
    }
}

pub fn build_auxiliary(rep: &IntervalRepresentation, v: Vertex) -> AuxiliaryGraph {
    let members = auxiliary_members(rep, v);
    let mut vertices = vec![v];
    vertices.extend(&members);
    let mut local = rep.restrict(&vertices);
    let host = rep.get(v);
    // the first endpoint after l(v) among the host and its members
    let next = members
        .iter()
        .map(|&w| rep.left(w))
        .chain(std::iter::once(host.r))
        .min()
        .unwrap();
    match pendant_interval(host.l, next) {
        Some(x) => local.push(x),
        None => {
            local = rank_relabel(&local);
            let l = local.left(0);
            local.push(Interval::new(l - 1, l + 1));
        }
    }
    let graph = local.intersection_graph();
    AuxiliaryGraph {
        host: v,
        vertices,
        graph,
        rep: local,
    }
}

/// `[l - eps/2, l + eps/2]` with `eps = next - l`, when it fits the
/// representation's integer range.
fn pendant_interval(l: Rational, next: Rational) -> Option<Interval> {
    let wide = |x: Rational| Ratio::new(*x.numer() as i128, *x.denom() as i128);
    let (l, next) = (wide(l), wide(next));
    let half = (next - l) / 2;
    let narrow = |x: Ratio<i128>| -> Option<Rational> {
        let (n, d) = (i64::try_from(*x.numer()).ok()?, i64::try_from(*x.denom()).ok()?);
        Some(Rational::new(n, d))
    };
    Some(Interval::new(narrow(l - half)?, narrow(l + half)?))
}

/// Same order type with endpoints `2, 4, 6, ...`, leaving odd values free.
fn rank_relabel(rep: &IntervalRepresentation) -> IntervalRepresentation {
    let mut pts: Vec<Rational> = rep.intervals().iter().flat_map(|i| [i.l, i.r]).collect();
    pts.sort_unstable();
    let rank = |x: Rational| Rational::from_integer(2 * pts.binary_search(&x).unwrap() as i64 + 2);
    IntervalRepresentation::new(
        rep.intervals()
            .iter()
            .map(|i| Interval::new(rank(i.l), rank(i.r)))
            .collect(),
    )
}
