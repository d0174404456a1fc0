use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Graph, Vertex};

pub type Rational = Ratio<i64>;

/// Largest accepted absolute value of a numerator or denominator. Keeps
/// midpoint arithmetic well inside `i64`.
pub const MAX_COMPONENT: i64 = 1 << 40;

/// Closed interval `[l, r]` with `l < r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub l: Rational,
    pub r: Rational,
}

impl Interval {
    pub fn new(l: Rational, r: Rational) -> Self {
        Interval { l, r }
    }

    pub fn from_ints(l: i64, r: i64) -> Self {
        Interval::new(Rational::from_integer(l), Rational::from_integer(r))
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.l <= other.r && other.l <= self.r
    }

    /// True iff `other` lies inside `self`.
    pub fn contains(&self, other: &Interval) -> bool {
        self.l <= other.l && other.r <= self.r
    }

    pub fn contains_point(&self, p: Rational) -> bool {
        self.l <= p && p <= self.r
    }
}

/// One interval per vertex, indexed by vertex id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRepresentation {
    intervals: Vec<Interval>,
}

impl IntervalRepresentation {
    pub fn new(intervals: Vec<Interval>) -> Self {
        IntervalRepresentation { intervals }
    }

    pub fn from_ints(pairs: &[(i64, i64)]) -> Self {
        Self::new(pairs.iter().map(|&(l, r)| Interval::from_ints(l, r)).collect())
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn get(&self, v: Vertex) -> Interval {
        self.intervals[v]
    }

    pub fn left(&self, v: Vertex) -> Rational {
        self.intervals[v].l
    }

    pub fn right(&self, v: Vertex) -> Rational {
        self.intervals[v].r
    }

    /// True iff every interval is proper and all `2n` endpoints differ.
    pub fn endpoints_distinct(&self) -> bool {
        if self.intervals.iter().any(|i| i.l >= i.r) {
            return false;
        }
        let mut pts: Vec<Rational> = self.intervals.iter().flat_map(|i| [i.l, i.r]).collect();
        pts.sort_unstable();
        pts.windows(2).all(|w| w[0] != w[1])
    }

    pub fn intersection_graph(&self) -> Graph {
        let n = self.intervals.len();
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.intervals[u].intersects(&self.intervals[v]) {
                    e.push((u, v));
                }
            }
        }
        Graph::from_pairs(n, &e)
    }

    /// Vertices sorted by increasing right endpoint.
    pub fn by_right(&self) -> Vec<Vertex> {
        let mut order: Vec<Vertex> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.right(a).cmp(&self.right(b)).then(a.cmp(&b)));
        order
    }

    /// Sub-representation on `vertices`, relabelled as in [`Graph::induced`].
    pub fn restrict(&self, vertices: &[Vertex]) -> IntervalRepresentation {
        Self::new(vertices.iter().map(|&v| self.intervals[v]).collect())
    }

    pub fn push(&mut self, i: Interval) {
        self.intervals.push(i);
    }
}

/// True iff `rep` has distinct endpoints and its intersection graph is `g`.
pub fn validate_interval(g: &Graph, rep: &IntervalRepresentation) -> bool {
    rep.len() == g.n() && rep.endpoints_distinct() && rep.intersection_graph() == *g
}

fn encode(x: Rational) -> (i64, i64) {
    (*x.numer(), *x.denom())
}

fn decode(num: i64, den: i64) -> Result<Rational, String> {
    if den <= 0 {
        return Err(format!("denominator must be positive, got {den}"));
    }
    if num.abs() > MAX_COMPONENT || den > MAX_COMPONENT {
        return Err(format!("endpoint {num}/{den} exceeds the supported range"));
    }
    Ok(Rational::new(num, den))
}

impl Serialize for IntervalRepresentation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<[i64; 4]> = self
            .intervals
            .iter()
            .map(|i| {
                let (a, b) = encode(i.l);
                let (c, d) = encode(i.r);
                [a, b, c, d]
            })
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntervalRepresentation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<[i64; 4]>::deserialize(d)?;
        let mut out = Vec::with_capacity(rows.len());
        for [a, b, c, e] in rows {
            let l = decode(a, b).map_err(serde::de::Error::custom)?;
            let r = decode(c, e).map_err(serde::de::Error::custom)?;
            out.push(Interval::new(l, r));
        }
        Ok(IntervalRepresentation::new(out))
    }
}
