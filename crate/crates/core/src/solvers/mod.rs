//! Polynomial deciders for special graph classes, with witness extraction.

mod cograph;
pub mod interval;
mod samecomp;
mod two_internal;

pub use cograph::decide_cograph;
pub use samecomp::transform_same_internal;
pub use two_internal::{decide_two_internal, pivot_vertices};

use serde_json::{Map, Value};
use thiserror::Error;

use crate::graph::{ConstraintKind, FlipSequence, Graph, GraphError, LeafConstraint, SpanningTree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph is not a cograph")]
    NotACograph,
    #[error("graph is not connected")]
    DisconnectedGraph,
    #[error("{which} tree has {count} internal nodes, more than two")]
    TooManyInternalNodes { which: &'static str, count: usize },
    #[error("interval representation does not match the graph")]
    NotAnIntervalRep,
    #[error("{which} tree has {leaves} leaves, violating {constraint}")]
    ConstraintViolatedByEndpoint {
        which: &'static str,
        leaves: usize,
        constraint: LeafConstraint,
    },
    #[error("{0} is not supported by this solver")]
    UnsupportedConstraint(LeafConstraint),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A decision, an optional witness, and free-form diagnostics.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub reachable: bool,
    pub witness: Option<FlipSequence>,
    pub diagnostics: Map<String, Value>,
}

impl Outcome {
    pub fn yes(witness: Option<FlipSequence>) -> Self {
        Outcome {
            reachable: true,
            witness,
            diagnostics: Map::new(),
        }
    }

    pub fn no() -> Self {
        Outcome {
            reachable: false,
            witness: None,
            diagnostics: Map::new(),
        }
    }

    pub fn note(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.diagnostics.insert(key.to_string(), value.into());
        self
    }
}

/// Internal-node budget `n - k` for an "at least `k` leaves" constraint,
/// after checking both endpoint trees against it.
pub(crate) fn internal_budget(
    g: &Graph,
    t1: &SpanningTree,
    t2: &SpanningTree,
    c: &LeafConstraint,
) -> Result<usize, SolveError> {
    if c.kind() != ConstraintKind::AtLeast {
        return Err(SolveError::UnsupportedConstraint(*c));
    }
    for (which, t) in [("source", t1), ("target", t2)] {
        if t.n() != g.n() {
            return Err(GraphError::WrongEdgeCount {
                expected: g.n().saturating_sub(1),
                found: t.edges().len(),
            }
            .into());
        }
        if let Some(&e) = t.edges().iter().find(|e| !g.contains_edge(**e)) {
            return Err(GraphError::EdgeNotInGraph(e).into());
        }
        if !c.admits(t) {
            return Err(SolveError::ConstraintViolatedByEndpoint {
                which,
                leaves: t.leaf_count(),
                constraint: *c,
            });
        }
    }
    Ok(g.n().saturating_sub(c.bound()))
}

/// Budgets of at least `n - 2` internal nodes admit every spanning tree, and
/// the flip graph of all spanning trees is connected.
pub(crate) fn unconstrained(g: &Graph, t1: &SpanningTree, t2: &SpanningTree) -> Outcome {
    Outcome::yes(Some(transform_same_internal(g, t1, t2))).note("case", "unconstrained")
}
