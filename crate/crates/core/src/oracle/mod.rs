//! Brute-force ground truth: spanning-tree enumeration, constrained flip
//! reachability, component census, and token reconfiguration of vertex
//! covers and dominating sets.

mod enumerate;
mod search;
mod sets;

pub use enumerate::{enumerate_spanning_trees, for_each_spanning_tree, kirchhoff_count};
pub use search::{
    component_census, explore_component, st_reachable, CensusEntry, ComponentWalk, FlipSpace,
};
pub use sets::{
    ds_tar_reachable, is_dominating_mask, min_cover_size, min_domset_size, vc_tar_reachable,
    vc_tj_reachable, vertex_covers_of_size, SetSequence,
};

use std::time::Duration;

use thiserror::Error;

use crate::graph::{GraphError, LeafConstraint};

/// Environment variable overriding [`DEFAULT_MAX_N`].
pub const MAX_N_ENV: &str = "TREEFLIP_MAX_N";
/// Largest graph the exhaustive enumerators accept by default.
pub const DEFAULT_MAX_N: usize = 16;

/// Vertex cap for exhaustive enumeration, read from `TREEFLIP_MAX_N`.
pub fn max_n() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&n| n > 0)
        .unwrap_or(DEFAULT_MAX_N)
}

/// Limits for a single search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_states: usize,
    pub max_time: Duration,
}

impl SearchBudget {
    pub fn new(max_states: usize, max_millis: u64) -> Self {
        assert!(max_states > 0 && max_millis > 0, "budget limits must be positive");
        SearchBudget {
            max_states,
            max_time: Duration::from_millis(max_millis),
        }
    }

    pub fn states(max_states: usize) -> Self {
        SearchBudget::new(max_states, 600_000)
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(2_000_000, 120_000)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reachability<W> {
    Yes(W),
    No,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachabilityResult<W> {
    pub status: Reachability<W>,
    pub states_explored: usize,
}

impl<W> ReachabilityResult<W> {
    pub fn is_yes(&self) -> bool {
        matches!(self.status, Reachability::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self.status, Reachability::No)
    }

    pub fn is_budget_exceeded(&self) -> bool {
        matches!(self.status, Reachability::BudgetExceeded)
    }

    pub fn witness(&self) -> Option<&W> {
        match &self.status {
            Reachability::Yes(w) => Some(w),
            _ => None,
        }
    }

    /// `Some(true)` for Yes, `Some(false)` for No, `None` when undecided.
    pub fn decision(&self) -> Option<bool> {
        match self.status {
            Reachability::Yes(_) => Some(true),
            Reachability::No => Some(false),
            Reachability::BudgetExceeded => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the enumeration cap of {cap}")]
    GraphTooLarge { n: usize, cap: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("{which} tree has {leaves} leaves, violating {constraint}")]
    ConstraintViolatedByEndpoint {
        which: &'static str,
        leaves: usize,
        constraint: LeafConstraint,
    },
    #[error("{0:?} is not a vertex cover")]
    NotAVertexCover(Vec<usize>),
    #[error("{0:?} is not a dominating set")]
    NotADominatingSet(Vec<usize>),
    #[error("sets have sizes {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("set of size {size} exceeds threshold {threshold}")]
    AboveThreshold { size: usize, threshold: usize },
    #[error("state budget exhausted after {0} states")]
    BudgetExceeded(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub(crate) fn check_cap(n: usize) -> Result<(), OracleError> {
    let cap = max_n();
    if n > cap {
        Err(OracleError::GraphTooLarge { n, cap })
    } else {
        Ok(())
    }
}
