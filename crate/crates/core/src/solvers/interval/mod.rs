//! Interval-graph decider: canonical dominating path, removal of redundant
//! internal nodes, auxiliary suffix graphs, and the per-vertex access table.

mod auxiliary;
mod canonical;
mod decide;
mod elimination;
mod full_access;

pub use auxiliary::{auxiliary_members, build_auxiliary, AuxiliaryGraph};
pub use canonical::{canonical_set, canonical_tree, CanonicalSet};
pub use decide::{classify, decide_interval, TreeClass};
pub use elimination::eliminate_redundant_internal;
pub use full_access::{compute_full_access, restricted_set, AccessEntry, FullAccessTable};

use crate::graph::{validate_interval, Graph, IntervalRepresentation};

use super::SolveError;

pub(crate) fn check_instance(g: &Graph, rep: &IntervalRepresentation) -> Result<(), SolveError> {
    if validate_interval(g, rep) {
        Ok(())
    } else {
        Err(SolveError::NotAnIntervalRep)
    }
}
