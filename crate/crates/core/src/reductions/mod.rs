//! Constructions that embed vertex cover and dominating set reconfiguration
//! into leaf-constrained spanning tree reconfiguration, together with the
//! maps between covers and trees, and two small outerplanar families where
//! maximum-leaf trees cannot be reconfigured.

mod dominating;
mod few_leaves;
mod gadget;
mod obstruction;
mod planar;

pub use dominating::{
    build_ds_to_st_instance, dominating_to_tree, ManyLeavesInstance, ManyLeavesVariant,
};
pub use few_leaves::{
    build_vc_to_st_instance, cover_seq_to_flip_seq, cover_to_ham_path, extract_cover,
    FewLeavesInstance,
};
pub use gadget::{
    certify_gadget, gadget_graph, regular_patterns, GadgetCertificate, GadgetPattern,
    GADGET_EDGES, GADGET_SIZE, R, X_U, X_V, Y_U, Y_V,
};
pub use obstruction::{ladder, outerplanar_obstruction, Obstruction, ObstructionFamily};
pub use planar::{build_vc_to_st_planar, planar_cover_tree, ManyLeavesPlanarInstance};

use thiserror::Error;

use crate::graph::{GraphError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("source graph must be connected")]
    Disconnected,
    #[error("budget k must be at least 1")]
    ZeroBudget,
    #[error("leaf bound must be at least 3, got {0}")]
    LeafBoundTooSmall(usize),
    #[error("{0:?} is not a vertex cover of the source graph")]
    NotACover(Vec<Vertex>),
    #[error("cover has {found} vertices, expected {expected}")]
    WrongCoverSize { expected: usize, found: usize },
    #[error("cover {0:?} is not a minimum vertex cover")]
    NotMinimumCover(Vec<Vertex>),
    #[error("{0:?} is not a dominating set of the source graph")]
    NotADominatingSet(Vec<Vertex>),
    #[error("covers {0:?} and {1:?} differ by more than one token jump")]
    NotTJAdjacent(Vec<Vertex>, Vec<Vertex>),
    #[error("embedding is not valid for the source graph")]
    InvalidEmbedding,
    #[error("tree has {leaves} leaves, above the bound {bound}")]
    TooManyLeaves { leaves: usize, bound: usize },
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
