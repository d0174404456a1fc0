//! Spanning-tree reconfiguration under leaf constraints: graph primitives,
//! an exhaustive reachability oracle, polynomial deciders for special graph
//! classes, and hardness-reduction constructions.

pub mod graph;
pub mod oracle;
pub mod crosscheck;
pub mod generate;
pub mod solvers;
pub mod reductions;
pub mod instance;
