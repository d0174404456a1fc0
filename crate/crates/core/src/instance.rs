//! JSON instance and witness files.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::graph::{
    validate_embedding, validate_interval, Edge, FlipSequence, Graph, GraphError,
    IntervalRepresentation, LeafConstraint, PlanarEmbedding, SpanningTree,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("interval representation does not match the graph")]
    InvalidInterval,
    #[error("face list is not a valid embedding of the graph")]
    InvalidEmbedding,
    #[error("{which} tree: {source}")]
    Tree { which: &'static str, source: GraphError },
}

/// On-disk layout. Optional parts are omitted when absent.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub n: usize,
    pub edges: Vec<Edge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interval: Option<IntervalRepresentation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faces: Option<PlanarEmbedding>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_tree: Option<Vec<Edge>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_tree: Option<Vec<Edge>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constraint: Option<LeafConstraint>,
    /// Vertex roles written by the reduction constructors.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roles: Option<Value>,
}

/// A loaded instance whose certificates and trees have been checked
/// against the graph.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub graph: Graph,
    pub interval: Option<IntervalRepresentation>,
    pub faces: Option<PlanarEmbedding>,
    pub source_tree: Option<SpanningTree>,
    pub target_tree: Option<SpanningTree>,
    pub constraint: Option<LeafConstraint>,
    pub roles: Option<Value>,
}

impl Instance {
    pub fn new(graph: Graph) -> Self {
        Instance {
            graph,
            interval: None,
            faces: None,
            source_tree: None,
            target_tree: None,
            constraint: None,
            roles: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, InstanceError> {
        let file: InstanceFile =
            serde_json::from_str(text).map_err(|e| InstanceError::Json(e.to_string()))?;
        Self::try_from(file)
    }

    pub fn to_file(&self) -> InstanceFile {
        InstanceFile {
            n: self.graph.n(),
            edges: self.graph.edges().to_vec(),
            interval: self.interval.clone(),
            faces: self.faces.clone(),
            source_tree: self.source_tree.as_ref().map(|t| t.edges().to_vec()),
            target_tree: self.target_tree.as_ref().map(|t| t.edges().to_vec()),
            constraint: self.constraint,
            roles: self.roles.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("instance serializes")
    }
}

impl TryFrom<InstanceFile> for Instance {
    type Error = InstanceError;

    fn try_from(f: InstanceFile) -> Result<Self, InstanceError> {
        let graph = Graph::new(f.n, f.edges)?;
        if let Some(rep) = &f.interval {
            if !validate_interval(&graph, rep) {
                return Err(InstanceError::InvalidInterval);
            }
        }
        if let Some(emb) = &f.faces {
            if !validate_embedding(&graph, emb) {
                return Err(InstanceError::InvalidEmbedding);
            }
        }
        let tree = |which, edges: Option<Vec<Edge>>| -> Result<Option<SpanningTree>, InstanceError> {
            edges
                .map(|e| SpanningTree::new(&graph, e).map_err(|source| InstanceError::Tree { which, source }))
                .transpose()
        };
        let source_tree = tree("source", f.source_tree)?;
        let target_tree = tree("target", f.target_tree)?;
        Ok(Instance {
            interval: f.interval,
            faces: f.faces,
            source_tree,
            target_tree,
            constraint: f.constraint,
            roles: f.roles,
            graph,
        })
    }
}

/// Parses `{"flips": [{"remove": [u, v], "add": [u, v]}, ...]}`.
pub fn parse_witness(text: &str) -> Result<FlipSequence, InstanceError> {
    serde_json::from_str(text).map_err(|e| InstanceError::Json(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const C4: &str = r#"{"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]],
        "source_tree": [[0,1],[1,2],[2,3]], "target_tree": [[1,2],[2,3],[3,0]],
        "constraint": {"kind": "at_least", "leaves": 2}}"#;

    #[test]
    fn round_trip() {
        let inst = Instance::from_json(C4).unwrap();
        assert_eq!(inst.graph.m(), 4);
        let back = Instance::from_json(&inst.to_json()).unwrap();
        assert_eq!(back, inst);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Instance::from_json("{"), Err(InstanceError::Json(_))));
        let bad_tree = r#"{"n": 3, "edges": [[0,1],[1,2]], "source_tree": [[0,1]]}"#;
        assert!(matches!(Instance::from_json(bad_tree), Err(InstanceError::Tree { .. })));
        let bad_rep = r#"{"n": 2, "edges": [[0,1]], "interval": [[0,1,1,1],[2,1,3,1]]}"#;
        assert_eq!(Instance::from_json(bad_rep), Err(InstanceError::InvalidInterval));
        let loop_edge = r#"{"n": 2, "edges": [[1,1]]}"#;
        assert!(matches!(Instance::from_json(loop_edge), Err(InstanceError::Graph(_))));
    }

    #[test]
    fn witness_format() {
        let w = parse_witness(r#"{"flips": [{"remove": [0,1], "add": [3,0]}]}"#).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w.flips[0].added, Edge::new(0, 3));
        assert!(parse_witness(r#"{"flips": [{"remove": [0,1]}]}"#).is_err());
    }
}
