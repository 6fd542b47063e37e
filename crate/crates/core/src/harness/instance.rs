//! JSON instance files.
//!
//! ```json
//! {"partition": [1, 1, 1], "forest": [[0, 1]], "name": "triangle"}
//! ```
//!
//! Edges use global vertex indices, part `i` owning the block that starts at
//! the sum of the earlier part sizes. Unknown fields are rejected.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{decompose, validate_forest, ComponentProfile, ModelError, Partition, SpanningForest};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub partition: Vec<usize>,
    #[serde(default)]
    pub forest: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
}

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid {field}: {source}")]
    Invalid {
        field: String,
        #[source]
        source: ModelError,
    },
}

/// A validated partition and forest, plus optional metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub partition: Partition,
    pub forest: SpanningForest,
    pub name: Option<String>,
    pub comment: Option<String>,
}

impl Instance {
    pub fn new(partition: Partition, forest: SpanningForest) -> Self {
        Self {
            partition,
            forest,
            name: None,
            comment: None,
        }
    }

    pub fn from_file(file: InstanceFile) -> Result<Self, InstanceError> {
        let partition = Partition::new(file.partition).map_err(|e| {
            let field = match e {
                ModelError::EmptyPart { index } => format!("partition[{index}]"),
                _ => "partition".to_string(),
            };
            InstanceError::Invalid { field, source: e }
        })?;
        let edges: Vec<(usize, usize)> = file.forest.iter().map(|&[u, v]| (u, v)).collect();
        let forest = validate_forest(&partition, &edges).map_err(|e| InstanceError::Invalid {
            field: offending_edge(&edges, &e),
            source: e,
        })?;
        Ok(Self {
            partition,
            forest,
            name: file.name,
            comment: file.comment,
        })
    }

    /// Canonical file form: edges normalized to `u < v` and sorted.
    pub fn to_file(&self) -> InstanceFile {
        InstanceFile {
            partition: self.partition.parts().to_vec(),
            forest: self.forest.edges().iter().map(|&(u, v)| [u, v]).collect(),
            name: self.name.clone(),
            comment: self.comment.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("instance serializes")
    }

    pub fn profile(&self) -> ComponentProfile {
        decompose(&self.partition, &self.forest)
    }
}

fn offending_edge(edges: &[(usize, usize)], err: &ModelError) -> String {
    let index = match *err {
        ModelError::IntraPartEdge { u, v } | ModelError::CycleDetected { u, v } => {
            edges.iter().position(|&e| e == (u, v))
        }
        ModelError::DuplicateEdge { u, v } => edges.iter().rposition(|&e| e == (u, v)),
        ModelError::VertexOutOfRange { vertex, .. } => edges.iter().position(|&(a, b)| a == vertex || b == vertex),
        _ => None,
    };
    match index {
        Some(i) => format!("forest[{i}] = [{}, {}]", edges[i].0, edges[i].1),
        None => "forest".to_string(),
    }
}

pub fn parse_instance(text: &str) -> Result<Instance, InstanceError> {
    let file: InstanceFile = serde_json::from_str(text).map_err(|e| InstanceError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Instance::from_file(file)
}

pub fn load_instance(path: &Path) -> Result<Instance, InstanceError> {
    let text = fs::read_to_string(path).map_err(|e| InstanceError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_instance(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::instance;
    use proptest::prelude::*;

    #[test]
    fn parses_valid_instance() {
        let inst = parse_instance(r#"{"partition":[1,1,1],"forest":[[0,1]]}"#).unwrap();
        assert_eq!(inst.profile().num_components(), 2);
    }

    #[test]
    fn names_the_offending_edge() {
        let err = parse_instance(r#"{"partition":[2,2],"forest":[[0,2],[0,1]]}"#).unwrap_err();
        match err {
            InstanceError::Invalid { field, source } => {
                assert_eq!(field, "forest[1] = [0, 1]");
                assert_eq!(source, ModelError::IntraPartEdge { u: 0, v: 1 });
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_single_part() {
        let err = parse_instance(r#"{"partition":[3],"forest":[]}"#).unwrap_err();
        assert!(
            matches!(err, InstanceError::Invalid { ref field, source: ModelError::TooFewParts { parts: 1 } } if field == "partition")
        );
        let err = parse_instance(r#"{"partition":[3,0]}"#).unwrap_err();
        assert!(matches!(err, InstanceError::Invalid { ref field, .. } if field == "partition[1]"));
    }

    #[test]
    fn rejects_malformed_json_and_unknown_fields() {
        let err = parse_instance("{\n  \"partition\": [1, 1],\n  \"forest\": [[0, 1]\n}").unwrap_err();
        assert!(matches!(err, InstanceError::Parse { line: 4, .. }), "{err:?}");
        let err = parse_instance(r#"{"partition":[1,1],"forest":[],"weights":[1]}"#).unwrap_err();
        assert!(matches!(err, InstanceError::Parse { .. }));
    }

    #[test]
    fn keeps_metadata() {
        let inst = parse_instance(r#"{"partition":[1,2],"forest":[[2,0]],"name":"p3","comment":"path"}"#).unwrap();
        assert_eq!(inst.name.as_deref(), Some("p3"));
        assert_eq!(
            inst.to_json(),
            r#"{"partition":[1,2],"forest":[[0,2]],"name":"p3","comment":"path"}"#
        );
    }

    proptest! {
        #[test]
        fn serialization_round_trips((p, f) in instance()) {
            let inst = Instance::new(p, f);
            prop_assert_eq!(parse_instance(&inst.to_json()).unwrap(), inst);
        }
    }
}
