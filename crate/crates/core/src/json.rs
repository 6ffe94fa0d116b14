//! JSON interchange formats: the canonical graph format
//! `{"n": <int>, "edges": [[u, v], ...]}` with `0 <= u < v < n` and a
//! lexicographically sorted, duplicate-free edge list, and the group table
//! format `{"order": g, "table": [[...]], "identity": 0}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::groups::{GroupError, GroupTable};

#[derive(Debug, Error)]
pub enum GraphReadError {
    /// code: malformed-json
    #[error("malformed-json: {0}")]
    Parse(#[from] serde_json::Error),
    /// code: loop-edge
    #[error("loop-edge: edge [{0}, {0}] is a loop")]
    LoopEdge(usize),
    /// code: vertex-out-of-range
    #[error("vertex-out-of-range: vertex {vertex} with n = {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    /// code: unordered-edge
    #[error("unordered-edge: edge [{0}, {1}] must satisfy u < v")]
    UnorderedEdge(usize, usize),
    /// code: unsorted-edge-list
    #[error("unsorted-edge-list: edge [{0}, {1}] out of lexicographic order")]
    UnsortedEdgeList(usize, usize),
    /// code: duplicate-edge
    #[error("duplicate-edge: edge [{0}, {1}] repeated")]
    DuplicateEdge(usize, usize),
}

impl GraphReadError {
    pub fn code(&self) -> &'static str {
        match self {
            GraphReadError::Parse(_) => "malformed-json",
            GraphReadError::LoopEdge(_) => "loop-edge",
            GraphReadError::VertexOutOfRange { .. } => "vertex-out-of-range",
            GraphReadError::UnorderedEdge(..) => "unordered-edge",
            GraphReadError::UnsortedEdgeList(..) => "unsorted-edge-list",
            GraphReadError::DuplicateEdge(..) => "duplicate-edge",
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.order(),
            edges: g.edges().collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphReadError;

    fn try_from(raw: GraphJson) -> Result<Self, Self::Error> {
        for (i, &(u, v)) in raw.edges.iter().enumerate() {
            if u == v {
                return Err(GraphReadError::LoopEdge(u));
            }
            if u > v {
                return Err(GraphReadError::UnorderedEdge(u, v));
            }
            if v >= raw.n {
                return Err(GraphReadError::VertexOutOfRange {
                    vertex: v,
                    order: raw.n,
                });
            }
            if i > 0 {
                match raw.edges[i - 1].cmp(&(u, v)) {
                    std::cmp::Ordering::Less => {}
                    std::cmp::Ordering::Equal => return Err(GraphReadError::DuplicateEdge(u, v)),
                    std::cmp::Ordering::Greater => return Err(GraphReadError::UnsortedEdgeList(u, v)),
                }
            }
        }
        Ok(Graph::from_edges(raw.n, raw.edges).expect("validated edge list"))
    }
}

pub fn read_graph(reader: impl std::io::Read) -> Result<Graph, GraphReadError> {
    let raw: GraphJson = serde_json::from_reader(reader)?;
    Graph::try_from(raw)
}

pub fn graph_from_str(s: &str) -> Result<Graph, GraphReadError> {
    let raw: GraphJson = serde_json::from_str(s)?;
    Graph::try_from(raw)
}

/// Canonical single-line serialization; `graph_from_str` of the output
/// reproduces the graph exactly.
pub fn graph_to_string(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph serialization cannot fail")
}

pub fn write_graph(g: &Graph, mut writer: impl std::io::Write) -> std::io::Result<()> {
    writeln!(writer, "{}", graph_to_string(g))
}

#[derive(Debug, Error)]
pub enum GroupReadError {
    #[error("malformed-json: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid-group: {0}")]
    Invalid(#[from] GroupError),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupTableJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

impl From<&GroupTable> for GroupTableJson {
    fn from(t: &GroupTable) -> Self {
        GroupTableJson {
            order: t.order(),
            table: t.product_table().clone(),
            identity: t.identity(),
        }
    }
}

impl TryFrom<GroupTableJson> for GroupTable {
    type Error = GroupReadError;

    fn try_from(raw: GroupTableJson) -> Result<Self, Self::Error> {
        if raw.table.len() != raw.order {
            return Err(GroupReadError::Invalid(GroupError::MalformedTable));
        }
        Ok(GroupTable::new(raw.table, raw.identity)?)
    }
}

pub fn group_from_str(s: &str) -> Result<GroupTable, GroupReadError> {
    let raw: GroupTableJson = serde_json::from_str(s)?;
    GroupTable::try_from(raw)
}
