//! Knowledge-graph rendering of a materialization at three levels of
//! detail, as DOT or JSON.

mod dot;
mod graph;

use serde::Serialize;

pub use dot::render_dot;
pub use graph::export_graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DetailLevel {
    /// Classes with member counts, subclass and equivalence edges.
    ClassesAndHierarchy = 1,
    /// Adds individuals and their most specific memberships.
    PlusIndividuals = 2,
    /// Adds asserted relationships among individuals.
    PlusInstanceRelationships = 3,
}

impl DetailLevel {
    pub const ALL: [DetailLevel; 3] = [
        DetailLevel::ClassesAndHierarchy,
        DetailLevel::PlusIndividuals,
        DetailLevel::PlusInstanceRelationships,
    ];

    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(DetailLevel::ClassesAndHierarchy),
            2 => Some(DetailLevel::PlusIndividuals),
            3 => Some(DetailLevel::PlusInstanceRelationships),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Class,
    Individual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Subclass,
    Equivalence,
    Membership,
    Assertion,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GraphNode {
    /// Absolute IRI.
    pub id: String,
    pub label: String,
    pub kind: NodeKind,
    /// Individuals in the class, inferred memberships included.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub members: Option<usize>,
    /// Number of annotation assertions on the entity.
    pub annotations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GraphEdge {
    pub from: String,
    pub to: String,
    pub label: String,
    pub kind: EdgeKind,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GraphDoc {
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
}

impl GraphDoc {
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty() && self.edges.is_empty()
    }
}

pub fn render_json(g: &GraphDoc) -> String {
    let mut text = serde_json::to_string_pretty(g).expect("graph serializes");
    text.push('\n');
    text
}
