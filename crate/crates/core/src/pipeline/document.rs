use serde::{Deserialize, Serialize};

use crate::ontology::{seed, Iri};

/// One input framework: its sections of running text and the concepts a
/// curator identified in it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct FrameworkDocument {
    /// CURIE or absolute IRI of the framework individual.
    pub id: String,
    pub title: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
    #[serde(default)]
    pub sections: Vec<Section>,
    #[serde(default)]
    pub concept_declarations: Vec<ConceptDeclaration>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Section {
    pub heading: String,
    pub body: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ConceptDeclaration {
    pub name: String,
    /// One of `Principle`, `Requirement`, `FundamentalRight`, `AI_Dimension`.
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub short_description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
}

impl FrameworkDocument {
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// The central concept kinds a framework may declare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConceptKind {
    Principle,
    Requirement,
    FundamentalRight,
    Dimension,
}

impl ConceptKind {
    pub const ALL: [ConceptKind; 4] = [
        ConceptKind::Principle,
        ConceptKind::Requirement,
        ConceptKind::FundamentalRight,
        ConceptKind::Dimension,
    ];

    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "Principle" => Some(ConceptKind::Principle),
            "Requirement" | "Requirements" => Some(ConceptKind::Requirement),
            "FundamentalRight" => Some(ConceptKind::FundamentalRight),
            "AI_Dimension" => Some(ConceptKind::Dimension),
            _ => None,
        }
    }

    pub fn class(self) -> Iri {
        Iri::aieo(match self {
            ConceptKind::Principle => seed::PRINCIPLE,
            ConceptKind::Requirement => seed::REQUIREMENT,
            ConceptKind::FundamentalRight => seed::FUNDAMENTAL_RIGHT,
            ConceptKind::Dimension => seed::AI_DIMENSION,
        })
    }

    /// Object property linking a framework to concepts of this kind.
    pub fn linking_property(self) -> Iri {
        Iri::aieo(match self {
            ConceptKind::Principle => "principle",
            ConceptKind::Requirement => "requirement",
            ConceptKind::FundamentalRight => "fundamentalRight",
            ConceptKind::Dimension => "dimension",
        })
    }
}

/// `"Human-centred values"` → `"Human_centred_values"`.
pub fn slug(name: &str) -> String {
    name.split(|c: char| !c.is_alphanumeric())
        .filter(|w| !w.is_empty())
        .collect::<Vec<_>>()
        .join("_")
}
