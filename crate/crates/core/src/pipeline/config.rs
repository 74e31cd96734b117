use std::collections::BTreeMap;

use serde::Serialize;

use super::{ExtractionConfig, ProposalStatus};
use crate::ontology::{seed, Iri, OntologyStore};

pub const DEFAULT_SIMILARITY_THRESHOLD: f64 = 0.5;
pub const DEFAULT_SATURATION_THRESHOLD: f64 = 0.05;

/// Supervised keyword classification: lowercase keyword to one of the
/// Keyword subclasses.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClassificationMap {
    entries: BTreeMap<String, Iri>,
}

impl ClassificationMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Rejects targets that are not declared subclasses of Keyword in the
    /// bundled schema.
    pub fn insert(&mut self, keyword: &str, class: Iri) -> Result<(), String> {
        if !is_keyword_subclass(&class) {
            return Err(format!("{class} is not a subclass of Keyword"));
        }
        self.entries.insert(keyword.to_lowercase(), class);
        Ok(())
    }

    pub fn get(&self, keyword: &str) -> Option<&Iri> {
        self.entries.get(keyword)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Iri)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn is_keyword_subclass(class: &Iri) -> bool {
    thread_local! {
        static SEED: OntologyStore = seed::seed_aieo_schema();
    }
    let keyword = Iri::aieo(seed::KEYWORD);
    SEED.with(|s| {
        s.contains(&crate::ontology::Axiom::sub_class_of(class.clone(), keyword))
    })
}

/// A curator's verdict on a candidate equivalence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Confirmation {
    pub left: Iri,
    pub right: Iri,
    pub status: ProposalStatus,
}

impl Confirmation {
    pub fn matches(&self, a: &Iri, b: &Iri) -> bool {
        (self.left == *a && self.right == *b) || (self.left == *b && self.right == *a)
    }
}

/// Inputs for one ingestion iteration beyond the framework document.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PipelineConfig {
    pub framework: Iri,
    pub title: String,
    pub extraction: ExtractionConfig,
    pub classification: ClassificationMap,
    pub confirmations: Vec<Confirmation>,
    pub similarity_threshold: f64,
    pub saturation_threshold: f64,
}

impl PipelineConfig {
    pub fn new(framework: Iri, title: impl Into<String>) -> Self {
        PipelineConfig {
            framework,
            title: title.into(),
            extraction: ExtractionConfig::default(),
            classification: ClassificationMap::new(),
            confirmations: Vec::new(),
            similarity_threshold: DEFAULT_SIMILARITY_THRESHOLD,
            saturation_threshold: DEFAULT_SATURATION_THRESHOLD,
        }
    }
}
