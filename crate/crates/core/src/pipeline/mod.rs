//! Iterative ingestion of framework documents: structure, keyword
//! extraction, enrichment and consolidation, with per-iteration metrics.

mod config;
mod consolidation;
mod document;
mod extract;
mod iteration;
mod stages;

use serde::{Deserialize, Serialize};

pub use config::{
    ClassificationMap, Confirmation, PipelineConfig, DEFAULT_SATURATION_THRESHOLD,
    DEFAULT_SIMILARITY_THRESHOLD,
};
pub use consolidation::{
    apply_equivalences, framework_concepts, frameworks, label_similarity, normalize_label,
    propose_equivalences, EquivalenceProposal,
};
pub use document::{slug, ConceptDeclaration, ConceptKind, FrameworkDocument, Section};
pub use extract::{
    default_stopwords, extract_keywords, tokenize, ExtractionConfig, KeywordExtractor,
    ScoredKeyword, TermFrequencyExtractor,
};
pub use iteration::{detect_saturation, run_iteration, IterationRecord};
pub use stages::{
    attach_keywords, concept_iri, enrich, keyword_iri, structure_framework, ENRICHMENT_PROPERTIES,
};

use crate::ontology::{Iri, OntologyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProposalStatus {
    Proposed,
    Confirmed,
    Rejected,
}

impl std::fmt::Display for ProposalStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ProposalStatus::Proposed => "proposed",
            ProposalStatus::Confirmed => "confirmed",
            ProposalStatus::Rejected => "rejected",
        })
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PipelineError {
    #[error("framework {0} has already been ingested")]
    DuplicateFramework(Iri),
    #[error("concept `{name}` has unknown kind `{kind}`")]
    UnknownKind { name: String, kind: String },
    #[error("concept `{0}` is declared more than once")]
    DuplicateConcept(String),
    #[error("concept name `{0}` yields no usable identifier")]
    InvalidName(String),
    #[error("framework {0} has not been ingested")]
    UnknownFramework(Iri),
    #[error("{0} is not declared in the store")]
    UnknownSubject(Iri),
    #[error("{0} is not an enrichment annotation property")]
    UnknownAnnotationProperty(Iri),
    #[error("consolidation needs at least two frameworks, found {0}")]
    InsufficientFrameworks(usize),
    #[error("proposal {left} = {right} is {status}, not confirmed")]
    UnconfirmedProposal {
        left: Iri,
        right: Iri,
        status: ProposalStatus,
    },
    #[error("the store does not contain the bundled schema (missing {0})")]
    MissingSchema(Iri),
    #[error("configuration is for {config} but the document is {document}")]
    ConfigMismatch { config: Iri, document: Iri },
    #[error("invalid confirmation {left} = {right}: {reason}")]
    InvalidConfirmation {
        left: Iri,
        right: Iri,
        reason: String,
    },
    #[error(transparent)]
    Ontology(#[from] OntologyError),
}
