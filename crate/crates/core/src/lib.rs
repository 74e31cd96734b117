//! AI-Ethics Ontology toolkit.
//!
//! The [`ontology`] module holds the data model and the bundled schema,
//! [`reasoner`] computes the closure under the ontology's inference rules,
//! [`query`] evaluates basic graph patterns over that closure, [`pipeline`]
//! ingests Trustworthy-AI frameworks one iteration at a time, and
//! [`export`] renders knowledge graphs.

pub mod ontology;
pub mod export;
pub mod pipeline;
pub mod query;
pub mod reasoner;
pub mod serialization;

pub use ontology::{
    compute_metrics, seed_aieo_schema, AnnotationValue, Axiom, EntityKind, Iri, MetricsReport,
    OntologyError, OntologyStore, PrefixMap,
};
