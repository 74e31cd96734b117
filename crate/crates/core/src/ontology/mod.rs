//! Entity/axiom data model, the axiom store, the bundled schema and
//! metrics.

mod axiom;
mod iri;
mod metrics;
pub mod seed;
mod store;

pub use axiom::{is_valid_language_tag, AnnotationValue, Axiom, EntityKind};
pub use iri::{is_valid_local_name, is_valid_prefix_name, vocab, Iri, PrefixMap, AIEO, OWL, RDF, RDFS, XSD};
pub use metrics::{compute_metrics, MetricsReport};
pub use seed::seed_aieo_schema;
pub use store::OntologyStore;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OntologyError {
    #[error("{iri} is already declared as {existing}, cannot redeclare as {requested}")]
    KindConflict {
        iri: Iri,
        existing: EntityKind,
        requested: EntityKind,
    },
    #[error("{iri} is not declared (expected {expected})")]
    UndeclaredEntity { iri: Iri, expected: EntityKind },
    #[error("{iri} is declared as {found} but used where {expected} is required")]
    KindMismatch {
        iri: Iri,
        expected: EntityKind,
        found: EntityKind,
    },
    #[error("invalid axiom: {0}")]
    InvalidAxiom(String),
    #[error("invalid IRI `{value}`: {reason}")]
    InvalidIri { value: String, reason: String },
    #[error("unknown prefix `{0}:`")]
    UnknownPrefix(String),
}
