//! Forward-chaining materialization over the ontology's rules and
//! disjointness checking.

mod consistency;
mod engine;
mod equivalence;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

pub use consistency::check_consistency;
pub use engine::{materialize, materialize_with, ReasonerConfig, DEFAULT_FACT_LIMIT};
pub use equivalence::{equivalence_classes, EquivalenceKind};

use crate::ontology::{Axiom, Iri, OntologyError, OntologyStore};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RuleId {
    RangeTyping,
    DomainTyping,
    SubClass,
    ClassEquivalence,
    PropertyEquivalence,
    SubProperty,
    SameIndividual,
    DisjointTyping,
    SameAsDisjoint,
}

impl RuleId {
    pub const ALL: [RuleId; 9] = [
        RuleId::RangeTyping,
        RuleId::DomainTyping,
        RuleId::SubClass,
        RuleId::ClassEquivalence,
        RuleId::PropertyEquivalence,
        RuleId::SubProperty,
        RuleId::SameIndividual,
        RuleId::DisjointTyping,
        RuleId::SameAsDisjoint,
    ];

    pub fn code(self) -> &'static str {
        match self {
            RuleId::RangeTyping => "R1_RangeTyping",
            RuleId::DomainTyping => "R1d_DomainTyping",
            RuleId::SubClass => "R2_SubClass",
            RuleId::ClassEquivalence => "R3_ClassEquiv",
            RuleId::PropertyEquivalence => "R4_PropEquiv",
            RuleId::SubProperty => "R5_SubProp",
            RuleId::SameIndividual => "R6_SameIndividual",
            RuleId::DisjointTyping => "D1_DisjointTyping",
            RuleId::SameAsDisjoint => "D2_SameAsDisjoint",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// One rule application: `premises` together yield `conclusion` under `rule`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InferenceTrace {
    pub conclusion: Axiom,
    pub rule: RuleId,
    pub premises: Vec<Axiom>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyViolation {
    /// Smallest member of the sameAs cluster exhibiting the clash.
    pub individual: Iri,
    /// Other individuals of the cluster, all of which share the clash.
    pub same_as: Vec<Iri>,
    pub class_a: Iri,
    pub class_b: Iri,
    pub rule: RuleId,
    pub traces: Vec<InferenceTrace>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ReasonerError {
    #[error("invalid store: {0}")]
    Validation(#[from] OntologyError),
    #[error("materialization exceeded the limit of {limit} derived facts")]
    IterationLimitExceeded { limit: usize },
    #[error("{0} is neither asserted nor inferred")]
    UnknownFact(String),
}

/// A store closed under the inference rules.
#[derive(Debug, Clone)]
pub struct Materialization {
    pub base: OntologyStore,
    pub inferred: BTreeSet<Axiom>,
    pub traces: BTreeMap<Axiom, Vec<InferenceTrace>>,
    pub consistent: bool,
    pub violations: Vec<ConsistencyViolation>,
}

impl Materialization {
    pub fn contains(&self, ax: &Axiom) -> bool {
        self.base.contains(ax) || self.inferred.contains(ax)
    }

    /// Asserted and inferred axioms.
    pub fn all_axioms(&self) -> impl Iterator<Item = &Axiom> + '_ {
        self.base.axioms().chain(self.inferred.iter())
    }

    /// Classes of `ind`, asserted or inferred.
    pub fn types_of(&self, ind: &Iri) -> BTreeSet<&Iri> {
        self.all_axioms()
            .filter_map(|ax| match ax {
                Axiom::ClassAssertion { cls, ind: i } if i == ind => Some(cls),
                _ => None,
            })
            .collect()
    }

    /// `(class, individual)` memberships, asserted or inferred.
    pub fn class_assertions(&self) -> impl Iterator<Item = (&Iri, &Iri)> + '_ {
        self.all_axioms().filter_map(|ax| match ax {
            Axiom::ClassAssertion { cls, ind } => Some((cls, ind)),
            _ => None,
        })
    }

    pub fn property_assertions(&self) -> impl Iterator<Item = (&Iri, &Iri, &Iri)> + '_ {
        self.all_axioms().filter_map(|ax| match ax {
            Axiom::ObjectPropertyAssertion { subject, prop, object } => Some((subject, prop, object)),
            _ => None,
        })
    }

    pub fn same_individuals(&self) -> impl Iterator<Item = (&Iri, &Iri)> + '_ {
        self.all_axioms().filter_map(|ax| match ax {
            Axiom::SameIndividual(a, b) => Some((a, b)),
            _ => None,
        })
    }

    /// The base store with every inferred axiom added.
    pub fn to_store(&self) -> OntologyStore {
        let mut store = self.base.clone();
        for ax in &self.inferred {
            store
                .add_axiom(ax.clone())
                .expect("inferred axioms only mention declared entities");
        }
        store
    }
}

/// One-step derivations of `fact`; empty when it is asserted.
pub fn explain(mat: &Materialization, fact: &Axiom) -> Result<Vec<InferenceTrace>, ReasonerError> {
    let fact = fact.clone().normalized();
    if mat.base.contains(&fact) {
        return Ok(Vec::new());
    }
    mat.traces
        .get(&fact)
        .cloned()
        .ok_or_else(|| ReasonerError::UnknownFact(fact.display_with(mat.base.prefixes())))
}
