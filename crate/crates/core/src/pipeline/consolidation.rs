use std::collections::BTreeSet;

use serde::Serialize;

use super::{ConceptKind, PipelineError, ProposalStatus};
use crate::ontology::{seed, Axiom, Iri, OntologyStore};

/// A candidate `SameIndividual` between concepts of two frameworks.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquivalenceProposal {
    pub left: Iri,
    pub right: Iri,
    pub score: f64,
    pub status: ProposalStatus,
}

const CONSOLIDATED_KINDS: [ConceptKind; 3] = [
    ConceptKind::Principle,
    ConceptKind::Requirement,
    ConceptKind::FundamentalRight,
];

/// Individuals asserted as frameworks.
pub fn frameworks(store: &OntologyStore) -> BTreeSet<Iri> {
    let framework = Iri::aieo(seed::FRAMEWORK);
    store
        .class_assertions()
        .filter(|(c, _)| **c == framework)
        .map(|(_, i)| i.clone())
        .collect()
}

/// Concepts a framework links to through any of the given kinds' properties.
fn linked(store: &OntologyStore, framework: &Iri, kinds: &[ConceptKind]) -> BTreeSet<Iri> {
    let props: Vec<Iri> = kinds.iter().map(|k| k.linking_property()).collect();
    store
        .outgoing(framework)
        .filter(|(p, _)| props.contains(p))
        .map(|(_, o)| o.clone())
        .collect()
}

/// Principles, requirements, fundamental rights and dimensions of a framework.
pub fn framework_concepts(store: &OntologyStore, framework: &Iri) -> BTreeSet<Iri> {
    linked(store, framework, &ConceptKind::ALL)
}

/// Case-folded tokens with punctuation treated as whitespace.
pub fn normalize_label(label: &str) -> Vec<String> {
    label
        .to_lowercase()
        .split(|c: char| !c.is_alphanumeric())
        .filter(|t| !t.is_empty())
        .map(str::to_string)
        .collect()
}

/// 1.0 for identical normalized labels, token-set Jaccard otherwise.
pub fn label_similarity(a: &str, b: &str) -> f64 {
    let (ta, tb) = (normalize_label(a), normalize_label(b));
    if ta == tb {
        return if ta.is_empty() { 0.0 } else { 1.0 };
    }
    let sa: BTreeSet<&String> = ta.iter().collect();
    let sb: BTreeSet<&String> = tb.iter().collect();
    let inter = sa.intersection(&sb).count();
    let union = sa.union(&sb).count();
    if union == 0 {
        0.0
    } else {
        inter as f64 / union as f64
    }
}

/// Scores every concept of `new_framework` against the concepts of all
/// other frameworks and keeps pairs at or above `threshold`.
pub fn propose_equivalences(
    store: &OntologyStore,
    new_framework: &Iri,
    threshold: f64,
) -> Result<Vec<EquivalenceProposal>, PipelineError> {
    let all = frameworks(store);
    if all.len() < 2 {
        return Err(PipelineError::InsufficientFrameworks(all.len()));
    }
    if !all.contains(new_framework) {
        return Err(PipelineError::UnknownFramework(new_framework.clone()));
    }
    let own = linked(store, new_framework, &CONSOLIDATED_KINDS);
    let mut out = Vec::new();
    for other in all.iter().filter(|f| *f != new_framework) {
        for peer in linked(store, other, &CONSOLIDATED_KINDS) {
            for concept in &own {
                if *concept == peer
                    || store.contains(&Axiom::same_individual(concept.clone(), peer.clone()))
                {
                    continue;
                }
                let score = label_similarity(&store.label(concept), &store.label(&peer));
                if score >= threshold && score > 0.0 {
                    out.push(EquivalenceProposal {
                        left: concept.clone(),
                        right: peer.clone(),
                        score,
                        status: ProposalStatus::Proposed,
                    });
                }
            }
        }
    }
    out.sort_by(|a, b| (&a.left, &a.right).cmp(&(&b.left, &b.right)));
    out.dedup_by(|a, b| a.left == b.left && a.right == b.right);
    Ok(out)
}

/// Frameworks that link to `concept`.
pub(crate) fn owners(store: &OntologyStore, concept: &Iri) -> BTreeSet<Iri> {
    frameworks(store)
        .into_iter()
        .filter(|f| framework_concepts(store, f).contains(concept))
        .collect()
}

/// Asserts `SameIndividual` for every proposal. All proposals must be
/// confirmed; nothing is applied otherwise.
pub fn apply_equivalences(
    store: &OntologyStore,
    proposals: &[EquivalenceProposal],
) -> Result<OntologyStore, PipelineError> {
    if let Some(p) = proposals.iter().find(|p| p.status != ProposalStatus::Confirmed) {
        return Err(PipelineError::UnconfirmedProposal {
            left: p.left.clone(),
            right: p.right.clone(),
            status: p.status,
        });
    }
    let mut out = store.clone();
    for p in proposals {
        out.add_axiom(Axiom::same_individual(p.left.clone(), p.right.clone()))?;
    }
    Ok(out)
}
