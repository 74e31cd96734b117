use serde::Serialize;

use super::consolidation::owners;
use super::{
    apply_equivalences, attach_keywords, enrich, frameworks, label_similarity,
    propose_equivalences, stages::concept_iri, structure_framework, EquivalenceProposal,
    FrameworkDocument, KeywordExtractor, PipelineConfig, PipelineError, ProposalStatus,
    TermFrequencyExtractor,
};
use crate::ontology::{compute_metrics, seed, AnnotationValue, Iri, MetricsReport, OntologyStore};

/// Outcome of ingesting one framework.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IterationRecord {
    pub iteration_index: usize,
    pub framework: Iri,
    pub before: MetricsReport,
    pub after: MetricsReport,
    pub increment: i64,
    pub saturated: bool,
    pub proposals: Vec<EquivalenceProposal>,
}

fn saturated(increment: i64, before: &MetricsReport, threshold: f64) -> bool {
    increment <= 0 || (increment as f64) / (before.axiom_count.max(1) as f64) < threshold
}

/// Marks each record whose relative increment falls below `threshold`.
pub fn detect_saturation(history: &[IterationRecord], threshold: f64) -> Vec<bool> {
    history.iter().map(|r| saturated(r.increment, &r.before, threshold)).collect()
}

fn annotation(text: &str) -> Result<AnnotationValue, PipelineError> {
    Ok(AnnotationValue::plain(text)?)
}

/// Runs structure, keyword extraction and attachment, enrichment and
/// consolidation for one document. The input store is never modified; on
/// error nothing of the iteration survives.
pub fn run_iteration(
    store: &OntologyStore,
    doc: &FrameworkDocument,
    cfg: &PipelineConfig,
) -> Result<(OntologyStore, IterationRecord), PipelineError> {
    let framework = store.resolve(&doc.id)?;
    if framework != cfg.framework {
        return Err(PipelineError::ConfigMismatch { config: cfg.framework.clone(), document: framework });
    }
    let before = compute_metrics(store);

    let mut s = structure_framework(store, doc)?;

    let extractor = TermFrequencyExtractor::new(cfg.extraction.clone());
    let keywords = extractor.extract(doc);
    s = attach_keywords(&s, &framework, &keywords, &cfg.classification, &cfg.extraction, &extractor.method())?;

    let reference = Iri::aieo(seed::REFERENCE);
    let short = Iri::aieo(seed::SHORT_DESCRIPTION);
    if let Some(r) = &doc.reference {
        s = enrich(&s, &framework, &[(reference.clone(), annotation(r)?)])?;
    }
    for decl in &doc.concept_declarations {
        let mut anns = Vec::new();
        if let Some(d) = &decl.short_description {
            anns.push((short.clone(), annotation(d)?));
        }
        if let Some(r) = &decl.reference {
            anns.push((reference.clone(), annotation(r)?));
        }
        s = enrich(&s, &concept_iri(&framework, &decl.name), &anns)?;
    }

    let mut proposals = if frameworks(&s).len() >= 2 {
        propose_equivalences(&s, &framework, cfg.similarity_threshold)?
    } else {
        Vec::new()
    };
    for p in &mut proposals {
        if let Some(c) = cfg.confirmations.iter().find(|c| c.matches(&p.left, &p.right)) {
            p.status = c.status;
        }
    }
    for c in &cfg.confirmations {
        if proposals.iter().any(|p| c.matches(&p.left, &p.right)) {
            continue;
        }
        validate_confirmation(&s, &c.left, &c.right)?;
        proposals.push(EquivalenceProposal {
            left: c.left.clone(),
            right: c.right.clone(),
            score: label_similarity(&s.label(&c.left), &s.label(&c.right)),
            status: c.status,
        });
    }
    let confirmed: Vec<EquivalenceProposal> = proposals
        .iter()
        .filter(|p| p.status == ProposalStatus::Confirmed)
        .cloned()
        .collect();
    s = apply_equivalences(&s, &confirmed)?;

    let after = compute_metrics(&s);
    let increment = after.axiom_count as i64 - before.axiom_count as i64;
    let record = IterationRecord {
        iteration_index: frameworks(&s).len(),
        framework,
        before,
        after,
        increment,
        saturated: saturated(increment, &before, cfg.saturation_threshold),
        proposals,
    };
    Ok((s, record))
}

fn validate_confirmation(store: &OntologyStore, left: &Iri, right: &Iri) -> Result<(), PipelineError> {
    let invalid = |reason: &str| PipelineError::InvalidConfirmation {
        left: left.clone(),
        right: right.clone(),
        reason: reason.to_string(),
    };
    let (lo, ro) = (owners(store, left), owners(store, right));
    if lo.is_empty() || ro.is_empty() {
        return Err(invalid("both sides must be concepts of an ingested framework"));
    }
    if !lo.iter().any(|a| ro.iter().any(|b| a != b)) {
        return Err(invalid("both sides belong to the same framework"));
    }
    Ok(())
}
