use std::collections::BTreeSet;

use super::{ClassificationMap, ConceptKind, ExtractionConfig, FrameworkDocument, PipelineError, ScoredKeyword, slug};
use crate::ontology::{
    is_valid_local_name, seed, vocab, AnnotationValue, Axiom, EntityKind, Iri, OntologyStore,
};

/// Annotation properties accepted by [`enrich`].
pub const ENRICHMENT_PROPERTIES: [&str; 3] = [seed::METHOD, seed::REFERENCE, seed::SHORT_DESCRIPTION];

fn is_enrichment_property(p: &Iri) -> bool {
    *p == vocab::rdfs_label() || ENRICHMENT_PROPERTIES.iter().any(|l| *p == Iri::aieo(l))
}

pub fn concept_iri(framework: &Iri, name: &str) -> Iri {
    Iri::aieo(&format!("{}_{}", framework.local_name(), slug(name)))
}

pub fn keyword_iri(keyword: &str) -> Iri {
    Iri::aieo(&format!("kw_{}", slug(keyword)))
}

fn require_schema(store: &OntologyStore) -> Result<(), PipelineError> {
    let classes = [seed::FRAMEWORK, seed::KEYWORD].map(Iri::aieo);
    for c in classes {
        if !store.is_declared(&c, EntityKind::OwlClass) {
            return Err(PipelineError::MissingSchema(c));
        }
    }
    for (p, _) in seed::OBJECT_PROPERTIES {
        let p = Iri::aieo(p);
        if !store.is_declared(&p, EntityKind::ObjectProperty) {
            return Err(PipelineError::MissingSchema(p));
        }
    }
    for p in seed::annotation_properties() {
        if !store.is_declared(&p, EntityKind::AnnotationProperty) {
            return Err(PipelineError::MissingSchema(p));
        }
    }
    Ok(())
}

pub(crate) fn is_framework(store: &OntologyStore, iri: &Iri) -> bool {
    store.contains(&Axiom::class_assertion(Iri::aieo(seed::FRAMEWORK), iri.clone()))
}

fn label(text: &str) -> Result<AnnotationValue, PipelineError> {
    Ok(AnnotationValue::plain(text)?)
}

/// Adds the framework individual, one individual per declared concept,
/// the linking assertions and labels.
pub fn structure_framework(
    store: &OntologyStore,
    doc: &FrameworkDocument,
) -> Result<OntologyStore, PipelineError> {
    require_schema(store)?;
    let framework = store.resolve(&doc.id)?;
    if is_framework(store, &framework) {
        return Err(PipelineError::DuplicateFramework(framework));
    }

    let mut planned = Vec::new();
    let mut seen = BTreeSet::new();
    for decl in &doc.concept_declarations {
        let kind = ConceptKind::parse(&decl.kind).ok_or_else(|| PipelineError::UnknownKind {
            name: decl.name.clone(),
            kind: decl.kind.clone(),
        })?;
        let s = slug(&decl.name);
        if s.is_empty() || !is_valid_local_name(&s) {
            return Err(PipelineError::InvalidName(decl.name.clone()));
        }
        if !seen.insert(s) {
            return Err(PipelineError::DuplicateConcept(decl.name.clone()));
        }
        planned.push((concept_iri(&framework, &decl.name), kind, decl.name.as_str()));
    }

    let mut out = store.clone();
    out.declare(framework.clone(), EntityKind::NamedIndividual)?;
    out.add_axiom(Axiom::class_assertion(Iri::aieo(seed::FRAMEWORK), framework.clone()))?;
    out.add_axiom(Axiom::annotation(framework.clone(), vocab::rdfs_label(), label(&doc.title)?))?;
    for (iri, kind, name) in planned {
        out.declare(iri.clone(), EntityKind::NamedIndividual)?;
        out.add_axiom(Axiom::class_assertion(kind.class(), iri.clone()))?;
        out.add_axiom(Axiom::property_assertion(framework.clone(), kind.linking_property(), iri.clone()))?;
        out.add_axiom(Axiom::annotation(iri, vocab::rdfs_label(), label(name)?))?;
    }
    Ok(out)
}

/// Links extracted keywords to an ingested framework. The first
/// `relevant_top_k` become relevant keywords, and the framework records the
/// extraction method that produced them.
pub fn attach_keywords(
    store: &OntologyStore,
    framework: &Iri,
    extracted: &[ScoredKeyword],
    map: &ClassificationMap,
    cfg: &ExtractionConfig,
    method: &str,
) -> Result<OntologyStore, PipelineError> {
    if !is_framework(store, framework) {
        return Err(PipelineError::UnknownFramework(framework.clone()));
    }
    let mut out = store.clone();
    let keyword_prop = Iri::aieo("keyword");
    let relevant_prop = Iri::aieo("relevantKeyword");
    let mut any_relevant = false;
    for (rank, kw) in extracted.iter().enumerate() {
        let iri = keyword_iri(&kw.keyword);
        if slug(&kw.keyword).is_empty() || !is_valid_local_name(iri.local_name()) {
            return Err(PipelineError::InvalidName(kw.keyword.clone()));
        }
        let class = map.get(&kw.keyword).cloned().unwrap_or_else(|| Iri::aieo(seed::KEYWORD));
        out.declare(iri.clone(), EntityKind::NamedIndividual)?;
        out.add_axiom(Axiom::class_assertion(class, iri.clone()))?;
        out.add_axiom(Axiom::annotation(iri.clone(), vocab::rdfs_label(), label(&kw.keyword)?))?;
        out.add_axiom(Axiom::property_assertion(framework.clone(), keyword_prop.clone(), iri.clone()))?;
        if rank < cfg.relevant_top_k {
            out.add_axiom(Axiom::property_assertion(framework.clone(), relevant_prop.clone(), iri))?;
            any_relevant = true;
        }
    }
    if any_relevant {
        out.add_axiom(Axiom::annotation(framework.clone(), Iri::aieo(seed::METHOD), label(method)?))?;
    }
    Ok(out)
}

/// Adds annotation assertions on a declared subject.
pub fn enrich(
    store: &OntologyStore,
    subject: &Iri,
    annotations: &[(Iri, AnnotationValue)],
) -> Result<OntologyStore, PipelineError> {
    if store.kind_of(subject).is_none() {
        return Err(PipelineError::UnknownSubject(subject.clone()));
    }
    if let Some((p, _)) = annotations.iter().find(|(p, _)| !is_enrichment_property(p)) {
        return Err(PipelineError::UnknownAnnotationProperty(p.clone()));
    }
    let mut out = store.clone();
    for (p, v) in annotations {
        out.add_axiom(Axiom::annotation(subject.clone(), p.clone(), v.clone()))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ontology::{compute_metrics, seed_aieo_schema};
    use crate::pipeline::{extract_keywords, ConceptDeclaration, Section};

    fn decl(name: &str, kind: &str) -> ConceptDeclaration {
        ConceptDeclaration { name: name.into(), kind: kind.into(), short_description: None, reference: None }
    }

    fn doc(id: &str, decls: Vec<ConceptDeclaration>) -> FrameworkDocument {
        FrameworkDocument {
            id: id.into(),
            title: format!("{id} framework"),
            reference: None,
            sections: vec![Section { heading: "s".into(), body: "bias bias fairness risk".into() }],
            concept_declarations: decls,
        }
    }

    #[test]
    fn structure_adds_typed_linked_individuals() {
        let s = structure_framework(&seed_aieo_schema(), &doc("aieo:AU", vec![decl("Fairness", "Principle")])).unwrap();
        let fw = Iri::aieo("AU");
        let c = Iri::aieo("AU_Fairness");
        assert!(s.contains(&Axiom::class_assertion(Iri::aieo("Framework"), fw.clone())));
        assert!(s.contains(&Axiom::class_assertion(Iri::aieo("Principle"), c.clone())));
        assert!(s.contains(&Axiom::property_assertion(fw, Iri::aieo("principle"), c.clone())));
        assert_eq!(s.label(&c), "Fairness");
    }

    #[test]
    fn empty_declarations_add_only_framework() {
        let seed = seed_aieo_schema();
        let s = structure_framework(&seed, &doc("aieo:AU", vec![])).unwrap();
        let before = compute_metrics(&seed);
        let after = compute_metrics(&s);
        assert_eq!(after.individual_count, before.individual_count + 1);
    }

    #[test]
    fn structure_errors() {
        let seed = seed_aieo_schema();
        let s = structure_framework(&seed, &doc("aieo:AU", vec![])).unwrap();
        assert!(matches!(
            structure_framework(&s, &doc("aieo:AU", vec![])),
            Err(PipelineError::DuplicateFramework(_))
        ));
        assert!(matches!(
            structure_framework(&seed, &doc("aieo:AU", vec![decl("X", "Guideline")])),
            Err(PipelineError::UnknownKind { .. })
        ));
        assert!(matches!(
            structure_framework(&seed, &doc("aieo:AU", vec![decl("X", "Principle"), decl("X", "Requirement")])),
            Err(PipelineError::DuplicateConcept(_))
        ));
        assert!(matches!(
            structure_framework(&OntologyStore::new(), &doc("aieo:AU", vec![])),
            Err(PipelineError::MissingSchema(_))
        ));
    }

    #[test]
    fn attach_before_structure_fails() {
        let err = attach_keywords(
            &seed_aieo_schema(),
            &Iri::aieo("AU"),
            &[],
            &ClassificationMap::new(),
            &ExtractionConfig::default(),
            "m",
        )
        .unwrap_err();
        assert!(matches!(err, PipelineError::UnknownFramework(_)));
    }

    #[test]
    fn attach_types_links_and_records_method() {
        let d = doc("aieo:AU", vec![]);
        let s = structure_framework(&seed_aieo_schema(), &d).unwrap();
        let cfg = ExtractionConfig { relevant_top_k: 1, ..ExtractionConfig::default() };
        let kws = extract_keywords(&d, &cfg);
        let mut map = ClassificationMap::new();
        map.insert("bias", Iri::aieo("Risk_keyword")).unwrap();
        let fw = Iri::aieo("AU");
        let s = attach_keywords(&s, &fw, &kws, &map, &cfg, "tf").unwrap();
        let bias = Iri::aieo("kw_bias");
        assert!(s.contains(&Axiom::class_assertion(Iri::aieo("Risk_keyword"), bias.clone())));
        assert!(s.contains(&Axiom::class_assertion(Iri::aieo("Keyword"), Iri::aieo("kw_fairness"))));
        assert!(s.contains(&Axiom::property_assertion(fw.clone(), Iri::aieo("relevantKeyword"), bias.clone())));
        assert!(s.contains(&Axiom::property_assertion(fw.clone(), Iri::aieo("keyword"), bias)));
        assert!(!s.contains(&Axiom::property_assertion(fw.clone(), Iri::aieo("relevantKeyword"), Iri::aieo("kw_fairness"))));
        assert_eq!(s.annotations(&fw, &Iri::aieo("method"))[0].text(), "tf");
    }

    #[test]
    fn no_relevant_keywords_means_no_method() {
        let d = doc("aieo:AU", vec![]);
        let s = structure_framework(&seed_aieo_schema(), &d).unwrap();
        let cfg = ExtractionConfig { relevant_top_k: 0, ..ExtractionConfig::default() };
        let fw = Iri::aieo("AU");
        let s = attach_keywords(&s, &fw, &extract_keywords(&d, &cfg), &ClassificationMap::new(), &cfg, "tf").unwrap();
        assert!(s.property_assertions().all(|(_, p, _)| *p != Iri::aieo("relevantKeyword")));
        assert!(s.annotations(&fw, &Iri::aieo("method")).is_empty());
    }

    #[test]
    fn enrich_counts_as_annotation_only() {
        let s = structure_framework(&seed_aieo_schema(), &doc("aieo:AU", vec![decl("Fairness", "Principle")])).unwrap();
        let c = Iri::aieo("AU_Fairness");
        let before = compute_metrics(&s);
        let e = enrich(&s, &c, &[(Iri::aieo("reference"), AnnotationValue::plain("p. 3").unwrap())]).unwrap();
        let after = compute_metrics(&e);
        assert_eq!(after.axiom_count, before.axiom_count + 1);
        assert_eq!(after.logical_axiom_count, before.logical_axiom_count);
        assert_eq!(enrich(&s, &c, &[]).unwrap(), s);
        assert!(matches!(
            enrich(&s, &c, &[(Iri::aieo("principle"), AnnotationValue::plain("x").unwrap())]),
            Err(PipelineError::UnknownAnnotationProperty(_))
        ));
        assert!(matches!(enrich(&s, &Iri::aieo("nope"), &[]), Err(PipelineError::UnknownSubject(_))));
    }
}
