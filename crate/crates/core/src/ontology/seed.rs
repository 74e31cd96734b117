//! The bundled AI-EO schema: classes, object properties and annotation
//! properties, with their hierarchy, ranges, equivalences and the
//! disjointness constraints among the central concepts.

use super::{vocab, AnnotationValue, Axiom, EntityKind, Iri, OntologyStore, PrefixMap};

/// Central concepts.
pub const AI_DIMENSION: &str = "AI_Dimension";
pub const FRAMEWORK: &str = "Framework";
pub const FUNDAMENTAL_RIGHT: &str = "FundamentalRight";
pub const PRINCIPLE: &str = "Principle";
pub const REQUIREMENT: &str = "Requirement";

/// Materialisation and association.
pub const APPLICATION: &str = "Application";
pub const EXAMPLE: &str = "Example";
pub const SCENARIO: &str = "Scenario";
pub const USE_CASE: &str = "UseCase";

pub const KEYWORD: &str = "Keyword";

pub const KEYWORD_SUBCLASSES: [&str; 9] = [
    "Characteristic_keyword",
    "Development_keyword",
    "EnvironmentalDimension_keyword",
    "GovernamentalDimension_keyword",
    "IndividualDimension_keyword",
    "OrganizationalDimension_keyword",
    "Risk_keyword",
    "SocialDimension_keyword",
    "SustainableDevelopment_keyword",
];

/// Each central concept with the classes it is declared disjoint with.
/// Principle and Requirement are deliberately absent from each other's row.
pub const DISJOINTNESS_ROWS: [(&str, &[&str]); 5] = [
    (AI_DIMENSION, &[FRAMEWORK, PRINCIPLE, FUNDAMENTAL_RIGHT, REQUIREMENT]),
    (FRAMEWORK, &[PRINCIPLE, AI_DIMENSION, FUNDAMENTAL_RIGHT, REQUIREMENT]),
    (FUNDAMENTAL_RIGHT, &[FRAMEWORK, PRINCIPLE, AI_DIMENSION, REQUIREMENT]),
    (PRINCIPLE, &[FRAMEWORK, FUNDAMENTAL_RIGHT, AI_DIMENSION]),
    (REQUIREMENT, &[FRAMEWORK, FUNDAMENTAL_RIGHT, AI_DIMENSION]),
];

pub const EQUIVALENT_CLASSES: [&str; 3] = [APPLICATION, SCENARIO, USE_CASE];

/// Object property and its range class.
pub const OBJECT_PROPERTIES: [(&str, &str); 10] = [
    ("application", APPLICATION),
    ("dimension", AI_DIMENSION),
    ("example", EXAMPLE),
    ("fundamentalRight", FUNDAMENTAL_RIGHT),
    ("keyword", KEYWORD),
    ("relevantKeyword", KEYWORD),
    ("principle", PRINCIPLE),
    ("requirement", REQUIREMENT),
    ("scenario", SCENARIO),
    ("useCase", USE_CASE),
];

pub const EQUIVALENT_PROPERTIES: [&str; 3] = ["application", "scenario", "useCase"];

pub const METHOD: &str = "method";
pub const REFERENCE: &str = "reference";
pub const SHORT_DESCRIPTION: &str = "shortDescription";

pub fn all_classes() -> Vec<&'static str> {
    let mut classes = vec![
        AI_DIMENSION,
        FRAMEWORK,
        FUNDAMENTAL_RIGHT,
        PRINCIPLE,
        REQUIREMENT,
        APPLICATION,
        EXAMPLE,
        SCENARIO,
        USE_CASE,
        KEYWORD,
    ];
    classes.extend(KEYWORD_SUBCLASSES);
    classes
}

/// The four annotation properties: the three custom ones plus `rdfs:label`.
pub fn annotation_properties() -> [Iri; 4] {
    [
        Iri::aieo(METHOD),
        Iri::aieo(REFERENCE),
        Iri::aieo(SHORT_DESCRIPTION),
        vocab::rdfs_label(),
    ]
}

/// Builds the schema with the standard prefixes and no individuals.
pub fn seed_aieo_schema() -> OntologyStore {
    let mut store = OntologyStore::with_prefixes(PrefixMap::standard());
    build(&mut store).expect("seed schema is well-formed");
    store
}

fn build(store: &mut OntologyStore) -> Result<(), super::OntologyError> {
    for class in all_classes() {
        store.declare(Iri::aieo(class), EntityKind::OwlClass)?;
    }
    for (prop, _) in OBJECT_PROPERTIES {
        store.declare(Iri::aieo(prop), EntityKind::ObjectProperty)?;
    }
    for ann in annotation_properties() {
        store.declare(ann, EntityKind::AnnotationProperty)?;
    }

    for sub in KEYWORD_SUBCLASSES {
        store.add_axiom(Axiom::sub_class_of(Iri::aieo(sub), Iri::aieo(KEYWORD)))?;
    }
    for (class, disjoint_with) in DISJOINTNESS_ROWS {
        for other in disjoint_with {
            store.add_axiom(Axiom::disjoint_classes(Iri::aieo(class), Iri::aieo(other)))?;
        }
    }
    store.add_axiom(Axiom::equivalent_classes(EQUIVALENT_CLASSES.map(Iri::aieo)))?;

    for (prop, range) in OBJECT_PROPERTIES {
        store.add_axiom(Axiom::range(Iri::aieo(prop), Iri::aieo(range)))?;
    }
    store.add_axiom(Axiom::sub_property_of(
        Iri::aieo("relevantKeyword"),
        Iri::aieo("keyword"),
    ))?;
    store.add_axiom(Axiom::equivalent_properties(EQUIVALENT_PROPERTIES.map(Iri::aieo)))?;

    // The class is also known by its plural name.
    store.add_axiom(Axiom::annotation(
        Iri::aieo(REQUIREMENT),
        vocab::rdfs_label(),
        AnnotationValue::plain("Requirements")?,
    ))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ontology::compute_metrics;
    use std::collections::BTreeSet;

    #[test]
    fn seed_counts() {
        let store = seed_aieo_schema();
        let m = compute_metrics(&store);
        assert_eq!(m.class_count, 19);
        assert_eq!(m.object_property_count, 10);
        assert_eq!(m.annotation_property_count, 4);
        assert_eq!(m.data_property_count, 0);
        assert_eq!(m.individual_count, 0);
        assert_eq!(m.declaration_axiom_count, 33);
        // 9 subclass + 9 disjoint + 1 equiv classes + 10 ranges + 1 subproperty + 1 equiv props
        assert_eq!(m.logical_axiom_count, 31);
        assert_eq!(m.annotation_assertion_count, 1);
    }

    #[test]
    fn disjointness_rows_are_symmetric() {
        let pairs: BTreeSet<(&str, &str)> = DISJOINTNESS_ROWS
            .iter()
            .flat_map(|(c, others)| others.iter().map(move |o| (*c, *o)))
            .collect();
        for (a, b) in &pairs {
            assert!(pairs.contains(&(*b, *a)), "{a} / {b} not symmetric");
        }
    }

    #[test]
    fn principle_and_requirement_not_disjoint() {
        let store = seed_aieo_schema();
        assert!(store.contains(&Axiom::disjoint_classes(
            Iri::aieo(FRAMEWORK),
            Iri::aieo(PRINCIPLE)
        )));
        assert!(!store.contains(&Axiom::disjoint_classes(
            Iri::aieo(PRINCIPLE),
            Iri::aieo(REQUIREMENT)
        )));
    }

    #[test]
    fn every_property_has_one_range_and_no_domain() {
        let store = seed_aieo_schema();
        for (prop, range) in OBJECT_PROPERTIES {
            let p = Iri::aieo(prop);
            let ranges: Vec<_> = store
                .by_property(&p)
                .filter(|a| matches!(a, Axiom::ObjectPropertyRange { .. }))
                .collect();
            assert_eq!(ranges, vec![&Axiom::range(p.clone(), Iri::aieo(range))]);
            assert_eq!(
                store
                    .by_property(&p)
                    .filter(|a| matches!(a, Axiom::ObjectPropertyDomain { .. }))
                    .count(),
                0
            );
        }
    }
}
