//! JSON interchange: `{"prefixes": {...}, "axioms": [{"kind": ..., ...}]}`,
//! one object per axiom variant. IRIs are written compacted where a prefix
//! applies and accepted either compacted, bracketed or absolute.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{ParseDiagnostic, ParseError, Pos};
use crate::ontology::{AnnotationValue, Axiom, EntityKind, Iri, OntologyStore, PrefixMap};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    #[serde(default)]
    prefixes: BTreeMap<String, String>,
    #[serde(default)]
    axioms: Vec<Record>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
enum Record {
    Declaration {
        iri: String,
        #[serde(rename = "entityKind")]
        entity_kind: EntityKind,
    },
    SubClassOf { sub: String, sup: String },
    EquivalentClasses { classes: Vec<String> },
    DisjointClasses { classes: [String; 2] },
    SubObjectPropertyOf { sub: String, sup: String },
    EquivalentObjectProperties { properties: Vec<String> },
    ObjectPropertyRange { prop: String, cls: String },
    ObjectPropertyDomain { prop: String, cls: String },
    ClassAssertion { cls: String, ind: String },
    ObjectPropertyAssertion { subject: String, prop: String, object: String },
    SameIndividual { individuals: [String; 2] },
    AnnotationAssertion {
        subject: String,
        #[serde(rename = "annProp")]
        ann_prop: String,
        value: AnnotationValue,
    },
}

fn to_record(ax: &Axiom, prefixes: &PrefixMap) -> Record {
    let d = |i: &Iri| prefixes.display(i);
    match ax {
        Axiom::Declaration { iri, kind } => Record::Declaration { iri: d(iri), entity_kind: *kind },
        Axiom::SubClassOf { sub, sup } => Record::SubClassOf { sub: d(sub), sup: d(sup) },
        Axiom::EquivalentClasses(set) => Record::EquivalentClasses { classes: set.iter().map(d).collect() },
        Axiom::DisjointClasses(a, b) => Record::DisjointClasses { classes: [d(a), d(b)] },
        Axiom::SubObjectPropertyOf { sub, sup } => Record::SubObjectPropertyOf { sub: d(sub), sup: d(sup) },
        Axiom::EquivalentObjectProperties(set) => {
            Record::EquivalentObjectProperties { properties: set.iter().map(d).collect() }
        }
        Axiom::ObjectPropertyRange { prop, cls } => Record::ObjectPropertyRange { prop: d(prop), cls: d(cls) },
        Axiom::ObjectPropertyDomain { prop, cls } => Record::ObjectPropertyDomain { prop: d(prop), cls: d(cls) },
        Axiom::ClassAssertion { cls, ind } => Record::ClassAssertion { cls: d(cls), ind: d(ind) },
        Axiom::ObjectPropertyAssertion { subject, prop, object } => Record::ObjectPropertyAssertion {
            subject: d(subject),
            prop: d(prop),
            object: d(object),
        },
        Axiom::SameIndividual(a, b) => Record::SameIndividual { individuals: [d(a), d(b)] },
        Axiom::AnnotationAssertion { subject, property, value } => Record::AnnotationAssertion {
            subject: d(subject),
            ann_prop: d(property),
            value: value.clone(),
        },
    }
}

pub fn serialize_json(store: &OntologyStore) -> String {
    let prefixes = store.prefixes();
    let doc = Document {
        prefixes: prefixes.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
        axioms: store.axioms().map(|ax| to_record(ax, prefixes)).collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("interchange document serializes");
    text.push('\n');
    text
}

pub fn parse_json(text: &str) -> Result<OntologyStore, ParseError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| {
        ParseError::Syntax(ParseDiagnostic::error(
            Pos { line: e.line().max(1), column: e.column().max(1) },
            e.to_string(),
        ))
    })?;
    let mut prefixes = PrefixMap::new();
    for (p, base) in &doc.prefixes {
        prefixes.insert(p.clone(), base.clone());
    }
    let origin = Pos { line: 1, column: 1 };
    let fail = |i: usize, e| {
        let mut err = ParseError::ontology(origin, e);
        if let ParseError::Ontology { diagnostic, .. } = &mut err {
            diagnostic.message = format!("axioms[{i}]: {}", diagnostic.message);
        }
        err
    };
    let r = |i: usize, s: &str| prefixes.resolve(s).map_err(|e| fail(i, e));

    let mut axioms = Vec::with_capacity(doc.axioms.len());
    for (i, rec) in doc.axioms.iter().enumerate() {
        let ax = match rec {
            Record::Declaration { iri, entity_kind } => Axiom::declaration(r(i, iri)?, *entity_kind),
            Record::SubClassOf { sub, sup } => Axiom::sub_class_of(r(i, sub)?, r(i, sup)?),
            Record::EquivalentClasses { classes } => Axiom::equivalent_classes(
                classes.iter().map(|c| r(i, c)).collect::<Result<Vec<_>, _>>()?,
            ),
            Record::DisjointClasses { classes: [a, b] } => Axiom::disjoint_classes(r(i, a)?, r(i, b)?),
            Record::SubObjectPropertyOf { sub, sup } => Axiom::sub_property_of(r(i, sub)?, r(i, sup)?),
            Record::EquivalentObjectProperties { properties } => Axiom::equivalent_properties(
                properties.iter().map(|c| r(i, c)).collect::<Result<Vec<_>, _>>()?,
            ),
            Record::ObjectPropertyRange { prop, cls } => Axiom::range(r(i, prop)?, r(i, cls)?),
            Record::ObjectPropertyDomain { prop, cls } => Axiom::domain(r(i, prop)?, r(i, cls)?),
            Record::ClassAssertion { cls, ind } => Axiom::class_assertion(r(i, cls)?, r(i, ind)?),
            Record::ObjectPropertyAssertion { subject, prop, object } => {
                Axiom::property_assertion(r(i, subject)?, r(i, prop)?, r(i, object)?)
            }
            Record::SameIndividual { individuals: [a, b] } => Axiom::same_individual(r(i, a)?, r(i, b)?),
            Record::AnnotationAssertion { subject, ann_prop, value } => {
                let value = AnnotationValue::new(value.text(), value.language().map(str::to_string))
                    .map_err(|e| fail(i, e))?;
                Axiom::annotation(r(i, subject)?, r(i, ann_prop)?, value)
            }
        };
        axioms.push((i, ax));
    }

    let mut store = OntologyStore::with_prefixes(prefixes.clone());
    let (decls, rest): (Vec<_>, Vec<_>) = axioms.into_iter().partition(|(_, ax)| ax.is_declaration());
    for (i, ax) in decls.into_iter().chain(rest) {
        store.add_axiom(ax).map_err(|e| fail(i, e))?;
    }
    Ok(store)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ontology::seed_aieo_schema;

    #[test]
    fn seed_round_trip() {
        let seed = seed_aieo_schema();
        let text = serialize_json(&seed);
        assert!(text.contains("\"kind\": \"EquivalentClasses\""));
        assert_eq!(parse_json(&text).unwrap(), seed);
    }

    #[test]
    fn undeclared_entity_names_axiom_index() {
        let text = r#"{"prefixes": {"aieo": "https://w3id.org/aieo#"},
            "axioms": [{"kind": "ClassAssertion", "cls": "aieo:Principle", "ind": "aieo:x"}]}"#;
        let err = parse_json(text).unwrap_err();
        assert!(err.diagnostic().message.starts_with("axioms[0]"), "{err}");
    }

    #[test]
    fn syntax_error_position() {
        let err = parse_json("{\"axioms\": [}").unwrap_err();
        assert!(matches!(err, ParseError::Syntax(_)));
    }
}
