use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Iri, OntologyError, PrefixMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EntityKind {
    OwlClass,
    ObjectProperty,
    AnnotationProperty,
    DataProperty,
    NamedIndividual,
}

impl EntityKind {
    pub const ALL: [EntityKind; 5] = [
        EntityKind::OwlClass,
        EntityKind::ObjectProperty,
        EntityKind::AnnotationProperty,
        EntityKind::DataProperty,
        EntityKind::NamedIndividual,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EntityKind::OwlClass => "OwlClass",
            EntityKind::ObjectProperty => "ObjectProperty",
            EntityKind::AnnotationProperty => "AnnotationProperty",
            EntityKind::DataProperty => "DataProperty",
            EntityKind::NamedIndividual => "NamedIndividual",
        }
    }

    fn functional_keyword(self) -> &'static str {
        match self {
            EntityKind::OwlClass => "Class",
            EntityKind::ObjectProperty => "ObjectProperty",
            EntityKind::AnnotationProperty => "AnnotationProperty",
            EntityKind::DataProperty => "DataProperty",
            EntityKind::NamedIndividual => "NamedIndividual",
        }
    }
}

impl fmt::Display for EntityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for EntityKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EntityKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown entity kind `{s}`"))
    }
}

/// Plain or language-tagged literal used as an annotation value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AnnotationValue {
    text: String,
    #[serde(rename = "languageTag", default, skip_serializing_if = "Option::is_none")]
    language: Option<String>,
}

impl AnnotationValue {
    pub fn new(text: impl Into<String>, language: Option<String>) -> Result<Self, OntologyError> {
        let text = text.into();
        if text.is_empty() {
            return Err(OntologyError::InvalidAxiom(
                "annotation text must be non-empty".into(),
            ));
        }
        if let Some(tag) = &language {
            if !is_valid_language_tag(tag) {
                return Err(OntologyError::InvalidAxiom(format!(
                    "malformed language tag `{tag}`"
                )));
            }
        }
        Ok(AnnotationValue { text, language })
    }

    pub fn plain(text: impl Into<String>) -> Result<Self, OntologyError> {
        Self::new(text, None)
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn language(&self) -> Option<&str> {
        self.language.as_deref()
    }
}

pub fn is_valid_language_tag(tag: &str) -> bool {
    let mut parts = tag.split('-');
    let first_ok = parts
        .next()
        .is_some_and(|p| !p.is_empty() && p.chars().all(|c| c.is_ascii_alphabetic()));
    first_ok && parts.all(|p| !p.is_empty() && p.chars().all(|c| c.is_ascii_alphanumeric()))
}

impl fmt::Display for AnnotationValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", escape_literal(&self.text))?;
        if let Some(tag) = &self.language {
            write!(f, "@{tag}")?;
        }
        Ok(())
    }
}

fn escape_literal(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c => out.push(c),
        }
    }
    out
}

/// The OWL constructs the ontology uses.
///
/// `DisjointClasses` and `SameIndividual` hold their pair in ascending
/// order; equivalence axioms hold a set. Build them through the
/// constructors (or call [`Axiom::normalized`]) so that structurally equal
/// axioms compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Declaration { iri: Iri, kind: EntityKind },
    SubClassOf { sub: Iri, sup: Iri },
    EquivalentClasses(BTreeSet<Iri>),
    DisjointClasses(Iri, Iri),
    SubObjectPropertyOf { sub: Iri, sup: Iri },
    EquivalentObjectProperties(BTreeSet<Iri>),
    ObjectPropertyRange { prop: Iri, cls: Iri },
    ObjectPropertyDomain { prop: Iri, cls: Iri },
    ClassAssertion { cls: Iri, ind: Iri },
    ObjectPropertyAssertion { subject: Iri, prop: Iri, object: Iri },
    SameIndividual(Iri, Iri),
    AnnotationAssertion { subject: Iri, property: Iri, value: AnnotationValue },
}

fn ordered(a: Iri, b: Iri) -> (Iri, Iri) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Axiom {
    pub fn declaration(iri: Iri, kind: EntityKind) -> Self {
        Axiom::Declaration { iri, kind }
    }

    pub fn sub_class_of(sub: Iri, sup: Iri) -> Self {
        Axiom::SubClassOf { sub, sup }
    }

    pub fn equivalent_classes(members: impl IntoIterator<Item = Iri>) -> Self {
        Axiom::EquivalentClasses(members.into_iter().collect())
    }

    pub fn disjoint_classes(a: Iri, b: Iri) -> Self {
        let (a, b) = ordered(a, b);
        Axiom::DisjointClasses(a, b)
    }

    pub fn sub_property_of(sub: Iri, sup: Iri) -> Self {
        Axiom::SubObjectPropertyOf { sub, sup }
    }

    pub fn equivalent_properties(members: impl IntoIterator<Item = Iri>) -> Self {
        Axiom::EquivalentObjectProperties(members.into_iter().collect())
    }

    pub fn range(prop: Iri, cls: Iri) -> Self {
        Axiom::ObjectPropertyRange { prop, cls }
    }

    pub fn domain(prop: Iri, cls: Iri) -> Self {
        Axiom::ObjectPropertyDomain { prop, cls }
    }

    pub fn class_assertion(cls: Iri, ind: Iri) -> Self {
        Axiom::ClassAssertion { cls, ind }
    }

    pub fn property_assertion(subject: Iri, prop: Iri, object: Iri) -> Self {
        Axiom::ObjectPropertyAssertion { subject, prop, object }
    }

    pub fn same_individual(a: Iri, b: Iri) -> Self {
        let (a, b) = ordered(a, b);
        Axiom::SameIndividual(a, b)
    }

    pub fn annotation(subject: Iri, property: Iri, value: AnnotationValue) -> Self {
        Axiom::AnnotationAssertion { subject, property, value }
    }

    /// Re-orders unordered pairs.
    pub fn normalized(self) -> Self {
        match self {
            Axiom::DisjointClasses(a, b) => Axiom::disjoint_classes(a, b),
            Axiom::SameIndividual(a, b) => Axiom::same_individual(a, b),
            other => other,
        }
    }

    pub fn is_declaration(&self) -> bool {
        matches!(self, Axiom::Declaration { .. })
    }

    pub fn is_annotation(&self) -> bool {
        matches!(self, Axiom::AnnotationAssertion { .. })
    }

    /// Neither a declaration nor an annotation assertion.
    pub fn is_logical(&self) -> bool {
        !self.is_declaration() && !self.is_annotation()
    }

    /// Name of the variant, as used by the JSON interchange `kind` tag.
    pub fn variant_name(&self) -> &'static str {
        match self {
            Axiom::Declaration { .. } => "Declaration",
            Axiom::SubClassOf { .. } => "SubClassOf",
            Axiom::EquivalentClasses(_) => "EquivalentClasses",
            Axiom::DisjointClasses(..) => "DisjointClasses",
            Axiom::SubObjectPropertyOf { .. } => "SubObjectPropertyOf",
            Axiom::EquivalentObjectProperties(_) => "EquivalentObjectProperties",
            Axiom::ObjectPropertyRange { .. } => "ObjectPropertyRange",
            Axiom::ObjectPropertyDomain { .. } => "ObjectPropertyDomain",
            Axiom::ClassAssertion { .. } => "ClassAssertion",
            Axiom::ObjectPropertyAssertion { .. } => "ObjectPropertyAssertion",
            Axiom::SameIndividual(..) => "SameIndividual",
            Axiom::AnnotationAssertion { .. } => "AnnotationAssertion",
        }
    }

    /// Every IRI the axiom mentions, paired with the kind its position
    /// requires. `None` means any declared kind is acceptable.
    pub fn signature(&self) -> Vec<(&Iri, Option<EntityKind>)> {
        use EntityKind::*;
        match self {
            Axiom::Declaration { iri, kind } => vec![(iri, Some(*kind))],
            Axiom::SubClassOf { sub, sup } => vec![(sub, Some(OwlClass)), (sup, Some(OwlClass))],
            Axiom::EquivalentClasses(set) => set.iter().map(|i| (i, Some(OwlClass))).collect(),
            Axiom::DisjointClasses(a, b) => vec![(a, Some(OwlClass)), (b, Some(OwlClass))],
            Axiom::SubObjectPropertyOf { sub, sup } => {
                vec![(sub, Some(ObjectProperty)), (sup, Some(ObjectProperty))]
            }
            Axiom::EquivalentObjectProperties(set) => {
                set.iter().map(|i| (i, Some(ObjectProperty))).collect()
            }
            Axiom::ObjectPropertyRange { prop, cls } | Axiom::ObjectPropertyDomain { prop, cls } => {
                vec![(prop, Some(ObjectProperty)), (cls, Some(OwlClass))]
            }
            Axiom::ClassAssertion { cls, ind } => vec![(cls, Some(OwlClass)), (ind, Some(NamedIndividual))],
            Axiom::ObjectPropertyAssertion { subject, prop, object } => vec![
                (subject, Some(NamedIndividual)),
                (prop, Some(ObjectProperty)),
                (object, Some(NamedIndividual)),
            ],
            Axiom::SameIndividual(a, b) => vec![(a, Some(NamedIndividual)), (b, Some(NamedIndividual))],
            Axiom::AnnotationAssertion { subject, property, .. } => {
                vec![(subject, None), (property, Some(AnnotationProperty))]
            }
        }
    }

    /// OWL functional-style rendering with compacted IRIs.
    pub fn display_with(&self, prefixes: &PrefixMap) -> String {
        let d = |i: &Iri| prefixes.display(i);
        let join = |set: &BTreeSet<Iri>| set.iter().map(d).collect::<Vec<_>>().join(" ");
        match self {
            Axiom::Declaration { iri, kind } => {
                format!("Declaration({}({}))", kind.functional_keyword(), d(iri))
            }
            Axiom::SubClassOf { sub, sup } => format!("SubClassOf({} {})", d(sub), d(sup)),
            Axiom::EquivalentClasses(set) => format!("EquivalentClasses({})", join(set)),
            Axiom::DisjointClasses(a, b) => format!("DisjointClasses({} {})", d(a), d(b)),
            Axiom::SubObjectPropertyOf { sub, sup } => {
                format!("SubObjectPropertyOf({} {})", d(sub), d(sup))
            }
            Axiom::EquivalentObjectProperties(set) => {
                format!("EquivalentObjectProperties({})", join(set))
            }
            Axiom::ObjectPropertyRange { prop, cls } => {
                format!("ObjectPropertyRange({} {})", d(prop), d(cls))
            }
            Axiom::ObjectPropertyDomain { prop, cls } => {
                format!("ObjectPropertyDomain({} {})", d(prop), d(cls))
            }
            Axiom::ClassAssertion { cls, ind } => format!("ClassAssertion({} {})", d(cls), d(ind)),
            Axiom::ObjectPropertyAssertion { subject, prop, object } => {
                format!("ObjectPropertyAssertion({} {} {})", d(prop), d(subject), d(object))
            }
            Axiom::SameIndividual(a, b) => format!("SameIndividual({} {})", d(a), d(b)),
            Axiom::AnnotationAssertion { subject, property, value } => {
                format!("AnnotationAssertion({} {} {})", d(property), d(subject), value)
            }
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&PrefixMap::standard()))
    }
}
