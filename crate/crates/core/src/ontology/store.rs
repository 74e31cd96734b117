use std::collections::{BTreeMap, BTreeSet};

use super::{vocab, AnnotationValue, Axiom, EntityKind, Iri, OntologyError, PrefixMap};

type Index = BTreeMap<Iri, BTreeSet<Axiom>>;

/// Declared entities plus a duplicate-free axiom set, with lookup indexes
/// that are maintained on every mutation.
///
/// Equivalence axioms of one kind are kept as disjoint blocks: adding
/// `EquivalentClasses{B, C}` while `{A, B}` is present leaves the single
/// axiom `{A, B, C}`.
#[derive(Debug, Clone, Default)]
pub struct OntologyStore {
    prefixes: PrefixMap,
    axioms: BTreeSet<Axiom>,
    declarations: BTreeMap<Iri, EntityKind>,
    by_subject: Index,
    by_property: Index,
    by_class: Index,
}

impl PartialEq for OntologyStore {
    fn eq(&self, other: &Self) -> bool {
        self.prefixes == other.prefixes && self.axioms == other.axioms
    }
}

impl Eq for OntologyStore {}

fn subject_keys(ax: &Axiom) -> Vec<&Iri> {
    match ax {
        Axiom::Declaration { iri, .. } => vec![iri],
        Axiom::SubClassOf { sub, .. } | Axiom::SubObjectPropertyOf { sub, .. } => vec![sub],
        Axiom::EquivalentClasses(set) | Axiom::EquivalentObjectProperties(set) => set.iter().collect(),
        Axiom::DisjointClasses(a, b) | Axiom::SameIndividual(a, b) => vec![a, b],
        Axiom::ObjectPropertyRange { prop, .. } | Axiom::ObjectPropertyDomain { prop, .. } => vec![prop],
        Axiom::ClassAssertion { ind, .. } => vec![ind],
        Axiom::ObjectPropertyAssertion { subject, .. } | Axiom::AnnotationAssertion { subject, .. } => {
            vec![subject]
        }
    }
}

fn keys_of_kind(ax: &Axiom, wanted: &[EntityKind]) -> Vec<Iri> {
    ax.signature()
        .into_iter()
        .filter(|(_, k)| k.is_some_and(|k| wanted.contains(&k)))
        .map(|(i, _)| i.clone())
        .collect()
}

fn index_insert(index: &mut Index, keys: impl IntoIterator<Item = Iri>, ax: &Axiom) {
    for key in keys {
        index.entry(key).or_default().insert(ax.clone());
    }
}

fn index_remove(index: &mut Index, keys: impl IntoIterator<Item = Iri>, ax: &Axiom) {
    for key in keys {
        if let Some(set) = index.get_mut(&key) {
            set.remove(ax);
            if set.is_empty() {
                index.remove(&key);
            }
        }
    }
}

const PROPERTY_KINDS: [EntityKind; 3] = [
    EntityKind::ObjectProperty,
    EntityKind::AnnotationProperty,
    EntityKind::DataProperty,
];

impl OntologyStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_prefixes(prefixes: PrefixMap) -> Self {
        OntologyStore { prefixes, ..Self::default() }
    }

    pub fn prefixes(&self) -> &PrefixMap {
        &self.prefixes
    }

    pub fn set_prefix(&mut self, prefix: impl Into<String>, base: impl Into<String>) {
        self.prefixes.insert(prefix, base);
    }

    /// Resolves a CURIE against this store's prefixes, falling back to the
    /// standard ones.
    pub fn resolve(&self, text: &str) -> Result<Iri, OntologyError> {
        let mut map = self.prefixes.clone();
        map.merge_missing(&PrefixMap::standard());
        map.resolve(text)
    }

    pub fn len(&self) -> usize {
        self.axioms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.axioms.is_empty()
    }

    pub fn axioms(&self) -> impl Iterator<Item = &Axiom> + '_ {
        self.axioms.iter()
    }

    pub fn axiom_set(&self) -> &BTreeSet<Axiom> {
        &self.axioms
    }

    pub fn contains(&self, ax: &Axiom) -> bool {
        self.axioms.contains(&ax.clone().normalized())
    }

    pub fn kind_of(&self, iri: &Iri) -> Option<EntityKind> {
        self.declarations.get(iri).copied()
    }

    pub fn is_declared(&self, iri: &Iri, kind: EntityKind) -> bool {
        self.kind_of(iri) == Some(kind)
    }

    pub fn entities(&self, kind: EntityKind) -> impl Iterator<Item = &Iri> + '_ {
        self.declarations
            .iter()
            .filter(move |(_, k)| **k == kind)
            .map(|(i, _)| i)
    }

    /// Declares `iri`. Returns `false` when the identical declaration was
    /// already present.
    pub fn declare(&mut self, iri: Iri, kind: EntityKind) -> Result<bool, OntologyError> {
        match self.declarations.get(&iri) {
            Some(existing) if *existing == kind => Ok(false),
            Some(existing) => Err(OntologyError::KindConflict {
                iri,
                existing: *existing,
                requested: kind,
            }),
            None => {
                self.declarations.insert(iri.clone(), kind);
                self.insert_raw(Axiom::Declaration { iri, kind });
                Ok(true)
            }
        }
    }

    /// Checks an axiom against the declarations without inserting it.
    pub fn check_axiom(&self, ax: &Axiom) -> Result<(), OntologyError> {
        match ax {
            Axiom::Declaration { iri, kind } => {
                return match self.kind_of(iri) {
                    Some(existing) if existing != *kind => Err(OntologyError::KindConflict {
                        iri: iri.clone(),
                        existing,
                        requested: *kind,
                    }),
                    _ => Ok(()),
                };
            }
            Axiom::EquivalentClasses(set) | Axiom::EquivalentObjectProperties(set) if set.len() < 2 => {
                return Err(OntologyError::InvalidAxiom(format!(
                    "{} needs at least two distinct members",
                    ax.variant_name()
                )));
            }
            Axiom::DisjointClasses(a, b) | Axiom::SameIndividual(a, b) if a == b => {
                return Err(OntologyError::InvalidAxiom(format!(
                    "{} needs two distinct members, got {} twice",
                    ax.variant_name(),
                    a
                )));
            }
            _ => {}
        }
        for (iri, expected) in ax.signature() {
            match (self.kind_of(iri), expected) {
                (None, Some(expected)) => {
                    return Err(OntologyError::UndeclaredEntity { iri: iri.clone(), expected })
                }
                (None, None) => {
                    return Err(OntologyError::UndeclaredEntity {
                        iri: iri.clone(),
                        expected: EntityKind::NamedIndividual,
                    })
                }
                (Some(found), Some(expected)) if found != expected => {
                    return Err(OntologyError::KindMismatch { iri: iri.clone(), expected, found })
                }
                _ => {}
            }
        }
        Ok(())
    }

    /// Adds an axiom after validating it. Returns `false` if the store
    /// already held it.
    pub fn add_axiom(&mut self, ax: Axiom) -> Result<bool, OntologyError> {
        let ax = ax.normalized();
        if let Axiom::Declaration { iri, kind } = ax {
            return self.declare(iri, kind);
        }
        self.check_axiom(&ax)?;
        if self.axioms.contains(&ax) {
            return Ok(false);
        }
        match ax {
            Axiom::EquivalentClasses(set) => Ok(self.merge_equivalence(set, false)),
            Axiom::EquivalentObjectProperties(set) => Ok(self.merge_equivalence(set, true)),
            other => {
                self.insert_raw(other);
                Ok(true)
            }
        }
    }

    /// Adds every axiom in order, stopping at the first error.
    pub fn extend<I: IntoIterator<Item = Axiom>>(&mut self, axioms: I) -> Result<(), OntologyError> {
        for ax in axioms {
            self.add_axiom(ax)?;
        }
        Ok(())
    }

    fn merge_equivalence(&mut self, mut members: BTreeSet<Iri>, properties: bool) -> bool {
        let overlapping: Vec<Axiom> = members
            .iter()
            .flat_map(|m| self.by_subject.get(m).into_iter().flatten())
            .filter(|ax| match ax {
                Axiom::EquivalentClasses(_) => !properties,
                Axiom::EquivalentObjectProperties(_) => properties,
                _ => false,
            })
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        for ax in &overlapping {
            if let Axiom::EquivalentClasses(set) | Axiom::EquivalentObjectProperties(set) = ax {
                members.extend(set.iter().cloned());
            }
        }
        // Already covered by a single existing block.
        if let [Axiom::EquivalentClasses(set) | Axiom::EquivalentObjectProperties(set)] = overlapping.as_slice() {
            if *set == members {
                return false;
            }
        }
        for ax in overlapping {
            self.remove_raw(&ax);
        }
        let merged = if properties {
            Axiom::EquivalentObjectProperties(members)
        } else {
            Axiom::EquivalentClasses(members)
        };
        self.insert_raw(merged);
        true
    }

    fn insert_raw(&mut self, ax: Axiom) {
        if !self.axioms.insert(ax.clone()) {
            return;
        }
        index_insert(&mut self.by_subject, subject_keys(&ax).into_iter().cloned(), &ax);
        index_insert(&mut self.by_property, property_keys(&ax), &ax);
        index_insert(&mut self.by_class, class_keys(&ax), &ax);
    }

    fn remove_raw(&mut self, ax: &Axiom) {
        if !self.axioms.remove(ax) {
            return;
        }
        index_remove(&mut self.by_subject, subject_keys(ax).into_iter().cloned(), ax);
        index_remove(&mut self.by_property, property_keys(ax), ax);
        index_remove(&mut self.by_class, class_keys(ax), ax);
    }

    /// Axioms whose subject position names `iri`.
    pub fn by_subject(&self, iri: &Iri) -> impl Iterator<Item = &Axiom> + '_ {
        self.by_subject.get(iri).into_iter().flatten()
    }

    /// Axioms mentioning `iri` in a property position.
    pub fn by_property(&self, iri: &Iri) -> impl Iterator<Item = &Axiom> + '_ {
        self.by_property.get(iri).into_iter().flatten()
    }

    /// Axioms mentioning `iri` in a class position.
    pub fn by_class(&self, iri: &Iri) -> impl Iterator<Item = &Axiom> + '_ {
        self.by_class.get(iri).into_iter().flatten()
    }

    /// Rebuilds the indexes from scratch and reports whether the maintained
    /// ones matched.
    pub fn indexes_consistent(&self) -> bool {
        let mut fresh = OntologyStore::with_prefixes(self.prefixes.clone());
        for ax in &self.axioms {
            fresh.insert_raw(ax.clone());
        }
        let declared: BTreeMap<Iri, EntityKind> = self
            .axioms
            .iter()
            .filter_map(|ax| match ax {
                Axiom::Declaration { iri, kind } => Some((iri.clone(), *kind)),
                _ => None,
            })
            .collect();
        fresh.by_subject == self.by_subject
            && fresh.by_property == self.by_property
            && fresh.by_class == self.by_class
            && declared == self.declarations
    }

    /// Re-checks every structural invariant.
    pub fn validate(&self) -> Result<(), OntologyError> {
        for ax in &self.axioms {
            self.check_axiom(ax)?;
        }
        if !self.indexes_consistent() {
            return Err(OntologyError::InvalidAxiom("store indexes out of sync".into()));
        }
        Ok(())
    }

    pub fn class_assertions(&self) -> impl Iterator<Item = (&Iri, &Iri)> + '_ {
        self.axioms.iter().filter_map(|ax| match ax {
            Axiom::ClassAssertion { cls, ind } => Some((cls, ind)),
            _ => None,
        })
    }

    pub fn property_assertions(&self) -> impl Iterator<Item = (&Iri, &Iri, &Iri)> + '_ {
        self.axioms.iter().filter_map(|ax| match ax {
            Axiom::ObjectPropertyAssertion { subject, prop, object } => Some((subject, prop, object)),
            _ => None,
        })
    }

    /// Asserted classes of an individual.
    pub fn asserted_types(&self, ind: &Iri) -> BTreeSet<&Iri> {
        self.by_subject(ind)
            .filter_map(|ax| match ax {
                Axiom::ClassAssertion { cls, .. } => Some(cls),
                _ => None,
            })
            .collect()
    }

    /// Asserted `(property, object)` pairs with `subject` in subject position.
    pub fn outgoing(&self, subject: &Iri) -> impl Iterator<Item = (&Iri, &Iri)> + '_ {
        self.by_subject(subject).filter_map(|ax| match ax {
            Axiom::ObjectPropertyAssertion { prop, object, .. } => Some((prop, object)),
            _ => None,
        })
    }

    pub fn annotations(&self, subject: &Iri, property: &Iri) -> Vec<&AnnotationValue> {
        self.by_subject(subject)
            .filter_map(|ax| match ax {
                Axiom::AnnotationAssertion { property: p, value, .. } if p == property => Some(value),
                _ => None,
            })
            .collect()
    }

    /// First `rdfs:label`, or the IRI's local name.
    pub fn label(&self, iri: &Iri) -> String {
        self.annotations(iri, &vocab::rdfs_label())
            .first()
            .map(|v| v.text().to_string())
            .unwrap_or_else(|| iri.local_name().to_string())
    }
}

fn property_keys(ax: &Axiom) -> Vec<Iri> {
    match ax {
        Axiom::Declaration { iri, kind } if PROPERTY_KINDS.contains(kind) => vec![iri.clone()],
        Axiom::Declaration { .. } => vec![],
        _ => keys_of_kind(ax, &PROPERTY_KINDS),
    }
}

fn class_keys(ax: &Axiom) -> Vec<Iri> {
    match ax {
        Axiom::Declaration { iri, kind: EntityKind::OwlClass } => vec![iri.clone()],
        Axiom::Declaration { .. } => vec![],
        _ => keys_of_kind(ax, &[EntityKind::OwlClass]),
    }
}
