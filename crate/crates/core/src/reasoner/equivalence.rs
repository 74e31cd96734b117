use std::collections::{BTreeMap, BTreeSet};

use crate::ontology::{Axiom, EntityKind, Iri, OntologyStore};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivalenceKind {
    Class,
    Property,
    Individual,
}

impl EquivalenceKind {
    fn entity_kind(self) -> EntityKind {
        match self {
            EquivalenceKind::Class => EntityKind::OwlClass,
            EquivalenceKind::Property => EntityKind::ObjectProperty,
            EquivalenceKind::Individual => EntityKind::NamedIndividual,
        }
    }
}

fn find(parent: &mut BTreeMap<Iri, Iri>, x: &Iri) -> Iri {
    let p = parent[x].clone();
    if p == *x {
        return p;
    }
    let root = find(parent, &p);
    parent.insert(x.clone(), root.clone());
    root
}

fn union(parent: &mut BTreeMap<Iri, Iri>, a: &Iri, b: &Iri) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent.insert(hi, lo);
    }
}

/// Partition of the declared entities of `kind` under the reflexive,
/// symmetric and transitive closure of the matching equivalence axioms.
/// Blocks, and the list of blocks, are ordered by IRI.
pub fn equivalence_classes(store: &OntologyStore, kind: EquivalenceKind) -> Vec<BTreeSet<Iri>> {
    let mut parent: BTreeMap<Iri, Iri> = store
        .entities(kind.entity_kind())
        .map(|i| (i.clone(), i.clone()))
        .collect();
    for ax in store.axioms() {
        let members: Vec<&Iri> = match (kind, ax) {
            (EquivalenceKind::Class, Axiom::EquivalentClasses(set))
            | (EquivalenceKind::Property, Axiom::EquivalentObjectProperties(set)) => set.iter().collect(),
            (EquivalenceKind::Individual, Axiom::SameIndividual(a, b)) => vec![a, b],
            _ => continue,
        };
        for w in members.windows(2) {
            if parent.contains_key(w[0]) && parent.contains_key(w[1]) {
                union(&mut parent, w[0], w[1]);
            }
        }
    }
    let keys: Vec<Iri> = parent.keys().cloned().collect();
    let mut blocks: BTreeMap<Iri, BTreeSet<Iri>> = BTreeMap::new();
    for k in keys {
        let root = find(&mut parent, &k);
        blocks.entry(root).or_default().insert(k);
    }
    blocks.into_values().collect()
}
