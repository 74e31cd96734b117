use std::collections::{BTreeMap, BTreeSet};

use super::{DetailLevel, EdgeKind, GraphDoc, GraphEdge, GraphNode, NodeKind};
use crate::ontology::{Axiom, EntityKind, Iri, OntologyStore};
use crate::reasoner::{equivalence_classes, EquivalenceKind, Materialization};

/// Maps each entity to the smallest IRI of its equivalence block.
fn representatives(store: &OntologyStore, kind: EquivalenceKind) -> BTreeMap<Iri, Iri> {
    let mut out = BTreeMap::new();
    for block in equivalence_classes(store, kind) {
        let rep = block.iter().next().expect("blocks are non-empty").clone();
        for m in block {
            out.insert(m, rep.clone());
        }
    }
    out
}

/// Reflexive-transitive superclasses through subclass and equivalence axioms.
fn superclasses(store: &OntologyStore, class: &Iri) -> BTreeSet<Iri> {
    let mut seen = BTreeSet::from([class.clone()]);
    let mut stack = vec![class.clone()];
    while let Some(c) = stack.pop() {
        for ax in store.by_class(&c) {
            let next: Vec<&Iri> = match ax {
                Axiom::SubClassOf { sub, sup } if *sub == c => vec![sup],
                Axiom::EquivalentClasses(set) if set.contains(&c) => set.iter().collect(),
                _ => continue,
            };
            for n in next {
                if seen.insert(n.clone()) {
                    stack.push(n.clone());
                }
            }
        }
    }
    seen
}

fn node(store: &OntologyStore, iri: &Iri, kind: NodeKind, members: Option<usize>) -> GraphNode {
    GraphNode {
        id: iri.as_str().to_string(),
        label: store.label(iri),
        kind,
        members,
        annotations: store.by_subject(iri).filter(|ax| ax.is_annotation()).count(),
    }
}

fn edge(from: &Iri, to: &Iri, label: String, kind: EdgeKind) -> GraphEdge {
    GraphEdge { from: from.as_str().to_string(), to: to.as_str().to_string(), label, kind }
}

/// Builds the node and edge lists for `level`; each level contains every
/// element of the levels below it.
pub fn export_graph(mat: &Materialization, level: DetailLevel) -> GraphDoc {
    let store = &mat.base;
    let prefixes = store.prefixes();
    let mut members: BTreeMap<&Iri, BTreeSet<&Iri>> = BTreeMap::new();
    for (c, i) in mat.class_assertions() {
        members.entry(c).or_default().insert(i);
    }

    let mut nodes = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for class in store.entities(EntityKind::OwlClass) {
        let count = members.get(class).map_or(0, BTreeSet::len);
        nodes.insert(node(store, class, NodeKind::Class, Some(count)));
    }
    for ax in store.axioms() {
        match ax {
            Axiom::SubClassOf { sub, sup } => {
                edges.insert(edge(sub, sup, "subClassOf".into(), EdgeKind::Subclass));
            }
            Axiom::EquivalentClasses(set) => {
                for (k, a) in set.iter().enumerate() {
                    for b in set.iter().skip(k + 1) {
                        edges.insert(edge(a, b, "equivalentClass".into(), EdgeKind::Equivalence));
                    }
                }
            }
            _ => {}
        }
    }

    if level >= DetailLevel::PlusIndividuals {
        let class_rep = representatives(store, EquivalenceKind::Class);
        let mut types: BTreeMap<&Iri, BTreeSet<&Iri>> = BTreeMap::new();
        for (c, i) in mat.class_assertions() {
            types.entry(i).or_default().insert(c);
        }
        let mut supers: BTreeMap<&Iri, BTreeSet<Iri>> = BTreeMap::new();
        for ind in store.entities(EntityKind::NamedIndividual) {
            nodes.insert(node(store, ind, NodeKind::Individual, None));
            let Some(ts) = types.get(ind) else { continue };
            for c in ts {
                supers.entry(c).or_insert_with(|| superclasses(store, c));
            }
            let rep = |c: &Iri| class_rep.get(c).cloned().unwrap_or_else(|| c.clone());
            for c in ts {
                // A strict subclass among the memberships makes `c` redundant.
                let redundant = ts.iter().any(|d| d != c && supers[d].contains(*c) && !supers[*c].contains(*d));
                if !redundant {
                    edges.insert(edge(ind, &rep(c), "a".into(), EdgeKind::Membership));
                }
            }
        }
    }

    if level >= DetailLevel::PlusInstanceRelationships {
        let prop_rep = representatives(store, EquivalenceKind::Property);
        for (s, p, o) in store.property_assertions() {
            let p = prop_rep.get(p).unwrap_or(p);
            edges.insert(edge(s, o, prefixes.display(p), EdgeKind::Assertion));
        }
    }

    let mut nodes: Vec<GraphNode> = nodes.into_iter().collect();
    nodes.sort_by(|a, b| (a.kind, &a.id).cmp(&(b.kind, &b.id)));
    let mut edges: Vec<GraphEdge> = edges.into_iter().collect();
    edges.sort_by(|a, b| (a.kind, &a.from, &a.to, &a.label).cmp(&(b.kind, &b.from, &b.to, &b.label)));
    GraphDoc { nodes, edges }
}
