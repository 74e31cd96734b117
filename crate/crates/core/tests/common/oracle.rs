//! Naive reference implementations. Nothing here calls into the engine,
//! the evaluator or the exporter; only data types and the seed are shared.

use std::collections::{BTreeMap, BTreeSet};

use aieo::query::{PatternTerm, Query, ResultSet, Term};
use aieo::reasoner::RuleId;
use aieo::{Axiom, EntityKind, Iri, OntologyStore};

pub type Trace = (RuleId, BTreeSet<Axiom>);

pub struct NaiveClosure {
    pub inferred: BTreeSet<Axiom>,
    /// For each inferred axiom, every rule instance concluding it from the
    /// facts known before the round in which it first appeared.
    pub traces: BTreeMap<Axiom, BTreeSet<Trace>>,
}

fn ca(c: &Iri, i: &Iri) -> Axiom {
    Axiom::class_assertion(c.clone(), i.clone())
}

fn pa(s: &Iri, p: &Iri, o: &Iri) -> Axiom {
    Axiom::property_assertion(s.clone(), p.clone(), o.clone())
}

fn same(a: &Iri, b: &Iri) -> Axiom {
    Axiom::same_individual(a.clone(), b.clone())
}

/// Every rule instance whose premises are all in `facts`.
fn one_step(facts: &BTreeSet<Axiom>, same_as: bool) -> Vec<(Axiom, RuleId, Vec<Axiom>)> {
    let mut out = Vec::new();
    let mut push = |c: Axiom, r: RuleId, p: Vec<&Axiom>| out.push((c, r, p.into_iter().cloned().collect()));
    for f in facts {
        for g in facts {
            match (f, g) {
                (Axiom::ObjectPropertyAssertion { subject, prop: property, object }, _) => match g {
                    Axiom::ObjectPropertyRange { prop: p, cls: class } if p == property => {
                        push(ca(class, object), RuleId::RangeTyping, vec![f, g])
                    }
                    Axiom::ObjectPropertyDomain { prop: p, cls: class } if p == property => {
                        push(ca(class, subject), RuleId::DomainTyping, vec![f, g])
                    }
                    Axiom::EquivalentObjectProperties(set) if set.contains(property) => {
                        for q in set.iter().filter(|q| *q != property) {
                            push(pa(subject, q, object), RuleId::PropertyEquivalence, vec![f, g]);
                        }
                    }
                    Axiom::SubObjectPropertyOf { sub, sup } if sub == property => {
                        push(pa(subject, sup, object), RuleId::SubProperty, vec![f, g])
                    }
                    Axiom::SameIndividual(a, b) if same_as => {
                        for (x, y) in [(a, b), (b, a)] {
                            if subject == x {
                                push(pa(y, property, object), RuleId::SameIndividual, vec![f, g]);
                            }
                            if object == x {
                                push(pa(subject, property, y), RuleId::SameIndividual, vec![f, g]);
                            }
                        }
                    }
                    _ => {}
                },
                (Axiom::ClassAssertion { cls, ind }, _) => match g {
                    Axiom::SubClassOf { sub, sup } if sub == cls => push(ca(sup, ind), RuleId::SubClass, vec![f, g]),
                    Axiom::EquivalentClasses(set) if set.contains(cls) => {
                        for d in set.iter().filter(|d| *d != cls) {
                            push(ca(d, ind), RuleId::ClassEquivalence, vec![f, g]);
                        }
                    }
                    Axiom::SameIndividual(a, b) if same_as => {
                        for (x, y) in [(a, b), (b, a)] {
                            if ind == x {
                                push(ca(cls, y), RuleId::SameIndividual, vec![f, g]);
                            }
                        }
                    }
                    _ => {}
                },
                (Axiom::SameIndividual(a, b), Axiom::SameIndividual(c, d)) if same_as && f != g => {
                    for (x, y) in [(a, b), (b, a)] {
                        for (z, w) in [(c, d), (d, c)] {
                            if y == z && x != w {
                                push(same(x, w), RuleId::SameIndividual, vec![f, g]);
                            }
                        }
                    }
                }
                _ => {}
            }
        }
    }
    out
}

/// Applies every rule to everything known until nothing changes.
pub fn naive_closure(store: &OntologyStore, same_as: bool) -> NaiveClosure {
    let mut known: BTreeSet<Axiom> = store.axioms().cloned().collect();
    let mut inferred = BTreeSet::new();
    let mut traces: BTreeMap<Axiom, BTreeSet<Trace>> = BTreeMap::new();
    loop {
        let mut round: BTreeMap<Axiom, BTreeSet<Trace>> = BTreeMap::new();
        for (c, r, p) in one_step(&known, same_as) {
            if !known.contains(&c) {
                round.entry(c).or_default().insert((r, p.into_iter().collect()));
            }
        }
        if round.is_empty() {
            break;
        }
        for (c, t) in round {
            known.insert(c.clone());
            inferred.insert(c.clone());
            traces.insert(c, t);
        }
    }
    NaiveClosure { inferred, traces }
}

fn union_find(pairs: impl Iterator<Item = (Iri, Iri)>) -> BTreeMap<Iri, BTreeSet<Iri>> {
    let mut groups: BTreeMap<Iri, BTreeSet<Iri>> = BTreeMap::new();
    for (a, b) in pairs {
        let mut merged: BTreeSet<Iri> = BTreeSet::from([a.clone(), b.clone()]);
        for x in [&a, &b] {
            if let Some(g) = groups.get(x) {
                merged.extend(g.iter().cloned());
            }
        }
        for m in &merged {
            groups.insert(m.clone(), merged.clone());
        }
    }
    groups
}

/// Violations as (smallest cluster member, classA, classB, is_d1).
pub fn naive_violations(store: &OntologyStore) -> BTreeSet<(Iri, Iri, Iri, bool)> {
    let full = naive_closure(store, true);
    let plain = naive_closure(store, false);
    let all: Vec<&Axiom> = store.axioms().chain(full.inferred.iter()).collect();
    let types = |facts: &[&Axiom], i: &Iri, c: &Iri| facts.iter().any(|a| **a == ca(c, i));
    let plain_facts: Vec<&Axiom> = store.axioms().chain(plain.inferred.iter()).collect();

    let eq = union_find(store.axioms().flat_map(|ax| match ax {
        Axiom::EquivalentClasses(set) => {
            let v: Vec<&Iri> = set.iter().collect();
            v.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect()
        }
        _ => Vec::new(),
    }));
    let block = |c: &Iri| eq.get(c).cloned().unwrap_or_else(|| BTreeSet::from([c.clone()]));
    let mut pairs = BTreeSet::new();
    for ax in store.axioms() {
        if let Axiom::DisjointClasses(a, b) = ax {
            for x in block(a) {
                for y in block(b) {
                    pairs.insert(if x < y { (x.clone(), y) } else { (y, x.clone()) });
                }
            }
        }
    }

    let sames = union_find(all.iter().filter_map(|ax| match ax {
        Axiom::SameIndividual(a, b) => Some((a.clone(), b.clone())),
        _ => None,
    }));
    let mut out = BTreeSet::new();
    for ind in store.entities(EntityKind::NamedIndividual) {
        let cluster = sames.get(ind).cloned().unwrap_or_else(|| BTreeSet::from([ind.clone()]));
        let rep = cluster.iter().next().unwrap().clone();
        for (a, b) in &pairs {
            if cluster.iter().any(|m| types(&all, m, a) && types(&all, m, b)) {
                let d1 = cluster.iter().any(|m| types(&plain_facts, m, a) && types(&plain_facts, m, b));
                out.insert((rep.clone(), a.clone(), b.clone(), d1));
            }
        }
    }
    out
}

/// Query-graph triples of a closed axiom set.
pub fn triples(facts: &BTreeSet<Axiom>) -> Vec<(Iri, Iri, Iri)> {
    let rdf_type = Iri::new("http://www.w3.org/1999/02/22-rdf-syntax-ns#type").unwrap();
    let same_as = Iri::new("http://www.w3.org/2002/07/owl#sameAs").unwrap();
    let mut out = BTreeSet::new();
    for ax in facts {
        match ax {
            Axiom::ClassAssertion { cls, ind } => {
                out.insert((ind.clone(), rdf_type.clone(), cls.clone()));
            }
            Axiom::ObjectPropertyAssertion { subject, prop, object } => {
                out.insert((subject.clone(), prop.clone(), object.clone()));
            }
            Axiom::SameIndividual(a, b) => {
                out.insert((a.clone(), same_as.clone(), b.clone()));
                out.insert((b.clone(), same_as.clone(), a.clone()));
            }
            _ => {}
        }
    }
    out.into_iter().collect()
}

/// Nested-loop matching of the patterns in written order.
pub fn brute_force(query: &Query, triples: &[(Iri, Iri, Iri)]) -> ResultSet {
    fn bind(t: &PatternTerm, v: &Iri, b: &mut BTreeMap<String, Iri>) -> bool {
        match t {
            PatternTerm::Const(c) => c == v,
            PatternTerm::Var(n) => match b.get(n) {
                Some(x) => x == v,
                None => {
                    b.insert(n.clone(), v.clone());
                    true
                }
            },
        }
    }
    let mut solutions = vec![BTreeMap::new()];
    for p in &query.patterns {
        let mut next = Vec::new();
        for s in &solutions {
            for (ts, tp, to) in triples {
                let mut b = s.clone();
                if bind(&p.subject, ts, &mut b) && bind(&p.predicate, tp, &mut b) && bind(&p.object, to, &mut b) {
                    next.push(b);
                }
            }
        }
        solutions = next;
    }
    let rdf_type = Iri::new("http://www.w3.org/1999/02/22-rdf-syntax-ns#type").unwrap();
    let rows = solutions
        .into_iter()
        .filter(|b| {
            query
                .type_filters
                .iter()
                .all(|(v, c)| triples.iter().any(|(s, p, o)| Some(s) == b.get(v) && *p == rdf_type && o == c))
        })
        .map(|b| query.projected.iter().map(|v| Term::Iri(b[v].clone())).collect())
        .collect();
    ResultSet::new(query.projected.clone(), rows, query.distinct)
}

/// Per-kind tally of an interchange document, counting record tags.
pub fn tally_json(doc: &str) -> BTreeMap<String, usize> {
    let v: serde_json::Value = serde_json::from_str(doc).unwrap();
    let mut out = BTreeMap::new();
    for rec in v["axioms"].as_array().unwrap() {
        let kind = rec["kind"].as_str().unwrap().to_string();
        let key = if kind == "Declaration" {
            format!("Declaration/{}", rec["entityKind"].as_str().unwrap())
        } else {
            kind
        };
        *out.entry(key).or_insert(0) += 1;
    }
    out
}
