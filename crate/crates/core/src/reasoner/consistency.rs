use std::collections::{BTreeMap, BTreeSet};

use super::engine::closure;
use super::{
    equivalence_classes, explain, ConsistencyViolation, EquivalenceKind, Materialization,
    ReasonerConfig, RuleId,
};
use crate::ontology::{Axiom, Iri, OntologyStore};

/// Asserted disjoint pairs, expanded through class equivalence.
fn disjoint_pairs(store: &OntologyStore) -> BTreeSet<(Iri, Iri)> {
    let blocks = equivalence_classes(store, EquivalenceKind::Class);
    let block_of = |c: &Iri| -> Vec<Iri> {
        blocks
            .iter()
            .find(|b| b.contains(c))
            .map(|b| b.iter().cloned().collect())
            .unwrap_or_else(|| vec![c.clone()])
    };
    let mut pairs = BTreeSet::new();
    for ax in store.axioms() {
        if let Axiom::DisjointClasses(a, b) = ax {
            for x in block_of(a) {
                for y in block_of(b) {
                    pairs.insert(if x <= y { (x.clone(), y) } else { (y, x.clone()) });
                }
            }
        }
    }
    pairs
}

/// sameAs clusters over the materialization, as a map from each
/// individual to its cluster (singletons omitted).
fn clusters(mat: &Materialization) -> BTreeMap<Iri, BTreeSet<Iri>> {
    let mut out: BTreeMap<Iri, BTreeSet<Iri>> = BTreeMap::new();
    for (a, b) in mat.same_individuals() {
        for (x, y) in [(a, b), (b, a)] {
            out.entry(x.clone()).or_insert_with(|| BTreeSet::from([x.clone()])).insert(y.clone());
        }
    }
    out
}

/// One violation per sameAs cluster and disjoint pair whose memberships are
/// both in the materialization. The clash is D1 when some member has both
/// memberships without sameAs propagation, D2 otherwise.
pub fn check_consistency(mat: &Materialization) -> Vec<ConsistencyViolation> {
    let pairs = disjoint_pairs(&mat.base);
    if pairs.is_empty() {
        return Vec::new();
    }
    let types: BTreeSet<(&Iri, &Iri)> = mat.class_assertions().map(|(c, i)| (i, c)).collect();
    let has_same = mat.base.axioms().any(|ax| matches!(ax, Axiom::SameIndividual(..)));
    let plain: BTreeSet<(Iri, Iri)> = if has_same {
        let cfg = ReasonerConfig { same_as: false, ..ReasonerConfig::default() };
        let (inferred, _) = closure(&mat.base, cfg).expect("sameAs-free closure is no larger");
        mat.base
            .axioms()
            .chain(inferred.iter())
            .filter_map(|ax| match ax {
                Axiom::ClassAssertion { cls, ind } => Some((ind.clone(), cls.clone())),
                _ => None,
            })
            .collect()
    } else {
        types.iter().map(|(i, c)| ((*i).clone(), (*c).clone())).collect()
    };
    let clusters = clusters(mat);

    let individuals: BTreeSet<&Iri> = types.iter().map(|(i, _)| *i).collect();
    let mut seen: BTreeSet<(Iri, Iri, Iri)> = BTreeSet::new();
    let mut out = Vec::new();
    for ind in individuals {
        let cluster: BTreeSet<Iri> = clusters.get(ind).cloned().unwrap_or_else(|| BTreeSet::from([ind.clone()]));
        let rep = cluster.iter().next().expect("cluster contains ind").clone();
        for (a, b) in &pairs {
            if !(types.contains(&(ind, a)) && types.contains(&(ind, b))) {
                continue;
            }
            if !seen.insert((rep.clone(), a.clone(), b.clone())) {
                continue;
            }
            let direct = cluster
                .iter()
                .find(|m| plain.contains(&((*m).clone(), a.clone())) && plain.contains(&((*m).clone(), b.clone())));
            let (individual, rule) = match direct {
                Some(m) => (m.clone(), RuleId::DisjointTyping),
                None => (rep.clone(), RuleId::SameAsDisjoint),
            };
            let mut traces = Vec::new();
            for c in [a, b] {
                let fact = Axiom::class_assertion(c.clone(), individual.clone());
                traces.extend(explain(mat, &fact).expect("membership is materialized"));
            }
            out.push(ConsistencyViolation {
                same_as: cluster.iter().filter(|m| **m != individual).cloned().collect(),
                individual,
                class_a: a.clone(),
                class_b: b.clone(),
                rule,
                traces,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ontology::{seed, seed_aieo_schema, EntityKind};
    use crate::reasoner::materialize;

    fn a(local: &str) -> Iri {
        Iri::aieo(local)
    }

    fn store(types: &[(&str, &str)], same: &[(&str, &str)]) -> OntologyStore {
        let mut s = seed_aieo_schema();
        for (_, i) in types {
            s.declare(a(i), EntityKind::NamedIndividual).unwrap();
        }
        for (x, y) in same {
            s.declare(a(x), EntityKind::NamedIndividual).unwrap();
            s.declare(a(y), EntityKind::NamedIndividual).unwrap();
            s.add_axiom(Axiom::same_individual(a(x), a(y))).unwrap();
        }
        for (c, i) in types {
            s.add_axiom(Axiom::class_assertion(a(c), a(i))).unwrap();
        }
        s
    }

    #[test]
    fn framework_and_principle_clash_once() {
        let m = materialize(&store(&[(seed::FRAMEWORK, "x"), (seed::PRINCIPLE, "x")], &[])).unwrap();
        assert_eq!(m.violations.len(), 1);
        let v = &m.violations[0];
        assert_eq!((&v.individual, v.rule), (&a("x"), RuleId::DisjointTyping));
        assert_eq!((&v.class_a, &v.class_b), (&a("Framework"), &a("Principle")));
        assert!(!m.consistent);
    }

    #[test]
    fn principle_and_requirement_coexist() {
        let m = materialize(&store(&[(seed::PRINCIPLE, "x"), (seed::REQUIREMENT, "x")], &[])).unwrap();
        assert!(m.violations.is_empty());
    }

    #[test]
    fn merge_clash_is_d2() {
        let m = materialize(&store(&[(seed::FRAMEWORK, "a"), (seed::AI_DIMENSION, "b")], &[("a", "b")])).unwrap();
        assert_eq!(m.violations.len(), 1, "{:?}", m.violations);
        assert_eq!(m.violations[0].rule, RuleId::SameAsDisjoint);
        assert_eq!(m.violations[0].same_as, vec![a("b")]);
        assert_eq!(m.violations[0].traces.len(), 1);
    }

    #[test]
    fn direct_clash_inside_cluster_stays_d1() {
        let m = materialize(&store(
            &[(seed::FRAMEWORK, "b"), (seed::PRINCIPLE, "b")],
            &[("a", "b")],
        ))
        .unwrap();
        assert_eq!(m.violations.len(), 1);
        assert_eq!(m.violations[0].rule, RuleId::DisjointTyping);
        assert_eq!(m.violations[0].individual, a("b"));
    }
}
