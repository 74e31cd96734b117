//! Semi-naive evaluation. Facts are interned; every round joins only the
//! facts first derived in the previous round against everything known.
//! A fact's traces are all derivations found in the round it first
//! appears, so every premise was derived in an earlier round.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use super::{check_consistency, InferenceTrace, Materialization, ReasonerError, RuleId};
use crate::ontology::{Axiom, Iri, OntologyStore};

pub const DEFAULT_FACT_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReasonerConfig {
    /// Maximum number of derived facts before giving up.
    pub fact_limit: usize,
    /// Whether SameIndividual propagates types and relations.
    pub same_as: bool,
}

impl Default for ReasonerConfig {
    fn default() -> Self {
        ReasonerConfig { fact_limit: DEFAULT_FACT_LIMIT, same_as: true }
    }
}

type Id = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Fact {
    Type(Id, Id),
    Rel(Id, Id, Id),
    /// Stored with the smaller id first.
    Same(Id, Id),
}

fn same(a: Id, b: Id) -> Fact {
    if a <= b {
        Fact::Same(a, b)
    } else {
        Fact::Same(b, a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Premise {
    Fact(Fact),
    Schema(usize),
}

type Rules = HashMap<Id, Vec<(Id, usize)>>;
type Derivations = Vec<(RuleId, [Premise; 2])>;
type Closure = (BTreeSet<Axiom>, BTreeMap<Axiom, Vec<InferenceTrace>>);

#[derive(Default)]
struct Schema {
    axioms: Vec<Axiom>,
    range: Rules,
    domain: Rules,
    sub_class: Rules,
    class_eq: Rules,
    prop_eq: Rules,
    sub_prop: Rules,
}

struct Engine {
    iris: Vec<Iri>,
    ids: HashMap<Iri, Id>,
    schema: Schema,
    known: HashSet<Fact>,
    types_of: HashMap<Id, Vec<Id>>,
    rels_from: HashMap<Id, Vec<(Id, Id)>>,
    rels_to: HashMap<Id, Vec<(Id, Id)>>,
    same_as: HashMap<Id, Vec<Id>>,
    same_as_enabled: bool,
}

impl Engine {
    fn new(store: &OntologyStore, same_as_enabled: bool) -> Self {
        let mut iris: BTreeSet<Iri> = BTreeSet::new();
        for ax in store.axioms() {
            for (iri, _) in ax.signature() {
                iris.insert(iri.clone());
            }
        }
        let iris: Vec<Iri> = iris.into_iter().collect();
        let ids = iris.iter().enumerate().map(|(i, iri)| (iri.clone(), i as Id)).collect();
        let mut engine = Engine {
            iris,
            ids,
            schema: Schema::default(),
            known: HashSet::new(),
            types_of: HashMap::new(),
            rels_from: HashMap::new(),
            rels_to: HashMap::new(),
            same_as: HashMap::new(),
            same_as_enabled,
        };
        engine.load_schema(store);
        engine
    }

    fn id(&self, iri: &Iri) -> Id {
        self.ids[iri]
    }

    fn load_schema(&mut self, store: &OntologyStore) {
        let mut schema = Schema::default();
        for ax in store.axioms() {
            let idx = schema.axioms.len();
            let used = match ax {
                Axiom::ObjectPropertyRange { prop, cls } => {
                    schema.range.entry(self.id(prop)).or_default().push((self.id(cls), idx));
                    true
                }
                Axiom::ObjectPropertyDomain { prop, cls } => {
                    schema.domain.entry(self.id(prop)).or_default().push((self.id(cls), idx));
                    true
                }
                Axiom::SubClassOf { sub, sup } => {
                    schema.sub_class.entry(self.id(sub)).or_default().push((self.id(sup), idx));
                    true
                }
                Axiom::SubObjectPropertyOf { sub, sup } => {
                    schema.sub_prop.entry(self.id(sub)).or_default().push((self.id(sup), idx));
                    true
                }
                Axiom::EquivalentClasses(set) | Axiom::EquivalentObjectProperties(set) => {
                    let rules = if matches!(ax, Axiom::EquivalentClasses(_)) {
                        &mut schema.class_eq
                    } else {
                        &mut schema.prop_eq
                    };
                    for a in set {
                        for b in set.iter().filter(|b| *b != a) {
                            rules.entry(self.id(a)).or_default().push((self.id(b), idx));
                        }
                    }
                    true
                }
                _ => false,
            };
            if used {
                schema.axioms.push(ax.clone());
            }
        }
        self.schema = schema;
    }

    fn base_fact(&self, ax: &Axiom) -> Option<Fact> {
        match ax {
            Axiom::ClassAssertion { cls, ind } => Some(Fact::Type(self.id(cls), self.id(ind))),
            Axiom::ObjectPropertyAssertion { subject, prop, object } => {
                Some(Fact::Rel(self.id(subject), self.id(prop), self.id(object)))
            }
            Axiom::SameIndividual(a, b) if self.same_as_enabled => Some(same(self.id(a), self.id(b))),
            _ => None,
        }
    }

    fn insert(&mut self, f: Fact) {
        self.known.insert(f);
        match f {
            Fact::Type(c, x) => self.types_of.entry(x).or_default().push(c),
            Fact::Rel(s, p, o) => {
                self.rels_from.entry(s).or_default().push((p, o));
                self.rels_to.entry(o).or_default().push((s, p));
            }
            Fact::Same(a, b) => {
                self.same_as.entry(a).or_default().push(b);
                self.same_as.entry(b).or_default().push(a);
            }
        }
    }

    /// Every rule instance that uses `d` as a premise and otherwise only
    /// known facts.
    fn fire(&self, d: Fact, out: &mut Vec<(Fact, RuleId, [Premise; 2])>) {
        let s = &self.schema;
        let f = Premise::Fact(d);
        let rules = |map: &Rules, key: Id| map.get(&key).map(Vec::as_slice).unwrap_or(&[]).to_vec();
        match d {
            Fact::Type(c, x) => {
                for (sup, ax) in rules(&s.sub_class, c) {
                    out.push((Fact::Type(sup, x), RuleId::SubClass, [f, Premise::Schema(ax)]));
                }
                for (eq, ax) in rules(&s.class_eq, c) {
                    out.push((Fact::Type(eq, x), RuleId::ClassEquivalence, [f, Premise::Schema(ax)]));
                }
                if self.same_as_enabled {
                    for &y in self.same_as.get(&x).into_iter().flatten() {
                        out.push((Fact::Type(c, y), RuleId::SameIndividual, [f, Premise::Fact(same(x, y))]));
                    }
                }
            }
            Fact::Rel(a, p, b) => {
                for (cls, ax) in rules(&s.range, p) {
                    out.push((Fact::Type(cls, b), RuleId::RangeTyping, [f, Premise::Schema(ax)]));
                }
                for (cls, ax) in rules(&s.domain, p) {
                    out.push((Fact::Type(cls, a), RuleId::DomainTyping, [f, Premise::Schema(ax)]));
                }
                for (q, ax) in rules(&s.prop_eq, p) {
                    out.push((Fact::Rel(a, q, b), RuleId::PropertyEquivalence, [f, Premise::Schema(ax)]));
                }
                for (q, ax) in rules(&s.sub_prop, p) {
                    out.push((Fact::Rel(a, q, b), RuleId::SubProperty, [f, Premise::Schema(ax)]));
                }
                if self.same_as_enabled {
                    for &t in self.same_as.get(&a).into_iter().flatten() {
                        out.push((Fact::Rel(t, p, b), RuleId::SameIndividual, [f, Premise::Fact(same(a, t))]));
                    }
                    for &t in self.same_as.get(&b).into_iter().flatten() {
                        out.push((Fact::Rel(a, p, t), RuleId::SameIndividual, [f, Premise::Fact(same(b, t))]));
                    }
                }
            }
            Fact::Same(a, b) => {
                for (x, y) in [(a, b), (b, a)] {
                    for &c in self.types_of.get(&x).into_iter().flatten() {
                        out.push((Fact::Type(c, y), RuleId::SameIndividual, [Premise::Fact(Fact::Type(c, x)), f]));
                    }
                    for &(p, o) in self.rels_from.get(&x).into_iter().flatten() {
                        out.push((Fact::Rel(y, p, o), RuleId::SameIndividual, [Premise::Fact(Fact::Rel(x, p, o)), f]));
                    }
                    for &(s_, p) in self.rels_to.get(&x).into_iter().flatten() {
                        out.push((Fact::Rel(s_, p, y), RuleId::SameIndividual, [Premise::Fact(Fact::Rel(s_, p, x)), f]));
                    }
                    for &z in self.same_as.get(&x).into_iter().flatten() {
                        if z != y {
                            out.push((same(y, z), RuleId::SameIndividual, [f, Premise::Fact(same(x, z))]));
                        }
                    }
                }
            }
        }
    }

    fn fact_axiom(&self, f: Fact) -> Axiom {
        let i = |id: Id| self.iris[id as usize].clone();
        match f {
            Fact::Type(c, x) => Axiom::class_assertion(i(c), i(x)),
            Fact::Rel(s, p, o) => Axiom::property_assertion(i(s), i(p), i(o)),
            Fact::Same(a, b) => Axiom::same_individual(i(a), i(b)),
        }
    }

    fn premise_axiom(&self, p: Premise) -> Axiom {
        match p {
            Premise::Fact(f) => self.fact_axiom(f),
            Premise::Schema(i) => self.schema.axioms[i].clone(),
        }
    }
}

/// Derived axioms and their traces, without consistency checking.
pub(crate) fn closure(
    store: &OntologyStore,
    cfg: ReasonerConfig,
) -> Result<Closure, ReasonerError> {
    let mut engine = Engine::new(store, cfg.same_as);
    let mut delta: Vec<Fact> = Vec::new();
    for ax in store.axioms() {
        if let Some(f) = engine.base_fact(ax) {
            if !engine.known.contains(&f) {
                engine.insert(f);
                delta.push(f);
            }
        }
    }

    let mut derived: Vec<(Fact, Derivations)> = Vec::new();
    let mut candidates = Vec::new();
    while !delta.is_empty() {
        let mut pending: HashMap<Fact, Derivations> = HashMap::new();
        for &d in &delta {
            candidates.clear();
            engine.fire(d, &mut candidates);
            for &(concl, rule, premises) in &candidates {
                if engine.known.contains(&concl) {
                    continue;
                }
                let traces = pending.entry(concl).or_default();
                let dup = traces.iter().any(|(r, p)| {
                    *r == rule && (*p == premises || (p[0] == premises[1] && p[1] == premises[0]))
                });
                if !dup {
                    traces.push((rule, premises));
                }
            }
        }
        if derived.len() + pending.len() > cfg.fact_limit {
            return Err(ReasonerError::IterationLimitExceeded { limit: cfg.fact_limit });
        }
        delta = pending.keys().copied().collect();
        for &f in &delta {
            engine.insert(f);
        }
        derived.extend(pending);
    }

    let mut inferred = BTreeSet::new();
    let mut traces = BTreeMap::new();
    for (fact, ts) in derived {
        let conclusion = engine.fact_axiom(fact);
        let mut list: Vec<InferenceTrace> = ts
            .into_iter()
            .map(|(rule, premises)| InferenceTrace {
                conclusion: conclusion.clone(),
                rule,
                premises: {
                    let mut ps: Vec<Axiom> = premises.iter().map(|p| engine.premise_axiom(*p)).collect();
                    // Transitivity joins two sameAs facts; order them canonically.
                    if ps.iter().all(|p| matches!(p, Axiom::SameIndividual(..))) {
                        ps.sort();
                    }
                    ps
                },
            })
            .collect();
        list.sort();
        inferred.insert(conclusion.clone());
        traces.insert(conclusion, list);
    }
    Ok((inferred, traces))
}

pub fn materialize_with(store: &OntologyStore, cfg: ReasonerConfig) -> Result<Materialization, ReasonerError> {
    store.validate()?;
    let (inferred, traces) = closure(store, cfg)?;
    let mut mat = Materialization {
        base: store.clone(),
        inferred,
        traces,
        consistent: true,
        violations: Vec::new(),
    };
    mat.violations = check_consistency(&mat);
    mat.consistent = mat.violations.is_empty();
    Ok(mat)
}

/// Closes `store` under the inference rules and collects disjointness
/// violations.
pub fn materialize(store: &OntologyStore) -> Result<Materialization, ReasonerError> {
    materialize_with(store, ReasonerConfig::default())
}
