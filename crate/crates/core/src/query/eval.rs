use std::collections::{BTreeSet, HashMap, HashSet};

use super::{PatternTerm, Query, ResultSet, Term, TriplePattern};
use crate::ontology::{vocab, Iri};
use crate::reasoner::Materialization;

/// The triples a query sees: memberships as `rdf:type`, object property
/// assertions, and `owl:sameAs` in both directions, all taken from the
/// asserted and inferred axioms.
#[derive(Debug, Clone, Default)]
pub struct QueryGraph {
    triples: Vec<[Iri; 3]>,
    by_subject: HashMap<Iri, Vec<usize>>,
    by_predicate: HashMap<Iri, Vec<usize>>,
    by_object: HashMap<Iri, Vec<usize>>,
    types: HashSet<(Iri, Iri)>,
}

impl QueryGraph {
    pub fn from_materialization(mat: &Materialization) -> Self {
        let rdf_type = vocab::rdf_type();
        let same_as = vocab::owl_same_as();
        let mut set: BTreeSet<[Iri; 3]> = BTreeSet::new();
        for (c, i) in mat.class_assertions() {
            set.insert([i.clone(), rdf_type.clone(), c.clone()]);
        }
        for (s, p, o) in mat.property_assertions() {
            set.insert([s.clone(), p.clone(), o.clone()]);
        }
        for (a, b) in mat.same_individuals() {
            set.insert([a.clone(), same_as.clone(), b.clone()]);
            set.insert([b.clone(), same_as.clone(), a.clone()]);
        }
        Self::from_triples(set)
    }

    pub fn from_triples(triples: impl IntoIterator<Item = [Iri; 3]>) -> Self {
        let mut g = QueryGraph::default();
        let rdf_type = vocab::rdf_type();
        let unique: BTreeSet<[Iri; 3]> = triples.into_iter().collect();
        for (n, t) in unique.into_iter().enumerate() {
            g.by_subject.entry(t[0].clone()).or_default().push(n);
            g.by_predicate.entry(t[1].clone()).or_default().push(n);
            g.by_object.entry(t[2].clone()).or_default().push(n);
            if t[1] == rdf_type {
                g.types.insert((t[0].clone(), t[2].clone()));
            }
            g.triples.push(t);
        }
        g
    }

    pub fn triples(&self) -> &[[Iri; 3]] {
        &self.triples
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn has_type(&self, ind: &Iri, class: &Iri) -> bool {
        self.types.contains(&(ind.clone(), class.clone()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum JoinOrder {
    /// At each step, extend with the pattern that has the fewest candidates.
    #[default]
    Selective,
    /// Patterns in the order written.
    LeftToRight,
}

struct Search<'a> {
    graph: &'a QueryGraph,
    patterns: Vec<[Slot; 3]>,
    filters: Vec<(usize, Iri)>,
    projected: Vec<usize>,
    order: JoinOrder,
    rows: Vec<Vec<Term>>,
}

#[derive(Clone)]
enum Slot {
    Var(usize),
    Const(Iri),
}

impl Search<'_> {
    fn value<'b>(slot: &'b Slot, binding: &'b [Option<Iri>]) -> Option<&'b Iri> {
        match slot {
            Slot::Const(i) => Some(i),
            Slot::Var(v) => binding[*v].as_ref(),
        }
    }

    fn candidates(&self, p: &[Slot; 3], binding: &[Option<Iri>]) -> Vec<usize> {
        let indexes = [&self.graph.by_subject, &self.graph.by_predicate, &self.graph.by_object];
        let mut best: Option<&[usize]> = None;
        for (slot, index) in p.iter().zip(indexes) {
            if let Some(iri) = Self::value(slot, binding) {
                let list = index.get(iri).map(Vec::as_slice).unwrap_or(&[]);
                if best.is_none_or(|b| list.len() < b.len()) {
                    best = Some(list);
                }
            }
        }
        match best {
            Some(list) => list.to_vec(),
            None => (0..self.graph.triples.len()).collect(),
        }
    }

    /// Binds `p` against triple `t`; returns the newly bound variables, or
    /// `None` on mismatch (bindings made so far are undone).
    fn unify(p: &[Slot; 3], t: &[Iri; 3], binding: &mut [Option<Iri>]) -> Option<Vec<usize>> {
        let mut bound = Vec::new();
        for (slot, iri) in p.iter().zip(t) {
            let ok = match slot {
                Slot::Const(c) => c == iri,
                Slot::Var(v) => match &binding[*v] {
                    Some(b) => b == iri,
                    None => {
                        binding[*v] = Some(iri.clone());
                        bound.push(*v);
                        true
                    }
                },
            };
            if !ok {
                for v in bound {
                    binding[v] = None;
                }
                return None;
            }
        }
        Some(bound)
    }

    fn run(&mut self, remaining: &mut Vec<usize>, binding: &mut Vec<Option<Iri>>) {
        if remaining.is_empty() {
            let pass = self.filters.iter().all(|(v, c)| {
                binding[*v].as_ref().is_some_and(|i| self.graph.has_type(i, c))
            });
            if pass {
                let row = self
                    .projected
                    .iter()
                    .map(|v| Term::Iri(binding[*v].clone().expect("projected variables are bound")))
                    .collect();
                self.rows.push(row);
            }
            return;
        }
        let (pick, cands) = match self.order {
            JoinOrder::LeftToRight => (0, self.candidates(&self.patterns[remaining[0]], binding)),
            JoinOrder::Selective => remaining
                .iter()
                .enumerate()
                .map(|(k, &pi)| (k, self.candidates(&self.patterns[pi], binding)))
                .min_by_key(|(_, c)| c.len())
                .expect("remaining is non-empty"),
        };
        let pi = remaining.remove(pick);
        let pattern = self.patterns[pi].clone();
        for t in cands {
            let triple = self.graph.triples[t].clone();
            if let Some(bound) = Self::unify(&pattern, &triple, binding) {
                self.run(remaining, binding);
                for v in bound {
                    binding[v] = None;
                }
            }
        }
        remaining.insert(pick, pi);
    }
}

/// Evaluates `query` on a prepared graph.
pub fn evaluate_with(query: &Query, graph: &QueryGraph, order: JoinOrder) -> ResultSet {
    let vars = query.variables();
    let index = |v: &str| vars.iter().position(|w| w == v).expect("validated variable");
    let slot = |t: &PatternTerm| match t {
        PatternTerm::Var(v) => Slot::Var(index(v)),
        PatternTerm::Const(i) => Slot::Const(i.clone()),
    };
    let patterns = query
        .patterns
        .iter()
        .map(|p: &TriplePattern| [slot(&p.subject), slot(&p.predicate), slot(&p.object)])
        .collect::<Vec<_>>();
    let mut search = Search {
        graph,
        filters: query.type_filters.iter().map(|(v, c)| (index(v), c.clone())).collect(),
        projected: query.projected.iter().map(|v| index(v)).collect(),
        patterns,
        order,
        rows: Vec::new(),
    };
    let mut remaining: Vec<usize> = (0..query.patterns.len()).collect();
    let mut binding = vec![None; vars.len()];
    search.run(&mut remaining, &mut binding);
    ResultSet::new(query.projected.clone(), search.rows, query.distinct)
}

/// Evaluates `query` over the asserted and inferred facts of `mat`.
pub fn evaluate(query: &Query, mat: &Materialization) -> ResultSet {
    evaluate_with(query, &QueryGraph::from_materialization(mat), JoinOrder::Selective)
}
