use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{evaluate, parse_query, QueryError, ResultSet, Term};
use crate::ontology::{seed, EntityKind, Iri, OntologyStore};
use crate::pipeline::ConceptKind;
use crate::reasoner::Materialization;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CannedQuery {
    PrinciplesByFramework,
    DescribeConcept,
    ScenariosFor,
    UniqueConcepts,
}

impl CannedQuery {
    pub const ALL: [CannedQuery; 4] = [
        CannedQuery::PrinciplesByFramework,
        CannedQuery::DescribeConcept,
        CannedQuery::ScenariosFor,
        CannedQuery::UniqueConcepts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CannedQuery::PrinciplesByFramework => "principles_by_framework",
            CannedQuery::DescribeConcept => "describe_concept",
            CannedQuery::ScenariosFor => "scenarios_for",
            CannedQuery::UniqueConcepts => "unique_concepts",
        }
    }

    pub fn needs_argument(self) -> bool {
        matches!(self, CannedQuery::DescribeConcept | CannedQuery::ScenariosFor)
    }
}

impl fmt::Display for CannedQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CannedQuery {
    type Err = QueryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CannedQuery::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| QueryError::UnknownCannedQuery(s.to_string()))
    }
}

/// Query texts equal to the canned queries that the pattern subset can
/// express. For `principles_by_framework` the argument only filters rows,
/// so the text is the unfiltered one. `scenarios_for` is the union of the texts for the
/// `aieo:scenario` and `aieo:example` properties; the other members of the
/// scenario property block are covered by property equivalence.
pub fn reference_query(query: CannedQuery, arg: Option<&Iri>) -> Vec<String> {
    match (query, arg) {
        (CannedQuery::PrinciplesByFramework, _) => vec![
            "SELECT DISTINCT ?framework ?principle WHERE { ?framework a aieo:Framework . ?framework aieo:principle ?principle }".into(),
        ],
        (CannedQuery::ScenariosFor, Some(c)) => ["scenario", "example"]
            .iter()
            .map(|p| format!("SELECT DISTINCT ?item WHERE {{ <{c}> aieo:{p} ?item }}"))
            .collect(),
        _ => Vec::new(),
    }
}

fn require_individual(store: &OntologyStore, iri: &Iri) -> Result<(), QueryError> {
    if store.is_declared(iri, EntityKind::NamedIndividual) {
        Ok(())
    } else {
        Err(QueryError::UnknownConcept(iri.clone()))
    }
}

/// `iri` and every individual asserted or inferred to be the same.
fn peers(mat: &Materialization, iri: &Iri) -> BTreeSet<Iri> {
    let mut out = BTreeSet::from([iri.clone()]);
    for (a, b) in mat.same_individuals() {
        if a == iri {
            out.insert(b.clone());
        } else if b == iri {
            out.insert(a.clone());
        }
    }
    out
}

/// Frameworks with an asserted link to `concept` through the given kinds.
fn asserted_frameworks(store: &OntologyStore, concept: &Iri, kinds: &[ConceptKind]) -> BTreeSet<Iri> {
    let props: Vec<Iri> = kinds.iter().map(|k| k.linking_property()).collect();
    store
        .property_assertions()
        .filter(|(_, p, o)| *o == concept && props.contains(p))
        .map(|(s, _, _)| s.clone())
        .collect()
}

fn header(vars: &[&str]) -> Vec<String> {
    vars.iter().map(|v| v.to_string()).collect()
}

/// Runs one of the four federated questions.
pub fn canned_query(
    query: CannedQuery,
    arg: Option<&Iri>,
    mat: &Materialization,
) -> Result<ResultSet, QueryError> {
    if query.needs_argument() && arg.is_none() {
        return Err(QueryError::MissingArgument(query.name().to_string()));
    }
    if let Some(a) = arg {
        require_individual(&mat.base, a)?;
    }
    match query {
        CannedQuery::PrinciplesByFramework => {
            let q = parse_query(&reference_query(query, None)[0]).expect("reference query parses");
            let mut rs = evaluate(&q, mat);
            if let Some(f) = arg {
                rs.rows.retain(|r| r[0].as_iri() == Some(f));
            }
            Ok(rs)
        }
        CannedQuery::DescribeConcept => {
            let concept = arg.expect("checked above");
            let store = &mat.base;
            let props = [seed::SHORT_DESCRIPTION, seed::REFERENCE].map(Iri::aieo);
            let mut rows = Vec::new();
            for member in peers(mat, concept) {
                for framework in asserted_frameworks(store, &member, &ConceptKind::ALL) {
                    for p in &props {
                        for v in store.annotations(&member, p) {
                            rows.push(vec![
                                Term::Iri(member.clone()),
                                Term::Iri(framework.clone()),
                                Term::Iri(p.clone()),
                                Term::Literal(v.clone()),
                            ]);
                        }
                    }
                }
            }
            Ok(ResultSet::new(header(&["concept", "framework", "property", "value"]), rows, true))
        }
        CannedQuery::ScenariosFor => {
            let concept = arg.expect("checked above");
            let props: Vec<Iri> = ["scenario", "useCase", "application", "example"].map(Iri::aieo).to_vec();
            let members = peers(mat, concept);
            let rows = mat
                .property_assertions()
                .filter(|(s, p, _)| members.contains(*s) && props.contains(p))
                .map(|(_, _, o)| vec![Term::Iri(o.clone())])
                .collect();
            Ok(ResultSet::new(header(&["item"]), rows, true))
        }
        CannedQuery::UniqueConcepts => {
            let store = &mat.base;
            let kinds = [ConceptKind::Principle, ConceptKind::Requirement];
            let framework_class = Iri::aieo(seed::FRAMEWORK);
            let frameworks: BTreeSet<&Iri> = store
                .class_assertions()
                .filter(|(c, _)| **c == framework_class)
                .map(|(_, i)| i)
                .filter(|f| arg.is_none_or(|a| a == *f))
                .collect();
            let mut rows = Vec::new();
            for f in frameworks {
                let props: Vec<Iri> = kinds.iter().map(|k| k.linking_property()).collect();
                for (_, p, c) in store.property_assertions().filter(|(s, _, _)| *s == f) {
                    if !props.contains(p) {
                        continue;
                    }
                    let shared = peers(mat, c)
                        .iter()
                        .any(|m| asserted_frameworks(store, m, &ConceptKind::ALL).iter().any(|g| g != f));
                    if !shared {
                        rows.push(vec![Term::Iri(f.clone()), Term::Iri(c.clone())]);
                    }
                }
            }
            Ok(ResultSet::new(header(&["framework", "concept"]), rows, true))
        }
    }
}
