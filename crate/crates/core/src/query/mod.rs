//! Basic graph pattern queries over a materialization, and the canned
//! questions over the federated view.

mod canned;
mod eval;
mod parser;
mod results;

use std::collections::BTreeSet;
use std::fmt;

use crate::ontology::{AnnotationValue, Iri};
use crate::serialization::ParseDiagnostic;

pub use canned::{canned_query, reference_query, CannedQuery};
pub use eval::{evaluate, evaluate_with, JoinOrder, QueryGraph};
pub use parser::parse_query;
pub use results::{to_json, to_tsv};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PatternTerm {
    Var(String),
    Const(Iri),
}

impl PatternTerm {
    pub fn var(&self) -> Option<&str> {
        match self {
            PatternTerm::Var(v) => Some(v),
            PatternTerm::Const(_) => None,
        }
    }
}

impl fmt::Display for PatternTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternTerm::Var(v) => write!(f, "?{v}"),
            PatternTerm::Const(i) => write!(f, "<{i}>"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriplePattern {
    pub subject: PatternTerm,
    pub predicate: PatternTerm,
    pub object: PatternTerm,
}

impl TriplePattern {
    pub fn new(subject: PatternTerm, predicate: PatternTerm, object: PatternTerm) -> Self {
        TriplePattern { subject, predicate, object }
    }

    pub fn terms(&self) -> [&PatternTerm; 3] {
        [&self.subject, &self.predicate, &self.object]
    }

    pub fn vars(&self) -> impl Iterator<Item = &str> + '_ {
        self.terms().into_iter().filter_map(PatternTerm::var)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    pub projected: Vec<String>,
    pub patterns: Vec<TriplePattern>,
    /// `(variable, class)`: the variable must be bound to a member of the class.
    pub type_filters: Vec<(String, Iri)>,
    pub distinct: bool,
}

impl Query {
    /// Variables in order of first occurrence.
    pub fn variables(&self) -> Vec<String> {
        let mut seen = BTreeSet::new();
        self.patterns
            .iter()
            .flat_map(TriplePattern::vars)
            .filter(|v| seen.insert(v.to_string()))
            .map(str::to_string)
            .collect()
    }

    pub fn validate(&self) -> Result<(), QueryError> {
        let vars: BTreeSet<String> = self.variables().into_iter().collect();
        for v in self.projected.iter().chain(self.type_filters.iter().map(|(v, _)| v)) {
            if !vars.contains(v) {
                return Err(QueryError::InvalidQuery(format!("?{v} does not occur in any pattern")));
            }
        }
        if self.patterns.is_empty() {
            return Err(QueryError::InvalidQuery("no triple patterns".into()));
        }
        Ok(())
    }

    /// Patterns none of whose variables are projected or shared with
    /// another pattern; each multiplies the result by its match count.
    pub fn lint(&self) -> Vec<String> {
        let mut warnings = Vec::new();
        for (i, p) in self.patterns.iter().enumerate() {
            let vars: Vec<&str> = p.vars().collect();
            if vars.is_empty() {
                continue;
            }
            let connected = vars.iter().any(|v| {
                self.projected.iter().any(|q| q == v)
                    || self.patterns.iter().enumerate().any(|(j, o)| j != i && o.vars().any(|w| w == *v))
            });
            if !connected {
                warnings.push(format!(
                    "pattern {} ({} {} {}) shares no variable with the rest of the query",
                    i + 1,
                    p.subject,
                    p.predicate,
                    p.object
                ));
            }
        }
        warnings
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Iri(Iri),
    Literal(AnnotationValue),
}

impl Term {
    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(i) => Some(i),
            Term::Literal(_) => None,
        }
    }
}

/// Variable header plus rows in sorted order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultSet {
    pub variables: Vec<String>,
    pub rows: Vec<Vec<Term>>,
}

impl ResultSet {
    pub fn new(variables: Vec<String>, mut rows: Vec<Vec<Term>>, distinct: bool) -> Self {
        rows.sort();
        if distinct {
            rows.dedup();
        }
        ResultSet { variables, rows }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Values of one column, in row order.
    pub fn column(&self, var: &str) -> Vec<&Term> {
        match self.variables.iter().position(|v| v == var) {
            Some(i) => self.rows.iter().map(|r| &r[i]).collect(),
            None => Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QueryError {
    #[error("syntax error at {0}")]
    Syntax(ParseDiagnostic),
    #[error("unsupported feature at {0}")]
    UnsupportedFeature(ParseDiagnostic),
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("unknown canned query `{0}`")]
    UnknownCannedQuery(String),
    #[error("canned query `{0}` needs an argument")]
    MissingArgument(String),
    #[error("{0} is not an individual of the store")]
    UnknownConcept(Iri),
}
