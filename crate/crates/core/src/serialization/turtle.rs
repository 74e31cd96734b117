//! A Turtle subset: `@prefix`/`PREFIX` directives, IRIs and prefixed names,
//! the `a` shorthand, `;` and `,` lists, plain and language-tagged string
//! literals. Blank nodes, collections, typed and numeric literals and
//! `@base` are rejected as unsupported.

use std::collections::{BTreeMap, BTreeSet};

use super::lexer::{Lexer, Pos, Tok, Token};
use super::{ParseDiagnostic, ParseError};
use crate::ontology::{
    vocab, AnnotationValue, Axiom, EntityKind, Iri, OntologyError, OntologyStore,
    PrefixMap,
};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Object {
    Iri(Iri),
    Literal(AnnotationValue),
}

#[derive(Debug, Clone)]
struct Triple {
    subject: Iri,
    predicate: Iri,
    object: Object,
    subject_pos: Pos,
    predicate_pos: Pos,
    object_pos: Pos,
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
    end: Pos,
    prefixes: PrefixMap,
    triples: Vec<Triple>,
    warnings: Vec<ParseDiagnostic>,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn here(&self) -> Pos {
        self.peek().map(|t| t.pos).unwrap_or(self.end)
    }

    fn expect_punct(&mut self, c: char) -> Result<(), ParseError> {
        match self.next() {
            Some(Token { tok: Tok::Punct(p), .. }) if p == c => Ok(()),
            Some(t) => Err(unexpected(&t, &format!("`{c}`"))),
            None => Err(ParseError::syntax(self.end, format!("expected `{c}`, found end of input"))),
        }
    }

    fn document(&mut self) -> Result<(), ParseError> {
        while let Some(tok) = self.peek().cloned() {
            match &tok.tok {
                Tok::Directive(d) if d == "prefix" => {
                    self.next();
                    self.prefix_binding(tok.pos)?;
                    self.expect_punct('.')?;
                }
                Tok::Word(w) if w.eq_ignore_ascii_case("prefix") => {
                    self.next();
                    self.prefix_binding(tok.pos)?;
                }
                Tok::Directive(d) if d == "base" => {
                    return Err(ParseError::unsupported(tok.pos, "@base directive"));
                }
                Tok::Word(w) if w.eq_ignore_ascii_case("base") => {
                    return Err(ParseError::unsupported(tok.pos, "BASE directive"));
                }
                _ => self.statement()?,
            }
        }
        Ok(())
    }

    fn prefix_binding(&mut self, at: Pos) -> Result<(), ParseError> {
        let (prefix, pos) = match self.next() {
            Some(Token { tok: Tok::PName { prefix, local }, pos }) if local.is_empty() => (prefix, pos),
            Some(t) => return Err(unexpected(&t, "a prefix name ending in `:`")),
            None => return Err(ParseError::syntax(at, "incomplete prefix directive")),
        };
        let base = match self.next() {
            Some(Token { tok: Tok::IriRef(iri), pos }) => {
                Iri::new(&iri).map_err(|e| ParseError::ontology(pos, e))?;
                iri
            }
            Some(t) => return Err(unexpected(&t, "an IRI in angle brackets")),
            None => return Err(ParseError::syntax(at, "incomplete prefix directive")),
        };
        if let Some(old) = self.prefixes.insert(prefix.clone(), base.clone()) {
            if old != base {
                self.warnings.push(ParseDiagnostic::warning(
                    pos,
                    format!("prefix `{prefix}:` redefined"),
                ));
            }
        }
        Ok(())
    }

    fn iri(&mut self, role: &str) -> Result<(Iri, Pos), ParseError> {
        let Some(token) = self.next() else {
            return Err(ParseError::syntax(self.end, format!("expected {role}, found end of input")));
        };
        let pos = token.pos;
        match token.tok {
            Tok::IriRef(s) => Iri::new(&s)
                .map(|i| (i, pos))
                .map_err(|_| ParseError::unsupported(pos, format!("relative or malformed IRI <{s}>"))),
            Tok::PName { prefix, local } => self
                .prefixes
                .expand(&prefix, &local)
                .map(|i| (i, pos))
                .map_err(|e| match e {
                    OntologyError::UnknownPrefix(p) => {
                        ParseError::syntax(pos, format!("prefix `{p}:` used before declaration"))
                    }
                    other => ParseError::ontology(pos, other),
                }),
            ref other => Err(self.reject(other, pos, role)),
        }
    }

    fn reject(&self, tok: &Tok, pos: Pos, role: &str) -> ParseError {
        match tok {
            Tok::BlankNode(_) | Tok::Punct('[') => ParseError::unsupported(pos, "blank nodes"),
            Tok::Punct('(') => ParseError::unsupported(pos, "collections"),
            Tok::Number(_) => ParseError::unsupported(pos, "numeric literals"),
            Tok::Word(w) if w == "true" || w == "false" => {
                ParseError::unsupported(pos, "boolean literals")
            }
            Tok::DoubleCaret => ParseError::unsupported(pos, "datatyped literals"),
            other => ParseError::syntax(pos, format!("expected {role}, found {}", other.describe())),
        }
    }

    fn statement(&mut self) -> Result<(), ParseError> {
        let (subject, subject_pos) = self.iri("a subject IRI")?;
        loop {
            let (predicate, predicate_pos) = match self.peek() {
                Some(Token { tok: Tok::Word(w), pos }) if w == "a" => {
                    let pos = *pos;
                    self.next();
                    (vocab::rdf_type(), pos)
                }
                _ => self.iri("a predicate")?,
            };
            loop {
                let (object, object_pos) = self.object()?;
                self.triples.push(Triple {
                    subject: subject.clone(),
                    predicate: predicate.clone(),
                    object,
                    subject_pos,
                    predicate_pos,
                    object_pos,
                });
                match self.peek() {
                    Some(Token { tok: Tok::Punct(','), .. }) => {
                        self.next();
                    }
                    _ => break,
                }
            }
            match self.peek() {
                Some(Token { tok: Tok::Punct(';'), .. }) => {
                    while matches!(self.peek(), Some(Token { tok: Tok::Punct(';'), .. })) {
                        self.next();
                    }
                    if matches!(self.peek(), Some(Token { tok: Tok::Punct('.'), .. })) {
                        break;
                    }
                }
                _ => break,
            }
        }
        self.expect_punct('.')
    }

    fn object(&mut self) -> Result<(Object, Pos), ParseError> {
        let pos = self.here();
        match self.peek().map(|t| t.tok.clone()) {
            Some(Tok::Literal { text, lang }) => {
                self.next();
                if matches!(self.peek(), Some(Token { tok: Tok::DoubleCaret, .. })) {
                    return Err(ParseError::unsupported(self.here(), "datatyped literals"));
                }
                if text.is_empty() {
                    return Err(ParseError::ontology(
                        pos,
                        OntologyError::InvalidAxiom("empty literal".into()),
                    ));
                }
                let value = AnnotationValue::new(text, lang).map_err(|e| ParseError::ontology(pos, e))?;
                Ok((Object::Literal(value), pos))
            }
            _ => {
                let (iri, pos) = self.iri("an object")?;
                Ok((Object::Iri(iri), pos))
            }
        }
    }
}

fn unexpected(t: &Token, wanted: &str) -> ParseError {
    match t.tok {
        Tok::BlankNode(_) | Tok::Punct('[') => ParseError::unsupported(t.pos, "blank nodes"),
        Tok::Punct('(') => ParseError::unsupported(t.pos, "collections"),
        _ => ParseError::syntax(t.pos, format!("expected {wanted}, found {}", t.tok.describe())),
    }
}

fn declaration_kind(class: &Iri) -> Option<EntityKind> {
    [
        (vocab::owl_class(), EntityKind::OwlClass),
        (vocab::owl_object_property(), EntityKind::ObjectProperty),
        (vocab::owl_annotation_property(), EntityKind::AnnotationProperty),
        (vocab::owl_datatype_property(), EntityKind::DataProperty),
        (vocab::owl_named_individual(), EntityKind::NamedIndividual),
    ]
    .into_iter()
    .find(|(iri, _)| iri == class)
    .map(|(_, k)| k)
}

fn declaration_class(kind: EntityKind) -> Iri {
    match kind {
        EntityKind::OwlClass => vocab::owl_class(),
        EntityKind::ObjectProperty => vocab::owl_object_property(),
        EntityKind::AnnotationProperty => vocab::owl_annotation_property(),
        EntityKind::DataProperty => vocab::owl_datatype_property(),
        EntityKind::NamedIndividual => vocab::owl_named_individual(),
    }
}

/// Maps one non-declaration triple to its axiom.
fn triple_axiom(store: &OntologyStore, t: &Triple) -> Result<Axiom, ParseError> {
    let s = t.subject.clone();
    let p = &t.predicate;
    let object_iri = || match &t.object {
        Object::Iri(i) => Ok(i.clone()),
        Object::Literal(_) => Err(ParseError::ontology(
            t.object_pos,
            OntologyError::InvalidAxiom(format!(
                "literal object not allowed for {}",
                store.prefixes().display(p)
            )),
        )),
    };
    let ax = if *p == vocab::rdf_type() {
        Axiom::class_assertion(object_iri()?, s)
    } else if *p == vocab::rdfs_sub_class_of() {
        Axiom::sub_class_of(s, object_iri()?)
    } else if *p == vocab::owl_equivalent_class() {
        Axiom::equivalent_classes([s, object_iri()?])
    } else if *p == vocab::owl_disjoint_with() {
        Axiom::disjoint_classes(s, object_iri()?)
    } else if *p == vocab::rdfs_sub_property_of() {
        Axiom::sub_property_of(s, object_iri()?)
    } else if *p == vocab::owl_equivalent_property() {
        Axiom::equivalent_properties([s, object_iri()?])
    } else if *p == vocab::rdfs_range() {
        Axiom::range(s, object_iri()?)
    } else if *p == vocab::rdfs_domain() {
        Axiom::domain(s, object_iri()?)
    } else if *p == vocab::owl_same_as() {
        Axiom::same_individual(s, object_iri()?)
    } else {
        match store.kind_of(p) {
            Some(EntityKind::AnnotationProperty) => match &t.object {
                Object::Literal(v) => Axiom::annotation(s, p.clone(), v.clone()),
                Object::Iri(_) => {
                    return Err(ParseError::unsupported(t.object_pos, "IRI-valued annotations"))
                }
            },
            Some(EntityKind::ObjectProperty) => Axiom::property_assertion(s, p.clone(), object_iri()?),
            Some(EntityKind::DataProperty) => {
                return Err(ParseError::unsupported(t.predicate_pos, "data property assertions"))
            }
            Some(found) => {
                return Err(ParseError::ontology(
                    t.predicate_pos,
                    OntologyError::KindMismatch {
                        iri: p.clone(),
                        expected: EntityKind::ObjectProperty,
                        found,
                    },
                ))
            }
            None => {
                return Err(ParseError::ontology(
                    t.predicate_pos,
                    OntologyError::UndeclaredEntity {
                        iri: p.clone(),
                        expected: EntityKind::ObjectProperty,
                    },
                ))
            }
        }
    };
    Ok(ax)
}

/// Position most relevant to a validation failure on `t`.
fn blame(t: &Triple, err: &OntologyError) -> Pos {
    let iri = match err {
        OntologyError::UndeclaredEntity { iri, .. }
        | OntologyError::KindMismatch { iri, .. }
        | OntologyError::KindConflict { iri, .. } => Some(iri),
        _ => None,
    };
    match iri {
        Some(i) if *i == t.subject => t.subject_pos,
        Some(i) if *i == t.predicate => t.predicate_pos,
        Some(_) => t.object_pos,
        None => t.subject_pos,
    }
}

pub fn parse_turtle(text: &str) -> Result<OntologyStore, ParseError> {
    parse_turtle_with_diagnostics(text).map(|(store, _)| store)
}

/// Parses and also returns warnings (redefined prefixes, repeated triples).
pub fn parse_turtle_with_diagnostics(
    text: &str,
) -> Result<(OntologyStore, Vec<ParseDiagnostic>), ParseError> {
    let tokens = Lexer::tokenize(text).map_err(ParseError::Syntax)?;
    let end = end_position(text);
    let mut parser = Parser {
        tokens,
        at: 0,
        end,
        prefixes: PrefixMap::new(),
        triples: Vec::new(),
        warnings: Vec::new(),
    };
    parser.document()?;

    let mut store = OntologyStore::with_prefixes(parser.prefixes.clone());
    let mut warnings = parser.warnings;
    let mut seen = BTreeSet::new();
    for t in &parser.triples {
        let key = (t.subject.clone(), t.predicate.clone(), t.object.clone());
        if !seen.insert(key) {
            warnings.push(ParseDiagnostic::warning(t.subject_pos, "repeated triple"));
        }
    }

    let (decls, rest): (Vec<&Triple>, Vec<&Triple>) = parser.triples.iter().partition(|t| {
        t.predicate == vocab::rdf_type()
            && matches!(&t.object, Object::Iri(o) if declaration_kind(o).is_some())
    });
    for t in decls {
        let Object::Iri(class) = &t.object else { unreachable!() };
        let kind = declaration_kind(class).expect("partitioned on declaration classes");
        store
            .declare(t.subject.clone(), kind)
            .map_err(|e| ParseError::ontology(t.subject_pos, e))?;
    }
    for t in rest {
        let ax = triple_axiom(&store, t)?;
        store.add_axiom(ax).map_err(|e| ParseError::ontology(blame(t, &e), e))?;
    }
    Ok((store, warnings))
}

fn end_position(text: &str) -> Pos {
    let line = text.matches('\n').count() + 1;
    let column = text.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Pos { line, column }
}

/// Predicate groups in output order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Slot {
    Type,
    SubClass,
    Equivalence,
    Disjointness,
    Range,
    Domain,
    SubProperty,
    ObjectAssertion,
    Annotation,
}

type Entry = (Slot, u8, Iri, Object);

fn entries(ax: &Axiom) -> (Iri, Vec<Entry>) {
    use Object::Iri as O;
    match ax {
        Axiom::Declaration { iri, kind } => (
            iri.clone(),
            vec![(Slot::Type, 0, vocab::rdf_type(), O(declaration_class(*kind)))],
        ),
        Axiom::ClassAssertion { cls, ind } => {
            (ind.clone(), vec![(Slot::Type, 1, vocab::rdf_type(), O(cls.clone()))])
        }
        Axiom::SubClassOf { sub, sup } => (
            sub.clone(),
            vec![(Slot::SubClass, 0, vocab::rdfs_sub_class_of(), O(sup.clone()))],
        ),
        Axiom::EquivalentClasses(set) | Axiom::EquivalentObjectProperties(set) => {
            let pred = if matches!(ax, Axiom::EquivalentClasses(_)) {
                vocab::owl_equivalent_class()
            } else {
                vocab::owl_equivalent_property()
            };
            let mut it = set.iter();
            let head = it.next().expect("equivalence has members").clone();
            let rest = it
                .map(|m| (Slot::Equivalence, 0, pred.clone(), O(m.clone())))
                .collect();
            (head, rest)
        }
        Axiom::SameIndividual(a, b) => (
            a.clone(),
            vec![(Slot::Equivalence, 1, vocab::owl_same_as(), O(b.clone()))],
        ),
        Axiom::DisjointClasses(a, b) => (
            a.clone(),
            vec![(Slot::Disjointness, 0, vocab::owl_disjoint_with(), O(b.clone()))],
        ),
        Axiom::ObjectPropertyRange { prop, cls } => {
            (prop.clone(), vec![(Slot::Range, 0, vocab::rdfs_range(), O(cls.clone()))])
        }
        Axiom::ObjectPropertyDomain { prop, cls } => {
            (prop.clone(), vec![(Slot::Domain, 0, vocab::rdfs_domain(), O(cls.clone()))])
        }
        Axiom::SubObjectPropertyOf { sub, sup } => (
            sub.clone(),
            vec![(Slot::SubProperty, 0, vocab::rdfs_sub_property_of(), O(sup.clone()))],
        ),
        Axiom::ObjectPropertyAssertion { subject, prop, object } => (
            subject.clone(),
            vec![(Slot::ObjectAssertion, 0, prop.clone(), O(object.clone()))],
        ),
        Axiom::AnnotationAssertion { subject, property, value } => (
            subject.clone(),
            vec![(Slot::Annotation, 0, property.clone(), Object::Literal(value.clone()))],
        ),
    }
}

/// Canonical Turtle: prefixes sorted by name, subjects by absolute IRI,
/// predicates grouped in a fixed order. Output is byte-deterministic.
pub fn serialize_turtle(store: &OntologyStore) -> String {
    let prefixes = store.prefixes();
    let mut out = String::new();
    for (prefix, base) in prefixes.iter() {
        out.push_str(&format!("@prefix {prefix}: <{base}> .\n"));
    }

    let mut blocks: BTreeMap<Iri, Vec<Entry>> = BTreeMap::new();
    for ax in store.axioms() {
        let (subject, es) = entries(ax);
        blocks.entry(subject).or_default().extend(es);
    }

    let term = |o: &Object| match o {
        Object::Iri(i) => prefixes.display(i),
        Object::Literal(v) => v.to_string(),
    };
    for (subject, mut es) in blocks {
        es.sort();
        es.dedup();
        out.push('\n');
        out.push_str(&prefixes.display(&subject));
        out.push('\n');
        let mut groups: Vec<(String, Vec<String>)> = Vec::new();
        for (_, _, pred, obj) in &es {
            let pred_text = if *pred == vocab::rdf_type() {
                "a".to_string()
            } else {
                prefixes.display(pred)
            };
            match groups.last_mut() {
                Some((p, objs)) if *p == pred_text => objs.push(term(obj)),
                _ => groups.push((pred_text, vec![term(obj)])),
            }
        }
        let n = groups.len();
        for (i, (pred, objs)) in groups.into_iter().enumerate() {
            let end = if i + 1 == n { " ." } else { " ;" };
            out.push_str(&format!("    {pred} {}{end}\n", objs.join(", ")));
        }
    }
    out
}
