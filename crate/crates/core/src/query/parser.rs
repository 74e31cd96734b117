use super::{PatternTerm, Query, QueryError, TriplePattern};
use crate::ontology::{vocab, Iri, PrefixMap};
use crate::serialization::lexer::{Lexer, Tok, Token};
use crate::serialization::{ParseDiagnostic, Pos};

const UNSUPPORTED_WORDS: &[&str] = &[
    "OPTIONAL", "FILTER", "UNION", "MINUS", "GRAPH", "SERVICE", "BIND", "VALUES", "ORDER", "LIMIT",
    "OFFSET", "GROUP", "HAVING", "ASK", "CONSTRUCT", "DESCRIBE", "FROM", "BASE", "EXISTS", "NOT",
    "REDUCED", "INSERT", "DELETE",
];

struct Parser {
    tokens: Vec<Token>,
    at: usize,
    end: Pos,
    prefixes: PrefixMap,
}

fn syntax(pos: Pos, msg: impl Into<String>) -> QueryError {
    QueryError::Syntax(ParseDiagnostic::error(pos, msg))
}

fn unsupported(pos: Pos, what: impl Into<String>) -> QueryError {
    QueryError::UnsupportedFeature(ParseDiagnostic::error(
        pos,
        format!("{} is outside the supported query subset", what.into()),
    ))
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at)
    }

    fn pos(&self) -> Pos {
        self.peek().map(|t| t.pos).unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Word(x), .. }) if x.eq_ignore_ascii_case(w))
    }

    fn is_punct(&self, c: char) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Punct(x), .. }) if *x == c)
    }

    fn expect_punct(&mut self, c: char) -> Result<(), QueryError> {
        if self.is_punct(c) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    /// Error for the current token, classifying known out-of-subset syntax.
    fn unexpected(&self, expected: &str) -> QueryError {
        let pos = self.pos();
        match self.peek().map(|t| &t.tok) {
            None => syntax(pos, format!("expected {expected}, found end of input")),
            Some(Tok::Word(w)) if UNSUPPORTED_WORDS.iter().any(|u| u.eq_ignore_ascii_case(w)) => {
                unsupported(pos, w.to_uppercase())
            }
            Some(Tok::Punct(c @ ('/' | '|' | '^' | '+' | '*' | '!'))) => unsupported(pos, format!("property path `{c}`")),
            Some(Tok::DoubleCaret) => unsupported(pos, "typed literal"),
            Some(Tok::Punct(c @ ('[' | '('))) => unsupported(pos, format!("`{c}`")),
            Some(Tok::Literal { .. }) => unsupported(pos, "literal"),
            Some(Tok::Number(_)) => unsupported(pos, "numeric literal"),
            Some(Tok::BlankNode(_)) => unsupported(pos, "blank node"),
            Some(t) => syntax(pos, format!("expected {expected}, found {}", t.describe())),
        }
    }

    fn prologue(&mut self) -> Result<(), QueryError> {
        while self.is_word("PREFIX") {
            self.at += 1;
            let pos = self.pos();
            let prefix = match self.next().map(|t| t.tok) {
                Some(Tok::PName { prefix, local }) if local.is_empty() => prefix,
                _ => return Err(syntax(pos, "expected `name:` after PREFIX")),
            };
            let pos = self.pos();
            let base = match self.next().map(|t| t.tok) {
                Some(Tok::IriRef(iri)) => iri,
                _ => return Err(syntax(pos, "expected `<iri>` after the prefix name")),
            };
            Iri::new(&base).map_err(|e| syntax(pos, e.to_string()))?;
            self.prefixes.insert(prefix, base);
        }
        Ok(())
    }

    fn term(&mut self, verb: bool) -> Result<PatternTerm, QueryError> {
        let pos = self.pos();
        let term = match self.peek().map(|t| &t.tok) {
            Some(Tok::Var(v)) => PatternTerm::Var(v.clone()),
            Some(Tok::PName { prefix, local }) => PatternTerm::Const(
                self.prefixes
                    .expand(prefix, local)
                    .map_err(|e| syntax(pos, e.to_string()))?,
            ),
            Some(Tok::IriRef(i)) => PatternTerm::Const(Iri::new(i).map_err(|e| syntax(pos, e.to_string()))?),
            Some(Tok::Word(w)) if verb && w == "a" => PatternTerm::Const(vocab::rdf_type()),
            _ => return Err(self.unexpected(if verb { "a predicate" } else { "a variable or IRI" })),
        };
        self.at += 1;
        if verb && (self.is_punct('/') || self.is_punct('|') || self.is_punct('*') || self.is_punct('+')) {
            return Err(self.unexpected("an object"));
        }
        Ok(term)
    }

    fn group(&mut self) -> Result<Vec<TriplePattern>, QueryError> {
        self.expect_punct('{')?;
        let mut patterns = Vec::new();
        loop {
            if self.is_punct('}') {
                self.at += 1;
                break;
            }
            let subject = self.term(false)?;
            loop {
                let predicate = self.term(true)?;
                loop {
                    let object = self.term(false)?;
                    patterns.push(TriplePattern::new(subject.clone(), predicate.clone(), object));
                    if !self.is_punct(',') {
                        break;
                    }
                    self.at += 1;
                }
                if !self.is_punct(';') {
                    break;
                }
                self.at += 1;
                if self.is_punct('.') || self.is_punct('}') {
                    break;
                }
            }
            if self.is_punct('.') {
                self.at += 1;
            } else if !self.is_punct('}') {
                return Err(self.unexpected("`.` or `}`"));
            }
        }
        Ok(patterns)
    }

    fn query(&mut self) -> Result<Query, QueryError> {
        self.prologue()?;
        if !self.is_word("SELECT") {
            return Err(self.unexpected("SELECT"));
        }
        self.at += 1;
        let distinct = self.is_word("DISTINCT");
        if distinct {
            self.at += 1;
        }
        let mut projected = Vec::new();
        let mut star = false;
        if self.is_punct('*') {
            self.at += 1;
            star = true;
        } else {
            while let Some(Token { tok: Tok::Var(v), .. }) = self.peek() {
                projected.push(v.clone());
                self.at += 1;
            }
            if projected.is_empty() {
                return Err(self.unexpected("a projected variable or `*`"));
            }
        }
        if self.is_word("WHERE") {
            self.at += 1;
        }
        let patterns = self.group()?;
        if self.peek().is_some() {
            return Err(self.unexpected("end of query"));
        }
        let mut query = Query { projected, patterns, type_filters: Vec::new(), distinct };
        if star {
            query.projected = query.variables();
        }
        let mut seen = std::collections::BTreeSet::new();
        if let Some(dup) = query.projected.iter().find(|v| !seen.insert(v.as_str())) {
            return Err(QueryError::InvalidQuery(format!("?{dup} is projected twice")));
        }
        query.validate()?;
        Ok(query)
    }
}

/// Parses `[PREFIX p: <iri>]* SELECT [DISTINCT] (?v+ | *) [WHERE] { patterns }`.
/// The `rdf`, `rdfs`, `owl`, `xsd` and `aieo` prefixes are predeclared.
pub fn parse_query(text: &str) -> Result<Query, QueryError> {
    let tokens = Lexer::tokenize(text).map_err(QueryError::Syntax)?;
    let end = {
        let lines: Vec<&str> = text.split('\n').collect();
        Pos { line: lines.len(), column: lines.last().map_or(0, |l| l.chars().count()) + 1 }
    };
    if let Some(t) = tokens.iter().find(|t| {
        matches!(&t.tok, Tok::Word(w) if UNSUPPORTED_WORDS.iter().any(|u| u.eq_ignore_ascii_case(w)))
    }) {
        let Tok::Word(w) = &t.tok else { unreachable!() };
        return Err(unsupported(t.pos, w.to_uppercase()));
    }
    let mut parser = Parser { tokens, at: 0, end, prefixes: PrefixMap::standard() };
    parser.query()
}
