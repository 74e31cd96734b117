//! Turtle-subset and JSON interchange formats, plus pipeline configuration
//! parsing.

mod config;
mod json;
pub(crate) mod lexer;
mod turtle;

use std::fmt;

use serde::Serialize;

use crate::ontology::OntologyError;

pub use config::parse_config;
pub use json::{parse_json, serialize_json};
pub use lexer::Pos;
pub use turtle::{parse_turtle, parse_turtle_with_diagnostics, serialize_turtle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

/// A positioned message; lines and columns are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParseDiagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub severity: Severity,
}

impl ParseDiagnostic {
    pub fn error(pos: Pos, message: impl Into<String>) -> Self {
        ParseDiagnostic {
            line: pos.line,
            column: pos.column,
            message: message.into(),
            severity: Severity::Error,
        }
    }

    pub fn warning(pos: Pos, message: impl Into<String>) -> Self {
        ParseDiagnostic {
            severity: Severity::Warning,
            ..Self::error(pos, message)
        }
    }
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sev = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{}:{}: {sev}: {}", self.line, self.column, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at {0}")]
    Syntax(ParseDiagnostic),
    #[error("unsupported feature at {0}")]
    UnsupportedFeature(ParseDiagnostic),
    #[error("{diagnostic}")]
    Ontology {
        diagnostic: ParseDiagnostic,
        #[source]
        source: OntologyError,
    },
}

impl ParseError {
    pub fn diagnostic(&self) -> &ParseDiagnostic {
        match self {
            ParseError::Syntax(d) | ParseError::UnsupportedFeature(d) => d,
            ParseError::Ontology { diagnostic, .. } => diagnostic,
        }
    }

    pub(crate) fn ontology(pos: Pos, source: OntologyError) -> Self {
        ParseError::Ontology {
            diagnostic: ParseDiagnostic::error(pos, source.to_string()),
            source,
        }
    }

    pub(crate) fn syntax(pos: Pos, message: impl Into<String>) -> Self {
        ParseError::Syntax(ParseDiagnostic::error(pos, message))
    }

    pub(crate) fn unsupported(pos: Pos, message: impl Into<String>) -> Self {
        ParseError::UnsupportedFeature(ParseDiagnostic::error(pos, message))
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConfigError {
    #[error("syntax error at {0}")]
    Syntax(ParseDiagnostic),
    #[error("schema violation in `{field}`: {message}")]
    SchemaViolation { field: String, message: String },
}
