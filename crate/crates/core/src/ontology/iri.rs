use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::OntologyError;

pub const RDF: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
pub const RDFS: &str = "http://www.w3.org/2000/01/rdf-schema#";
pub const OWL: &str = "http://www.w3.org/2002/07/owl#";
pub const XSD: &str = "http://www.w3.org/2001/XMLSchema#";
/// Default namespace for every schema entity and ingested individual.
pub const AIEO: &str = "https://w3id.org/aieo#";

/// An absolute IRI. Equality and ordering are on the absolute form, so two
/// CURIEs that expand to the same string are the same entity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Iri(Arc<str>);

impl Iri {
    pub fn new(value: impl AsRef<str>) -> Result<Self, OntologyError> {
        let value = value.as_ref();
        validate_absolute(value)?;
        Ok(Iri(Arc::from(value)))
    }

    pub(crate) fn from_trusted(value: impl AsRef<str>) -> Self {
        Iri(Arc::from(value.as_ref()))
    }

    pub fn in_namespace(ns: &str, local: &str) -> Self {
        Iri::from_trusted(format!("{ns}{local}"))
    }

    pub fn aieo(local: &str) -> Self {
        Self::in_namespace(AIEO, local)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Fragment or last path segment; falls back to the whole IRI.
    pub fn local_name(&self) -> &str {
        let s = self.as_str();
        match s.rfind(['#', '/']) {
            Some(i) if i + 1 < s.len() => &s[i + 1..],
            _ => s,
        }
    }
}

impl fmt::Debug for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for Iri {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Iri {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Iri::new(s).map_err(serde::de::Error::custom)
    }
}

fn validate_absolute(value: &str) -> Result<(), OntologyError> {
    let invalid = |reason: &str| OntologyError::InvalidIri {
        value: value.to_string(),
        reason: reason.to_string(),
    };
    let Some(colon) = value.find(':') else {
        return Err(invalid("missing scheme"));
    };
    let scheme = &value[..colon];
    let mut chars = scheme.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return Err(invalid("scheme must start with a letter")),
    }
    if !chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.')) {
        return Err(invalid("malformed scheme"));
    }
    if let Some(bad) = value
        .chars()
        .find(|c| c.is_whitespace() || c.is_control() || matches!(c, '<' | '>' | '"' | '{' | '}' | '|' | '^' | '`' | '\\'))
    {
        return Err(invalid(&format!("illegal character {bad:?}")));
    }
    Ok(())
}

/// True when `local` can appear unquoted after `prefix:` in the Turtle and
/// query syntaxes this crate reads.
pub fn is_valid_local_name(local: &str) -> bool {
    let mut chars = local.chars();
    match chars.next() {
        None => true,
        Some(c) if c.is_alphanumeric() || c == '_' => {
            chars.all(|c| c.is_alphanumeric() || c == '_' || c == '-')
        }
        Some(_) => false,
    }
}

pub fn is_valid_prefix_name(prefix: &str) -> bool {
    let mut chars = prefix.chars();
    match chars.next() {
        None => true,
        Some(c) if c.is_ascii_alphabetic() => {
            chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
        }
        Some(_) => false,
    }
}

/// Prefix name to namespace base.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefixMap {
    entries: BTreeMap<String, String>,
}

impl PrefixMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// `rdf`, `rdfs`, `owl`, `xsd` and `aieo`.
    pub fn standard() -> Self {
        let mut map = Self::new();
        map.insert("aieo", AIEO);
        map.insert("owl", OWL);
        map.insert("rdf", RDF);
        map.insert("rdfs", RDFS);
        map.insert("xsd", XSD);
        map
    }

    /// Returns the previous base bound to `prefix`, if any.
    pub fn insert(&mut self, prefix: impl Into<String>, base: impl Into<String>) -> Option<String> {
        self.entries.insert(prefix.into(), base.into())
    }

    pub fn get(&self, prefix: &str) -> Option<&str> {
        self.entries.get(prefix).map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Bindings of `other` that are absent here are added.
    pub fn merge_missing(&mut self, other: &PrefixMap) {
        for (k, v) in other.iter() {
            self.entries.entry(k.to_string()).or_insert_with(|| v.to_string());
        }
    }

    pub fn expand(&self, prefix: &str, local: &str) -> Result<Iri, OntologyError> {
        let base = self
            .get(prefix)
            .ok_or_else(|| OntologyError::UnknownPrefix(prefix.to_string()))?;
        Iri::new(format!("{base}{local}"))
    }

    /// Accepts `<absolute>`, `prefix:local` with a bound prefix, or a bare
    /// absolute IRI.
    pub fn resolve(&self, text: &str) -> Result<Iri, OntologyError> {
        let text = text.trim();
        if let Some(inner) = text.strip_prefix('<').and_then(|t| t.strip_suffix('>')) {
            return Iri::new(inner);
        }
        if let Some((prefix, local)) = text.split_once(':') {
            if self.get(prefix).is_some() && is_valid_local_name(local) {
                return self.expand(prefix, local);
            }
            let scheme_like = local.starts_with("//")
                || matches!(prefix, "urn" | "mailto" | "tag" | "file" | "http" | "https");
            if !scheme_like && is_valid_prefix_name(prefix) {
                return Err(OntologyError::UnknownPrefix(prefix.to_string()));
            }
        }
        Iri::new(text)
    }

    /// Longest-namespace compaction; `None` if no prefix yields a valid
    /// local name.
    pub fn compact(&self, iri: &Iri) -> Option<String> {
        let s = iri.as_str();
        self.entries
            .iter()
            .filter(|(_, base)| s.starts_with(base.as_str()))
            .filter(|(_, base)| is_valid_local_name(&s[base.len()..]))
            .max_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| b.0.cmp(a.0)))
            .map(|(prefix, base)| format!("{prefix}:{}", &s[base.len()..]))
    }

    /// Compact form when possible, `<absolute>` otherwise.
    pub fn display(&self, iri: &Iri) -> String {
        self.compact(iri).unwrap_or_else(|| format!("<{}>", iri.as_str()))
    }
}

/// Well-known vocabulary terms.
pub mod vocab {
    use super::{Iri, OWL, RDF, RDFS};

    pub fn rdf_type() -> Iri {
        Iri::in_namespace(RDF, "type")
    }
    pub fn rdfs_label() -> Iri {
        Iri::in_namespace(RDFS, "label")
    }
    pub fn rdfs_sub_class_of() -> Iri {
        Iri::in_namespace(RDFS, "subClassOf")
    }
    pub fn rdfs_sub_property_of() -> Iri {
        Iri::in_namespace(RDFS, "subPropertyOf")
    }
    pub fn rdfs_range() -> Iri {
        Iri::in_namespace(RDFS, "range")
    }
    pub fn rdfs_domain() -> Iri {
        Iri::in_namespace(RDFS, "domain")
    }
    pub fn owl_class() -> Iri {
        Iri::in_namespace(OWL, "Class")
    }
    pub fn owl_object_property() -> Iri {
        Iri::in_namespace(OWL, "ObjectProperty")
    }
    pub fn owl_annotation_property() -> Iri {
        Iri::in_namespace(OWL, "AnnotationProperty")
    }
    pub fn owl_datatype_property() -> Iri {
        Iri::in_namespace(OWL, "DatatypeProperty")
    }
    pub fn owl_named_individual() -> Iri {
        Iri::in_namespace(OWL, "NamedIndividual")
    }
    pub fn owl_equivalent_class() -> Iri {
        Iri::in_namespace(OWL, "equivalentClass")
    }
    pub fn owl_equivalent_property() -> Iri {
        Iri::in_namespace(OWL, "equivalentProperty")
    }
    pub fn owl_disjoint_with() -> Iri {
        Iri::in_namespace(OWL, "disjointWith")
    }
    pub fn owl_same_as() -> Iri {
        Iri::in_namespace(OWL, "sameAs")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curie_and_absolute_resolve_to_same_iri() {
        let map = PrefixMap::standard();
        let a = map.resolve("aieo:Fairness").unwrap();
        let b = map.resolve("<https://w3id.org/aieo#Fairness>").unwrap();
        let c = map.resolve("https://w3id.org/aieo#Fairness").unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(a.local_name(), "Fairness");
    }

    #[test]
    fn unknown_prefix_is_reported() {
        let map = PrefixMap::standard();
        assert!(matches!(map.resolve("ex:Thing"), Err(OntologyError::UnknownPrefix(p)) if p == "ex"));
    }

    #[test]
    fn relative_iri_rejected() {
        assert!(Iri::new("Fairness").is_err());
        assert!(Iri::new("http://a b").is_err());
    }

    #[test]
    fn compaction_prefers_longest_namespace() {
        let mut map = PrefixMap::standard();
        map.insert("ex", "http://example.org/");
        map.insert("exv", "http://example.org/vocab/");
        let iri = Iri::new("http://example.org/vocab/term").unwrap();
        assert_eq!(map.compact(&iri).as_deref(), Some("exv:term"));
        let odd = Iri::new("http://example.org/a.b").unwrap();
        assert_eq!(map.display(&odd), "<http://example.org/a.b>");
    }
}
