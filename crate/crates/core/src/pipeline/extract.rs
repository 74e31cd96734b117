use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::FrameworkDocument;

const DEFAULT_STOPWORDS: &[&str] = &[
    "a", "about", "above", "after", "again", "against", "all", "also", "am", "an", "and", "any",
    "are", "as", "at", "be", "because", "been", "before", "being", "below", "between", "both",
    "but", "by", "can", "could", "did", "do", "does", "doing", "down", "during", "each", "either",
    "few", "for", "from", "further", "had", "has", "have", "having", "he", "her", "here", "hers",
    "him", "his", "how", "i", "if", "in", "into", "is", "it", "its", "itself", "just", "may",
    "me", "might", "more", "most", "must", "my", "no", "nor", "not", "now", "of", "off", "on",
    "once", "only", "or", "other", "our", "ours", "out", "over", "own", "same", "shall", "she",
    "should", "so", "some", "such", "than", "that", "the", "their", "them", "then", "there",
    "these", "they", "this", "those", "through", "to", "too", "under", "until", "up", "upon",
    "us", "very", "was", "we", "were", "what", "when", "where", "which", "while", "who", "whom",
    "why", "will", "with", "within", "without", "would", "you", "your",
];

pub fn default_stopwords() -> BTreeSet<String> {
    DEFAULT_STOPWORDS.iter().map(|s| s.to_string()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ExtractionConfig {
    pub stopwords: BTreeSet<String>,
    pub min_token_length: usize,
    pub top_k: usize,
    pub relevant_top_k: usize,
}

impl Default for ExtractionConfig {
    fn default() -> Self {
        ExtractionConfig {
            stopwords: default_stopwords(),
            min_token_length: 3,
            top_k: 10,
            relevant_top_k: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScoredKeyword {
    pub keyword: String,
    pub score: f64,
}

/// Pluggable keyword source. `method` is recorded verbatim in the ontology
/// so that every relevant-keyword link says which tool produced it.
pub trait KeywordExtractor {
    fn method(&self) -> String;
    fn extract(&self, doc: &FrameworkDocument) -> Vec<ScoredKeyword>;
}

/// Term frequency over all section bodies, top-k.
#[derive(Debug, Clone)]
pub struct TermFrequencyExtractor {
    config: ExtractionConfig,
}

impl TermFrequencyExtractor {
    pub fn new(config: ExtractionConfig) -> Self {
        TermFrequencyExtractor { config }
    }

    pub fn config(&self) -> &ExtractionConfig {
        &self.config
    }
}

pub fn tokenize(text: &str) -> impl Iterator<Item = String> + '_ {
    text.split(|c: char| !c.is_alphanumeric())
        .filter(|t| !t.is_empty())
        .map(str::to_lowercase)
}

impl KeywordExtractor for TermFrequencyExtractor {
    fn method(&self) -> String {
        format!(
            "tf-topk(topK={},minLen={})",
            self.config.top_k, self.config.min_token_length
        )
    }

    fn extract(&self, doc: &FrameworkDocument) -> Vec<ScoredKeyword> {
        let cfg = &self.config;
        let mut counts: HashMap<String, usize> = HashMap::new();
        for section in &doc.sections {
            for token in tokenize(&section.body) {
                if token.chars().count() >= cfg.min_token_length && !cfg.stopwords.contains(&token) {
                    *counts.entry(token).or_default() += 1;
                }
            }
        }
        let mut ranked: Vec<(String, usize)> = counts.into_iter().collect();
        ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        ranked.truncate(cfg.top_k);
        ranked
            .into_iter()
            .map(|(keyword, n)| ScoredKeyword { keyword, score: n as f64 })
            .collect()
    }
}

pub fn extract_keywords(doc: &FrameworkDocument, cfg: &ExtractionConfig) -> Vec<ScoredKeyword> {
    TermFrequencyExtractor::new(cfg.clone()).extract(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::Section;

    fn doc(bodies: &[&str]) -> FrameworkDocument {
        FrameworkDocument {
            id: "aieo:T".into(),
            title: "T".into(),
            reference: None,
            sections: bodies
                .iter()
                .map(|b| Section { heading: "h".into(), body: b.to_string() })
                .collect(),
            concept_declarations: vec![],
        }
    }

    #[test]
    fn empty_document_yields_nothing() {
        assert!(extract_keywords(&doc(&[]), &ExtractionConfig::default()).is_empty());
    }

    #[test]
    fn hand_counted_frequencies() {
        let cfg = ExtractionConfig {
            stopwords: ["matters", "requires"].iter().map(|s| s.to_string()).collect(),
            ..ExtractionConfig::default()
        };
        let got = extract_keywords(&doc(&["Fairness matters. Fairness requires transparency."]), &cfg);
        let got: Vec<(&str, f64)> = got.iter().map(|k| (k.keyword.as_str(), k.score)).collect();
        assert_eq!(got, vec![("fairness", 2.0), ("transparency", 1.0)]);
    }

    #[test]
    fn ties_break_lexicographically_and_truncate() {
        let cfg = ExtractionConfig { top_k: 2, ..ExtractionConfig::default() };
        let got = extract_keywords(&doc(&["zeta alpha", "beta zeta"]), &cfg);
        let words: Vec<_> = got.iter().map(|k| k.keyword.as_str()).collect();
        assert_eq!(words, ["zeta", "alpha"]);
    }

    #[test]
    fn short_tokens_and_case() {
        let cfg = ExtractionConfig { min_token_length: 4, ..ExtractionConfig::default() };
        let got = extract_keywords(&doc(&["AI AI Safety safety, SAFETY!"]), &cfg);
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].keyword, "safety");
        assert_eq!(got[0].score, 3.0);
    }

    #[test]
    fn method_string_names_parameters() {
        assert_eq!(
            TermFrequencyExtractor::new(ExtractionConfig::default()).method(),
            "tf-topk(topK=10,minLen=3)"
        );
    }
}
