use std::collections::BTreeMap;

use serde::Deserialize;

use super::{ConfigError, ParseDiagnostic, Pos};
use crate::ontology::PrefixMap;
use crate::pipeline::{
    default_stopwords, ClassificationMap, Confirmation, ExtractionConfig, PipelineConfig,
    ProposalStatus, DEFAULT_SATURATION_THRESHOLD, DEFAULT_SIMILARITY_THRESHOLD,
};

#[derive(Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct RawConfig {
    framework: String,
    title: String,
    #[serde(default)]
    extraction: RawExtraction,
    #[serde(default)]
    classification: BTreeMap<String, String>,
    #[serde(default)]
    confirmations: Vec<RawConfirmation>,
    similarity_threshold: Option<f64>,
    saturation_threshold: Option<f64>,
    #[serde(default)]
    prefixes: BTreeMap<String, String>,
}

#[derive(Deserialize, Default)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct RawExtraction {
    stopwords: Option<Vec<String>>,
    min_token_length: Option<usize>,
    top_k: Option<usize>,
    relevant_top_k: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfirmation {
    left: String,
    right: String,
    status: String,
}

fn violation(field: impl Into<String>, message: impl Into<String>) -> ConfigError {
    ConfigError::SchemaViolation { field: field.into(), message: message.into() }
}

/// Parses a pipeline configuration (flat JSON). Absent optional fields get
/// their defaults; every reference is checked against the bundled schema.
pub fn parse_config(text: &str) -> Result<PipelineConfig, ConfigError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| {
        ConfigError::Syntax(ParseDiagnostic::error(
            Pos { line: e.line().max(1), column: e.column().max(1) },
            e.to_string(),
        ))
    })?;
    let raw: RawConfig = serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        let message = e.inner().to_string();
        let field = if path == "." {
            // Missing or unknown top-level fields are named in the message.
            message
                .split('`')
                .nth(1)
                .map(str::to_string)
                .unwrap_or(path)
        } else {
            path
        };
        violation(field, message)
    })?;

    let mut prefixes = PrefixMap::standard();
    for (p, base) in &raw.prefixes {
        prefixes.insert(p.clone(), base.clone());
    }
    let resolve = |field: &str, text: &str| {
        prefixes.resolve(text).map_err(|e| violation(field, e.to_string()))
    };

    let framework = resolve("framework", &raw.framework)?;
    if raw.title.trim().is_empty() {
        return Err(violation("title", "must be non-empty"));
    }

    let defaults = ExtractionConfig::default();
    let extraction = ExtractionConfig {
        stopwords: raw
            .extraction
            .stopwords
            .map(|ws| ws.into_iter().map(|w| w.to_lowercase()).collect())
            .unwrap_or_else(default_stopwords),
        min_token_length: raw.extraction.min_token_length.unwrap_or(defaults.min_token_length),
        top_k: raw.extraction.top_k.unwrap_or(defaults.top_k),
        relevant_top_k: raw.extraction.relevant_top_k.unwrap_or(defaults.relevant_top_k),
    };
    if extraction.min_token_length < 1 {
        return Err(violation("extraction.minTokenLength", "must be at least 1"));
    }
    if extraction.top_k < 1 {
        return Err(violation("extraction.topK", "must be at least 1"));
    }
    let extraction = if raw.extraction.relevant_top_k.is_none() {
        ExtractionConfig {
            relevant_top_k: extraction.relevant_top_k.min(extraction.top_k),
            ..extraction
        }
    } else {
        extraction
    };
    if extraction.relevant_top_k > extraction.top_k {
        return Err(violation(
            "extraction.relevantTopK",
            format!(
                "{} exceeds topK {}",
                extraction.relevant_top_k, extraction.top_k
            ),
        ));
    }

    let mut classification = ClassificationMap::new();
    for (keyword, class) in &raw.classification {
        let field = format!("classification.{keyword}");
        if keyword.trim().is_empty() {
            return Err(violation(field, "keyword must be non-empty"));
        }
        let iri = resolve(&field, class)?;
        classification
            .insert(keyword, iri)
            .map_err(|m| violation(field, m))?;
    }

    let mut confirmations = Vec::new();
    for (i, c) in raw.confirmations.iter().enumerate() {
        let status = match c.status.as_str() {
            "proposed" => ProposalStatus::Proposed,
            "confirmed" => ProposalStatus::Confirmed,
            "rejected" => ProposalStatus::Rejected,
            other => {
                return Err(violation(
                    format!("confirmations[{i}].status"),
                    format!("`{other}` is not one of proposed, confirmed, rejected"),
                ))
            }
        };
        let left = resolve(&format!("confirmations[{i}].left"), &c.left)?;
        let right = resolve(&format!("confirmations[{i}].right"), &c.right)?;
        if left == right {
            return Err(violation(
                format!("confirmations[{i}]"),
                "left and right must differ",
            ));
        }
        confirmations.push(Confirmation { left, right, status });
    }

    let threshold = |field: &str, v: Option<f64>, default: f64, positive: bool| {
        let v = v.unwrap_or(default);
        let ok = if positive { v > 0.0 && v <= 1.0 } else { (0.0..=1.0).contains(&v) };
        if ok {
            Ok(v)
        } else {
            Err(violation(field, format!("{v} is out of range")))
        }
    };
    let similarity_threshold = threshold(
        "similarityThreshold",
        raw.similarity_threshold,
        DEFAULT_SIMILARITY_THRESHOLD,
        false,
    )?;
    let saturation_threshold = threshold(
        "saturationThreshold",
        raw.saturation_threshold,
        DEFAULT_SATURATION_THRESHOLD,
        true,
    )?;

    Ok(PipelineConfig {
        framework,
        title: raw.title,
        extraction,
        classification,
        confirmations,
        similarity_threshold,
        saturation_threshold,
    })
}
