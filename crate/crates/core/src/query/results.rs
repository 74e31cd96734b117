use serde_json::{json, Map, Value};

use super::{ResultSet, Term};
use crate::ontology::PrefixMap;

fn cell(term: &Term, prefixes: &PrefixMap) -> String {
    match term {
        Term::Iri(i) => prefixes.display(i),
        Term::Literal(v) => v.to_string(),
    }
}

/// Header row of `?var` names, then one tab-separated row per result.
/// IRIs are compacted where a prefix applies; literals are written as
/// escaped Turtle literals so cells never contain tabs or newlines.
pub fn to_tsv(rs: &ResultSet, prefixes: &PrefixMap) -> String {
    let mut out = rs.variables.iter().map(|v| format!("?{v}")).collect::<Vec<_>>().join("\t");
    out.push('\n');
    for row in &rs.rows {
        out.push_str(&row.iter().map(|t| cell(t, prefixes)).collect::<Vec<_>>().join("\t"));
        out.push('\n');
    }
    out
}

fn json_term(term: &Term) -> Value {
    match term {
        Term::Iri(i) => json!({"type": "iri", "value": i.as_str()}),
        Term::Literal(v) => match v.language() {
            Some(lang) => json!({"type": "literal", "value": v.text(), "language": lang}),
            None => json!({"type": "literal", "value": v.text()}),
        },
    }
}

/// `{"variables": [...], "rows": [{var: {"type", "value"}}...]}` with
/// absolute IRIs.
pub fn to_json(rs: &ResultSet) -> String {
    let rows: Vec<Value> = rs
        .rows
        .iter()
        .map(|row| {
            let obj: Map<String, Value> = rs
                .variables
                .iter()
                .zip(row)
                .map(|(v, t)| (v.clone(), json_term(t)))
                .collect();
            Value::Object(obj)
        })
        .collect();
    let doc = json!({"variables": rs.variables, "rows": rows});
    let mut text = serde_json::to_string_pretty(&doc).expect("result set serializes");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ontology::{AnnotationValue, Iri};

    fn sample() -> ResultSet {
        ResultSet::new(
            vec!["c".into(), "v".into()],
            vec![
                vec![Term::Iri(Iri::aieo("b")), Term::Literal(AnnotationValue::new("x\ty", Some("en".into())).unwrap())],
                vec![Term::Iri(Iri::aieo("a")), Term::Literal(AnnotationValue::plain("z").unwrap())],
            ],
            false,
        )
    }

    #[test]
    fn tsv_is_sorted_and_escaped() {
        let tsv = to_tsv(&sample(), &PrefixMap::standard());
        assert_eq!(tsv, "?c\t?v\naieo:a\t\"z\"\naieo:b\t\"x\\ty\"@en\n");
    }

    #[test]
    fn json_rows() {
        let v: Value = serde_json::from_str(&to_json(&sample())).unwrap();
        assert_eq!(v["rows"][0]["c"]["value"], "https://w3id.org/aieo#a");
        assert_eq!(v["rows"][1]["v"]["language"], "en");
    }
}
