use std::collections::BTreeSet;
use std::path::PathBuf;

use aieo::pipeline::{
    apply_equivalences, detect_saturation, frameworks, propose_equivalences, run_iteration, FrameworkDocument,
    IterationRecord, PipelineConfig, PipelineError, ProposalStatus,
};
use aieo::query::{canned_query, CannedQuery};
use aieo::reasoner::materialize;
use aieo::serialization::parse_config;
use aieo::{seed_aieo_schema, Axiom, Iri, OntologyStore};

fn data(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn inputs(tag: &str) -> (FrameworkDocument, PipelineConfig) {
    let doc = FrameworkDocument::from_json(&data(&format!("{tag}_framework.json"))).unwrap();
    let cfg = parse_config(&data(&format!("{tag}_config.json"))).unwrap();
    (doc, cfg)
}

fn ingest_all(order: &[&str], strip_confirmations: bool) -> (OntologyStore, Vec<IterationRecord>) {
    let mut store = seed_aieo_schema();
    let mut records = Vec::new();
    for tag in order {
        let (doc, mut cfg) = inputs(tag);
        if strip_confirmations {
            cfg.confirmations.clear();
        }
        let (next, rec) = run_iteration(&store, &doc, &cfg).unwrap();
        store = next;
        records.push(rec);
    }
    (store, records)
}

#[test]
fn au_then_eu() {
    let (store, records) = ingest_all(&["au", "eu"], false);
    assert_eq!(records.len(), 2);
    assert_eq!(frameworks(&store).len(), 2);
    assert_eq!(records.iter().map(|r| r.iteration_index).collect::<Vec<_>>(), [1, 2]);
    assert!(records.iter().all(|r| r.increment > 0));
    assert_eq!(records[1].before, records[0].after);

    let confirmed: Vec<_> = records[1].proposals.iter().filter(|p| p.status == ProposalStatus::Confirmed).collect();
    assert_eq!(confirmed.len(), 2);
    for p in confirmed {
        assert!(store.contains(&Axiom::same_individual(p.left.clone(), p.right.clone())));
    }
    let mat = materialize(&store).unwrap();
    assert!(mat.consistent, "{:?}", mat.violations);
}

#[test]
fn au_alone_has_eight_principles() {
    let (store, _) = ingest_all(&["au"], false);
    let rs = canned_query(CannedQuery::PrinciplesByFramework, None, &materialize(&store).unwrap()).unwrap();
    assert_eq!(rs.len(), 8);
}

#[test]
fn reingesting_is_rejected() {
    let (store, _) = ingest_all(&["au"], false);
    let (doc, cfg) = inputs("au");
    let before = store.clone();
    assert!(matches!(run_iteration(&store, &doc, &cfg), Err(PipelineError::DuplicateFramework(_))));
    assert_eq!(store.axiom_set(), before.axiom_set());
}

#[test]
fn unconfirmed_proposals_are_not_applied() {
    let (store, records) = ingest_all(&["au", "eu"], true);
    assert!(records[1].proposals.iter().all(|p| p.status == ProposalStatus::Proposed));
    assert!(!store.axioms().any(|a| matches!(a, Axiom::SameIndividual(..))));
    assert!(matches!(
        apply_equivalences(&store, &records[1].proposals),
        Err(PipelineError::UnconfirmedProposal { .. })
    ));
}

#[test]
fn proposals_do_not_depend_on_ingestion_order() {
    let key = |store: &OntologyStore, fw: &str| -> BTreeSet<(BTreeSet<Iri>, u64)> {
        propose_equivalences(store, &Iri::aieo(fw), 0.5)
            .unwrap()
            .into_iter()
            .map(|p| (BTreeSet::from([p.left, p.right]), p.score.to_bits()))
            .collect()
    };
    let (ab, _) = ingest_all(&["au", "eu"], true);
    let (ba, _) = ingest_all(&["eu", "au"], true);
    assert_eq!(key(&ab, "EU_EthicsGuidelines"), key(&ba, "AU_EthicsPrinciples"));
    assert!(!key(&ab, "EU_EthicsGuidelines").is_empty());
}

#[test]
fn confirming_equivalences_only_adds_rows() {
    let (plain, records) = ingest_all(&["au", "eu"], true);
    let mut proposals = records[1].proposals.clone();
    for p in &mut proposals {
        p.status = ProposalStatus::Confirmed;
    }
    let merged = apply_equivalences(&plain, &proposals).unwrap();
    let (before, after) = (materialize(&plain).unwrap(), materialize(&merged).unwrap());
    let concepts: Vec<Iri> = proposals.iter().flat_map(|p| [p.left.clone(), p.right.clone()]).collect();
    let mut cases = vec![(CannedQuery::PrinciplesByFramework, None)];
    for c in &concepts {
        cases.push((CannedQuery::DescribeConcept, Some(c.clone())));
        cases.push((CannedQuery::ScenariosFor, Some(c.clone())));
    }
    for (q, arg) in cases {
        let b = canned_query(q, arg.as_ref(), &before).unwrap();
        let a = canned_query(q, arg.as_ref(), &after).unwrap();
        for row in &b.rows {
            assert!(a.rows.contains(row), "{q} lost {row:?}");
        }
    }
}

#[test]
fn repeated_framework_content_saturates() {
    let (_, mut records) = ingest_all(&["au", "eu"], false);
    let mut last = records[1].clone();
    last.iteration_index = 3;
    last.before = records[1].after;
    last.after = records[1].after;
    last.increment = 0;
    records.push(last);
    assert_eq!(detect_saturation(&records, 0.05), [false, false, true]);
}
