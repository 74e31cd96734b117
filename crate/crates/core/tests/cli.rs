use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_aieo"))
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn seeded(dir: &Path) -> PathBuf {
    let seed = dir.join("seed.ttl");
    assert_eq!(run(&["seed", "--out", p(&seed)]).status.code(), Some(0));
    seed
}

fn federated(dir: &Path) -> PathBuf {
    let seed = seeded(dir);
    let au = dir.join("au.ttl");
    let eu = dir.join("eu.ttl");
    for (store, tag, out) in [(&seed, "au", &au), (&au, "eu", &eu)] {
        let o = run(&[
            "ingest",
            p(store),
            p(&data(&format!("{tag}_framework.json"))),
            "--config",
            p(&data(&format!("{tag}_config.json"))),
            "--out",
            p(out),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    }
    eu
}

#[test]
fn seed_metrics_table() {
    let dir = tempfile::tempdir().unwrap();
    let seed = seeded(dir.path());
    let o = run(&["metrics", p(&seed)]);
    assert_eq!(o.status.code(), Some(0));
    let table = stdout(&o);
    for (label, value) in [
        ("Class count", 19),
        ("Object property count", 10),
        ("Data property count", 0),
        ("Annotation property count", 4),
    ] {
        assert!(
            table.lines().any(|l| l.starts_with(label) && l.split_whitespace().last() == Some(&value.to_string())),
            "{label}\n{table}"
        );
    }
    let json: serde_json::Value = serde_json::from_slice(&run(&["metrics", p(&seed), "--format", "json"]).stdout).unwrap();
    assert_eq!(json["classCount"], 19);
}

#[test]
fn check_reports_framework_principle_clash() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ttl");
    std::fs::write(
        &bad,
        "@prefix aieo: <https://w3id.org/aieo#> .\n\
         @prefix owl: <http://www.w3.org/2002/07/owl#> .\n\
         aieo:Framework a owl:Class .\n\
         aieo:Principle a owl:Class .\n\
         aieo:Framework owl:disjointWith aieo:Principle .\n\
         aieo:x a owl:NamedIndividual , aieo:Framework , aieo:Principle .\n",
    )
    .unwrap();
    let o = run(&["check", p(&bad)]);
    assert_eq!(o.status.code(), Some(3));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1);
    assert!(out.starts_with("aieo:x\taieo:Framework\taieo:Principle"), "{out}");

    // Materializing first does not change the verdict.
    let reasoned = dir.path().join("reasoned.ttl");
    assert_eq!(run(&["reason", p(&bad), "--out", p(&reasoned)]).status.code(), Some(0));
    assert_eq!(run(&["check", p(&reasoned)]).status.code(), Some(3));
}

#[test]
fn federated_queries() {
    let dir = tempfile::tempdir().unwrap();
    let eu = federated(dir.path());
    assert_eq!(run(&["check", p(&eu)]).status.code(), Some(0));

    let o = run(&["query", p(&eu), "--ask", "describe_concept", "--arg", "aieo:AU_EthicsPrinciples_Fairness"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("aieo:AU_EthicsPrinciples\t") && out.contains("aieo:EU_EthicsGuidelines\t"), "{out}");

    let o = run(&["query", p(&eu), "--text", "SELECT ?p WHERE { aieo:EU_EthicsGuidelines aieo:principle ?p }", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(json["rows"].as_array().unwrap().len() >= 4);
}

#[test]
fn principles_by_framework_on_au() {
    let dir = tempfile::tempdir().unwrap();
    let seed = seeded(dir.path());
    let au = dir.path().join("au.json");
    let o = run(&[
        "ingest",
        p(&seed),
        p(&data("au_framework.json")),
        "--config",
        p(&data("au_config.json")),
        "--out",
        p(&au),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["query", p(&au), "--ask", "principles_by_framework"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 8);
}

#[test]
fn failed_ingest_leaves_no_output() {
    let dir = tempfile::tempdir().unwrap();
    let seed = seeded(dir.path());
    let au = dir.path().join("au.ttl");
    let args = |store: &Path, out: &Path| {
        vec![
            "ingest".to_string(),
            p(store).to_string(),
            p(&data("au_framework.json")).to_string(),
            "--config".to_string(),
            p(&data("au_config.json")).to_string(),
            "--out".to_string(),
            p(out).to_string(),
        ]
    };
    assert_eq!(bin().args(args(&seed, &au)).output().unwrap().status.code(), Some(0));
    let again = dir.path().join("again.ttl");
    let o = bin().args(args(&au, &again)).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(!again.exists());
    let names: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(names.len(), 2, "{names:?}");
}

#[test]
fn reason_trace_sidecar_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let eu = federated(dir.path());
    let out = dir.path().join("m.ttl");
    assert_eq!(run(&["reason", p(&eu), "--out", p(&out), "--trace"]).status.code(), Some(0));
    let trace: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("m.ttl.trace.json")).unwrap()).unwrap();
    assert!(!trace["traces"].as_array().unwrap().is_empty());
    let first = std::fs::read(&out).unwrap();
    assert_eq!(run(&["reason", p(&eu), "--out", p(&out)]).status.code(), Some(0));
    assert_eq!(std::fs::read(&out).unwrap(), first);
    assert_eq!(stdout(&run(&["reason", p(&eu)])).as_bytes(), first.as_slice());
}

#[test]
fn export_and_diff() {
    let dir = tempfile::tempdir().unwrap();
    let eu = federated(dir.path());
    let dot = dir.path().join("g.dot");
    assert_eq!(run(&["export", p(&eu), "--level", "2", "--format", "dot", "--out", p(&dot)]).status.code(), Some(0));
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("digraph aieo {"));
    assert_eq!(run(&["export", p(&eu), "--level", "4", "--format", "dot", "--out", p(&dot)]).status.code(), Some(1));

    let o = run(&["diff", p(&dir.path().join("au.ttl")), p(&eu)]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("+ Declaration(NamedIndividual(aieo:EU_EthicsGuidelines))")));
    assert!(!out.lines().any(|l| l.starts_with("- ")));
    assert!(out.lines().any(|l| l == "Individual count\t+24"), "{out}");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let seed = seeded(dir.path());
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["parse", "/does/not/exist.ttl"]).status.code(), Some(4));
    let broken = dir.path().join("broken.ttl");
    std::fs::write(&broken, "@prefix aieo: <https://w3id.org/aieo#> .\naieo:x aieo:y").unwrap();
    assert_eq!(run(&["parse", p(&broken)]).status.code(), Some(1));
    let undeclared = dir.path().join("undeclared.ttl");
    std::fs::write(&undeclared, "@prefix aieo: <https://w3id.org/aieo#> .\naieo:x aieo:p aieo:y .\n").unwrap();
    assert_eq!(run(&["parse", p(&undeclared)]).status.code(), Some(2));
    let o = run(&["query", p(&seed), "--text", "SELECT ?x WHERE { ?x a ?y } LIMIT 1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("LIMIT"));
    assert_eq!(run(&["query", p(&seed), "--ask", "describe_concept"]).status.code(), Some(1));
    assert_eq!(run(&["query", p(&seed), "--ask", "scenarios_for", "--arg", "aieo:nobody"]).status.code(), Some(2));
    assert_eq!(run(&["reason", p(&seed), "--trace"]).status.code(), Some(1));
}
