//! Seeded random stores and queries.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

use aieo::ontology::seed::{KEYWORD_SUBCLASSES, OBJECT_PROPERTIES};
use aieo::{seed_aieo_schema, AnnotationValue, Axiom, EntityKind, Iri, OntologyStore};

pub const CENTRAL: [&str; 5] = ["AI_Dimension", "Framework", "FundamentalRight", "Principle", "Requirement"];

fn seed_classes() -> Vec<Iri> {
    let mut v: Vec<Iri> = CENTRAL.iter().map(|c| Iri::aieo(c)).collect();
    v.extend(["Application", "Example", "Scenario", "UseCase", "Keyword"].map(Iri::aieo));
    v.extend(KEYWORD_SUBCLASSES.iter().map(|c| Iri::aieo(c)));
    v
}

fn seed_properties() -> Vec<Iri> {
    OBJECT_PROPERTIES.iter().map(|(p, _)| Iri::aieo(p)).collect()
}

/// Seed schema plus up to `max_inds` individuals and up to `max_asserts`
/// class, property and sameAs assertions.
pub fn seed_store(rng: &mut StdRng, max_inds: usize, max_asserts: usize) -> OntologyStore {
    let mut s = seed_aieo_schema();
    let n = rng.gen_range(1..=max_inds);
    let inds: Vec<Iri> = (0..n).map(|i| Iri::aieo(&format!("i{i}"))).collect();
    for i in &inds {
        s.declare(i.clone(), EntityKind::NamedIndividual).unwrap();
    }
    let classes = seed_classes();
    let props = seed_properties();
    for _ in 0..rng.gen_range(0..=max_asserts) {
        let a = inds.choose(rng).unwrap().clone();
        let b = inds.choose(rng).unwrap().clone();
        let ax = match rng.gen_range(0..10) {
            0..=2 => Axiom::class_assertion(classes.choose(rng).unwrap().clone(), a),
            3..=8 => Axiom::property_assertion(a, props.choose(rng).unwrap().clone(), b),
            _ if a != b => Axiom::same_individual(a, b),
            _ => continue,
        };
        s.add_axiom(ax).unwrap();
    }
    s
}

fn text(rng: &mut StdRng) -> String {
    const PIECES: [&str; 10] = ["fair", "AI", " ", "\"q\"", "back\\slash", "tab\t", "line\nbreak", "é", "ünï", "#x"];
    (0..rng.gen_range(1..4)).map(|_| *PIECES.choose(rng).unwrap()).collect()
}

/// Arbitrary well-formed store of at most `max_axioms` axioms over fresh
/// entities in two namespaces.
pub fn any_store(rng: &mut StdRng, max_axioms: usize) -> OntologyStore {
    let mut s = OntologyStore::new();
    s.set_prefix("ex", "http://example.org/onto/");
    let budget = rng.gen_range(0..=max_axioms);
    let name = |rng: &mut StdRng, stem: &str, k: usize| {
        let local = format!("{stem}{k}");
        if rng.gen_bool(0.3) {
            Iri::new(format!("http://example.org/onto/{local}")).unwrap()
        } else {
            Iri::aieo(&local)
        }
    };
    let of = |rng: &mut StdRng, stem: &str, max: usize| -> Vec<Iri> {
        let n = rng.gen_range(0..=max);
        (0..n).map(|k| name(rng, stem, k)).collect()
    };
    let classes = of(rng, "C", 5);
    let props = of(rng, "p", 4);
    let inds = of(rng, "x", 6);
    let anns = of(rng, "note", 2);
    let datas = of(rng, "d", 1);
    for (set, kind) in [
        (&classes, EntityKind::OwlClass),
        (&props, EntityKind::ObjectProperty),
        (&inds, EntityKind::NamedIndividual),
        (&anns, EntityKind::AnnotationProperty),
        (&datas, EntityKind::DataProperty),
    ] {
        for i in set.iter() {
            if s.len() < budget {
                s.declare(i.clone(), kind).unwrap();
            }
        }
    }
    let declared = |s: &OntologyStore, v: &[Iri], k: EntityKind| -> Vec<Iri> {
        v.iter().filter(|i| s.is_declared(i, k)).cloned().collect()
    };
    let classes = declared(&s, &classes, EntityKind::OwlClass);
    let props = declared(&s, &props, EntityKind::ObjectProperty);
    let inds = declared(&s, &inds, EntityKind::NamedIndividual);
    let anns = declared(&s, &anns, EntityKind::AnnotationProperty);
    let mut attempts = 0;
    while s.len() < budget && attempts < 4 * max_axioms {
        attempts += 1;
        let pick2 = |rng: &mut StdRng, v: &[Iri]| -> Option<(Iri, Iri)> {
            let a = v.choose(rng)?.clone();
            let b = v.choose(rng)?.clone();
            (a != b).then_some((a, b))
        };
        let ax = match rng.gen_range(0..12) {
            0 => pick2(rng, &classes).map(|(a, b)| Axiom::sub_class_of(a, b)),
            1 => pick2(rng, &classes).map(|(a, b)| Axiom::equivalent_classes([a, b])),
            2 => pick2(rng, &classes).map(|(a, b)| Axiom::disjoint_classes(a, b)),
            3 => pick2(rng, &props).map(|(a, b)| Axiom::sub_property_of(a, b)),
            4 => pick2(rng, &props).map(|(a, b)| Axiom::equivalent_properties([a, b])),
            5 => props.choose(rng).zip(classes.choose(rng)).map(|(p, c)| Axiom::range(p.clone(), c.clone())),
            6 => props.choose(rng).zip(classes.choose(rng)).map(|(p, c)| Axiom::domain(p.clone(), c.clone())),
            7 => classes.choose(rng).zip(inds.choose(rng)).map(|(c, i)| Axiom::class_assertion(c.clone(), i.clone())),
            8 => match (inds.choose(rng), props.choose(rng), inds.choose(rng)) {
                (Some(a), Some(p), Some(b)) => Some(Axiom::property_assertion(a.clone(), p.clone(), b.clone())),
                _ => None,
            },
            9 => pick2(rng, &inds).map(|(a, b)| Axiom::same_individual(a, b)),
            _ => {
                let subjects: Vec<&Iri> = classes.iter().chain(&inds).chain(&props).collect();
                match (subjects.choose(rng), anns.choose(rng)) {
                    (Some(s), Some(p)) => {
                        let lang = [None, Some("en"), Some("de-AT")].choose(rng).unwrap().map(String::from);
                        Some(Axiom::annotation((*s).clone(), p.clone(), AnnotationValue::new(text(rng), lang).unwrap()))
                    }
                    _ => None,
                }
            }
        };
        if let Some(ax) = ax {
            s.add_axiom(ax).unwrap();
        }
    }
    s
}

/// Query text of one to three patterns over the seed vocabulary and the
/// store's individuals. Always projects at least one variable.
pub fn query_text(rng: &mut StdRng, store: &OntologyStore) -> String {
    let vars = ["?a", "?b", "?c", "?d"];
    let inds: Vec<String> = store.entities(EntityKind::NamedIndividual).map(|i| format!("aieo:{}", i.local_name())).collect();
    // Mostly vocabulary the store uses, so that queries are rarely empty.
    let curie = |i: &Iri| format!("aieo:{}", i.local_name());
    let mut classes: Vec<String> = store.class_assertions().map(|(c, _)| curie(c)).collect();
    classes.extend(["aieo:Keyword", "aieo:Application", "aieo:Principle"].map(String::from));
    classes.push(curie(seed_classes().choose(rng).unwrap()));
    let mut preds: Vec<String> = store.property_assertions().map(|(_, p, _)| curie(p)).collect();
    preds.extend(["aieo:keyword", "aieo:application", "owl:sameAs"].map(String::from));
    preds.push(curie(seed_properties().choose(rng).unwrap()));
    let mut used: Vec<&str> = Vec::new();
    let mut patterns = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let var = |rng: &mut StdRng, used: &mut Vec<&'static str>| {
            let v = *vars.choose(rng).unwrap();
            if !used.contains(&v) {
                used.push(v);
            }
            v.to_string()
        };
        let subject = if rng.gen_bool(0.8) { var(rng, &mut used) } else { inds.choose(rng).unwrap().clone() };
        let p = if rng.gen_bool(0.35) {
            "a".to_string()
        } else if rng.gen_bool(0.15) {
            var(rng, &mut used)
        } else {
            preds.choose(rng).unwrap().clone()
        };
        let object = if p == "a" && rng.gen_bool(0.6) {
            classes.choose(rng).unwrap().clone()
        } else if rng.gen_bool(0.75) {
            var(rng, &mut used)
        } else {
            inds.choose(rng).unwrap().clone()
        };
        patterns.push(format!("{subject} {p} {object}"));
    }
    if used.is_empty() {
        patterns.push("?a a aieo:Keyword".into());
        used.push("?a");
    }
    let mut projected: Vec<&str> = used.iter().copied().filter(|_| rng.gen_bool(0.6)).collect();
    if projected.is_empty() {
        projected.push(used[0]);
    }
    let distinct = if rng.gen_bool(0.5) { "DISTINCT " } else { "" };
    format!("SELECT {distinct}{} WHERE {{ {} }}", projected.join(" "), patterns.join(" . "))
}
