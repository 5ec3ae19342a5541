//! Hand-built ontologies.

#![allow(dead_code)]

use ontoalign_core::{Ontology, Origin};

/// Builds an ontology from `(subject, relation, object)` triples. Objects in
/// double quotes are literals; relation `type` declares class membership.
pub fn build(origin: Origin, triples: &[(&str, &str, &str)]) -> Ontology {
    let mut o = Ontology::new(origin);
    for &(s, p, v) in triples {
        let subject = o.instance(s);
        if p == "type" {
            let class = o.class(v);
            o.add_type(subject, class).unwrap();
            continue;
        }
        let r = o.relation(p);
        let object = if v.starts_with('"') { o.literal(v) } else { o.instance(v) };
        o.add_statement(subject, r, object).unwrap();
    }
    o.close_under_schema();
    o
}

pub const ALICE_FIRST: &[(&str, &str, &str)] = &[
    ("alice", "wasBornIn", "paris"),
    ("bob", "wasBornIn", "paris"),
    ("alice", "label", "\"Alice\""),
    ("bob", "label", "\"Bob\""),
    ("paris", "label", "\"Paris\""),
    ("paris", "type", "city"),
];

pub const ALICE_SECOND: &[(&str, &str, &str)] = &[
    ("a2", "birthPlace", "p2"),
    ("b2", "birthPlace", "p2"),
    ("a2", "name", "\"Alice\""),
    ("b2", "name", "\"Bob\""),
    ("p2", "name", "\"Paris\""),
    ("p2", "type", "town"),
];

pub fn alice() -> (Ontology, Ontology) {
    (build(Origin::First, ALICE_FIRST), build(Origin::Second, ALICE_SECOND))
}

/// Four people in `person`, two of which exist on the other side in `human`;
/// the other side's `robot` members match nothing.
pub fn classes() -> (Ontology, Ontology) {
    let mut t1 = Vec::new();
    let mut t2 = Vec::new();
    let ids: Vec<(String, String, String)> = (0..4)
        .map(|i| (format!("p{i}"), format!("h{i}"), format!("\"id-{i}\"")))
        .collect();
    for (i, (p, h, id)) in ids.iter().enumerate() {
        t1.push((p.as_str(), "id", id.as_str()));
        t1.push((p.as_str(), "type", "person"));
        if i < 2 {
            t2.push((h.as_str(), "ident", id.as_str()));
            t2.push((h.as_str(), "type", "human"));
        }
    }
    t2.push(("r0", "ident", "\"id-r0\""));
    t2.push(("r1", "ident", "\"id-r1\""));
    t2.push(("r0", "type", "robot"));
    t2.push(("r1", "type", "robot"));
    (build(Origin::First, &t1), build(Origin::Second, &t2))
}

/// People with spouses, citizenships and birth places. The second side states
/// a country as birth place for every fourth person and omits every tenth couple's spouse facts.
pub fn people(n: usize) -> (Ontology, Ontology) {
    let mut o1 = Vec::<(String, String, String)>::new();
    let mut o2 = Vec::<(String, String, String)>::new();
    let countries = 5;
    let cities = 10;
    for c in 0..countries {
        o1.push((format!("country{c}"), "label".into(), format!("\"Country {c}\"")));
        o2.push((format!("land{c}"), "name".into(), format!("\"Country {c}\"")));
    }
    for c in 0..cities {
        o1.push((format!("city{c}"), "label".into(), format!("\"City {c}\"")));
        o2.push((format!("town{c}"), "name".into(), format!("\"City {c}\"")));
    }
    for i in 0..n {
        let (a, b) = (format!("person{i}"), format!("human{i}"));
        o1.push((a.clone(), "label".into(), format!("\"Person {i}\"")));
        o2.push((b.clone(), "name".into(), format!("\"Person {i}\"")));
        let city = i % cities;
        let country = city % countries;
        o1.push((a.clone(), "isCitizenOf".into(), format!("country{country}")));
        o1.push((a.clone(), "wasBornIn".into(), format!("city{city}")));
        o2.push((b.clone(), "nationality".into(), format!("land{country}")));
        let place = if i % 4 == 0 { format!("land{country}") } else { format!("town{city}") };
        o2.push((b.clone(), "birthPlace".into(), place));
        if i % 2 == 0 && i + 1 < n {
            let (a2, b2) = (format!("person{}", i + 1), format!("human{}", i + 1));
            o1.push((a.clone(), "isMarriedTo".into(), a2.clone()));
            o1.push((a2, "isMarriedTo".into(), a.clone()));
            if i % 20 != 0 {
                o2.push((b.clone(), "spouse".into(), b2.clone()));
                o2.push((b2, "spouse".into(), b));
            }
        }
    }
    (build(Origin::First, &view(&o1)), build(Origin::Second, &view(&o2)))
}

fn view(v: &[(String, String, String)]) -> Vec<(&str, &str, &str)> {
    v.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str())).collect()
}
