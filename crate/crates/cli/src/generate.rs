//! Synthetic ontology pairs with known ground truth.
//!
//! A generator first builds an abstract world of entities and facts, then
//! renders it twice: once under the first vocabulary and once, distorted by
//! the configured noise, under a second vocabulary with renamed relations
//! and classes. Every entity carries a key literal that is unique to it and
//! never dropped; it is only misspelled when key perturbation is requested.

use std::collections::BTreeSet;
use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use ontoalign_core::ntriples::{Direction, LexicalTriple, Node, RDFS_SUBCLASS_OF, RDF_TYPE};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub const FIRST_NS: &str = "http://first.example/";
pub const SECOND_NS: &str = "http://second.example/";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Profile {
    /// People with places, employers and spouses.
    #[default]
    People,
    /// Restaurants with addresses and phone numbers.
    Restaurants,
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Profile::People => "people",
            Profile::Restaurants => "restaurants",
        })
    }
}

impl FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "people" => Ok(Profile::People),
            "restaurants" => Ok(Profile::Restaurants),
            _ => Err(format!("unknown profile `{s}` (expected people or restaurants)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub profile: Profile,
    pub seed: u64,
    /// Number of entities, all kinds together.
    pub instances: usize,
    /// Give second-ontology entities opaque, shuffled names.
    pub rename_all: bool,
    /// Probability that a non-key fact is missing from the second ontology.
    pub attribute_drop: f64,
    /// Probability that a non-key literal is misspelled in the second ontology.
    pub literal_perturbation: f64,
    /// Probability that a key literal is misspelled in the second ontology.
    pub key_perturbation: f64,
    /// Render phone numbers, addresses and categories differently in the
    /// second ontology.
    pub format_drift: bool,
    /// Relations of the first ontology split into two second-ontology relations.
    pub split_relations: usize,
    /// Relation pairs of the first ontology merged into one second-ontology relation.
    pub merge_relations: usize,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            profile: Profile::People,
            seed: 0,
            instances: 1000,
            rename_all: true,
            attribute_drop: 0.0,
            literal_perturbation: 0.0,
            key_perturbation: 0.0,
            format_drift: false,
            split_relations: 0,
            merge_relations: 0,
        }
    }
}

/// Generated pair plus ground truth. Identifiers are full IRIs.
#[derive(Debug, Clone, Default)]
pub struct Fixture {
    pub first: Vec<LexicalTriple>,
    pub second: Vec<LexicalTriple>,
    pub gold_instances: Vec<(String, String)>,
    /// `(first relation, second relation, direction)`.
    pub gold_relations: Vec<(String, String, Direction)>,
    pub gold_classes: Vec<(String, String, Direction)>,
}

#[derive(Debug, Clone)]
pub struct FixturePaths {
    pub first: PathBuf,
    pub second: PathBuf,
    pub gold_instances: PathBuf,
    pub gold_relations: PathBuf,
    pub gold_classes: PathBuf,
}

// ---------------------------------------------------------------------------
// abstract world

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LitKind {
    /// Unique per entity; never dropped or perturbed.
    Key,
    Name,
    Phone,
    Address,
    Category,
    Plain,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Value {
    Entity(usize),
    Literal(String, LitKind),
}

#[derive(Debug, Clone)]
struct Fact {
    subject: usize,
    relation: &'static str,
    value: Value,
}

struct Entity {
    local: String,
    class: &'static str,
}

#[derive(Default)]
struct World {
    entities: Vec<Entity>,
    facts: Vec<Fact>,
    /// `(subclass, superclass)` in first-ontology names.
    hierarchy: Vec<(&'static str, &'static str)>,
    /// First-ontology relation name → second-ontology relation name.
    relation_names: Vec<(&'static str, &'static str)>,
    class_names: Vec<(&'static str, &'static str)>,
    splittable: Vec<&'static str>,
    mergeable: Vec<(&'static str, &'static str, &'static str)>,
}

impl World {
    fn add(&mut self, class: &'static str, local: String) -> usize {
        self.entities.push(Entity { local, class });
        self.entities.len() - 1
    }

    fn fact(&mut self, subject: usize, relation: &'static str, value: Value) {
        self.facts.push(Fact {
            subject,
            relation,
            value,
        });
    }

    fn lit(&mut self, subject: usize, relation: &'static str, text: String, kind: LitKind) {
        self.fact(subject, relation, Value::Literal(text, kind));
    }

    fn link(&mut self, subject: usize, relation: &'static str, object: usize) {
        self.fact(subject, relation, Value::Entity(object));
    }
}

const FIRST_NAMES: &[&str] = &[
    "Ada", "Alan", "Alice", "Anna", "Boris", "Carla", "Chen", "Clara", "David", "Dora", "Elena", "Emil", "Farah",
    "Felix", "Greta", "Hana", "Ivan", "Jonas", "Karin", "Lars", "Lena", "Marco", "Maria", "Nadia", "Omar", "Paula",
    "Pedro", "Rosa", "Sven", "Tariq", "Una", "Vera", "Wang", "Yara", "Zoe",
];

const LAST_NAMES: &[&str] = &[
    "Almeida", "Berg", "Castro", "Dahl", "Eriksen", "Fischer", "Garcia", "Haas", "Ibrahim", "Jensen", "Kowalski",
    "Lindqvist", "Moreau", "Novak", "Okafor", "Petrov", "Quinn", "Rossi", "Schmidt", "Tanaka", "Ueda", "Varga",
    "Weber", "Xu", "Yilmaz", "Zimmer",
];

const PLACE_STEMS: &[&str] = &[
    "Ash", "Brook", "Cedar", "Dale", "Elm", "Fair", "Glen", "High", "Iron", "Lake", "Mill", "North", "Oak", "Pine",
    "Red", "Stone", "West", "Wind",
];

const PLACE_SUFFIXES: &[&str] = &["ford", "ton", "field", "haven", "bury", "port", "wood", "mouth"];

const STREETS: &[&str] = &[
    "Main", "Sunset", "Ocean", "Market", "Hill", "Park", "Lake", "Broadway", "Melrose", "Mission", "Pico", "Vine",
];

const CUISINES: &[&str] = &[
    "american", "californian", "french", "italian", "japanese", "mexican", "seafood", "steakhouses", "delis",
    "chinese", "thai", "indian",
];

const DISH_WORDS: &[&str] = &[
    "Garden", "Grill", "Bistro", "Kitchen", "Table", "Cafe", "House", "Corner", "Room", "Tavern", "Diner", "Place",
];

const ADJECTIVES: &[&str] = &[
    "Golden", "Blue", "Little", "Old", "Silver", "Green", "Happy", "Royal", "Lucky", "Wild", "Quiet", "Grand",
];

fn phone(rng: &mut ChaCha8Rng, used: &mut BTreeSet<String>) -> String {
    loop {
        let p = format!(
            "{}/{:03}-{:04}",
            rng.gen_range(200..1000),
            rng.gen_range(200..1000),
            rng.gen_range(0..10000)
        );
        if used.insert(p.clone()) {
            return p;
        }
    }
}

fn split_counts(n: usize, shares: &[f64]) -> Vec<usize> {
    let mut counts: Vec<usize> = shares.iter().map(|s| ((n as f64 * s).floor() as usize).max(1)).collect();
    let assigned: usize = counts.iter().sum();
    counts[0] = (counts[0] + n).saturating_sub(assigned).max(1);
    counts
}

fn people_world(rng: &mut ChaCha8Rng, n: usize) -> World {
    let mut w = World::default();
    let counts = split_counts(n, &[0.80, 0.10, 0.07, 0.03]);
    let (people, cities, orgs, countries) = (counts[0], counts[1], counts[2], counts[3]);

    let country_ids: Vec<usize> = (0..countries)
        .map(|i| {
            let e = w.add("Country", format!("country_{i}"));
            w.lit(e, "hasKey", format!("country-{i:04}"), LitKind::Key);
            let stem = PLACE_STEMS[i % PLACE_STEMS.len()];
            w.lit(e, "name", format!("{stem}land {i}"), LitKind::Name);
            e
        })
        .collect();
    let city_ids: Vec<usize> = (0..cities)
        .map(|i| {
            let e = w.add("City", format!("city_{i}"));
            let name = format!(
                "{}{} {i}",
                PLACE_STEMS.choose(rng).unwrap(),
                PLACE_SUFFIXES.choose(rng).unwrap()
            );
            w.lit(e, "hasKey", format!("city-{i:05}"), LitKind::Key);
            w.lit(e, "name", name, LitKind::Name);
            w.link(e, "locatedIn", *country_ids.choose(rng).unwrap());
            w.lit(e, "population", rng.gen_range(1_000..5_000_000).to_string(), LitKind::Plain);
            e
        })
        .collect();
    let org_ids: Vec<usize> = (0..orgs)
        .map(|i| {
            let e = w.add("Organization", format!("org_{i}"));
            w.lit(e, "hasKey", format!("org-{i:05}"), LitKind::Key);
            let name = format!("{} {} Institute", ADJECTIVES.choose(rng).unwrap(), LAST_NAMES.choose(rng).unwrap());
            w.lit(e, "name", name, LitKind::Name);
            w.link(e, "basedIn", *city_ids.choose(rng).unwrap());
            e
        })
        .collect();

    let occupations = ["Scientist", "Artist", "Athlete", "Politician"];
    let mut phones = BTreeSet::new();
    let person_ids: Vec<usize> = (0..people)
        .map(|i| {
            let class = occupations[rng.gen_range(0..occupations.len())];
            let e = w.add(class, format!("person_{i}"));
            w.lit(e, "hasKey", format!("P-{i:06}"), LitKind::Key);
            let name = format!("{} {}", FIRST_NAMES.choose(rng).unwrap(), LAST_NAMES.choose(rng).unwrap());
            w.lit(e, "name", name, LitKind::Name);
            let date = format!(
                "{}-{:02}-{:02}",
                rng.gen_range(1920..2005),
                rng.gen_range(1..=12),
                rng.gen_range(1..=28)
            );
            w.lit(e, "birthDate", date, LitKind::Plain);
            let p = phone(rng, &mut phones);
            w.lit(e, "phone", p, LitKind::Phone);
            if rng.gen_bool(0.5) {
                let f = phone(rng, &mut phones);
                w.lit(e, "fax", f, LitKind::Phone);
            }
            w.link(e, "bornIn", *city_ids.choose(rng).unwrap());
            if rng.gen_bool(0.3) {
                w.link(e, "diedIn", *city_ids.choose(rng).unwrap());
            }
            w.link(e, "livesIn", *city_ids.choose(rng).unwrap());
            if rng.gen_bool(0.3) {
                w.link(e, "livesIn", *city_ids.choose(rng).unwrap());
            }
            w.link(e, "worksFor", *org_ids.choose(rng).unwrap());
            e
        })
        .collect();
    let mut singles = person_ids.clone();
    singles.shuffle(rng);
    for couple in singles.chunks(2).take(people / 4) {
        if let [a, b] = couple {
            w.link(*a, "marriedTo", *b);
            w.link(*b, "marriedTo", *a);
        }
    }

    w.hierarchy = occupations.iter().map(|&c| (c, "Person")).collect();
    w.relation_names = vec![
        ("hasKey", "identifier"),
        ("name", "label"),
        ("birthDate", "dateOfBirth"),
        ("phone", "telephone"),
        ("fax", "faxNumber"),
        ("bornIn", "birthPlace"),
        ("diedIn", "deathPlace"),
        ("livesIn", "residence"),
        ("worksFor", "employer"),
        ("marriedTo", "spouse"),
        ("locatedIn", "country"),
        ("population", "populationTotal"),
        ("basedIn", "headquarters"),
    ];
    w.class_names = vec![
        ("Person", "Human"),
        ("Scientist", "Researcher"),
        ("Artist", "Creator"),
        ("Athlete", "Sportsperson"),
        ("Politician", "Officeholder"),
        ("City", "Town"),
        ("Organization", "Institution"),
        ("Country", "Nation"),
    ];
    w.splittable = vec!["livesIn", "worksFor", "bornIn"];
    w.mergeable = vec![("bornIn", "diedIn", "associatedPlace"), ("phone", "fax", "contactNumber")];
    w
}

fn restaurants_world(rng: &mut ChaCha8Rng, n: usize) -> World {
    let mut w = World::default();
    let counts = split_counts(n, &[0.9, 0.1]);
    let (restaurants, cities) = (counts[0], counts[1]);
    let city_ids: Vec<usize> = (0..cities)
        .map(|i| {
            let e = w.add("City", format!("city_{i}"));
            let name = format!(
                "{}{} {i}",
                PLACE_STEMS.choose(rng).unwrap(),
                PLACE_SUFFIXES.choose(rng).unwrap()
            );
            w.lit(e, "name", name, LitKind::Key);
            e
        })
        .collect();
    let mut phones = BTreeSet::new();
    for i in 0..restaurants {
        let e = w.add("Restaurant", format!("restaurant_{i}"));
        let name = format!(
            "{} {} {i}",
            ADJECTIVES.choose(rng).unwrap(),
            DISH_WORDS.choose(rng).unwrap()
        );
        w.lit(e, "name", name, LitKind::Key);
        let address = format!(
            "{} {} {}",
            rng.gen_range(1..9999),
            STREETS.choose(rng).unwrap(),
            if rng.gen_bool(0.5) { "St." } else { "Ave." }
        );
        w.lit(e, "address", address, LitKind::Address);
        let p = phone(rng, &mut phones);
        w.lit(e, "phone", p, LitKind::Phone);
        let cuisine = CUISINES.choose(rng).unwrap().to_string();
        w.lit(e, "category", cuisine, LitKind::Category);
        w.link(e, "inCity", *city_ids.choose(rng).unwrap());
    }
    w.relation_names = vec![
        ("name", "title"),
        ("address", "street"),
        ("phone", "telephone"),
        ("category", "cuisine"),
        ("inCity", "locatedIn"),
    ];
    w.class_names = vec![("Restaurant", "Eatery"), ("City", "Town")];
    w.splittable = vec!["inCity"];
    w.mergeable = vec![("address", "phone", "contact")];
    w
}

// ---------------------------------------------------------------------------
// rendering

fn drift(text: &str, kind: LitKind) -> String {
    match kind {
        LitKind::Phone => text.replacen('/', "-", 1),
        LitKind::Address => text.replace("St.", "Street").replace("Ave.", "Avenue"),
        LitKind::Category => {
            let mut c = text.chars();
            match c.next() {
                Some(f) => f.to_uppercase().chain(c).collect::<String>() + " cuisine",
                None => String::new(),
            }
        }
        _ => text.to_string(),
    }
}

fn perturb(rng: &mut ChaCha8Rng, text: &str) -> String {
    let chars: Vec<char> = text.chars().collect();
    if chars.len() < 2 {
        return format!("{text}x");
    }
    let i = rng.gen_range(0..chars.len() - 1);
    let mut out = chars.clone();
    match rng.gen_range(0..3) {
        0 => out.swap(i, i + 1),
        1 => {
            out.remove(i);
        }
        _ => out.insert(i, 'x'),
    }
    let s: String = out.into_iter().collect();
    if s == text {
        format!("{text}x")
    } else {
        s
    }
}

fn iri(ns: &str, kind: &str, local: &str) -> String {
    format!("{ns}{kind}/{local}")
}

pub fn generate(cfg: &GeneratorConfig) -> Fixture {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = cfg.instances.max(4);
    let world = match cfg.profile {
        Profile::People => people_world(&mut rng, n),
        Profile::Restaurants => restaurants_world(&mut rng, n),
    };

    let second_local: Vec<String> = if cfg.rename_all {
        let mut order: Vec<usize> = (0..world.entities.len()).collect();
        order.shuffle(&mut rng);
        let mut names = vec![String::new(); order.len()];
        for (k, &e) in order.iter().enumerate() {
            names[e] = format!("e{k:06}");
        }
        names
    } else {
        world.entities.iter().map(|e| e.local.clone()).collect()
    };
    let first_entity = |e: usize| iri(FIRST_NS, "resource", &world.entities[e].local);
    let second_entity = |e: usize| iri(SECOND_NS, "resource", &second_local[e]);
    let first_term = |name: &str| iri(FIRST_NS, "ontology", name);
    let second_term = |name: &str| iri(SECOND_NS, "ontology", name);
    let second_name = |rel: &str| -> &'static str {
        world
            .relation_names
            .iter()
            .find(|(a, _)| *a == rel)
            .map(|(_, b)| *b)
            .expect("relation without second name")
    };
    let second_class = |c: &str| -> &'static str {
        world
            .class_names
            .iter()
            .find(|(a, _)| *a == c)
            .map(|(_, b)| *b)
            .expect("class without second name")
    };

    // relation restructuring
    let merges: Vec<(&str, &str, &str)> = world.mergeable.iter().copied().take(cfg.merge_relations).collect();
    let merged = |rel: &str| merges.iter().any(|&(a, b, _)| a == rel || b == rel);
    let splits: Vec<&str> = world
        .splittable
        .iter()
        .copied()
        .filter(|r| !merged(r))
        .take(cfg.split_relations)
        .collect();

    let mut fx = Fixture::default();
    let mut gold_rel: BTreeSet<(String, String, Direction)> = BTreeSet::new();
    for &(a, b) in &world.relation_names {
        if merged(a) || splits.contains(&a) {
            continue;
        }
        gold_rel.insert((first_term(a), second_term(b), Direction::Equivalence));
    }
    for &(a, b, target) in &merges {
        for r in [a, b] {
            gold_rel.insert((first_term(r), second_term(target), Direction::LeftInRight));
        }
    }
    let split_name = |rel: &str, part: char| format!("{}{part}", second_name(rel));
    for &r in &splits {
        for part in ['A', 'B'] {
            gold_rel.insert((first_term(r), second_term(&split_name(r, part)), Direction::RightInLeft));
        }
    }
    fx.gold_relations = gold_rel.into_iter().collect();

    let lit_node = |text: &str, kind: LitKind, first: bool| -> Node {
        if first && kind == LitKind::Name {
            Node::Literal {
                value: text.to_string(),
                datatype: None,
                language: Some("en".into()),
            }
        } else {
            Node::literal(text)
        }
    };

    for (e, entity) in world.entities.iter().enumerate() {
        fx.first.push(LexicalTriple::new(
            Node::Iri(first_entity(e)),
            RDF_TYPE,
            Node::Iri(first_term(entity.class)),
        ));
        fx.second.push(LexicalTriple::new(
            Node::Iri(second_entity(e)),
            RDF_TYPE,
            Node::Iri(second_term(second_class(entity.class))),
        ));
        fx.gold_instances.push((first_entity(e), second_entity(e)));
    }
    for &(sub, sup) in &world.hierarchy {
        fx.first.push(LexicalTriple::new(
            Node::Iri(first_term(sub)),
            RDFS_SUBCLASS_OF,
            Node::Iri(first_term(sup)),
        ));
        fx.second.push(LexicalTriple::new(
            Node::Iri(second_term(second_class(sub))),
            RDFS_SUBCLASS_OF,
            Node::Iri(second_term(second_class(sup))),
        ));
    }
    fx.gold_classes = world
        .class_names
        .iter()
        .map(|&(a, b)| (first_term(a), second_term(b), Direction::Equivalence))
        .collect();

    for fact in &world.facts {
        let first_object = match &fact.value {
            Value::Entity(o) => Node::Iri(first_entity(*o)),
            Value::Literal(t, k) => lit_node(t, *k, true),
        };
        fx.first.push(LexicalTriple::new(
            Node::Iri(first_entity(fact.subject)),
            first_term(fact.relation),
            first_object,
        ));

        let is_key = matches!(fact.value, Value::Literal(_, LitKind::Key));
        if !is_key && cfg.attribute_drop > 0.0 && rng.gen_bool(cfg.attribute_drop.min(1.0)) {
            continue;
        }
        let second_object = match &fact.value {
            Value::Entity(o) => Node::Iri(second_entity(*o)),
            Value::Literal(t, k) => {
                let mut text = if cfg.format_drift { drift(t, *k) } else { t.clone() };
                let rate = if is_key { cfg.key_perturbation } else { cfg.literal_perturbation };
                if rate > 0.0 && rng.gen_bool(rate.min(1.0)) {
                    text = perturb(&mut rng, &text);
                }
                lit_node(&text, *k, false)
            }
        };
        let relation = if let Some(&(_, _, target)) = merges.iter().find(|m| m.0 == fact.relation || m.1 == fact.relation) {
            second_term(target)
        } else if splits.contains(&fact.relation) {
            let part = if rng.gen_bool(0.7) { 'A' } else { 'B' };
            second_term(&split_name(fact.relation, part))
        } else {
            second_term(second_name(fact.relation))
        };
        fx.second
            .push(LexicalTriple::new(Node::Iri(second_entity(fact.subject)), relation, second_object));
    }
    fx.second.shuffle(&mut rng);
    fx
}

fn write_lines(path: &Path, lines: impl IntoIterator<Item = String>) -> io::Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    for l in lines {
        writeln!(out, "{l}")?;
    }
    out.flush()
}

/// Writes `first.nt`, `second.nt` and the three gold TSVs into `dir`.
pub fn write_fixture(fx: &Fixture, dir: &Path) -> io::Result<FixturePaths> {
    std::fs::create_dir_all(dir)?;
    let paths = FixturePaths {
        first: dir.join("first.nt"),
        second: dir.join("second.nt"),
        gold_instances: dir.join("gold_instances.tsv"),
        gold_relations: dir.join("gold_relations.tsv"),
        gold_classes: dir.join("gold_classes.tsv"),
    };
    write_lines(&paths.first, fx.first.iter().map(LexicalTriple::to_ntriples))?;
    write_lines(&paths.second, fx.second.iter().map(LexicalTriple::to_ntriples))?;
    write_lines(&paths.gold_instances, fx.gold_instances.iter().map(|(a, b)| format!("{a}\t{b}")))?;
    write_lines(
        &paths.gold_relations,
        fx.gold_relations.iter().map(|(a, b, d)| format!("{a}\t{b}\t{}", d.as_str())),
    )?;
    write_lines(
        &paths.gold_classes,
        fx.gold_classes.iter().map(|(a, b, d)| format!("{a}\t{b}\t{}", d.as_str())),
    )?;
    Ok(paths)
}

/// Reads a gold relation or class TSV written by [`write_fixture`].
pub fn read_directed_gold(path: &Path) -> io::Result<Vec<(String, String, Direction)>> {
    let text = std::fs::read_to_string(path)?;
    Ok(text
        .lines()
        .filter_map(|l| {
            let mut cols = l.split('\t');
            let (a, b, d) = (cols.next()?, cols.next()?, cols.next()?);
            Some((a.to_string(), b.to_string(), Direction::parse(d)?))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn same_seed_same_fixture() {
        let cfg = GeneratorConfig {
            instances: 200,
            attribute_drop: 0.2,
            literal_perturbation: 0.1,
            ..GeneratorConfig::default()
        };
        let a = generate(&cfg);
        let b = generate(&cfg);
        assert_eq!(a.first, b.first);
        assert_eq!(a.second, b.second);
        let c = generate(&GeneratorConfig { seed: 1, ..cfg });
        assert_ne!(a.second, c.second);
    }

    #[test]
    fn gold_is_a_bijection_over_all_entities() {
        let fx = generate(&GeneratorConfig {
            instances: 1000,
            ..GeneratorConfig::default()
        });
        assert_eq!(fx.gold_instances.len(), 1000);
        let lefts: HashSet<_> = fx.gold_instances.iter().map(|p| &p.0).collect();
        let rights: HashSet<_> = fx.gold_instances.iter().map(|p| &p.1).collect();
        assert_eq!(lefts.len(), 1000);
        assert_eq!(rights.len(), 1000);
    }

    #[test]
    fn key_literals_are_unique_and_survive_noise() {
        let fx = generate(&GeneratorConfig {
            instances: 300,
            attribute_drop: 0.9,
            literal_perturbation: 0.9,
            ..GeneratorConfig::default()
        });
        let keys = |triples: &[LexicalTriple], rel: &str| -> Vec<String> {
            triples
                .iter()
                .filter(|t| t.predicate.ends_with(rel))
                .map(|t| t.object.lexical())
                .collect()
        };
        let first = keys(&fx.first, "/hasKey");
        let second = keys(&fx.second, "/identifier");
        assert_eq!(first.len(), 300);
        assert_eq!(first.iter().collect::<HashSet<_>>().len(), 300);
        assert_eq!(
            first.iter().collect::<HashSet<_>>(),
            second.iter().collect::<HashSet<_>>()
        );
    }

    #[test]
    fn split_and_merge_are_recorded() {
        let fx = generate(&GeneratorConfig {
            instances: 100,
            split_relations: 1,
            merge_relations: 1,
            ..GeneratorConfig::default()
        });
        let dirs: Vec<_> = fx.gold_relations.iter().filter(|g| g.2 != Direction::Equivalence).collect();
        assert_eq!(dirs.len(), 4);
        assert!(fx.second.iter().any(|t| t.predicate.ends_with("/associatedPlace")));
        assert!(fx.second.iter().any(|t| t.predicate.ends_with("/residenceA")));
        assert!(!fx.second.iter().any(|t| t.predicate.ends_with("/residence")));
    }

    #[test]
    fn format_drift_changes_phone_separator() {
        assert_eq!(drift("213/467-1108", LitKind::Phone), "213-467-1108");
        assert_eq!(drift("12 Main St.", LitKind::Address), "12 Main Street");
        assert_eq!(drift("french", LitKind::Category), "French cuisine");
        assert_eq!(drift("Alice", LitKind::Name), "Alice");
    }
}
