//! Seeded random ontology pairs: a base ontology and a perturbed, renamed copy.

#![allow(dead_code)]

use ontoalign_core::{Ontology, Origin};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy)]
pub struct Shape {
    pub max_instances: usize,
    pub max_relations: usize,
    pub max_classes: usize,
}

impl Default for Shape {
    fn default() -> Self {
        Shape {
            max_instances: 50,
            max_relations: 8,
            max_classes: 5,
        }
    }
}

pub fn random_pair(seed: u64, shape: Shape) -> (Ontology, Ontology) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(5..=shape.max_instances);
    let k = rng.gen_range(1..=shape.max_relations);
    let m = rng.gen_range(1..=shape.max_classes);

    // (relation, literal_valued, value pool size)
    let rels: Vec<(usize, bool, usize)> = (0..k)
        .map(|i| (i, rng.gen_bool(0.5), rng.gen_range(1..=n.max(2))))
        .collect();
    let mut facts: Vec<(usize, usize, Value)> = Vec::new();
    for x in 0..n {
        for &(r, lit, pool) in &rels {
            if !rng.gen_bool(0.6) {
                continue;
            }
            for _ in 0..rng.gen_range(1..=2) {
                let v = if lit {
                    Value::Lit(rng.gen_range(0..pool))
                } else {
                    Value::Inst(rng.gen_range(0..n))
                };
                facts.push((x, r, v));
            }
        }
    }
    let mut types: Vec<(usize, usize)> = Vec::new();
    for x in 0..n {
        if rng.gen_bool(0.7) {
            types.push((x, rng.gen_range(0..m)));
        }
    }

    // second ontology: relations possibly merged, some facts dropped or altered
    let merge: Vec<usize> = (0..k)
        .map(|r| if r > 0 && rng.gen_bool(0.2) { r - 1 } else { r })
        .collect();
    let mut facts2 = Vec::new();
    for &(x, r, v) in &facts {
        if rng.gen_bool(0.15) {
            continue;
        }
        let v = match v {
            Value::Lit(l) if rng.gen_bool(0.1) => Value::Lit(l + 1000),
            other => other,
        };
        facts2.push((x, merge[r], v));
    }
    for _ in 0..rng.gen_range(0..=n / 4) {
        let (r, lit, pool) = *rels.choose(&mut rng).unwrap();
        let v = if lit {
            Value::Lit(rng.gen_range(0..pool))
        } else {
            Value::Inst(rng.gen_range(0..n))
        };
        facts2.push((rng.gen_range(0..n), merge[r], v));
    }
    let types2: Vec<(usize, usize)> = types.iter().copied().filter(|_| rng.gen_bool(0.85)).collect();

    let o1 = build(Origin::First, "a", "r", "c", &facts, &types, n, m);
    let o2 = build(Origin::Second, "b", "q", "d", &facts2, &types2, n, m);
    (o1, o2)
}

#[derive(Debug, Clone, Copy)]
enum Value {
    Lit(usize),
    Inst(usize),
}

#[allow(clippy::too_many_arguments)]
fn build(
    origin: Origin,
    ip: &str,
    rp: &str,
    cp: &str,
    facts: &[(usize, usize, Value)],
    types: &[(usize, usize)],
    n: usize,
    m: usize,
) -> Ontology {
    let mut o = Ontology::new(origin);
    for x in 0..n {
        o.instance(&format!("{ip}{x}"));
    }
    for c in 0..m {
        o.class(&format!("{cp}{c}"));
    }
    for &(x, r, v) in facts {
        let s = o.instance(&format!("{ip}{x}"));
        let rel = o.relation(&format!("{rp}{r}"));
        let obj = match v {
            Value::Lit(l) => o.literal(&format!("\"v{l}\"")),
            Value::Inst(y) => o.instance(&format!("{ip}{y}")),
        };
        o.add_statement(s, rel, obj).unwrap();
    }
    for &(x, c) in types {
        let s = o.instance(&format!("{ip}{x}"));
        let cl = o.class(&format!("{cp}{c}"));
        o.add_type(s, cl).unwrap();
    }
    o.close_under_schema();
    o
}
