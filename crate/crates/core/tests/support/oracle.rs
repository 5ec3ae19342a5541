//! Naive all-pairs evaluator of the alignment equations.
//!
//! Shares nothing with the engine beyond the store's read API and literal
//! comparison: functionalities are recounted from the statement set, every
//! instance pair is scored, and inclusion denominators range over all terms
//! of the other ontology.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use ontoalign_core::engine::PenaltyForm;
use ontoalign_core::literal::literal_equality;
use ontoalign_core::{AlignmentConfig, Ontology, RelId, TermId, TermKind};

pub type Pairs = BTreeMap<(TermId, TermId), f64>;
pub type RelPairs = BTreeMap<(RelId, RelId), f64>;

#[derive(Debug, Clone)]
pub struct Snapshot {
    pub equivalences: Pairs,
    /// `P(r ⊆ r2)`, `r` from the first ontology.
    pub first_in_second: RelPairs,
    /// `P(r2 ⊆ r)`, keyed `(r2, r)`.
    pub second_in_first: RelPairs,
}

pub struct Naive<'a> {
    o1: &'a Ontology,
    o2: &'a Ontology,
    cfg: AlignmentConfig,
    fun1: HashMap<RelId, f64>,
    fun2: HashMap<RelId, f64>,
    stmts1: BTreeMap<TermId, Vec<(RelId, TermId)>>,
    stmts2: BTreeMap<TermId, Vec<(RelId, TermId)>>,
    pairs1: BTreeMap<RelId, Vec<(TermId, TermId)>>,
    pairs2: BTreeMap<RelId, Vec<(TermId, TermId)>>,
    eq: Pairs,
    best1: BTreeMap<TermId, TermId>,
    best2: BTreeMap<TermId, TermId>,
    sub12: Option<RelPairs>,
    sub21: Option<RelPairs>,
}

fn functionality(pairs: &BTreeMap<RelId, Vec<(TermId, TermId)>>) -> HashMap<RelId, f64> {
    pairs
        .iter()
        .map(|(&r, ps)| {
            let subjects: BTreeSet<TermId> = ps.iter().map(|p| p.0).collect();
            (r, subjects.len() as f64 / ps.len() as f64)
        })
        .collect()
}

fn index(o: &Ontology) -> (BTreeMap<TermId, Vec<(RelId, TermId)>>, BTreeMap<RelId, Vec<(TermId, TermId)>>) {
    let mut all: Vec<_> = o.statements().collect();
    all.sort();
    let mut by_s: BTreeMap<TermId, Vec<(RelId, TermId)>> = BTreeMap::new();
    let mut by_r: BTreeMap<RelId, Vec<(TermId, TermId)>> = BTreeMap::new();
    for s in all {
        if o.is_schema_relation(s.relation) {
            continue;
        }
        by_s.entry(s.subject).or_default().push((s.relation, s.object));
        by_r.entry(s.relation).or_default().push((s.subject, s.object));
    }
    (by_s, by_r)
}

fn argmax(cands: &[(TermId, f64)], lex: impl Fn(TermId) -> String) -> Option<TermId> {
    let best = cands.iter().map(|c| c.1).fold(f64::NEG_INFINITY, f64::max);
    let mut tied: Vec<(String, TermId)> = cands
        .iter()
        .filter(|c| c.1 >= best - 1e-12)
        .map(|c| (lex(c.0), c.0))
        .collect();
    tied.sort();
    tied.first().map(|t| t.1)
}

impl<'a> Naive<'a> {
    pub fn new(o1: &'a Ontology, o2: &'a Ontology, cfg: AlignmentConfig) -> Self {
        let (stmts1, pairs1) = index(o1);
        let (stmts2, pairs2) = index(o2);
        Naive {
            o1,
            o2,
            cfg,
            fun1: functionality(&pairs1),
            fun2: functionality(&pairs2),
            stmts1,
            stmts2,
            pairs1,
            pairs2,
            eq: Pairs::new(),
            best1: BTreeMap::new(),
            best2: BTreeMap::new(),
            sub12: None,
            sub21: None,
        }
    }

    fn fun1(&self, r: RelId) -> f64 {
        self.fun1.get(&r).copied().unwrap_or(1.0)
    }

    fn fun2(&self, r: RelId) -> f64 {
        self.fun2.get(&r).copied().unwrap_or(1.0)
    }

    /// `P(a ≡ b)`, `a` from the first ontology.
    pub fn equal(&self, a: TermId, b: TermId) -> f64 {
        match (self.o1.kind(a), self.o2.kind(b)) {
            (TermKind::Literal, TermKind::Literal) => {
                literal_equality(self.o1.lexical(a), self.o2.lexical(b), self.cfg.literal_mode)
            }
            (TermKind::Instance, TermKind::Instance) => {
                let admitted = !self.cfg.restrict_to_assignment
                    || self.best1.get(&a) == Some(&b)
                    || self.best2.get(&b) == Some(&a);
                if admitted {
                    self.eq.get(&(a, b)).copied().unwrap_or(0.0)
                } else {
                    0.0
                }
            }
            _ => 0.0,
        }
    }

    fn sub12(&self, r: RelId, r2: RelId) -> f64 {
        match &self.sub12 {
            None => self.cfg.theta,
            Some(m) => m.get(&(r, r2)).copied().unwrap_or(0.0),
        }
    }

    fn sub21(&self, r2: RelId, r: RelId) -> f64 {
        match &self.sub21 {
            None => self.cfg.theta,
            Some(m) => m.get(&(r2, r)).copied().unwrap_or(0.0),
        }
    }

    fn relations(o: &Ontology) -> Vec<RelId> {
        o.relations().filter(|&r| !o.is_schema_relation(r)).collect()
    }

    pub fn score(&self, x: TermId, x2: TermId) -> f64 {
        let empty = Vec::new();
        let s1 = self.stmts1.get(&x).unwrap_or(&empty);
        let s2 = self.stmts2.get(&x2).unwrap_or(&empty);
        let mut miss = 1.0;
        for &(r, y) in s1 {
            for &(r2, y2) in s2 {
                let e = self.equal(y, y2);
                miss *= (1.0 - self.sub21(r2, r) * self.fun1(self.o1.inverse(r)) * e)
                    * (1.0 - self.sub12(r, r2) * self.fun2(self.o2.inverse(r2)) * e);
            }
        }
        let mut p = 1.0 - miss;
        if self.cfg.negative_evidence {
            for &(r, y) in s1 {
                for r2 in Self::relations(self.o2) {
                    let vals: Vec<TermId> = s2.iter().filter(|s| s.0 == r2).map(|s| s.1).collect();
                    let none: f64 = match self.cfg.penalty_form {
                        PenaltyForm::ObjectMismatch => vals.iter().map(|&y2| 1.0 - self.equal(y, y2)).product(),
                        PenaltyForm::SubjectMismatch => {
                            let prev = self.eq.get(&(x, x2)).copied().unwrap_or(0.0);
                            vals.iter().map(|_| 1.0 - prev).product()
                        }
                    };
                    p *= (1.0 - self.fun1(r) * self.sub21(r2, r) * none)
                        * (1.0 - self.fun2(r2) * self.sub12(r, r2) * none);
                }
            }
        }
        p.clamp(0.0, 1.0)
    }

    fn inclusion(
        pairs_r: &[(TermId, TermId)],
        pairs_r2: &[(TermId, TermId)],
        others: &[TermId],
        eq: impl Fn(TermId, TermId) -> f64,
    ) -> f64 {
        let mut num = 0.0;
        let mut den = 0.0;
        for &(x, y) in pairs_r {
            let mut m = 1.0;
            for &(x2, y2) in pairs_r2 {
                m *= 1.0 - eq(x, x2) * eq(y, y2);
            }
            num += 1.0 - m;
            let mut d = 1.0;
            for &x2 in others {
                let ex = eq(x, x2);
                if ex == 0.0 {
                    continue;
                }
                for &y2 in others {
                    d *= 1.0 - ex * eq(y, y2);
                }
            }
            den += 1.0 - d;
        }
        if den > 0.0 {
            num / den
        } else {
            0.0
        }
    }

    /// One iteration; returns the new tables.
    pub fn step(&mut self) -> Snapshot {
        let inst1: Vec<TermId> = self.o1.instances().collect();
        let inst2: Vec<TermId> = self.o2.instances().collect();
        let mut eq = Pairs::new();
        for &x in &inst1 {
            for &x2 in &inst2 {
                let p = self.score(x, x2);
                if p > self.cfg.theta {
                    eq.insert((x, x2), p);
                }
            }
        }
        self.eq = eq;
        self.best1.clear();
        self.best2.clear();
        for &x in &inst1 {
            let row: Vec<(TermId, f64)> = inst2
                .iter()
                .filter_map(|&x2| self.eq.get(&(x, x2)).map(|&p| (x2, p)))
                .collect();
            if let Some(b) = argmax(&row, |t| self.o2.lexical(t).to_string()) {
                self.best1.insert(x, b);
            }
        }
        for &x2 in &inst2 {
            let col: Vec<(TermId, f64)> = inst1
                .iter()
                .filter_map(|&x| self.eq.get(&(x, x2)).map(|&p| (x, p)))
                .collect();
            if let Some(b) = argmax(&col, |t| self.o1.lexical(t).to_string()) {
                self.best2.insert(x2, b);
            }
        }

        let terms1: Vec<TermId> = self.o1.terms().map(|t| t.id).collect();
        let terms2: Vec<TermId> = self.o2.terms().map(|t| t.id).collect();
        let empty = Vec::new();
        let mut sub12 = RelPairs::new();
        for r in Self::relations(self.o1) {
            for r2 in Self::relations(self.o2) {
                let p = Self::inclusion(
                    self.pairs1.get(&r).unwrap_or(&empty),
                    self.pairs2.get(&r2).unwrap_or(&empty),
                    &terms2,
                    |a, b| self.equal(a, b),
                );
                if p > 0.0 {
                    sub12.insert((r, r2), p.min(1.0));
                }
            }
        }
        let mut sub21 = RelPairs::new();
        for r2 in Self::relations(self.o2) {
            for r in Self::relations(self.o1) {
                let p = Self::inclusion(
                    self.pairs2.get(&r2).unwrap_or(&empty),
                    self.pairs1.get(&r).unwrap_or(&empty),
                    &terms1,
                    |a, b| self.equal(b, a),
                );
                if p > 0.0 {
                    sub21.insert((r2, r), p.min(1.0));
                }
            }
        }
        self.sub12 = Some(sub12.clone());
        self.sub21 = Some(sub21.clone());
        Snapshot {
            equivalences: self.eq.clone(),
            first_in_second: sub12,
            second_in_first: sub21,
        }
    }

    /// `P(c ⊆ c2)` for all class pairs in both directions; zero entries omitted.
    pub fn classes(&self) -> (Pairs, Pairs) {
        let c1: Vec<TermId> = self.o1.classes().collect();
        let c2: Vec<TermId> = self.o2.classes().collect();
        let mut forward = Pairs::new();
        let mut backward = Pairs::new();
        for &a in &c1 {
            for &b in &c2 {
                let ma = self.o1.members(a);
                let mb = self.o2.members(b);
                if !ma.is_empty() {
                    let s: f64 = ma
                        .iter()
                        .map(|&x| 1.0 - mb.iter().map(|&y| 1.0 - self.equal(x, y)).product::<f64>())
                        .sum();
                    let p = s / ma.len() as f64;
                    if p > 0.0 {
                        forward.insert((a, b), p);
                    }
                }
                if !mb.is_empty() {
                    let s: f64 = mb
                        .iter()
                        .map(|&y| 1.0 - ma.iter().map(|&x| 1.0 - self.equal(x, y)).product::<f64>())
                        .sum();
                    let p = s / mb.len() as f64;
                    if p > 0.0 {
                        backward.insert((b, a), p);
                    }
                }
            }
        }
        (forward, backward)
    }
}

/// Largest absolute difference between two sparse tables (absent = 0).
pub fn max_diff<K: Ord + Copy>(a: &BTreeMap<K, f64>, b: &BTreeMap<K, f64>) -> f64 {
    let keys: BTreeSet<K> = a.keys().chain(b.keys()).copied().collect();
    keys.iter()
        .map(|k| (a.get(k).copied().unwrap_or(0.0) - b.get(k).copied().unwrap_or(0.0)).abs())
        .fold(0.0, f64::max)
}
