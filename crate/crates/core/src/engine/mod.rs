//! The alignment fixpoint.
//!
//! One iteration recomputes every instance equivalence from the previous
//! iteration's tables, derives the maximal assignment, then recomputes every
//! relation inclusion from the new equivalences. All reads within a sweep hit
//! the previous snapshot, so the per-instance and per-relation work is
//! independent and runs on a rayon pool with an order-preserving merge.
//! Class inclusions are computed once, after the last iteration.
//!
//! Unknown equivalences are never stored: every formula uses a pair only
//! through `1 − P`, so an absent pair and a zero pair evaluate identically.

mod classes;
mod instances;
mod relations;
mod tables;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use log::info;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::functionality::{FunctionalityMode, FunctionalityTable};
use crate::literal::{LiteralIndex, LiteralMatcher, LiteralMode};
use crate::ntriples::{AlignmentKind, AlignmentRow, Direction};
use crate::store::{Ontology, Origin, RelId, TermId, TermKind};

pub use tables::{
    ClassAlignmentTable, ClassScore, EquivalenceTable, MaximalAssignment, SubrelationTable,
    TIE_EPSILON,
};

/// How the penalty factors of negative evidence test a disagreeing value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PenaltyForm {
    /// `∏ over r'(x',y') of (1 − P(y ≡ y'))`: no counterpart value matches.
    #[default]
    ObjectMismatch,
    /// `∏ over r'(x',y') of (1 − P(x ≡ x'))`, using the previous score of the
    /// pair under evaluation.
    SubjectMismatch,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case")]
pub struct AlignmentConfig {
    /// Bootstrap value of every relation inclusion, and the storage threshold
    /// for equivalences.
    pub theta: f64,
    pub max_iterations: usize,
    /// Stop once fewer than this fraction of assignments changed.
    pub convergence_fraction: f64,
    /// Statements per relation (instances per class) evaluated when scoring
    /// inclusions.
    pub pair_cap: usize,
    pub negative_evidence: bool,
    pub penalty_form: PenaltyForm,
    /// Use only maximal-assignment pairs as evidence. When off, every stored
    /// equivalence of the previous iteration is used.
    pub restrict_to_assignment: bool,
    /// Minimum class inclusion score written to the class alignment output.
    pub class_score_threshold: f64,
    /// Classes with more instances than this are left out of the class
    /// alignment output.
    pub class_max_instances: Option<usize>,
    pub literal_mode: LiteralMode,
    pub functionality_mode: FunctionalityMode,
    /// Worker threads; 0 lets rayon decide.
    pub threads: usize,
}

impl Default for AlignmentConfig {
    fn default() -> Self {
        AlignmentConfig {
            theta: 0.1,
            max_iterations: 10,
            convergence_fraction: 0.01,
            pair_cap: 10_000,
            negative_evidence: false,
            penalty_form: PenaltyForm::ObjectMismatch,
            restrict_to_assignment: true,
            class_score_threshold: 0.4,
            class_max_instances: None,
            literal_mode: LiteralMode::Strict,
            functionality_mode: FunctionalityMode::HarmonicMean,
            threads: 0,
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("theta must lie in (0, 1), got {0}")]
    Theta(f64),
    #[error("convergence fraction must lie in [0, 1], got {0}")]
    Convergence(f64),
    #[error("pair cap must be positive")]
    PairCap,
    #[error("cannot build worker pool: {0}")]
    Pool(String),
}

impl AlignmentConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.theta > 0.0 && self.theta < 1.0) {
            return Err(ConfigError::Theta(self.theta));
        }
        if !(0.0..=1.0).contains(&self.convergence_fraction) {
            return Err(ConfigError::Convergence(self.convergence_fraction));
        }
        if self.pair_cap == 0 {
            return Err(ConfigError::PairCap);
        }
        Ok(())
    }
}

/// Immutable per-run inputs shared by every sweep.
pub(crate) struct Context<'a> {
    onto: [&'a Ontology; 2],
    fun: [FunctionalityTable; 2],
    /// For each literal, the literals of the other ontology with nonzero equality.
    literal_matches: [HashMap<TermId, Vec<(TermId, f64)>>; 2],
    /// Non-typing relations, inverses included.
    relations: [Vec<RelId>; 2],
    config: AlignmentConfig,
}

pub(crate) fn slot(side: Origin) -> usize {
    match side {
        Origin::First => 0,
        Origin::Second => 1,
    }
}

impl<'a> Context<'a> {
    fn new(
        first: &'a Ontology,
        second: &'a Ontology,
        config: AlignmentConfig,
        matcher: &dyn LiteralMatcher,
    ) -> Self {
        let fun = [
            FunctionalityTable::build(first, config.functionality_mode),
            FunctionalityTable::build(second, config.functionality_mode),
        ];
        let index = [LiteralIndex::build(first, matcher), LiteralIndex::build(second, matcher)];
        let onto = [first, second];
        let mut literal_matches: [HashMap<TermId, Vec<(TermId, f64)>>; 2] = Default::default();
        for lit in first.terms_of_kind(TermKind::Literal) {
            let Some(key) = index[0].key(lit) else { continue };
            for &other in index[1].lookup(key) {
                let p = matcher.score(first.lexical(lit), second.lexical(other)).clamp(0.0, 1.0);
                if p > 0.0 {
                    literal_matches[0].entry(lit).or_default().push((other, p));
                    literal_matches[1].entry(other).or_default().push((lit, p));
                }
            }
        }
        for m in literal_matches.iter_mut() {
            for v in m.values_mut() {
                v.sort_by_key(|&(t, _)| t);
            }
        }
        let relations = [first, second].map(|o| {
            o.relations()
                .filter(|&r| !o.is_schema_relation(r))
                .collect::<Vec<_>>()
        });
        Context {
            onto,
            fun,
            literal_matches,
            relations,
            config,
        }
    }

    pub(crate) fn onto(&self, side: Origin) -> &'a Ontology {
        self.onto[slot(side)]
    }

    pub(crate) fn fun(&self, side: Origin) -> &FunctionalityTable {
        &self.fun[slot(side)]
    }

    pub(crate) fn relations(&self, side: Origin) -> &[RelId] {
        &self.relations[slot(side)]
    }
}

/// Equalities usable as evidence during one sweep: clamped literal pairs plus
/// the instance pairs admitted from the previous table.
pub(crate) struct Evidence<'c, 'a> {
    ctx: &'c Context<'a>,
    instance_matches: [HashMap<TermId, Vec<(TermId, f64)>>; 2],
    table: &'c EquivalenceTable,
}

impl<'c, 'a> Evidence<'c, 'a> {
    pub(crate) fn new(
        ctx: &'c Context<'a>,
        table: &'c EquivalenceTable,
        assignment: &MaximalAssignment,
    ) -> Self {
        let pairs: Vec<(TermId, TermId, f64)> = if ctx.config.restrict_to_assignment {
            assignment
                .pairs()
                .into_iter()
                .map(|(a, b)| (a, b, table.get(a, b)))
                .filter(|&(_, _, p)| p > 0.0)
                .collect()
        } else {
            table.entries()
        };
        let mut instance_matches: [HashMap<TermId, Vec<(TermId, f64)>>; 2] = Default::default();
        for (a, b, p) in pairs {
            instance_matches[0].entry(a).or_default().push((b, p));
            instance_matches[1].entry(b).or_default().push((a, p));
        }
        for m in instance_matches.iter_mut() {
            for v in m.values_mut() {
                v.sort_by_key(|&(t, _)| t);
            }
        }
        Evidence {
            ctx,
            instance_matches,
            table,
        }
    }

    /// Terms of the other ontology with nonzero equality to `term`, by id.
    pub(crate) fn equivalents(&self, side: Origin, term: TermId) -> &[(TermId, f64)] {
        let map = match self.ctx.onto(side).kind(term) {
            TermKind::Literal => &self.ctx.literal_matches[slot(side)],
            TermKind::Instance => &self.instance_matches[slot(side)],
            _ => return &[],
        };
        map.get(&term).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `P(a ≡ b)` with `a` from `side`, `b` from the other ontology.
    pub(crate) fn equality(&self, side: Origin, a: TermId, b: TermId) -> f64 {
        let eq = self.equivalents(side, a);
        eq.binary_search_by_key(&b, |&(t, _)| t)
            .map(|i| eq[i].1)
            .unwrap_or(0.0)
    }

    /// Previous stored score, ignoring the assignment restriction.
    pub(crate) fn previous(&self, side: Origin, a: TermId, b: TermId) -> f64 {
        self.table.get_oriented(side, a, b)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IterationStats {
    pub iteration: usize,
    /// Fraction of assigned first-ontology instances whose assignment changed.
    pub change_fraction: f64,
    pub changed: usize,
    pub equivalences: usize,
    pub subrelations: usize,
    /// Distinct `(x, x')` pairs scored by the instance sweep.
    pub candidate_pairs: usize,
    /// Statement pairs visited by the instance sweep.
    pub statement_pair_visits: usize,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct AlignmentResult {
    pub equivalences: EquivalenceTable,
    pub assignment: MaximalAssignment,
    pub subrelations: SubrelationTable,
    pub classes: ClassAlignmentTable,
    pub iterations: Vec<IterationStats>,
    pub converged: bool,
    pub class_elapsed: Duration,
}

/// Stepwise fixpoint driver over two ontologies.
pub struct Aligner<'a> {
    ctx: Context<'a>,
    equivalences: EquivalenceTable,
    assignment: MaximalAssignment,
    subrelations: SubrelationTable,
    iteration: usize,
    pool: rayon::ThreadPool,
}

impl<'a> Aligner<'a> {
    /// Bootstraps with the built-in literal comparison of `config.literal_mode`.
    pub fn new(first: &'a Ontology, second: &'a Ontology, config: AlignmentConfig) -> Result<Self, ConfigError> {
        let mode = config.literal_mode;
        Self::with_matcher(first, second, config, &mode)
    }

    /// Bootstraps with a custom literal comparison.
    pub fn with_matcher(
        first: &'a Ontology,
        second: &'a Ontology,
        config: AlignmentConfig,
        matcher: &dyn LiteralMatcher,
    ) -> Result<Self, ConfigError> {
        config.validate()?;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|e| ConfigError::Pool(e.to_string()))?;
        let theta = config.theta;
        Ok(Aligner {
            ctx: Context::new(first, second, config, matcher),
            equivalences: EquivalenceTable::default(),
            assignment: MaximalAssignment::default(),
            subrelations: SubrelationTable::Uniform(theta),
            iteration: 0,
            pool,
        })
    }

    pub fn config(&self) -> &AlignmentConfig {
        &self.ctx.config
    }

    pub fn functionality(&self, side: Origin) -> &FunctionalityTable {
        self.ctx.fun(side)
    }

    pub fn equivalences(&self) -> &EquivalenceTable {
        &self.equivalences
    }

    pub fn assignment(&self) -> &MaximalAssignment {
        &self.assignment
    }

    pub fn subrelations(&self) -> &SubrelationTable {
        &self.subrelations
    }

    pub fn iteration(&self) -> usize {
        self.iteration
    }

    /// Literals of the other ontology clamped equal to `literal`.
    pub fn literal_matches(&self, side: Origin, literal: TermId) -> &[(TermId, f64)] {
        self.ctx.literal_matches[slot(side)]
            .get(&literal)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    fn evidence(&self) -> Evidence<'_, 'a> {
        Evidence::new(&self.ctx, &self.equivalences, &self.assignment)
    }

    /// Evaluates `P(x ≡ x')` against the current tables by pairing every
    /// statement of `x` with every statement of `x'` (no candidate
    /// generation). `x` comes from `side`, `x'` from the other ontology.
    pub fn instance_equivalence(&self, side: Origin, x: TermId, x2: TermId) -> f64 {
        let ev = self.evidence();
        let mut p = instances::positive_direct(&self.ctx, &ev, &self.subrelations, side, x, x2);
        if self.ctx.config.negative_evidence {
            p *= instances::penalty(&self.ctx, &ev, &self.subrelations, side, x, x2);
        }
        p.clamp(0.0, 1.0)
    }

    /// `P(r ⊆ r')` from the current equivalences, `r` from `side`.
    pub fn subrelation_probability(&self, side: Origin, r: RelId, r2: RelId) -> f64 {
        let ev = self.evidence();
        let scores = relations::score_relation(&self.ctx, &ev, side, r);
        scores.get(&r2).copied().unwrap_or(0.0)
    }

    /// `P(c ⊆ c')` from the current equivalences; `None` for a class without instances.
    pub fn class_inclusion(&self, side: Origin, c: TermId, c2: TermId) -> Option<f64> {
        let ev = self.evidence();
        let members = self.ctx.onto(side).members(c);
        if members.is_empty() {
            return None;
        }
        let scores = classes::score_class(&self.ctx, &ev, side, c);
        Some(scores.get(&c2).map(|s| s.score).unwrap_or(0.0))
    }

    /// One iteration: instance sweep, maximal assignment, relation sweep.
    pub fn step(&mut self) -> IterationStats {
        let start = Instant::now();
        self.iteration += 1;
        let (table, candidate_pairs, visits) = {
            let ev = self.evidence();
            self.pool
                .install(|| instances::sweep(&self.ctx, &ev, &self.subrelations))
        };
        let assignment = MaximalAssignment::compute(&table, self.ctx.onto[0], self.ctx.onto[1]);
        let (changed, assigned) = assignment.changes_since(&self.assignment);
        self.equivalences = table;
        self.assignment = assignment;
        self.subrelations = {
            let ev = self.evidence();
            self.pool.install(|| relations::sweep(&self.ctx, &ev))
        };
        let stats = IterationStats {
            iteration: self.iteration,
            change_fraction: if assigned == 0 {
                0.0
            } else {
                changed as f64 / assigned as f64
            },
            changed,
            equivalences: self.equivalences.len(),
            subrelations: self.subrelations.len(),
            candidate_pairs,
            statement_pair_visits: visits,
            elapsed: start.elapsed(),
        };
        info!(
            "iteration {}: changed {:.4} ({} of {}), {} equivalences, {} subrelations, {:.3}s",
            stats.iteration,
            stats.change_fraction,
            changed,
            assigned,
            stats.equivalences,
            stats.subrelations,
            stats.elapsed.as_secs_f64()
        );
        stats
    }

    /// Class inclusions from the current equivalences.
    pub fn class_alignment(&self) -> ClassAlignmentTable {
        let ev = self.evidence();
        self.pool.install(|| classes::sweep(&self.ctx, &ev))
    }

    /// Iterates to convergence (or the iteration limit), then aligns classes.
    pub fn run(mut self) -> AlignmentResult {
        let mut iterations = Vec::new();
        let mut converged = false;
        while self.iteration < self.ctx.config.max_iterations {
            let stats = self.step();
            let done = stats.changed == 0 || stats.change_fraction < self.ctx.config.convergence_fraction;
            iterations.push(stats);
            if done {
                converged = true;
                break;
            }
        }
        let start = Instant::now();
        let classes = self.class_alignment();
        let class_elapsed = start.elapsed();
        info!("class alignment: {} entries, {:.3}s", classes.len(), class_elapsed.as_secs_f64());
        AlignmentResult {
            equivalences: self.equivalences,
            assignment: self.assignment,
            subrelations: self.subrelations,
            classes,
            iterations,
            converged,
            class_elapsed,
        }
    }
}

pub fn run_fixpoint(first: &Ontology, second: &Ontology, config: AlignmentConfig) -> Result<AlignmentResult, ConfigError> {
    Ok(Aligner::new(first, second, config)?.run())
}

impl AlignmentResult {
    /// Maximal assignment of the first ontology's instances.
    pub fn instance_rows(&self, first: &Ontology, second: &Ontology) -> Vec<AlignmentRow> {
        self.assignment
            .forward()
            .into_iter()
            .map(|(a, b, p)| AlignmentRow {
                left: first.lexical(a).to_string(),
                right: second.lexical(b).to_string(),
                score: p,
                kind: AlignmentKind::Instance,
                direction: Direction::Equivalence,
            })
            .collect()
    }

    /// Every nonzero relation inclusion; the first ontology's relation is on the left.
    pub fn relation_rows(&self, first: &Ontology, second: &Ontology) -> Vec<AlignmentRow> {
        let forward = self.subrelations.entries(Origin::First).into_iter().map(|(r, r2, p)| AlignmentRow {
            left: first.relation_name(r).to_string(),
            right: second.relation_name(r2).to_string(),
            score: p,
            kind: AlignmentKind::Relation,
            direction: Direction::LeftInRight,
        });
        let backward = self.subrelations.entries(Origin::Second).into_iter().map(|(r2, r, p)| AlignmentRow {
            left: first.relation_name(r).to_string(),
            right: second.relation_name(r2).to_string(),
            score: p,
            kind: AlignmentKind::Relation,
            direction: Direction::RightInLeft,
        });
        forward.chain(backward).collect()
    }

    /// Class inclusions at or above the reporting threshold, skipping
    /// classes above the instance ceiling.
    pub fn class_rows(&self, first: &Ontology, second: &Ontology, config: &AlignmentConfig) -> Vec<AlignmentRow> {
        let small = |o: &Ontology, c: TermId| config.class_max_instances.map_or(true, |m| o.members(c).len() <= m);
        let mut rows = Vec::new();
        for (c, c2, s) in self.classes.entries(Origin::First) {
            if s.score >= config.class_score_threshold && small(first, c) && small(second, c2) {
                rows.push(AlignmentRow {
                    left: first.lexical(c).to_string(),
                    right: second.lexical(c2).to_string(),
                    score: s.score,
                    kind: AlignmentKind::Class,
                    direction: Direction::LeftInRight,
                });
            }
        }
        for (c2, c, s) in self.classes.entries(Origin::Second) {
            if s.score >= config.class_score_threshold && small(first, c) && small(second, c2) {
                rows.push(AlignmentRow {
                    left: first.lexical(c).to_string(),
                    right: second.lexical(c2).to_string(),
                    score: s.score,
                    kind: AlignmentKind::Class,
                    direction: Direction::RightInLeft,
                });
            }
        }
        rows
    }
}
