//! Scoring an alignment against a gold standard.
//!
//! Only the maximal assignment is scored and its probability is ignored.
//! By default a prediction counts toward precision only when one of its
//! members occurs in the gold standard; predictions about instances the gold
//! standard says nothing about are neither right nor wrong.

use std::collections::{BTreeSet, HashMap, HashSet};

use thiserror::Error;

use crate::ntriples::Judgment;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("gold standard is empty; metrics are undefined")]
    EmptyGold,
    #[error("judged sample is empty")]
    EmptySample,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Metrics {
    pub precision: f64,
    pub recall: f64,
    pub f_measure: f64,
    pub predicted: usize,
    pub gold: usize,
    pub correct: usize,
}

impl Metrics {
    fn from_counts(predicted: usize, gold: usize, correct: usize) -> Metrics {
        let ratio = |a: usize, b: usize| if b == 0 { 0.0 } else { a as f64 / b as f64 };
        let precision = ratio(correct, predicted);
        let recall = ratio(correct, gold);
        let f_measure = if precision + recall == 0.0 {
            0.0
        } else {
            2.0 * precision * recall / (precision + recall)
        };
        Metrics {
            precision,
            recall,
            f_measure,
            predicted,
            gold,
            correct,
        }
    }

    pub fn to_tsv(&self) -> String {
        format!(
            "precision\t{:.6}\nrecall\t{:.6}\nf_measure\t{:.6}\npredicted\t{}\ngold\t{}\ncorrect\t{}\n",
            self.precision, self.recall, self.f_measure, self.predicted, self.gold, self.correct
        )
    }

    pub fn summary(&self) -> String {
        format!(
            "precision {:.1}%  recall {:.1}%  F {:.1}%  ({} correct of {} predicted, {} gold)",
            100.0 * self.precision,
            100.0 * self.recall,
            100.0 * self.f_measure,
            self.correct,
            self.predicted,
            self.gold
        )
    }
}

/// Which predictions count toward precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Scope {
    /// Predictions with at least one member present in the gold standard.
    #[default]
    GoldCovered,
    All,
}

/// Restricts evaluation to pairs whose second-ontology member has more than
/// `min_facts` facts.
#[derive(Debug, Clone, Default)]
pub struct FactFilter {
    pub min_facts: usize,
    pub fact_counts: HashMap<String, usize>,
}

impl FactFilter {
    fn keeps(&self, right: &str) -> bool {
        self.fact_counts.get(right).copied().unwrap_or(0) > self.min_facts
    }
}

pub fn evaluate_pairs(
    predicted: &[(String, String)],
    gold: &BTreeSet<(String, String)>,
    scope: Scope,
    filter: Option<&FactFilter>,
) -> Result<Metrics, EvalError> {
    let keep = |pair: &(String, String)| filter.map_or(true, |f| f.keeps(&pair.1));
    let gold: BTreeSet<&(String, String)> = gold.iter().filter(|p| keep(p)).collect();
    if gold.is_empty() {
        return Err(EvalError::EmptyGold);
    }
    let lefts: HashSet<&str> = gold.iter().map(|(l, _)| l.as_str()).collect();
    let rights: HashSet<&str> = gold.iter().map(|(_, r)| r.as_str()).collect();
    let predicted: BTreeSet<&(String, String)> = predicted
        .iter()
        .filter(|p| keep(p))
        .filter(|(l, r)| match scope {
            Scope::All => true,
            Scope::GoldCovered => lefts.contains(l.as_str()) || rights.contains(r.as_str()),
        })
        .collect();
    let correct = predicted.iter().filter(|p| gold.contains(**p)).count();
    Ok(Metrics::from_counts(predicted.len(), gold.len(), correct))
}

/// Scores a first-to-second maximal assignment given as `(left, right)` pairs.
pub fn evaluate_instances(
    assignment: &[(String, String)],
    gold: &BTreeSet<(String, String)>,
    filter: Option<&FactFilter>,
) -> Result<Metrics, EvalError> {
    evaluate_pairs(assignment, gold, Scope::GoldCovered, filter)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub threshold: f64,
    /// Share of judged assignments at or above the threshold that are correct;
    /// `None` when no judged assignment survives.
    pub precision: Option<f64>,
    pub judged: usize,
    /// Assignments of the full table at or above the threshold.
    pub count: usize,
}

/// Precision and surviving counts for thresholds 0, 0.05, …, 1.
pub fn evaluate_threshold_sweep(
    scored: &[(String, String, f64)],
    judgments: &[Judgment],
) -> Result<Vec<SweepPoint>, EvalError> {
    if judgments.is_empty() {
        return Err(EvalError::EmptySample);
    }
    let scores: HashMap<(&str, &str), f64> = scored
        .iter()
        .map(|(l, r, s)| ((l.as_str(), r.as_str()), *s))
        .collect();
    let judged: Vec<(f64, bool)> = judgments
        .iter()
        .filter_map(|j| scores.get(&(j.left.as_str(), j.right.as_str())).map(|&s| (s, j.correct)))
        .collect();
    if judged.is_empty() {
        return Err(EvalError::EmptySample);
    }
    Ok((0..=20)
        .map(|i| {
            let threshold = i as f64 / 20.0;
            let surviving: Vec<bool> = judged.iter().filter(|(s, _)| *s >= threshold).map(|&(_, c)| c).collect();
            let precision = (!surviving.is_empty())
                .then(|| surviving.iter().filter(|&&c| c).count() as f64 / surviving.len() as f64);
            SweepPoint {
                threshold,
                precision,
                judged: surviving.len(),
                count: scored.iter().filter(|(_, _, s)| *s >= threshold).count(),
            }
        })
        .collect())
}

pub fn sweep_to_tsv(points: &[SweepPoint]) -> String {
    let mut s = String::from("threshold\tprecision\tjudged\tcount\n");
    for p in points {
        let precision = p.precision.map_or_else(|| "NA".to_string(), |v| format!("{v:.6}"));
        s.push_str(&format!("{:.2}\t{}\t{}\t{}\n", p.threshold, precision, p.judged, p.count));
    }
    s
}
