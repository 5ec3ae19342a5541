//! Functionality of relations.
//!
//! The local functionality of `r` at `x` is `1 / #y: r(x, y)`. The global
//! functionality aggregates these over all first arguments; the default
//! aggregate is the harmonic mean, which reduces to the number of distinct
//! first arguments divided by the number of pairs. The other aggregates are
//! kept for comparison runs.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::store::{Ontology, RelId, TermId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FunctionalityMode {
    /// `#x ∃y: r(x,y) / #x,y: r(x,y)`, the harmonic mean of local functionalities.
    #[default]
    HarmonicMean,
    /// `#x,y: r(x,y) / #x,y,y': r(x,y) ∧ r(x,y')`.
    PairRatio,
    /// `#x ∃y: r(x,y) / #y ∃x: r(x,y)`, capped at 1.
    ArgRatio,
    /// Arithmetic mean of local functionalities.
    ArithmeticMean,
}

impl FunctionalityMode {
    pub const ALL: [FunctionalityMode; 4] = [
        FunctionalityMode::HarmonicMean,
        FunctionalityMode::PairRatio,
        FunctionalityMode::ArgRatio,
        FunctionalityMode::ArithmeticMean,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FunctionalityMode::HarmonicMean => "harmonic-mean",
            FunctionalityMode::PairRatio => "pair-ratio",
            FunctionalityMode::ArgRatio => "arg-ratio",
            FunctionalityMode::ArithmeticMean => "arithmetic-mean",
        }
    }
}

impl fmt::Display for FunctionalityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FunctionalityMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FunctionalityMode::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown functionality mode `{s}`"))
    }
}

/// `1 / #y: r(x, y)`, or `None` when `x` has no `r` statement.
pub fn local_functionality(o: &Ontology, r: RelId, x: TermId) -> Option<f64> {
    let n = o.statements_of(x).iter().filter(|(rel, _)| *rel == r).count();
    (n > 0).then(|| 1.0 / n as f64)
}

/// Aggregates a relation's pairs. `pairs` may contain a subject several times.
fn aggregate(pairs: &[(TermId, TermId)], mode: FunctionalityMode) -> Option<f64> {
    if pairs.is_empty() {
        return None;
    }
    let mut per_subject: HashMap<TermId, u64> = HashMap::new();
    for &(s, _) in pairs {
        *per_subject.entry(s).or_default() += 1;
    }
    let subjects = per_subject.len() as f64;
    let total = pairs.len() as f64;
    let value = match mode {
        FunctionalityMode::HarmonicMean => subjects / total,
        FunctionalityMode::PairRatio => {
            let same_source: u64 = per_subject.values().map(|&n| n * n).sum();
            total / same_source as f64
        }
        FunctionalityMode::ArgRatio => {
            let mut objects: Vec<TermId> = pairs.iter().map(|&(_, o)| o).collect();
            objects.sort_unstable();
            objects.dedup();
            (subjects / objects.len() as f64).min(1.0)
        }
        FunctionalityMode::ArithmeticMean => {
            let mut counts: Vec<u64> = per_subject.values().copied().collect();
            counts.sort_unstable();
            counts.iter().map(|&n| 1.0 / n as f64).sum::<f64>() / subjects
        }
    };
    Some(value)
}

/// Global functionality of `r`; `None` when `r` has no statement.
pub fn global_functionality(o: &Ontology, r: RelId, mode: FunctionalityMode) -> Option<f64> {
    aggregate(o.pairs(r), mode)
}

/// Frozen functionality of every relation (inverses included) of one ontology.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionalityTable {
    mode: FunctionalityMode,
    values: Vec<f64>,
    unused: Vec<bool>,
    inverse: Vec<RelId>,
}

impl FunctionalityTable {
    pub fn build(o: &Ontology, mode: FunctionalityMode) -> Self {
        let mut values = Vec::with_capacity(o.relation_count());
        let mut unused = Vec::with_capacity(o.relation_count());
        let mut inverse = Vec::with_capacity(o.relation_count());
        for r in o.relations() {
            let v = global_functionality(o, r, mode);
            values.push(v.unwrap_or(1.0));
            unused.push(v.is_none());
            inverse.push(o.inverse(r));
        }
        FunctionalityTable {
            mode,
            values,
            unused,
            inverse,
        }
    }

    pub fn mode(&self) -> FunctionalityMode {
        self.mode
    }

    /// fun(r); 1 for relations without statements.
    pub fn fun(&self, r: RelId) -> f64 {
        self.values[r.index()]
    }

    /// fun⁻¹(r) = fun(r⁻¹).
    pub fn inverse_fun(&self, r: RelId) -> f64 {
        self.values[self.inverse[r.index()].index()]
    }

    pub fn is_unused(&self, r: RelId) -> bool {
        self.unused[r.index()]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `relation<TAB>fun<TAB>inverse_fun` lines for relations with statements,
    /// sorted by relation name.
    pub fn to_tsv(&self, o: &Ontology) -> String {
        let mut rows: Vec<(String, f64, f64)> = o
            .relations()
            .filter(|&r| !self.is_unused(r))
            .map(|r| (o.relation_name(r).to_string(), self.fun(r), self.inverse_fun(r)))
            .collect();
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        rows.iter()
            .map(|(name, f, g)| format!("{name}\t{f:.6}\t{g:.6}\n"))
            .collect()
    }
}
