use std::collections::HashMap;

use crate::store::{Ontology, Origin, RelId, TermId};

/// Scores closer than this are treated as tied when picking an assignment.
pub const TIE_EPSILON: f64 = 1e-12;

/// Sparse `P(x ≡ x')` between instances of the first and second ontology.
/// Absent pairs have probability 0.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct EquivalenceTable {
    entries: HashMap<(TermId, TermId), f64>,
    rows: HashMap<TermId, Vec<(TermId, f64)>>,
    columns: HashMap<TermId, Vec<(TermId, f64)>>,
}

impl EquivalenceTable {
    /// Builds from `(first, second, p)` triples. Duplicate pairs keep the last value.
    pub fn from_entries(entries: impl IntoIterator<Item = (TermId, TermId, f64)>) -> Self {
        let mut map = HashMap::new();
        for (a, b, p) in entries {
            map.insert((a, b), p);
        }
        let mut rows: HashMap<TermId, Vec<(TermId, f64)>> = HashMap::new();
        let mut columns: HashMap<TermId, Vec<(TermId, f64)>> = HashMap::new();
        for (&(a, b), &p) in &map {
            rows.entry(a).or_default().push((b, p));
            columns.entry(b).or_default().push((a, p));
        }
        for v in rows.values_mut().chain(columns.values_mut()) {
            v.sort_by_key(|&(t, _)| t);
        }
        EquivalenceTable {
            entries: map,
            rows,
            columns,
        }
    }

    pub fn get(&self, first: TermId, second: TermId) -> f64 {
        self.entries.get(&(first, second)).copied().unwrap_or(0.0)
    }

    /// Lookup with `a` taken from the ontology `side`, `b` from the other one.
    pub fn get_oriented(&self, side: Origin, a: TermId, b: TermId) -> f64 {
        match side {
            Origin::First => self.get(a, b),
            Origin::Second => self.get(b, a),
        }
    }

    /// Counterparts of a first-ontology instance, sorted by id.
    pub fn row(&self, first: TermId) -> &[(TermId, f64)] {
        self.rows.get(&first).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Counterparts of a second-ontology instance, sorted by id.
    pub fn column(&self, second: TermId) -> &[(TermId, f64)] {
        self.columns.get(&second).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries sorted by `(first, second)`.
    pub fn entries(&self) -> Vec<(TermId, TermId, f64)> {
        let mut v: Vec<_> = self.entries.iter().map(|(&(a, b), &p)| (a, b, p)).collect();
        v.sort_by_key(|&(a, b, _)| (a, b));
        v
    }
}

/// Per-instance argmax counterpart, in both directions.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct MaximalAssignment {
    forward: HashMap<TermId, (TermId, f64)>,
    backward: HashMap<TermId, (TermId, f64)>,
}

fn argmax<'a>(
    candidates: &[(TermId, f64)],
    lexical: impl Fn(TermId) -> &'a str,
) -> Option<(TermId, f64)> {
    let best = candidates.iter().map(|&(_, p)| p).fold(f64::NEG_INFINITY, f64::max);
    candidates
        .iter()
        .filter(|&&(_, p)| p >= best - TIE_EPSILON)
        .min_by(|a, b| lexical(a.0).cmp(lexical(b.0)).then(a.0.cmp(&b.0)))
        .copied()
}

impl MaximalAssignment {
    /// Ties within [`TIE_EPSILON`] go to the lexically smallest identifier.
    pub fn compute(table: &EquivalenceTable, first: &Ontology, second: &Ontology) -> Self {
        let forward = table
            .rows
            .iter()
            .filter_map(|(&a, row)| argmax(row, |t| second.lexical(t)).map(|m| (a, m)))
            .collect();
        let backward = table
            .columns
            .iter()
            .filter_map(|(&b, col)| argmax(col, |t| first.lexical(t)).map(|m| (b, m)))
            .collect();
        MaximalAssignment { forward, backward }
    }

    /// Assignment of a first-ontology instance.
    pub fn of_first(&self, first: TermId) -> Option<(TermId, f64)> {
        self.forward.get(&first).copied()
    }

    /// Assignment of a second-ontology instance.
    pub fn of_second(&self, second: TermId) -> Option<(TermId, f64)> {
        self.backward.get(&second).copied()
    }

    /// `true` if the pair is the maximal assignment of either of its members.
    pub fn contains(&self, first: TermId, second: TermId) -> bool {
        self.of_first(first).map(|(t, _)| t) == Some(second)
            || self.of_second(second).map(|(t, _)| t) == Some(first)
    }

    /// First-to-second assignment sorted by first id.
    pub fn forward(&self) -> Vec<(TermId, TermId, f64)> {
        let mut v: Vec<_> = self.forward.iter().map(|(&a, &(b, p))| (a, b, p)).collect();
        v.sort_by_key(|&(a, _, _)| a);
        v
    }

    pub fn backward(&self) -> Vec<(TermId, TermId, f64)> {
        let mut v: Vec<_> = self.backward.iter().map(|(&a, &(b, p))| (a, b, p)).collect();
        v.sort_by_key(|&(a, _, _)| a);
        v
    }

    /// Union of both directions as `(first, second)` pairs, sorted.
    pub fn pairs(&self) -> Vec<(TermId, TermId)> {
        let mut v: Vec<_> = self
            .forward
            .iter()
            .map(|(&a, &(b, _))| (a, b))
            .chain(self.backward.iter().map(|(&b, &(a, _))| (a, b)))
            .collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// First-ontology instances whose assignment differs between `self` and
    /// `previous`, and the number of instances assigned in either.
    pub fn changes_since(&self, previous: &MaximalAssignment) -> (usize, usize) {
        let mut keys: Vec<TermId> = self.forward.keys().chain(previous.forward.keys()).copied().collect();
        keys.sort();
        keys.dedup();
        let changed = keys
            .iter()
            .filter(|k| self.of_first(**k).map(|m| m.0) != previous.of_first(**k).map(|m| m.0))
            .count();
        (changed, keys.len())
    }
}

/// `P(r ⊆ r')` across the two ontologies, both directions.
///
/// Before the first update every cross-ontology pair has the same bootstrap
/// value; after it, absent pairs have probability 0.
#[derive(Debug, Clone, PartialEq)]
pub enum SubrelationTable {
    Uniform(f64),
    Computed {
        first_in_second: HashMap<(RelId, RelId), f64>,
        second_in_first: HashMap<(RelId, RelId), f64>,
    },
}

impl SubrelationTable {
    /// `P(r ⊆ r2)` with `r` from ontology `side` and `r2` from the other one.
    pub fn get(&self, side: Origin, r: RelId, r2: RelId) -> f64 {
        match self {
            SubrelationTable::Uniform(theta) => *theta,
            SubrelationTable::Computed {
                first_in_second,
                second_in_first,
            } => {
                let map = match side {
                    Origin::First => first_in_second,
                    Origin::Second => second_in_first,
                };
                map.get(&(r, r2)).copied().unwrap_or(0.0)
            }
        }
    }

    pub fn is_uniform(&self) -> bool {
        matches!(self, SubrelationTable::Uniform(_))
    }

    /// Stored entries `(r, r2, p)` of one direction, sorted; empty while uniform.
    pub fn entries(&self, side: Origin) -> Vec<(RelId, RelId, f64)> {
        let map = match self {
            SubrelationTable::Uniform(_) => return Vec::new(),
            SubrelationTable::Computed {
                first_in_second,
                second_in_first,
            } => match side {
                Origin::First => first_in_second,
                Origin::Second => second_in_first,
            },
        };
        let mut v: Vec<_> = map.iter().map(|(&(a, b), &p)| (a, b, p)).collect();
        v.sort_by_key(|&(a, b, _)| (a, b));
        v
    }

    pub fn len(&self) -> usize {
        match self {
            SubrelationTable::Uniform(_) => 0,
            SubrelationTable::Computed {
                first_in_second,
                second_in_first,
            } => first_in_second.len() + second_in_first.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassScore {
    pub score: f64,
    /// Instances of the subclass that contributed a nonzero term.
    pub support: usize,
}

/// `P(c ⊆ c')` across the two ontologies, both directions.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ClassAlignmentTable {
    pub(crate) first_in_second: HashMap<(TermId, TermId), ClassScore>,
    pub(crate) second_in_first: HashMap<(TermId, TermId), ClassScore>,
}

impl ClassAlignmentTable {
    /// `P(c ⊆ c2)` with `c` from `side`; `None` when nothing supports it.
    pub fn get(&self, side: Origin, c: TermId, c2: TermId) -> Option<ClassScore> {
        let map = match side {
            Origin::First => &self.first_in_second,
            Origin::Second => &self.second_in_first,
        };
        map.get(&(c, c2)).copied()
    }

    pub fn entries(&self, side: Origin) -> Vec<(TermId, TermId, ClassScore)> {
        let map = match side {
            Origin::First => &self.first_in_second,
            Origin::Second => &self.second_in_first,
        };
        let mut v: Vec<_> = map.iter().map(|(&(a, b), &s)| (a, b, s)).collect();
        v.sort_by_key(|&(a, b, _)| (a, b));
        v
    }

    pub fn len(&self) -> usize {
        self.first_in_second.len() + self.second_in_first.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
