//! Relation inclusion.
//!
//! For `r` of one ontology and every `r'` of the other:
//! numerator `Σ_{r(x,y)} 1 − ∏_{r'(x',y')} (1 − P(x≡x')·P(y≡y'))`,
//! denominator `Σ_{r(x,y)} 1 − ∏_{x',y'} (1 − P(x≡x')·P(y≡y'))`, where
//! `x'`, `y'` range over the known equivalents of `x` and `y`. A zero
//! denominator means no evidence and yields 0.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{Context, Evidence, SubrelationTable};
use crate::calculus::NoneOf;
use crate::store::{Origin, RelId, TermId};

/// Nonzero `P(r ⊆ r')` for every `r'` of the other ontology.
pub(crate) fn score_relation(
    ctx: &Context<'_>,
    ev: &Evidence<'_, '_>,
    side: Origin,
    r: RelId,
) -> HashMap<RelId, f64> {
    let o = ctx.onto(side);
    let o2 = ctx.onto(side.other());
    let pairs = o.pairs(r);
    let pairs = &pairs[..pairs.len().min(ctx.config.pair_cap)];

    let mut numerators: HashMap<RelId, f64> = HashMap::new();
    let mut denominator = 0.0;
    for &(x, y) in pairs {
        let ex = ev.equivalents(side, x);
        let ey = ev.equivalents(side, y);
        if ex.is_empty() || ey.is_empty() {
            continue;
        }
        let y_score: HashMap<TermId, f64> = ey.iter().copied().collect();
        let mut any_counterpart = NoneOf::default();
        let mut per_relation: Vec<(RelId, NoneOf)> = Vec::new();
        for &(x2, px) in ex {
            for &(_, py) in ey {
                any_counterpart.add(px * py);
            }
            for &(r2, y2) in o2.statements_of(x2) {
                if o2.is_schema_relation(r2) {
                    continue;
                }
                if let Some(&py) = y_score.get(&y2) {
                    match per_relation.iter_mut().find(|(rel, _)| *rel == r2) {
                        Some((_, acc)) => acc.add(px * py),
                        None => {
                            let mut acc = NoneOf::default();
                            acc.add(px * py);
                            per_relation.push((r2, acc));
                        }
                    }
                }
            }
        }
        denominator += any_counterpart.any();
        for (r2, acc) in per_relation {
            *numerators.entry(r2).or_insert(0.0) += acc.any();
        }
    }
    if denominator <= 0.0 {
        return HashMap::new();
    }
    numerators
        .into_iter()
        .map(|(r2, n)| (r2, (n / denominator).clamp(0.0, 1.0)))
        .filter(|&(_, p)| p > 0.0)
        .collect()
}

fn sweep_side(ctx: &Context<'_>, ev: &Evidence<'_, '_>, side: Origin) -> HashMap<(RelId, RelId), f64> {
    let scored: Vec<(RelId, HashMap<RelId, f64>)> = ctx
        .relations(side)
        .par_iter()
        .map(|&r| (r, score_relation(ctx, ev, side, r)))
        .collect();
    scored
        .into_iter()
        .flat_map(|(r, m)| m.into_iter().map(move |(r2, p)| ((r, r2), p)))
        .collect()
}

pub(crate) fn sweep(ctx: &Context<'_>, ev: &Evidence<'_, '_>) -> SubrelationTable {
    SubrelationTable::Computed {
        first_in_second: sweep_side(ctx, ev, Origin::First),
        second_in_first: sweep_side(ctx, ev, Origin::Second),
    }
}
