//! Instance equivalence.
//!
//! `P(x ≡ x') = 1 − ∏ (1 − P(r'⊆r)·fun⁻¹(r)·P(y≡y')) · (1 − P(r⊆r')·fun⁻¹(r')·P(y≡y'))`
//! over all statement pairs `r(x,y)`, `r'(x',y')`. Only pairs with
//! `P(y ≡ y') > 0` change the product, so candidates `x'` are reached from
//! `x` through the known equivalents of its values instead of by scanning
//! the other ontology.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{Context, Evidence, PenaltyForm, SubrelationTable};
use crate::engine::EquivalenceTable;
use crate::store::{Origin, RelId, TermId, TermKind};

#[inline]
fn pair_factor(
    ctx: &Context<'_>,
    subs: &SubrelationTable,
    side: Origin,
    r: RelId,
    r2: RelId,
    e: f64,
) -> f64 {
    let other = side.other();
    let into_r = subs.get(other, r2, r) * ctx.fun(side).inverse_fun(r) * e;
    let into_r2 = subs.get(side, r, r2) * ctx.fun(other).inverse_fun(r2) * e;
    (1.0 - into_r) * (1.0 - into_r2)
}

/// Positive-evidence score by direct enumeration of both statement lists.
pub(crate) fn positive_direct(
    ctx: &Context<'_>,
    ev: &Evidence<'_, '_>,
    subs: &SubrelationTable,
    side: Origin,
    x: TermId,
    x2: TermId,
) -> f64 {
    let o = ctx.onto(side);
    let o2 = ctx.onto(side.other());
    let mut miss = 1.0;
    for &(r, y) in o.statements_of(x) {
        if o.is_schema_relation(r) {
            continue;
        }
        for &(r2, y2) in o2.statements_of(x2) {
            if o2.is_schema_relation(r2) {
                continue;
            }
            let e = ev.equality(side, y, y2);
            if e > 0.0 {
                miss *= pair_factor(ctx, subs, side, r, r2, e);
            }
        }
    }
    1.0 - miss
}

/// Multiplicative negative-evidence factor for `(x, x')`.
///
/// For every `r(x,y)` and every relation `r'` of the other ontology, the
/// factor is lowered when `r` is functional, `r'` is likely included in `r`,
/// and no `r'` value of `x'` matches `y`. An `x'` without any `r'` statement
/// counts as matching nothing.
pub(crate) fn penalty(
    ctx: &Context<'_>,
    ev: &Evidence<'_, '_>,
    subs: &SubrelationTable,
    side: Origin,
    x: TermId,
    x2: TermId,
) -> f64 {
    let other = side.other();
    let o = ctx.onto(side);
    let o2 = ctx.onto(other);
    let mut values: HashMap<RelId, Vec<TermId>> = HashMap::new();
    for &(r2, y2) in o2.statements_of(x2) {
        if !o2.is_schema_relation(r2) {
            values.entry(r2).or_default().push(y2);
        }
    }
    let previous = ev.previous(side, x, x2);
    let mut factor = 1.0;
    for &(r, y) in o.statements_of(x) {
        if o.is_schema_relation(r) {
            continue;
        }
        let fun_r = ctx.fun(side).fun(r);
        for &r2 in ctx.relations(other) {
            let into_r = subs.get(other, r2, r);
            let into_r2 = subs.get(side, r, r2);
            if into_r == 0.0 && into_r2 == 0.0 {
                continue;
            }
            let vals = values.get(&r2).map(Vec::as_slice).unwrap_or(&[]);
            let none_match: f64 = match ctx.config.penalty_form {
                PenaltyForm::ObjectMismatch => vals.iter().map(|&y2| 1.0 - ev.equality(side, y, y2)).product(),
                PenaltyForm::SubjectMismatch => vals.iter().map(|_| 1.0 - previous).product(),
            };
            factor *= (1.0 - fun_r * into_r * none_match) * (1.0 - ctx.fun(other).fun(r2) * into_r2 * none_match);
        }
    }
    factor
}

/// Scores one first-side instance against every candidate reachable through
/// its values. Returns `(x', p)` sorted by `x'`, plus visit counts.
fn score_instance(
    ctx: &Context<'_>,
    ev: &Evidence<'_, '_>,
    subs: &SubrelationTable,
    x: TermId,
) -> (Vec<(TermId, f64)>, usize) {
    let side = Origin::First;
    let o = ctx.onto(side);
    let o2 = ctx.onto(side.other());
    let mut miss: HashMap<TermId, f64> = HashMap::new();
    let mut visits = 0;
    for &(r, y) in o.statements_of(x) {
        if o.is_schema_relation(r) {
            continue;
        }
        for &(y2, e) in ev.equivalents(side, y) {
            // statements with y2 as subject are the inverses of r2(x2, y2)
            for &(r2_inv, x2) in o2.statements_of(y2) {
                if o2.is_schema_relation(r2_inv) || o2.kind(x2) != TermKind::Instance {
                    continue;
                }
                let r2 = o2.inverse(r2_inv);
                visits += 1;
                *miss.entry(x2).or_insert(1.0) *= pair_factor(ctx, subs, side, r, r2, e);
            }
        }
    }
    let mut out: Vec<(TermId, f64)> = miss
        .into_iter()
        .map(|(x2, m)| {
            let mut p = 1.0 - m;
            if ctx.config.negative_evidence && p > 0.0 {
                p *= penalty(ctx, ev, subs, side, x, x2);
            }
            (x2, p.clamp(0.0, 1.0))
        })
        .collect();
    out.sort_by_key(|&(t, _)| t);
    (out, visits)
}

/// Recomputes every equivalence from the previous snapshot. Scores at or
/// below theta are dropped.
pub(crate) fn sweep(
    ctx: &Context<'_>,
    ev: &Evidence<'_, '_>,
    subs: &SubrelationTable,
) -> (EquivalenceTable, usize, usize) {
    let theta = ctx.config.theta;
    let first: Vec<TermId> = ctx.onto(Origin::First).instances().collect();
    let scored: Vec<(TermId, Vec<(TermId, f64)>, usize)> = first
        .par_iter()
        .map(|&x| {
            let (row, visits) = score_instance(ctx, ev, subs, x);
            (x, row, visits)
        })
        .collect();
    let mut candidates = 0;
    let mut visits = 0;
    let mut entries = Vec::new();
    for (x, row, v) in scored {
        candidates += row.len();
        visits += v;
        entries.extend(row.into_iter().filter(|&(_, p)| p > theta).map(|(x2, p)| (x, x2, p)));
    }
    (EquivalenceTable::from_entries(entries), candidates, visits)
}
