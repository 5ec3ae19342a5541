//! Class inclusion: the expected share of `c`'s instances that have an
//! equivalent in `c'`, i.e.
//! `Σ_{x: type(x,c)} (1 − ∏_{y: type(y,c')} (1 − P(x≡y))) / #x: type(x,c)`.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{ClassAlignmentTable, ClassScore, Context, Evidence};
use crate::calculus::NoneOf;
use crate::store::{Origin, TermId};

pub(crate) fn score_class(
    ctx: &Context<'_>,
    ev: &Evidence<'_, '_>,
    side: Origin,
    c: TermId,
) -> HashMap<TermId, ClassScore> {
    let o2 = ctx.onto(side.other());
    let members = ctx.onto(side).members(c);
    let members = &members[..members.len().min(ctx.config.pair_cap)];
    if members.is_empty() {
        return HashMap::new();
    }
    let mut sums: HashMap<TermId, (f64, usize)> = HashMap::new();
    for &x in members {
        let mut per_class: Vec<(TermId, NoneOf)> = Vec::new();
        for &(x2, p) in ev.equivalents(side, x) {
            for &c2 in o2.classes_of(x2) {
                match per_class.iter_mut().find(|(k, _)| *k == c2) {
                    Some((_, acc)) => acc.add(p),
                    None => {
                        let mut acc = NoneOf::default();
                        acc.add(p);
                        per_class.push((c2, acc));
                    }
                }
            }
        }
        for (c2, acc) in per_class {
            let e = sums.entry(c2).or_insert((0.0, 0));
            e.0 += acc.any();
            e.1 += 1;
        }
    }
    let n = members.len() as f64;
    sums.into_iter()
        .map(|(c2, (s, support))| {
            (
                c2,
                ClassScore {
                    score: (s / n).clamp(0.0, 1.0),
                    support,
                },
            )
        })
        .collect()
}

fn sweep_side(ctx: &Context<'_>, ev: &Evidence<'_, '_>, side: Origin) -> HashMap<(TermId, TermId), ClassScore> {
    let classes: Vec<TermId> = ctx.onto(side).classes().collect();
    let scored: Vec<(TermId, HashMap<TermId, ClassScore>)> = classes
        .par_iter()
        .map(|&c| (c, score_class(ctx, ev, side, c)))
        .collect();
    scored
        .into_iter()
        .flat_map(|(c, m)| m.into_iter().map(move |(c2, s)| ((c, c2), s)))
        .collect()
}

pub(crate) fn sweep(ctx: &Context<'_>, ev: &Evidence<'_, '_>) -> ClassAlignmentTable {
    ClassAlignmentTable {
        first_in_second: sweep_side(ctx, ev, Origin::First),
        second_in_first: sweep_side(ctx, ev, Origin::Second),
    }
}
