#![allow(dead_code)]

use quadsemi::search::all_quadratics;
use quadsemi::{FieldCtx, GeneratorSet, MonicQuadratic};

/// Every generator list of size one, then every unordered pair of distinct
/// quadratics, in encoded order.
pub fn small_sets(ctx: &FieldCtx) -> Vec<Vec<MonicQuadratic>> {
    let all = all_quadratics(ctx);
    let mut out: Vec<Vec<MonicQuadratic>> = all.iter().map(|&f| vec![f]).collect();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            out.push(vec![all[i], all[j]]);
        }
    }
    out
}

pub fn gen_set<'a>(ctx: &'a FieldCtx, gens: &[MonicQuadratic]) -> GeneratorSet<'a> {
    GeneratorSet::new(ctx, gens.iter().copied()).unwrap()
}

pub fn quad(ctx: &FieldCtx, a: i64, b: i64) -> MonicQuadratic {
    MonicQuadratic::new(ctx.from_int(a), ctx.from_int(b))
}
