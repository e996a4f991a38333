//! Exhaustive sweeps over pairs and single generators.

use std::fmt::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::criterion::{GeneratorSet, VerdictKind};
use crate::error::{Error, Result};
use crate::field::{is_prime, Elem, FieldCtx};
use crate::quadratic::{MonicQuadratic, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PairFilter {
    #[default]
    All,
    /// Both generators irreducible.
    IrreducibleGenerators,
    /// Both generators of the form `x^2 - b`.
    NoLinearTerm,
}

impl PairFilter {
    fn accepts(self, ctx: &FieldCtx, f: &MonicQuadratic) -> bool {
        match self {
            PairFilter::All => true,
            PairFilter::IrreducibleGenerators => f.is_irreducible(ctx),
            PairFilter::NoLinearTerm => f.a.is_zero(),
        }
    }
}

impl FromStr for PairFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(PairFilter::All),
            "irreducible" | "irreducible-generators-only" => Ok(PairFilter::IrreducibleGenerators),
            "no-linear-term" | "no-linear" => Ok(PairFilter::NoLinearTerm),
            other => Err(Error::Config(format!("unknown filter {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub q: u32,
    pub a1: Elem,
    pub b1: Elem,
    pub a2: Elem,
    pub b2: Elem,
    pub verdict: VerdictKind,
    /// Length of the witness word, 0 when every composition is irreducible.
    pub witness_len: usize,
    pub reach_size: usize,
}

impl CensusRow {
    pub fn pair(&self) -> (MonicQuadratic, MonicQuadratic) {
        (
            MonicQuadratic::new(self.a1, self.b1),
            MonicQuadratic::new(self.a2, self.b2),
        )
    }
}

pub const TSV_HEADER: &str = "q\ta1\tb1\ta2\tb2\tverdict\twitness_len\treach_size";

pub fn census_tsv(rows: &[CensusRow]) -> String {
    let mut out = String::new();
    writeln!(out, "{TSV_HEADER}").unwrap();
    for r in rows {
        let verdict = match r.verdict {
            VerdictKind::AllIrreducible => "irreducible",
            VerdictKind::Reducible => "reducible",
        };
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.q, r.a1, r.b1, r.a2, r.b2, verdict, r.witness_len, r.reach_size
        )
        .unwrap();
    }
    out
}

/// All monic quadratics in encoded `(a, b)` order.
pub fn all_quadratics(ctx: &FieldCtx) -> Vec<MonicQuadratic> {
    ctx.elements()
        .flat_map(|a| ctx.elements().map(move |b| MonicQuadratic::new(a, b)))
        .collect()
}

/// One row per unordered pair of distinct quadratics passing `filter`, with
/// `(a1, b1) < (a2, b2)`, in lexicographic pair order.
pub fn census_pairs(ctx: &FieldCtx, filter: PairFilter) -> Vec<CensusRow> {
    let gens: Vec<MonicQuadratic> = all_quadratics(ctx)
        .into_iter()
        .filter(|f| filter.accepts(ctx, f))
        .collect();
    (0..gens.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let gens = &gens;
            (i + 1..gens.len()).map(move |j| census_row(ctx, gens[i], gens[j]))
        })
        .collect()
}

pub fn census_row(ctx: &FieldCtx, f: MonicQuadratic, g: MonicQuadratic) -> CensusRow {
    let (f, g) = if f <= g { (f, g) } else { (g, f) };
    let set = GeneratorSet::new(ctx, [f, g]).expect("nonempty");
    let graph = set.reachable_subgraph();
    let verdict = set.verdict_from_graph(&graph);
    CensusRow {
        q: ctx.order(),
        a1: f.a,
        b1: f.b,
        a2: g.a,
        b2: g.b,
        verdict: verdict.kind,
        witness_len: verdict.witness.as_ref().map_or(0, Word::len),
        reach_size: graph.len(),
    }
}

/// Elements `a` with `a` and `a + 1` both non-squares; requires `q = 1 mod 4`.
pub fn example_family(ctx: &FieldCtx) -> Result<Vec<Elem>> {
    if ctx.order() % 4 != 1 {
        return Err(Error::ResidueClass {
            value: ctx.order() as u64,
            expected: "congruent to 1 mod 4",
        });
    }
    Ok(ctx
        .elements()
        .filter(|&a| !ctx.is_square(a) && !ctx.is_square(ctx.add(a, Elem::ONE)))
        .collect())
}

/// `{(x - a)^2 + a, (x - a - 1)^2 + a}`.
pub fn example_family_set(ctx: &FieldCtx, a: Elem) -> GeneratorSet<'_> {
    let minus_a = ctx.neg(a);
    GeneratorSet::new(
        ctx,
        [
            MonicQuadratic::new(a, minus_a),
            MonicQuadratic::new(ctx.add(a, Elem::ONE), minus_a),
        ],
    )
    .expect("nonempty")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingletonRow {
    pub b: Elem,
    pub b_is_square: bool,
    pub verdict: VerdictKind,
    pub witness: Option<Word>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub p: u64,
    pub holds: bool,
    pub rows: Vec<SingletonRow>,
}

/// For `p = 7 mod 8`, checks that `{x^2 - b}` yields a reducible composition
/// for every `b` in `F_p`.
pub fn verify_lemma_p7mod8(p: u64) -> Result<LemmaReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 8 != 7 {
        return Err(Error::ResidueClass {
            value: p,
            expected: "congruent to 7 mod 8",
        });
    }
    let ctx = FieldCtx::prime(p)?;
    let rows: Vec<SingletonRow> = ctx
        .elements()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|b| {
            let set =
                GeneratorSet::new(&ctx, [MonicQuadratic::new(Elem::ZERO, b)]).expect("nonempty");
            let v = set.check_semigroup_irreducible();
            SingletonRow {
                b,
                b_is_square: ctx.is_square(b),
                verdict: v.kind,
                witness: v.witness,
            }
        })
        .collect();
    Ok(LemmaReport {
        p,
        holds: rows.iter().all(|r| r.verdict == VerdictKind::Reducible),
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairRow {
    pub b_f: Elem,
    pub b_g: Elem,
    pub verdict: VerdictKind,
    pub witness: Option<Word>,
    pub reach_size: usize,
    /// Every node is the target of at most one edge per generator.
    pub in_degree_at_most_one: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropReport {
    pub p: u64,
    pub holds: bool,
    pub rows: Vec<PairRow>,
}

/// For `p = 3 mod 4`, checks that `{x^2 - b_f, x^2 - b_g}` is reducible for
/// every pair of distinct non-squares `b_f < b_g`.
pub fn verify_prop_p3mod4(p: u64) -> Result<PropReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 4 != 3 {
        return Err(Error::ResidueClass {
            value: p,
            expected: "congruent to 3 mod 4",
        });
    }
    let ctx = FieldCtx::prime(p)?;
    let non_squares: Vec<Elem> = ctx.elements().filter(|&b| !ctx.is_square(b)).collect();
    let pairs: Vec<(Elem, Elem)> = non_squares
        .iter()
        .enumerate()
        .flat_map(|(i, &x)| non_squares[i + 1..].iter().map(move |&y| (x, y)))
        .collect();
    let rows: Vec<PairRow> = pairs
        .into_par_iter()
        .map(|(b_f, b_g)| {
            let set = GeneratorSet::new(
                &ctx,
                [
                    MonicQuadratic::new(Elem::ZERO, b_f),
                    MonicQuadratic::new(Elem::ZERO, b_g),
                ],
            )
            .expect("nonempty");
            let graph = set.reachable_subgraph();
            let v = set.verdict_from_graph(&graph);
            PairRow {
                b_f,
                b_g,
                verdict: v.kind,
                witness: v.witness,
                reach_size: graph.len(),
                in_degree_at_most_one: graph.max_in_degree_per_generator(2).iter().all(|&d| d <= 1),
            }
        })
        .collect();
    Ok(PropReport {
        p,
        holds: rows.iter().all(|r| r.verdict == VerdictKind::Reducible),
        rows,
    })
}
