mod common;

use common::quad;
use quadsemi::search::{
    census_pairs, census_row, example_family, example_family_set, verify_lemma_p7mod8,
    verify_prop_p3mod4, PairFilter,
};
use quadsemi::{compose_word, FieldCtx, PolyRing, VerdictKind, Word};

#[test]
fn lemma_holds_for_small_primes() {
    for p in [7, 23, 31, 47, 71] {
        let report = verify_lemma_p7mod8(p).unwrap();
        assert!(report.holds, "p={p}");
        assert_eq!(report.rows.len() as u64, p);
        let non_squares = report.rows.iter().filter(|r| !r.b_is_square).count() as u64;
        assert_eq!(non_squares, (p - 1) / 2);
        for row in &report.rows {
            // square b: reducible already as a generator
            let w = row.witness.as_ref().unwrap();
            assert_eq!(row.b_is_square, w.len() == 1, "p={p} b={}", row.b);
        }
    }
}

#[test]
fn lemma_witness_p23_expands_reducibly() {
    let report = verify_lemma_p7mod8(23).unwrap();
    let ctx = FieldCtx::prime(23).unwrap();
    for row in report.rows.iter().filter(|r| !r.b_is_square) {
        let set = quadsemi::GeneratorSet::new(
            &ctx,
            [quadsemi::MonicQuadratic::new(quadsemi::Elem::ZERO, row.b)],
        )
        .unwrap();
        let w = row.witness.as_ref().unwrap();
        assert!(!set.word_irreducible(w).unwrap());
        if w.len() <= 4 {
            assert!(!PolyRing::new(&ctx)
                .rabin_irreducible(&compose_word(&set, w))
                .unwrap());
        }
    }
}

#[test]
fn proposition_holds_for_small_primes() {
    for p in [7u64, 11, 19, 23, 31] {
        let report = verify_prop_p3mod4(p).unwrap();
        assert!(report.holds, "p={p}");
        let k = (p - 1) / 2;
        assert_eq!(report.rows.len() as u64, k * (k - 1) / 2);
        for row in &report.rows {
            assert_eq!(row.verdict, VerdictKind::Reducible);
            assert!(row.witness.as_ref().unwrap().len() >= 2);
            assert!(row.reach_size >= 1);
        }
    }
}

#[test]
fn residue_class_preconditions() {
    assert!(verify_lemma_p7mod8(23).is_ok());
    for p in [3, 5, 11, 13, 17] {
        assert!(verify_lemma_p7mod8(p).is_err(), "p={p}");
    }
    for p in [5, 13, 17] {
        assert!(verify_prop_p3mod4(p).is_err(), "p={p}");
    }
    assert!(verify_prop_p3mod4(21).is_err());
}

#[test]
fn example_family_is_irreducible() {
    for (p, e) in [(5, 1), (13, 1), (17, 1), (29, 1), (3, 2), (5, 2), (37, 1)] {
        let ctx = FieldCtx::new(p, e, None).unwrap();
        let members = example_family(&ctx).unwrap();
        assert!(!members.is_empty(), "q={}", ctx.order());
        for a in members {
            let set = example_family_set(&ctx, a);
            assert_eq!(set.distinguished_set(), vec![a]);
            assert!(set.check_semigroup_irreducible().is_irreducible());
        }
    }
}

#[test]
fn sharpness_at_p7() {
    let ctx = FieldCtx::prime(7).unwrap();
    let rows = census_pairs(&ctx, PairFilter::All);
    let irreducible = rows
        .iter()
        .filter(|r| r.verdict == VerdictKind::AllIrreducible)
        .count();
    assert!(irreducible > 0);
    for r in census_pairs(&ctx, PairFilter::NoLinearTerm) {
        if !ctx.is_square(r.b1) && !ctx.is_square(r.b2) {
            assert_eq!(r.verdict, VerdictKind::Reducible);
        }
    }
    let sharp = census_row(&ctx, quad(&ctx, 1, 5), quad(&ctx, 4, 5));
    assert_eq!(sharp.verdict, VerdictKind::AllIrreducible);
}

#[test]
fn census_rows_reevaluate() {
    for (p, e) in [(7, 1), (3, 2)] {
        let ctx = FieldCtx::new(p, e, None).unwrap();
        for row in census_pairs(&ctx, PairFilter::All) {
            let (f, g) = row.pair();
            assert!(f < g);
            let set = quadsemi::GeneratorSet::new(&ctx, [f, g]).unwrap();
            let v = set.check_semigroup_irreducible();
            assert_eq!(v.kind, row.verdict);
            assert_eq!(v.witness.as_ref().map_or(0, Word::len), row.witness_len);
        }
    }
}

#[test]
fn census_independent_of_worker_count() {
    let ctx = FieldCtx::prime(11).unwrap();
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| census_pairs(&ctx, PairFilter::All))
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one, run(7));
}

#[test]
fn equal_nonzero_shift_counts() {
    // Not a claim; just records how many such pairs survive for p = 3 mod 4.
    for p in [7u64, 11, 19] {
        let ctx = FieldCtx::prime(p).unwrap();
        let rows = census_pairs(&ctx, PairFilter::IrreducibleGenerators);
        let same_shift: Vec<_> = rows
            .iter()
            .filter(|r| r.a1 == r.a2 && !r.a1.is_zero())
            .collect();
        let irreducible = same_shift
            .iter()
            .filter(|r| r.verdict == VerdictKind::AllIrreducible)
            .count();
        println!(
            "p={p}: {irreducible} of {} equal-shift pairs irreducible",
            same_shift.len()
        );
    }
}
