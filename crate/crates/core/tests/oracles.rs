mod common;

use std::collections::BTreeSet;

use jmccoy::catalog::SMALL_RINGS;
use jmccoy::eval::Evaluator;
use jmccoy::mccoy::{check_property, PropertyKind, Side, Variant};
use jmccoy::radical::jacobson_radical;
use jmccoy::search::{enumerate_zero_pairs, SearchOptions, DEFAULT_BUDGET};

use common::{mul, zero_pairs, Oracle, Pair};

#[test]
fn zero_pairs_match_double_loop() {
    let ev = Evaluator::default();
    for text in SMALL_RINGS {
        let r = ev.eval_str(text).unwrap();
        for d in 0..=2 {
            let fast: BTreeSet<Pair> = enumerate_zero_pairs(&r, d, DEFAULT_BUDGET)
                .unwrap()
                .map(|p| (p.f.coeffs().to_vec(), p.g.coeffs().to_vec()))
                .collect();
            assert_eq!(fast, zero_pairs(&r, d), "{text} degree {d}");
        }
    }
}

#[test]
fn radical_matches_nil_ideal_oracle() {
    let ev = Evaluator::default();
    for text in SMALL_RINGS.iter().chain(&["Mat(Z2,2)", "Triangular(Z4,Z2,reduce)", "S(Z2,3)", "Prod(Z4,Z4)"]) {
        let r = ev.eval_str(text).unwrap();
        assert_eq!(jacobson_radical(&r).unwrap(), common::jacobson(&r), "{text}");
    }
}

/// Both sides, all three variants, against the brute-force verdict. The
/// left side is decided here directly in R, never through the opposite ring.
#[test]
fn verdicts_match_mirrored_brute_force() {
    let ev = Evaluator::default();
    let opts = SearchOptions::default();
    let mut rings: Vec<&str> = SMALL_RINGS.to_vec();
    rings.push("Mat(Z2,2)");
    for text in rings {
        let r = ev.eval_str(text).unwrap();
        let oracle = Oracle::new(&r);
        let dmax = if r.order() > 8 { 1 } else { 2 };
        for v in Variant::all() {
            for side in [Side::Right, Side::Left] {
                let verdict = check_property(&r, PropertyKind::new(v, side), dmax, &opts).unwrap();
                let expected = oracle.counterexample(v, side, dmax);
                match (verdict.counterexample(), expected) {
                    (None, None) => {}
                    (Some(p), Some(_)) => {
                        let (f, g) = (p.f.coeffs(), p.g.coeffs());
                        assert!(mul(&r, f, g).iter().all(|e| e.is_zero()));
                        let side_factor = if side == Side::Right { f } else { g };
                        assert!(!oracle.has_witness(v, side, side_factor), "{text} {v:?} {side:?}");
                    }
                    (got, want) => panic!("{text} {v:?} {side:?} d{dmax}: got {got:?}, oracle {want:?}"),
                }
            }
        }
    }
}
