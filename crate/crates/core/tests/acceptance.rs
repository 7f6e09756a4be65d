//! One PASS/FAIL line per acceptance criterion, each with a time bound.
//! Run with `cargo test --test acceptance`.

mod common;

use std::time::{Duration, Instant};

use jmccoy::eval::Evaluator;
use jmccoy::mccoy::{check_property, PropertyKind, Side, Variant, Verdict};
use jmccoy::radical::jacobson_radical;
use jmccoy::report::VerdictSummary;
use jmccoy::ring::{make_opposite, triangular_elem, Bimodule, Config, Ring};
use jmccoy::search::{enumerate_zero_pairs, SearchOptions, DEFAULT_BUDGET};
use jmccoy::suite::truncated::TruncatedExample;
use jmccoy::suite::{run_suite, Status, Suite, SuiteOptions, SuiteReport};

type Check = Result<String, String>;

fn suite_at(workers: usize) -> SuiteReport {
    let opts = SuiteOptions {
        search: SearchOptions { budget: DEFAULT_BUDGET, workers },
        ..Default::default()
    };
    run_suite(Suite::Default, &opts).unwrap()
}

/// The single-worker default suite, shared by criteria 5 and 10.
fn default_suite() -> &'static SuiteReport {
    static REPORT: std::sync::OnceLock<SuiteReport> = std::sync::OnceLock::new();
    REPORT.get_or_init(|| suite_at(1))
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ring(text: &str) -> Ring {
    Evaluator::default().eval_str(text).unwrap()
}

fn verdict(r: &Ring, v: Variant, side: Side, d: usize) -> Verdict {
    check_property(r, PropertyKind::new(v, side), d, &SearchOptions::default()).unwrap()
}

fn c1_radical() -> Check {
    let cases: [(&str, &[&str]); 4] = [
        ("Z4", &["0", "2"]),
        ("Z6", &["0"]),
        ("Mat(Z2,2)", &["[[0,0],[0,0]]"]),
        ("Tri(Z2,2)", &["[[0,0],[0,0]]", "[[0,1],[0,0]]"]),
    ];
    for (text, expected) in cases {
        let t = Instant::now();
        let r = ring(text);
        let j = jacobson_radical(&r).unwrap();
        ensure(r.labels_of(&j) == expected, format!("J({text}) = {:?}", r.labels_of(&j)))?;
        ensure(j == common::jacobson(&r), format!("{text}: scan disagrees with the nil-ideal oracle"))?;
        ensure(t.elapsed() < Duration::from_secs(1), format!("{text} took {:?}", t.elapsed()))?;
    }
    // [[J(R), M], [0, J(S)]] for the regular and a reduction bimodule.
    let z2 = ring("Z2");
    let z4 = ring("Z4");
    for bm in [Bimodule::regular(&z2).unwrap(), Bimodule::reduction(&z4, &z2).unwrap()] {
        let t = jmccoy::ring::make_triangular(&bm, "bm", &Config::default()).unwrap();
        let mut block = Vec::new();
        for r in common::jacobson(bm.left_ring()) {
            for m in bm.module().elements() {
                for s in common::jacobson(bm.right_ring()) {
                    block.push(triangular_elem(&bm, r, m, s));
                }
            }
        }
        block.sort();
        ensure(jacobson_radical(&t).unwrap() == block, format!("block formula fails on {}", t.label()))?;
    }
    let tri = ring("Tri(Z2,2)");
    let regular = ring("Triangular(Z2,Z2,regular)");
    ensure(
        jacobson_radical(&regular).unwrap().len() == jacobson_radical(&tri).unwrap().len(),
        "Tri(Z2,2) and its triangular model disagree",
    )?;
    Ok("J(Z4), J(Z6), J(M_2(Z2)), J(T_2(Z2)) match; block formula holds".into())
}

fn c2_commutative() -> Check {
    for text in ["Z2", "Z4", "Z6", "Trunc(Z2,3)"] {
        let v = verdict(&ring(text), Variant::McCoy, Side::Right, 2);
        ensure(v.holds(), format!("{text}: {:?}", v.outcome))?;
    }
    Ok("right McCoy holds to degree 2 on Z2, Z4, Z6, Z2[t]/(t^3)".into())
}

fn c3_local() -> Check {
    for text in ["Z4", "Z8", "Trunc(Z2,3)"] {
        for side in [Side::Right, Side::Left] {
            let v = verdict(&ring(text), Variant::JMcCoy, side, 2);
            ensure(v.holds(), format!("{text} {side:?}: {:?}", v.outcome))?;
        }
    }
    Ok("right and left J-McCoy hold to degree 2 on Z4, Z8, Z2[t]/(t^3)".into())
}

fn c4_families() -> Check {
    let cases = [
        ("Tri(Z2,2)", "[[0,1],[0,0]]"),
        ("S(Z2,2)", "[[0,1],[0,0]]"),
        ("T(Z2,3)", "(0,0,1)"),
        ("SkewTri(Prod(Z2,Z2),2,swap)", "[[(0,0),(1,1)],[(0,0),(0,0)]]"),
    ];
    let mut total = 0u64;
    for (text, e1n) in cases {
        let r = ring(text);
        let v = verdict(&r, Variant::JMcCoy, Side::Right, 1);
        ensure(v.holds(), format!("{text}: {:?}", v.outcome))?;
        let e = r.find_label(e1n).unwrap();
        let in_j = common::jacobson(&r);
        for p in enumerate_zero_pairs(&r, 1, DEFAULT_BUDGET).unwrap() {
            total += 1;
            let ok = p.f.coeffs().iter().all(|&a| in_j.binary_search(&r.mul(a, e)).is_ok());
            ensure(ok, format!("{text}: E_1n not admissible for {}", p.f))?;
        }
    }
    Ok(format!("all four hold to degree 1; E_1n admissible on {total} zero pairs"))
}

fn c5_example22() -> Check {
    let t = Instant::now();
    let ex = TruncatedExample::build(4, &Config::default()).unwrap();
    let built = t.elapsed();
    let r = &ex.ring;
    let t = Instant::now();
    let fg = common::mul(r, ex.f.coeffs(), ex.g.coeffs());
    ensure(fg.iter().all(|e| e.is_zero()), "f g != 0")?;
    ensure(r.label_of(ex.c) == "[[t,0,0],[0,0,0],[0,0,0]]", "c is not t e11")?;
    for &m in ex.f.coeffs() {
        let x = r.mul(m, ex.c);
        // x is in J iff xR is nil
        let nil = r.elements().all(|y| common::nilpotent(r, r.mul(x, y)));
        ensure(nil, format!("{} * c = {} is not in J", r.label_of(m), r.label_of(x)))?;
    }
    let checks = t.elapsed();
    ensure(checks < Duration::from_secs(1), format!("identity checks took {checks:?}"))?;
    let nc = default_suite()
        .validations
        .iter()
        .find(|v| v.name == "truncated_series_example_nc")
        .unwrap();
    ensure(
        matches!(&nc.status, Status::Skipped { reason } if reason.contains("nilpotent")),
        "NC half not skipped with the nilpotency reason",
    )?;
    Ok(format!(
        "order {}, f g = 0, M_i c in J for all 4 coefficients (build {built:.2?}, checks {checks:.2?}); NC half skipped",
        r.order()
    ))
}

fn c6_integer_pair() -> Check {
    // Entries are integer polynomials, lowest degree first.
    type P = Vec<i64>;
    let mono = |k: usize, c: i64| {
        let mut p = vec![0; k + 1];
        p[k] = c;
        p
    };
    let f: Vec<Vec<P>> = (0..3).map(|i| (0..3).map(|j| mono(3 * i + j, 1)).collect()).collect();
    let g: Vec<Vec<P>> = vec![vec![mono(1, 1); 3], vec![mono(0, -1); 3], vec![vec![]; 3]];
    let t = Instant::now();
    for i in 0..3 {
        for k in 0..3 {
            let mut acc = vec![0i64; 12];
            for j in 0..3 {
                for (a, x) in f[i][j].iter().enumerate() {
                    for (b, y) in g[j][k].iter().enumerate() {
                        acc[a + b] += x * y;
                    }
                }
            }
            ensure(acc.iter().all(|&c| c == 0), format!("entry ({i},{k}) of f g is {acc:?}"))?;
        }
    }
    let (lf, lg) = jmccoy::suite::integer::identity_pair();
    ensure(
        jmccoy::suite::integer::degree(&jmccoy::suite::integer::poly_mul(&lf, &lg)).is_none(),
        "library BigInt product is nonzero",
    )?;
    ensure(t.elapsed() < Duration::from_secs(1), "too slow")?;
    Ok("f g = 0 over Z, entry by entry".into())
}

fn c7_surrogate() -> Check {
    let r = ring("Mat(Z2,2)");
    let mut v = verdict(&r, Variant::McCoy, Side::Right, 3);
    if v.holds() {
        v = verdict(&r, Variant::McCoy, Side::Right, 4);
    }
    let Some(p) = v.counterexample() else {
        return Ok("inconclusive: no counterexample up to degree 4".into());
    };
    let (f, g) = (p.f.coeffs(), p.g.coeffs());
    ensure(common::mul(&r, f, g).iter().all(|e| e.is_zero()), "f g != 0")?;
    let witness = r.elements().skip(1).find(|&w| f.iter().all(|&a| r.mul(a, w).is_zero()));
    ensure(witness.is_none(), "full scan found a witness")?;
    let vj = verdict(&r, Variant::JMcCoy, Side::Right, v.dmax);
    ensure(vj.outcome == v.outcome, "J-McCoy verdict differs although J = 0")?;
    Ok(format!("counterexample at degree {}: f = {}, g = {}; no witness among 15 nonzero elements", v.dmax, p.f, p.g))
}

fn c8_duality() -> Check {
    let cases: Vec<(&str, Variant, usize)> = vec![
        ("Z2", Variant::McCoy, 2),
        ("Z4", Variant::McCoy, 2),
        ("Z6", Variant::McCoy, 2),
        ("Trunc(Z2,3)", Variant::McCoy, 2),
        ("Z4", Variant::JMcCoy, 2),
        ("Z8", Variant::JMcCoy, 2),
        ("Trunc(Z2,3)", Variant::JMcCoy, 2),
        ("Tri(Z2,2)", Variant::JMcCoy, 1),
        ("S(Z2,2)", Variant::JMcCoy, 1),
        ("T(Z2,3)", Variant::JMcCoy, 1),
        ("SkewTri(Prod(Z2,Z2),2,swap)", Variant::JMcCoy, 1),
    ];
    for (text, v, d) in &cases {
        let r = ring(text);
        let left = verdict(&r, *v, Side::Left, *d);
        let opp = make_opposite(&r, &Config::default()).unwrap();
        let right = verdict(&opp, *v, Side::Right, *d);
        ensure(left.holds() == right.holds(), format!("{text}: outcomes differ"))?;
        if let (Some(a), Some(b)) = (left.counterexample(), right.counterexample()) {
            ensure(a.f.coeffs() == b.g.coeffs() && a.g.coeffs() == b.f.coeffs(), format!("{text}: pairs differ"))?;
        }
        ensure(left.pairs_examined == right.pairs_examined, format!("{text}: pair counts differ"))?;
        let same_log = left.witness_log.len() == right.witness_log.len()
            && left.witness_log.iter().zip(&right.witness_log).all(|(a, b)| {
                a.poly.coeffs() == b.poly.coeffs() && a.witness == b.witness && a.partners == b.partners
            });
        ensure(same_log, format!("{text}: witness logs differ"))?;
    }
    Ok(format!("{} ring/property combinations agree pair for pair", cases.len()))
}

fn c9_oracle() -> Check {
    let mut pairs = 0usize;
    for text in jmccoy::catalog::SMALL_RINGS {
        let r = ring(text);
        for d in 0..=2 {
            let fast: std::collections::BTreeSet<common::Pair> = enumerate_zero_pairs(&r, d, DEFAULT_BUDGET)
                .unwrap()
                .map(|p| (p.f.coeffs().to_vec(), p.g.coeffs().to_vec()))
                .collect();
            let slow = common::zero_pairs(&r, d);
            ensure(fast == slow, format!("{text} degree {d}: {} vs {} pairs", fast.len(), slow.len()))?;
            pairs += slow.len();
        }
    }
    Ok(format!("{} rings, {pairs} zero pairs, identical sets", jmccoy::catalog::SMALL_RINGS.len()))
}

fn c10_determinism() -> Check {
    let run = |workers| {
        let owned;
        let rep = if workers == 1 {
            default_suite()
        } else {
            owned = suite_at(workers);
            &owned
        };
        let verdicts: Vec<VerdictSummary> = rep.validations.iter().flat_map(|v| v.verdicts.clone()).collect();
        (serde_json::to_string(&rep.validations).unwrap(), verdicts.len(), rep.failed)
    };
    let (a, n, failed) = run(1);
    let (b, _, _) = run(8);
    ensure(failed == 0, format!("{failed} validations failed"))?;
    ensure(a == b, "reports differ between 1 and 8 workers")?;
    Ok(format!("default suite identical at 1 and 8 workers ({n} verdicts)"))
}

fn main() {
    let criteria: [(&str, fn() -> Check, u64); 10] = [
        ("1 radical oracle", c1_radical, 4),
        ("2 commutative baseline", c2_commutative, 10),
        ("3 local rings", c3_local, 30),
        ("4 triangular families", c4_families, 120),
        ("5 truncated series example", c5_example22, 120),
        ("6 integer matrix identity", c6_integer_pair, 1),
        ("7 M_2(Z2) surrogate", c7_surrogate, 600),
        ("8 duality", c8_duality, 120),
        ("9 zero-pair oracle", c9_oracle, 60),
        ("10 determinism", c10_determinism, 300),
    ];
    let mut failures = 0;
    for (name, f, limit) in criteria {
        let t = Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let took = t.elapsed();
        let result = match result {
            Ok(_) if took > Duration::from_secs(limit) => Err(format!("exceeded {limit} s")),
            r => r,
        };
        match result {
            Ok(msg) => println!("PASS {name} [{took:.2?} < {limit} s] {msg}"),
            Err(msg) => {
                failures += 1;
                println!("FAIL {name} [{took:.2?}, limit {limit} s] {msg}");
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
