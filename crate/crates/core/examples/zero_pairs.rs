//! Streaming every zero pair of bounded degree, and the budget check.
//!
//!     cargo run --example zero_pairs

use jmccoy::eval::Evaluator;
use jmccoy::search::{enumerate_zero_pairs, estimate_cost, DEFAULT_BUDGET};

fn main() -> jmccoy::Result<()> {
    let ev = Evaluator::default();
    let z4 = ev.eval_str("Z4")?;
    for p in enumerate_zero_pairs(&z4, 1, DEFAULT_BUDGET)?.take(6) {
        println!("({}) * ({}) = 0", p.f, p.g);
    }
    let t2 = ev.eval_str("Tri(Z2,2)")?;
    for d in 0..=2 {
        let n = enumerate_zero_pairs(&t2, d, DEFAULT_BUDGET)?.count();
        println!("{}: {n} zero pairs up to degree {d}", t2.label());
    }

    let m3 = ev.eval_str("Mat(Z2,3)")?;
    println!("estimated cost for {} at degree 2: {}", m3.label(), estimate_cost(&m3, 2));
    match enumerate_zero_pairs(&m3, 2, DEFAULT_BUDGET) {
        Ok(_) => println!("accepted"),
        Err(e) => println!("refused: {e}"),
    }
    Ok(())
}
