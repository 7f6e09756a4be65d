//! Bounded decisions of the McCoy, NC-McCoy and J-McCoy conditions.
//!
//!     cargo run --example check_mccoy

use jmccoy::eval::Evaluator;
use jmccoy::mccoy::{check_property, witness_right, PropertyKind, Side, Variant};
use jmccoy::poly::Poly;
use jmccoy::search::SearchOptions;

fn main() -> jmccoy::Result<()> {
    let ev = Evaluator::default();
    let opts = SearchOptions::default();
    for text in ["Z8", "Tri(Z2,2)", "Mat(Z2,2)", "Prod(Z4,Mat(Z2,2))"] {
        let r = ev.eval_str(text)?;
        for v in Variant::all() {
            for side in [Side::Right, Side::Left] {
                let verdict = check_property(&r, PropertyKind::new(v, side), 1, &opts)?;
                let outcome = match verdict.counterexample() {
                    None => format!("holds ({} zero pairs)", verdict.pairs_examined),
                    Some(p) => format!("fails: f = {}, g = {}", p.f, p.g),
                };
                println!("{:<22} {:<16} {outcome}", r.label(), verdict.property.to_string());
            }
        }
    }

    // A single witness search.
    let t2 = ev.eval_str("Tri(Z2,2)")?;
    let f = Poly::parse(&t2, "[[0,1],[0,0]] + [[1,0],[0,0]]*x")?;
    for v in Variant::all() {
        let w = witness_right(&f, PropertyKind::right(v))?;
        println!("{} witness for {f}: {}", v.name(), w.map_or("none".into(), |w| t2.label_of(w)));
    }
    Ok(())
}
