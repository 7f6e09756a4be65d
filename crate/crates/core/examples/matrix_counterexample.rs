//! The integer matrix pair over M_3(Z), and a finite counterexample in M_2(Z2).
//!
//!     cargo run --release --example matrix_counterexample

use jmccoy::eval::Evaluator;
use jmccoy::mccoy::{check_property, PropertyKind, Variant};
use jmccoy::search::SearchOptions;
use jmccoy::suite::integer::{degree, identity_pair, poly_mul};

fn main() -> jmccoy::Result<()> {
    let (f, g) = identity_pair();
    println!("over M_3(Z): deg f = {:?}, deg g = {:?}", degree(&f), degree(&g));
    println!("f g has degree {:?}", degree(&poly_mul(&f, &g)));
    println!("g f has degree {:?}", degree(&poly_mul(&g, &f)));

    let m2 = Evaluator::default().eval_str("Mat(Z2,2)")?;
    for d in 1..=3 {
        let v = check_property(&m2, PropertyKind::right(Variant::McCoy), d, &SearchOptions::default())?;
        match v.counterexample() {
            Some(p) => println!("degree {d}: f = {}, g = {} ({} zero pairs before it)", p.f, p.g, v.pairs_examined),
            None => println!("degree {d}: no counterexample"),
        }
    }
    Ok(())
}
