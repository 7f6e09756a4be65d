//! Units, Jacobson radical and nilpotent elements.
//!
//!     cargo run --example radical

use jmccoy::eval::Evaluator;
use jmccoy::radical::{quasi_regular_member, RadicalReport};

fn main() -> jmccoy::Result<()> {
    let ev = Evaluator::default();
    for text in ["Z4", "Z6", "Mat(Z2,2)", "Tri(Z2,2)", "T(Z2,3)", "Triangular(Z4,Z2,reduce)"] {
        let r = ev.eval_str(text)?;
        let rep = RadicalReport::of(&r)?;
        println!("{} (order {})", rep.ring, rep.order);
        println!("  units      {}", rep.units.join(" "));
        println!("  J(R)       {}", rep.jacobson.join(" "));
        println!("  N(R)       {}", rep.nilpotents.join(" "));
        println!("  N(R) in J(R): {}", rep.nil_in_jacobson);
    }

    // One element at a time: 1 - rx must be a unit for every r.
    let m2 = ev.eval_str("Mat(Z2,2)")?;
    let e12 = m2.find_label("[[0,1],[0,0]]")?;
    println!("E12 quasi-regular in M_2(Z2): {}", quasi_regular_member(&m2, e12)?);
    Ok(())
}
