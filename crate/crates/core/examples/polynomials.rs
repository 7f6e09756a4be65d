//! Polynomial arithmetic over a finite ring.
//!
//!     cargo run --example polynomials

use jmccoy::eval::Evaluator;
use jmccoy::poly::{pack_coefficients, substitute_power, Poly, ZeroPair};

fn main() -> jmccoy::Result<()> {
    let m2 = Evaluator::default().eval_str("Mat(Z2,2)")?;
    let f = Poly::parse(&m2, "[[0,0],[0,1]] + [[0,0],[1,0]]*x")?;
    let g = Poly::parse(&m2, "[[0,1],[0,0]] + [[0,0],[0,1]]*x")?;
    println!("f   = {f}");
    println!("g   = {g}");
    println!("f g = {}", f.mul(&g)?);
    println!("g f = {}", g.mul(&f)?);
    let pair = ZeroPair::new(f.clone(), g)?;
    println!("zero pair: {}", serde_json::to_string(&pair).unwrap());

    println!("f(x^3)       = {}", substitute_power(&f, 3)?);
    let h = Poly::parse(&m2, "[[1,0],[0,0]]")?;
    println!("f + h x^2    = {}", pack_coefficients(&[f, h], 2)?);
    Ok(())
}
