//! The expression language: parse, print, evaluate, and user definitions.
//!
//!     cargo run --example ring_expressions -- "Corner(Prod(Z2,Z4), e=(1,0))"

use jmccoy::eval::{Defs, Evaluator};
use jmccoy::expr::parse_ring_expr;
use jmccoy::ring::Config;

const DEFS: &str = r#"
[sigma.flip]
ring = "Prod(Z2,Z2)"
map = { "(0,0)" = "(0,0)", "(0,1)" = "(1,0)", "(1,0)" = "(0,1)", "(1,1)" = "(1,1)" }
"#;

fn main() -> jmccoy::Result<()> {
    let ev = Evaluator::new(Config::default(), Defs::from_toml(DEFS)?);
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = [
            "Z4",
            "T(Z2, 3)",
            "Quot(Tri(Z2,2), J)",
            "Sub(Mat(Z2,2), {[[0,1],[1,1]]})",
            "SkewTri(Prod(Z2,Z2), 2, flip)",
            "Triangular(Mat(Z2,2), Z2, columns)",
            "Mat(Z2, 0)",
            "Corner(Z4, 2)",
        ]
        .map(String::from)
        .to_vec();
    }
    for text in inputs {
        match parse_ring_expr(&text) {
            Err(e) => println!("{text:<40} {e}"),
            Ok(expr) => match ev.eval(&expr) {
                Ok(r) => println!("{text:<40} {expr} has order {}", r.order()),
                Err(e) => println!("{text:<40} {e}"),
            },
        }
    }
    Ok(())
}
