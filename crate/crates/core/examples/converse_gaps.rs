//! Finite instances where an equivalence only holds in one direction.
//!
//!     cargo run --release --example converse_gaps

use jmccoy::suite::{run_suite, Suite, SuiteOptions};

fn main() -> jmccoy::Result<()> {
    let rep = run_suite(Suite::Gaps, &SuiteOptions::default())?;
    for v in &rep.validations {
        println!("{} ({:?})", v.name, v.status);
        println!("  {}", v.claim);
        for e in &v.evidence {
            println!("    {e}");
        }
    }
    Ok(())
}
