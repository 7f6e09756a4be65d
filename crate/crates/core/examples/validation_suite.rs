//! Runs the default validation suite and prints one line per validation.
//!
//!     cargo run --release --example validation_suite -- [truncation] [--json]

use jmccoy::report::to_json;
use jmccoy::suite::{run_suite, Status, Suite, SuiteOptions};

fn main() -> jmccoy::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut opts = SuiteOptions::default();
    if let Some(m) = args.iter().find_map(|a| a.parse().ok()) {
        opts.truncation = m;
    }
    let rep = run_suite(Suite::Default, &opts)?;
    if args.iter().any(|a| a == "--json") {
        print!("{}", to_json(&rep));
        return Ok(());
    }
    for v in &rep.validations {
        let status = match &v.status {
            Status::Pass => "pass".to_string(),
            Status::Fail { instance, detail } => format!("FAIL on {instance}: {detail}"),
            Status::Skipped { reason } => format!("skipped: {reason}"),
        };
        println!("{:<34} {status}", v.name);
    }
    println!("{} passed, {} failed, {} skipped", rep.passed, rep.failed, rep.skipped);
    Ok(())
}
