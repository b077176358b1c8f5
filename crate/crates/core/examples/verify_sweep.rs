//! Runs the verification suite over a range of D and prints one line per
//! check.
//!
//! cargo run --release --example verify_sweep -- 3 6

use terwilliger::verify::{run_suite, SuiteOptions};

fn main() -> terwilliger::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().expect("D must be an integer"));
    let from = args.next().unwrap_or(3);
    let to = args.next().unwrap_or(from.max(6));
    let result = run_suite(from, to, &SuiteOptions::default())?;
    for r in result.records() {
        println!("D={:<3}{:<16}{:<18}{}", r.d, r.check.name(), r.status.to_string(), r.detail);
    }
    println!("{}", if result.passed() { "all checks passed" } else { "some checks FAILED" });
    Ok(())
}
