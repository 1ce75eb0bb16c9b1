//! Every verification suite at a small bound, with per-suite reports.
//!
//! cargo run --release --example verify_suites -- 10

use springer_kit::verify::{run_suite, Suite};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: u32 = std::env::args().nth(1).map_or(Ok(10), |s| s.parse())?;
    let mut failures = 0;
    for s in Suite::ALL {
        let r = run_suite(s, max, 0)?;
        failures += r.failures.len();
        print!("{r}");
    }
    println!("total failures: {failures}");
    Ok(())
}
