//! Counts of data per size against the closed-form codomain count.
//!
//! cargo run --example enumerate_data -- 12

use springer_kit::symbols::{codomain_count, enumerate_odd_parts, enumerate_pport};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: u32 = std::env::args().nth(1).map_or(Ok(12), |s| s.parse())?;
    println!("{:>3} {:>8} {:>8} {:>10}", "N", "data", "odd", "codomain");
    for n in 1..=max {
        println!(
            "{n:>3} {:>8} {:>8} {:>10}",
            enumerate_pport(n).len(),
            enumerate_odd_parts(n).len(),
            codomain_count(n)
        );
    }
    Ok(())
}
