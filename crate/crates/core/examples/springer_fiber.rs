//! Springer fibre multiplicities of a datum with even parts, from the odd
//! core column and a Pieri fold, with its maximal and minimal members.
//!
//! cargo run --example springer_fiber -- 3,2,2 +

use springer_kit::maxmin::{lambda_max_even, lambda_min_even};
use springer_kit::multiplicity::springer_fiber_multiplicities;
use springer_kit::GSCDatum;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (lam, eps) = match args.as_slice() {
        [l, e] => (l.as_str(), e.as_str()),
        _ => ("3,2,2", "+"),
    };
    let d = GSCDatum::parse(lam, eps)?;
    let fibre = springer_fiber_multiplicities(&d)?;
    println!("{d}: {} constituents", fibre.len());
    for (t, m) in &fibre {
        println!("  {t}: {m}");
    }
    println!("max {}", lambda_max_even(&d)?);
    println!("min {}", lambda_min_even(&d)?);
    Ok(())
}
