//! The multiplicity column of an odd-parts datum: every target reached by
//! the raising expansion of its Φ image, with graded and ungraded values.
//!
//! cargo run --example multiplicity_column -- 3,3,1 ++

use springer_kit::multiplicity::LocalSystemColumn;
use springer_kit::symbols::{enumerate_pport, GSCDatum};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (lam, eps) = match args.as_slice() {
        [l, e] => (l.as_str(), e.as_str()),
        _ => ("3,3,1", "++"),
    };
    let d = GSCDatum::parse(lam, eps)?;
    let col = LocalSystemColumn::new(&d)?;
    println!("source {d}: Φ image ({}) with k = {}, order {}", col.pair(), col.defect(), col.order());
    for d2 in enumerate_pport(d.n()) {
        let p = col.tpoly(&d2)?;
        if !p.is_zero() {
            println!("  {d2}: {} (at t=1: {})", p, p.at_one());
        }
    }
    Ok(())
}
