//! The inequivalent index orders of a bipartition and their minimal
//! representatives.
//!
//! cargo run --example index_orders -- "2,1;1"

use springer_kit::{Bipartition, IndexOrder};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2,1;1".into());
    let ab: Bipartition = arg.parse()?;
    let orders = IndexOrder::inequivalent_orders(&ab, 1);
    println!("({ab}): {} inequivalent orders with one padding slot per side", orders.len());
    for o in &orders {
        let m = o.minimal(&ab)?;
        let same = orders.iter().filter(|x| x.equivalent(o, &ab).unwrap_or(false)).count();
        println!("  {:<8} minimal {:<8} equivalent within list: {same}", o.to_string(), m.to_string());
    }
    Ok(())
}
