//! Maximal and minimal data of every odd-parts datum of one size, and the
//! sign twist exchanging them.
//!
//! cargo run --example sign_twist -- 9

use springer_kit::maxmin::{lambda_max_algorithm, lambda_min, sign_twist};
use springer_kit::symbols::enumerate_odd_parts;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: u32 = std::env::args().nth(1).map_or(Ok(9), |s| s.parse())?;
    for d in enumerate_odd_parts(n) {
        let (mx, _) = lambda_max_algorithm(&d)?;
        let mn = lambda_min(&d)?;
        let ok = sign_twist(&mn)?.same_class(&mx);
        println!("{:<24} max {:<20} min {:<28} twist(min) = max: {ok}", d.to_string(), mx.to_string(), mn.to_string());
    }
    Ok(())
}
