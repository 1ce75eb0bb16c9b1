//! The graded raising expansion of an ordered bipartition, checked term by
//! term against the ungraded signed configuration count.
//!
//! cargo run --example raising_expansion -- "1;2" aba

use springer_kit::multiplicity::{mult_bipartition, raising_expansion};
use springer_kit::partition::bipartitions;
use springer_kit::{Bipartition, IndexOrder};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (ab, o): (Bipartition, IndexOrder) = match args.as_slice() {
        [a, w] => (a.parse()?, w.parse()?),
        _ => ("1;2".parse()?, "aba".parse()?),
    };
    let e = raising_expansion(&ab, &o)?;
    let mut agree = true;
    for t in bipartitions(ab.size()) {
        let slow = mult_bipartition(&ab, &o, &t)?;
        let graded = e.get(&t).cloned().unwrap_or_default();
        agree &= graded.at_one() == slow;
        if slow != 0 || !graded.is_zero() {
            println!("({t}): {graded}  oracle {slow}");
        }
    }
    println!("expansion agrees with oracle: {agree}");
    Ok(())
}
