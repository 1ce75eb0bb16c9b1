//! A datum through its symbol to a bipartition and back, with the `H`
//! membership test that decides whether an index order exists.
//!
//! cargo run --example symbol_map -- 3,3,1 +++

use springer_kit::symbols::{order_from_h, phi, phi_inverse, symbol_of, GSCDatum};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (lam, eps) = match args.as_slice() {
        [l, e] => (l.as_str(), e.as_str()),
        _ => ("3,3,1", "+++"),
    };
    let d = GSCDatum::parse(lam, eps)?;
    let s = symbol_of(&d)?;
    println!("datum   {d}  (N = {}, M = {}, defect = {})", d.n(), d.m_value(), d.defect());
    println!("symbol  A: {}", s.a.render());
    println!("        B: {}", s.b.render());
    let (ab, k) = phi(&d)?;
    println!("image   ({ab}) with k = {k}");
    match order_from_h(&ab, k) {
        Ok(o) => println!("order   {o}"),
        Err(e) => println!("order   none: {e}"),
    }
    let back = phi_inverse(&ab, k, d.n())?;
    println!("inverse {back}  same class: {}", back.same_class(&d));
    Ok(())
}
