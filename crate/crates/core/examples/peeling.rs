//! Procedures (a) and (b) on one ordered bipartition, then the sets
//! `P(α,β,<)` and `P_{A,B;s}(α,β,<)` they generate.
//!
//! cargo run --example peeling -- "2,1;2" abab

use springer_kit::order::{procedure_a, procedure_b};
use springer_kit::pab::{lambda_of, p_abs_set, p_set, PabParams};
use springer_kit::seq::{fmt_q, q, qr};
use springer_kit::{Bipartition, IndexOrder};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (ab, o): (Bipartition, IndexOrder) = match args.as_slice() {
        [a, w] => (a.parse()?, w.parse()?),
        _ => ("2,1;2".parse()?, "abab".parse()?),
    };
    for (name, r) in [("(a)", procedure_a(&ab, &o)?), ("(b)", procedure_b(&ab, &o)?)] {
        println!(
            "procedure {name}: extracts {}, chains a{:?} b{:?}, leaves ({}) under '{}'",
            r.extracted, r.chain_a, r.chain_b, r.residual, r.residual_order
        );
    }
    let all = p_set(&ab, &o)?;
    println!("P: {} members", all.len());
    for m in &all {
        println!("  ({m})");
    }
    for params in [PabParams::new(q(1), q(-1), q(2))?, PabParams::new(qr(1, 2), qr(-1, 2), qr(1, 2))?] {
        let set = p_abs_set(&ab, &o, params)?;
        let first = set.iter().next().expect("never empty");
        println!(
            "P_{{A,B;s}} at A={} B={} s={}: {} members, Λ = {}",
            fmt_q(&params.a),
            fmt_q(&params.b),
            fmt_q(&params.s),
            set.len(),
            lambda_of(first, params).render()
        );
        for m in &set {
            println!("  ({m})");
        }
    }
    Ok(())
}
