//! The recursive algorithm for the maximal datum, level by level, compared
//! with the extremal-set construction.
//!
//! cargo run --example maximal_algorithm -- 19,17,15,13,11,9,7 -++-+-+

use springer_kit::maxmin::{lambda_max_algorithm, lambda_max_via_pab};
use springer_kit::GSCDatum;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (lam, eps) = match args.as_slice() {
        [l, e] => (l.as_str(), e.as_str()),
        _ => ("19,17,15,13,11,9,7", "-++-+-+"),
    };
    let d = GSCDatum::parse(lam, eps)?;
    let (mx, trace) = lambda_max_algorithm(&d)?;
    for (i, l) in trace.levels.iter().enumerate() {
        println!(
            "level {i}: N={} λ={:?} ε={} S={:?} J+={:?} J-={:?} J̃+={:?} J̃-={:?} → λ̄1={}{} next N={} λ={:?} ε={}",
            l.n,
            l.lambda,
            l.eps,
            l.s_set,
            l.j_plus,
            l.j_minus,
            l.j_tilde_plus,
            l.j_tilde_minus,
            l.bar_lambda1,
            l.bar_eps1,
            l.next_n,
            l.next_lambda,
            l.next_eps
        );
    }
    let via = lambda_max_via_pab(&d)?;
    println!("algorithm {mx}");
    println!("extremal  {via}  agree: {}", via.same_class(&mx));
    Ok(())
}
