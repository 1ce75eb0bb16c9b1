//! The maximal and minimal data `(λ^max, [ε^max])` and `(λ^min, [ε^min])`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pab::{p_abs_set, BipSet, PabParams};
use crate::partition::{Bipartition, Partition};
use crate::seq::{q, qr, EventualSeq};
use crate::symbols::{order_from_h, phi, phi_inverse, GSCDatum, Sign};

fn require_odd(d: &GSCDatum) -> Result<()> {
    if d.lam().all_odd() {
        Ok(())
    } else {
        Err(Error::EvenPart(d.lam().to_string()))
    }
}

/// The singleton `P_{k,−k;2}(α,β,<_{α,β,k})` of an odd-parts datum.
pub fn pab_singleton(d: &GSCDatum) -> Result<(Bipartition, i64)> {
    require_odd(d)?;
    let (ab, k) = phi(d)?;
    let o = order_from_h(&ab, k)?;
    let set = p_abs_set(&ab, &o, PabParams::new(q(k), q(-k), q(2))?)?;
    if set.len() != 1 {
        return Err(Error::CrossCheck(format!("P_{{k,-k;2}} of {d} has {} elements", set.len())));
    }
    Ok((set.into_iter().next().unwrap(), k))
}

/// `(λ^max, [ε^max]) = Φ_N^{-1}` of the singleton peeling set.
pub fn lambda_max_via_pab(d: &GSCDatum) -> Result<GSCDatum> {
    let (m, k) = pab_singleton(d)?;
    phi_inverse(&m, k, d.n())
}

/// One level of the recursive construction.
#[derive(Clone, Debug, Serialize)]
pub struct TraceLevel {
    pub n: u32,
    pub lambda: Vec<u32>,
    pub eps: String,
    /// `𝔖`, 1-based.
    pub s_set: Vec<usize>,
    pub j_plus: Vec<usize>,
    pub j_minus: Vec<usize>,
    pub j_tilde_plus: Vec<usize>,
    pub j_tilde_minus: Vec<usize>,
    pub bar_lambda1: u32,
    pub bar_eps1: char,
    pub next_lambda: Vec<u32>,
    pub next_eps: String,
    pub next_n: u32,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AlgorithmTrace {
    pub levels: Vec<TraceLevel>,
}

fn signs_str(e: &[Sign]) -> String {
    e.iter().map(|s| s.char()).collect()
}

/// The recursive construction on `(λ, ε)` with `ε` read positionally from
/// the given representative.
pub fn lambda_max_algorithm(d: &GSCDatum) -> Result<(GSCDatum, AlgorithmTrace)> {
    require_odd(d)?;
    let mut trace = AlgorithmTrace::default();
    let (lam, eps) = algorithm_rec(d.lam().parts().to_vec(), d.positional_signs(), &mut trace)?;
    Ok((GSCDatum::from_positional(Partition::new(lam), &eps)?, trace))
}

fn algorithm_rec(lam: Vec<u32>, eps: Vec<Sign>, trace: &mut AlgorithmTrace) -> Result<(Vec<u32>, Vec<Sign>)> {
    let n: u32 = lam.iter().sum();
    if n <= 1 {
        return Ok((lam, eps));
    }
    let t = lam.len();
    let e = |i: usize| eps[i - 1];
    let s_set: Vec<usize> = (1..=t).filter(|&i| i == 1 || e(i) == e(i - 1)).collect();
    let in_j = |i: usize, u: Sign| (if i % 2 == 1 { e(i) } else { e(i).flipped() }) == u;
    let j_of = |u: Sign| (1..=t).filter(|&i| in_j(i, u)).collect::<Vec<_>>();
    let jt_of = |u: Sign| j_of(u).into_iter().filter(|i| !s_set.contains(i)).collect::<Vec<_>>();
    let e1 = e(1);
    let even_s = s_set.len().is_multiple_of(2);
    let sum_s: i64 = s_set.iter().map(|&i| lam[i - 1] as i64).sum();
    let bar1 = sum_s - 2 * jt_of(e1.flipped()).len() as i64 - even_s as i64;
    if bar1 < lam[0] as i64 || bar1 % 2 == 0 {
        return Err(Error::CrossCheck(format!("first output part {bar1} is not odd and at least {}", lam[0])));
    }
    let rest: Vec<usize> = (1..=t).filter(|i| !s_set.contains(i)).collect();
    let r = rest.len();
    let mut next: Vec<(u32, Sign)> =
        rest.iter().map(|&i| if in_j(i, e1) { (lam[i - 1], e(i)) } else { (lam[i - 1] + 2, e(i).flipped()) }).collect();
    if even_s {
        next.push((1, if r.is_multiple_of(2) { e1 } else { e1.flipped() }));
    }
    let next_n: u32 = next.iter().map(|x| x.0).sum();
    if next_n as i64 + bar1 != n as i64 || next_n >= n || next.windows(2).any(|w| w[0].0 < w[1].0) {
        return Err(Error::CrossCheck(format!("recursion step from {lam:?} is not a smaller partition")));
    }
    let (nl, ne): (Vec<u32>, Vec<Sign>) = next.into_iter().unzip();
    trace.levels.push(TraceLevel {
        n,
        lambda: lam.clone(),
        eps: signs_str(&eps),
        s_set: s_set.clone(),
        j_plus: j_of(Sign::Plus),
        j_minus: j_of(Sign::Minus),
        j_tilde_plus: jt_of(Sign::Plus),
        j_tilde_minus: jt_of(Sign::Minus),
        bar_lambda1: bar1 as u32,
        bar_eps1: e1.char(),
        next_lambda: nl.clone(),
        next_eps: signs_str(&ne),
        next_n,
    });
    let (bl, be) = algorithm_rec(nl, ne, trace)?;
    Ok(([vec![bar1 as u32], bl].concat(), [vec![e1], be].concat()))
}

/// `Φ_N^{-1}((ᵗβ, ᵗα), k)`: tensoring with the sign character.
pub fn sign_twist(d: &GSCDatum) -> Result<GSCDatum> {
    let (ab, k) = phi(d)?;
    phi_inverse(&ab.twisted(), k, d.n())
}

pub fn lambda_min(d: &GSCDatum) -> Result<GSCDatum> {
    sign_twist(&lambda_max_via_pab(d)?)
}

fn odd_core(d: &GSCDatum) -> Result<GSCDatum> {
    let k = d.defect();
    if k > 1 {
        return Err(Error::DefectOutOfRange(k));
    }
    let odd = d.lam().odd_part();
    if odd.is_empty() {
        return Err(Error::EmptyOddCore(d.lam().to_string()));
    }
    GSCDatum::new(odd, d.signs().to_vec())
}

/// Odd-core maximum with its first part enlarged by the total of the even parts.
pub fn lambda_max_even(d: &GSCDatum) -> Result<GSCDatum> {
    let core = lambda_max_via_pab(&odd_core(d)?)?;
    let mut parts = core.lam().parts().to_vec();
    parts[0] += d.lam().even_part().size();
    GSCDatum::from_positional(Partition::new(parts), &core.positional_signs())
}

pub fn lambda_min_even(d: &GSCDatum) -> Result<GSCDatum> {
    sign_twist(&lambda_max_even(d)?)
}

/// All parts odd, each of multiplicity at most two.
pub fn is_quasi_distinguished(lam: &Partition) -> bool {
    lam.all_odd() && lam.distinct().iter().all(|&p| lam.multiplicity(p) <= 2)
}

/// `P_{k/2,−k/2;1/2}` and `P_{k,−k;2}` on the Φ image with `<_{α,β,k}`.
pub fn pp_sets(d: &GSCDatum) -> Result<(BipSet, BipSet)> {
    require_odd(d)?;
    let (ab, k) = phi(d)?;
    let o = order_from_h(&ab, k)?;
    let half = p_abs_set(&ab, &o, PabParams::new(qr(k, 2), qr(-k, 2), qr(1, 2))?)?;
    let full = p_abs_set(&ab, &o, PabParams::new(q(k), q(-k), q(2))?)?;
    Ok((half, full))
}

/// Both sides of `2Λ_{k/2,−k/2;1/2}(α,β) = ᵗ(ˢλ) + ([0,−∞[_1)²`.
pub fn transp_sides(d: &GSCDatum) -> Result<(EventualSeq, EventualSeq)> {
    let (ab, k) = phi(d)?;
    let lhs = EventualSeq::lambda_abs(&ab.first, &ab.second, qr(k, 2), qr(-k, 2), qr(1, 2)).scaled(q(2));
    let twisted = sign_twist(d)?;
    let zero = EventualSeq::ray(q(0), q(1));
    let rhs = zero.union(&zero).add_partition(&twisted.lam().transpose());
    Ok((lhs, rhs))
}
