//! Orthogonal partitions with local-system signs, their symbols, and the
//! correspondence `Φ_N` to bipartitions with a defect.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::{IndexOrder, Tag};
use crate::partition::{bipartitions, bipartitions_mod_swap, orthogonal_partitions, Bipartition, Partition};
use crate::seq::{q, EventualSeq};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Sign {
        if v >= 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    fn parse(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' | '−' => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// `(λ, ε)` with `ε` stored per distinct odd part, largest part first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GSCDatum {
    lam: Partition,
    signs: Vec<Sign>,
}

impl GSCDatum {
    pub fn new(lam: Partition, signs: Vec<Sign>) -> Result<Self> {
        if let Some(e) = lam.first_bad_even_part() {
            return Err(Error::NotOrthogonal(lam.to_string(), e));
        }
        let d = lam.distinct_odd().len();
        if signs.len() != d {
            return Err(Error::BadSigns(
                signs.iter().map(|s| s.char()).collect(),
                format!("expected {d} signs, one per distinct odd part"),
            ));
        }
        Ok(GSCDatum { lam, signs })
    }

    /// `eps` may list one sign per part, per odd part, or per distinct odd part.
    pub fn parse(lam: &str, eps: &str) -> Result<Self> {
        let lam: Partition = lam.parse()?;
        if let Some(e) = lam.first_bad_even_part() {
            return Err(Error::NotOrthogonal(lam.to_string(), e));
        }
        let chars: Vec<Sign> = eps
            .trim()
            .chars()
            .map(|c| Sign::parse(c).ok_or_else(|| Error::BadSigns(eps.into(), format!("unexpected character {c:?}"))))
            .collect::<Result<_>>()?;
        let parts = lam.parts();
        let odd_positions: Vec<usize> = (0..parts.len()).filter(|&i| parts[i] % 2 == 1).collect();
        let distinct = lam.distinct_odd();
        let per_part: Vec<(u32, Sign)> = if chars.len() == parts.len() {
            parts.iter().copied().zip(chars.iter().copied()).collect()
        } else if chars.len() == odd_positions.len() {
            odd_positions.iter().map(|&i| parts[i]).zip(chars.iter().copied()).collect()
        } else if chars.len() == distinct.len() {
            distinct.iter().copied().zip(chars.iter().copied()).collect()
        } else {
            return Err(Error::BadSigns(
                eps.into(),
                format!(
                    "length {} fits neither t(λ) = {}, the odd parts ({}), nor the distinct odd parts ({})",
                    chars.len(),
                    parts.len(),
                    odd_positions.len(),
                    distinct.len()
                ),
            ));
        };
        for w in per_part.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 != w[1].1 {
                return Err(Error::BadSigns(eps.into(), format!("equal parts {} carry different signs", w[0].0)));
            }
        }
        let signs = distinct.iter().map(|d| per_part.iter().find(|(p, _)| p == d).map(|&(_, s)| s).unwrap()).collect();
        GSCDatum::new(lam, signs)
    }

    /// From one sign per part (signs on even parts ignored); equal odd parts must agree.
    pub fn from_positional(lam: Partition, eps: &[Sign]) -> Result<Self> {
        let render = || eps.iter().map(|s| s.char()).collect::<String>();
        if eps.len() != lam.len() {
            return Err(Error::BadSigns(render(), format!("expected {} positional signs", lam.len())));
        }
        let mut signs: Vec<Sign> = Vec::new();
        for (i, &p) in lam.parts().iter().enumerate() {
            if p % 2 == 0 {
                continue;
            }
            if i > 0 && lam.parts()[i - 1] == p {
                if eps[i - 1] != eps[i] {
                    return Err(Error::BadSigns(render(), format!("equal parts {p} carry different signs")));
                }
            } else {
                signs.push(eps[i]);
            }
        }
        GSCDatum::new(lam, signs)
    }

    /// `ε(1), …, ε(t)`, with `+` on even parts.
    pub fn positional_signs(&self) -> Vec<Sign> {
        (1..=self.lam.len()).map(|i| self.positional(i).unwrap_or(Sign::Plus)).collect()
    }

    pub fn lam(&self) -> &Partition {
        &self.lam
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn n(&self) -> u32 {
        self.lam.size()
    }

    /// `ε_d` for a distinct odd part `d`.
    pub fn sign_of_part(&self, d: u32) -> Option<Sign> {
        self.lam.distinct_odd().iter().position(|&x| x == d).map(|i| self.signs[i])
    }

    /// `ε(i) = ε_{λ_i}` for 1-based `i`, `None` on even parts.
    pub fn positional(&self, i: usize) -> Option<Sign> {
        self.sign_of_part(self.lam.part(i))
    }

    pub fn negated(&self) -> Self {
        GSCDatum { lam: self.lam.clone(), signs: self.signs.iter().map(|s| s.flipped()).collect() }
    }

    /// Representative with first sign `+`.
    pub fn normalized(&self) -> Self {
        if self.signs.first() == Some(&Sign::Minus) {
            self.negated()
        } else {
            self.clone()
        }
    }

    pub fn same_class(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    pub fn is_degenerate(&self) -> bool {
        self.lam.distinct_odd().is_empty()
    }

    /// `M = Σ_i ε(i)(−1)^{i+1}` over odd-part positions.
    pub fn m_value(&self) -> i64 {
        (1..=self.lam.len())
            .filter_map(|i| self.positional(i).map(|s| if i % 2 == 1 { s.value() } else { -s.value() }))
            .sum()
    }

    pub fn defect(&self) -> i64 {
        self.m_value().abs()
    }

    /// One sign per distinct odd part.
    pub fn eps_string(&self) -> String {
        self.signs.iter().map(|s| s.char()).collect()
    }

    /// One sign per part; even parts get `+`.
    pub fn eps_positional(&self) -> String {
        (1..=self.lam.len()).map(|i| self.positional(i).unwrap_or(Sign::Plus).char()).collect()
    }
}

impl fmt::Display for GSCDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, [{}])", self.lam, self.eps_string())
    }
}

impl Serialize for GSCDatum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            lambda: String,
            eps: String,
        }
        let n = self.normalized();
        Repr { lambda: n.lam.to_string(), eps: n.eps_string() }.serialize(s)
    }
}

/// A strictly decreasing integer sequence ending in a step-2 ray.
///
/// Canonical: the ray is extended upward as far as it goes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymRow {
    pub head: Vec<i64>,
    pub tail: i64,
}

impl SymRow {
    fn canonical(mut head: Vec<i64>, mut tail: i64) -> Self {
        head.sort_unstable_by(|a, b| b.cmp(a));
        head.dedup();
        head.retain(|&v| !(v <= tail && (tail - v) % 2 == 0));
        while let Some(pos) = head.iter().position(|&v| v == tail + 2) {
            head.remove(pos);
            tail += 2;
        }
        SymRow { head, tail }
    }

    /// `μ + [c, −∞[_2`.
    fn from_partition(mu: &Partition, c: i64) -> Self {
        let head = (0..mu.len()).map(|i| mu.parts()[i] as i64 + c - 2 * i as i64).collect();
        SymRow::canonical(head, c - 2 * mu.len() as i64)
    }

    pub fn contains(&self, v: i64) -> bool {
        self.head.contains(&v) || (v <= self.tail && (self.tail - v) % 2 == 0)
    }

    /// Terms down to and including `lo`.
    fn values_down_to(&self, lo: i64) -> Vec<i64> {
        let mut v: Vec<i64> = self.head.iter().copied().filter(|&x| x >= lo).collect();
        let mut x = self.tail;
        while x >= lo {
            v.push(x);
            x -= 2;
        }
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    fn top(&self) -> i64 {
        self.head.first().copied().unwrap_or(self.tail).max(self.tail)
    }

    /// The i-th term, 1-based.
    pub fn term(&self, i: usize) -> i64 {
        let h = self.head.len();
        if i <= h {
            self.head[i - 1]
        } else {
            self.tail - 2 * (i - h - 1) as i64
        }
    }

    /// `self = μ + [c, −∞[_2` solved for the partition `μ`.
    fn minus_ray(&self, c: i64) -> Result<Partition> {
        let h = self.head.len();
        let parts: Vec<i64> = (1..=h + 1).map(|i| self.term(i) - (c - 2 * (i as i64 - 1))).collect();
        if parts[h] != 0 {
            return Err(Error::CrossCheck(format!("row {self:?} is not a partition plus [{c},−∞[_2")));
        }
        Partition::from_decreasing(&parts)
            .map_err(|_| Error::CrossCheck(format!("row {self:?} minus [{c},−∞[_2 is not a partition")))
    }

    pub fn to_seq(&self) -> EventualSeq {
        EventualSeq::from_parts(self.head.iter().map(|&v| q(v)).collect(), vec![q(self.tail)], q(2))
    }

    pub fn render(&self) -> String {
        let top: Vec<String> = self.head.iter().map(|v| v.to_string()).collect();
        format!("{} | {},{},…", top.join(","), self.tail, self.tail - 2)
    }
}

fn set_swap(a: &SymRow, b: &SymRow, region: &[i64]) -> (SymRow, SymRow) {
    let lo = a.tail.min(b.tail);
    let (va, vb) = (a.values_down_to(lo), b.values_down_to(lo));
    let pick = |mine: &[i64], theirs: &[i64]| -> Vec<i64> {
        mine.iter()
            .copied()
            .filter(|v| !region.contains(v))
            .chain(theirs.iter().copied().filter(|v| region.contains(v)))
            .collect()
    };
    (SymRow::canonical(pick(&va, &vb), lo), SymRow::canonical(pick(&vb, &va), lo))
}

/// Symbol of `(λ, ε)`; `a` carries the `+k` side when `ordered`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symbol {
    pub a: SymRow,
    pub b: SymRow,
    pub k: i64,
    pub ordered: bool,
}

impl Symbol {
    /// `p_{λ,ε} = A ⊔ B`.
    pub fn union_seq(&self) -> EventualSeq {
        self.a.to_seq().union(&self.b.to_seq())
    }
}

/// `A^#` and `B^#`, built from `λ′ = λ + [0, −∞[_1`.
pub fn hash_rows(lam: &Partition) -> (SymRow, SymRow) {
    let t = lam.len();
    let (mut zp, mut z) = (Vec::new(), Vec::new());
    // Positions t+1 and t+2 give one tail entry of each parity.
    for i in 1..=t + 2 {
        let v = lam.part(i) as i64 - (i as i64 - 1);
        if v.rem_euclid(2) == 0 {
            z.push(v / 2)
        } else {
            zp.push((v + 1).div_euclid(2))
        }
    }
    let row = |zs: &[i64]| {
        let vals: Vec<i64> = zs.iter().enumerate().map(|(j, &x)| x - j as i64).collect();
        let (tail, head) = vals.split_last().unwrap();
        SymRow::canonical(head.to_vec(), *tail)
    };
    (row(&zp), row(&z))
}

/// Maximal runs of `(A^# ∪ B^#) ∖ (A^# ∩ B^#)`, in increasing order.
pub fn intervals(a: &SymRow, b: &SymRow) -> Result<Vec<Vec<i64>>> {
    if (a.tail - b.tail).rem_euclid(2) != 0 {
        return Err(Error::CrossCheck("symbol rows have tails of different parity".into()));
    }
    let lo = a.tail.min(b.tail);
    let hi = a.top().max(b.top());
    let mut runs: Vec<Vec<i64>> = Vec::new();
    let mut last: Option<i64> = None;
    for v in lo..=hi {
        if a.contains(v) != b.contains(v) {
            if last == Some(v - 1) {
                runs.last_mut().unwrap().push(v);
            } else {
                runs.push(vec![v]);
            }
            last = Some(v);
        }
    }
    Ok(runs)
}

/// Swap regions: the intervals matched to parts `d` with `ε_d = −w`.
fn swap_region(d: &GSCDatum, runs: &[Vec<i64>]) -> Vec<i64> {
    let w = Sign::from_value(2 * d.m_value() + 1);
    let mut odd = d.lam.distinct_odd();
    odd.reverse();
    odd.iter()
        .zip(runs)
        .filter(|(&p, _)| d.sign_of_part(p) == Some(w.flipped()))
        .flat_map(|(_, r)| r.iter().copied())
        .collect()
}

pub fn symbol_of(d: &GSCDatum) -> Result<Symbol> {
    let (ha, hb) = hash_rows(&d.lam);
    let runs = intervals(&ha, &hb)?;
    if runs.len() != d.lam.distinct_odd().len() {
        return Err(Error::CrossCheck(format!("{} intervals for {} distinct odd parts", runs.len(), d.signs.len())));
    }
    let (a, b) = set_swap(&ha, &hb, &swap_region(d, &runs));
    let k = d.defect();
    Ok(Symbol { a, b, k, ordered: k > 0 })
}

/// `Φ_N(λ, ε) = ((α, β), k)` with `A = α + [k,−∞[_2`, `B = β + [−k,−∞[_2`.
pub fn phi(d: &GSCDatum) -> Result<(Bipartition, i64)> {
    let s = symbol_of(d)?;
    Ok((Bipartition::new(s.a.minus_ray(s.k)?, s.b.minus_ray(-s.k)?), s.k))
}

/// `Φ_N^{-1}`; at `k = 0` the returned sign follows the ordered input.
pub fn phi_inverse(ab: &Bipartition, k: i64, n: u32) -> Result<GSCDatum> {
    let nn = n as i64;
    if k < 0 || (nn - k).rem_euclid(2) != 0 || k * k > nn || 2 * ab.size() as i64 != nn - k * k {
        return Err(Error::Parity(format!("({ab}) with k={k} does not fit N={n}")));
    }
    let a = SymRow::from_partition(&ab.first, k);
    let b = SymRow::from_partition(&ab.second, -k);
    let lo = a.tail.min(b.tail) - 4;
    let mut merged = [a.values_down_to(lo), b.values_down_to(lo)].concat();
    merged.sort_unstable_by(|x, y| y.cmp(x));
    let odd: Vec<i64> = merged.iter().step_by(2).copied().collect();
    let even: Vec<i64> = merged.iter().skip(1).step_by(2).copied().collect();
    let ha = SymRow::canonical(odd[..odd.len() - 1].to_vec(), *odd.last().unwrap());
    let hb = SymRow::canonical(even[..even.len() - 1].to_vec(), *even.last().unwrap());
    let not_image = || Error::NotInImage(ab.to_string(), k);
    // λ′ from z′ = A^# + (0,1,2,…) and z = B^# + (0,1,2,…).
    let len = n as usize + 4;
    let mut lp: Vec<i64> =
        (1..=len).flat_map(|j| [2 * (ha.term(j) + j as i64 - 1) - 1, 2 * (hb.term(j) + j as i64 - 1)]).collect();
    lp.sort_unstable_by(|x, y| y.cmp(x));
    let parts: Vec<i64> = (0..=n as usize + 1).map(|i| lp[i] + i as i64).collect();
    let lam = Partition::from_decreasing(&parts).map_err(|_| not_image())?;
    if lam.size() != n || !lam.is_orthogonal() || hash_rows(&lam) != (ha.clone(), hb.clone()) {
        return Err(not_image());
    }
    let runs = intervals(&ha, &hb)?;
    let mut signs_inc = Vec::new();
    for r in &runs {
        let in_a: Vec<bool> = r.iter().map(|&v| a.contains(v)).collect();
        let as_hash: Vec<bool> = r.iter().map(|&v| ha.contains(v)).collect();
        let as_swap: Vec<bool> = r.iter().map(|&v| hb.contains(v)).collect();
        signs_inc.push(if in_a == as_hash {
            Sign::Plus
        } else if in_a == as_swap {
            Sign::Minus
        } else {
            return Err(not_image());
        });
    }
    signs_inc.reverse();
    let d = GSCDatum::new(lam, signs_inc)?;
    if d.m_value() < 0 || d.defect() != k {
        return Err(not_image());
    }
    let s = symbol_of(&d)?;
    if s.a != a || s.b != b {
        return Err(not_image());
    }
    Ok(d)
}

/// `m0`, `m1` of the `H(n,k)` test.
fn h_sizes(ab: &Bipartition, k: i64) -> (usize, usize) {
    let m0 = (ab.first.len() as i64).max(ab.second.len() as i64 + k).max(0);
    (m0 as usize, (m0 - k) as usize)
}

/// The top `m0 + m1` terms of `Λ_{k,−k;2}(α,β)`, tagged by side.
fn h_terms(ab: &Bipartition, k: i64) -> Vec<(i64, Tag)> {
    let (m0, m1) = h_sizes(ab, k);
    let mut v: Vec<(i64, Tag)> = (1..=m0)
        .map(|i| (ab.first.part(i) as i64 + k + 2 - 2 * i as i64, Tag::A))
        .chain((1..=m1).map(|j| (ab.second.part(j) as i64 - k + 2 - 2 * j as i64, Tag::B)))
        .collect();
    v.sort_by_key(|x| std::cmp::Reverse(x.0));
    v
}

/// Membership in `H(n,k)`: the top `m0 + m1` terms are distinct.
pub fn is_h(ab: &Bipartition, k: i64) -> bool {
    h_terms(ab, k).windows(2).all(|w| w[0].0 != w[1].0)
}

/// `<_{α,β,k}`: indices merged by their `Λ_{k,−k;2}` values.
pub fn order_from_h(ab: &Bipartition, k: i64) -> Result<IndexOrder> {
    if !is_h(ab, k) {
        return Err(Error::NotInH(ab.to_string(), k));
    }
    Ok(IndexOrder::new(h_terms(ab, k).into_iter().map(|(_, t)| t).collect()))
}

/// `a_k(α,β)` with `r = m0 + m1` from the `H(n,k)` sizes; any larger `r`
/// of the same parity gives the same value.
pub fn a_k(ab: &Bipartition, k: i64) -> i64 {
    let (m0, m1) = h_sizes(ab, k);
    a_k_at(ab, k, m0 + m1)
}

/// `a_k` evaluated with an explicit `r`.
pub fn a_k_at(ab: &Bipartition, k: i64, r: usize) -> i64 {
    let weighted =
        |s: &EventualSeq| -> i64 { s.terms(r).iter().enumerate().map(|(j, x)| (x * q(j as i64)).to_integer()).sum() };
    let lam = EventualSeq::lambda_abs(&ab.first, &ab.second, q(k), q(-k), q(2));
    let zero = EventualSeq::lambda_abs(&Partition::empty(), &Partition::empty(), q(k), q(-k), q(2));
    weighted(&lam) - weighted(&zero)
}

/// `P̃_ort(N)`: orthogonal partitions with one sign per class, first sign `+`.
pub fn enumerate_pport(n: u32) -> Vec<GSCDatum> {
    let mut out = Vec::new();
    for lam in orthogonal_partitions(n) {
        let d = lam.distinct_odd().len();
        if d == 0 {
            out.push(GSCDatum { lam, signs: Vec::new() });
            continue;
        }
        for mask in 0..(1u64 << (d - 1)) {
            let signs =
                (0..d).map(|i| if i > 0 && mask >> (d - 1 - i) & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect();
            out.push(GSCDatum { lam: lam.clone(), signs });
        }
    }
    out
}

/// Data whose partition has only odd parts.
pub fn enumerate_odd_parts(n: u32) -> Vec<GSCDatum> {
    enumerate_pport(n).into_iter().filter(|d| d.lam.all_odd()).collect()
}

/// The size of the codomain of `Φ_N`, counted on bipartitions.
pub fn codomain_count(n: u32) -> usize {
    let n = n as i64;
    (0..)
        .take_while(|k| k * k <= n)
        .filter(|k| (n - k) % 2 == 0)
        .map(|k| {
            let m = ((n - k * k) / 2) as u32;
            if k == 0 {
                bipartitions_mod_swap(m).len()
            } else {
                bipartitions(m).len()
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(l: &str, e: &str) -> GSCDatum {
        GSCDatum::parse(l, e).unwrap()
    }

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    #[test]
    fn sign_parsing_forms() {
        assert_eq!(d("3,3,1", "+++"), d("3,3,1", "++"));
        assert_eq!(d("4,4,1", "+"), d("4,4,1", "+++"));
        assert!(GSCDatum::parse("3,3,1", "+-+").is_err());
        assert!(GSCDatum::parse("3,2", "+").is_err());
        assert!(GSCDatum::parse("3,1", "+x").is_err());
    }

    #[test]
    fn symbol_examples() {
        let s = symbol_of(&d("3,3,1", "++")).unwrap();
        let first = |r: &SymRow| (1..=4).map(|i| r.term(i)).collect::<Vec<_>>();
        assert_eq!((first(&s.a), first(&s.b), s.k), (vec![2, -1, -3, -5], vec![1, -3, -5, -7], 1));
        let s = symbol_of(&d("3,3,1", "+-")).unwrap();
        assert_eq!((s.a.term(1), s.a.term(2), s.b.term(1), s.b.term(2), s.k), (1, -1, 2, -3, 1));
        let s = symbol_of(&d("5,3", "++")).unwrap();
        assert_eq!((s.a.term(1), s.b.term(1), s.a.term(2), s.b.term(2), s.k, s.ordered), (3, 1, -2, -2, 0, false));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&d("3,3,1", "++")).unwrap(), (bp("1;2"), 1));
        assert_eq!(phi(&d("3,3,1", "+-")).unwrap(), (bp(";3"), 1));
        assert_eq!(phi(&d("1", "+")).unwrap(), (bp(";"), 1));
        assert_eq!(phi(&d("5,3", "++")).unwrap(), (bp("3;1"), 0));
        assert_eq!(phi(&d("5,3", "--")).unwrap(), (bp("1;3"), 0));
        assert_eq!(phi(&d("5,3", "+-")).unwrap(), (bp("1,1;"), 2));
    }

    #[test]
    fn phi_inverse_examples() {
        assert_eq!(phi_inverse(&bp("1;2"), 1, 7).unwrap(), d("3,3,1", "++"));
        assert_eq!(phi_inverse(&bp("3;"), 1, 7).unwrap(), d("7", "+"));
        assert_eq!(phi_inverse(&bp(";"), 1, 1).unwrap(), d("1", "+"));
        assert!(phi_inverse(&bp("1;"), 0, 3).is_err());
        assert!(phi_inverse(&bp("1;"), 1, 4).is_err());
    }

    #[test]
    fn h_examples() {
        assert!(is_h(&bp("1;2"), 1));
        assert_eq!(order_from_h(&bp("1;2"), 1).unwrap().to_string(), "aba");
        assert_eq!(order_from_h(&bp(";3"), 1).unwrap().to_string(), "baa");
        let (ab, k) = phi(&d("4,4,1", "+")).unwrap();
        assert!(!is_h(&ab, k));
        assert!(order_from_h(&ab, k).is_err());
    }

    #[test]
    fn a_k_examples() {
        assert_eq!(a_k(&bp("1;2"), 1), 2);
        assert_eq!(a_k(&bp(";"), 3), 0);
        for ab in [bp("1;2"), bp("2,1;1"), bp(";1,1,1"), bp("3,1;2,2")] {
            for k in 0..3 {
                let (m0, m1) = h_sizes(&ab, k);
                assert_eq!(a_k(&ab, k), a_k_at(&ab, k, m0 + m1 + 2), "{ab} k={k}");
                assert_eq!(a_k(&ab, k), a_k_at(&ab, k, m0 + m1 + 6), "{ab} k={k}");
                assert!(a_k(&ab, k) >= 0);
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let e3: Vec<String> = enumerate_pport(3).iter().map(|x| x.to_string()).collect();
        assert_eq!(e3, vec!["(3, [+])", "(1,1,1, [+])"]);
        let e4: Vec<String> = enumerate_pport(4).iter().map(|x| x.to_string()).collect();
        assert_eq!(e4, vec!["(3,1, [++])", "(3,1, [+-])", "(2,2, [])", "(1,1,1,1, [+])"]);
        assert_eq!(enumerate_pport(1).len(), 1);
        assert_eq!(codomain_count(4), 4);
    }

    #[test]
    fn bijection_small() {
        for n in 1..=12 {
            let all = enumerate_pport(n);
            assert_eq!(all.len(), codomain_count(n), "N={n}");
            for x in &all {
                let (ab, k) = phi(x).unwrap();
                assert!(phi_inverse(&ab, k, n).unwrap().same_class(x), "{x}");
            }
        }
    }

    #[test]
    fn closed_form_for_odd_parts() {
        for n in 1..=15 {
            for x in enumerate_odd_parts(n) {
                let (ha, hb) = hash_rows(x.lam());
                let l = |i: usize| x.lam().part(i) as i64;
                let t = x.lam().len();
                for i in 1..=t.div_ceil(2) {
                    assert_eq!(ha.term(i), (l(2 * i - 1) + 1) / 2 + 2 - 2 * i as i64, "{x}");
                }
                for i in 1..=t / 2 {
                    assert_eq!(hb.term(i), (l(2 * i) + 1) / 2 + 1 - 2 * i as i64, "{x}");
                }
            }
        }
    }
}
