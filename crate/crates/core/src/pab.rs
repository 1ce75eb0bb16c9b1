//! The peeling sets `P(α,β,<)` and `P_{A,B;s}(α,β,<)`.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::order::{peel, IndexOrder, Tag};
use crate::partition::{Bipartition, Partition};
use crate::seq::{EventualSeq, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PabParams {
    pub a: Q,
    pub b: Q,
    pub s: Q,
}

impl PabParams {
    pub fn new(a: Q, b: Q, s: Q) -> Result<Self> {
        if s <= Q::zero() {
            return Err(Error::Size("step s must be positive".into()));
        }
        Ok(PabParams { a, b, s })
    }

    pub fn shifted(&self, c: Q) -> Self {
        PabParams { a: self.a + c, b: self.b + c, s: self.s }
    }
}

pub type BipSet = BTreeSet<Bipartition>;

fn prepend_first(x: u32, set: BipSet) -> BipSet {
    set.into_iter()
        .map(|mut m| {
            m.first = Partition::new([vec![x], m.first.parts().to_vec()].concat());
            m
        })
        .collect()
}

fn prepend_second(x: u32, set: BipSet) -> BipSet {
    set.into_iter()
        .map(|mut m| {
            m.second = Partition::new([vec![x], m.second.parts().to_vec()].concat());
            m
        })
        .collect()
}

/// `P(α,β,<)`: every way of peeling with procedures (a) and (b).
pub fn p_set(ab: &Bipartition, o: &IndexOrder) -> Result<BipSet> {
    let mut memo = HashMap::new();
    p_set_rec(ab, &o.minimal(ab)?, &mut memo)
}

fn p_set_rec(
    ab: &Bipartition,
    o: &IndexOrder,
    memo: &mut HashMap<(Bipartition, IndexOrder), BipSet>,
) -> Result<BipSet> {
    if o.word().is_empty() {
        return Ok(BipSet::from([Bipartition::empty()]));
    }
    let key = (ab.clone(), o.clone());
    if let Some(s) = memo.get(&key) {
        return Ok(s.clone());
    }
    let mut out = BipSet::new();
    for tag in [Tag::A, Tag::B] {
        if o.count(tag) > 0 {
            let r = peel(ab, o, tag)?;
            let sub = p_set_rec(&r.residual, &r.residual_order.minimal(&r.residual)?, memo)?;
            out.extend(if tag == Tag::A { prepend_first(r.extracted, sub) } else { prepend_second(r.extracted, sub) });
        }
    }
    memo.insert(key, out.clone());
    Ok(out)
}

/// Which branches of `P_{A,B;s}` are open at the top level of a minimal order.
pub fn gates(ab: &Bipartition, o: &IndexOrder, a: Q, b: Q) -> (bool, bool) {
    let (m0, m1) = (o.m0(), o.m1());
    if m0 == 0 || m1 == 0 {
        return (m0 > 0, m1 > 0);
    }
    let a_first = o.word()[0] == Tag::A;
    let alpha1 = Q::from_integer(ab.first.part(1) as i64) + a;
    let beta1 = Q::from_integer(ab.second.part(1) as i64) + b;
    if a_first {
        (alpha1 >= b, alpha1 <= b)
    } else {
        (beta1 <= a, beta1 >= a)
    }
}

type PabKey = (Bipartition, IndexOrder, Q, Q);

/// `P_{A,B;s}(α,β,<)`, the gated subset of `P(α,β,<)`.
pub fn p_abs_set(ab: &Bipartition, o: &IndexOrder, params: PabParams) -> Result<BipSet> {
    let mut memo = HashMap::new();
    p_abs_rec(ab, &o.minimal(ab)?, params.a, params.b, params.s, &mut memo)
}

fn p_abs_rec(ab: &Bipartition, o: &IndexOrder, a: Q, b: Q, s: Q, memo: &mut HashMap<PabKey, BipSet>) -> Result<BipSet> {
    if o.word().is_empty() {
        return Ok(BipSet::from([Bipartition::empty()]));
    }
    // Translation invariance: only A − B matters.
    let key = (ab.clone(), o.clone(), a - b, s);
    if let Some(r) = memo.get(&key) {
        return Ok(r.clone());
    }
    let (open_a, open_b) = gates(ab, o, a, b);
    let mut out = BipSet::new();
    if open_a {
        let r = peel(ab, o, Tag::A)?;
        let sub = p_abs_rec(&r.residual, &r.residual_order.minimal(&r.residual)?, a - s, b, s, memo)?;
        out.extend(prepend_first(r.extracted, sub));
    }
    if open_b {
        let r = peel(ab, o, Tag::B)?;
        let sub = p_abs_rec(&r.residual, &r.residual_order.minimal(&r.residual)?, a, b - s, s, memo)?;
        out.extend(prepend_second(r.extracted, sub));
    }
    memo.insert(key, out.clone());
    Ok(out)
}

/// `p_{A,B;s}(α,β,<)`, the common `Λ_{A,B;s}` of every member.
pub fn p_abs_extremal(ab: &Bipartition, o: &IndexOrder, params: PabParams) -> Result<EventualSeq> {
    let set = p_abs_set(ab, o, params)?;
    let m = set.iter().next().ok_or_else(|| Error::Size("P_{A,B;s} is empty".into()))?;
    Ok(lambda_of(m, params))
}

pub fn lambda_of(m: &Bipartition, params: PabParams) -> EventualSeq {
    EventualSeq::lambda_abs(&m.first, &m.second, params.a, params.b, params.s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::q;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    fn w(s: &str) -> IndexOrder {
        s.parse().unwrap()
    }

    fn set(v: &[&str]) -> BipSet {
        v.iter().map(|s| bp(s)).collect()
    }

    #[test]
    fn p_set_examples() {
        assert_eq!(p_set(&bp(";"), &w("")).unwrap(), set(&[";"]));
        assert_eq!(p_set(&bp("1;2"), &w("aba")).unwrap(), set(&["3;", "1;2"]));
        assert_eq!(p_set(&bp("4;"), &w("a")).unwrap(), set(&["4;"]));
    }

    #[test]
    fn p_abs_examples() {
        let prm = PabParams::new(q(1), q(-1), q(2)).unwrap();
        assert_eq!(p_abs_set(&bp("1;2"), &w("aba"), prm).unwrap(), set(&["3;"]));
        let ext = p_abs_extremal(&bp("1;2"), &w("aba"), prm).unwrap();
        assert_eq!(ext.terms(5), vec![q(4), q(-1), q(-1), q(-3), q(-3)]);
        // Branch (b) opens because β₁ + B = 1 ≥ A = 0; the result sits in the second slot.
        let prm0 = PabParams::new(q(0), q(0), q(2)).unwrap();
        assert_eq!(p_abs_set(&bp("3;1"), &w("ba"), prm0).unwrap(), set(&[";4"]));
        assert_eq!(p_abs_set(&bp(";"), &w(""), prm0).unwrap(), set(&[";"]));
    }

    #[test]
    fn ties_open_both_branches() {
        let prm = PabParams::new(q(0), q(1), q(2)).unwrap();
        assert_eq!(gates(&bp("1;1"), &w("ab"), prm.a, prm.b), (true, true));
    }

    #[test]
    fn shift_invariance() {
        let prm = PabParams::new(q(1), q(-1), q(2)).unwrap();
        for o in IndexOrder::all_words(2, 2) {
            let ab = bp("2,1;3,1");
            let c = crate::seq::qr(7, 3);
            assert_eq!(p_abs_set(&ab, &o, prm).unwrap(), p_abs_set(&ab, &o, prm.shifted(c)).unwrap());
        }
    }
}
