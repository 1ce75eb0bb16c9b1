//! Decreasing sequences that are eventually a merge of arithmetic rays.
//!
//! A sequence is stored as a multiset: finitely many loose values plus rays
//! `[c, −∞[_s` sharing one step `s`. Every `Λ_{A,B;s}(μ,ν)` and every symbol
//! row has this shape, and two such sequences with the same step and ray
//! count agree term by term past a horizon computed from their data.

use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Exact rational scalar.
pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[derive(Clone, Debug)]
pub struct EventualSeq {
    /// Loose values, decreasing.
    finite: Vec<Q>,
    /// Ray starts, decreasing; never empty.
    rays: Vec<Q>,
    step: Q,
}

impl EventualSeq {
    /// `[c, −∞[_s`.
    pub fn ray(c: Q, s: Q) -> Self {
        assert!(s > Q::zero(), "step must be positive");
        EventualSeq { finite: Vec::new(), rays: vec![c], step: s }
    }

    /// Loose values together with rays of a common step.
    pub fn from_parts(mut finite: Vec<Q>, mut rays: Vec<Q>, s: Q) -> Self {
        assert!(s > Q::zero() && !rays.is_empty());
        finite.sort_by(|a, b| b.cmp(a));
        rays.sort_by(|a, b| b.cmp(a));
        EventualSeq { finite, rays, step: s }
    }

    /// `μ + [a, −∞[_s`.
    pub fn partition_plus_ray(mu: &Partition, a: Q, s: Q) -> Self {
        let finite = (0..mu.len()).map(|i| q(mu.parts()[i] as i64) + a - s * q(i as i64)).collect();
        EventualSeq { finite, rays: vec![a - s * q(mu.len() as i64)], step: s }
    }

    /// `Λ_{A,B;s}(μ,ν) = (μ + [A,−∞[_s) ⊔ (ν + [B,−∞[_s)`.
    pub fn lambda_abs(mu: &Partition, nu: &Partition, a: Q, b: Q, s: Q) -> Self {
        Self::partition_plus_ray(mu, a, s).union(&Self::partition_plus_ray(nu, b, s))
    }

    pub fn step(&self) -> Q {
        self.step
    }

    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    /// Multiset merge; both sides must share the step.
    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.step, other.step, "union needs a common step");
        let mut finite = [self.finite.clone(), other.finite.clone()].concat();
        finite.sort_by(|a, b| b.cmp(a));
        let mut rays = [self.rays.clone(), other.rays.clone()].concat();
        rays.sort_by(|a, b| b.cmp(a));
        EventualSeq { finite, rays, step: self.step }
    }

    /// Termwise `+ c`.
    pub fn shifted(&self, c: Q) -> Self {
        EventualSeq {
            finite: self.finite.iter().map(|x| x + c).collect(),
            rays: self.rays.iter().map(|x| x + c).collect(),
            step: self.step,
        }
    }

    /// Termwise `· c` for `c > 0`.
    pub fn scaled(&self, c: Q) -> Self {
        assert!(c > Q::zero());
        EventualSeq {
            finite: self.finite.iter().map(|x| x * c).collect(),
            rays: self.rays.iter().map(|x| x * c).collect(),
            step: self.step * c,
        }
    }

    /// Removes and returns the largest term.
    fn pop_front(&mut self) -> Q {
        let (ri, &rmax) = self.rays.iter().enumerate().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0))).unwrap();
        match self.finite.first() {
            Some(&f) if f >= rmax => {
                self.finite.remove(0);
                f
            }
            _ => {
                self.rays[ri] -= self.step;
                rmax
            }
        }
    }

    /// The first `n` terms.
    pub fn terms(&self, n: usize) -> Vec<Q> {
        let mut s = self.clone();
        (0..n).map(|_| s.pop_front()).collect()
    }

    /// Termwise `+ λ` for a partition `λ`.
    pub fn add_partition(&self, lam: &Partition) -> Self {
        let mut rest = self.clone();
        let mut head: Vec<Q> = lam.parts().iter().map(|&p| rest.pop_front() + q(p as i64)).collect();
        head.extend(rest.finite);
        EventualSeq { finite: head, rays: rest.rays, step: self.step }
    }

    /// Smallest loose value or ray start.
    fn floor(&self) -> Q {
        self.finite.iter().chain(self.rays.iter()).copied().min().unwrap()
    }

    fn count_at_least(&self, v: Q) -> usize {
        let loose = self.finite.iter().filter(|&&x| x >= v).count();
        let on_rays: i64 =
            self.rays.iter().filter(|&&c| c >= v).map(|&c| ((c - v) / self.step).floor().to_integer() + 1).sum();
        loose + on_rays as usize
    }

    /// Terms strictly above every loose value and ray start.
    pub fn prefix(&self) -> Vec<Q> {
        let l = self.floor();
        self.terms(self.count_at_least(l)).into_iter().take_while(|&x| x > l).collect()
    }

    /// Length `h` such that both sequences agree from position `h+1` on;
    /// errors when they never do.
    pub fn common_horizon(&self, other: &Self) -> Result<usize> {
        if self.step != other.step || self.rays.len() != other.rays.len() {
            return Err(Error::IncomparableTails);
        }
        let l = self.floor().min(other.floor());
        let h = self.count_at_least(l).max(other.count_at_least(l));
        let m = self.rays.len();
        if self.terms(h + m)[h..] != other.terms(h + m)[h..] {
            return Err(Error::IncomparableTails);
        }
        Ok(h)
    }

    /// `S_c(self) ≤ S_c(other)` for every `c`.
    pub fn dominated_by(&self, other: &Self) -> Result<bool> {
        let h = self.common_horizon(other)?;
        let (x, y) = (self.terms(h), other.terms(h));
        let (mut sx, mut sy) = (Q::zero(), Q::zero());
        for i in 0..h {
            sx += x[i];
            sy += y[i];
            if sx > sy {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_as(&self, other: &Self) -> Result<bool> {
        let h = self.common_horizon(other)?;
        Ok(self.terms(h) == other.terms(h))
    }

    /// Is there a repeated value among the first `r` terms.
    pub fn first_terms_distinct(&self, r: usize) -> bool {
        let t = self.terms(r);
        t.windows(2).all(|w| w[0] != w[1])
    }

    /// Rendering like "2,1,-1 | -3,-3,-5,-5,…".
    pub fn render(&self) -> String {
        let p = self.prefix();
        let tail = self.terms(p.len() + 2 * self.rays.len())[p.len()..].to_vec();
        let join = |v: &[Q]| v.iter().map(fmt_q).collect::<Vec<_>>().join(",");
        format!("{} | {},…", join(&p), join(&tail))
    }
}

impl PartialEq for EventualSeq {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other).unwrap_or(false)
    }
}

impl fmt::Display for EventualSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn merged_rays() {
        let s = EventualSeq::ray(q(1), q(2)).union(&EventualSeq::ray(q(-1), q(2)));
        assert_eq!(s.terms(5), ints(&[1, -1, -1, -3, -3]));
    }

    #[test]
    fn lambda_examples() {
        let l = EventualSeq::lambda_abs(&p("1"), &p("2"), q(1), q(-1), q(2));
        assert_eq!(l.prefix(), ints(&[2, 1, -1]));
        assert_eq!(l.terms(7), ints(&[2, 1, -1, -3, -3, -5, -5]));
        let l = EventualSeq::lambda_abs(&p("3"), &p("1"), q(0), q(0), q(2));
        assert_eq!(l.prefix(), ints(&[3, 1]));
        assert_eq!(l.terms(6), ints(&[3, 1, -2, -2, -4, -4]));
    }

    #[test]
    fn shift_commutes_with_lambda() {
        let c = qr(5, 3);
        let a = EventualSeq::lambda_abs(&p("2,1"), &p("3"), q(1) + c, q(-1) + c, qr(1, 2));
        let b = EventualSeq::lambda_abs(&p("2,1"), &p("3"), q(1), q(-1), qr(1, 2)).shifted(c);
        assert_eq!(a, b);
    }

    #[test]
    fn dominance_of_lambdas() {
        let big = EventualSeq::lambda_abs(&p("3"), &p(""), q(1), q(-1), q(2));
        let small = EventualSeq::lambda_abs(&p("1"), &p("2"), q(1), q(-1), q(2));
        assert!(small.dominated_by(&big).unwrap());
        assert!(!big.dominated_by(&small).unwrap());
        assert!(big.dominated_by(&big).unwrap());
    }

    #[test]
    fn incomparable_tails_are_reported() {
        let a = EventualSeq::ray(q(0), q(2));
        let b = EventualSeq::ray(q(0), q(1));
        assert_eq!(a.dominated_by(&b), Err(Error::IncomparableTails));
        let c = EventualSeq::ray(q(1), q(2));
        assert_eq!(a.dominated_by(&c), Err(Error::IncomparableTails));
    }

    #[test]
    fn add_partition_termwise() {
        let sq = EventualSeq::ray(q(0), q(1)).union(&EventualSeq::ray(q(0), q(1)));
        let r = sq.add_partition(&p("7"));
        assert_eq!(r.terms(5), ints(&[7, 0, -1, -1, -2]));
    }
}
