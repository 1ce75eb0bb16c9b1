//! Partitions and bipartitions with dominance, transpose and merge.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Weakly decreasing positive parts; trailing zeros never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts and drops zeros, so any multiset of parts is accepted.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Accepts only an already weakly decreasing list; zeros are trimmed.
    pub fn from_decreasing(parts: &[i64]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.iter().any(|&p| p < 0) {
            return Err(Error::BadPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts.iter().filter(|&&p| p > 0).map(|&p| p as u32).collect()))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// t(λ).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based part access, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            0
        } else {
            self.0.get(i - 1).copied().unwrap_or(0)
        }
    }

    /// S(λ).
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// S_c(λ), the sum of the first c parts.
    pub fn partial_sum(&self, c: usize) -> u32 {
        self.0.iter().take(c).sum()
    }

    pub fn multiplicity(&self, r: u32) -> usize {
        self.0.iter().filter(|&&p| p == r).count()
    }

    pub fn transpose(&self) -> Self {
        let first = self.part(1) as usize;
        Partition((1..=first).map(|c| self.0.iter().filter(|&&p| p as usize >= c).count() as u32).collect())
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    pub fn dominated_by(&self, other: &Self) -> bool {
        let n = self.len().max(other.len());
        (1..=n).all(|c| self.partial_sum(c) <= other.partial_sum(c))
    }

    /// Every even part occurs an even number of times.
    pub fn is_orthogonal(&self) -> bool {
        self.first_bad_even_part().is_none()
    }

    pub fn first_bad_even_part(&self) -> Option<u32> {
        self.distinct().into_iter().find(|&p| p % 2 == 0 && self.multiplicity(p) % 2 == 1)
    }

    pub fn all_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }

    /// Distinct parts, decreasing.
    pub fn distinct(&self) -> Vec<u32> {
        let mut d = self.0.clone();
        d.dedup();
        d
    }

    /// Δ(λ): distinct odd parts, decreasing.
    pub fn distinct_odd(&self) -> Vec<u32> {
        self.distinct().into_iter().filter(|p| p % 2 == 1).collect()
    }

    pub fn odd_part(&self) -> Self {
        Partition(self.0.iter().copied().filter(|p| p % 2 == 1).collect())
    }

    pub fn even_part(&self) -> Self {
        Partition(self.0.iter().copied().filter(|p| p % 2 == 0).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// "3,3,1"; the empty string (or "∅") is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<i64>().map_err(|_| Error::BadPartition(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Partition::from_decreasing(&parts).map_err(|_| Error::BadPartition(s.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl From<Vec<u32>> for Partition {
    fn from(v: Vec<u32>) -> Self {
        Partition::new(v)
    }
}

/// Ordered pair (first, second).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn size(&self) -> u32 {
        self.first.size() + self.second.size()
    }

    /// θ(α,β) = (β,α).
    pub fn swapped(&self) -> Self {
        Bipartition::new(self.second.clone(), self.first.clone())
    }

    /// (ᵗβ, ᵗα), the sign-character twist.
    pub fn twisted(&self) -> Self {
        Bipartition::new(self.second.transpose(), self.first.transpose())
    }

    /// The orbit representative under θ, the larger of the two orders.
    pub fn unordered_key(&self) -> Self {
        let s = self.swapped();
        if s > *self {
            s
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.first, self.second)
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    /// "3,1;2" with either side possibly empty.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s.split_once(';').ok_or_else(|| Error::BadPartition(s.to_string()))?;
        Ok(Bipartition::new(a.parse()?, b.parse()?))
    }
}

/// All partitions of n, reverse lexicographic (largest first part first).
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// 𝒫₂(n), ordered by |first| decreasing then by the partition order.
pub fn bipartitions(n: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for p in partitions(a) {
            for q in partitions(n - a) {
                out.push(Bipartition::new(p.clone(), q));
            }
        }
    }
    out
}

/// 𝒫₂(n)/θ, one representative per orbit.
pub fn bipartitions_mod_swap(n: u32) -> Vec<Bipartition> {
    let mut out: Vec<Bipartition> = bipartitions(n).into_iter().filter(|b| b.unordered_key() == *b).collect();
    out.dedup();
    out
}

/// Orthogonal partitions of n.
pub fn orthogonal_partitions(n: u32) -> Vec<Partition> {
    partitions(n).into_iter().filter(Partition::is_orthogonal).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn literals_roundtrip() {
        assert_eq!(p("3,3,1").parts(), &[3, 3, 1]);
        assert_eq!(p("").to_string(), "");
        assert_eq!(p("2,0,0"), p("2"));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!("3,1;".parse::<Bipartition>().unwrap().second, Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert!(p("3,3,1").dominated_by(&p("7")));
        assert!(!p("3,1").dominated_by(&p("2,2")));
        assert!(p("2,2").dominated_by(&p("3,1")));
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("3,3,1").transpose(), p("3,2,2"));
        assert_eq!(p("").transpose(), p(""));
        assert_eq!(p("4").transpose(), p("1,1,1,1"));
    }

    #[test]
    fn union_examples() {
        assert_eq!(p("3,1").union(&p("2")), p("3,2,1"));
        assert_eq!(p("3,1").union(&p("")), p("3,1"));
    }

    fn count_partitions(n: u32) -> usize {
        // Euler recurrence with pentagonal numbers; independent of the generator.
        let n = n as i64;
        let mut pn = vec![0i64; (n + 1) as usize];
        pn[0] = 1;
        for m in 1..=n {
            let mut k = 1i64;
            let mut acc = 0i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * pn[(m - g1) as usize];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= m {
                    acc += sign * pn[(m - g2) as usize];
                }
                k += 1;
            }
            pn[m as usize] = acc;
        }
        pn[n as usize] as usize
    }

    #[test]
    fn partition_counts_match_euler() {
        for n in 0..=15 {
            assert_eq!(partitions(n).len(), count_partitions(n), "n={n}");
        }
        let b: usize = (0..=4).map(|a| count_partitions(a) * count_partitions(4 - a)).sum();
        assert_eq!(bipartitions(4).len(), b);
    }

    #[test]
    fn dominance_is_partial_order() {
        for n in 0..=12 {
            let ps = partitions(n);
            for x in &ps {
                assert!(x.dominated_by(x));
                for y in &ps {
                    if x.dominated_by(y) && y.dominated_by(x) {
                        assert_eq!(x, y);
                    }
                    assert_eq!(x.dominated_by(y), y.transpose().dominated_by(&x.transpose()));
                    for z in &ps {
                        if x.dominated_by(y) && y.dominated_by(z) {
                            assert!(x.dominated_by(z));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn union_size_is_partial_sum() {
        for (x, y) in [(p("4,2"), p("3")), (p(""), p("1,1")), (p("5,5,1"), p("2,2"))] {
            let u = x.union(&y);
            assert_eq!(u.partial_sum(x.len() + y.len()), x.size() + y.size());
        }
    }

    #[test]
    fn orbit_count_small() {
        assert_eq!(bipartitions_mod_swap(2).len(), 3);
        assert_eq!(orthogonal_partitions(4), vec![p("3,1"), p("2,2"), p("1,1,1,1")]);
    }
}
