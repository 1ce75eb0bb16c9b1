//! Total orders on the indices of a bipartition and the two peeling procedures.
//!
//! An order `(m0, m1, <)` is a word over `{a, b}`: the i-th `a` is the index
//! `(i,0)` and the j-th `b` is `(j,1)`. Only positions relative to indices of
//! nonzero parts matter, so every order has a minimal equivalent word.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{Bipartition, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    A,
    B,
}

impl Tag {
    pub fn other(self) -> Tag {
        match self {
            Tag::A => Tag::B,
            Tag::B => Tag::A,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexOrder {
    word: Vec<Tag>,
}

impl IndexOrder {
    pub fn new(word: Vec<Tag>) -> Self {
        IndexOrder { word }
    }

    pub fn word(&self) -> &[Tag] {
        &self.word
    }

    pub fn m0(&self) -> usize {
        self.count(Tag::A)
    }

    pub fn m1(&self) -> usize {
        self.count(Tag::B)
    }

    pub fn count(&self, tag: Tag) -> usize {
        self.word.iter().filter(|&&t| t == tag).count()
    }

    /// Word positions of the tagged indices, in index order.
    pub fn positions(&self, tag: Tag) -> Vec<usize> {
        self.word.iter().enumerate().filter(|(_, &t)| t == tag).map(|(p, _)| p).collect()
    }

    /// For each index `(i, tag)`, the 1-based within-tag index of the word slot.
    pub fn slot_labels(&self) -> Vec<(Tag, usize)> {
        let (mut a, mut b) = (0, 0);
        self.word
            .iter()
            .map(|&t| match t {
                Tag::A => {
                    a += 1;
                    (t, a)
                }
                Tag::B => {
                    b += 1;
                    (t, b)
                }
            })
            .collect()
    }

    pub fn check_indexes(&self, ab: &Bipartition) -> Result<()> {
        if self.m0() < ab.first.len() || self.m1() < ab.second.len() {
            return Err(Error::OrderTooShort(self.to_string(), ab.to_string()));
        }
        Ok(())
    }

    /// Number of opposite-tag indices preceding each index of `tag`.
    fn preceding_counts(&self, tag: Tag) -> Vec<usize> {
        let mut seen = 0;
        let mut out = Vec::new();
        for &t in &self.word {
            if t == tag {
                out.push(seen);
            } else {
                seen += 1;
            }
        }
        out
    }

    /// Same relative placement against every index of a nonzero part.
    pub fn equivalent(&self, other: &Self, ab: &Bipartition) -> Result<bool> {
        self.check_indexes(ab)?;
        other.check_indexes(ab)?;
        let (ta, tb) = (ab.first.len(), ab.second.len());
        Ok(self.preceding_counts(Tag::A)[..ta] == other.preceding_counts(Tag::A)[..ta]
            && self.preceding_counts(Tag::B)[..tb] == other.preceding_counts(Tag::B)[..tb])
    }

    /// The equivalent order with the least `m0` and `m1`.
    pub fn minimal(&self, ab: &Bipartition) -> Result<Self> {
        self.check_indexes(ab)?;
        let (ta, tb) = (ab.first.len(), ab.second.len());
        let ca = self.preceding_counts(Tag::A);
        let cb = self.preceding_counts(Tag::B);
        let m0 = cb[..tb].iter().copied().chain([ta]).max().unwrap();
        let m1 = ca[..ta].iter().copied().chain([tb]).max().unwrap();
        let (mut a, mut b) = (0, 0);
        let mut word = Vec::with_capacity(m0 + m1);
        for &t in &self.word {
            match t {
                Tag::A if a < m0 => {
                    a += 1;
                    word.push(t)
                }
                Tag::B if b < m1 => {
                    b += 1;
                    word.push(t)
                }
                _ => {}
            }
        }
        Ok(IndexOrder { word })
    }

    /// Does `(i, x)` precede `(j, y)`; indices are 1-based.
    pub fn precedes(&self, x: (Tag, usize), y: (Tag, usize)) -> bool {
        let pos = |(t, i): (Tag, usize)| self.positions(t)[i - 1];
        pos(x) < pos(y)
    }

    /// All words with `m0` a-tags and `m1` b-tags, lexicographic with `a < b`.
    pub fn all_words(m0: usize, m1: usize) -> Vec<IndexOrder> {
        fn rec(m0: usize, m1: usize, cur: &mut Vec<Tag>, out: &mut Vec<IndexOrder>) {
            if m0 == 0 && m1 == 0 {
                out.push(IndexOrder { word: cur.clone() });
                return;
            }
            for (t, ok) in [(Tag::A, m0 > 0), (Tag::B, m1 > 0)] {
                if ok {
                    cur.push(t);
                    if t == Tag::A {
                        rec(m0 - 1, m1, cur, out)
                    } else {
                        rec(m0, m1 - 1, cur, out)
                    }
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(m0, m1, &mut Vec::new(), &mut out);
        out
    }

    /// Minimal orders on `ab` reachable from words with at most `pad` extra
    /// zero indices on each side, deduplicated, in a fixed order.
    pub fn inequivalent_orders(ab: &Bipartition, pad: usize) -> Vec<IndexOrder> {
        let (ta, tb) = (ab.first.len(), ab.second.len());
        let mut out: Vec<IndexOrder> = Vec::new();
        for p in 0..=pad {
            for q in 0..=pad {
                for w in Self::all_words(ta + p, tb + q) {
                    let m = w.minimal(ab).expect("word indexes ab");
                    if !out.contains(&m) {
                        out.push(m);
                    }
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for IndexOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.word {
            f.write_str(if *t == Tag::A { "a" } else { "b" })?;
        }
        Ok(())
    }
}

impl FromStr for IndexOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c.to_ascii_lowercase() {
                'a' => Ok(Tag::A),
                'b' => Ok(Tag::B),
                _ => Err(Error::OrderTooShort(s.to_string(), "letters must be a or b".into())),
            })
            .collect::<Result<Vec<_>>>()
            .map(IndexOrder::new)
    }
}

impl Serialize for IndexOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Outcome of procedure (a) or (b), computed on the minimal representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelResult {
    pub extracted: u32,
    /// 1-based chain indices a₁ < a₂ < … and b₁ < b₂ < ….
    pub chain_a: Vec<usize>,
    pub chain_b: Vec<usize>,
    pub residual: Bipartition,
    pub residual_order: IndexOrder,
}

fn drop_indices(p: &Partition, chain: &[usize]) -> Partition {
    Partition::new(p.parts().iter().enumerate().filter(|(i, _)| !chain.contains(&(i + 1))).map(|(_, &x)| x).collect())
}

/// Procedure (a) when `start = Tag::A`, procedure (b) when `start = Tag::B`.
pub fn peel(ab: &Bipartition, o: &IndexOrder, start: Tag) -> Result<PeelResult> {
    let m = o.minimal(ab)?;
    if m.count(start) == 0 {
        let (c, what) = if start == Tag::A { ('a', "m0") } else { ('b', "m1") };
        return Err(Error::EmptyProcedure(c, what));
    }
    peel_on(ab, &m, start)
}

/// The chain rule run on the given representative as is.
fn peel_on(ab: &Bipartition, m: &IndexOrder, start: Tag) -> Result<PeelResult> {
    m.check_indexes(ab)?;
    let labels = m.slot_labels();
    let mut chain_pos = Vec::new();
    let mut want = start;
    for (p, &(t, _)) in labels.iter().enumerate() {
        if t == want {
            chain_pos.push(p);
            want = want.other();
        }
    }
    let (mut chain_a, mut chain_b, mut extracted) = (Vec::new(), Vec::new(), 0);
    for &p in &chain_pos {
        let (t, i) = labels[p];
        match t {
            Tag::A => {
                chain_a.push(i);
                extracted += ab.first.part(i);
            }
            Tag::B => {
                chain_b.push(i);
                extracted += ab.second.part(i);
            }
        }
    }
    let residual = Bipartition::new(drop_indices(&ab.first, &chain_a), drop_indices(&ab.second, &chain_b));
    let residual_order = IndexOrder {
        word: m.word.iter().enumerate().filter(|(p, _)| !chain_pos.contains(p)).map(|(_, &t)| t).collect(),
    };
    Ok(PeelResult { extracted, chain_a, chain_b, residual, residual_order })
}

pub fn procedure_a(ab: &Bipartition, o: &IndexOrder) -> Result<PeelResult> {
    peel(ab, o, Tag::A)
}

pub fn procedure_b(ab: &Bipartition, o: &IndexOrder) -> Result<PeelResult> {
    peel(ab, o, Tag::B)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    fn w(s: &str) -> IndexOrder {
        s.parse().unwrap()
    }

    #[test]
    fn minimal_examples() {
        assert_eq!(w("").minimal(&bp(";")).unwrap(), w(""));
        assert_eq!(w("aba").minimal(&bp("1;")).unwrap(), w("a"));
        assert_eq!(w("ab").minimal(&bp("1;2")).unwrap(), w("ab"));
        assert_eq!(w("aaab").minimal(&bp(";1")).unwrap(), w("aaab"));
        assert!(w("a").minimal(&bp("1,1;")).is_err());
    }

    #[test]
    fn equivalence_examples() {
        let ab = bp("1;1");
        assert!(w("ab").equivalent(&w("ab"), &ab).unwrap());
        assert!(w("ab").equivalent(&w("abab"), &ab).unwrap());
        assert!(!w("ab").equivalent(&w("ba"), &ab).unwrap());
    }

    #[test]
    fn procedure_a_examples() {
        let r = procedure_a(&bp("1;2"), &w("aba")).unwrap();
        assert_eq!((r.extracted, r.residual.clone()), (3, bp(";")));
        let r = procedure_a(&bp("3;1"), &w("ba")).unwrap();
        assert_eq!((r.extracted, r.residual.clone(), r.residual_order.clone()), (3, bp(";1"), w("b")));
        let r = procedure_a(&bp("5;"), &w("a")).unwrap();
        assert_eq!(r.extracted, 5);
        assert!(procedure_a(&bp(";1"), &w("b")).is_err());
    }

    #[test]
    fn procedure_b_examples() {
        let r = procedure_b(&bp("3;1"), &w("ba")).unwrap();
        assert_eq!((r.extracted, r.residual), (4, bp(";")));
        let r = procedure_b(&bp("1;2"), &w("aba")).unwrap();
        assert_eq!((r.extracted, r.residual, r.residual_order), (2, bp("1;"), w("a")));
        assert_eq!(procedure_b(&bp(";4"), &w("b")).unwrap().extracted, 4);
    }

    #[test]
    fn padding_preserves_peeling() {
        let ab = bp("2,1;3,1");
        for o in IndexOrder::all_words(2, 2) {
            let padded = IndexOrder::new([o.word().to_vec(), vec![Tag::A, Tag::B]].concat());
            assert!(o.equivalent(&padded, &ab).unwrap());
            for tag in [Tag::A, Tag::B] {
                let (x, y) = (peel(&ab, &o, tag).unwrap(), peel_on(&ab, &padded, tag).unwrap());
                assert_eq!(x.extracted, y.extracted);
                assert_eq!(x.residual, y.residual);
                assert!(x.residual_order.equivalent(&y.residual_order, &x.residual).unwrap());
            }
        }
    }
}
