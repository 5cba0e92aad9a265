//! Words, group elements and the reflection representation.
//!
//! An element is stored as the integer matrix of images of the simple
//! roots, which is a faithful representation of the group. A word
//! `i_1 i_2 ... i_k` represents `s_{i_1} s_{i_2} ... s_{i_k}`; acting on a
//! root, the rightmost reflection is applied first.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::CoxeterGraph;
use crate::root::{reflect_coords, Root};

/// A word in the generators, 1-based. Need not be reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Comma-separated letters; the empty word is the empty string.
    pub fn to_csv(&self) -> String {
        self.0
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `1,2,1`, `1 2 1`, or the empty string for the identity.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Word::empty());
        }
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Invalid(format!("bad letter {t:?} in word")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A group element, as the images `w(alpha_j)` of the simple roots.
///
/// Column `j` (0-based) occupies `images[j * rank .. (j + 1) * rank]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    rank: usize,
    images: Vec<i32>,
}

impl GroupElement {
    pub fn identity(rank: usize) -> Self {
        let mut images = vec![0; rank * rank];
        for a in 0..rank {
            images[a * rank + a] = 1;
        }
        Self { rank, images }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank)
    }

    /// `w(alpha_j)` for 1-based `j`.
    pub fn image(&self, j: usize) -> Root {
        Root::new(self.col(j - 1).to_vec())
    }

    #[inline]
    pub(crate) fn col(&self, a: usize) -> &[i32] {
        &self.images[a * self.rank..(a + 1) * self.rank]
    }

    /// Sends a root through `w`.
    pub fn apply(&self, r: &Root) -> Root {
        let n = self.rank;
        let mut out = vec![0; n];
        for (b, &c) in r.coords().iter().enumerate() {
            if c != 0 {
                for (k, o) in out.iter_mut().enumerate() {
                    *o += c * self.images[b * n + k];
                }
            }
        }
        Root::new(out)
    }

    /// `self * other`; as maps on roots, `other` acts first.
    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let n = self.rank;
        let mut images = vec![0; n * n];
        for j in 0..n {
            for b in 0..n {
                let c = other.images[j * n + b];
                if c != 0 {
                    for k in 0..n {
                        images[j * n + k] += c * self.images[b * n + k];
                    }
                }
            }
        }
        Ok(GroupElement { rank: n, images })
    }

    /// Right multiplication by `s_a` (0-based): `col_a` is negated and added
    /// to every neighbouring column.
    #[inline]
    pub(crate) fn mul_gen_right(&mut self, graph: &CoxeterGraph, a: usize) {
        let n = self.rank;
        let (lo, hi) = (a * n, (a + 1) * n);
        for &b in graph.nbrs(a) {
            for k in 0..n {
                self.images[b * n + k] += self.images[lo + k];
            }
        }
        for v in &mut self.images[lo..hi] {
            *v = -*v;
        }
    }

    /// Left multiplication by `s_a` (0-based): reflect every column.
    #[inline]
    pub(crate) fn mul_gen_left(&mut self, graph: &CoxeterGraph, a: usize) {
        let n = self.rank;
        for j in 0..n {
            reflect_coords(graph, a, &mut self.images[j * n..(j + 1) * n]);
        }
    }

    /// Right descent test for 0-based `a`: `w(alpha_a)` is negative.
    #[inline]
    pub(crate) fn has_right_descent(&self, a: usize) -> bool {
        self.col(a).iter().any(|&c| c < 0)
    }

    /// Whether every column is a nonzero vector with entries of one sign.
    pub fn columns_are_roots(&self) -> bool {
        (0..self.rank).all(|a| {
            let c = self.col(a);
            let pos = c.iter().all(|&x| x >= 0);
            let neg = c.iter().all(|&x| x <= 0);
            (pos || neg) && c.iter().any(|&x| x != 0)
        })
    }
}

impl CoxeterGraph {
    fn check_word(&self, w: &Word) -> Result<()> {
        w.letters().iter().try_for_each(|&i| self.check_index(i))
    }

    fn check_element(&self, w: &GroupElement) -> Result<()> {
        if w.rank() != self.rank() {
            Err(Error::RankMismatch {
                left: self.rank(),
                right: w.rank(),
            })
        } else {
            Ok(())
        }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.rank())
    }

    /// The simple reflection `s_i`.
    pub fn generator(&self, i: usize) -> Result<GroupElement> {
        self.element(&Word(vec![i]))
    }

    /// The element represented by a word.
    pub fn element(&self, w: &Word) -> Result<GroupElement> {
        self.check_word(w)?;
        let mut e = self.identity();
        for &i in w.letters() {
            e.mul_gen_right(self, i - 1);
        }
        Ok(e)
    }

    /// `w * s_i`.
    pub fn mul_right(&self, w: &GroupElement, i: usize) -> Result<GroupElement> {
        self.check_index(i)?;
        self.check_element(w)?;
        let mut out = w.clone();
        out.mul_gen_right(self, i - 1);
        Ok(out)
    }

    /// `s_i * w`.
    pub fn mul_left(&self, i: usize, w: &GroupElement) -> Result<GroupElement> {
        self.check_index(i)?;
        self.check_element(w)?;
        let mut out = w.clone();
        out.mul_gen_left(self, i - 1);
        Ok(out)
    }

    /// Letters `a_1, a_2, ...` (1-based) with `w s_{a_1} s_{a_2} ... = e`,
    /// always taking the smallest right descent. So `w^{-1}` is represented
    /// by `a_1 a_2 ...`.
    fn strip_right(&self, w: &GroupElement) -> Vec<usize> {
        let mut cur = w.clone();
        let mut out = Vec::new();
        while let Some(a) = (0..self.rank()).find(|&a| cur.has_right_descent(a)) {
            cur.mul_gen_right(self, a);
            out.push(a + 1);
        }
        out
    }

    /// `l(w)`.
    pub fn length(&self, w: &GroupElement) -> usize {
        let mut cur = w.clone();
        let mut n = 0;
        while let Some(a) = (0..self.rank()).find(|&a| cur.has_right_descent(a)) {
            cur.mul_gen_right(self, a);
            n += 1;
        }
        n
    }

    pub fn inverse(&self, w: &GroupElement) -> GroupElement {
        let word = Word(self.strip_right(w));
        self.element(&word).expect("letters come from the graph")
    }

    pub fn is_descent(&self, w: &GroupElement, i: usize, side: Side) -> Result<bool> {
        self.check_index(i)?;
        self.check_element(w)?;
        Ok(match side {
            Side::Right => w.has_right_descent(i - 1),
            Side::Left => self.inverse(w).has_right_descent(i - 1),
        })
    }

    /// 1-based descents on one side, ascending.
    pub fn descents(&self, w: &GroupElement, side: Side) -> Vec<usize> {
        let v = match side {
            Side::Right => w.clone(),
            Side::Left => self.inverse(w),
        };
        (0..self.rank())
            .filter(|&a| v.has_right_descent(a))
            .map(|a| a + 1)
            .collect()
    }

    /// Reduced word built by repeatedly removing the smallest left descent.
    pub fn canonical_word(&self, w: &GroupElement) -> Word {
        // Left descents of w are right descents of w^{-1}; stripping w^{-1}
        // on the right yields the letters in left-to-right order.
        Word(self.strip_right(&self.inverse(w)))
    }

    /// Root sequence of an arbitrary word (no reducedness check).
    pub(crate) fn roots_of_word(&self, w: &Word) -> Vec<Root> {
        let mut y = self.identity();
        let mut out = Vec::with_capacity(w.len());
        for &i in w.letters().iter().rev() {
            out.push(Root::new(y.col(i - 1).to_vec()));
            y.mul_gen_right(self, i - 1);
        }
        out
    }

    /// `Phi(w) = Phi+ ∩ w^{-1}(Phi-)`.
    pub fn inversion_set(&self, w: &GroupElement) -> BTreeSet<Root> {
        self.roots_of_word(&self.canonical_word(w))
            .into_iter()
            .collect()
    }

    /// Letters occurring in any reduced word.
    pub fn support(&self, w: &GroupElement) -> BTreeSet<usize> {
        self.canonical_word(w).letters().iter().copied().collect()
    }
}
