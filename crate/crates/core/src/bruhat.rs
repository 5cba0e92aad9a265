//! Bruhat order, Poincaré polynomials and smoothness verdicts.
//!
//! The lower set of `w` is the set of products of subwords of a reduced
//! word for `w`. A verdict is smooth exactly when the polynomial
//! `sum over v <= w of t^l(v)` is palindromic.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::budget::Budgets;
use crate::element::{GroupElement, Word};
use crate::error::{Error, Result};
use crate::graph::CoxeterGraph;

/// Integer polynomial, coefficient `k` at index `k`, trailing zeros trimmed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Polynomial(Vec<u64>);

impl Polynomial {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial(coeffs)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn eval_at_one(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.0.is_empty() || other.0.is_empty() {
            return Polynomial::default();
        }
        let mut out = vec![0; self.0.len() + other.0.len() - 1];
        for (a, &x) in self.0.iter().enumerate() {
            for (b, &y) in other.0.iter().enumerate() {
                out[a + b] += x * y;
            }
        }
        Polynomial::new(out)
    }
}

/// `coeffs[k] == coeffs[deg - k]` for every `k`.
pub fn is_palindromic(p: &Polynomial) -> bool {
    let c = p.coeffs();
    c.iter().eq(c.iter().rev())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("t")?,
                (1, c) => write!(f, "{c}t")?,
                (k, 1) => write!(f, "t^{k}")?,
                (k, c) => write!(f, "{c}t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothnessVerdict {
    pub word: Word,
    pub poincare: Polynomial,
    pub palindromic: bool,
    pub smooth: bool,
}

impl CoxeterGraph {
    fn lower_set_with_lengths(
        &self,
        w: &GroupElement,
        budgets: &Budgets,
    ) -> Result<Vec<(GroupElement, usize)>> {
        let word = self.canonical_word(w);
        if word.len() > budgets.bruhat_max_length {
            return Err(Error::Budget {
                element: word.to_string(),
                what: "length for Bruhat lower set",
                limit: budgets.bruhat_max_length,
            });
        }
        // Subwords of i_1..i_k are subwords of i_1..i_{k-1}, optionally
        // followed by i_k; deduplicate after each letter.
        let mut set: HashSet<GroupElement> = HashSet::new();
        set.insert(self.identity());
        for &i in word.letters() {
            let extra: Vec<GroupElement> = set
                .iter()
                .map(|x| {
                    let mut y = x.clone();
                    y.mul_gen_right(self, i - 1);
                    y
                })
                .collect();
            set.extend(extra);
        }
        let mut out: Vec<(GroupElement, usize)> = set
            .into_iter()
            .map(|x| {
                let l = self.length(&x);
                (x, l)
            })
            .collect();
        out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        Ok(out)
    }

    /// `{v : v <= w}` in Bruhat order, sorted by length.
    pub fn bruhat_lower_set(
        &self,
        w: &GroupElement,
        budgets: &Budgets,
    ) -> Result<Vec<GroupElement>> {
        Ok(self
            .lower_set_with_lengths(w, budgets)?
            .into_iter()
            .map(|(x, _)| x)
            .collect())
    }

    pub fn bruhat_leq(
        &self,
        v: &GroupElement,
        w: &GroupElement,
        budgets: &Budgets,
    ) -> Result<bool> {
        if v.rank() != w.rank() {
            return Err(Error::RankMismatch {
                left: v.rank(),
                right: w.rank(),
            });
        }
        if self.length(v) > self.length(w) {
            return Ok(false);
        }
        Ok(self.bruhat_lower_set(w, budgets)?.contains(v))
    }

    pub fn poincare_polynomial(&self, w: &GroupElement, budgets: &Budgets) -> Result<Polynomial> {
        let lower = self.lower_set_with_lengths(w, budgets)?;
        let top = lower.last().map(|x| x.1).unwrap_or(0);
        let mut coeffs = vec![0u64; top + 1];
        for (_, l) in lower {
            coeffs[l] += 1;
        }
        Ok(Polynomial::new(coeffs))
    }

    pub fn smoothness(&self, w: &GroupElement, budgets: &Budgets) -> Result<SmoothnessVerdict> {
        let poincare = self.poincare_polynomial(w, budgets)?;
        let palindromic = is_palindromic(&poincare);
        Ok(SmoothnessVerdict {
            word: self.canonical_word(w),
            poincare,
            palindromic,
            smooth: palindromic,
        })
    }

    /// Number of elements of length `l(w) - 1` below `w`.
    pub fn coatom_count(&self, w: &GroupElement, budgets: &Budgets) -> Result<u64> {
        let l = self.length(w);
        if l == 0 {
            return Ok(0);
        }
        Ok(self.poincare_polynomial(w, budgets)?.coeff(l - 1))
    }
}
