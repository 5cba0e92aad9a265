//! Roots as integer vectors over the simple-root basis.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::CoxeterGraph;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root {
    coords: Vec<i32>,
}

impl Root {
    pub fn new(coords: Vec<i32>) -> Self {
        Self { coords }
    }

    /// The simple root `alpha_i` (1-based).
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i - 1] = 1;
        Self { coords }
    }

    pub fn coords(&self) -> &[i32] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn height(&self) -> i32 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.coords.iter().all(|&c| c <= 0) && self.coords.iter().any(|&c| c < 0)
    }

    /// `self <= other` in the root order: `other - self` has nonnegative
    /// coefficients.
    pub fn leq(&self, other: &Root) -> bool {
        self.coords.len() == other.coords.len()
            && self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }

    /// Twice the Coxeter form, `2B(self, other)`, an integer in the simply
    /// laced case.
    pub fn pairing(&self, other: &Root, graph: &CoxeterGraph) -> i32 {
        let mut s = 0;
        for (a, &x) in self.coords.iter().enumerate() {
            if x == 0 {
                continue;
            }
            s += 2 * x * other.coords[a];
            for &b in graph.nbrs(a) {
                s -= x * other.coords[b];
            }
        }
        s
    }

    pub fn is_orthogonal(&self, other: &Root, graph: &CoxeterGraph) -> bool {
        self.pairing(other, graph) == 0
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [i32] {
        &mut self.coords
    }
}

impl Add for &Root {
    type Output = Root;

    fn add(self, rhs: &Root) -> Root {
        Root::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Root {
    type Output = Root;

    fn sub(self, rhs: &Root) -> Root {
        Root::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &Root {
    type Output = Root;

    fn neg(self) -> Root {
        Root::new(self.coords.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}a{}", a + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", a + 1)?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Applies `s_i` (0-based) in place: `r_i <- -r_i + sum of neighbouring
/// coordinates`.
#[inline]
pub(crate) fn reflect_coords(graph: &CoxeterGraph, a: usize, coords: &mut [i32]) {
    let mut v = -coords[a];
    for &b in graph.nbrs(a) {
        v += coords[b];
    }
    coords[a] = v;
}

impl CoxeterGraph {
    /// `s_i(r) = r - 2B(r, alpha_i) alpha_i`.
    pub fn reflect(&self, i: usize, r: &Root) -> Result<Root> {
        self.check_index(i)?;
        let mut out = r.clone();
        reflect_coords(self, i - 1, out.coords_mut());
        Ok(out)
    }
}
