//! Simply laced Coxeter diagrams.
//!
//! Generators are indexed `1..=rank`. Every pair of distinct generators has
//! bond order 2 or 3; only the order-3 pairs ("edges") are stored.
//!
//! Labelings of the D and E families are fixed so that, for every `k` past
//! the fork, node `k` is adjacent to node `k - 1` and to no other node of
//! `1..k`:
//!
//! ```text
//! D_n:  1 - 3 - 4 - ... - n        E_n:  1 - 3 - 4 - 5 - ... - n
//!           |                                    |
//!           2                                    2
//! ```
//!
//! With these labelings `D_3` is an `A_3` diagram, `E_4` an `A_4` diagram and
//! `E_5` a `D_5` diagram.
//!
//! # Graph files
//!
//! A custom diagram is read from UTF-8 text: one line `rank n`, then one
//! line `edge i j` per bond-3 pair. Blank lines and `#` comments are
//! ignored. Self loops, duplicate edges and out-of-range indices are
//! rejected.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
    Custom,
}

impl Family {
    pub fn min_rank(self) -> usize {
        match self {
            Family::A | Family::Custom => 1,
            Family::D => 3,
            Family::E => 4,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
            Family::Custom => "custom",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "custom" => Ok(Family::Custom),
            other => Err(Error::Invalid(format!("unknown family {other:?}"))),
        }
    }
}

/// A simply laced Coxeter diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterGraph {
    rank: usize,
    family: Family,
    /// Chain order `i_1, ..., i_n` of a nested family, 1-based.
    chain: Option<Vec<usize>>,
    /// `bond[i * rank + j]` is true iff `m_ij = 3` (0-based).
    bond: Vec<bool>,
    /// 0-based neighbour lists.
    neighbors: Vec<Vec<usize>>,
}

impl CoxeterGraph {
    /// Builds a diagram from 1-based edges. Rejects loops, duplicates and
    /// out-of-range indices.
    pub fn from_edges(rank: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRank {
                family: Family::Custom.to_string(),
                rank,
                minimum: 1,
            });
        }
        let mut bond = vec![false; rank * rank];
        for &(i, j) in edges {
            for k in [i, j] {
                if k == 0 || k > rank {
                    return Err(Error::IndexOutOfRange { index: k, rank });
                }
            }
            if i == j {
                return Err(Error::Invalid(format!("self loop on node {i}")));
            }
            let (a, b) = (i - 1, j - 1);
            if bond[a * rank + b] {
                return Err(Error::Invalid(format!("duplicate edge {{{i},{j}}}")));
            }
            bond[a * rank + b] = true;
            bond[b * rank + a] = true;
        }
        let neighbors = (0..rank)
            .map(|a| (0..rank).filter(|&b| bond[a * rank + b]).collect())
            .collect();
        Ok(Self {
            rank,
            family: Family::Custom,
            chain: None,
            bond,
            neighbors,
        })
    }

    /// The standard diagram of a family, labelled as in the module docs.
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        let minimum = family.min_rank();
        if rank < minimum || family == Family::Custom {
            return Err(Error::InvalidRank {
                family: family.to_string(),
                rank,
                minimum,
            });
        }
        let mut edges = Vec::new();
        match family {
            Family::A => edges.extend((1..rank).map(|k| (k, k + 1))),
            Family::D => {
                edges.push((1, 3));
                edges.push((2, 3));
                edges.extend((3..rank).map(|k| (k, k + 1)));
            }
            Family::E => {
                edges.push((1, 3));
                edges.push((2, 4));
                edges.push((3, 4));
                edges.extend((4..rank).map(|k| (k, k + 1)));
            }
            Family::Custom => unreachable!(),
        }
        let mut g = Self::from_edges(rank, &edges)?;
        g.family = family;
        g.chain = Some((1..=rank).collect());
        Ok(g)
    }

    /// Induced subdiagram on nodes `1..=k`, keeping the chain `1..=k`.
    ///
    /// This is the `k`-th member of the nested sequence of a family; below
    /// the family's minimum rank the tag becomes `Custom`.
    pub fn chain_prefix(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.rank {
            return Err(Error::InvalidRank {
                family: self.family.to_string(),
                rank: k,
                minimum: 1,
            });
        }
        let edges = self
            .edges()
            .into_iter()
            .filter(|&(_, j)| j <= k)
            .collect::<Vec<_>>();
        let mut g = Self::from_edges(k, &edges)?;
        if self.family != Family::Custom && k >= self.family.min_rank() {
            g.family = self.family;
        }
        g.chain = Some((1..=k).collect());
        Ok(g)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn chain(&self) -> Option<&[usize]> {
        self.chain.as_deref()
    }

    /// Short label such as `A_3`, `D_2` (a chain stage) or `custom_5`.
    pub fn name(&self) -> String {
        match (self.family, &self.chain) {
            (Family::Custom, Some(_)) => format!("chain_{}", self.rank),
            (Family::Custom, None) => format!("custom_{}", self.rank),
            (f, _) => format!("{f}_{}", self.rank),
        }
    }

    /// 1-based edge list with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.rank {
            for &b in &self.neighbors[a] {
                if a < b {
                    out.push((a + 1, b + 1));
                }
            }
        }
        out
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    /// Bond order `m_ij` for 1-based indices.
    pub fn bond_order(&self, i: usize, j: usize) -> u32 {
        if i == j {
            1
        } else if self.bonded(i, j) {
            3
        } else {
            2
        }
    }

    /// True iff `m_ij = 3` (1-based).
    #[inline]
    pub fn bonded(&self, i: usize, j: usize) -> bool {
        self.bond[(i - 1) * self.rank + (j - 1)]
    }

    /// 0-based neighbours of 0-based node `a`.
    #[inline]
    pub(crate) fn nbrs(&self, a: usize) -> &[usize] {
        &self.neighbors[a]
    }

    /// The integer `-2B(alpha_j, alpha_i)`: 1 on an edge, 0 off it, -2 on the
    /// diagonal. 0-based.
    #[inline]
    pub(crate) fn coefficient(&self, a: usize, b: usize) -> i32 {
        if a == b {
            -2
        } else if self.bond[a * self.rank + b] {
            1
        } else {
            0
        }
    }

    /// Whether the group is finite, i.e. the Cartan matrix is positive
    /// definite. Decided by exact leading principal minors.
    pub fn is_finite(&self) -> bool {
        match self.family {
            Family::A | Family::D => return true,
            Family::E if self.rank <= 8 => return true,
            Family::E => return false,
            Family::Custom => {}
        }
        let n = self.rank;
        // Fraction-free elimination; pivots are ratios of leading minors.
        let mut m: Vec<Vec<i128>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        if a == b {
                            2
                        } else {
                            -(self.coefficient(a, b) as i128)
                        }
                    })
                    .collect()
            })
            .collect();
        let mut prev = 1i128;
        for k in 0..n {
            if m[k][k] <= 0 {
                return false;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
            }
            prev = m[k][k];
        }
        true
    }

    /// Parses the graph-file format described in the module docs.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rank = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::GraphFormat {
                line: lineno + 1,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| err(format!("expected a positive integer, got {s:?}")))
            };
            match fields.as_slice() {
                ["rank", n] => {
                    if rank.is_some() {
                        return Err(err("duplicate rank line".into()));
                    }
                    let n = num(n)?;
                    if n == 0 {
                        return Err(err("rank must be positive".into()));
                    }
                    rank = Some(n);
                }
                ["edge", i, j] => {
                    if rank.is_none() {
                        return Err(err("edge before rank line".into()));
                    }
                    edges.push((lineno + 1, num(i)?, num(j)?));
                }
                _ => return Err(err(format!("unrecognised line {line:?}"))),
            }
        }
        let rank = rank.ok_or(Error::GraphFormat {
            line: 0,
            message: "missing rank line".into(),
        })?;
        let mut seen = std::collections::HashSet::new();
        for &(line, i, j) in &edges {
            let err = |message: String| Error::GraphFormat { line, message };
            if i == 0 || j == 0 || i > rank || j > rank {
                return Err(err(format!("edge {i} {j} out of range 1..={rank}")));
            }
            if i == j {
                return Err(err(format!("self loop on node {i}")));
            }
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(err(format!("duplicate edge {i} {j}")));
            }
        }
        let pairs: Vec<_> = edges.iter().map(|&(_, i, j)| (i, j)).collect();
        Self::from_edges(rank, &pairs)
    }

    /// Renders the graph-file format.
    pub fn to_file_string(&self) -> String {
        let mut s = format!("rank {}\n", self.rank);
        for (i, j) in self.edges() {
            s.push_str(&format!("edge {i} {j}\n"));
        }
        s
    }
}

impl fmt::Display for CoxeterGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_edges() {
        let g = CoxeterGraph::build(Family::A, 2).unwrap();
        assert_eq!(g.edges(), vec![(1, 2)]);
    }

    #[test]
    fn d4_edges_and_chain() {
        let g = CoxeterGraph::build(Family::D, 4).unwrap();
        assert_eq!(g.edges(), vec![(1, 3), (2, 3), (3, 4)]);
        // node 4 sees only node 3 among 1..3
        assert!((1..4).all(|j| g.bonded(4, j) == (j == 3)));
    }

    #[test]
    fn e6_edges_contain_d5() {
        let g = CoxeterGraph::build(Family::E, 6).unwrap();
        assert_eq!(g.edges(), vec![(1, 3), (2, 4), (3, 4), (4, 5), (5, 6)]);
        let e5 = g.chain_prefix(5).unwrap();
        let d5 = CoxeterGraph::build(Family::D, 5).unwrap();
        // D_5 up to relabelling: E_5 is a fork at node 4 with arms 1-3, 2, 5.
        let mut deg: Vec<usize> = (0..5).map(|a| e5.nbrs(a).len()).collect();
        let mut deg_d: Vec<usize> = (0..5).map(|a| d5.nbrs(a).len()).collect();
        deg.sort();
        deg_d.sort();
        assert_eq!(deg, deg_d);
        assert_eq!(e5.edges().len(), 4);
        assert_eq!(e5.nbrs(3).len(), 3);
    }

    #[test]
    fn chain_condition_past_fork() {
        for (fam, n, fork) in [(Family::A, 8, 1), (Family::D, 8, 3), (Family::E, 9, 4)] {
            let g = CoxeterGraph::build(fam, n).unwrap();
            for k in fork + 1..=n {
                for j in 1..k {
                    assert_eq!(g.bonded(k, j), j == k - 1, "{fam} node {k} vs {j}");
                }
            }
        }
    }

    #[test]
    fn rank_minimums() {
        assert!(matches!(
            CoxeterGraph::build(Family::D, 2),
            Err(Error::InvalidRank { minimum: 3, .. })
        ));
        assert!(CoxeterGraph::build(Family::E, 3).is_err());
        assert!(CoxeterGraph::build(Family::A, 0).is_err());
    }

    #[test]
    fn finiteness() {
        assert!(CoxeterGraph::build(Family::E, 8).unwrap().is_finite());
        assert!(!CoxeterGraph::build(Family::E, 9).unwrap().is_finite());
        let e8 = CoxeterGraph::parse(&CoxeterGraph::build(Family::E, 8).unwrap().to_file_string())
            .unwrap();
        assert!(e8.is_finite());
        let e9 = CoxeterGraph::parse(&CoxeterGraph::build(Family::E, 9).unwrap().to_file_string())
            .unwrap();
        assert!(!e9.is_finite());
        // affine A_2: a triangle
        let tri = CoxeterGraph::from_edges(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(!tri.is_finite());
        let d4 = CoxeterGraph::from_edges(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(d4.is_finite());
    }

    #[test]
    fn parse_rejects_bad_files() {
        assert!(CoxeterGraph::parse("rank 3\nedge 1 2\nedge 2 1\n").is_err());
        assert!(CoxeterGraph::parse("rank 3\nedge 1 4\n").is_err());
        assert!(CoxeterGraph::parse("rank 3\nedge 2 2\n").is_err());
        assert!(CoxeterGraph::parse("edge 1 2\n").is_err());
        assert!(CoxeterGraph::parse("rank 2\nbond 1 2 3\n").is_err());
        let g = CoxeterGraph::parse("# A_3\nrank 3\n\nedge 1 2\nedge 3 2 # tail\n").unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(g.family(), Family::Custom);
    }
}
