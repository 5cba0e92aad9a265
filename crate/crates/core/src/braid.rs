//! Root sequences, braid moves and the structure of inversion triples.
//!
//! A triple `{a, b, a + b}` of `Phi(w)` is contractible when its three roots
//! are consecutive in the root sequence of some reduced word. Two routes
//! decide this:
//!
//! * [`CoxeterGraph::mark_contractible_by_search`] walks the whole
//!   reduced-word graph and inspects every root sequence.
//! * [`CoxeterGraph::classify`] walks factorizations `w = z * y` with
//!   `l(w) = l(z) + l(y)`. Consecutive roots forming a triple always come
//!   from a factor `i j i` with `m_ij = 3`, so the contractible triples are
//!   exactly `y^{-1}{alpha_i, alpha_j, alpha_i + alpha_j}` over
//!   factorizations whose left factor `z` has both `i` and `j` as right
//!   descents. The number of factorizations is far smaller than the number
//!   of reduced words.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::budget::Budgets;
use crate::element::{GroupElement, Word};
use crate::error::{Error, Result};
use crate::graph::CoxeterGraph;
use crate::root::Root;

/// Root sequence `(r_1, ..., r_n)` of a reduced word; `r_1` belongs to the
/// last letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSequence(pub Vec<Root>);

impl RootSequence {
    pub fn roots(&self) -> &[Root] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Index of a root, if present.
    pub fn position(&self, r: &Root) -> Option<usize> {
        self.0.iter().position(|x| x == r)
    }
}

/// `{low1, low2, high}` with `high = low1 + low2` and `low1 < low2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InversionTriple {
    pub low1: Root,
    pub low2: Root,
    pub high: Root,
}

impl InversionTriple {
    pub fn from_summands(a: Root, b: Root) -> Self {
        let high = &a + &b;
        let (low1, low2) = if a <= b { (a, b) } else { (b, a) };
        Self { low1, low2, high }
    }

    pub fn roots(&self) -> [&Root; 3] {
        [&self.low1, &self.low2, &self.high]
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.roots().contains(&r)
    }

    pub fn is_disjoint(&self, other: &InversionTriple) -> bool {
        self.roots().iter().all(|r| !other.contains(r))
    }
}

impl fmt::Display for InversionTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.low1, self.low2, self.high)
    }
}

/// One long-braid factor `outer inner outer` starting at `position` (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BraidOccurrence {
    pub position: usize,
    pub outer: usize,
    pub inner: usize,
}

/// Pairwise disjoint braid factors of a word, left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BraidSequence(pub Vec<BraidOccurrence>);

impl BraidSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Positions of the middle letters.
    pub fn middle_positions(&self) -> BTreeSet<usize> {
        self.0.iter().map(|b| b.position + 1).collect()
    }

    /// Sorted multiset of `(outer, inner)` letter pairs.
    pub fn letter_pairs(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.0.iter().map(|b| (b.outer, b.inner)).collect();
        v.sort();
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlaggedTriple {
    #[serde(flatten)]
    pub triple: InversionTriple,
    pub contractible: bool,
}

/// Per-element verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    /// Canonical reduced word.
    pub word: Word,
    pub length: usize,
    pub support: BTreeSet<usize>,
    pub triples: Vec<FlaggedTriple>,
    /// `N(w)`.
    pub contractible_count: usize,
    /// Letters taking part in a long-braid factor of some reduced word.
    pub braided_letters: BTreeSet<usize>,
    pub freely_braided: bool,
    pub content_maximal: bool,
    pub fully_commutative: bool,
}

impl ClassificationRecord {
    fn assemble(
        word: Word,
        triples: Vec<InversionTriple>,
        contractible: &BTreeSet<InversionTriple>,
        braided_letters: BTreeSet<usize>,
    ) -> Self {
        let length = word.len();
        let support: BTreeSet<usize> = word.letters().iter().copied().collect();
        let triples: Vec<FlaggedTriple> = triples
            .into_iter()
            .map(|t| {
                let c = contractible.contains(&t);
                FlaggedTriple {
                    triple: t,
                    contractible: c,
                }
            })
            .collect();
        let n = contractible.len();
        let flagged: Vec<&InversionTriple> = contractible.iter().collect();
        let freely_braided = flagged
            .iter()
            .enumerate()
            .all(|(k, t)| flagged[k + 1..].iter().all(|u| t.is_disjoint(u)));
        let content_maximal = freely_braided && support.len() + n == length;
        Self {
            word,
            length,
            support,
            triples,
            contractible_count: n,
            braided_letters,
            freely_braided,
            content_maximal,
            fully_commutative: n == 0,
        }
    }

    pub fn contractible_triples(&self) -> impl Iterator<Item = &InversionTriple> {
        self.triples
            .iter()
            .filter(|t| t.contractible)
            .map(|t| &t.triple)
    }
}

/// Contractible triples pairwise share no root.
pub fn is_freely_braided(record: &ClassificationRecord) -> bool {
    record.freely_braided
}

/// Freely braided with `#supp = l - N`.
pub fn is_content_maximal(record: &ClassificationRecord) -> bool {
    record.content_maximal
}

/// Which adjacency pattern flags a triple during the word-graph search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContractibilityRule {
    /// All three roots consecutive in some root sequence.
    Consecutive,
    /// The highest root adjacent to one of its summands in some root
    /// sequence.
    HighestAdjacent,
}

fn budget_error(graph: &CoxeterGraph, w: &GroupElement, what: &'static str, limit: usize) -> Error {
    Error::Budget {
        element: graph.canonical_word(w).to_string(),
        what,
        limit,
    }
}

/// Greedy left-to-right scan for disjoint `i j i` factors with `m_ij = 3`.
/// Maximal among disjoint factor sets since all windows have equal width.
pub fn greedy_braids(graph: &CoxeterGraph, w: &Word) -> BraidSequence {
    let l = w.letters();
    let mut out = Vec::new();
    let mut p = 0;
    while p + 2 < l.len() {
        if l[p] == l[p + 2] && graph.bonded(l[p], l[p + 1]) {
            out.push(BraidOccurrence {
                position: p,
                outer: l[p],
                inner: l[p + 1],
            });
            p += 3;
        } else {
            p += 1;
        }
    }
    BraidSequence(out)
}

impl CoxeterGraph {
    pub fn is_reduced(&self, w: &Word) -> Result<bool> {
        let e = self.element(w)?;
        Ok(self.length(&e) == w.len())
    }

    fn require_reduced(&self, w: &Word) -> Result<()> {
        if self.is_reduced(w)? {
            Ok(())
        } else {
            Err(Error::NotReduced(w.clone()))
        }
    }

    /// `r_1 = alpha_{i_n}`, `r_l = s_{i_n} ... s_{i_{n-l+2}}(alpha_{i_{n-l+1}})`.
    pub fn root_sequence(&self, w: &Word) -> Result<RootSequence> {
        self.require_reduced(w)?;
        Ok(RootSequence(self.roots_of_word(w)))
    }

    /// Swaps the commuting letters at `pos`, `pos + 1`.
    pub fn short_move(&self, w: &Word, pos: usize) -> Result<Word> {
        let l = w.letters();
        if pos + 1 >= l.len() {
            return Err(Error::MoveNotApplicable(format!(
                "no letters at {pos}, {} in {w}",
                pos + 1
            )));
        }
        let (i, j) = (l[pos], l[pos + 1]);
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j || self.bonded(i, j) {
            return Err(Error::MoveNotApplicable(format!(
                "letters {i}, {j} at {pos} in {w} do not commute"
            )));
        }
        let mut v = l.to_vec();
        v.swap(pos, pos + 1);
        Ok(Word(v))
    }

    /// Replaces `i j i` at `pos` by `j i j`.
    pub fn long_move(&self, w: &Word, pos: usize) -> Result<Word> {
        let l = w.letters();
        if pos + 2 >= l.len() {
            return Err(Error::MoveNotApplicable(format!(
                "no factor of length 3 at {pos} in {w}"
            )));
        }
        let (i, j, k) = (l[pos], l[pos + 1], l[pos + 2]);
        for x in [i, j, k] {
            self.check_index(x)?;
        }
        if i != k || i == j || !self.bonded(i, j) {
            return Err(Error::MoveNotApplicable(format!(
                "no long braid factor at {pos} in {w}"
            )));
        }
        let mut v = l.to_vec();
        v[pos] = j;
        v[pos + 1] = i;
        v[pos + 2] = j;
        Ok(Word(v))
    }

    fn braid_closure(&self, start: &Word, long: bool, cap: usize) -> Option<BTreeSet<Word>> {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.0.clone());
        queue.push_back(start.0.clone());
        while let Some(cur) = queue.pop_front() {
            let n = cur.len();
            let mut push = |v: Vec<usize>, seen: &mut HashSet<Vec<usize>>| {
                if !seen.contains(&v) {
                    seen.insert(v.clone());
                    queue.push_back(v);
                }
            };
            for p in 0..n.saturating_sub(1) {
                let (i, j) = (cur[p], cur[p + 1]);
                if i != j && !self.bonded(i, j) {
                    let mut v = cur.clone();
                    v.swap(p, p + 1);
                    push(v, &mut seen);
                }
                if long && p + 2 < n && cur[p + 2] == i && i != j && self.bonded(i, j) {
                    let mut v = cur.clone();
                    v[p] = j;
                    v[p + 1] = i;
                    v[p + 2] = j;
                    push(v, &mut seen);
                }
            }
            if seen.len() > cap {
                return None;
            }
        }
        Some(seen.into_iter().map(Word).collect())
    }

    /// Words reachable from a reduced word by short braid moves.
    pub fn commutation_class(&self, w: &Word, budgets: &Budgets) -> Result<BTreeSet<Word>> {
        self.require_reduced(w)?;
        self.braid_closure(w, false, budgets.traversal_cap)
            .ok_or_else(|| Error::Budget {
                element: w.to_string(),
                what: "commutation class size",
                limit: budgets.traversal_cap,
            })
    }

    /// Every reduced word of `w`, as the braid-move closure of its
    /// canonical word.
    pub fn all_reduced_words(&self, w: &GroupElement, budgets: &Budgets) -> Result<BTreeSet<Word>> {
        let start = self.canonical_word(w);
        self.braid_closure(&start, true, budgets.traversal_cap)
            .ok_or_else(|| budget_error(self, w, "reduced word count", budgets.traversal_cap))
    }

    /// Every `{a, b, a + b}` inside `Phi(w)`, canonical and sorted.
    pub fn inversion_triples(&self, w: &GroupElement) -> Vec<InversionTriple> {
        triples_of(&self.inversion_set(w))
    }

    /// Flags contractible triples by inspecting the root sequence of every
    /// reduced word. Stops early once every triple is flagged.
    pub fn mark_contractible_by_search(
        &self,
        w: &GroupElement,
        rule: ContractibilityRule,
        budgets: &Budgets,
    ) -> Result<Vec<FlaggedTriple>> {
        let triples = self.inversion_triples(w);
        let mut by_high: HashMap<&Root, Vec<usize>> = HashMap::new();
        for (k, t) in triples.iter().enumerate() {
            by_high.entry(&t.high).or_default().push(k);
        }
        let mut flags = vec![false; triples.len()];
        let mut remaining = triples.len();
        if remaining > 0 {
            let words = self.all_reduced_words(w, budgets)?;
            for word in &words {
                let seq = self.roots_of_word(word);
                let mut flag = |k: usize, flags: &mut Vec<bool>| {
                    if !flags[k] {
                        flags[k] = true;
                        remaining -= 1;
                    }
                };
                match rule {
                    ContractibilityRule::Consecutive => {
                        for win in seq.windows(3) {
                            let t = [&win[0], &win[1], &win[2]];
                            for (h, a, b) in [(0, 1, 2), (1, 0, 2), (2, 0, 1)] {
                                if &(t[a] + t[b]) == t[h] {
                                    let cand =
                                        InversionTriple::from_summands(t[a].clone(), t[b].clone());
                                    if let Some(k) = triples.iter().position(|x| *x == cand) {
                                        flag(k, &mut flags);
                                    }
                                }
                            }
                        }
                    }
                    ContractibilityRule::HighestAdjacent => {
                        for pair in seq.windows(2) {
                            for (h, s) in [(&pair[0], &pair[1]), (&pair[1], &pair[0])] {
                                if let Some(ks) = by_high.get(h) {
                                    for &k in ks {
                                        if triples[k].low1 == *s || triples[k].low2 == *s {
                                            flag(k, &mut flags);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                if remaining == 0 {
                    break;
                }
            }
        }
        Ok(triples
            .into_iter()
            .zip(flags)
            .map(|(triple, contractible)| FlaggedTriple {
                triple,
                contractible,
            })
            .collect())
    }

    /// Classification via the word-graph search.
    pub fn classify_by_search(
        &self,
        w: &GroupElement,
        rule: ContractibilityRule,
        budgets: &Budgets,
    ) -> Result<ClassificationRecord> {
        let flagged = self.mark_contractible_by_search(w, rule, budgets)?;
        let contractible: BTreeSet<InversionTriple> = flagged
            .iter()
            .filter(|t| t.contractible)
            .map(|t| t.triple.clone())
            .collect();
        let triples = flagged.into_iter().map(|t| t.triple).collect();
        let mut braided = BTreeSet::new();
        if !contractible.is_empty() {
            for word in self.all_reduced_words(w, budgets)? {
                for win in word.letters().windows(3) {
                    if win[0] == win[2] && self.bonded(win[0], win[1]) {
                        braided.insert(win[0]);
                        braided.insert(win[1]);
                    }
                }
            }
        }
        Ok(ClassificationRecord::assemble(
            self.canonical_word(w),
            triples,
            &contractible,
            braided,
        ))
    }

    /// Contractible triples and braided letters by walking the
    /// length-additive factorizations `w = z * y`.
    pub fn contractible_by_factorization(
        &self,
        w: &GroupElement,
        budgets: &Budgets,
    ) -> Result<(BTreeSet<InversionTriple>, BTreeSet<usize>)> {
        let n = self.rank();
        let mut triples = BTreeSet::new();
        let mut letters = BTreeSet::new();
        let mut seen: HashSet<GroupElement> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back((w.clone(), self.identity()));
        let mut descents = Vec::with_capacity(n);
        while let Some((z, yinv)) = queue.pop_front() {
            descents.clear();
            descents.extend((0..n).filter(|&a| z.has_right_descent(a)));
            for (k, &a) in descents.iter().enumerate() {
                for &b in &descents[k + 1..] {
                    if self.coefficient(a, b) == 1 {
                        let ra = Root::new(yinv.col(a).to_vec());
                        let rb = Root::new(yinv.col(b).to_vec());
                        triples.insert(InversionTriple::from_summands(ra, rb));
                        letters.insert(a + 1);
                        letters.insert(b + 1);
                    }
                }
            }
            for &a in &descents {
                let mut z2 = z.clone();
                z2.mul_gen_right(self, a);
                if !seen.contains(&z2) {
                    if seen.len() >= budgets.traversal_cap {
                        return Err(budget_error(
                            self,
                            w,
                            "factorization count",
                            budgets.traversal_cap,
                        ));
                    }
                    let mut y2 = yinv.clone();
                    y2.mul_gen_right(self, a);
                    seen.insert(z2.clone());
                    queue.push_back((z2, y2));
                }
            }
        }
        Ok((triples, letters))
    }

    /// Full classification record of `w`.
    pub fn classify(&self, w: &GroupElement, budgets: &Budgets) -> Result<ClassificationRecord> {
        let word = self.canonical_word(w);
        let inv: BTreeSet<Root> = self.roots_of_word(&word).into_iter().collect();
        let triples = triples_of(&inv);
        let (contractible, letters) = if triples.is_empty() {
            Default::default()
        } else {
            self.contractible_by_factorization(w, budgets)?
        };
        Ok(ClassificationRecord::assemble(
            word,
            triples,
            &contractible,
            letters,
        ))
    }

    pub fn is_fully_commutative(&self, w: &GroupElement, budgets: &Budgets) -> Result<bool> {
        Ok(self.classify(w, budgets)?.fully_commutative)
    }

    /// Every word in the commutation class of the canonical word carrying
    /// `N(w)` disjoint braid factors, each with its greedy braid sequence.
    pub fn contracted_expressions(
        &self,
        w: &GroupElement,
        budgets: &Budgets,
    ) -> Result<Vec<(Word, BraidSequence)>> {
        let rec = self.classify(w, budgets)?;
        if !rec.freely_braided {
            return Err(Error::NotFreelyBraided(rec.word));
        }
        let class = self
            .braid_closure(&rec.word, false, budgets.traversal_cap)
            .ok_or_else(|| {
                budget_error(self, w, "commutation class size", budgets.traversal_cap)
            })?;
        Ok(class
            .into_iter()
            .filter_map(|word| {
                let b = greedy_braids(self, &word);
                (b.len() == rec.contractible_count).then_some((word, b))
            })
            .collect())
    }

    /// Lexicographically least contracted reduced word and its braid
    /// sequence.
    pub fn contracted_expression(
        &self,
        w: &GroupElement,
        budgets: &Budgets,
    ) -> Result<(Word, BraidSequence)> {
        self.contracted_expressions(w, budgets)?
            .into_iter()
            .next()
            .ok_or_else(|| {
                Error::Invalid(format!(
                    "no contracted expression in the commutation class of {}",
                    self.canonical_word(w)
                ))
            })
    }

    /// Positions whose deletion leaves a reduced word. Finite groups only.
    pub fn deletion_reduced_positions(
        &self,
        contracted: &Word,
        braids: &BraidSequence,
    ) -> Result<BTreeSet<usize>> {
        if !self.is_finite() {
            return Err(Error::Unsupported(format!(
                "deletion analysis needs a finite group; {} is infinite",
                self.name()
            )));
        }
        let l = contracted.letters();
        for b in &braids.0 {
            let ok = b.position + 2 < l.len()
                && l[b.position] == b.outer
                && l[b.position + 2] == b.outer
                && l[b.position + 1] == b.inner;
            if !ok {
                return Err(Error::Invalid(format!(
                    "braid at {} does not match word {contracted}",
                    b.position
                )));
            }
        }
        let mut out = BTreeSet::new();
        for p in 0..l.len() {
            let mut v = l.to_vec();
            v.remove(p);
            if self.is_reduced(&Word(v))? {
                out.insert(p);
            }
        }
        Ok(out)
    }
}

pub(crate) fn triples_of(inv: &BTreeSet<Root>) -> Vec<InversionTriple> {
    let roots: Vec<&Root> = inv.iter().collect();
    let mut out = Vec::new();
    for (k, a) in roots.iter().enumerate() {
        for b in &roots[k + 1..] {
            let s = *a + *b;
            if inv.contains(&s) {
                out.push(InversionTriple::from_summands((*a).clone(), (*b).clone()));
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn g(f: Family, n: usize) -> CoxeterGraph {
        CoxeterGraph::build(f, n).unwrap()
    }

    fn word(v: &[usize]) -> Word {
        Word(v.to_vec())
    }

    fn r(v: &[i32]) -> Root {
        Root::new(v.to_vec())
    }

    #[test]
    fn root_sequences() {
        let a2 = g(Family::A, 2);
        assert_eq!(
            a2.root_sequence(&word(&[1, 2, 1])).unwrap().0,
            vec![r(&[1, 0]), r(&[1, 1]), r(&[0, 1])]
        );
        assert_eq!(a2.root_sequence(&word(&[1])).unwrap().0, vec![r(&[1, 0])]);
        assert_eq!(
            a2.root_sequence(&word(&[2, 1])).unwrap().0,
            vec![r(&[1, 0]), r(&[1, 1])]
        );
        assert!(matches!(
            a2.root_sequence(&word(&[1, 1])),
            Err(Error::NotReduced(_))
        ));
    }

    #[test]
    fn reducedness() {
        let a2 = g(Family::A, 2);
        assert!(a2.is_reduced(&word(&[1, 2, 1])).unwrap());
        assert!(!a2.is_reduced(&word(&[1, 1])).unwrap());
        assert!(a2.is_reduced(&Word::empty()).unwrap());
    }

    #[test]
    fn moves() {
        let a3 = g(Family::A, 3);
        assert_eq!(a3.short_move(&word(&[1, 3]), 0).unwrap(), word(&[3, 1]));
        assert!(a3.short_move(&word(&[1, 2]), 0).is_err());
        let a2 = g(Family::A, 2);
        assert_eq!(
            a2.long_move(&word(&[1, 2, 1]), 0).unwrap(),
            word(&[2, 1, 2])
        );
        assert!(a2.long_move(&word(&[1, 2, 2]), 0).is_err());
        let s = a2.root_sequence(&word(&[1, 2, 1])).unwrap().0;
        let t = a2.root_sequence(&word(&[2, 1, 2])).unwrap().0;
        assert_eq!(
            (s[0].clone(), s[1].clone(), s[2].clone()),
            (t[2].clone(), t[1].clone(), t[0].clone())
        );
    }

    #[test]
    fn commutation_classes() {
        let b = Budgets::default();
        let a3 = g(Family::A, 3);
        let c: Vec<Word> = a3
            .commutation_class(&word(&[1, 3]), &b)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(c, vec![word(&[1, 3]), word(&[3, 1])]);
        let a2 = g(Family::A, 2);
        assert_eq!(
            a2.commutation_class(&word(&[1, 2, 1]), &b).unwrap().len(),
            1
        );
        let c: Vec<Word> = a3
            .commutation_class(&word(&[2, 1, 3, 2]), &b)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(c, vec![word(&[2, 1, 3, 2]), word(&[2, 3, 1, 2])]);
        assert!(a3.commutation_class(&word(&[1, 1]), &b).is_err());
    }

    #[test]
    fn reduced_word_sets() {
        let b = Budgets::default();
        let a2 = g(Family::A, 2);
        let w0 = a2.element(&word(&[1, 2, 1])).unwrap();
        let all: Vec<Word> = a2.all_reduced_words(&w0, &b).unwrap().into_iter().collect();
        assert_eq!(all, vec![word(&[1, 2, 1]), word(&[2, 1, 2])]);
        assert_eq!(
            a2.all_reduced_words(&a2.generator(1).unwrap(), &b)
                .unwrap()
                .len(),
            1
        );
        let a3 = g(Family::A, 3);
        let x = a3.element(&word(&[2, 1, 3, 2])).unwrap();
        assert_eq!(a3.all_reduced_words(&x, &b).unwrap().len(), 2);
        // w0(A_4) has 768 reduced words
        let a4 = g(Family::A, 4);
        let w0 = a4.element(&word(&[1, 2, 1, 3, 2, 1, 4, 3, 2, 1])).unwrap();
        assert_eq!(a4.all_reduced_words(&w0, &b).unwrap().len(), 768);
        let tiny = Budgets {
            traversal_cap: 10,
            ..b
        };
        assert!(matches!(
            a4.all_reduced_words(&w0, &tiny),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn triples() {
        let a2 = g(Family::A, 2);
        let w0 = a2.element(&word(&[1, 2, 1])).unwrap();
        assert_eq!(
            a2.inversion_triples(&w0),
            vec![InversionTriple::from_summands(r(&[1, 0]), r(&[0, 1]))]
        );
        let a3 = g(Family::A, 3);
        assert!(a3
            .inversion_triples(&a3.element(&word(&[1, 3])).unwrap())
            .is_empty());
        assert!(a3.inversion_triples(&a3.identity()).is_empty());
    }

    #[test]
    fn contractibility_examples() {
        let b = Budgets::default();
        let a2 = g(Family::A, 2);
        let w0 = a2.element(&word(&[1, 2, 1])).unwrap();
        for rule in [
            ContractibilityRule::Consecutive,
            ContractibilityRule::HighestAdjacent,
        ] {
            let rec = a2.classify_by_search(&w0, rule, &b).unwrap();
            assert_eq!(rec.contractible_count, 1);
            assert!(rec.freely_braided && rec.content_maximal && !rec.fully_commutative);
        }
        let rec = a2.classify(&w0, &b).unwrap();
        assert_eq!(rec.contractible_count, 1);
        assert_eq!(rec.braided_letters, [1, 2].into_iter().collect());

        let a3 = g(Family::A, 3);
        let x = a3.element(&word(&[2, 1, 3, 2])).unwrap();
        let rec = a3.classify(&x, &b).unwrap();
        assert_eq!(rec.contractible_count, 0);
        assert!(rec.freely_braided && rec.fully_commutative && !rec.content_maximal);
        assert_eq!(rec.support.len(), 3);

        let e = a3.classify(&a3.identity(), &b).unwrap();
        assert_eq!(e.contractible_count, 0);
        assert!(e.freely_braided && e.content_maximal && e.fully_commutative);

        let w0 = a3.element(&word(&[1, 2, 1, 3, 2, 1])).unwrap();
        assert!(!a3.classify(&w0, &b).unwrap().freely_braided);
    }

    #[test]
    fn contracted_expression_examples() {
        let b = Budgets::default();
        let a2 = g(Family::A, 2);
        let w0 = a2.element(&word(&[1, 2, 1])).unwrap();
        let (wd, braids) = a2.contracted_expression(&w0, &b).unwrap();
        assert_eq!(wd, word(&[1, 2, 1]));
        assert_eq!(
            braids.0,
            vec![BraidOccurrence {
                position: 0,
                outer: 1,
                inner: 2
            }]
        );

        let a3 = g(Family::A, 3);
        let x = a3.element(&word(&[1, 3])).unwrap();
        let (wd, braids) = a3.contracted_expression(&x, &b).unwrap();
        assert_eq!(wd, word(&[1, 3]));
        assert!(braids.is_empty());

        let y = a3.element(&word(&[1, 2, 1, 3])).unwrap();
        let (wd, braids) = a3.contracted_expression(&y, &b).unwrap();
        assert_eq!(wd, word(&[1, 2, 1, 3]));
        assert_eq!(
            braids.0,
            vec![BraidOccurrence {
                position: 0,
                outer: 1,
                inner: 2
            }]
        );

        let w0 = a3.element(&word(&[1, 2, 1, 3, 2, 1])).unwrap();
        assert!(matches!(
            a3.contracted_expression(&w0, &b),
            Err(Error::NotFreelyBraided(_))
        ));
    }

    #[test]
    fn deletion_examples() {
        let a2 = g(Family::A, 2);
        let braids = greedy_braids(&a2, &word(&[1, 2, 1]));
        let pos = a2
            .deletion_reduced_positions(&word(&[1, 2, 1]), &braids)
            .unwrap();
        assert_eq!(pos, [0, 2].into_iter().collect());

        let a3 = g(Family::A, 3);
        let pos = a3
            .deletion_reduced_positions(&word(&[1, 3]), &BraidSequence::default())
            .unwrap();
        assert_eq!(pos, [0, 1].into_iter().collect());
        let w = word(&[1, 2, 1, 3]);
        let pos = a3
            .deletion_reduced_positions(&w, &greedy_braids(&a3, &w))
            .unwrap();
        assert_eq!(pos, [0, 2, 3].into_iter().collect());

        let e9 = g(Family::E, 9);
        assert!(matches!(
            e9.deletion_reduced_positions(&word(&[1]), &BraidSequence::default()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn full_commutativity() {
        let b = Budgets::default();
        let a3 = g(Family::A, 3);
        let x = a3.element(&word(&[2, 1, 3, 2])).unwrap();
        assert!(a3.is_fully_commutative(&x, &b).unwrap());
        let a2 = g(Family::A, 2);
        assert!(!a2
            .is_fully_commutative(&a2.element(&word(&[1, 2, 1])).unwrap(), &b)
            .unwrap());
        assert!(a2.is_fully_commutative(&a2.identity(), &b).unwrap());
    }
}
