//! Bounded-length censuses, content-maximal counts, the seven-class
//! partition of content-maximal elements and the generating functions.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::ClassificationRecord;
use crate::budget::Budgets;
use crate::element::{GroupElement, Side, Word};
use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, Family};

/// An element together with its length and canonical word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumerated {
    pub element: GroupElement,
    pub length: usize,
    pub word: Word,
}

/// Every element of length at most `max_length` (all of them when `None`,
/// which requires a finite group), ordered by length then canonical word.
pub fn enumerate_up_to_length(
    graph: &CoxeterGraph,
    max_length: Option<usize>,
    budgets: &Budgets,
) -> Result<Vec<Enumerated>> {
    if max_length.is_none() && !graph.is_finite() {
        return Err(Error::Unsupported(format!(
            "{} is infinite; a maximum length is required",
            graph.name()
        )));
    }
    let limit = max_length.unwrap_or(usize::MAX);
    let n = graph.rank();
    let mut out = vec![Enumerated {
        element: graph.identity(),
        length: 0,
        word: Word::empty(),
    }];
    let mut level: Vec<GroupElement> = vec![graph.identity()];
    let mut length = 0;
    while length < limit && !level.is_empty() {
        let mut next: HashSet<GroupElement> = HashSet::new();
        for x in &level {
            for a in 0..n {
                if !x.has_right_descent(a) {
                    let mut y = x.clone();
                    y.mul_gen_right(graph, a);
                    next.insert(y);
                }
            }
            if out.len() + next.len() > budgets.max_elements {
                return Err(Error::Budget {
                    element: format!("{} at length {}", graph.name(), length + 1),
                    what: "enumerated element count",
                    limit: budgets.max_elements,
                });
            }
        }
        length += 1;
        let mut tagged: Vec<Enumerated> = next
            .into_par_iter()
            .map(|e| {
                let word = graph.canonical_word(&e);
                Enumerated {
                    element: e,
                    length,
                    word,
                }
            })
            .collect();
        tagged.sort_by(|a, b| a.word.cmp(&b.word));
        level = tagged.iter().map(|t| t.element.clone()).collect();
        out.extend(tagged);
    }
    Ok(out)
}

/// Lengths of reduced words can only reach `floor(3 * rank / 2)` for
/// content-maximal elements: `l = #supp + N` and each braid consumes two
/// letters of the support.
pub fn content_maximal_length_bound(graph: &CoxeterGraph) -> usize {
    3 * graph.rank() / 2
}

/// Estimated number of elements of length at most `max_length` in a finite
/// A, D or E group, from the degrees of its basic invariants.
pub fn estimated_elements(graph: &CoxeterGraph, max_length: usize) -> Option<u128> {
    let n = graph.rank();
    let degrees: Vec<usize> = match graph.family() {
        Family::A => (2..=n + 1).collect(),
        Family::D => {
            let mut d: Vec<usize> = (1..n).map(|k| 2 * k).collect();
            d.push(n);
            d
        }
        Family::E => match n {
            4 => vec![2, 3, 4, 5],
            5 => vec![2, 4, 5, 6, 8],
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
            _ => return None,
        },
        Family::Custom => return None,
    };
    let mut poly = vec![1u128];
    for d in degrees {
        let mut next = vec![0u128; poly.len() + d - 1];
        for (k, &c) in poly.iter().enumerate() {
            for j in 0..d {
                next[k + j] += c;
            }
        }
        poly = next;
    }
    Some(poly.iter().take(max_length + 1).sum())
}

/// The seven mutually exclusive cases for a content-maximal element of the
/// last group of a nested chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ChainClass {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
}

impl ChainClass {
    pub const ALL: [ChainClass; 7] = [
        ChainClass::I,
        ChainClass::II,
        ChainClass::III,
        ChainClass::IV,
        ChainClass::V,
        ChainClass::VI,
        ChainClass::VII,
    ];

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for ChainClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = ["i", "ii", "iii", "iv", "v", "vi", "vii"][self.index()];
        f.write_str(s)
    }
}

/// Which of the seven chain cases a content-maximal element falls in,
/// relative to the last chain vertex `i_n`.
///
/// `i_n` is braided when it belongs to a long-braid factor of some reduced
/// word. Fails when the input is not content maximal, the graph has no
/// chain, or the cases do not select exactly one class (which happens only
/// where the chain condition fails, near a fork).
pub fn chain_class(
    graph: &CoxeterGraph,
    w: &GroupElement,
    record: &ClassificationRecord,
) -> Result<ChainClass> {
    if !record.content_maximal {
        return Err(Error::NotContentMaximal(record.word.clone()));
    }
    let chain = graph
        .chain()
        .ok_or_else(|| Error::Unsupported(format!("{} has no chain order", graph.name())))?;
    let n = chain.len();
    let at = |k: usize| chain[k - 1];
    let in_supp = |k: usize| record.support.contains(&at(k));
    let right = |k: usize| w.has_right_descent(at(k) - 1);
    let left = |k: usize| -> Result<bool> { graph.is_descent(w, at(k), Side::Left) };
    let last = at(n);
    let braided = record.braided_letters.contains(&last);

    let mut hits = Vec::new();
    if !in_supp(n) {
        hits.push(ChainClass::I);
    } else if !braided {
        if n == 1 || !in_supp(n - 1) {
            hits.push(ChainClass::II);
        } else {
            if right(n) {
                hits.push(ChainClass::III);
            }
            if left(n)? {
                hits.push(ChainClass::IV);
            }
        }
    } else if n <= 2 || !in_supp(n - 2) {
        hits.push(ChainClass::V);
    } else {
        if right(n - 1) {
            hits.push(ChainClass::VI);
        }
        if left(n - 1)? {
            hits.push(ChainClass::VII);
        }
    }
    match hits.as_slice() {
        [c] => Ok(*c),
        _ => Err(Error::Invalid(format!(
            "element {} of {} matches chain classes {:?}",
            record.word,
            graph.name(),
            hits
        ))),
    }
}

/// Expected class sizes `f(n-1), f(n-2), f(n-1)-f(n-2), f(n-1)-f(n-2),
/// f(n-3), f(n-2)-f(n-3), f(n-2)-f(n-3)` from the three previous counts.
pub fn chain_class_sizes(f1: i128, f2: i128, f3: i128) -> [i128; 7] {
    [f1, f2, f1 - f2, f1 - f2, f3, f2 - f3, f2 - f3]
}

/// Iterates `f(n) = 3f(n-1) + f(n-2) - f(n-3)`; returns the seeds followed
/// by `steps` new terms.
pub fn recurrence_f(seeds: [i128; 3], steps: usize) -> Vec<i128> {
    let mut v = seeds.to_vec();
    for _ in 0..steps {
        let k = v.len();
        v.push(3 * v[k - 1] + v[k - 2] - v[k - 3]);
    }
    v
}

/// `numerator / denominator` as a formal power series, coefficients
/// low-degree first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalSeries {
    numerator: Vec<i128>,
    denominator: Vec<i128>,
}

impl RationalSeries {
    pub fn new(numerator: Vec<i128>, denominator: Vec<i128>) -> Result<Self> {
        if denominator.first() != Some(&1) {
            return Err(Error::Invalid("denominator constant term must be 1".into()));
        }
        Ok(Self {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &[i128] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[i128] {
        &self.denominator
    }

    /// Coefficients of `x^0 ..= x^order`.
    pub fn expand(&self, order: usize) -> Vec<i128> {
        let mut c = vec![0i128; order + 1];
        for k in 0..=order {
            let mut v = self.numerator.get(k).copied().unwrap_or(0);
            for (j, &d) in self.denominator.iter().enumerate().skip(1) {
                if j <= k {
                    v -= d * c[k - j];
                }
            }
            c[k] = v;
        }
        c
    }
}

/// Generating function of content-maximal counts for a family; the
/// coefficient of `x^n` is the count for rank `n`.
pub fn content_maximal_series(family: Family) -> Option<RationalSeries> {
    let den = vec![1, -3, -1, 1];
    let num = match family {
        Family::A => vec![0, 2, 0, -1],
        Family::D => vec![0, 0, 0, 0, 62, 15, -19],
        Family::E => vec![0, 0, 0, 0, 0, 0, 652, 140, -201],
        Family::Custom => return None,
    };
    Some(RationalSeries::new(num, den).expect("constant term 1"))
}

/// Smallest rank from which the recurrence matches direct counts.
pub fn validated_rank(family: Family) -> Option<usize> {
    match family {
        Family::A => Some(4),
        Family::D => Some(5),
        Family::E => Some(6),
        Family::Custom => None,
    }
}

/// Compact per-element result stored in censuses and cache files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementSummary {
    pub word: Word,
    pub length: usize,
    pub contractible_count: usize,
    pub freely_braided: bool,
    pub fully_commutative: bool,
    pub content_maximal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smooth: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<ChainClass>,
}

#[derive(Debug, Clone, Default)]
pub struct CensusOptions {
    /// Largest length visited; `None` means the whole (finite) group.
    pub max_length: Option<usize>,
    /// Compute palindromicity for freely braided elements.
    pub smoothness: bool,
    /// Tally chain classes of content-maximal elements.
    pub chain_classes: bool,
    /// Worker threads; 0 uses the global pool.
    pub jobs: usize,
    /// Line-delimited cache file to resume from and extend.
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub graph: String,
    pub family: Family,
    pub rank: usize,
    /// `None` when the whole group was enumerated.
    pub max_length: Option<usize>,
    pub total: u64,
    pub freely_braided: u64,
    pub fully_commutative: u64,
    pub content_maximal: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smooth_freely_braided: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain_classes: Option<[u64; 7]>,
}

pub const CACHE_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct CacheHeader {
    format_version: u32,
    graph: String,
    family: Family,
    rank: usize,
    edges: Vec<(usize, usize)>,
    max_length: Option<usize>,
    smoothness: bool,
    chain_classes: bool,
}

fn load_cache(path: &Path, header: &CacheHeader) -> Result<BTreeMap<Word, ElementSummary>> {
    let mut out = BTreeMap::new();
    let file = match fs::File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(out),
        Err(e) => return Err(e.into()),
    };
    let mut lines = BufReader::new(file).lines();
    let first = match lines.next() {
        Some(l) => l?,
        None => return Ok(out),
    };
    let found: CacheHeader = serde_json::from_str(&first)
        .map_err(|e| Error::Invalid(format!("bad cache header in {}: {e}", path.display())))?;
    if found != *header {
        return Ok(out);
    }
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        // a torn final line from an interrupted run is skipped
        if let Ok(rec) = serde_json::from_str::<ElementSummary>(&line) {
            out.insert(rec.word.clone(), rec);
        }
    }
    Ok(out)
}

fn summarize(
    graph: &CoxeterGraph,
    item: &Enumerated,
    options: &CensusOptions,
    budgets: &Budgets,
) -> Result<ElementSummary> {
    let rec = graph.classify(&item.element, budgets)?;
    let smooth = if options.smoothness && rec.freely_braided {
        Some(graph.smoothness(&item.element, budgets)?.smooth)
    } else {
        None
    };
    let class = if options.chain_classes && rec.content_maximal {
        Some(chain_class(graph, &item.element, &rec)?)
    } else {
        None
    };
    Ok(ElementSummary {
        word: rec.word,
        length: rec.length,
        contractible_count: rec.contractible_count,
        freely_braided: rec.freely_braided,
        fully_commutative: rec.fully_commutative,
        content_maximal: rec.content_maximal,
        smooth,
        class,
    })
}

fn in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if jobs == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// Classifies every element up to the length bound. The summaries come back
/// in enumeration order whatever the worker count.
pub fn census_elements(
    graph: &CoxeterGraph,
    options: &CensusOptions,
    budgets: &Budgets,
) -> Result<Vec<ElementSummary>> {
    let header = CacheHeader {
        format_version: CACHE_FORMAT_VERSION,
        graph: graph.name(),
        family: graph.family(),
        rank: graph.rank(),
        edges: graph.edges(),
        max_length: options.max_length,
        smoothness: options.smoothness,
        chain_classes: options.chain_classes,
    };
    let cached = match &options.cache {
        Some(p) => load_cache(p, &header)?,
        None => BTreeMap::new(),
    };
    in_pool(options.jobs, || -> Result<Vec<ElementSummary>> {
        let items = enumerate_up_to_length(graph, options.max_length, budgets)?;
        let results: Vec<(bool, ElementSummary)> = items
            .par_iter()
            .map(|item| match cached.get(&item.word) {
                Some(s) => Ok((false, s.clone())),
                None => summarize(graph, item, options, budgets).map(|s| (true, s)),
            })
            .collect::<Result<_>>()?;
        if let Some(path) = &options.cache {
            let fresh = cached.is_empty();
            let mut f = fs::OpenOptions::new()
                .create(true)
                .write(true)
                .append(!fresh)
                .truncate(fresh)
                .open(path)?;
            if fresh {
                writeln!(
                    f,
                    "{}",
                    serde_json::to_string(&header).expect("header serializes")
                )?;
            } else if !fs::read(path)?.ends_with(b"\n") {
                writeln!(f)?;
            }
            for (new, s) in &results {
                if *new {
                    writeln!(
                        f,
                        "{}",
                        serde_json::to_string(s).expect("summary serializes")
                    )?;
                }
            }
        }
        Ok(results.into_iter().map(|(_, s)| s).collect())
    })?
}

/// Aggregated census of a graph.
pub fn census(
    graph: &CoxeterGraph,
    options: &CensusOptions,
    budgets: &Budgets,
) -> Result<CensusReport> {
    let items = census_elements(graph, options, budgets)?;
    Ok(aggregate(graph, options, &items))
}

pub fn aggregate(
    graph: &CoxeterGraph,
    options: &CensusOptions,
    items: &[ElementSummary],
) -> CensusReport {
    let count = |f: &dyn Fn(&ElementSummary) -> bool| items.iter().filter(|s| f(s)).count() as u64;
    let smooth = options
        .smoothness
        .then(|| count(&|s| s.freely_braided && s.smooth == Some(true)));
    let classes = options.chain_classes.then(|| {
        let mut c = [0u64; 7];
        for s in items {
            if let Some(k) = s.class {
                c[k.index()] += 1;
            }
        }
        c
    });
    CensusReport {
        graph: graph.name(),
        family: graph.family(),
        rank: graph.rank(),
        max_length: options.max_length,
        total: items.len() as u64,
        freely_braided: count(&|s| s.freely_braided),
        fully_commutative: count(&|s| s.fully_commutative),
        content_maximal: count(&|s| s.content_maximal),
        smooth_freely_braided: smooth,
        chain_classes: classes,
    }
}

/// Number of content-maximal elements, from a census bounded by
/// [`content_maximal_length_bound`] unless `max_length` overrides it.
pub fn count_content_maximal(
    graph: &CoxeterGraph,
    max_length: Option<usize>,
    jobs: usize,
    budgets: &Budgets,
) -> Result<u64> {
    if max_length.is_none() && !graph.is_finite() {
        return Err(Error::Unsupported(format!(
            "{} is infinite; pass an explicit maximum length",
            graph.name()
        )));
    }
    let bound = max_length.unwrap_or_else(|| content_maximal_length_bound(graph));
    let options = CensusOptions {
        max_length: Some(bound),
        jobs,
        ..Default::default()
    };
    Ok(census(graph, &options, budgets)?.content_maximal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(f: Family, n: usize) -> CoxeterGraph {
        CoxeterGraph::build(f, n).unwrap()
    }

    #[test]
    fn enumeration_sizes() {
        let b = Budgets::default();
        assert_eq!(
            enumerate_up_to_length(&g(Family::A, 2), Some(3), &b)
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            enumerate_up_to_length(&g(Family::E, 9), Some(0), &b)
                .unwrap()
                .len(),
            1
        );
        let a3 = enumerate_up_to_length(&g(Family::A, 3), Some(6), &b).unwrap();
        assert_eq!(a3.len(), 24);
        assert!(a3
            .windows(2)
            .all(|p| (p[0].length, &p[0].word) < (p[1].length, &p[1].word)));
        assert_eq!(
            enumerate_up_to_length(&g(Family::D, 4), None, &b)
                .unwrap()
                .len(),
            192
        );
        assert!(enumerate_up_to_length(&g(Family::E, 9), None, &b).is_err());
        let tight = Budgets {
            max_elements: 10,
            ..b
        };
        assert!(enumerate_up_to_length(&g(Family::A, 3), None, &tight).is_err());
    }

    #[test]
    fn estimates_match_group_orders() {
        assert_eq!(estimated_elements(&g(Family::A, 3), 100), Some(24));
        assert_eq!(estimated_elements(&g(Family::D, 4), 100), Some(192));
        assert_eq!(estimated_elements(&g(Family::E, 6), 100), Some(51840));
        assert_eq!(estimated_elements(&g(Family::E, 8), 1000), Some(696729600));
        let b = Budgets::default();
        let n = enumerate_up_to_length(&g(Family::E, 6), Some(5), &b)
            .unwrap()
            .len() as u128;
        assert_eq!(estimated_elements(&g(Family::E, 6), 5), Some(n));
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(recurrence_f([2, 6, 19], 2), vec![2, 6, 19, 61, 196]);
        assert_eq!(recurrence_f([62, 201, 646], 1)[3], 2077);
        assert_eq!(recurrence_f([652, 2096, 6739], 1)[3], 21661);
    }

    #[test]
    fn series_examples() {
        let a = content_maximal_series(Family::A).unwrap();
        assert_eq!(a.expand(5), vec![0, 2, 6, 19, 61, 196]);
        let d = content_maximal_series(Family::D).unwrap();
        assert_eq!(d.expand(7), vec![0, 0, 0, 0, 62, 201, 646, 2077]);
        let e = content_maximal_series(Family::E).unwrap();
        assert_eq!(&e.expand(8)[6..], &[652, 2096, 6739]);
        assert!(RationalSeries::new(vec![1], vec![2, 1]).is_err());
    }

    #[test]
    fn small_counts() {
        let b = Budgets::default();
        assert_eq!(
            count_content_maximal(&g(Family::A, 1), None, 1, &b).unwrap(),
            2
        );
        assert_eq!(
            count_content_maximal(&g(Family::A, 2), None, 1, &b).unwrap(),
            6
        );
        assert_eq!(
            count_content_maximal(&g(Family::A, 3), None, 1, &b).unwrap(),
            19
        );
        assert!(count_content_maximal(&g(Family::E, 9), None, 1, &b).is_err());
    }

    #[test]
    fn chain_class_examples() {
        let b = Budgets::default();
        let a4 = g(Family::A, 4);
        let cls = |v: &[usize]| {
            let w = a4.element(&Word(v.to_vec())).unwrap();
            let rec = a4.classify(&w, &b).unwrap();
            chain_class(&a4, &w, &rec)
        };
        assert_eq!(cls(&[]).unwrap(), ChainClass::I);
        assert_eq!(cls(&[4]).unwrap(), ChainClass::II);
        assert_eq!(cls(&[3, 4]).unwrap(), ChainClass::III);
        assert_eq!(cls(&[4, 3]).unwrap(), ChainClass::IV);
        assert_eq!(cls(&[4, 3, 4]).unwrap(), ChainClass::V);
        assert!(matches!(
            cls(&[2, 1, 3, 2]),
            Err(Error::NotContentMaximal(_))
        ));
    }

    #[test]
    fn cache_resume_is_transparent() {
        let b = Budgets::default();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a3.jsonl");
        let graph = g(Family::A, 3);
        let opts = CensusOptions {
            cache: Some(path.clone()),
            smoothness: true,
            ..Default::default()
        };
        let first = census(&graph, &opts, &b).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 25);
        // drop some records, then resume
        let kept: Vec<&str> = text.lines().take(10).collect();
        fs::write(&path, kept.join("\n") + "\n").unwrap();
        let second = census(&graph, &opts, &b).unwrap();
        assert_eq!(first, second);
        assert_eq!(fs::read_to_string(&path).unwrap().lines().count(), 25);
        let third = census(&graph, &opts, &b).unwrap();
        assert_eq!(first, third);
        // interrupted mid-record
        fs::write(&path, kept.join("\n") + "\n{\"word\":[1,").unwrap();
        assert_eq!(census(&graph, &opts, &b).unwrap(), first);
        let lines = fs::read_to_string(&path).unwrap().lines().count();
        assert_eq!(lines, 26);
        assert_eq!(census(&graph, &opts, &b).unwrap(), first);
        assert_eq!(fs::read_to_string(&path).unwrap().lines().count(), lines);
    }
}
