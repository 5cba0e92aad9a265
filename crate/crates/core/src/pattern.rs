//! One-line notation for type A and classical pattern containment.

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, Family};

/// Patterns whose avoidance characterises freely braided permutations.
pub const FREELY_BRAIDED_PATTERNS: [&[usize]; 4] =
    [&[3, 4, 2, 1], &[4, 2, 3, 1], &[4, 3, 1, 2], &[4, 3, 2, 1]];

/// Patterns whose avoidance characterises smooth type-A Schubert varieties.
pub const SMOOTH_PATTERNS: [&[usize]; 2] = [&[3, 4, 1, 2], &[4, 2, 3, 1]];

/// One-line notation `w(1) ... w(n+1)` of an element of `A_n`, where `s_i`
/// swaps `i` and `i + 1`.
pub fn one_line(graph: &CoxeterGraph, w: &GroupElement) -> Result<Vec<usize>> {
    if graph.family() != Family::A {
        return Err(Error::Unsupported(format!(
            "one-line notation needs a type A graph, got {}",
            graph.name()
        )));
    }
    let n = graph.rank();
    // w(alpha_j) = e_{w(j)} - e_{w(j+1)}; the e-coordinates of a root with
    // simple-root coordinates c are c_k - c_{k-1}.
    let e_coords = |j: usize| -> Vec<i32> {
        let c = w.image(j);
        let c = c.coords();
        (0..=n)
            .map(|k| {
                let hi = if k < n { c[k] } else { 0 };
                let lo = if k > 0 { c[k - 1] } else { 0 };
                hi - lo
            })
            .collect()
    };
    let mut perm = vec![0; n + 1];
    for j in 1..=n {
        let e = e_coords(j);
        let plus = e.iter().position(|&x| x == 1).expect("root of A_n");
        let minus = e.iter().position(|&x| x == -1).expect("root of A_n");
        perm[j - 1] = plus + 1;
        perm[j] = minus + 1;
    }
    Ok(perm)
}

pub fn inversion_count(perm: &[usize]) -> usize {
    let mut n = 0;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                n += 1;
            }
        }
    }
    n
}

/// Whether `perm` has a subsequence order-isomorphic to `pattern`.
pub fn contains(perm: &[usize], pattern: &[usize]) -> bool {
    let k = pattern.len();
    if k == 0 {
        return true;
    }
    if k > perm.len() {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let matches = (0..k).all(|a| {
            (a + 1..k).all(|b| (perm[idx[a]] < perm[idx[b]]) == (pattern[a] < pattern[b]))
        });
        if matches {
            return true;
        }
        // next k-combination in lexicographic order
        let mut t = k;
        while t > 0 && idx[t - 1] == perm.len() - k + t - 1 {
            t -= 1;
        }
        if t == 0 {
            return false;
        }
        idx[t - 1] += 1;
        for u in t..k {
            idx[u] = idx[u - 1] + 1;
        }
    }
}

pub fn avoids(perm: &[usize], patterns: &[&[usize]]) -> bool {
    patterns.iter().all(|p| !contains(perm, p))
}

/// Avoids 3421, 4231, 4312 and 4321.
pub fn freely_braided_by_patterns(perm: &[usize]) -> bool {
    avoids(perm, &FREELY_BRAIDED_PATTERNS)
}

/// Avoids 3412 and 4231.
pub fn ls_smooth(perm: &[usize]) -> bool {
    avoids(perm, &SMOOTH_PATTERNS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::Word;

    #[test]
    fn one_line_examples() {
        let a2 = CoxeterGraph::build(Family::A, 2).unwrap();
        let w0 = a2.element(&Word(vec![1, 2, 1])).unwrap();
        assert_eq!(one_line(&a2, &w0).unwrap(), vec![3, 2, 1]);
        assert_eq!(one_line(&a2, &a2.identity()).unwrap(), vec![1, 2, 3]);
        let a3 = CoxeterGraph::build(Family::A, 3).unwrap();
        let x = a3.element(&Word(vec![2, 1, 3, 2])).unwrap();
        assert_eq!(one_line(&a3, &x).unwrap(), vec![3, 4, 1, 2]);
        let s1 = a3.generator(1).unwrap();
        assert_eq!(one_line(&a3, &s1).unwrap(), vec![2, 1, 3, 4]);
        let d4 = CoxeterGraph::build(Family::D, 4).unwrap();
        assert!(one_line(&d4, &d4.identity()).is_err());
    }

    #[test]
    fn containment() {
        assert!(freely_braided_by_patterns(&[3, 2, 1]));
        assert!(!freely_braided_by_patterns(&[4, 2, 3, 1]));
        assert!(freely_braided_by_patterns(&[3, 4, 1, 2]));
        assert!(ls_smooth(&[3, 2, 1]));
        assert!(!ls_smooth(&[4, 2, 3, 1]));
        assert!(!ls_smooth(&[3, 4, 1, 2]));
        assert!(contains(&[5, 1, 4, 2, 3], &[3, 1, 2]));
        assert!(!contains(&[1, 2, 3, 4, 5], &[2, 1]));
        assert_eq!(inversion_count(&[3, 4, 1, 2]), 4);
    }
}
