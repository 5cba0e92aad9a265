//! Bruhat order in type A against the tableau criterion: v <= w iff, for
//! every prefix length i, the sorted first i values of v are entrywise at
//! most those of w.

use std::collections::HashSet;

use freebraid::enumeration::enumerate_up_to_length;
use freebraid::pattern::one_line;
use freebraid::{is_palindromic, Budgets, CoxeterGraph, Family};

fn tableau_leq(v: &[usize], w: &[usize]) -> bool {
    (1..=v.len()).all(|i| {
        let mut a = v[..i].to_vec();
        let mut b = w[..i].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a.iter().zip(&b).all(|(x, y)| x <= y)
    })
}

fn check(n: usize) {
    let b = Budgets::default();
    let g = CoxeterGraph::build(Family::A, n).unwrap();
    let all = enumerate_up_to_length(&g, None, &b).unwrap();
    let perms: Vec<Vec<usize>> = all
        .iter()
        .map(|e| one_line(&g, &e.element).unwrap())
        .collect();
    for (w, pw) in all.iter().zip(&perms) {
        let lower: HashSet<_> = g
            .bruhat_lower_set(&w.element, &b)
            .unwrap()
            .into_iter()
            .collect();
        for (v, pv) in all.iter().zip(&perms) {
            assert_eq!(
                lower.contains(&v.element),
                tableau_leq(pv, pw),
                "{pv:?} vs {pw:?}"
            );
        }
        // P_w(1) counts the lower set, and the top coefficient is 1
        let p = g.poincare_polynomial(&w.element, &b).unwrap();
        assert_eq!(p.eval_at_one() as usize, lower.len());
        assert_eq!(p.degree(), Some(w.length));
        assert_eq!(is_palindromic(&p), freebraid::pattern::ls_smooth(pw));
    }
}

#[test]
fn s4_matches_tableau_criterion() {
    check(3);
}

#[test]
fn s5_matches_tableau_criterion() {
    check(4);
}
