use freebraid::enumeration::{census, count_content_maximal, CensusOptions};
use freebraid::{Budgets, CoxeterGraph, Family};

fn cm(g: &CoxeterGraph) -> i128 {
    count_content_maximal(g, None, 1, &Budgets::default()).unwrap() as i128
}

#[test]
fn chain_prefixes_are_smaller_groups() {
    let d6 = CoxeterGraph::build(Family::D, 6).unwrap();
    let e8 = CoxeterGraph::build(Family::E, 8).unwrap();
    // D_2 = A_1 x A_1, D_3 = A_3; E_3 = A_2 x A_1, E_4 = A_4, E_5 = D_5
    let d: Vec<i128> = (2..=5).map(|k| cm(&d6.chain_prefix(k).unwrap())).collect();
    assert_eq!(d, vec![4, 19, 62, 201]);
    let e: Vec<i128> = (3..=6).map(|k| cm(&e8.chain_prefix(k).unwrap())).collect();
    assert_eq!(e, vec![12, 61, 201, 652]);
}

#[test]
fn seeds_across_families() {
    let a = |n| cm(&CoxeterGraph::build(Family::A, n).unwrap());
    let d = |n| cm(&CoxeterGraph::build(Family::D, n).unwrap());
    let e6 = cm(&CoxeterGraph::build(Family::E, 6).unwrap());
    assert_eq!(d(5), 3 * d(4) + a(3) - 4);
    assert_eq!(e6, 3 * d(5) + a(4) - 12);
    assert_eq!(a(5), 3 * a(4) + a(3) - a(2));
}

#[test]
fn full_censuses() {
    let b = Budgets::default();
    let opts = CensusOptions {
        smoothness: true,
        ..Default::default()
    };
    let a4 = census(&CoxeterGraph::build(Family::A, 4).unwrap(), &opts, &b).unwrap();
    assert_eq!(
        (a4.total, a4.fully_commutative, a4.content_maximal),
        (120, 42, 61)
    );
    assert_eq!(a4.smooth_freely_braided, Some(61));
    let d4 = census(&CoxeterGraph::build(Family::D, 4).unwrap(), &opts, &b).unwrap();
    assert_eq!((d4.total, d4.content_maximal), (192, 62));
    assert_eq!(d4.smooth_freely_braided, Some(62));
}
