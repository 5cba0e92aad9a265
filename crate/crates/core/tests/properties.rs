use freebraid::pattern::{inversion_count, one_line};
use freebraid::{CoxeterGraph, Family, Side, Word};
use proptest::prelude::*;

fn graphs() -> Vec<CoxeterGraph> {
    vec![
        CoxeterGraph::build(Family::A, 5).unwrap(),
        CoxeterGraph::build(Family::D, 5).unwrap(),
        CoxeterGraph::build(Family::E, 6).unwrap(),
        CoxeterGraph::build(Family::E, 8).unwrap(),
    ]
}

fn word_in(rank: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=rank, 0..=max).prop_map(Word)
}

fn graph_and_words() -> impl Strategy<Value = (usize, Word, Word)> {
    (0..4usize).prop_flat_map(|k| {
        let rank = graphs()[k].rank();
        (Just(k), word_in(rank, 10), word_in(rank, 10))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn concatenation_is_product((k, u, v) in graph_and_words()) {
        let g = &graphs()[k];
        let uv = g.element(&u.concat(&v)).unwrap();
        let prod = g.element(&u).unwrap().multiply(&g.element(&v).unwrap()).unwrap();
        prop_assert_eq!(uv, prod);
    }

    #[test]
    fn inversions_count_length((k, u, _) in graph_and_words()) {
        let g = &graphs()[k];
        let w = g.element(&u).unwrap();
        prop_assert_eq!(g.inversion_set(&w).len(), g.length(&w));
        prop_assert!(g.length(&w) <= u.len());
        prop_assert_eq!(g.length(&g.inverse(&w)), g.length(&w));
    }

    #[test]
    fn descents_drop_length((k, u, _) in graph_and_words()) {
        let g = &graphs()[k];
        let w = g.element(&u).unwrap();
        let l = g.length(&w);
        for i in 1..=g.rank() {
            let right = g.length(&g.mul_right(&w, i).unwrap()) + 1 == l;
            let left = g.length(&g.mul_left(i, &w).unwrap()) + 1 == l;
            prop_assert_eq!(g.is_descent(&w, i, Side::Right).unwrap(), right);
            prop_assert_eq!(g.is_descent(&w, i, Side::Left).unwrap(), left);
        }
    }

    #[test]
    fn canonical_word_is_stable((k, u, _) in graph_and_words()) {
        let g = &graphs()[k];
        let w = g.element(&u).unwrap();
        let c = g.canonical_word(&w);
        prop_assert!(g.is_reduced(&c).unwrap());
        prop_assert_eq!(g.canonical_word(&g.element(&c).unwrap()), c);
    }

    #[test]
    fn one_line_inversions(u in word_in(5, 16)) {
        let g = &graphs()[0];
        let w = g.element(&u).unwrap();
        prop_assert_eq!(inversion_count(&one_line(g, &w).unwrap()), g.length(&w));
    }

    #[test]
    fn word_text_round_trips(u in word_in(8, 12)) {
        let back: Word = u.to_string().parse().unwrap();
        prop_assert_eq!(&back, &u);
        let csv: Word = u.to_csv().parse().unwrap();
        prop_assert_eq!(csv, u);
    }
}
