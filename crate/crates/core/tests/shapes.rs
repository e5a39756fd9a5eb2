mod common;

use proptest::prelude::*;
use qtsym::shapes::*;

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=8).map(|n| Partition::all(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
}

#[test]
fn parse_and_display() {
    let mu: Partition = "(3,2,2)".parse().unwrap();
    assert_eq!(mu.to_string(), "(3,2,2)");
    assert_eq!(mu.conjugate(), "(3,3,1)".parse().unwrap());
    let f: Filling = "[[1,2,3],[2,1]]".parse().unwrap();
    assert_eq!(f.shape(), "(3,2)".parse().unwrap());
    assert_eq!(f.reading_word(), vec![2, 1, 1, 2, 3]);
    assert!("[[1],[2,3]]".parse::<Filling>().is_err());
    assert!("[[0]]".parse::<Filling>().is_err());
    assert!("(2,3)".parse::<Partition>().is_err());
}

#[test]
fn corner_removal_follows_the_last_column() {
    let mu: Partition = "(3,2)".parse().unwrap();
    assert_eq!(mu.corner_removal(1).unwrap(), "(2,2)".parse().unwrap());
    let rect: Partition = "(2,2,2)".parse().unwrap();
    assert_eq!(rect.corner_removal(1).unwrap(), "(2,2,1)".parse().unwrap());
    assert!(rect.corner_removal(4).is_err());
}

#[test]
fn statistics_of_small_fillings() {
    let col = Filling::column(&[3, 2, 4, 1]).unwrap();
    assert_eq!(maj(&col), word_maj(&[3, 2, 4, 1]));
    assert_eq!(inv(&col), 0);
    let row = Filling::row(&[4, 1, 3, 2]).unwrap();
    assert_eq!(inv(&row), word_inv(&[4, 1, 3, 2]));
    assert_eq!(maj(&row), 0);
}

#[test]
fn weak_compositions_count() {
    // C(n + k - 1, k - 1)
    assert_eq!(weak_compositions(4, 3).len(), 15);
    assert_eq!(compositions(5).len(), 16);
    assert_eq!(multinomial(&[2, 1, 1]), 12);
}

#[test]
fn multiset_permutations_are_distinct_and_complete() {
    let all: Vec<Vec<u32>> = MultisetPermutations::new(vec![2, 1, 1, 3]).collect();
    assert_eq!(all.len(), 12);
    let set: std::collections::HashSet<_> = all.iter().collect();
    assert_eq!(set.len(), 12);
}

#[test]
fn filling_enumeration_matches_multinomial() {
    for mu in Partition::all(5) {
        for c in weak_compositions(5, 3) {
            let got = enumerate_fillings(&mu, &Content(c.clone())).unwrap().count() as u128;
            assert_eq!(got, multinomial(&c));
        }
    }
}

proptest! {
    #[test]
    fn attacking_inv_equals_relative_inv(f in common::filling(9, 4, 4)) {
        prop_assert_eq!(inv_attacking(&f), inv_relative(&f) as i64);
    }

    #[test]
    fn conjugate_is_an_involution(mu in common::partition(12, 12)) {
        prop_assert_eq!(mu.conjugate().conjugate(), mu.clone());
        prop_assert_eq!(mu.conjugate().size(), mu.size());
    }

    #[test]
    fn filling_text_round_trips(f in common::filling(8, 4, 9)) {
        prop_assert_eq!(f.to_string().parse::<Filling>().unwrap(), f);
    }

    #[test]
    fn maj_is_the_sum_of_column_majors(f in common::filling(9, 4, 4)) {
        let total: usize = f.columns().iter().map(|c| word_maj(c)).sum();
        prop_assert_eq!(maj(&f), total);
    }

    #[test]
    fn single_rows_count_word_inversions(w in common::word(8, 5)) {
        let f = Filling::row(&w).unwrap();
        prop_assert_eq!(inv(&f), word_inv(&w));
    }
}
