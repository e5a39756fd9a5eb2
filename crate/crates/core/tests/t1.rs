mod common;

use proptest::prelude::*;
use qtsym::genfun::{q_factorial, row_inversion_distribution};
use qtsym::shapes::{inv, maj, row_inversions_by_position, Filling};
use qtsym::t1::*;
use qtsym::Error;

#[test]
fn rejects_repeated_entries() {
    let f: Filling = "[[1,1]]".parse().unwrap();
    assert_eq!(t1_map(&f), Err(Error::RepeatedEntries));
}

#[test]
fn bijective_on_small_shapes() {
    for n in 1..=5 {
        for mu in qtsym::shapes::Partition::all(n) {
            let fillings: Vec<Filling> = qtsym::shapes::enumerate_fillings(&mu, &qtsym::shapes::Content(vec![1; n])).unwrap().collect();
            let images: std::collections::HashSet<Filling> = fillings.iter().map(|f| t1_map(f).unwrap()).collect();
            assert_eq!(images.len(), fillings.len());
        }
    }
}

#[test]
fn distinct_rows_give_q_factorial() {
    assert_eq!(row_inversion_distribution(&[3, 1, 4, 2], &[5, 6, 7, 8]).unwrap(), q_factorial(4));
}

proptest! {
    #[test]
    fn t1_carries_maj_to_inv(f in common::distinct_filling(9, 9)) {
        let g = t1_map(&f).unwrap();
        prop_assert_eq!(g.shape(), f.shape().conjugate());
        prop_assert_eq!(inv(&g), maj(&f));
        prop_assert_eq!(t1_map_inverse(&g).unwrap(), f);
    }

    #[test]
    fn cyclic_insert_realizes_targets(
        base in Just((1..=6).collect::<Vec<u32>>()).prop_shuffle(),
        row in Just((1..=6).collect::<Vec<u32>>()).prop_shuffle(),
    ) {
        let targets = row_inversions_by_position(Some(&base), &row);
        let built = cyclic_row_insert(Some(&base), &row, &targets).unwrap();
        prop_assert_eq!(row_inversions_by_position(Some(&base), &built), targets);
    }
}
