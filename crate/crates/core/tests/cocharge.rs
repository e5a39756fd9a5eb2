mod common;

use std::collections::HashMap;

use proptest::prelude::*;
use qtsym::cocharge::*;
use qtsym::hl::enumerate_inv_zero_fillings;
use qtsym::shapes::{maj, Content, Partition};
use qtsym::Error;

#[test]
fn worked_word() {
    let w = [1, 5, 2, 2, 1, 4, 3, 2, 3, 1, 3];
    assert_eq!(cocharge(&w).unwrap(), 12);
    let r = first_letter_reduction(&w).unwrap();
    assert_eq!(r, vec![5, 1, 2, 1, 4, 3, 2, 2, 1, 3]);
    assert_eq!(cocharge(&r).unwrap(), 12);
}

#[test]
fn simple_words() {
    assert_eq!(cocharge(&[3, 2, 1]).unwrap(), 3);
    assert_eq!(cocharge(&[1, 2, 3]).unwrap(), 0);
    assert_eq!(subword_decomposition(&[1, 1, 1]).unwrap().len(), 3);
    assert_eq!(cocharge(&[2, 2]), Err(Error::NonPartitionContent(vec![0, 2])));
    assert!(first_letter_reduction(&[2, 1]).is_err());
    assert_eq!(cyclage(&[]), Err(Error::EmptyWord));
}

#[test]
fn cocharge_word_of_fillings() {
    for n in 1..=6 {
        for mu in Partition::all(n) {
            for c in qtsym::shapes::compositions(n) {
                for f in enumerate_inv_zero_fillings(&mu, &Content(c.clone())).unwrap() {
                    assert_eq!(cocharge(&cocharge_word(&f)).unwrap(), maj(&f), "{f}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn cyclage_lowers_cocharge(w in common::partition_content_word(10)) {
        let cc = cocharge(&w).unwrap();
        if w[0] == 1 {
            prop_assert_eq!(cocharge(&first_letter_reduction(&w).unwrap()).unwrap(), cc);
        } else {
            prop_assert_eq!(cocharge(&cyclage(&w).unwrap()).unwrap() + 1, cc);
        }
    }

    #[test]
    fn constant_on_knuth_neighbours(w in common::partition_content_word(10)) {
        let cc = cocharge(&w).unwrap();
        for v in knuth_neighbors(&w) {
            prop_assert_eq!(cocharge(&v).unwrap(), cc);
            prop_assert!(knuth_neighbors(&v).contains(&w));
        }
    }

    #[test]
    fn agrees_with_cyclage_characterization(w in common::partition_content_word(7)) {
        let mut memo = HashMap::new();
        prop_assert_eq!(cocharge_by_cyclage(&w, &mut memo).unwrap(), cocharge(&w).unwrap());
        prop_assert!(knuth_class(&w).contains(&w));
    }

    #[test]
    fn subwords_cover_the_word(w in common::partition_content_word(10)) {
        let subs = subword_decomposition(&w).unwrap();
        let mut all: Vec<usize> = subs.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..w.len()).collect::<Vec<_>>());
        for s in &subs {
            let letters: Vec<u32> = s.iter().map(|&p| w[p]).collect();
            prop_assert_eq!(letters, (1..=s.len() as u32).collect::<Vec<_>>());
        }
    }
}
