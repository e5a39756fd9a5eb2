mod common;

use proptest::prelude::*;
use qtsym::codes::*;
use qtsym::shapes::{multinomial, Partition};

#[test]
fn a_weakly_increasing_example() {
    let a: Alphabet = "{1,1,2,3,3,3,4,4}".parse().unwrap();
    assert!(is_a_weakly_increasing(&"23711213".parse().unwrap(), &a).unwrap());
    assert!(!is_a_weakly_increasing(&"32711213".parse().unwrap(), &a).unwrap());
}

#[test]
fn carlitz_counts() {
    let counts: Vec<usize> = (0..=7).map(|n| carlitz_codes(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 24, 120, 720, 5040]);
}

#[test]
fn yamanouchi_words_count_standard_tableaux() {
    let mu: Partition = "(3,2)".parse().unwrap();
    assert_eq!(yamanouchi_words(&mu).len(), 5);
    assert!(is_yamanouchi(&[1, 0, 1, 0, 0]));
    assert!(!is_yamanouchi(&[0, 1]));
}

#[test]
fn code_sets_are_multinomial_sized() {
    for n in 1..=7 {
        for mu in Partition::all(n) {
            assert_eq!(enumerate_codes(&mu, &Alphabet::standard(n)).unwrap().len() as u128, multinomial(mu.parts()));
        }
    }
}

#[test]
fn recursion_matches_brute_force() {
    for n in 1..=6 {
        for mu in Partition::all(n) {
            for a in ["", "1", "2", "1,2"] {
                let extra: Vec<u32> = qtsym::shapes::parse_list(a).unwrap();
                if extra.len() >= n {
                    continue;
                }
                let mut letters: Vec<u32> = (1..=(n - extra.len()) as u32).collect();
                letters.extend(extra);
                let a = Alphabet::new(letters).unwrap();
                assert_eq!(enumerate_codes(&mu, &a).unwrap(), enumerate_codes_brute(&mu, &a).unwrap(), "{mu} {a:?}");
            }
        }
    }
}

#[test]
fn code_text_round_trips() {
    let c: Code = "040000".parse().unwrap();
    assert_eq!(c.to_string(), "040000");
    let wide = Code(vec![1, 12, 0]);
    assert_eq!(wide.to_string(), "1,12,0");
    assert_eq!(wide.to_string().parse::<Code>().unwrap(), wide);
}

#[test]
fn complement_reverses_the_alphabet() {
    let a: Alphabet = "{1,1,2,4}".parse().unwrap();
    assert_eq!(a.complement().letters(), &[1, 3, 4, 4]);
    assert_eq!(a.complement().complement(), a);
}

proptest! {
    #[test]
    fn enumerated_codes_are_members(mu in common::partition(6, 6), extra in 0usize..3) {
        let n = mu.size();
        let mut letters: Vec<u32> = (1..=n as u32).collect();
        for l in letters.iter_mut().skip(n.saturating_sub(extra)) {
            *l = n as u32;
        }
        let a = Alphabet::new(letters).unwrap();
        for c in enumerate_codes(&mu, &a).unwrap() {
            prop_assert!(in_code_set(&c, &mu, &a).unwrap());
        }
    }

    #[test]
    fn carlitz_codes_bound_each_entry(n in 1usize..7) {
        for c in carlitz_codes(n) {
            prop_assert!(is_carlitz(&c));
            prop_assert_eq!(code_monomial(&c).iter().sum::<u32>() as usize, c.sum());
        }
    }
}
