mod common;

use proptest::prelude::*;
use qtsym::codes::Alphabet;
use qtsym::hook::*;
use qtsym::shapes::{inv, maj, Filling, Letter, Partition};
use qtsym::Error;

/// A random hook filling with at most `max_n` cells over `1..=k`.
fn hook_filling(max_n: usize, k: Letter) -> impl Strategy<Value = Filling> {
    (1..=max_n).prop_flat_map(move |n| (1..=n, proptest::collection::vec(1..=k, n))).prop_map(|(l, letters)| {
        let mut rows = vec![letters[..l].to_vec()];
        rows.extend(letters[l..].iter().map(|&x| vec![x]));
        Filling::new(rows).unwrap()
    })
}

#[test]
fn rejects_non_hooks() {
    let f: Filling = "[[1,2],[3,4]]".parse().unwrap();
    assert_eq!(hook_codes(&f), Err(Error::NotHook));
    assert_eq!(hook_phi(&f), Err(Error::NotHook));
}

#[test]
fn corner_pair_for_a_single_cell() {
    let f = Filling::row(&[7]).unwrap();
    let p = hook_codes(&f).unwrap();
    assert_eq!(p.slots, vec![HookSlot::Corner]);
    // the complement of {7} is {1}
    assert_eq!(hook_phi(&f).unwrap(), Filling::row(&[1]).unwrap());
    assert_eq!(hook_phi(&Filling::row(&[1]).unwrap()).unwrap(), Filling::row(&[1]).unwrap());
}

#[test]
fn exhaustive_small_hooks() {
    for n in 1..=5 {
        for mu in Partition::all(n).into_iter().filter(Partition::is_hook) {
            for c in qtsym::shapes::compositions(n).into_iter().filter(|c| c.len() <= 3) {
                for f in qtsym::shapes::enumerate_fillings(&mu, &qtsym::shapes::Content(c.clone())).unwrap() {
                    let g = hook_phi(&f).unwrap();
                    assert_eq!((inv(&g), maj(&g)), (maj(&f), inv(&f)), "{f} -> {g}");
                    assert_eq!(hook_phi(&g).unwrap(), f);
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn phi_is_an_involution_swapping_statistics(f in hook_filling(9, 4)) {
        let g = hook_phi(&f).unwrap();
        prop_assert_eq!(g.shape(), f.shape().conjugate());
        prop_assert_eq!(inv(&g), maj(&f));
        prop_assert_eq!(maj(&g), inv(&f));
        // the complement x -> max + 1 - x is an involution once 1 is a letter
        if f.letters().contains(&1) {
            prop_assert_eq!(hook_phi(&g).unwrap(), f);
        }
    }

    #[test]
    fn code_pairs_validate_and_invert(f in hook_filling(9, 4)) {
        let p = hook_codes(&f).unwrap();
        let a = Alphabet::new(f.letters()).unwrap();
        prop_assert!(validate_hook_pair(&p, &a, &f.shape()).is_ok());
        prop_assert_eq!(hook_codes_inverse(&p, &a, &f.shape()).unwrap(), f.clone());
        prop_assert_eq!(p.swapped().swapped(), p.clone());
        let sum: u32 = p.x().iter().sum();
        prop_assert_eq!(sum as usize, inv(&f));
        let sum: u32 = p.y().iter().sum();
        prop_assert_eq!(sum as usize, maj(&f));
    }
}
