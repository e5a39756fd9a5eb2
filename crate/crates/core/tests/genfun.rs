mod common;

use proptest::prelude::*;
use qtsym::genfun::*;
use qtsym::shapes::{Content, Partition};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn small_coefficients() {
    let c = Content(vec![1, 1]);
    assert_eq!(macdonald_coefficient(&p("(2)"), &c).unwrap().to_string(), "1 + q");
    assert_eq!(macdonald_coefficient(&p("(1,1)"), &c).unwrap().to_string(), "1 + t");
    assert_eq!(hall_littlewood_coefficient(&p("(1,1)"), &c).unwrap(), QPolynomial::from_coeffs(&[1, 1]));
    assert_eq!(hall_littlewood_coefficient(&p("(2)"), &c).unwrap(), QPolynomial::one());
}

#[test]
fn q_analogues() {
    assert_eq!(q_factorial(3), QPolynomial::from_coeffs(&[1, 2, 2, 1]));
    assert_eq!(q_binomial(4, 2), QPolynomial::from_coeffs(&[1, 1, 2, 1, 1]));
    assert_eq!(q_multinomial(3, &[1, 1, 1]).unwrap(), q_factorial(3));
    assert!(q_multinomial(3, &[1, 1]).is_err());
}

#[test]
fn symmetry_holds_for_small_shapes() {
    for n in 1..=5 {
        for mu in Partition::all(n) {
            assert!(check_symmetry(&mu, n), "{mu}");
            assert!(symmetry_failures(&mu, 3).is_empty());
        }
    }
}

#[test]
fn row_distribution_is_q_factorial() {
    assert_eq!(row_inversion_distribution(&[2, 2, 1], &[1, 2, 3]).unwrap(), q_factorial(3));
    assert_eq!(row_inversion_distribution(&[4, 1, 3, 2], &[1, 1, 2, 2]).unwrap(), q_binomial(4, 2));
    assert!(row_inversion_distribution(&[1], &[1, 2]).is_err());
}

proptest! {
    #[test]
    fn at_one_counts_fillings(mu in common::partition(6, 6), k in 1usize..4) {
        let n = mu.size();
        for c in qtsym::shapes::weak_compositions(n, k) {
            let alpha = Content(c.clone());
            let poly = macdonald_coefficient(&mu, &alpha).unwrap();
            prop_assert_eq!(poly.eval(1, 1) as u128, qtsym::shapes::multinomial(&c));
            prop_assert_eq!(poly.at_q0(), hall_littlewood_coefficient(&mu, &alpha).unwrap());
            prop_assert_eq!(maj_distribution(&mu, &alpha).unwrap().eval(1) as u128, qtsym::shapes::multinomial(&c));
            prop_assert_eq!(inv_distribution(&mu.conjugate(), &alpha).unwrap(), maj_distribution(&mu, &alpha).unwrap());
        }
    }

    #[test]
    fn q_multinomial_evaluates_to_multinomial(parts in proptest::collection::vec(0usize..4, 1..4)) {
        let n = parts.iter().sum();
        let poly = q_multinomial(n, &parts).unwrap();
        prop_assert_eq!(poly.eval(1) as u128, qtsym::shapes::multinomial(&parts));
    }
}
