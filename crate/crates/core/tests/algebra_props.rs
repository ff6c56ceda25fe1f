mod common;

use common::{element, elements};
use octoplane::linalg::rank;
use octoplane::{AlgElement, Algebra};
use proptest::prelude::*;

proptest! {
    #[test]
    fn norm_is_multiplicative((_, [x, y]) in elements::<2>()) {
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn alternative_laws((_, [x, y]) in elements::<2>()) {
        prop_assert_eq!(&(&x * &x) * &y, &x * &(&x * &y));
        prop_assert_eq!(&(&y * &x) * &x, &y * &(&x * &x));
        prop_assert_eq!(&(&x * &y) * &x, &x * &(&y * &x));
    }

    #[test]
    fn moufang_identities((_, [x, y, z]) in elements::<3>()) {
        prop_assert_eq!(&(&x * &y) * &(&z * &x), &(&x * &(&y * &z)) * &x);
        prop_assert_eq!(&x * &(&y * &(&x * &z)), &(&(&x * &y) * &x) * &z);
        prop_assert_eq!(&(&(&z * &x) * &y) * &x, &z * &(&x * &(&y * &x)));
    }

    #[test]
    fn conjugation_reverses_products((_, [x, y]) in elements::<2>()) {
        prop_assert_eq!((&x * &y).conj(), &y.conj() * &x.conj());
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert!((&x * &x.conj()).is_real());
        prop_assert_eq!((&x * &x.conj()).real_part().clone(), x.norm());
    }

    #[test]
    fn inner_product_polarizes_the_norm((_, [x, y]) in elements::<2>()) {
        prop_assert_eq!(x.inner(&y), (&x + &y).norm() - x.norm() - y.norm());
        prop_assert_eq!(x.inner(&x), x.norm() * octoplane::linalg::int(2));
        prop_assert_eq!(x.inner(&y), y.inner(&x));
    }

    #[test]
    fn associator_is_alternating((_, [x, y, z]) in elements::<3>()) {
        let a = AlgElement::associator(&x, &y, &z);
        prop_assert_eq!(AlgElement::associator(&y, &x, &z), -&a);
        prop_assert_eq!(AlgElement::associator(&y, &z, &x), a);
    }

    #[test]
    fn nonzero_octonions_are_invertible(x in element(Algebra::Octonions)) {
        prop_assume!(!x.is_zero());
        prop_assert_eq!(rank(&x.left_mul_matrix()), 8);
    }

    #[test]
    fn split_octonion_left_multiplication_rank(x in element(Algebra::SplitOctonions)) {
        let r = rank(&x.left_mul_matrix());
        if x.norm() == octoplane::linalg::int(0) {
            prop_assert!(r <= 4, "null element has rank {}", r);
        } else {
            prop_assert_eq!(r, 8);
        }
    }
}

#[test]
fn split_octonions_have_zero_divisors() {
    let os = Algebra::SplitOctonions;
    let i4 = AlgElement::basis(os, 4);
    let one = AlgElement::one(os);
    let x = &one + &i4;
    let y = &one - &i4;
    assert!(!x.is_zero() && !y.is_zero());
    assert!((&x * &y).is_zero());
    assert_eq!(x.norm(), octoplane::linalg::int(0));
}

#[test]
fn imaginary_units_square_to_minus_one_over_octonions() {
    for k in 1..8 {
        let e = AlgElement::basis(Algebra::Octonions, k);
        assert_eq!(&e * &e, -&AlgElement::one(Algebra::Octonions));
    }
}
