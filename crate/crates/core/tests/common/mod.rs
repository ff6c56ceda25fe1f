#![allow(dead_code)]

use octoplane::linalg::rat;
use octoplane::{AlgElement, Algebra, Gamma, JordanElement, Rational};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=4, any::<bool>()).prop_map(|(n, d, neg)| rat(if neg { -n } else { n }, d))
}

pub fn algebra() -> impl Strategy<Value = Algebra> {
    prop_oneof![Just(Algebra::Octonions), Just(Algebra::SplitOctonions)]
}

pub fn gamma() -> impl Strategy<Value = Gamma> {
    prop_oneof![Just(Gamma::EUCLIDEAN), Just(Gamma::LORENTZIAN)]
}

pub fn element(alg: Algebra) -> impl Strategy<Value = AlgElement> {
    prop::array::uniform8(rational()).prop_map(move |c| AlgElement::new(alg, c))
}

/// An algebra with `N` elements of it.
pub fn elements<const N: usize>() -> impl Strategy<Value = (Algebra, [AlgElement; N])> {
    algebra().prop_flat_map(|a| (Just(a), prop::array::uniform(element(a))))
}

pub fn jordan(alg: Algebra, gamma: Gamma) -> impl Strategy<Value = JordanElement> {
    prop::collection::vec(rational(), 27).prop_map(move |c| JordanElement::from_coords(alg, gamma, &c))
}

/// An algebra, a twist and `N` Jordan elements.
pub fn jordans<const N: usize>() -> impl Strategy<Value = (Algebra, Gamma, [JordanElement; N])> {
    (algebra(), gamma()).prop_flat_map(|(a, g)| (Just(a), Just(g), prop::array::uniform(jordan(a, g))))
}
