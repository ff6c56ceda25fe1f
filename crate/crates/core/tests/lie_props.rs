use std::sync::LazyLock;

use octoplane::lie::{derivations_of_algebra, so_of_form, triality_algebra, Structure};
use octoplane::linalg::{int, RatMatrix, Rational};
use octoplane::{Algebra, LieSubalgebra, LinearEndo};
use proptest::prelude::*;

static SMALL: LazyLock<Vec<LieSubalgebra>> = LazyLock::new(|| {
    Algebra::ALL
        .iter()
        .flat_map(|&a| [derivations_of_algebra(a), so_of_form(a), triality_algebra(a)])
        .collect()
});

/// `basis` re-mixed by a unit upper triangular integer matrix with the given
/// entries above the diagonal.
fn remix(basis: &[LinearEndo], coefs: &[i64]) -> Vec<LinearEndo> {
    let d = basis.len();
    (0..d)
        .map(|i| {
            let mut m = basis[i].matrix().clone();
            for j in i + 1..d {
                let c = coefs[(i * d + j) % coefs.len()];
                if c != 0 {
                    m = m.add(&basis[j].matrix().scale(&int(c))).unwrap();
                }
            }
            LinearEndo::new(m).unwrap()
        })
        .collect()
}

fn combination(basis: &[LinearEndo], coefs: &[i64]) -> LinearEndo {
    let n = basis[0].dim();
    let m = basis
        .iter()
        .zip(coefs.iter().cycle())
        .fold(RatMatrix::zeros(n, n), |acc, (b, c)| acc.add(&b.matrix().scale(&int(*c))).unwrap());
    LinearEndo::new(m).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn character_is_basis_independent(k in 0usize..6, coefs in prop::collection::vec(-2i64..=2, 1..40)) {
        let sub = &SMALL[k];
        let original = Structure::of_basis(&sub.basis()).unwrap();
        let mixed = Structure::of_basis(&remix(&sub.basis(), &coefs)).unwrap();
        prop_assert_eq!(original.signature, mixed.signature);
        prop_assert_eq!(original.name, mixed.name);
    }

    #[test]
    fn brackets_stay_in_the_span(k in 0usize..6, a in prop::collection::vec(-3i64..=3, 1..30), b in prop::collection::vec(-3i64..=3, 1..30)) {
        let sub = &SMALL[k];
        let basis = sub.basis();
        let x = combination(&basis, &a);
        let y = combination(&basis, &b);
        prop_assert!(sub.contains(&x.bracket(&y)));
    }

    #[test]
    fn structure_constants_are_antisymmetric(k in 0usize..6, i in 0usize..14, j in 0usize..14, l in 0usize..14) {
        let s = Structure::of_basis(&SMALL[k].basis()).unwrap();
        prop_assert_eq!(s.constant(i, j, l), -s.constant(j, i, l));
        prop_assert_eq!(s.constant(i, i, l), Rational::from_integer(0.into()));
    }
}
