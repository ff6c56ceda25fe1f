mod common;

use num_bigint::BigInt;
use octoplane::linalg::modular::rank_mod;
use octoplane::linalg::{
    echelonize, int, rank, symmetric_signature, LinearSystem, RatMatrix, Rational, Strategy as Route,
};
use proptest::prelude::*;

fn matrix(max: usize) -> impl Strategy<Value = RatMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(common::rational(), r * c)
            .prop_map(move |d| RatMatrix::from_vec(r, c, d).unwrap())
    })
}

/// Low-rank matrices, so that kernels are interesting.
fn product_matrix() -> impl Strategy<Value = RatMatrix> {
    (1usize..=6, 1usize..=4, 1usize..=8).prop_flat_map(|(r, k, c)| {
        (
            prop::collection::vec(-3i64..=3, r * k),
            prop::collection::vec(-3i64..=3, k * c),
        )
            .prop_map(move |(a, b)| {
                let a = RatMatrix::from_i64(r, k, &a).unwrap();
                let b = RatMatrix::from_i64(k, c, &b).unwrap();
                a.mul(&b).unwrap()
            })
    })
}

fn unit_lower(n: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(-2i64..=2, n * n).prop_map(move |v| {
        let data: Vec<i64> = (0..n * n)
            .map(|p| match (p / n, p % n) {
                (i, j) if i == j => 1,
                (i, j) if i > j => v[p],
                _ => 0,
            })
            .collect();
        RatMatrix::from_i64(n, n, &data).unwrap()
    })
}

proptest! {
    #[test]
    fn rank_plus_nullity(m in product_matrix()) {
        let sys = LinearSystem::from_matrix(&m);
        let kernel = sys.nullspace();
        prop_assert_eq!(rank(&m) + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|q| *q == int(0)));
        }
    }

    #[test]
    fn elimination_routes_agree(m in product_matrix()) {
        let sys = LinearSystem::from_matrix(&m);
        prop_assert_eq!(
            sys.nullspace_with(Route::FractionFree),
            sys.nullspace_with(Route::MultiModular)
        );
    }

    #[test]
    fn modular_rank_matches_exact_rank(m in product_matrix()) {
        let rows: Vec<Vec<BigInt>> = (0..m.rows())
            .map(|i| m.row(i).iter().map(|q| q.numer().clone()).collect())
            .collect();
        prop_assert_eq!(rank_mod(&rows, m.cols(), 2147483647), rank(&m));
        prop_assert_eq!(LinearSystem::from_matrix(&m).modular_rank(), rank(&m));
    }

    #[test]
    fn signature_is_a_congruence_invariant((m, p) in (1usize..=6).prop_flat_map(|n| (matrix(n).prop_filter("square", move |m| m.rows() == n && m.cols() == n), unit_lower(n)))) {
        let sym = m.add(&m.transpose()).unwrap();
        let moved = p.transpose().mul(&sym).unwrap().mul(&p).unwrap();
        prop_assert_eq!(symmetric_signature(&sym).unwrap(), symmetric_signature(&moved).unwrap());
        let s = symmetric_signature(&sym).unwrap();
        prop_assert_eq!(s.dim(), sym.rows());
        prop_assert_eq!(s.positives + s.negatives, rank(&sym));
    }

    #[test]
    fn echelon_coordinates_recompose(m in matrix(5), c in prop::collection::vec(common::rational(), 5)) {
        let rows: Vec<Vec<Rational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        let basis = echelonize(&rows);
        let target: Vec<Rational> = (0..m.cols())
            .map(|j| rows.iter().zip(&c).map(|(r, k)| &r[j] * k).sum())
            .collect();
        let coords = basis.coordinates(&target).unwrap();
        let back: Vec<Rational> = (0..m.cols())
            .map(|j| basis.rows().iter().zip(&coords).map(|(r, k)| &r[j] * k).sum())
            .collect();
        prop_assert_eq!(back, target);
    }
}

#[test]
fn large_system_takes_the_modular_route() {
    // 300 x 250 sparse integer system with a known 10-dimensional kernel:
    // columns 240..250 are copies of columns 0..10
    let mut sys = LinearSystem::new(250);
    for r in 0..300usize {
        let mut row = Vec::new();
        for k in 0..3usize {
            let c = (r * 7 + k * 31) % 240;
            let v = int(((r + k) % 5) as i64 - 2);
            row.push((c, v.clone()));
            if c < 10 {
                row.push((240 + c, v));
            }
        }
        sys.push_row(row);
    }
    let a = sys.nullspace_with(Route::MultiModular);
    let b = sys.nullspace_with(Route::FractionFree);
    assert_eq!(a, b);
    assert!(a.iter().all(|v| sys.is_solution(v)));
}
