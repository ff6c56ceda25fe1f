//! Randomized identity checks on a composition algebra.

use octoplane::sampling::Sampler;
use octoplane::{AlgElement, Algebra};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Suite {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    /// Inputs of the first failure, each as its coordinate strings.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Serialize)]
pub struct AlgebraCheck {
    pub algebra: Algebra,
    pub samples: usize,
    pub seed: u64,
    pub suites: Vec<Suite>,
    /// `(x, y)` with `x, y` nonzero and `xy = 0`, when one exists.
    pub zero_divisor: Option<[Vec<String>; 2]>,
    pub passed: bool,
}

fn run<const N: usize>(
    name: &'static str,
    alg: Algebra,
    samples: usize,
    s: &mut Sampler,
    holds: impl Fn(&[AlgElement; N]) -> bool,
) -> Suite {
    let mut suite = Suite {
        name,
        checked: samples,
        failures: 0,
        counterexample: None,
    };
    for _ in 0..samples {
        let xs: [AlgElement; N] = std::array::from_fn(|_| s.element(alg));
        if !holds(&xs) {
            suite.failures += 1;
            suite
                .counterexample
                .get_or_insert_with(|| xs.iter().map(AlgElement::to_strings).collect());
        }
    }
    suite
}

/// `1 + e` and `1 - e` for a basis unit with `N(e) = -1`, so `e² = 1`.
fn split_witness(alg: Algebra) -> Option<(AlgElement, AlgElement)> {
    let k = alg.structure().metric().iter().position(|&m| m < 0)?;
    let (one, e) = (AlgElement::one(alg), AlgElement::basis(alg, k));
    Some((&one + &e, &one - &e))
}

pub fn algebra_check(alg: Algebra, samples: usize, seed: u64) -> AlgebraCheck {
    let mut s = Sampler::new(seed);
    let mut suites = vec![
        run("composition", alg, samples, &mut s, |[x, y]| (x * y).norm() == x.norm() * y.norm()),
        run("left alternative", alg, samples, &mut s, |[x, y]| x * &(x * y) == &(x * x) * y),
        run("right alternative", alg, samples, &mut s, |[x, y]| &(y * x) * x == y * &(x * x)),
        run("flexible", alg, samples, &mut s, |[x, y]| &(x * y) * x == x * &(y * x)),
        run("moufang", alg, samples, &mut s, |[x, y, z]| {
            let left = &(&(z * x) * y) * x == z * &(x * &(y * x));
            let right = x * &(y * &(x * z)) == &(&(x * y) * x) * z;
            let middle = &(x * y) * &(z * x) == &(x * &(y * z)) * x;
            left && right && middle
        }),
    ];
    let zero_divisor = split_witness(alg).filter(|(a, b)| (a * b).is_zero());
    let mut zd = Suite {
        name: "zero divisors",
        checked: samples,
        failures: 0,
        counterexample: None,
    };
    if alg.is_division() {
        // every product of nonzero elements is nonzero
        for _ in 0..samples {
            let (x, y) = (s.nonzero_element(alg), s.nonzero_element(alg));
            if (&x * &y).is_zero() {
                zd.failures += 1;
                zd.counterexample.get_or_insert_with(|| vec![x.to_strings(), y.to_strings()]);
            }
        }
    } else {
        zd.checked = 1;
        zd.failures = usize::from(zero_divisor.is_none());
    }
    suites.push(zd);
    let passed = suites.iter().all(|s| s.failures == 0);
    AlgebraCheck {
        algebra: alg,
        samples,
        seed,
        suites,
        zero_divisor: zero_divisor.map(|(a, b)| [a.to_strings(), b.to_strings()]),
        passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_algebras_pass() {
        for alg in Algebra::ALL {
            let r = algebra_check(alg, 20, 5);
            assert!(r.passed, "{alg}");
            assert_eq!(r.zero_divisor.is_some(), !alg.is_division());
        }
    }
}
