//! Arithmetic modulo word-sized primes: Gauss-Jordan elimination, Chinese
//! remaindering and rational reconstruction. Used by the multi-modular kernel
//! route in [`super::LinearSystem`].

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::Rational;

/// Largest prime below 2^31. Products of two residues fit in a `u64`.
pub const PRIME_CEILING: u64 = 2_147_483_647;

/// Deterministic Miller-Rabin, exact for every `n < 3.3 * 10^24`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u128(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod_u128(base: u64, mut e: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut b = base as u128 % m;
    let mut r = 1u128 % m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r as u64
}

/// Primes descending from [`PRIME_CEILING`].
pub fn primes_below_ceiling() -> impl Iterator<Item = u64> {
    (2..=PRIME_CEILING).rev().filter(|&n| is_prime(n))
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod_u128(a, p - 2, p)
}

pub fn reduce(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

/// Gauss-Jordan elimination in place on a dense row-major matrix over F_p.
/// Returns the pivot columns; the first `pivots.len()` rows hold the reduced
/// row echelon form.
pub fn rref_in_place(a: &mut [u64], rows: usize, cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        if piv != r {
            for j in 0..cols {
                a.swap(piv * cols + j, r * cols + j);
            }
        }
        let inv = inv_mod(a[r * cols + c], p);
        for j in c..cols {
            a[r * cols + j] = a[r * cols + j] * inv % p;
        }
        let pivot_row: Vec<u64> = a[r * cols..(r + 1) * cols].to_vec();
        let support: Vec<usize> = (c..cols).filter(|&j| pivot_row[j] != 0).collect();
        a.par_chunks_mut(cols)
            .enumerate()
            .filter(|(i, row)| *i != r && row[c] != 0)
            .for_each(|(_, row)| {
                let f = p - row[c];
                for &j in &support {
                    row[j] = (row[j] + f * pivot_row[j]) % p;
                }
            });
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of an integer matrix modulo `p`.
pub fn rank_mod(rows: &[Vec<BigInt>], cols: usize, p: u64) -> usize {
    let mut a: Vec<u64> = rows.iter().flatten().map(|v| reduce(v, p)).collect();
    rref_in_place(&mut a, rows.len(), cols, p).len()
}

/// Replaces a tall sparse system by `target_rows` random combinations of its
/// rows. The kernel can only grow, which the caller's exact verification of
/// candidate vectors accounts for.
pub(crate) fn compress(
    rows: &[Vec<(usize, u64)>],
    cols: usize,
    target_rows: usize,
    p: u64,
    seed: u64,
) -> Vec<u64> {
    let mut out = vec![0u64; target_rows * cols];
    out.par_chunks_mut(cols).enumerate().for_each(|(o, acc)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (o as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        for row in rows {
            let coef: u64 = rng.random_range(1..p);
            for &(c, v) in row {
                acc[c] = (acc[c] + coef * v) % p;
            }
        }
    });
    out
}

/// Incremental Chinese remaindering of a vector of residues.
#[derive(Debug, Clone)]
pub struct CrtAccumulator {
    modulus: BigInt,
    values: Vec<BigInt>,
}

impl CrtAccumulator {
    pub fn new(len: usize) -> Self {
        Self {
            modulus: BigInt::one(),
            values: vec![BigInt::zero(); len],
        }
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn push(&mut self, residues: &[u64], p: u64) {
        assert_eq!(residues.len(), self.values.len());
        let pb = BigInt::from(p);
        let m_mod_p = reduce(&self.modulus, p);
        let m_inv = inv_mod(m_mod_p, p);
        let modulus = &self.modulus;
        self.values
            .par_iter_mut()
            .zip(residues.par_iter())
            .for_each(|(x, &r)| {
                let x_mod_p = reduce(x, p);
                let delta = (r + p - x_mod_p) % p * m_inv % p;
                *x += modulus * BigInt::from(delta);
            });
        self.modulus *= pb;
    }

    /// Reconstructs every entry, or `None` if any entry has no small enough
    /// rational preimage yet.
    pub fn reconstruct(&self) -> Option<Vec<Rational>> {
        let bound = (&self.modulus / 2u32).sqrt();
        self.values
            .par_iter()
            .map(|v| rational_reconstruction(v, &self.modulus, &bound))
            .collect()
    }
}

/// Finds `n/d` with `|n|, d <= bound` and `n ≡ a d (mod m)`, if it exists.
pub fn rational_reconstruction(a: &BigInt, m: &BigInt, bound: &BigInt) -> Option<Rational> {
    let a = a.mod_floor(m);
    if &a <= bound {
        return Some(Rational::from_integer(a));
    }
    let (mut r0, mut r1) = (m.clone(), a);
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > bound {
        let (q, r2) = r0.div_rem(&r1);
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > *bound {
        return None;
    }
    if !r1.gcd(&t1).is_one() {
        return None;
    }
    let (n, d) = if t1.sign() == Sign::Minus {
        (-r1, -t1)
    } else {
        (r1, t1)
    };
    Some(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn primes_are_prime() {
        let ps: Vec<u64> = primes_below_ceiling().take(3).collect();
        assert_eq!(ps[0], PRIME_CEILING);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(is_prime(1_000_003));
        assert!(!is_prime(1_000_001));
        assert!(!is_prime(PRIME_CEILING - 2));
    }

    #[test]
    fn reconstruction_recovers_small_fractions() {
        let mut acc = CrtAccumulator::new(3);
        let targets = [rat(-3, 7), rat(22, 5), rat(0, 1)];
        for p in primes_below_ceiling().take(2) {
            let res: Vec<u64> = targets
                .iter()
                .map(|q| {
                    let n = reduce(q.numer(), p);
                    let d = reduce(q.denom(), p);
                    n * inv_mod(d, p) % p
                })
                .collect();
            acc.push(&res, p);
        }
        assert_eq!(acc.reconstruct().unwrap(), targets.to_vec());
    }

    #[test]
    fn rref_mod_p_identifies_dependent_rows() {
        let p = 1_000_003;
        let rows: Vec<Vec<BigInt>> = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        assert_eq!(rank_mod(&rows, 3, p), 2);
    }
}
