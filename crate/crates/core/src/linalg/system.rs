//! Homogeneous linear systems and their kernels.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::bareiss;
use super::echelon::echelonize;
use super::modular::{self, CrtAccumulator};
use super::{clear_denominators, RatMatrix, RatVector, Rational};

/// Systems with at most this many dense entries are eliminated fraction-free.
const FRACTION_FREE_LIMIT: usize = 60_000;
/// Primes tried by the multi-modular route before falling back.
const MAX_PRIMES: usize = 24;
/// Extra rows kept beyond the column count when compressing tall systems.
const COMPRESSION_SLACK: usize = 12;

/// How [`LinearSystem::nullspace_with`] eliminates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Pick by size.
    Auto,
    /// Bareiss elimination over the integers.
    FractionFree,
    /// Elimination modulo word-sized primes, rational reconstruction of the
    /// kernel, and exact verification against every original row.
    MultiModular,
}

/// A homogeneous system `A v = 0` assembled row by row. Rows are stored
/// sparsely and cleared to primitive integer rows on insertion.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    cols: usize,
    rows: Vec<Vec<(usize, BigInt)>>,
}

impl LinearSystem {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn from_matrix(m: &RatMatrix) -> Self {
        let mut sys = Self::new(m.cols());
        for i in 0..m.rows() {
            sys.push_row(m.row(i).iter().cloned().enumerate());
        }
        sys
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Adds `sum coef * v[col] = 0`. Repeated columns are summed; zero rows
    /// are dropped.
    pub fn push_row(&mut self, entries: impl IntoIterator<Item = (usize, Rational)>) {
        let mut merged: Vec<(usize, Rational)> = entries.into_iter().collect();
        merged.sort_by_key(|(c, _)| *c);
        let mut row: Vec<(usize, Rational)> = Vec::with_capacity(merged.len());
        for (c, q) in merged {
            assert!(c < self.cols, "column {c} out of range");
            match row.last_mut() {
                Some((last, acc)) if *last == c => *acc += q,
                _ => row.push((c, q)),
            }
        }
        row.retain(|(_, q)| !q.is_zero());
        if !row.is_empty() {
            self.rows.push(clear_denominators(&row));
        }
    }

    pub fn extend(&mut self, other: LinearSystem) {
        assert_eq!(self.cols, other.cols);
        self.rows.extend(other.rows);
    }

    /// Exact check `A v = 0`.
    pub fn is_solution(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.cols);
        let support: Vec<usize> = (0..self.cols).filter(|&c| !v[c].is_zero()).collect();
        if support.is_empty() {
            return true;
        }
        // clear the vector's denominators once so each row is an integer dot product
        let lcm = support.iter().fold(BigInt::one(), |acc, &c| {
            num_integer::Integer::lcm(&acc, v[c].denom())
        });
        let iv: Vec<BigInt> = v
            .iter()
            .map(|q| {
                if q.is_zero() {
                    BigInt::zero()
                } else {
                    q.numer() * (&lcm / q.denom())
                }
            })
            .collect();
        self.rows.par_iter().all(|row| {
            row.iter()
                .filter(|(c, _)| !iv[*c].is_zero())
                .fold(BigInt::zero(), |acc, (c, a)| acc + a * &iv[*c])
                .is_zero()
        })
    }

    pub fn nullspace(&self) -> Vec<RatVector> {
        self.nullspace_with(Strategy::Auto)
    }

    /// Kernel basis in reduced row echelon form (as row vectors), which makes
    /// the output independent of the elimination route.
    pub fn nullspace_with(&self, strategy: Strategy) -> Vec<RatVector> {
        let strategy = match strategy {
            Strategy::Auto if self.rows.len() * self.cols <= FRACTION_FREE_LIMIT => {
                Strategy::FractionFree
            }
            Strategy::Auto => Strategy::MultiModular,
            s => s,
        };
        let raw = match strategy {
            Strategy::MultiModular => self
                .multimodular_kernel()
                .unwrap_or_else(|| self.fraction_free_kernel()),
            _ => self.fraction_free_kernel(),
        };
        echelonize(&raw).into_rows()
    }

    pub fn rank(&self) -> usize {
        self.cols - self.nullspace().len()
    }

    /// Rank modulo the largest word-sized prime: a lower bound for the
    /// rank over Q, equal to it for all but finitely many primes.
    pub fn modular_rank(&self) -> usize {
        let p = modular::primes_below_ceiling().next().expect("a prime");
        let (mut dense, n_rows) = self.reduced_dense(p);
        modular::rref_in_place(&mut dense, n_rows, self.cols, p).len()
    }

    /// The rows modulo `p` as a dense matrix, compressed by random
    /// combinations when there are many more rows than columns.
    fn reduced_dense(&self, p: u64) -> (Vec<u64>, usize) {
        let cols = self.cols;
        let reduced: Vec<Vec<(usize, u64)>> = self
            .rows
            .par_iter()
            .map(|row| {
                row.iter()
                    .map(|(c, v)| (*c, modular::reduce(v, p)))
                    .filter(|(_, v)| *v != 0)
                    .collect()
            })
            .collect();
        if reduced.len() > cols + COMPRESSION_SLACK {
            let n = cols + COMPRESSION_SLACK;
            (modular::compress(&reduced, cols, n, p, p), n)
        } else {
            let mut d = vec![0u64; reduced.len() * cols];
            for (i, row) in reduced.iter().enumerate() {
                for &(c, v) in row {
                    d[i * cols + c] = v;
                }
            }
            (d, reduced.len())
        }
    }

    fn dense_integer_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|row| {
                let mut dense = vec![BigInt::zero(); self.cols];
                for (c, v) in row {
                    dense[*c] = v.clone();
                }
                dense
            })
            .collect()
    }

    fn fraction_free_kernel(&self) -> Vec<RatVector> {
        if self.rows.is_empty() {
            return identity_rows(self.cols);
        }
        bareiss::echelon(self.dense_integer_rows(), self.cols).kernel()
    }

    /// Candidate kernels modulo successive primes are lifted by Chinese
    /// remaindering and rational reconstruction. A candidate is accepted only
    /// when every vector satisfies every original row exactly; since the rank
    /// over Q is at least the rank modulo any prime, the accepted basis is then
    /// the full rational kernel.
    fn multimodular_kernel(&self) -> Option<Vec<RatVector>> {
        if self.rows.is_empty() {
            return Some(identity_rows(self.cols));
        }
        let cols = self.cols;
        let mut best: Option<(Vec<usize>, CrtAccumulator)> = None;
        for p in modular::primes_below_ceiling().take(MAX_PRIMES) {
            let (mut dense, n_rows) = self.reduced_dense(p);
            let pivots = modular::rref_in_place(&mut dense, n_rows, cols, p);
            let free = free_columns(&pivots, cols);
            // residues of -A[r][f]: pivot rows by free columns
            let residues: Vec<u64> = (0..pivots.len())
                .flat_map(|r| free.iter().map(move |&f| (r, f)))
                .map(|(r, f)| (p - dense[r * cols + f]) % p)
                .collect();
            match &mut best {
                Some((piv, acc)) if *piv == pivots => acc.push(&residues, p),
                Some((piv, _)) if piv.len() > pivots.len() => continue, // unlucky prime
                _ => {
                    let mut acc = CrtAccumulator::new(residues.len());
                    acc.push(&residues, p);
                    best = Some((pivots, acc));
                }
            }
            let (pivots, acc) = best.as_ref().expect("set above");
            let Some(values) = acc.reconstruct() else {
                continue;
            };
            let candidate = assemble_kernel(pivots, &free_columns(pivots, cols), &values, cols);
            if candidate.par_iter().all(|v| self.is_solution(v)) {
                return Some(candidate);
            }
        }
        None
    }
}

fn identity_rows(n: usize) -> Vec<RatVector> {
    (0..n)
        .map(|i| {
            let mut v = vec![Rational::zero(); n];
            v[i] = Rational::one();
            v
        })
        .collect()
}

fn free_columns(pivots: &[usize], cols: usize) -> Vec<usize> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols).filter(|&c| !is_pivot[c]).collect()
}

fn assemble_kernel(
    pivots: &[usize],
    free: &[usize],
    values: &[Rational],
    cols: usize,
) -> Vec<RatVector> {
    free.iter()
        .enumerate()
        .map(|(fi, &f)| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = values[r * free.len() + fi].clone();
            }
            v
        })
        .collect()
}

/// Kernel of `m` as an echelonized list of vectors.
pub fn nullspace(m: &RatMatrix) -> Vec<RatVector> {
    LinearSystem::from_matrix(m).nullspace()
}

/// Rank over Q.
pub fn rank(m: &RatMatrix) -> usize {
    m.cols() - nullspace(m).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};

    #[test]
    fn trivial_kernels() {
        let one = RatMatrix::from_i64(1, 1, &[1]).unwrap();
        assert!(nullspace(&one).is_empty());
        let row = RatMatrix::from_i64(1, 2, &[1, 1]).unwrap();
        assert_eq!(nullspace(&row), vec![vec![int(1), int(-1)]]);
        let zero = RatMatrix::zeros(4, 5);
        assert_eq!(nullspace(&zero).len(), 5);
        assert_eq!(rank(&zero), 0);
        assert_eq!(rank(&RatMatrix::identity(3)), 3);
    }

    #[test]
    fn push_row_merges_and_drops_zero_rows() {
        let mut sys = LinearSystem::new(3);
        sys.push_row([(1, rat(1, 2)), (1, rat(-1, 2))]);
        assert_eq!(sys.row_count(), 0);
        sys.push_row([(0, rat(1, 3)), (2, rat(2, 3)), (0, rat(1, 3))]);
        assert_eq!(sys.row_count(), 1);
        assert!(sys.is_solution(&[int(-1), int(7), int(1)]));
    }

    #[test]
    fn both_routes_agree_on_a_tall_rank_deficient_system() {
        // rows are combinations of three fixed vectors, so the rank is 3
        let basis = [
            [1i64, 0, 2, -1, 3, 0, 1, 1],
            [0, 1, 1, 1, -2, 4, 0, 2],
            [3, -1, 0, 0, 1, 1, 1, -5],
        ];
        let mut sys = LinearSystem::new(8);
        for k in 0..40i64 {
            let (a, b, c) = (k % 5 - 2, (k * 7) % 3 - 1, (k * 11) % 7 - 3);
            sys.push_row((0..8).map(|j| (j, int(a * basis[0][j] + b * basis[1][j] + c * basis[2][j]))));
        }
        let ff = sys.nullspace_with(Strategy::FractionFree);
        let mm = sys.nullspace_with(Strategy::MultiModular);
        assert_eq!(ff.len(), 5);
        assert_eq!(ff, mm);
        assert!(ff.iter().all(|v| sys.is_solution(v)));
    }
}
