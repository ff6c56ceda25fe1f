use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{LinalgError, RatMatrix, Rational};

/// Sylvester inertia of a real quadratic form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub positives: usize,
    pub negatives: usize,
    pub zeros: usize,
}

impl Signature {
    pub fn dim(&self) -> usize {
        self.positives + self.negatives + self.zeros
    }

    /// `positives - negatives`.
    pub fn character(&self) -> i64 {
        self.positives as i64 - self.negatives as i64
    }
}

/// Inertia by symmetric Gaussian congruence. A zero diagonal with a nonzero
/// off-diagonal entry `m[i][j]` is handled by the congruence `e_i -> e_i + e_j`,
/// which makes the new diagonal `2 m[i][j] + m[j][j]`, or `e_i - e_j` when that
/// vanishes.
pub fn symmetric_signature(m: &RatMatrix) -> Result<Signature, LinalgError> {
    if !m.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    let n = m.rows();
    let mut a: Vec<Vec<Rational>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let (mut pos, mut neg) = (0, 0);
    while !active.is_empty() {
        let pivot = match active.iter().copied().find(|&i| !a[i][i].is_zero()) {
            Some(i) => i,
            None => {
                let Some((i, j)) = active.iter().find_map(|&i| {
                    active
                        .iter()
                        .copied()
                        .find(|&j| j != i && !a[i][j].is_zero())
                        .map(|j| (i, j))
                }) else {
                    break;
                };
                // diagonal entries are all zero here, so e_i + e_j has
                // value 2 a[i][j] != 0
                add_scaled_index(&mut a, &active, i, j);
                i
            }
        };
        let d = a[pivot][pivot].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&k| k != pivot);
        let col: Vec<Rational> = active.iter().map(|&k| a[k][pivot].clone()).collect();
        for (ai, &k) in active.iter().enumerate() {
            if col[ai].is_zero() {
                continue;
            }
            let f = &col[ai] / &d;
            for (bi, &l) in active.iter().enumerate() {
                if !col[bi].is_zero() {
                    let delta = &f * &col[bi];
                    a[k][l] -= delta;
                }
            }
        }
    }
    Ok(Signature {
        positives: pos,
        negatives: neg,
        zeros: n - pos - neg,
    })
}

/// Congruence by the elementary matrix taking basis vector `i` to `e_i + e_j`.
fn add_scaled_index(a: &mut [Vec<Rational>], active: &[usize], i: usize, j: usize) {
    for &k in active {
        let v = a[k][j].clone();
        a[k][i] += v;
    }
    for &k in active {
        let v = a[j][k].clone();
        a[i][k] += v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};

    fn sig(p: usize, n: usize, z: usize) -> Signature {
        Signature {
            positives: p,
            negatives: n,
            zeros: z,
        }
    }

    #[test]
    fn diagonal_forms() {
        let m = RatMatrix::diagonal(&[int(1), int(-1)]);
        assert_eq!(symmetric_signature(&m).unwrap(), sig(1, 1, 0));
        let m = RatMatrix::diagonal(&[int(2), int(3), int(0)]);
        assert_eq!(symmetric_signature(&m).unwrap(), sig(2, 0, 1));
    }

    #[test]
    fn hyperbolic_block_without_diagonal() {
        let m = RatMatrix::from_vec(2, 2, vec![int(0), rat(1, 2), rat(1, 2), int(0)]).unwrap();
        assert_eq!(symmetric_signature(&m).unwrap(), sig(1, 1, 0));
        let m = RatMatrix::from_i64(4, 4, &[0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 3, 0, 0, 3, 0])
            .unwrap();
        assert_eq!(symmetric_signature(&m).unwrap(), sig(2, 2, 0));
    }

    #[test]
    fn rejects_non_symmetric() {
        let m = RatMatrix::from_i64(2, 2, &[1, 2, 3, 4]).unwrap();
        assert_eq!(symmetric_signature(&m), Err(LinalgError::NotSymmetric));
    }
}
