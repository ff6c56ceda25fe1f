//! Fraction-free (Bareiss) elimination over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{RatVector, Rational};

/// Row echelon form computed without leaving the integers.
pub(crate) struct IntegerEchelon {
    /// The first `pivots.len()` rows of the eliminated matrix.
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

/// Bareiss elimination with column skipping. After the step that uses pivot
/// row `r`, every entry below it is a determinant of the original matrix, so
/// the division by the previous pivot is always exact.
pub(crate) fn echelon(mut a: Vec<Vec<BigInt>>, cols: usize) -> IntegerEchelon {
    let n = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = pivot_row[c].clone();
        for row in tail.iter_mut() {
            if row.iter().skip(c).all(Zero::is_zero) {
                continue;
            }
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = &pivot * &row[j] - &factor * &pivot_row[j];
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero(), "inexact Bareiss division");
                row[j] = q;
            }
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    IntegerEchelon {
        rows: a,
        pivots,
        cols,
    }
}

impl IntegerEchelon {
    #[cfg(test)]
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// One kernel vector per free column, by rational back substitution.
    pub fn kernel(&self) -> Vec<RatVector> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (r, &p) in self.pivots.iter().enumerate().rev() {
                    let row = &self.rows[r];
                    let mut acc = Rational::zero();
                    for j in p + 1..self.cols {
                        if !row[j].is_zero() && !v[j].is_zero() {
                            acc += &v[j] * Rational::from_integer(row[j].clone());
                        }
                    }
                    if !acc.is_zero() {
                        v[p] = -acc / Rational::from_integer(row[p].clone());
                    }
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        let e = echelon(big(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]), 3);
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivots, vec![0, 1]);
        let e = echelon(big(&[&[0, 0], &[0, 0]]), 2);
        assert_eq!(e.rank(), 0);
    }

    #[test]
    fn skipped_columns_keep_divisions_exact() {
        // column 1 has no pivot once column 0 is eliminated
        let e = echelon(
            big(&[&[2, 4, 1, 3], &[4, 8, 5, 1], &[6, 12, 2, 7], &[1, 2, 9, 9]]),
            4,
        );
        assert_eq!(e.pivots, vec![0, 2, 3]);
        for v in e.kernel() {
            for row in [[2, 4, 1, 3], [4, 8, 5, 1], [6, 12, 2, 7], [1, 2, 9, 9]] {
                let s = row
                    .iter()
                    .zip(&v)
                    .fold(Rational::zero(), |a, (&x, y)| a + super::super::int(x) * y);
                assert!(s.is_zero());
            }
        }
    }
}
