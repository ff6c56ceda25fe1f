//! Reduced echelon bases of subspaces and coordinates with respect to them.

use num_traits::{One, Zero};

use super::{LinalgError, RatVector, Rational};

/// A subspace stored as the rows of its reduced row echelon form. The leading
/// entry of row `i` is a 1 at `pivots[i]`, and every other row vanishes there,
/// so coordinates of a member are read off at the pivot positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EchelonBasis {
    len: usize,
    rows: Vec<RatVector>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    /// The zero subspace of an `len`-dimensional space.
    pub fn empty(len: usize) -> Self {
        Self {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Length of the ambient vectors.
    pub fn ambient_len(&self) -> usize {
        self.len
    }

    pub fn rows(&self) -> &[RatVector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<RatVector> {
        self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `target` in this basis, checked by recomposition.
    pub fn coordinates(&self, target: &[Rational]) -> Result<RatVector, LinalgError> {
        if target.len() != self.len {
            return Err(LinalgError::Shape {
                expected: format!("vector of length {}", self.len),
                found: format!("vector of length {}", target.len()),
            });
        }
        let coeffs: RatVector = self.pivots.iter().map(|&p| target[p].clone()).collect();
        let mut residual = target.to_vec();
        for (c, row) in coeffs.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (r, v) in residual.iter_mut().zip(row) {
                if !v.is_zero() {
                    *r -= c * v;
                }
            }
        }
        if residual.iter().all(Zero::is_zero) {
            Ok(coeffs)
        } else {
            Err(LinalgError::NotInSpan)
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_ok()
    }

    pub fn contains_space(&self, other: &EchelonBasis) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Reduced echelon forms are unique, so equal spans compare equal.
    pub fn same_span(&self, other: &EchelonBasis) -> bool {
        self == other
    }

    /// Sum of two subspaces.
    pub fn join(&self, other: &EchelonBasis) -> EchelonBasis {
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        let mut b = echelonize(&all);
        if b.rows.is_empty() {
            b.len = self.len;
        }
        b
    }
}

/// Gauss-Jordan over Q on a list of row vectors. Zero and dependent rows are
/// discarded.
pub fn echelonize(vectors: &[RatVector]) -> EchelonBasis {
    let len = vectors.first().map_or(0, Vec::len);
    let mut rows: Vec<RatVector> = vectors
        .iter()
        .filter(|v| v.iter().any(|q| !q.is_zero()))
        .cloned()
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..len {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        if !inv.is_one() {
            for v in rows[r].iter_mut().skip(c) {
                *v *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        let support: Vec<usize> = (c..len).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &support {
                row[j] -= &f * &pivot_row[j];
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    EchelonBasis { len, rows, pivots }
}

/// Coefficients `c` with `sum c_i basis_i = target` for an arbitrary
/// linearly independent basis.
pub fn solve_in_span(basis: &[RatVector], target: &[Rational]) -> Result<RatVector, LinalgError> {
    let n = basis.len();
    let len = target.len();
    if let Some(bad) = basis.iter().find(|b| b.len() != len) {
        return Err(LinalgError::Shape {
            expected: format!("vectors of length {len}"),
            found: format!("vector of length {}", bad.len()),
        });
    }
    // rows are coordinates; columns are basis vectors then the target
    let augmented: Vec<RatVector> = (0..len)
        .map(|k| {
            basis
                .iter()
                .map(|b| b[k].clone())
                .chain(std::iter::once(target[k].clone()))
                .collect()
        })
        .collect();
    let ech = echelonize(&augmented);
    if ech.pivots.contains(&n) {
        return Err(LinalgError::NotInSpan);
    }
    if ech.pivots.len() < n {
        return Err(LinalgError::Shape {
            expected: "linearly independent basis".into(),
            found: format!("rank {} for {} vectors", ech.pivots.len(), n),
        });
    }
    Ok(ech.rows.iter().map(|row| row[n].clone()).collect())
}
