//! Structure constants, Killing form and identification of the real form.

use num_traits::Zero;
use rayon::prelude::*;

use super::{LieError, LieSubalgebra, LinearEndo};
use crate::linalg::{echelonize, symmetric_signature, RatMatrix, RatVector, Rational, Signature};

type Sparse = Vec<(usize, Rational)>;

/// `(dim, character)` of the real forms that occur, with their names.
const KNOWN_FORMS: [((usize, i64), &str); 15] = [
    ((14, -14), "g2(-14)"),
    ((14, 2), "g2(2)"),
    ((28, -28), "so(8)"),
    ((28, 4), "so(4,4)"),
    ((36, -36), "so(9)"),
    ((36, -20), "so(8,1)"),
    ((36, 4), "so(5,4)"),
    ((52, -52), "f4(-52)"),
    ((52, -20), "f4(-20)"),
    ((52, 4), "f4(4)"),
    ((78, -26), "e6(-26)"),
    ((78, 6), "e6(6)"),
    ((78, 2), "e6(2)"),
    ((78, -14), "e6(-14)"),
    ((78, -78), "e6(-78)"),
];

/// Name of the real form with this dimension and Killing character, or
/// `unidentified(dim, character)`.
pub fn identify(dim: usize, character: i64) -> String {
    KNOWN_FORMS
        .iter()
        .find(|(key, _)| *key == (dim, character))
        .map_or_else(|| format!("unidentified({dim}, {character})"), |(_, n)| n.to_string())
}

/// Structure constants `[b_i, b_j] = sum_k c[i][j][k] b_k` and the Killing form
/// in the same basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    dim: usize,
    /// Nonzero `c[i][j][k]` for each `(i, j)`, at `i * dim + j`, sorted by `k`.
    constants: Vec<Sparse>,
    pub killing: RatMatrix,
    pub signature: Signature,
    pub name: String,
}

impl Structure {
    /// Brackets every pair of `basis` and expresses the result in the same
    /// basis. Fails if some bracket leaves the span.
    pub fn of_basis(basis: &[LinearEndo]) -> Result<Self, LieError> {
        let dim = basis.len();
        if dim == 0 {
            return Err(LieError::ZeroDimensional);
        }
        let n = basis[0].dim();
        let coords = SpanCoordinates::new(basis);
        let sparse: Vec<SparseEndo> = basis.iter().map(SparseEndo::new).collect();
        let pairs: Vec<(usize, usize)> = (0..dim).flat_map(|i| (i + 1..dim).map(move |j| (i, j))).collect();
        let upper = pairs
            .par_iter()
            .map(|&(i, j)| {
                let br = sparse[i].bracket(&sparse[j], n);
                coords.solve(&br).ok_or(LieError::NotClosed(i, j))
            })
            .collect::<Result<Vec<Sparse>, LieError>>()?;
        let mut constants = vec![Vec::new(); dim * dim];
        for (&(i, j), c) in pairs.iter().zip(upper) {
            constants[j * dim + i] = c.iter().map(|(k, q)| (*k, -q)).collect();
            constants[i * dim + j] = c;
        }
        let killing = killing_form(dim, &constants);
        let signature = symmetric_signature(&killing)?;
        Ok(Self {
            dim,
            constants,
            name: identify(dim, signature.character()),
            killing,
            signature,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        let row = &self.constants[i * self.dim + j];
        row.binary_search_by_key(&k, |(c, _)| *c)
            .map_or_else(|_| Rational::zero(), |p| row[p].1.clone())
    }

    /// Nonzero coefficients of `[b_i, b_j]`.
    pub fn bracket_coordinates(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.constants[i * self.dim + j]
    }

    pub fn character(&self) -> i64 {
        self.signature.character()
    }

    /// Dimension of the Killing radical.
    pub fn radical_dim(&self) -> usize {
        self.signature.zeros
    }
}

/// `B(i, j) = tr(ad b_i ad b_j) = sum_{k,l} c[i][k][l] c[j][l][k]`.
fn killing_form(dim: usize, constants: &[Sparse]) -> RatMatrix {
    // ad[i] as a dense dim x dim matrix: ad[i][l][k] = c[i][k][l]
    let ad: Vec<Vec<Rational>> = (0..dim)
        .into_par_iter()
        .map(|i| {
            let mut m = vec![Rational::zero(); dim * dim];
            for k in 0..dim {
                for (l, q) in &constants[i * dim + k] {
                    m[l * dim + k] = q.clone();
                }
            }
            m
        })
        .collect();
    let entries: Vec<(usize, usize, Rational)> = (0..dim)
        .into_par_iter()
        .flat_map_iter(|i| {
            let ad = &ad;
            let nz: Vec<(usize, usize, &Rational)> = (0..dim * dim)
                .filter(|&p| !ad[i][p].is_zero())
                .map(|p| (p / dim, p % dim, &ad[i][p]))
                .collect();
            (i..dim).map(move |j| {
                let s = nz.iter().fold(Rational::zero(), |acc, (l, k, q)| {
                    let other = &ad[j][k * dim + l];
                    if other.is_zero() {
                        acc
                    } else {
                        acc + *q * other
                    }
                });
                (i, j, s)
            })
        })
        .collect();
    let mut data = vec![Rational::zero(); dim * dim];
    for (i, j, s) in entries {
        data[j * dim + i] = s.clone();
        data[i * dim + j] = s;
    }
    RatMatrix::from_vec(dim, dim, data).expect("square")
}

/// Completes a subalgebra with its structure and identified name.
pub fn killing_and_identify(mut sub: LieSubalgebra) -> Result<LieSubalgebra, LieError> {
    let s = Structure::of_basis(&sub.basis())?;
    sub.set_structure(s);
    Ok(sub)
}

/// An endomorphism as its nonzero entries, grouped by row.
struct SparseEndo {
    rows: Vec<Vec<(usize, Rational)>>,
}

impl SparseEndo {
    fn new(e: &LinearEndo) -> Self {
        let n = e.dim();
        let flat = e.flat();
        let rows = (0..n)
            .map(|m| {
                (0..n)
                    .filter(|&i| !flat[m * n + i].is_zero())
                    .map(|i| (i, flat[m * n + i].clone()))
                    .collect()
            })
            .collect();
        Self { rows }
    }

    fn product_into(&self, other: &Self, n: usize, sign: bool, out: &mut [Rational]) {
        for (m, row) in self.rows.iter().enumerate() {
            for (i, a) in row {
                for (j, b) in &other.rows[*i] {
                    let p = a * b;
                    if sign {
                        out[m * n + j] += p;
                    } else {
                        out[m * n + j] -= p;
                    }
                }
            }
        }
    }

    fn bracket(&self, other: &Self, n: usize) -> RatVector {
        let mut out = vec![Rational::zero(); n * n];
        self.product_into(other, n, true, &mut out);
        other.product_into(self, n, false, &mut out);
        out
    }
}

/// Coordinates with respect to an arbitrary linearly independent list, via
/// the reduced echelon form of `[B | I]`.
struct SpanCoordinates {
    len: usize,
    pivots: Vec<usize>,
    /// Nonzero entries of each echelon row on the original coordinates.
    rows: Vec<Sparse>,
    /// The corresponding combination of the original basis.
    transforms: Vec<Sparse>,
}

impl SpanCoordinates {
    fn new(basis: &[LinearEndo]) -> Self {
        let d = basis.len();
        let len = basis[0].flat().len();
        let augmented: Vec<RatVector> = basis
            .iter()
            .enumerate()
            .map(|(r, b)| {
                let mut v = b.flat().to_vec();
                v.extend((0..d).map(|c| if c == r { Rational::from_integer(1.into()) } else { Rational::zero() }));
                v
            })
            .collect();
        let ech = echelonize(&augmented);
        assert!(
            ech.pivots().iter().all(|&p| p < len) && ech.dim() == d,
            "basis must be linearly independent"
        );
        let split = |row: &RatVector, range: std::ops::Range<usize>, offset: usize| -> Sparse {
            range
                .filter(|&c| !row[c].is_zero())
                .map(|c| (c - offset, row[c].clone()))
                .collect()
        };
        Self {
            len,
            pivots: ech.pivots().to_vec(),
            rows: ech.rows().iter().map(|r| split(r, 0..len, 0)).collect(),
            transforms: ech.rows().iter().map(|r| split(r, len..len + d, len)).collect(),
        }
    }

    /// Coefficients of `v` in the original basis, or `None` outside the span.
    fn solve(&self, v: &[Rational]) -> Option<Sparse> {
        debug_assert_eq!(v.len(), self.len);
        let mut residual = v.to_vec();
        let mut coeffs = vec![Rational::zero(); self.transforms.len()];
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = residual[p].clone();
            if c.is_zero() {
                continue;
            }
            for (k, q) in &self.rows[r] {
                residual[*k] -= &c * q;
            }
            for (k, q) in &self.transforms[r] {
                coeffs[*k] += &c * q;
            }
        }
        if residual.iter().any(|q| !q.is_zero()) {
            return None;
        }
        Some(
            coeffs
                .into_iter()
                .enumerate()
                .filter(|(_, q)| !q.is_zero())
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn endo(n: usize, entries: &[i64]) -> LinearEndo {
        LinearEndo::new(RatMatrix::from_i64(n, n, entries).unwrap()).unwrap()
    }

    #[test]
    fn sl2_has_split_killing_form() {
        // e, f, h
        let basis = [
            endo(2, &[0, 1, 0, 0]),
            endo(2, &[0, 0, 1, 0]),
            endo(2, &[1, 0, 0, -1]),
        ];
        let s = Structure::of_basis(&basis).unwrap();
        // [e, f] = h
        assert_eq!(s.constant(0, 1, 2), int(1));
        assert_eq!(s.constant(1, 0, 2), int(-1));
        // B(h, h) = 8, B(e, f) = 4
        assert_eq!(s.killing[(2, 2)], int(8));
        assert_eq!(s.killing[(0, 1)], int(4));
        assert_eq!(s.signature, Signature { positives: 2, negatives: 1, zeros: 0 });
        assert_eq!(s.name, "unidentified(3, 1)");
    }

    #[test]
    fn so3_is_compact() {
        let basis = [
            endo(3, &[0, 1, 0, -1, 0, 0, 0, 0, 0]),
            endo(3, &[0, 0, 1, 0, 0, 0, -1, 0, 0]),
            endo(3, &[0, 0, 0, 0, 0, 1, 0, -1, 0]),
        ];
        let s = Structure::of_basis(&basis).unwrap();
        assert_eq!(s.character(), -3);
    }

    #[test]
    fn non_closed_span_is_rejected() {
        let basis = [endo(2, &[0, 1, 0, 0]), endo(2, &[0, 0, 1, 0])];
        assert_eq!(Structure::of_basis(&basis), Err(LieError::NotClosed(0, 1)));
        assert_eq!(Structure::of_basis(&[]), Err(LieError::ZeroDimensional));
    }

    #[test]
    fn names() {
        assert_eq!(identify(52, -20), "f4(-20)");
        assert_eq!(identify(79, -26), "unidentified(79, -26)");
    }
}
