//! The motion algebras, each as the kernel of one linear system in the
//! entries of an unknown endomorphism.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{LieError, LieSubalgebra, LinearEndo};
use crate::algebra::Algebra;
use crate::jordan::{product_table, veronese_to_jordan, Gamma, JordanElement, JORDAN_DIM};
use crate::linalg::{LinearSystem, RatMatrix, RatVector, Rational};
use crate::plane::{beta, beta_minus, embed_point, AffineChartPoint, AmbientVector};
use crate::sampling::Sampler;

type Sparse = Vec<(usize, Rational)>;

pub const MIN_CONE_SAMPLES: usize = 30;
pub const DEFAULT_CONE_SAMPLES: usize = 60;
/// Extra sample batches tried before the cone kernel is declared unstable.
const MAX_CONE_BATCHES: usize = 4;
/// Bound on the integer chart coordinates of cone samples.
const CONE_SAMPLE_BOUND: i64 = 3;

/// Gram matrix of `inner` on the standard basis.
fn inner_gram(alg: Algebra) -> RatMatrix {
    let metric = alg.structure().metric();
    RatMatrix::diagonal(&metric.map(|e| Rational::from_integer((2 * i64::from(e)).into())))
}

/// Rows of `G L + L^T G = 0`, with the unknown `L[m][a]` at
/// `offset + m * n + a`.
fn push_skew_rows(sys: &mut LinearSystem, gram: &RatMatrix, offset: usize) {
    let n = gram.rows();
    for a in 0..n {
        for b in a..n {
            let row = (0..n).flat_map(|m| {
                [
                    (offset + m * n + a, gram[(m, b)].clone()),
                    (offset + m * n + b, gram[(a, m)].clone()),
                ]
            });
            sys.push_row(row.filter(|(_, q)| !q.is_zero()));
        }
    }
}

fn kernel_subalgebra(label: impl Into<String>, n: usize, sys: &LinearSystem) -> LieSubalgebra {
    LieSubalgebra::from_vectors(label, n, &sys.nullspace())
}

/// Skew maps for the Gram matrix `gram`.
pub fn skew_algebra(label: impl Into<String>, gram: &RatMatrix) -> LieSubalgebra {
    let n = gram.rows();
    let mut sys = LinearSystem::new(n * n);
    push_skew_rows(&mut sys, gram, 0);
    kernel_subalgebra(label, n, &sys)
}

/// Maps skew for `inner`: `so(8)` over the octonions, `so(4,4)` over the split
/// octonions.
pub fn so_of_form(alg: Algebra) -> LieSubalgebra {
    skew_algebra(format!("so({alg})"), &inner_gram(alg))
}

/// The algebra's multiplication as sparse structure constants,
/// `e_i e_j = sum_k t[i][j][k] e_k`.
fn octonion_table(alg: Algebra) -> Vec<Vec<Sparse>> {
    let cd = alg.structure();
    (0..8)
        .map(|i| {
            (0..8)
                .map(|j| {
                    let (k, s) = cd.basis_product(i, j);
                    vec![(k, Rational::from_integer(i64::from(s).into()))]
                })
                .collect()
        })
        .collect()
}

fn sparse_table(dense: Vec<Vec<Vec<Rational>>>) -> Vec<Vec<Sparse>> {
    dense
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| v.into_iter().enumerate().filter(|(_, q)| !q.is_zero()).collect())
                .collect()
        })
        .collect()
}

/// Rows of `A(e_i e_j) = B(e_i) e_j + e_i C(e_j)` over the index pairs
/// `pairs`. The unknowns `A`, `B`, `C` are `n x n` blocks starting at the
/// given offsets; equal offsets give the derivation condition.
fn push_leibniz_rows(
    sys: &mut LinearSystem,
    table: &[Vec<Sparse>],
    pairs: &[(usize, usize)],
    [a_off, b_off, c_off]: [usize; 3],
) {
    let n = table.len();
    let blocks: Vec<Vec<Sparse>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let mut rows: Vec<Sparse> = vec![Vec::new(); n];
            for (k, q) in &table[i][j] {
                for (r, row) in rows.iter_mut().enumerate() {
                    row.push((a_off + r * n + k, q.clone()));
                }
            }
            for m in 0..n {
                for (r, q) in &table[m][j] {
                    rows[*r].push((b_off + m * n + i, -q));
                }
                for (r, q) in &table[i][m] {
                    rows[*r].push((c_off + m * n + j, -q));
                }
            }
            rows
        })
        .collect();
    for rows in blocks {
        for row in rows {
            sys.push_row(row);
        }
    }
}

/// Derivations of the algebra: `D(xy) = D(x) y + x D(y)`.
pub fn derivations_of_algebra(alg: Algebra) -> LieSubalgebra {
    let pairs: Vec<(usize, usize)> = (0..8).flat_map(|i| (0..8).map(move |j| (i, j))).collect();
    let mut sys = LinearSystem::new(64);
    push_leibniz_rows(&mut sys, &octonion_table(alg), &pairs, [0, 0, 0]);
    kernel_subalgebra(format!("der({alg})"), 8, &sys)
}

/// Derivations of the Jordan product on the 27 coordinates. The product is
/// commutative, so the pairs `i <= j` suffice.
pub fn jordan_derivations(alg: Algebra, gamma: Gamma) -> LieSubalgebra {
    let table = sparse_table(product_table(alg, gamma));
    let pairs: Vec<(usize, usize)> = (0..JORDAN_DIM)
        .flat_map(|i| (i..JORDAN_DIM).map(move |j| (i, j)))
        .collect();
    let mut sys = LinearSystem::new(JORDAN_DIM * JORDAN_DIM);
    push_leibniz_rows(&mut sys, &table, &pairs, [0, 0, 0]);
    kernel_subalgebra(format!("der(J3({alg}),{gamma})"), JORDAN_DIM, &sys)
}

/// `(T1, T2, T3)` with each `Ti` skew and `T1(xy) = T2(x) y + x T3(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialityTriple {
    pub t1: LinearEndo,
    pub t2: LinearEndo,
    pub t3: LinearEndo,
}

const TRI_DIM: usize = 24;

fn block_of(flat: &[Rational], block: usize) -> LinearEndo {
    let entries: Vec<Rational> = (0..64)
        .map(|p| flat[(8 * block + p / 8) * TRI_DIM + 8 * block + p % 8].clone())
        .collect();
    LinearEndo::from_flat(8, &entries)
}

/// The triality algebra, with each triple stored as the block diagonal
/// `24 x 24` map `diag(T1, T2, T3)` so that brackets are computed blockwise.
pub fn triality_algebra(alg: Algebra) -> LieSubalgebra {
    let gram = inner_gram(alg);
    let mut sys = LinearSystem::new(192);
    for block in 0..3 {
        push_skew_rows(&mut sys, &gram, 64 * block);
    }
    let pairs: Vec<(usize, usize)> = (0..8).flat_map(|i| (0..8).map(move |j| (i, j))).collect();
    push_leibniz_rows(&mut sys, &octonion_table(alg), &pairs, [0, 64, 128]);
    let embedded: Vec<RatVector> = sys
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut flat = vec![Rational::zero(); TRI_DIM * TRI_DIM];
            for (p, q) in v.into_iter().enumerate() {
                let (block, m, a) = (p / 64, (p % 64) / 8, p % 8);
                flat[(8 * block + m) * TRI_DIM + 8 * block + a] = q;
            }
            flat
        })
        .collect();
    LieSubalgebra::from_vectors(format!("tri({alg})"), TRI_DIM, &embedded)
}

pub fn triality_triples(tri: &LieSubalgebra) -> Vec<TrialityTriple> {
    assert_eq!(tri.ambient_dim(), TRI_DIM, "not a triality algebra");
    tri.echelon()
        .rows()
        .iter()
        .map(|flat| TrialityTriple {
            t1: block_of(flat, 0),
            t2: block_of(flat, 1),
            t3: block_of(flat, 2),
        })
        .collect()
}

/// Image of `(T1, T2, T3) -> T1`.
pub fn first_projection(tri: &LieSubalgebra) -> LieSubalgebra {
    let t1: Vec<LinearEndo> = triality_triples(tri).into_iter().map(|t| t.t1).collect();
    LieSubalgebra::from_endos(format!("{}|T1", tri.label()), 8, &t1)
}

/// Triples with `T1 = T2 = T3`, returned as the common `8 x 8` map.
pub fn diagonal_slice(tri: &LieSubalgebra) -> Result<LieSubalgebra, LieError> {
    let sub = restrict(tri, "diag", |e| {
        let flat = e.flat();
        let (a, b, c) = (block_of(flat, 0), block_of(flat, 1), block_of(flat, 2));
        a.flat()
            .iter()
            .zip(b.flat())
            .map(|(x, y)| x - y)
            .chain(b.flat().iter().zip(c.flat()).map(|(x, y)| x - y))
            .collect()
    })?;
    Ok(first_projection(&sub).with_label(format!("{}|diag", tri.label())))
}

/// Coordinates of the symmetric trilinear form `(e_a, e_b, e_c)`, dense at
/// `(a * 27 + b) * 27 + c`.
fn trilinear_tensor(alg: Algebra, gamma: Gamma) -> Vec<Rational> {
    let n = JORDAN_DIM;
    let basis: Vec<JordanElement> = (0..n).map(|k| JordanElement::basis(alg, gamma, k)).collect();
    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|a| (a..n).flat_map(move |b| (b..n).map(move |c| (a, b, c))))
        .collect();
    let values: Vec<Rational> = triples
        .par_iter()
        .map(|&(a, b, c)| basis[a].trilinear(&basis[b], &basis[c]).expect("same algebra"))
        .collect();
    let mut t = vec![Rational::zero(); n * n * n];
    for (&(a, b, c), v) in triples.iter().zip(values) {
        if v.is_zero() {
            continue;
        }
        for (x, y, z) in [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
            t[(x * n + y) * n + z] = v.clone();
        }
    }
    t
}

/// Maps `L` with `(LX, Y, Z) + (X, LY, Z) + (X, Y, LZ) = 0`, the
/// infinitesimal condition for preserving the cubic norm.
pub fn det_preserving_algebra(alg: Algebra, gamma: Gamma) -> LieSubalgebra {
    let n = JORDAN_DIM;
    let t = trilinear_tensor(alg, gamma);
    let at = |a: usize, b: usize, c: usize| &t[(a * n + b) * n + c];
    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|a| (a..n).flat_map(move |b| (b..n).map(move |c| (a, b, c))))
        .collect();
    let rows: Vec<Sparse> = triples
        .par_iter()
        .map(|&(a, b, c)| {
            let mut row = Vec::new();
            for m in 0..n {
                for (col, q) in [(a, at(m, b, c)), (b, at(a, m, c)), (c, at(a, b, m))] {
                    if !q.is_zero() {
                        row.push((m * n + col, q.clone()));
                    }
                }
            }
            row
        })
        .collect();
    let mut sys = LinearSystem::new(n * n);
    for row in rows {
        sys.push_row(row);
    }
    kernel_subalgebra(format!("det(J3({alg}),{gamma})"), n, &sys)
}

fn cone_sample(s: &mut Sampler, alg: Algebra) -> AmbientVector {
    let x = s.integer_element(alg, CONE_SAMPLE_BOUND);
    let y = s.integer_element(alg, CONE_SAMPLE_BOUND);
    let mut w = embed_point(alg, &AffineChartPoint::Finite(x, y))
        .expect("chart image")
        .representative()
        .clone();
    for _ in 0..s.index(3) {
        w = w.triality();
    }
    w
}

/// Rows of `(L w) * w = 0` for one Veronese vector `w`.
fn cone_rows(alg: Algebra, w: &AmbientVector) -> Vec<Sparse> {
    let n = JORDAN_DIM;
    let x = veronese_to_jordan(w, Gamma::EUCLIDEAN);
    let coords = w.to_coords();
    let products: Vec<Vec<Rational>> = (0..n)
        .map(|m| {
            JordanElement::basis(alg, Gamma::EUCLIDEAN, m)
                .freudenthal(&x)
                .expect("same algebra")
                .to_coords()
        })
        .collect();
    (0..n)
        .map(|k| {
            let mut row = Vec::new();
            for (m, pm) in products.iter().enumerate() {
                if pm[k].is_zero() {
                    continue;
                }
                for (i, wi) in coords.iter().enumerate() {
                    if !wi.is_zero() {
                        row.push((m * n + i, wi * &pm[k]));
                    }
                }
            }
            row
        })
        .collect()
}

fn cone_batch(alg: Algebra, s: &mut Sampler, count: usize) -> LinearSystem {
    let samples: Vec<AmbientVector> = (0..count).map(|_| cone_sample(s, alg)).collect();
    let rows: Vec<Vec<Sparse>> = samples.par_iter().map(|w| cone_rows(alg, w)).collect();
    let mut sys = LinearSystem::new(JORDAN_DIM * JORDAN_DIM);
    for row in rows.into_iter().flatten() {
        sys.push_row(row);
    }
    sys
}

/// Infinitesimal maps of the cone of Veronese vectors, cut out by the
/// tangency condition at random points of the cone, `samples` points per
/// batch. Batches are added until one more leaves the rank unchanged, then
/// the exact kernel is computed and checked against a fresh batch.
///
/// A single point imposes at most 10 independent conditions, since
/// `v -> v * w` has rank 10 for `w` of rank one.
pub fn cone_tangent_algebra(alg: Algebra, samples: usize, seed: u64) -> Result<LieSubalgebra, LieError> {
    if samples < MIN_CONE_SAMPLES {
        return Err(LieError::TooFewSamples {
            min: MIN_CONE_SAMPLES,
            got: samples,
        });
    }
    let mut s = Sampler::new(seed);
    let mut sys = cone_batch(alg, &mut s, samples);
    let mut rank = sys.modular_rank();
    for _ in 0..MAX_CONE_BATCHES {
        let next = cone_batch(alg, &mut s, samples);
        let mut grown = sys.clone();
        grown.extend(next.clone());
        let grown_rank = grown.modular_rank();
        sys = grown;
        if grown_rank > rank {
            rank = grown_rank;
            continue;
        }
        let kernel = sys.nullspace();
        let check = cone_batch(alg, &mut s, samples);
        if kernel.iter().all(|v| check.is_solution(v)) {
            return Ok(LieSubalgebra::from_vectors(format!("cone({alg})"), JORDAN_DIM, &kernel));
        }
        sys.extend(check);
        rank = sys.modular_rank();
    }
    Err(LieError::UnderConstrained(MAX_CONE_BATCHES))
}

/// The elements of `parent` on which the linear map `constraint` vanishes.
/// `constraint` must be linear in the endomorphism.
pub fn restrict<F>(parent: &LieSubalgebra, label: impl Into<String>, constraint: F) -> Result<LieSubalgebra, LieError>
where
    F: Fn(&LinearEndo) -> Vec<Rational> + Sync,
{
    let basis = parent.basis();
    let values: Vec<Vec<Rational>> = basis.par_iter().map(&constraint).collect();
    let rows = values.first().map_or(0, Vec::len);
    let mut sys = LinearSystem::new(basis.len());
    for k in 0..rows {
        sys.push_row(values.iter().enumerate().map(|(r, v)| (r, v[k].clone())));
    }
    let n = parent.ambient_dim();
    let combos: Vec<RatVector> = sys
        .nullspace()
        .into_iter()
        .map(|c| {
            let mut flat = vec![Rational::zero(); n * n];
            for (coef, b) in c.iter().zip(&basis) {
                if coef.is_zero() {
                    continue;
                }
                for (f, q) in flat.iter_mut().zip(b.flat()) {
                    if !q.is_zero() {
                        *f += coef * q;
                    }
                }
            }
            flat
        })
        .collect();
    if combos.is_empty() {
        return Ok(LieSubalgebra::from_vectors(label, n, &[]));
    }
    Ok(LieSubalgebra::from_vectors(label, n, &combos))
}

/// Trace-zero elements.
pub fn trace_zero_part(parent: &LieSubalgebra) -> Result<LieSubalgebra, LieError> {
    restrict(parent, format!("{}|tr0", parent.label()), |e| vec![e.matrix().trace()])
}

/// Symmetric bilinear forms on `V` that a subalgebra can be asked to preserve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvariantForm {
    /// `beta`, the sum of the products of corresponding coordinates.
    Beta,
    /// `beta_minus`, with both third-slot terms negated.
    BetaMinus,
}

impl InvariantForm {
    pub fn gram(self, alg: Algebra) -> RatMatrix {
        let n = JORDAN_DIM;
        let basis: Vec<AmbientVector> = (0..n)
            .map(|k| {
                let mut c = vec![Rational::zero(); n];
                c[k] = Rational::one();
                AmbientVector::from_coords(alg, &c)
            })
            .collect();
        let f = match self {
            InvariantForm::Beta => beta,
            InvariantForm::BetaMinus => beta_minus,
        };
        let data = (0..n * n).map(|p| f(&basis[p / n], &basis[p % n])).collect();
        RatMatrix::from_vec(n, n, data).expect("square")
    }

    pub fn symbol(self) -> &'static str {
        match self {
            InvariantForm::Beta => "beta",
            InvariantForm::BetaMinus => "beta_minus",
        }
    }
}

impl std::fmt::Display for InvariantForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.symbol())
    }
}

impl std::str::FromStr for InvariantForm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "beta" => Ok(InvariantForm::Beta),
            "beta_minus" | "beta-" => Ok(InvariantForm::BetaMinus),
            other => Err(format!("unknown form {other:?}, expected beta or beta_minus")),
        }
    }
}

fn require_ambient(parent: &LieSubalgebra) -> Result<(), LieError> {
    if parent.ambient_dim() == JORDAN_DIM {
        Ok(())
    } else {
        Err(LieError::WrongAmbient {
            expected: JORDAN_DIM,
            found: parent.ambient_dim(),
        })
    }
}

/// Elements of `parent` that are skew for `form`.
pub fn form_preserving_subalgebra(
    parent: &LieSubalgebra,
    alg: Algebra,
    form: InvariantForm,
) -> Result<LieSubalgebra, LieError> {
    require_ambient(parent)?;
    skew_for(parent, &form.gram(alg), format!("{}|{form}", parent.label()))
}

/// Elements of `parent` skew for an arbitrary Gram matrix on `V`.
pub fn skew_for(parent: &LieSubalgebra, gram: &RatMatrix, label: String) -> Result<LieSubalgebra, LieError> {
    let n = parent.ambient_dim();
    restrict(parent, label, |e| {
        let gl = gram.mul(e.matrix()).expect("square");
        (0..n)
            .flat_map(|a| (a..n).map(move |b| (a, b)))
            .map(|(a, b)| &gl[(a, b)] + &gl[(b, a)])
            .collect()
    })
}

/// Elements of `parent` annihilating `x`.
pub fn stabilizer_subalgebra(parent: &LieSubalgebra, x: &JordanElement) -> Result<LieSubalgebra, LieError> {
    require_ambient(parent)?;
    let coords = x.to_coords();
    restrict(parent, format!("{}|stab", parent.label()), |e| e.apply(&coords))
}

#[cfg(test)]
mod tests {
    use super::*;

    const O: Algebra = Algebra::Octonions;

    #[test]
    fn small_algebras_have_expected_dimensions() {
        assert_eq!(so_of_form(O).dim(), 28);
        let der = derivations_of_algebra(O);
        assert_eq!(der.dim(), 14);
        assert!(so_of_form(O).contains_subalgebra(&der));
        let tri = triality_algebra(O);
        assert_eq!(tri.dim(), 28);
        let slice = diagonal_slice(&tri).unwrap();
        assert!(slice.same_span(&der));
        let t1 = first_projection(&tri);
        assert_eq!(t1.dim(), 28);
        assert!(t1.same_span(&so_of_form(O)));
    }

    #[test]
    fn triples_satisfy_the_defining_identity() {
        let tri = triality_algebra(Algebra::SplitOctonions);
        let cd = Algebra::SplitOctonions.structure();
        for t in triality_triples(&tri).iter().take(5) {
            for i in 0..8 {
                for j in 0..8 {
                    let (k, s) = cd.basis_product(i, j);
                    let ei = crate::AlgElement::basis(Algebra::SplitOctonions, i);
                    let ej = crate::AlgElement::basis(Algebra::SplitOctonions, j);
                    let col = |e: &LinearEndo, c: usize| {
                        let v: Vec<Rational> = (0..8).map(|m| e.matrix()[(m, c)].clone()).collect();
                        crate::AlgElement::new(Algebra::SplitOctonions, v.try_into().unwrap())
                    };
                    let lhs = col(&t.t1, k).scale(&Rational::from_integer(i64::from(s).into()));
                    let rhs = &(&col(&t.t2, i) * &ej) + &(&ei * &col(&t.t3, j));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn cone_needs_enough_samples() {
        assert_eq!(
            cone_tangent_algebra(O, 10, 0).unwrap_err(),
            LieError::TooFewSamples { min: 30, got: 10 }
        );
    }
}
