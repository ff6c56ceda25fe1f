//! The Jordan algebra of 3x3 γ-Hermitian matrices over a composition algebra.
//!
//! An element is stored as `(λ1, λ2, λ3; x1, x2, x3)` and stands for the matrix
//!
//! ```text
//! | λ1        x3        g31·x̄2 |
//! | g12·x̄3    λ2        x1     |
//! | x2        g23·x̄1    λ3     |
//! ```
//!
//! with `gij = γi γj`, which is the general solution of `X = γ X̄ᵀ γ`. For
//! `γ = (+,+,+)` this is the usual Hermitian matrix. The 27 real coordinates
//! are ordered `(λ1, λ2, λ3, x1[0..8], x2[0..8], x3[0..8])`, the same order as
//! the Veronese coordinates of the plane.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgElement, Algebra};
use crate::linalg::{format_rational, int, parse_rational, rat, Rational};
use crate::plane::AmbientVector;

pub const JORDAN_DIM: usize = 27;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JordanError {
    #[error("operands differ in algebra or gamma ({0}/{1} vs {2}/{3})")]
    Mismatch(Algebra, Gamma, Algebra, Gamma),
    #[error("invalid gamma {0:?} (expected three signs such as \"+++\" or \"++-\")")]
    BadGamma(String),
    #[error("malformed Jordan element: {0}")]
    Malformed(String),
}

/// Signs `(γ1, γ2, γ3)` of the Hermiticity twist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gamma([i8; 3]);

impl Gamma {
    pub const EUCLIDEAN: Gamma = Gamma([1, 1, 1]);
    pub const LORENTZIAN: Gamma = Gamma([1, 1, -1]);

    pub fn new(signs: [i8; 3]) -> Result<Self, JordanError> {
        if signs.iter().all(|s| s.abs() == 1) {
            Ok(Gamma(signs))
        } else {
            Err(JordanError::BadGamma(format!("{signs:?}")))
        }
    }

    pub fn signs(self) -> [i8; 3] {
        self.0
    }

    /// `γi γj` for the off-diagonal slot opposite to index `nu` (0-based), that
    /// is `g23` for `x1`, `g31` for `x2` and `g12` for `x3`.
    pub fn slot_sign(self, nu: usize) -> i8 {
        let [a, b, c] = self.0;
        match nu {
            0 => b * c,
            1 => c * a,
            2 => a * b,
            _ => panic!("slot index {nu} out of range"),
        }
    }
}

impl Default for Gamma {
    fn default() -> Self {
        Gamma::EUCLIDEAN
    }
}

impl fmt::Display for Gamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.0 {
            f.write_str(if s > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl FromStr for Gamma {
    type Err = JordanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let signs: Vec<i8> = s
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                _ => Err(JordanError::BadGamma(s.to_string())),
            })
            .collect::<Result<_, _>>()?;
        let arr: [i8; 3] = signs
            .try_into()
            .map_err(|_| JordanError::BadGamma(s.to_string()))?;
        Gamma::new(arr)
    }
}

impl Serialize for Gamma {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Gamma {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let arr = <[i8; 3]>::deserialize(d)?;
        Gamma::new(arr).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RankClass {
    #[serde(rename = "rank0")]
    Rank0,
    #[serde(rename = "rank1")]
    Rank1,
    #[serde(rename = "rank2")]
    Rank2,
    #[serde(rename = "rank3")]
    Rank3,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct JordanElement {
    algebra: Algebra,
    gamma: Gamma,
    lambda: [Rational; 3],
    x: [AlgElement; 3],
}

type Matrix3 = [[AlgElement; 3]; 3];

impl JordanElement {
    pub fn new(algebra: Algebra, gamma: Gamma, lambda: [Rational; 3], x: [AlgElement; 3]) -> Self {
        assert!(
            x.iter().all(|e| e.algebra() == algebra),
            "off-diagonal entries come from another algebra"
        );
        Self {
            algebra,
            gamma,
            lambda,
            x,
        }
    }

    pub fn zero(algebra: Algebra, gamma: Gamma) -> Self {
        Self::diagonal(algebra, gamma, [int(0), int(0), int(0)])
    }

    pub fn identity(algebra: Algebra, gamma: Gamma) -> Self {
        Self::diagonal(algebra, gamma, [int(1), int(1), int(1)])
    }

    pub fn diagonal(algebra: Algebra, gamma: Gamma, lambda: [Rational; 3]) -> Self {
        Self::new(
            algebra,
            gamma,
            lambda,
            std::array::from_fn(|_| AlgElement::zero(algebra)),
        )
    }

    /// The diagonal idempotent `E_ii`, `i` in `0..3`.
    pub fn idempotent(algebra: Algebra, gamma: Gamma, i: usize) -> Self {
        let mut lambda = [int(0), int(0), int(0)];
        lambda[i] = int(1);
        Self::diagonal(algebra, gamma, lambda)
    }

    /// The `k`-th standard basis element of the 27 coordinates.
    pub fn basis(algebra: Algebra, gamma: Gamma, k: usize) -> Self {
        let mut coords = vec![int(0); JORDAN_DIM];
        coords[k] = int(1);
        Self::from_coords(algebra, gamma, &coords)
    }

    pub fn from_coords(algebra: Algebra, gamma: Gamma, coords: &[Rational]) -> Self {
        assert_eq!(coords.len(), JORDAN_DIM, "expected 27 coordinates");
        let lambda = std::array::from_fn(|i| coords[i].clone());
        let x = std::array::from_fn(|nu| {
            AlgElement::new(algebra, std::array::from_fn(|k| coords[3 + 8 * nu + k].clone()))
        });
        Self::new(algebra, gamma, lambda, x)
    }

    pub fn to_coords(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self.lambda.to_vec();
        for x in &self.x {
            v.extend(x.coords().iter().cloned());
        }
        v
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn gamma(&self) -> Gamma {
        self.gamma
    }

    pub fn lambda(&self) -> &[Rational; 3] {
        &self.lambda
    }

    pub fn x(&self) -> &[AlgElement; 3] {
        &self.x
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.iter().all(Zero::is_zero) && self.x.iter().all(AlgElement::is_zero)
    }

    pub fn check_compatible(&self, other: &Self) -> Result<(), JordanError> {
        if self.algebra != other.algebra || self.gamma != other.gamma {
            return Err(JordanError::Mismatch(
                self.algebra,
                self.gamma,
                other.algebra,
                other.gamma,
            ));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let a = self.to_coords();
        let b = other.to_coords();
        let c: Vec<Rational> = a.iter().zip(&b).map(|(p, q)| f(p, q)).collect();
        Self::from_coords(self.algebra, self.gamma, &c)
    }

    pub fn add(&self, other: &Self) -> Result<Self, JordanError> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, JordanError> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            algebra: self.algebra,
            gamma: self.gamma,
            lambda: std::array::from_fn(|i| &self.lambda[i] * r),
            x: std::array::from_fn(|i| self.x[i].scale(r)),
        }
    }

    /// The full 3x3 matrix of algebra elements.
    pub fn matrix(&self) -> Matrix3 {
        let alg = self.algebra;
        let g = |nu: usize| int(self.gamma.slot_sign(nu) as i64);
        let [x1, x2, x3] = &self.x;
        let l = |i: usize| AlgElement::real(alg, self.lambda[i].clone());
        [
            [l(0), x3.clone(), x2.conj().scale(&g(1))],
            [x3.conj().scale(&g(2)), l(1), x1.clone()],
            [x2.clone(), x1.conj().scale(&g(0)), l(2)],
        ]
    }

    /// Reads a γ-Hermitian matrix back. The entries below the diagonal and the
    /// imaginary parts of the diagonal are not inspected.
    fn from_matrix(algebra: Algebra, gamma: Gamma, m: &Matrix3) -> Self {
        Self::new(
            algebra,
            gamma,
            std::array::from_fn(|i| m[i][i].real_part().clone()),
            [m[1][2].clone(), m[2][0].clone(), m[0][1].clone()],
        )
    }

    /// `X∘Y = (XY + YX)/2` computed on full matrices.
    pub fn jordan_mul(&self, other: &Self) -> Result<Self, JordanError> {
        self.check_compatible(other)?;
        let a = self.matrix();
        let b = other.matrix();
        let ab = matmul(&a, &b);
        let ba = matmul(&b, &a);
        let half = rat(1, 2);
        let sym: Matrix3 =
            std::array::from_fn(|i| std::array::from_fn(|j| (&ab[i][j] + &ba[i][j]).scale(&half)));
        debug_assert!((0..3).all(|i| sym[i][i].is_real()));
        Ok(Self::from_matrix(self.algebra, self.gamma, &sym))
    }

    pub fn square(&self) -> Self {
        self.jordan_mul(self).expect("self-compatible")
    }

    pub fn trace(&self) -> Rational {
        self.lambda.iter().fold(Rational::zero(), |a, b| a + b)
    }

    /// `(X, Y) = tr(X∘Y) / 2`.
    pub fn bilinear_form(&self, other: &Self) -> Result<Rational, JordanError> {
        Ok(self.jordan_mul(other)?.trace() * rat(1, 2))
    }

    /// `Q(X) = tr(X²) / 2`.
    pub fn quadratic_form(&self) -> Rational {
        self.square().trace() * rat(1, 2)
    }

    /// `X*Y = X∘Y - (X tr Y + Y tr X)/2 + (tr X tr Y - tr(X∘Y)) I/2`, the
    /// polarization of the adjoint, so that `X*X = X♯`.
    pub fn freudenthal(&self, other: &Self) -> Result<Self, JordanError> {
        let xy = self.jordan_mul(other)?;
        let (tx, ty) = (self.trace(), other.trace());
        let half = rat(1, 2);
        let scalar = (&tx * &ty - xy.trace()) * &half;
        let lin = self.scale(&ty).add(&other.scale(&tx))?.scale(&half);
        let id = Self::identity(self.algebra, self.gamma).scale(&scalar);
        xy.sub(&lin)?.add(&id)
    }

    /// Symmetric trilinear form normalized so that `(X,X,X) = det X`:
    /// `(X,Y,Z) = tr(X∘(Y*Z)) / 3`.
    pub fn trilinear(&self, y: &Self, z: &Self) -> Result<Rational, JordanError> {
        let yz = y.freudenthal(z)?;
        Ok(self.jordan_mul(&yz)?.trace() * rat(1, 3))
    }

    pub fn det(&self) -> Rational {
        self.trilinear(self, self).expect("self-compatible")
    }

    /// `λ1λ2λ3 - g23 λ1 N(x1) - g31 λ2 N(x2) - g12 λ3 N(x3) + 2 Re((x1 x2) x3)`.
    pub fn det_expanded(&self) -> Rational {
        let [l1, l2, l3] = &self.lambda;
        let [x1, x2, x3] = &self.x;
        let g = |nu: usize| int(self.gamma.slot_sign(nu) as i64);
        let triple = &(x1 * x2) * x3;
        l1 * l2 * l3 - g(0) * l1 * x1.norm() - g(1) * l2 * x2.norm() - g(2) * l3 * x3.norm()
            + triple.real_part() * int(2)
    }

    /// The adjoint. For `γ = (+,+,+)` this is the explicit entrywise formula;
    /// for other twists it is defined as `X*X`.
    pub fn sharp(&self) -> Self {
        if self.gamma == Gamma::EUCLIDEAN {
            self.sharp_explicit()
        } else {
            self.freudenthal(self).expect("self-compatible")
        }
    }

    /// Entrywise adjoint for the untwisted case.
    pub fn sharp_explicit(&self) -> Self {
        let [l1, l2, l3] = &self.lambda;
        let [x1, x2, x3] = &self.x;
        let lambda = [
            l2 * l3 - x1.norm(),
            l1 * l3 - x2.norm(),
            l1 * l2 - x3.norm(),
        ];
        let y1 = &(&x3.conj() * &x2.conj()) - &x1.scale(l1);
        let y2 = &(&x1.conj() * &x3.conj()) - &x2.scale(l2);
        let y3 = &(&x2.conj() * &x1.conj()) - &x3.scale(l3);
        Self::new(self.algebra, Gamma::EUCLIDEAN, lambda, [y1, y2, y3])
    }

    pub fn rank(&self) -> RankClass {
        if self.is_zero() {
            RankClass::Rank0
        } else if self.sharp().is_zero() {
            RankClass::Rank1
        } else if self.det().is_zero() {
            RankClass::Rank2
        } else {
            RankClass::Rank3
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.square() == *self
    }

    pub fn to_json(&self) -> JordanJson {
        JordanJson {
            lambda: self.lambda.iter().map(format_rational).collect(),
            x: self.x.iter().map(AlgElement::to_strings).collect(),
            mu: self.algebra.doubling_sign(),
            gamma: self.gamma,
        }
    }

    pub fn from_json(j: &JordanJson) -> Result<Self, JordanError> {
        let algebra = match j.mu {
            -1 => Algebra::Octonions,
            1 => Algebra::SplitOctonions,
            other => return Err(JordanError::Malformed(format!("mu = {other}"))),
        };
        let parse = |s: &String| parse_rational(s).map_err(|e| JordanError::Malformed(e.to_string()));
        if j.lambda.len() != 3 || j.x.len() != 3 || j.x.iter().any(|v| v.len() != 8) {
            return Err(JordanError::Malformed("expected 3 reals and 3x8 coordinates".into()));
        }
        let mut coords = Vec::with_capacity(JORDAN_DIM);
        for s in j.lambda.iter().chain(j.x.iter().flatten()) {
            coords.push(parse(s)?);
        }
        Ok(Self::from_coords(algebra, j.gamma, &coords))
    }
}

fn matmul(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut acc = &a[i][0] * &b[0][j];
            for k in 1..3 {
                acc = &acc + &(&a[i][k] * &b[k][j]);
            }
            acc
        })
    })
}

impl fmt::Debug for JordanElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "J[{} {}]({}, {}, {}; {}, {}, {})",
            self.algebra,
            self.gamma,
            self.x[0],
            self.x[1],
            self.x[2],
            self.lambda[0],
            self.lambda[1],
            self.lambda[2]
        )
    }
}

/// Serialized form with rationals as `"p/q"` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanJson {
    pub lambda: Vec<String>,
    pub x: Vec<Vec<String>>,
    pub mu: i8,
    pub gamma: Gamma,
}

/// `(x1, x2, x3; λ1, λ2, λ3)` as a Jordan element. Linear, and a bijection
/// onto the Jordan algebra.
pub fn veronese_to_jordan(w: &AmbientVector, gamma: Gamma) -> JordanElement {
    JordanElement::new(w.algebra(), gamma, w.lambda().clone(), w.x().clone())
}

pub fn jordan_to_veronese(j: &JordanElement) -> AmbientVector {
    AmbientVector::new(j.algebra, j.x.clone(), j.lambda.clone())
}

/// Coordinates of `e_a ∘ e_b` for all pairs of the 27 basis elements.
pub fn product_table(algebra: Algebra, gamma: Gamma) -> Vec<Vec<Vec<Rational>>> {
    use rayon::prelude::*;
    let basis: Vec<JordanElement> = (0..JORDAN_DIM)
        .map(|k| JordanElement::basis(algebra, gamma, k))
        .collect();
    basis
        .par_iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| a.jordan_mul(b).expect("same algebra").to_coords())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const O: Algebra = Algebra::Octonions;
    const E: Gamma = Gamma::EUCLIDEAN;

    fn sample(alg: Algebra, gamma: Gamma, seed: u64) -> JordanElement {
        let mut s = crate::sampling::Sampler::new(seed);
        let coords: Vec<Rational> = (0..JORDAN_DIM).map(|_| s.rational()).collect();
        JordanElement::from_coords(alg, gamma, &coords)
    }

    #[test]
    fn gamma_text_forms() {
        assert_eq!("++-".parse::<Gamma>().unwrap(), Gamma::LORENTZIAN);
        assert_eq!(Gamma::LORENTZIAN.to_string(), "++-");
        assert!("+-".parse::<Gamma>().is_err());
        assert!("+x+".parse::<Gamma>().is_err());
        assert_eq!(Gamma::LORENTZIAN.slot_sign(0), -1);
        assert_eq!(Gamma::LORENTZIAN.slot_sign(2), 1);
    }

    #[test]
    fn unit_and_orthogonal_idempotents() {
        for gamma in [E, Gamma::LORENTZIAN] {
            let x = sample(O, gamma, 3);
            let id = JordanElement::identity(O, gamma);
            assert_eq!(id.jordan_mul(&x).unwrap(), x);
            let e11 = JordanElement::idempotent(O, gamma, 0);
            let e22 = JordanElement::idempotent(O, gamma, 1);
            assert!(e11.jordan_mul(&e22).unwrap().is_zero());
        }
    }

    #[test]
    fn small_values() {
        let id = JordanElement::identity(O, E);
        let e11 = JordanElement::idempotent(O, E, 0);
        assert_eq!(id.trace(), int(3));
        assert_eq!(e11.quadratic_form(), rat(1, 2));
        assert_eq!(id.freudenthal(&id).unwrap(), id);
        assert!(e11.freudenthal(&e11).unwrap().is_zero());
        assert_eq!(id.det(), int(1));
        let d = JordanElement::diagonal(O, E, [int(2), rat(-1, 3), int(5)]);
        assert_eq!(d.det(), rat(-10, 3));
        assert_eq!(id.sharp(), id);
        assert!(e11.sharp().is_zero());
        assert_eq!(JordanElement::zero(O, E).rank(), RankClass::Rank0);
        assert_eq!(id.rank(), RankClass::Rank3);
        assert_eq!(e11.rank(), RankClass::Rank1);
        assert!(e11.is_idempotent());
        assert!(!e11.scale(&int(2)).is_idempotent());
    }

    #[test]
    fn mismatches_are_rejected() {
        let a = JordanElement::identity(O, E);
        let b = JordanElement::identity(O, Gamma::LORENTZIAN);
        let c = JordanElement::identity(Algebra::SplitOctonions, E);
        assert!(a.jordan_mul(&b).is_err());
        assert!(a.bilinear_form(&c).is_err());
    }

    #[test]
    fn sharp_routes_and_determinant_routes_agree() {
        for seed in 0..10 {
            for alg in Algebra::ALL {
                let x = sample(alg, E, seed);
                assert_eq!(x.freudenthal(&x).unwrap(), x.sharp_explicit());
                assert_eq!(x.det(), x.det_expanded());
                for gamma in [Gamma::LORENTZIAN, Gamma::new([-1, 1, -1]).unwrap()] {
                    let y = sample(alg, gamma, seed);
                    assert_eq!(y.det(), y.det_expanded());
                    assert_eq!(y.sharp().sharp(), y.scale(&y.det()));
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let x = sample(Algebra::SplitOctonions, Gamma::LORENTZIAN, 11);
        let text = serde_json::to_string(&x.to_json()).unwrap();
        assert!(text.contains("\"mu\":1"));
        assert!(text.contains("\"gamma\":[1,1,-1]"));
        let back: JordanJson = serde_json::from_str(&text).unwrap();
        assert_eq!(JordanElement::from_json(&back).unwrap(), x);
        let mut bad = back.clone();
        bad.mu = 0;
        assert!(JordanElement::from_json(&bad).is_err());
    }
}
