//! Eight-dimensional composition algebras: the octonions and the split
//! octonions.
//!
//! Both are produced by Cayley-Dickson doubling of the quaternions,
//! `(a, b)(c, d) = (ac + mu d̄ b, da + b c̄)`, with `i4 = (0, 1)` and
//! `i(4+k) = ik i4`. The doubling sign `mu = -1` gives the division octonions and
//! `mu = +1` the split octonions. The basis products are tabulated once; every
//! product of basis elements is a signed basis element in both cases.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::LazyLock;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{format_rational, int, RatMatrix, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operands come from different algebras ({0} and {1})")]
    Mixed(Algebra, Algebra),
    #[error("unknown algebra {0:?} (expected \"O\" or \"Os\")")]
    Unknown(String),
}

/// Selector for one of the two real composition algebras of dimension 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algebra {
    #[serde(rename = "O")]
    Octonions,
    #[serde(rename = "Os")]
    SplitOctonions,
}

impl Algebra {
    pub const ALL: [Algebra; 2] = [Algebra::Octonions, Algebra::SplitOctonions];

    pub fn doubling_sign(self) -> i8 {
        match self {
            Algebra::Octonions => -1,
            Algebra::SplitOctonions => 1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Algebra::Octonions => "O",
            Algebra::SplitOctonions => "Os",
        }
    }

    pub fn is_division(self) -> bool {
        self == Algebra::Octonions
    }

    pub fn structure(self) -> &'static CDAlgebra {
        match self {
            Algebra::Octonions => &OCTONIONS,
            Algebra::SplitOctonions => &SPLIT_OCTONIONS,
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Algebra {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "O" => Ok(Algebra::Octonions),
            "Os" => Ok(Algebra::SplitOctonions),
            other => Err(AlgebraError::Unknown(other.to_string())),
        }
    }
}

static OCTONIONS: LazyLock<CDAlgebra> = LazyLock::new(|| CDAlgebra::double_quaternions(-1));
static SPLIT_OCTONIONS: LazyLock<CDAlgebra> = LazyLock::new(|| CDAlgebra::double_quaternions(1));

/// Multiplication table and metric of a doubled quaternion algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CDAlgebra {
    mu: i8,
    table: [[(usize, i8); 8]; 8],
    metric: [i8; 8],
}

/// Quaternion product on integer coordinates `(1, i, j, k)`.
fn quat_mul(a: &[i64], b: &[i64]) -> [i64; 4] {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn quat_conj(a: &[i64]) -> [i64; 4] {
    [a[0], -a[1], -a[2], -a[3]]
}

fn doubled_mul(x: &[i64; 8], y: &[i64; 8], mu: i64) -> [i64; 8] {
    let (a, b) = x.split_at(4);
    let (c, d) = y.split_at(4);
    let ac = quat_mul(a, c);
    let dbar_b = quat_mul(&quat_conj(d), b);
    let da = quat_mul(d, a);
    let b_cbar = quat_mul(b, &quat_conj(c));
    let mut out = [0; 8];
    for k in 0..4 {
        out[k] = ac[k] + mu * dbar_b[k];
        out[k + 4] = da[k] + b_cbar[k];
    }
    out
}

impl CDAlgebra {
    fn double_quaternions(mu: i8) -> Self {
        let unit = |i: usize| {
            let mut e = [0i64; 8];
            e[i] = 1;
            e
        };
        let mut table = [[(0usize, 0i8); 8]; 8];
        for (i, row) in table.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let p = doubled_mul(&unit(i), &unit(j), mu as i64);
                let nz: Vec<usize> = (0..8).filter(|&k| p[k] != 0).collect();
                assert!(nz.len() == 1 && p[nz[0]].abs() == 1, "basis product not a signed unit");
                *cell = (nz[0], p[nz[0]] as i8);
            }
        }
        let mut metric = [1i8; 8];
        for m in metric.iter_mut().skip(4) {
            *m = -mu;
        }
        Self { mu, table, metric }
    }

    pub fn doubling_sign(&self) -> i8 {
        self.mu
    }

    /// `e_i e_j = sign * e_index`.
    pub fn basis_product(&self, i: usize, j: usize) -> (usize, i8) {
        self.table[i][j]
    }

    pub fn table(&self) -> &[[(usize, i8); 8]; 8] {
        &self.table
    }

    /// Diagonal of the norm form: `N(e_k) = metric[k]`.
    pub fn metric(&self) -> &[i8; 8] {
        &self.metric
    }
}

/// JSON dump of a multiplication table.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableDump {
    pub algebra: Algebra,
    pub mu: i8,
    pub metric: [i8; 8],
    /// `table[i][j] = [k, s]` means `i_i i_j = s i_k`.
    pub table: Vec<Vec<(usize, i8)>>,
}

impl TableDump {
    pub fn of(algebra: Algebra) -> Self {
        let s = algebra.structure();
        Self {
            algebra,
            mu: s.mu,
            metric: s.metric,
            table: s.table.iter().map(|r| r.to_vec()).collect(),
        }
    }
}

/// An element `x = sum x_k i_k` of a composition algebra.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgElement {
    algebra: Algebra,
    coords: [Rational; 8],
}

impl AlgElement {
    pub fn zero(algebra: Algebra) -> Self {
        Self {
            algebra,
            coords: std::array::from_fn(|_| Rational::zero()),
        }
    }

    pub fn one(algebra: Algebra) -> Self {
        Self::basis(algebra, 0)
    }

    pub fn basis(algebra: Algebra, k: usize) -> Self {
        let mut e = Self::zero(algebra);
        e.coords[k] = Rational::one();
        e
    }

    pub fn real(algebra: Algebra, r: Rational) -> Self {
        let mut e = Self::zero(algebra);
        e.coords[0] = r;
        e
    }

    pub fn new(algebra: Algebra, coords: [Rational; 8]) -> Self {
        Self { algebra, coords }
    }

    pub fn from_i64(algebra: Algebra, coords: [i64; 8]) -> Self {
        Self::new(algebra, coords.map(int))
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn coords(&self) -> &[Rational; 8] {
        &self.coords
    }

    pub fn coord(&self, k: usize) -> &Rational {
        &self.coords[k]
    }

    pub fn real_part(&self) -> &Rational {
        &self.coords[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// True when all imaginary coordinates vanish.
    pub fn is_real(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    pub fn conj(&self) -> Self {
        let mut c = self.clone();
        for v in c.coords.iter_mut().skip(1) {
            *v = -v.clone();
        }
        c
    }

    /// `x̄x`, a real number: the sum of squares for the octonions and the
    /// (4,4) form for the split octonions.
    pub fn norm(&self) -> Rational {
        let metric = self.algebra.structure().metric();
        self.coords
            .iter()
            .zip(metric)
            .filter(|(v, _)| !v.is_zero())
            .fold(Rational::zero(), |acc, (v, &m)| acc + int(m as i64) * v * v)
    }

    /// Polarization of the norm without the usual half: `<x, x> = 2 N(x)`.
    pub fn inner(&self, other: &Self) -> Rational {
        self.assert_same(other);
        let metric = self.algebra.structure().metric();
        let s = self
            .coords
            .iter()
            .zip(&other.coords)
            .zip(metric)
            .filter(|((a, b), _)| !a.is_zero() && !b.is_zero())
            .fold(Rational::zero(), |acc, ((a, b), &m)| acc + int(m as i64) * a * b);
        s * int(2)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.algebra != other.algebra {
            return Err(AlgebraError::Mixed(self.algebra, other.algebra));
        }
        let s = self.algebra.structure();
        let mut out = Self::zero(self.algebra);
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (k, sign) = s.basis_product(i, j);
                let p = a * b;
                if sign > 0 {
                    out.coords[k] += p;
                } else {
                    out.coords[k] -= p;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            algebra: self.algebra,
            coords: std::array::from_fn(|k| &self.coords[k] * r),
        }
    }

    /// `(xy)z - x(yz)`.
    pub fn associator(x: &Self, y: &Self, z: &Self) -> Self {
        &(&(x * y) * z) - &(x * &(y * z))
    }

    /// Matrix of `y -> x y` in the standard basis.
    pub fn left_mul_matrix(&self) -> RatMatrix {
        let mut m = RatMatrix::zeros(8, 8);
        for j in 0..8 {
            let col = self * &Self::basis(self.algebra, j);
            for i in 0..8 {
                m[(i, j)] = col.coords[i].clone();
            }
        }
        m
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(format_rational).collect()
    }

    fn assert_same(&self, other: &Self) {
        assert_eq!(
            self.algebra, other.algebra,
            "operands come from different algebras"
        );
    }
}

impl fmt::Debug for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| if k == 0 { v.to_string() } else { format!("{v}·i{k}") })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Add for &AlgElement {
    type Output = AlgElement;

    fn add(self, rhs: &AlgElement) -> AlgElement {
        self.assert_same(rhs);
        AlgElement {
            algebra: self.algebra,
            coords: std::array::from_fn(|k| &self.coords[k] + &rhs.coords[k]),
        }
    }
}

impl Sub for &AlgElement {
    type Output = AlgElement;

    fn sub(self, rhs: &AlgElement) -> AlgElement {
        self.assert_same(rhs);
        AlgElement {
            algebra: self.algebra,
            coords: std::array::from_fn(|k| &self.coords[k] - &rhs.coords[k]),
        }
    }
}

impl Neg for &AlgElement {
    type Output = AlgElement;

    fn neg(self) -> AlgElement {
        AlgElement {
            algebra: self.algebra,
            coords: std::array::from_fn(|k| -&self.coords[k]),
        }
    }
}

/// Panics on mixed algebras; use [`AlgElement::try_mul`] for a checked product.
impl Mul for &AlgElement {
    type Output = AlgElement;

    fn mul(self, rhs: &AlgElement) -> AlgElement {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul<&Rational> for &AlgElement {
    type Output = AlgElement;

    fn mul(self, rhs: &Rational) -> AlgElement {
        self.scale(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rank, rat};

    const O: Algebra = Algebra::Octonions;
    const OS: Algebra = Algebra::SplitOctonions;

    #[test]
    fn unit_and_imaginary_squares() {
        for alg in Algebra::ALL {
            let s = alg.structure();
            for k in 0..8 {
                assert_eq!(s.basis_product(0, k), (k, 1));
                assert_eq!(s.basis_product(k, 0), (k, 1));
            }
        }
        let i1 = AlgElement::basis(O, 1);
        assert_eq!(&i1 * &i1, AlgElement::real(O, int(-1)));
        for k in 1..8 {
            let e = AlgElement::basis(O, k);
            assert_eq!(&e * &e, AlgElement::real(O, int(-1)));
        }
        let i4 = AlgElement::basis(OS, 4);
        assert_eq!(&i4 * &i4, AlgElement::real(OS, int(1)));
    }

    #[test]
    fn doubling_convention_for_upper_half() {
        for alg in Algebra::ALL {
            let i4 = AlgElement::basis(alg, 4);
            for k in 1..4 {
                assert_eq!(&AlgElement::basis(alg, k) * &i4, AlgElement::basis(alg, 4 + k));
            }
        }
    }

    #[test]
    fn table_is_alternative_and_multiplicative() {
        for alg in Algebra::ALL {
            let s = alg.structure();
            for i in 0..8 {
                for j in 0..8 {
                    let (_, _) = s.basis_product(i, j);
                    let (ei, ej) = (AlgElement::basis(alg, i), AlgElement::basis(alg, j));
                    assert!(AlgElement::associator(&ei, &ei, &ej).is_zero());
                    assert!(AlgElement::associator(&ei, &ej, &ej).is_zero());
                    assert_eq!((&ei * &ej).norm(), ei.norm() * ej.norm());
                }
            }
        }
    }

    #[test]
    fn conjugation_and_norm_examples() {
        assert_eq!(AlgElement::one(O).conj(), AlgElement::one(O));
        let i3 = AlgElement::basis(O, 3);
        assert_eq!(i3.conj(), -&i3);
        let x = &AlgElement::one(O) + &AlgElement::basis(O, 1);
        assert_eq!(x.norm(), int(2));
        assert_eq!(AlgElement::zero(OS).norm(), int(0));
        assert_eq!(AlgElement::basis(O, 1).inner(&AlgElement::basis(O, 2)), int(0));
        let y = AlgElement::from_i64(OS, [1, 0, 2, 0, 0, 3, 0, 1]);
        assert_eq!(y.norm(), int(1 + 4 - 9 - 1));
        assert_eq!(y.inner(&y), y.norm() * int(2));
        assert_eq!((&y.conj() * &y), AlgElement::real(OS, y.norm()));
    }

    #[test]
    fn mixing_algebras_is_rejected() {
        let a = AlgElement::one(O);
        let b = AlgElement::one(OS);
        assert_eq!(a.try_mul(&b), Err(AlgebraError::Mixed(O, OS)));
    }

    #[test]
    fn split_zero_divisor_and_octonion_left_multiplication() {
        let one = AlgElement::one(OS);
        let i4 = AlgElement::basis(OS, 4);
        assert!((&(&one + &i4) * &(&one - &i4)).is_zero());
        let x = AlgElement::new(O, [rat(1, 2), int(-1), int(0), int(3), rat(2, 3), int(0), int(1), int(-2)]);
        assert_eq!(rank(&x.left_mul_matrix()), 8);
    }

    #[test]
    fn table_dump_serializes() {
        let dump = TableDump::of(OS);
        let json = serde_json::to_string(&dump).unwrap();
        assert!(json.starts_with("{\"algebra\":\"Os\",\"mu\":1"));
        let back: TableDump = serde_json::from_str(&json).unwrap();
        assert_eq!(back, dump);
    }
}
