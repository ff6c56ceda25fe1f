//! The projective plane over a composition algebra in Veronese coordinates.
//!
//! Points are real rays of Veronese vectors in `V = A³ × R³`, lines are the
//! hyperplanes `w^⊥` of the bilinear form `beta` (elliptic polarity) or
//! `beta_minus` (hyperbolic polarity). Joins and meets go through the
//! Freudenthal product of the Jordan algebra.

mod audit;
mod axioms;
mod chart;

pub use audit::{translation_audit, AuditComponent, TranslationAudit, DOCUMENTED_TRANSLATION_DISCREPANCIES};
pub use axioms::{run_axioms, AxiomFailures, PlaneReport};
pub use chart::{affine_join, affine_meet, embed_line, embed_point, AffineChartLine, AffineChartPoint};

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgElement, Algebra};
use crate::jordan::{jordan_to_veronese, veronese_to_jordan, Gamma};
use crate::linalg::{int, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlaneError {
    #[error("vector violates the Veronese conditions {0:?}")]
    NotVeronese(Vec<VeroneseCondition>),
    #[error("the zero vector does not define a point")]
    ZeroVector,
    #[error("point has trace zero and cannot be scaled to trace one")]
    TraceZero,
    #[error("chart image is not a Veronese vector")]
    DegenerateChart,
    #[error("point is not in the domain of any affine chart")]
    OffChart,
    #[error("points or lines coincide")]
    Coincident,
    #[error("Freudenthal product of the pair vanishes")]
    DegeneratePair,
    #[error("the polar of the computed line is not a Veronese vector")]
    PoleNotVeronese,
    #[error("operands come from different algebras")]
    MixedAlgebras,
}

/// One of the six Veronese equations, indexed by the slot `nu` in `0..3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VeroneseCondition {
    /// `λν x̄ν = x(ν+1) x(ν+2)`
    Product(usize),
    /// `N(xν) = λ(ν+1) λ(ν+2)`
    Norm(usize),
}

/// An arbitrary vector `(x1, x2, x3; λ1, λ2, λ3)` of `V`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AmbientVector {
    algebra: Algebra,
    x: [AlgElement; 3],
    lambda: [Rational; 3],
}

impl AmbientVector {
    pub fn new(algebra: Algebra, x: [AlgElement; 3], lambda: [Rational; 3]) -> Self {
        assert!(x.iter().all(|e| e.algebra() == algebra));
        Self { algebra, x, lambda }
    }

    pub fn zero(algebra: Algebra) -> Self {
        Self::new(
            algebra,
            std::array::from_fn(|_| AlgElement::zero(algebra)),
            [int(0), int(0), int(0)],
        )
    }

    /// Only the real part, `(0, 0, 0; λ1, λ2, λ3)`.
    pub fn real(algebra: Algebra, lambda: [Rational; 3]) -> Self {
        let mut v = Self::zero(algebra);
        v.lambda = lambda;
        v
    }

    /// From the 27 coordinates `(λ1, λ2, λ3, x1, x2, x3)`.
    pub fn from_coords(algebra: Algebra, coords: &[Rational]) -> Self {
        jordan_to_veronese(&crate::jordan::JordanElement::from_coords(
            algebra,
            Gamma::EUCLIDEAN,
            coords,
        ))
    }

    pub fn to_coords(&self) -> Vec<Rational> {
        veronese_to_jordan(self, Gamma::EUCLIDEAN).to_coords()
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn x(&self) -> &[AlgElement; 3] {
        &self.x
    }

    pub fn lambda(&self) -> &[Rational; 3] {
        &self.lambda
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.iter().all(Zero::is_zero) && self.x.iter().all(AlgElement::is_zero)
    }

    pub fn trace(&self) -> Rational {
        self.lambda.iter().fold(Rational::zero(), |a, b| a + b)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            algebra: self.algebra,
            x: std::array::from_fn(|i| self.x[i].scale(r)),
            lambda: std::array::from_fn(|i| &self.lambda[i] * r),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.algebra, other.algebra);
        Self {
            algebra: self.algebra,
            x: std::array::from_fn(|i| &self.x[i] + &other.x[i]),
            lambda: std::array::from_fn(|i| &self.lambda[i] + &other.lambda[i]),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    /// The Veronese equations that fail.
    pub fn violations(&self) -> Vec<VeroneseCondition> {
        let mut out = Vec::new();
        for nu in 0..3 {
            let (a, b) = ((nu + 1) % 3, (nu + 2) % 3);
            let lhs = self.x[nu].conj().scale(&self.lambda[nu]);
            if lhs != &self.x[a] * &self.x[b] {
                out.push(VeroneseCondition::Product(nu));
            }
            if self.x[nu].norm() != &self.lambda[a] * &self.lambda[b] {
                out.push(VeroneseCondition::Norm(nu));
            }
        }
        out
    }

    pub fn is_veronese(&self) -> bool {
        self.violations().is_empty()
    }

    /// Cyclic shift `(x1, x2, x3; λ1, λ2, λ3) -> (x2, x3, x1; λ2, λ3, λ1)`.
    pub fn triality(&self) -> Self {
        let [x1, x2, x3] = self.x.clone();
        let [l1, l2, l3] = self.lambda.clone();
        Self::new(self.algebra, [x2, x3, x1], [l2, l3, l1])
    }

    /// Negates the third slot, so that `beta_minus(v, w) = beta(v, w.flip_third())`.
    pub fn flip_third(&self) -> Self {
        let mut v = self.clone();
        v.x[2] = -&v.x[2];
        v.lambda[2] = -&v.lambda[2];
        v
    }

    pub fn to_strings(&self) -> (Vec<Vec<String>>, Vec<String>) {
        (
            self.x.iter().map(AlgElement::to_strings).collect(),
            self.lambda.iter().map(crate::linalg::format_rational).collect(),
        )
    }
}

impl fmt::Debug for AmbientVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}; {}, {}, {})",
            self.x[0], self.x[1], self.x[2], self.lambda[0], self.lambda[1], self.lambda[2]
        )
    }
}

/// Validated Veronese vector. The zero vector is allowed here; points
/// additionally require a nonzero representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VeroneseVector(AmbientVector);

impl VeroneseVector {
    pub fn new(v: AmbientVector) -> Result<Self, PlaneError> {
        let bad = v.violations();
        if bad.is_empty() {
            Ok(Self(v))
        } else {
            Err(PlaneError::NotVeronese(bad))
        }
    }

    pub fn as_ambient(&self) -> &AmbientVector {
        &self.0
    }

    pub fn into_ambient(self) -> AmbientVector {
        self.0
    }

    /// Real multiples of Veronese vectors are Veronese.
    pub fn scale(&self, r: &Rational) -> Self {
        Self(self.0.scale(r))
    }

    pub fn triality(&self) -> Self {
        Self(self.0.triality())
    }
}

impl TryFrom<AmbientVector> for VeroneseVector {
    type Error = PlaneError;

    fn try_from(v: AmbientVector) -> Result<Self, PlaneError> {
        Self::new(v)
    }
}

pub fn is_veronese(x: &[AlgElement; 3], lambda: &[Rational; 3]) -> bool {
    let alg = x[0].algebra();
    AmbientVector::new(alg, x.clone(), lambda.clone()).is_veronese()
}

/// `sum <xν, x'ν> + sum λν λ'ν`.
pub fn beta(v: &AmbientVector, w: &AmbientVector) -> Rational {
    assert_eq!(v.algebra, w.algebra, "operands come from different algebras");
    (0..3).fold(Rational::zero(), |acc, nu| {
        acc + v.x[nu].inner(&w.x[nu]) + &v.lambda[nu] * &w.lambda[nu]
    })
}

/// `beta` with the sign of both third-slot terms reversed.
pub fn beta_minus(v: &AmbientVector, w: &AmbientVector) -> Rational {
    beta(v, &w.flip_third())
}

/// Translation of the affine chart by `(a, b)`, extended linearly to `V`.
///
/// Obtained by conjugating `(x, y) -> (x + a, y + b)` through the chart
/// `(x, y) -> (x, ȳ, y x̄; N(y), N(x), 1)`.
pub fn translate(a: &AlgElement, b: &AlgElement, w: &AmbientVector) -> AmbientVector {
    let [x1, x2, x3] = &w.x;
    let [l1, l2, l3] = &w.lambda;
    let y1 = x1 + &a.scale(l3);
    let y2 = x2 + &b.conj().scale(l3);
    let y3 = &(&(x3 + &(b * &x1.conj())) + &(&x2.conj() * &a.conj())) + &(b * &a.conj()).scale(l3);
    let m1 = l1 + x2.conj().inner(b) + l3 * b.norm();
    let m2 = l2 + x1.inner(a) + l3 * a.norm();
    AmbientVector::new(w.algebra, [y1, y2, y3], [m1, m2, l3.clone()])
}

/// Polarity context of a line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolarityKind {
    Elliptic,
    Hyperbolic,
}

impl std::str::FromStr for PolarityKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "elliptic" => Ok(PolarityKind::Elliptic),
            "hyperbolic" => Ok(PolarityKind::Hyperbolic),
            other => Err(format!("unknown polarity {other:?}")),
        }
    }
}

impl fmt::Display for PolarityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolarityKind::Elliptic => "elliptic",
            PolarityKind::Hyperbolic => "hyperbolic",
        })
    }
}

/// A point `Rw` with a canonical representative: trace one when the trace is
/// nonzero, else first nonzero `λ` equal to one, else first nonzero
/// coordinate of `x1, x2, x3` equal to one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    rep: VeroneseVector,
}

impl ProjPoint {
    pub fn new(w: VeroneseVector) -> Result<Self, PlaneError> {
        let v = w.as_ambient();
        if v.is_zero() {
            return Err(PlaneError::ZeroVector);
        }
        let tr = v.trace();
        let scale = if !tr.is_zero() {
            tr
        } else if let Some(l) = v.lambda.iter().find(|l| !l.is_zero()) {
            l.clone()
        } else {
            v.x.iter()
                .flat_map(|x| x.coords().iter())
                .find(|c| !c.is_zero())
                .expect("nonzero vector")
                .clone()
        };
        Ok(Self {
            rep: w.scale(&scale.recip()),
        })
    }

    pub fn from_ambient(v: AmbientVector) -> Result<Self, PlaneError> {
        Self::new(VeroneseVector::new(v)?)
    }

    pub fn representative(&self) -> &AmbientVector {
        self.rep.as_ambient()
    }

    pub fn veronese(&self) -> &VeroneseVector {
        &self.rep
    }

    pub fn algebra(&self) -> Algebra {
        self.rep.0.algebra
    }

    /// The trace-one representative, which exists iff the trace is nonzero.
    /// Over the octonions every point has one; the split case has light-like
    /// points of trace zero.
    pub fn trace_one_representative(&self) -> Result<&AmbientVector, PlaneError> {
        if self.rep.0.trace().is_one() {
            Ok(self.representative())
        } else {
            Err(PlaneError::TraceZero)
        }
    }

    /// Which chart domain contains the point: `0` for `λ3 != 0`, `1` for
    /// `λ3 = 0, λ2 != 0`, `2` otherwise.
    pub fn chart_index(&self) -> usize {
        let l = &self.rep.0.lambda;
        if !l[2].is_zero() {
            0
        } else if !l[1].is_zero() {
            1
        } else {
            2
        }
    }

    pub fn triality(&self) -> Self {
        Self::new(self.rep.triality()).expect("triality preserves nonzero Veronese vectors")
    }

    /// `beta(w, w)` has a sign independent of the representative.
    pub fn beta_sign(&self) -> i32 {
        let b = beta(self.representative(), self.representative());
        if b.is_positive() {
            1
        } else if b.is_negative() {
            -1
        } else {
            0
        }
    }
}

/// The line `pole^⊥` for the form belonging to `kind`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjLine {
    pole: ProjPoint,
    kind: PolarityKind,
}

impl ProjLine {
    pub fn new(pole: ProjPoint, kind: PolarityKind) -> Self {
        Self { pole, kind }
    }

    pub fn pole(&self) -> &ProjPoint {
        &self.pole
    }

    pub fn kind(&self) -> PolarityKind {
        self.kind
    }

    pub fn algebra(&self) -> Algebra {
        self.pole.algebra()
    }

    /// `n` with `line = { z : beta(z, n) = 0 }`.
    pub fn normal(&self) -> AmbientVector {
        match self.kind {
            PolarityKind::Elliptic => self.pole.representative().clone(),
            PolarityKind::Hyperbolic => self.pole.representative().flip_third(),
        }
    }

    /// Equality of the underlying point sets, regardless of polarity.
    pub fn same_points(&self, other: &ProjLine) -> bool {
        proportional(&self.normal(), &other.normal())
    }

    pub fn triality(&self) -> Self {
        Self::new(self.pole.triality(), self.kind)
    }
}

pub(crate) fn proportional(a: &AmbientVector, b: &AmbientVector) -> bool {
    let ca = a.to_coords();
    let cb = b.to_coords();
    let Some(k) = ca.iter().position(|c| !c.is_zero()) else {
        return cb.iter().all(Zero::is_zero);
    };
    if cb[k].is_zero() {
        return false;
    }
    let r = &cb[k] / &ca[k];
    ca.iter().zip(&cb).all(|(x, y)| &(x * &r) == y)
}

pub fn incident(p: &ProjPoint, l: &ProjLine) -> bool {
    let form = match l.kind {
        PolarityKind::Elliptic => beta,
        PolarityKind::Hyperbolic => beta_minus,
    };
    form(p.representative(), l.pole.representative()).is_zero()
}

pub fn polarity(p: &ProjPoint, kind: PolarityKind) -> ProjLine {
    ProjLine::new(p.clone(), kind)
}

pub fn polarity_inverse(l: &ProjLine) -> ProjPoint {
    l.pole.clone()
}

fn cross(a: &AmbientVector, b: &AmbientVector) -> AmbientVector {
    let ja = veronese_to_jordan(a, Gamma::EUCLIDEAN);
    let jb = veronese_to_jordan(b, Gamma::EUCLIDEAN);
    jordan_to_veronese(&ja.freudenthal(&jb).expect("same algebra"))
}

/// The line through two distinct points. Its `beta`-normal is the Freudenthal
/// product of the two representatives; the pole is that normal for the
/// elliptic polarity and its third-slot flip for the hyperbolic one.
pub fn join(p: &ProjPoint, q: &ProjPoint, kind: PolarityKind) -> Result<ProjLine, PlaneError> {
    if p.algebra() != q.algebra() {
        return Err(PlaneError::MixedAlgebras);
    }
    if p == q {
        return Err(PlaneError::Coincident);
    }
    let n = cross(p.representative(), q.representative());
    if n.is_zero() {
        return Err(PlaneError::DegeneratePair);
    }
    let pole = match kind {
        PolarityKind::Elliptic => n,
        PolarityKind::Hyperbolic => n.flip_third(),
    };
    let pole = ProjPoint::from_ambient(pole).map_err(|e| match e {
        PlaneError::NotVeronese(_) => PlaneError::PoleNotVeronese,
        other => other,
    })?;
    Ok(ProjLine::new(pole, kind))
}

/// The common point of two distinct lines, from the Freudenthal product of
/// their normals.
pub fn meet(l: &ProjLine, m: &ProjLine) -> Result<ProjPoint, PlaneError> {
    if l.algebra() != m.algebra() {
        return Err(PlaneError::MixedAlgebras);
    }
    if l.same_points(m) {
        return Err(PlaneError::Coincident);
    }
    let p = cross(&l.normal(), &m.normal());
    if p.is_zero() {
        return Err(PlaneError::DegeneratePair);
    }
    ProjPoint::from_ambient(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    const O: Algebra = Algebra::Octonions;
    const OS: Algebra = Algebra::SplitOctonions;

    fn real(alg: Algebra, l: [i64; 3]) -> AmbientVector {
        AmbientVector::real(alg, l.map(int))
    }

    #[test]
    fn veronese_examples() {
        assert!(real(O, [1, 0, 0]).is_veronese());
        let v = real(O, [1, 1, 0]);
        assert_eq!(v.violations(), vec![VeroneseCondition::Norm(2)]);
        let w = real(O, [0, 0, 1]).scale(&rat(-7, 3));
        assert!(w.is_veronese());
    }

    #[test]
    fn beta_values() {
        let e = real(O, [1, 0, 0]);
        assert_eq!(beta(&e, &e), int(1));
        let f = real(O, [0, 0, 1]);
        assert_eq!(beta(&e, &f), int(0));
        assert_eq!(beta_minus(&f, &f), int(-1));
    }

    #[test]
    fn normalization_prefers_trace_one() {
        let p = ProjPoint::from_ambient(real(O, [0, 0, 5])).unwrap();
        assert_eq!(p.representative(), &real(O, [0, 0, 1]));
        assert!(ProjPoint::from_ambient(AmbientVector::zero(O)).is_err());
        // light-like split point (0, 0, i4; 1, -1, 0) has trace zero
        let x3 = AlgElement::basis(OS, 4).scale(&int(3));
        let v = AmbientVector::new(
            OS,
            [AlgElement::zero(OS), AlgElement::zero(OS), x3],
            [int(3), int(-3), int(0)],
        );
        let p = ProjPoint::from_ambient(v).unwrap();
        assert_eq!(p.representative().lambda()[0], int(1));
        assert_eq!(p.trace_one_representative(), Err(PlaneError::TraceZero));
    }

    #[test]
    fn triality_moves_special_points() {
        // (∞) -> (0,0) -> (0) -> (∞)
        let inf = real(O, [1, 0, 0]);
        assert_eq!(inf.triality(), real(O, [0, 0, 1]));
        assert_eq!(real(O, [0, 0, 1]).triality(), real(O, [0, 1, 0]));
        assert_eq!(real(O, [0, 1, 0]).triality(), inf);
    }

    #[test]
    fn join_rejects_equal_points() {
        let p = ProjPoint::from_ambient(real(O, [1, 0, 0])).unwrap();
        assert_eq!(join(&p, &p, PolarityKind::Elliptic), Err(PlaneError::Coincident));
    }

    #[test]
    fn translation_by_zero_is_identity() {
        let w = AmbientVector::from_coords(O, &(0..27).map(|k| int(k as i64 - 13)).collect::<Vec<_>>());
        let z = AlgElement::zero(O);
        assert_eq!(translate(&z, &z, &w), w);
    }
}
