//! Named constructions, so that callers can cache results by key and build
//! composite algebras from cached parents.

use std::fmt;

use super::{
    cone_tangent_algebra, derivations_of_algebra, det_preserving_algebra, form_preserving_subalgebra,
    jordan_derivations, killing_and_identify, restrict, so_of_form, stabilizer_subalgebra,
    triality_algebra, InvariantForm, LieError, LieSubalgebra,
};
use crate::algebra::{AlgElement, Algebra};
use crate::jordan::{Gamma, JordanElement};
use crate::linalg::int;

/// Which algebra a stabilizer is taken in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StabilizerParent {
    /// Derivations of the Jordan algebra.
    F4,
    /// The cubic-norm preserving algebra.
    E6,
}

impl StabilizerParent {
    pub fn symbol(self) -> &'static str {
        match self {
            StabilizerParent::F4 => "f4",
            StabilizerParent::E6 => "e6",
        }
    }
}

impl std::str::FromStr for StabilizerParent {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "f4" => Ok(StabilizerParent::F4),
            "e6" => Ok(StabilizerParent::E6),
            other => Err(format!("unknown parent {other:?}, expected f4 or e6")),
        }
    }
}

/// A diagonal idempotent `E11`, `E22` or `E33`, parsed from that text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiagonalPoint(pub usize);

impl fmt::Display for DiagonalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{0}{0}", self.0 + 1)
    }
}

impl std::str::FromStr for DiagonalPoint {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "E11" => Ok(DiagonalPoint(0)),
            "E22" => Ok(DiagonalPoint(1)),
            "E33" => Ok(DiagonalPoint(2)),
            other => Err(format!("unknown point {other:?}, expected E11, E22 or E33")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Construction {
    Derivations(Algebra),
    So(Algebra),
    Triality(Algebra),
    JordanDerivations(Algebra, Gamma),
    DetPreserving(Algebra, Gamma),
    ConeTangent { algebra: Algebra, samples: usize, seed: u64 },
    /// Skew part of the euclidean det-preserving algebra for a form.
    FixForm(Algebra, InvariantForm),
    Stabilizer {
        algebra: Algebra,
        gamma: Gamma,
        parent: StabilizerParent,
        point: DiagonalPoint,
    },
    /// Elements of the Jordan derivations fixing `E11`, `E22`, `E33` and the
    /// element with every coordinate equal to one: the points `(∞)`, `(0)`,
    /// `(0,0)` and `(1,1)` of the chart.
    Quadrangle(Algebra, Gamma),
}

impl Construction {
    /// Stable identifier, safe for file names.
    pub fn key(&self) -> String {
        let g = |g: &Gamma| g.to_string().replace('+', "p").replace('-', "m");
        match self {
            Construction::Derivations(a) => format!("der-alg_{a}"),
            Construction::So(a) => format!("so_{a}"),
            Construction::Triality(a) => format!("tri_{a}"),
            Construction::JordanDerivations(a, gm) => format!("der-jordan_{a}_{}", g(gm)),
            Construction::DetPreserving(a, gm) => format!("e6_{a}_{}", g(gm)),
            Construction::ConeTangent { algebra, samples, seed } => format!("cone_{algebra}_{samples}_{seed}"),
            Construction::FixForm(a, f) => format!("fix-form_{a}_{f}"),
            Construction::Stabilizer {
                algebra,
                gamma,
                parent,
                point,
            } => format!("stabilizer_{algebra}_{}_{}_{point}", g(gamma), parent.symbol()),
            Construction::Quadrangle(a, gm) => format!("quadrangle_{a}_{}", g(gm)),
        }
    }

    /// Constructions this one is cut out of.
    pub fn parent(&self) -> Option<Construction> {
        match self {
            Construction::FixForm(a, _) => Some(Construction::DetPreserving(*a, Gamma::EUCLIDEAN)),
            Construction::Stabilizer {
                algebra,
                gamma,
                parent: StabilizerParent::F4,
                ..
            }
            | Construction::Quadrangle(algebra, gamma) => {
                Some(Construction::JordanDerivations(*algebra, *gamma))
            }
            Construction::Stabilizer {
                algebra,
                gamma,
                parent: StabilizerParent::E6,
                ..
            } => Some(Construction::DetPreserving(*algebra, *gamma)),
            _ => None,
        }
    }

    /// Builds the algebra without structure. `parent` must be the result for
    /// [`Construction::parent`] when that is `Some`.
    pub fn build_raw(&self, parent: Option<&LieSubalgebra>) -> Result<LieSubalgebra, LieError> {
        let need = || parent.ok_or_else(|| LieError::Malformed("missing parent algebra".into()));
        match self {
            Construction::Derivations(a) => Ok(derivations_of_algebra(*a)),
            Construction::So(a) => Ok(so_of_form(*a)),
            Construction::Triality(a) => Ok(triality_algebra(*a)),
            Construction::JordanDerivations(a, g) => Ok(jordan_derivations(*a, *g)),
            Construction::DetPreserving(a, g) => Ok(det_preserving_algebra(*a, *g)),
            Construction::ConeTangent { algebra, samples, seed } => {
                cone_tangent_algebra(*algebra, *samples, *seed)
            }
            Construction::FixForm(a, f) => form_preserving_subalgebra(need()?, *a, *f),
            Construction::Stabilizer {
                algebra, gamma, point, ..
            } => stabilizer_subalgebra(need()?, &JordanElement::idempotent(*algebra, *gamma, point.0)),
            Construction::Quadrangle(a, g) => {
                let one = AlgElement::one(*a);
                let unit = JordanElement::new(*a, *g, [int(1), int(1), int(1)], [one.clone(), one.clone(), one]);
                let points: Vec<Vec<_>> = (0..3)
                    .map(|i| JordanElement::idempotent(*a, *g, i))
                    .chain(std::iter::once(unit))
                    .map(|x| x.to_coords())
                    .collect();
                restrict(need()?, format!("quadrangle(J3({a}),{g})"), |e| {
                    points.iter().flat_map(|p| e.apply(p)).collect()
                })
            }
        }
        .map(|s| s.with_label(self.key()))
    }

    /// Builds the parent if any, then this algebra, with its structure.
    pub fn build(&self) -> Result<LieSubalgebra, LieError> {
        let parent = self.parent().map(|p| p.build_raw(None)).transpose()?;
        killing_and_identify(self.build_raw(parent.as_ref())?)
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}
