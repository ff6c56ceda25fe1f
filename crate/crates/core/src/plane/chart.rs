//! Affine charts of points and lines, and the affine incidence computations
//! used to cross-check the Freudenthal joins and meets.

use num_traits::Zero;

use super::{AmbientVector, PlaneError, PolarityKind, ProjLine, ProjPoint};
use crate::algebra::{AlgElement, Algebra};
use crate::linalg::{int, Rational};

/// `(x, y)`, the slope point `(s)` on the line at infinity, or `(∞)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AffineChartPoint {
    Finite(AlgElement, AlgElement),
    Slope(AlgElement),
    Infinity,
}

/// `[s, t]` is `y = s x + t`, `[c]` is the vertical line `x = c`, and `[∞]`
/// the line at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AffineChartLine {
    Line(AlgElement, AlgElement),
    Vertical(AlgElement),
    Infinity,
}

fn vector(alg: Algebra, x: [AlgElement; 3], l: [Rational; 3]) -> AmbientVector {
    AmbientVector::new(alg, x, l)
}

fn chart_algebra(alg: Algebra, elems: &[&AlgElement]) -> Result<(), PlaneError> {
    if elems.iter().all(|e| e.algebra() == alg) {
        Ok(())
    } else {
        Err(PlaneError::MixedAlgebras)
    }
}

/// `(x, y) -> (x, ȳ, y x̄; N(y), N(x), 1)`, `(s) -> (0, 0, s; N(s), 1, 0)`,
/// `(∞) -> (0, 0, 0; 1, 0, 0)`.
pub fn embed_point(alg: Algebra, p: &AffineChartPoint) -> Result<ProjPoint, PlaneError> {
    let zero = || AlgElement::zero(alg);
    let v = match p {
        AffineChartPoint::Finite(x, y) => {
            chart_algebra(alg, &[x, y])?;
            vector(
                alg,
                [x.clone(), y.conj(), y * &x.conj()],
                [y.norm(), x.norm(), int(1)],
            )
        }
        AffineChartPoint::Slope(s) => {
            chart_algebra(alg, &[s])?;
            vector(alg, [zero(), zero(), s.clone()], [s.norm(), int(1), int(0)])
        }
        AffineChartPoint::Infinity => AmbientVector::real(alg, [int(1), int(0), int(0)]),
    };
    ProjPoint::from_ambient(v).map_err(|e| match e {
        PlaneError::NotVeronese(_) => PlaneError::DegenerateChart,
        other => other,
    })
}

/// Elliptic line with pole `[s, t] -> (s̄t, -t̄, -s; 1, N(s), N(t))`,
/// `[c] -> (-c, 0, 0; 0, 1, N(c))`, `[∞] -> (0, 0, 0; 0, 0, 1)`.
pub fn embed_line(alg: Algebra, l: &AffineChartLine) -> Result<ProjLine, PlaneError> {
    let zero = || AlgElement::zero(alg);
    let v = match l {
        AffineChartLine::Line(s, t) => {
            chart_algebra(alg, &[s, t])?;
            vector(
                alg,
                [&s.conj() * t, -&t.conj(), -s],
                [int(1), s.norm(), t.norm()],
            )
        }
        AffineChartLine::Vertical(c) => {
            chart_algebra(alg, &[c])?;
            vector(alg, [-c, zero(), zero()], [int(0), int(1), c.norm()])
        }
        AffineChartLine::Infinity => AmbientVector::real(alg, [int(0), int(0), int(1)]),
    };
    let pole = ProjPoint::from_ambient(v).map_err(|e| match e {
        PlaneError::NotVeronese(_) => PlaneError::DegenerateChart,
        other => other,
    })?;
    Ok(ProjLine::new(pole, PolarityKind::Elliptic))
}

impl ProjPoint {
    /// Chart coordinates, read back from the representative and checked by
    /// re-embedding.
    pub fn chart(&self) -> Result<AffineChartPoint, PlaneError> {
        let v = self.representative();
        let [x1, x2, x3] = v.x();
        let [_, l2, l3] = v.lambda();
        let c = match self.chart_index() {
            0 => {
                let r = l3.recip();
                AffineChartPoint::Finite(x1.scale(&r), x2.conj().scale(&r))
            }
            1 => AffineChartPoint::Slope(x3.scale(&l2.recip())),
            _ => AffineChartPoint::Infinity,
        };
        if embed_point(self.algebra(), &c)? == *self {
            Ok(c)
        } else {
            Err(PlaneError::OffChart)
        }
    }
}

fn inverse(x: &AlgElement) -> Option<AlgElement> {
    let n = x.norm();
    if n.is_zero() {
        None
    } else {
        Some(x.conj().scale(&n.recip()))
    }
}

/// The line through two chart points, solved in the affine plane. `None` when
/// the points coincide or a needed difference is a zero divisor.
pub fn affine_join(p: &AffineChartPoint, q: &AffineChartPoint) -> Option<AffineChartLine> {
    use AffineChartPoint::*;
    match (p, q) {
        (Finite(x1, y1), Finite(x2, y2)) => {
            if x1 == x2 {
                return (y1 != y2).then(|| AffineChartLine::Vertical(x1.clone()));
            }
            // y2 - y1 = s (x2 - x1)
            let s = &(y2 - y1) * &inverse(&(x2 - x1))?;
            let t = y1 - &(&s * x1);
            Some(AffineChartLine::Line(s, t))
        }
        (Finite(x, y), Slope(s)) | (Slope(s), Finite(x, y)) => {
            Some(AffineChartLine::Line(s.clone(), y - &(s * x)))
        }
        (Finite(x, _), Infinity) | (Infinity, Finite(x, _)) => {
            Some(AffineChartLine::Vertical(x.clone()))
        }
        (Slope(a), Slope(b)) if a == b => None,
        (Infinity, Infinity) => None,
        _ => Some(AffineChartLine::Infinity),
    }
}

/// The common point of two chart lines, solved in the affine plane.
pub fn affine_meet(l: &AffineChartLine, m: &AffineChartLine) -> Option<AffineChartPoint> {
    use AffineChartLine::*;
    match (l, m) {
        (Line(s1, t1), Line(s2, t2)) => {
            if s1 == s2 {
                return (t1 != t2).then(|| AffineChartPoint::Slope(s1.clone()));
            }
            // (s1 - s2) x = t2 - t1
            let x = &inverse(&(s1 - s2))? * &(t2 - t1);
            let y = &(s1 * &x) + t1;
            Some(AffineChartPoint::Finite(x, y))
        }
        (Line(s, t), Vertical(c)) | (Vertical(c), Line(s, t)) => {
            Some(AffineChartPoint::Finite(c.clone(), &(s * c) + t))
        }
        (Line(s, _), Infinity) | (Infinity, Line(s, _)) => Some(AffineChartPoint::Slope(s.clone())),
        (Vertical(a), Vertical(b)) if a == b => None,
        (Infinity, Infinity) => None,
        _ => Some(AffineChartPoint::Infinity),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::{incident, join, meet};

    const O: Algebra = Algebra::Octonions;

    fn o(c: [i64; 8]) -> AlgElement {
        AlgElement::from_i64(O, c)
    }

    #[test]
    fn special_points_and_lines() {
        let zero = AlgElement::zero(O);
        let origin = embed_point(O, &AffineChartPoint::Finite(zero.clone(), zero.clone())).unwrap();
        assert_eq!(
            origin.representative(),
            &AmbientVector::real(O, [int(0), int(0), int(1)])
        );
        let one = AlgElement::one(O);
        let slope_one = embed_point(O, &AffineChartPoint::Slope(one.clone())).unwrap();
        let expected = vector(O, [zero.clone(), zero.clone(), one.clone()], [int(1), int(1), int(0)]);
        assert!(crate::plane::proportional(slope_one.representative(), &expected));
        let inf = embed_point(O, &AffineChartPoint::Infinity).unwrap();
        assert_eq!(inf.representative(), &AmbientVector::real(O, [int(1), int(0), int(0)]));

        let x_axis = embed_line(O, &AffineChartLine::Line(zero.clone(), zero.clone())).unwrap();
        assert_eq!(x_axis.pole(), &inf);
        let at_inf = embed_line(O, &AffineChartLine::Infinity).unwrap();
        assert_eq!(at_inf.pole(), &origin);
        assert!(incident(&origin, &x_axis));
        assert!(incident(&inf, &at_inf));
    }

    #[test]
    fn join_of_origin_and_infinity_is_the_y_axis() {
        let zero = AlgElement::zero(O);
        let origin = embed_point(O, &AffineChartPoint::Finite(zero.clone(), zero.clone())).unwrap();
        let inf = embed_point(O, &AffineChartPoint::Infinity).unwrap();
        let l = join(&origin, &inf, PolarityKind::Elliptic).unwrap();
        assert_eq!(l, embed_line(O, &AffineChartLine::Vertical(zero)).unwrap());
    }

    #[test]
    fn chart_round_trip_and_affine_solving() {
        let p = AffineChartPoint::Finite(o([1, 2, 0, 0, -1, 0, 3, 0]), o([0, 1, 1, 0, 0, 2, 0, -1]));
        let q = AffineChartPoint::Finite(o([2, 0, 0, 1, 0, 0, 0, 1]), o([1, 1, 0, 0, 0, 0, 1, 0]));
        let pp = embed_point(O, &p).unwrap();
        assert_eq!(pp.chart().unwrap(), p);
        let l = affine_join(&p, &q).unwrap();
        let ll = embed_line(O, &l).unwrap();
        let qq = embed_point(O, &q).unwrap();
        assert!(incident(&pp, &ll) && incident(&qq, &ll));
        assert_eq!(join(&pp, &qq, PolarityKind::Elliptic).unwrap(), ll);
        let m = AffineChartLine::Line(o([0, 0, 1, 0, 0, 0, 0, 0]), o([3, 0, 0, 0, 0, 1, 0, 0]));
        let r = affine_meet(&l, &m).unwrap();
        let mm = embed_line(O, &m).unwrap();
        assert_eq!(meet(&ll, &mm).unwrap(), embed_point(O, &r).unwrap());
    }
}
