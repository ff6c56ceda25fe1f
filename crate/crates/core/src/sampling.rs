//! Seeded random inputs for property checks and the sampling-based
//! constructions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgElement, Algebra};
use crate::linalg::{rat, Rational};
use crate::plane::{
    embed_point, AffineChartLine, AffineChartPoint, AmbientVector, ProjPoint, VeroneseVector,
};

/// A ChaCha8 stream keyed by a 64-bit seed. Stream numbers give independent
/// generators per sample so parallel runners stay schedule-independent.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self { rng }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Uniform in `[-bound, bound]`.
    pub fn small_int(&mut self, bound: i64) -> i64 {
        self.rng.random_range(-bound..=bound)
    }

    pub fn nonzero_int(&mut self, bound: i64) -> i64 {
        loop {
            let v = self.small_int(bound);
            if v != 0 {
                return v;
            }
        }
    }

    /// Numerator in `[-9, 9]`, denominator in `[1, 4]`.
    pub fn rational(&mut self) -> Rational {
        let n = self.small_int(9);
        let d = self.rng.random_range(1..=4);
        rat(n, d)
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        let n = self.nonzero_int(9);
        let d = self.rng.random_range(1..=4);
        rat(n, d)
    }

    /// Random element with rational coordinates. Each coordinate is zero with
    /// probability about 1/5, so sparse and dense elements both occur.
    pub fn element(&mut self, algebra: Algebra) -> AlgElement {
        let coords = std::array::from_fn(|_| {
            if self.rng.random_ratio(1, 5) {
                rat(0, 1)
            } else {
                self.rational()
            }
        });
        AlgElement::new(algebra, coords)
    }

    pub fn nonzero_element(&mut self, algebra: Algebra) -> AlgElement {
        loop {
            let x = self.element(algebra);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// Integer coordinates in `[-bound, bound]`.
    pub fn integer_element(&mut self, algebra: Algebra, bound: i64) -> AlgElement {
        AlgElement::from_i64(algebra, std::array::from_fn(|_| self.small_int(bound)))
    }

    pub fn bool(&mut self) -> bool {
        self.rng.random()
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }
}

impl Sampler {
    /// A finite chart point most of the time, a slope point or `(∞)`
    /// occasionally.
    pub fn chart_point(&mut self, algebra: Algebra) -> AffineChartPoint {
        match self.rng.random_range(0..20) {
            0 => AffineChartPoint::Infinity,
            1 | 2 => AffineChartPoint::Slope(self.element(algebra)),
            _ => AffineChartPoint::Finite(self.element(algebra), self.element(algebra)),
        }
    }

    pub fn chart_line(&mut self, algebra: Algebra) -> AffineChartLine {
        match self.rng.random_range(0..20) {
            0 => AffineChartLine::Infinity,
            1 | 2 => AffineChartLine::Vertical(self.element(algebra)),
            _ => AffineChartLine::Line(self.element(algebra), self.element(algebra)),
        }
    }

    pub fn point(&mut self, algebra: Algebra) -> ProjPoint {
        let c = self.chart_point(algebra);
        embed_point(algebra, &c).expect("chart images are Veronese")
    }

    /// A nonzero Veronese vector: a random point, moved by a random power of
    /// triality and rescaled by a random nonzero rational.
    pub fn veronese(&mut self, algebra: Algebra) -> VeroneseVector {
        let mut w = self.point(algebra).veronese().clone();
        for _ in 0..self.rng.random_range(0..3) {
            w = w.triality();
        }
        w.scale(&self.nonzero_rational())
    }

    /// A vector of `V` that fails at least one Veronese equation: either a
    /// random vector or a Veronese vector with one coordinate perturbed.
    pub fn non_veronese(&mut self, algebra: Algebra) -> AmbientVector {
        loop {
            let v = if self.bool() {
                let coords: Vec<Rational> = (0..27).map(|_| self.rational()).collect();
                AmbientVector::from_coords(algebra, &coords)
            } else {
                let mut coords = self.veronese(algebra).as_ambient().to_coords();
                let k = self.index(27);
                coords[k] += self.nonzero_rational();
                AmbientVector::from_coords(algebra, &coords)
            };
            if !v.is_veronese() {
                return v;
            }
        }
    }
}
