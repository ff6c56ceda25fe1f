//! Exact constructions around the octonionic projective plane: composition
//! algebras, the exceptional Jordan algebra, Veronese coordinates and the Lie
//! algebras of motions.

pub mod algebra;
pub mod classification;
pub mod jordan;
pub mod lie;
pub mod linalg;
pub mod plane;
pub mod sampling;

pub use algebra::{AlgElement, Algebra, AlgebraError};
pub use jordan::{Gamma, JordanElement, JordanError, RankClass};
pub use lie::{LieError, LieReport, LieSubalgebra, LinearEndo, Structure};
pub use linalg::{LinalgError, RatMatrix, Rational, Signature};
pub use plane::{AmbientVector, PlaneError, PolarityKind, ProjLine, ProjPoint, VeroneseVector};

/// Crate version, part of the key of cached constructions.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
