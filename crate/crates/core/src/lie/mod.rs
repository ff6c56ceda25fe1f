//! Lie algebras of linear maps, obtained as exact kernels of linear
//! constraint systems, with structure constants, Killing forms and
//! identification of the real form by dimension and character.

mod catalog;
mod constructions;
mod structure;

pub use constructions::{
    cone_tangent_algebra, derivations_of_algebra, det_preserving_algebra, diagonal_slice,
    first_projection, form_preserving_subalgebra, jordan_derivations, restrict, skew_algebra,
    skew_for, so_of_form, stabilizer_subalgebra, trace_zero_part, triality_algebra,
    triality_triples, InvariantForm, TrialityTriple, DEFAULT_CONE_SAMPLES, MIN_CONE_SAMPLES,
};
pub use catalog::{Construction, DiagonalPoint, StabilizerParent};
pub use structure::{identify, killing_and_identify, Structure};

use std::fmt::Write as _;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::linalg::{
    echelonize, format_rational, parse_rational, EchelonBasis, LinalgError, RatMatrix, RatVector,
    Rational,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("bracket of basis elements {0} and {1} leaves the span")]
    NotClosed(usize, usize),
    #[error("the zero algebra has no Killing form to classify")]
    ZeroDimensional,
    #[error("at least {min} samples are needed, got {got}")]
    TooFewSamples { min: usize, got: usize },
    #[error("kernel still shrinking after {0} sample batches")]
    UnderConstrained(usize),
    #[error("parent acts on a {found}-dimensional space, expected {expected}")]
    WrongAmbient { expected: usize, found: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("malformed algebra data: {0}")]
    Malformed(String),
}

/// A linear map of an `n`-dimensional space, as an `n x n` matrix acting on
/// columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearEndo {
    matrix: RatMatrix,
}

impl LinearEndo {
    pub fn new(matrix: RatMatrix) -> Result<Self, LieError> {
        if !matrix.is_square() {
            return Err(LieError::Linalg(LinalgError::Shape {
                expected: "square matrix".into(),
                found: format!("{}x{}", matrix.rows(), matrix.cols()),
            }));
        }
        Ok(Self { matrix })
    }

    /// From the row-major entries `L[m][i]` at index `m * n + i`.
    pub fn from_flat(n: usize, entries: &[Rational]) -> Self {
        Self {
            matrix: RatMatrix::from_vec(n, n, entries.to_vec()).expect("n*n entries"),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn flat(&self) -> &[Rational] {
        self.matrix.as_slice()
    }

    pub fn apply(&self, v: &[Rational]) -> RatVector {
        self.matrix.mul_vec(v).expect("vector matches ambient dimension")
    }

    pub fn bracket(&self, other: &Self) -> Self {
        Self {
            matrix: self.matrix.commutator(&other.matrix).expect("same ambient"),
        }
    }
}

/// A subspace of `End(R^n)` given by a reduced echelon basis of flattened
/// matrices, plus its structure once computed.
#[derive(Debug, Clone)]
pub struct LieSubalgebra {
    label: String,
    ambient_dim: usize,
    basis: EchelonBasis,
    structure: Option<Structure>,
}

impl LieSubalgebra {
    /// Spans the given flattened `n x n` matrices.
    pub fn from_vectors(label: impl Into<String>, ambient_dim: usize, vectors: &[RatVector]) -> Self {
        let len = ambient_dim * ambient_dim;
        assert!(vectors.iter().all(|v| v.len() == len), "expected flattened {ambient_dim}x{ambient_dim} matrices");
        let basis = if vectors.is_empty() {
            EchelonBasis::empty(len)
        } else {
            echelonize(vectors)
        };
        Self {
            label: label.into(),
            ambient_dim,
            basis,
            structure: None,
        }
    }

    pub fn from_endos(label: impl Into<String>, ambient_dim: usize, endos: &[LinearEndo]) -> Self {
        let vs: Vec<RatVector> = endos.iter().map(|e| e.flat().to_vec()).collect();
        Self::from_vectors(label, ambient_dim, &vs)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn echelon(&self) -> &EchelonBasis {
        &self.basis
    }

    pub fn basis(&self) -> Vec<LinearEndo> {
        self.basis
            .rows()
            .iter()
            .map(|r| LinearEndo::from_flat(self.ambient_dim, r))
            .collect()
    }

    pub fn contains(&self, e: &LinearEndo) -> bool {
        e.dim() == self.ambient_dim && self.basis.contains(e.flat())
    }

    pub fn contains_subalgebra(&self, other: &LieSubalgebra) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.contains_space(&other.basis)
    }

    pub fn same_span(&self, other: &LieSubalgebra) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.same_span(&other.basis)
    }

    pub fn structure(&self) -> Option<&Structure> {
        self.structure.as_ref()
    }

    pub(crate) fn set_structure(&mut self, s: Structure) {
        self.structure = Some(s);
    }

    /// The identified real form, or the construction label before the
    /// Killing form is computed.
    pub fn name(&self) -> &str {
        self.structure
            .as_ref()
            .map_or(self.label.as_str(), |s| s.name.as_str())
    }

    /// SHA-256 of the echelon basis, one row per line, entries as `"p/q"`
    /// separated by commas.
    pub fn basis_digest(&self) -> String {
        let mut text = String::new();
        for row in self.basis.rows() {
            let line: Vec<String> = row.iter().map(format_rational).collect();
            let _ = writeln!(text, "{}", line.join(","));
        }
        hex::encode(Sha256::digest(text.as_bytes()))
    }

    pub fn report(&self) -> LieReport {
        let s = self.structure.as_ref();
        LieReport {
            name: self.name().to_string(),
            ambient_dim: self.ambient_dim,
            dim: self.dim(),
            signature: s.map(|s| [s.signature.positives, s.signature.negatives, s.signature.zeros]),
            character: s.map(|s| s.signature.character()),
            closed: s.is_some(),
            basis_digest: self.basis_digest(),
        }
    }

    /// Full serialized form: the report plus the sparse basis.
    pub fn to_data(&self) -> LieData {
        LieData {
            label: self.label.clone(),
            report: self.report(),
            basis: self
                .basis
                .rows()
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(_, q)| !q.is_zero())
                        .map(|(k, q)| (k, format_rational(q)))
                        .collect()
                })
                .collect(),
        }
    }

    /// Rebuilds the basis and recomputes the structure, checking the stored
    /// digest.
    pub fn from_data(data: &LieData) -> Result<Self, LieError> {
        let n = data.report.ambient_dim;
        let mut rows = Vec::with_capacity(data.basis.len());
        for sparse in &data.basis {
            let mut row = vec![Rational::zero(); n * n];
            for (k, q) in sparse {
                if *k >= n * n {
                    return Err(LieError::Malformed(format!("index {k} out of range")));
                }
                row[*k] = parse_rational(q)?;
            }
            rows.push(row);
        }
        let sub = Self::from_vectors(data.label.clone(), n, &rows);
        if sub.basis_digest() != data.report.basis_digest {
            return Err(LieError::Malformed("basis digest mismatch".into()));
        }
        if data.report.closed {
            killing_and_identify(sub)
        } else {
            Ok(sub)
        }
    }
}

/// Summary emitted for every construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieReport {
    pub name: String,
    pub ambient_dim: usize,
    pub dim: usize,
    pub signature: Option<[usize; 3]>,
    pub character: Option<i64>,
    pub closed: bool,
    pub basis_digest: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieData {
    pub label: String,
    #[serde(flatten)]
    pub report: LieReport,
    pub basis: Vec<Vec<(usize, String)>>,
}
