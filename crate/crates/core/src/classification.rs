//! The motion-group table of the four real octonionic planes, recomputed
//! cell by cell, and the types of the planes as coset spaces.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::jordan::Gamma;
use crate::lie::{Construction, DiagonalPoint, InvariantForm, LieError, LieSubalgebra, StabilizerParent};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellStatus {
    Match,
    Mismatch,
    NotConstructed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCell {
    pub expected: String,
    pub computed: Option<String>,
    /// The construction that produced the computed value.
    pub source: Option<String>,
    pub status: CellStatus,
}

impl TableCell {
    fn computed(expected: &str, sub: &LieSubalgebra, source: &Construction) -> Self {
        let name = display_name(sub.name());
        let status = if name == expected {
            CellStatus::Match
        } else {
            CellStatus::Mismatch
        };
        Self {
            expected: expected.to_string(),
            computed: Some(name),
            source: Some(source.key()),
            status,
        }
    }

    fn not_constructed(expected: &str) -> Self {
        Self {
            expected: expected.to_string(),
            computed: None,
            source: None,
            status: CellStatus::NotConstructed,
        }
    }

    /// `computed`, or the expected value with a marker.
    pub fn shown(&self) -> String {
        match &self.computed {
            Some(c) => c.clone(),
            None => format!("{} [paper; not constructed]", self.expected),
        }
    }
}

/// `e6(-26)` as `E6(-26)`; classical and unidentified names are unchanged.
pub fn display_name(name: &str) -> String {
    match name.get(..2) {
        Some(p @ ("e6" | "f4" | "g2")) => format!("{}{}", p.to_uppercase(), &name[2..]),
        _ => name.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub space: String,
    pub collineation: TableCell,
    pub isometry: TableCell,
    pub quadrangle_fixing: TableCell,
}

impl TableRow {
    pub fn cells(&self) -> [&TableCell; 3] {
        [&self.collineation, &self.isometry, &self.quadrangle_fixing]
    }
}

/// A plane as `isometry / stabilizer`, with its type
/// `(#noncompact, #compact)` read off the two Killing signatures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneType {
    pub space: String,
    pub isometry: String,
    pub stabilizer: String,
    pub dimension: usize,
    pub computed_type: (usize, usize),
    pub expected_type: (usize, usize),
    /// `#noncompact - #compact`.
    pub computed_character: i64,
    pub expected_character: i64,
}

impl PlaneType {
    pub fn type_matches(&self) -> bool {
        self.computed_type == self.expected_type
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationTable {
    pub rows: Vec<TableRow>,
    pub plane_types: Vec<PlaneType>,
}

impl ClassificationTable {
    /// Every computed cell matches and every plane type agrees. Characters of
    /// the plane types are reported, not compared: the published values use
    /// the opposite sign for the two extreme planes.
    pub fn passed(&self) -> bool {
        self.rows
            .iter()
            .flat_map(TableRow::cells)
            .all(|c| c.status != CellStatus::Mismatch)
            && self.plane_types.iter().all(PlaneType::type_matches)
    }

    pub fn mismatches(&self) -> Vec<String> {
        let mut out = Vec::new();
        for row in &self.rows {
            for (col, cell) in ["collineation", "isometry", "quadrangle_fixing"]
                .iter()
                .zip(row.cells())
            {
                if cell.status == CellStatus::Mismatch {
                    out.push(format!("{} {col}: expected {} computed {}", row.space, cell.expected, cell.shown()));
                }
            }
        }
        for p in self.plane_types.iter().filter(|p| !p.type_matches()) {
            out.push(format!(
                "{} type: expected {:?} computed {:?}",
                p.space, p.expected_type, p.computed_type
            ));
        }
        out
    }

    /// One line per cell: space, column, computed or marked expected value,
    /// expected value, source.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("space,collineation,isometry,quadrangle_fixing,source\n");
        for row in &self.rows {
            let sources: Vec<String> = row
                .cells()
                .iter()
                .map(|c| c.source.clone().unwrap_or_else(|| "reference".into()))
                .collect();
            s.push_str(&format!(
                "{},{},{},{},{}\n",
                row.space,
                quote(&row.collineation.shown()),
                quote(&row.isometry.shown()),
                quote(&row.quadrangle_fixing.shown()),
                quote(&sources.join(";"))
            ));
        }
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{:<6} {:<12} {:<34} {:<12} {:<12} {:<12} {:<12}\n",
            "space", "coll expected", "coll computed", "iso expected", "iso computed", "quad expected", "quad computed"
        );
        for row in &self.rows {
            s.push_str(&format!(
                "{:<6} {:<12} {:<34} {:<12} {:<12} {:<12} {:<12}\n",
                row.space,
                row.collineation.expected,
                row.collineation.shown(),
                row.isometry.expected,
                row.isometry.shown(),
                row.quadrangle_fixing.expected,
                row.quadrangle_fixing.shown()
            ));
        }
        s.push('\n');
        s.push_str(&format!(
            "{:<6} {:<24} {:<10} {:<12} {:<12} {:<10} {:<10}\n",
            "space", "coset", "dim", "type expected", "type comp", "chi expected", "chi comp"
        ));
        for p in &self.plane_types {
            s.push_str(&format!(
                "{:<6} {:<24} {:<10} {:<12} {:<12} {:<10} {:<10}\n",
                p.space,
                format!("{}/{}", display_name(&p.isometry), p.stabilizer),
                p.dimension,
                format!("{:?}", p.expected_type),
                format!("{:?}", p.computed_type),
                p.expected_character,
                p.computed_character
            ));
        }
        s
    }
}

fn quote(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

struct RowSpec {
    space: &'static str,
    algebra: Algebra,
    hyperbolic: bool,
    expected: [&'static str; 3],
}

const ROWS: [RowSpec; 4] = [
    RowSpec {
        space: "OP2",
        algebra: Algebra::Octonions,
        hyperbolic: false,
        expected: ["E6(-26)", "F4(-52)", "G2(-14)"],
    },
    RowSpec {
        space: "OsP2",
        algebra: Algebra::SplitOctonions,
        hyperbolic: false,
        expected: ["E6(6)", "F4(4)", "G2(2)"],
    },
    RowSpec {
        space: "OsH2",
        algebra: Algebra::SplitOctonions,
        hyperbolic: true,
        expected: ["E6(2)", "F4(4)", "G2(2)"],
    },
    RowSpec {
        space: "OH2",
        algebra: Algebra::Octonions,
        hyperbolic: true,
        expected: ["E6(-14)", "F4(-20)", "G2(-14)"],
    },
];

struct TypeSpec {
    space: &'static str,
    algebra: Algebra,
    gamma: Gamma,
    point: usize,
    expected_type: (usize, usize),
    expected_character: i64,
}

const PLANE_TYPES: [TypeSpec; 4] = [
    TypeSpec {
        space: "OP2",
        algebra: Algebra::Octonions,
        gamma: Gamma::EUCLIDEAN,
        point: 0,
        expected_type: (0, 16),
        expected_character: 16,
    },
    TypeSpec {
        space: "OH2",
        algebra: Algebra::Octonions,
        gamma: Gamma::LORENTZIAN,
        point: 2,
        expected_type: (16, 0),
        expected_character: -16,
    },
    TypeSpec {
        space: "OH~2",
        algebra: Algebra::Octonions,
        gamma: Gamma::LORENTZIAN,
        point: 0,
        expected_type: (8, 8),
        expected_character: 0,
    },
    TypeSpec {
        space: "OsH~2",
        algebra: Algebra::SplitOctonions,
        gamma: Gamma::EUCLIDEAN,
        point: 0,
        expected_type: (8, 8),
        expected_character: 0,
    },
];

/// Every construction the table reads, in dependency order.
pub fn required_constructions() -> Vec<Construction> {
    let mut out = Vec::new();
    for alg in Algebra::ALL {
        out.push(Construction::DetPreserving(alg, Gamma::EUCLIDEAN));
        out.push(Construction::FixForm(alg, InvariantForm::Beta));
        for g in [Gamma::EUCLIDEAN, Gamma::LORENTZIAN] {
            out.push(Construction::JordanDerivations(alg, g));
            out.push(Construction::Quadrangle(alg, g));
        }
    }
    for t in &PLANE_TYPES {
        out.push(stabilizer_of(t));
    }
    out
}

fn stabilizer_of(t: &TypeSpec) -> Construction {
    Construction::Stabilizer {
        algebra: t.algebra,
        gamma: t.gamma,
        parent: StabilizerParent::F4,
        point: DiagonalPoint(t.point),
    }
}

/// The isometry algebra of the elliptic plane is the beta-skew part of the
/// collineation algebra. For the hyperbolic planes it is the derivation
/// algebra of the Lorentzian Jordan algebra, whose trace form is the
/// hyperbolic form carried to the Jordan coordinates.
fn isometry_of(alg: Algebra, hyperbolic: bool) -> Construction {
    if hyperbolic {
        Construction::JordanDerivations(alg, Gamma::LORENTZIAN)
    } else {
        Construction::FixForm(alg, InvariantForm::Beta)
    }
}

/// Builds the table, obtaining each algebra (with structure) from `get`.
pub fn classification_table<F>(mut get: F) -> Result<ClassificationTable, LieError>
where
    F: FnMut(&Construction) -> Result<LieSubalgebra, LieError>,
{
    let mut rows = Vec::new();
    for spec in &ROWS {
        let gamma = if spec.hyperbolic { Gamma::LORENTZIAN } else { Gamma::EUCLIDEAN };
        let collineation = if spec.hyperbolic {
            TableCell::not_constructed(spec.expected[0])
        } else {
            let c = Construction::DetPreserving(spec.algebra, Gamma::EUCLIDEAN);
            TableCell::computed(spec.expected[0], &get(&c)?, &c)
        };
        let iso = isometry_of(spec.algebra, spec.hyperbolic);
        let quad = Construction::Quadrangle(spec.algebra, gamma);
        rows.push(TableRow {
            space: spec.space.to_string(),
            collineation,
            isometry: TableCell::computed(spec.expected[1], &get(&iso)?, &iso),
            quadrangle_fixing: TableCell::computed(spec.expected[2], &get(&quad)?, &quad),
        });
    }
    let mut plane_types = Vec::new();
    for t in &PLANE_TYPES {
        let iso = get(&Construction::JordanDerivations(t.algebra, t.gamma))?;
        let stab = get(&stabilizer_of(t))?;
        let (Some(a), Some(b)) = (iso.structure(), stab.structure()) else {
            return Err(LieError::Malformed("table needs algebras with structure".into()));
        };
        let nc = a.signature.positives - b.signature.positives;
        let c = a.signature.negatives - b.signature.negatives;
        plane_types.push(PlaneType {
            space: t.space.to_string(),
            isometry: iso.name().to_string(),
            stabilizer: stab.name().to_string(),
            dimension: iso.dim() - stab.dim(),
            computed_type: (nc, c),
            expected_type: t.expected_type,
            computed_character: nc as i64 - c as i64,
            expected_character: t.expected_character,
        });
    }
    Ok(ClassificationTable { rows, plane_types })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_shown_in_upper_case() {
        assert_eq!(display_name("f4(-20)"), "F4(-20)");
        assert_eq!(display_name("so(8,1)"), "so(8,1)");
        let cell = TableCell::not_constructed("E6(2)");
        assert_eq!(cell.shown(), "E6(2) [paper; not constructed]");
    }

    #[test]
    fn required_constructions_have_distinct_keys() {
        let keys: std::collections::HashSet<String> =
            required_constructions().iter().map(Construction::key).collect();
        assert_eq!(keys.len(), required_constructions().len());
    }
}
