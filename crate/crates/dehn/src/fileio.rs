//! The on-disk algebra format: a JSON document with rationals written as
//! decimal-free `"p/q"` strings. Parsing rejects unknown keys, duplicate
//! brackets, and anything that does not assemble into a well-formed
//! algebra; grading and Jacobi checks stay in
//! [`GradedLieAlgebra::validate`], where violations are data rather than
//! parse failures.

use crate::lie::{BasisElement, FieldComponent, FieldKind, GradedLieAlgebra, Weight};
use crate::rat::{format_rational, parse_rational};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("structure error: {0}")]
    Structure(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub weight_dim: usize,
    pub a_rank: u32,
    pub fields: Vec<FieldEntry>,
    pub basis: Vec<BasisEntry>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldEntry {
    pub id: String,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residue_prime: Option<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisEntry {
    pub name: String,
    pub field: String,
    pub weight: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub terms: Vec<TermEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermEntry {
    pub basis: String,
    pub coeff: String,
}

/// Parses a JSON document into an algebra. The result still needs
/// [`GradedLieAlgebra::validate`] before analysis.
pub fn parse_algebra(text: &str) -> Result<GradedLieAlgebra, FileError> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| FileError::Parse(e.to_string()))?;
    algebra_from_file(&file)
}

pub fn algebra_from_file(file: &AlgebraFile) -> Result<GradedLieAlgebra, FileError> {
    let mut fields = Vec::new();
    for f in &file.fields {
        let kind = match (f.kind.as_str(), f.residue_prime) {
            ("archimedean", None) => FieldKind::Archimedean,
            ("archimedean", Some(_)) => {
                return Err(FileError::Structure(format!(
                    "field `{}`: residue_prime is only meaningful for non-archimedean fields",
                    f.id
                )))
            }
            ("non-archimedean", Some(p)) => FieldKind::NonArchimedean(p),
            ("non-archimedean", None) => {
                return Err(FileError::Structure(format!(
                    "field `{}`: non-archimedean fields need a residue_prime",
                    f.id
                )))
            }
            (other, _) => {
                return Err(FileError::Structure(format!(
                    "field `{}`: unknown kind `{other}`",
                    f.id
                )))
            }
        };
        fields.push(FieldComponent {
            id: f.id.clone(),
            kind,
        });
    }
    let mut basis = Vec::new();
    for b in &file.basis {
        let coords = b
            .weight
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(FileError::Parse)?;
        basis.push(BasisElement {
            name: b.name.clone(),
            field: b.field.clone(),
            weight: Weight(coords),
        });
    }
    let mut alg = GradedLieAlgebra::new(&file.name, file.weight_dim, file.a_rank, fields, basis)
        .map_err(|e| FileError::Structure(e.to_string()))?;
    for br in &file.brackets {
        let terms = br
            .terms
            .iter()
            .map(|t| parse_rational(&t.coeff).map(|c| (t.basis.as_str(), c)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(FileError::Parse)?;
        alg.set_bracket(&br.left, &br.right, terms)
            .map_err(|e| FileError::Structure(e.to_string()))?;
    }
    Ok(alg)
}

pub fn file_from_algebra(alg: &GradedLieAlgebra) -> AlgebraFile {
    AlgebraFile {
        name: alg.name.clone(),
        weight_dim: alg.weight_dim,
        a_rank: alg.a_rank,
        fields: alg
            .fields
            .iter()
            .map(|f| match f.kind {
                FieldKind::Archimedean => FieldEntry {
                    id: f.id.clone(),
                    kind: "archimedean".to_string(),
                    residue_prime: None,
                },
                FieldKind::NonArchimedean(p) => FieldEntry {
                    id: f.id.clone(),
                    kind: "non-archimedean".to_string(),
                    residue_prime: Some(p),
                },
            })
            .collect(),
        basis: alg
            .basis
            .iter()
            .map(|b| BasisEntry {
                name: b.name.clone(),
                field: b.field.clone(),
                weight: b.weight.0.iter().map(format_rational).collect(),
            })
            .collect(),
        brackets: alg
            .stored_brackets()
            .map(|(&(i, j), combo)| BracketEntry {
                left: alg.basis[i].name.clone(),
                right: alg.basis[j].name.clone(),
                terms: combo
                    .iter()
                    .map(|(k, c)| TermEntry {
                        basis: alg.basis[*k].name.clone(),
                        coeff: format_rational(c),
                    })
                    .collect(),
            })
            .collect(),
    }
}

/// Canonical serialization (stable key order, two-space indentation).
pub fn serialize_algebra(alg: &GradedLieAlgebra) -> String {
    let file = file_from_algebra(alg);
    let mut out = serde_json::to_string_pretty(&file).expect("serializable");
    out.push('\n');
    out
}
