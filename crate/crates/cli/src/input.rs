use std::path::Path;

use multgen_core::structure::Declared;
use multgen_core::{LieAlgebra, QMatrix, Rat, Subspace};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Coordinate subspaces of `g`, one vector per basis element, in the basis
/// order of the input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeclaredDocument {
    pub nil: Vec<Vec<Rat>>,
    pub levi: Vec<Vec<Rat>>,
    pub torus: Vec<Vec<Rat>>,
}

/// Input file: a list of square matrices spanning `g`, entries as `"p/q"`
/// strings (plain integers are accepted too).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub ambient_size: usize,
    pub basis: Vec<Vec<Vec<Rat>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub declared: Option<DeclaredDocument>,
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn from_algebra(name: Option<String>, g: &LieAlgebra) -> Self {
        InputDocument {
            name,
            ambient_size: g.size(),
            basis: g.basis().iter().map(QMatrix::to_rows).collect(),
            declared: None,
        }
    }

    fn matrices(&self) -> Result<Vec<QMatrix>, CliError> {
        self.basis
            .iter()
            .enumerate()
            .map(|(k, rows)| {
                let n = self.ambient_size;
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(CliError::Shape(format!("basis matrix {k} is not {n}x{n}")));
                }
                QMatrix::from_rows(rows.clone()).map_err(|e| CliError::Shape(e.to_string()))
            })
            .collect()
    }

    pub fn algebra(&self) -> Result<LieAlgebra, CliError> {
        Ok(LieAlgebra::new(self.ambient_size, self.matrices()?)?)
    }

    pub fn declared_blocks(&self, g: &LieAlgebra) -> Result<Option<Declared>, CliError> {
        let Some(d) = &self.declared else {
            return Ok(None);
        };
        let block = |name: &str, vs: &[Vec<Rat>]| {
            if vs.iter().any(|v| v.len() != g.dim()) {
                return Err(CliError::Shape(format!("declared {name} vectors need {} coordinates", g.dim())));
            }
            Ok(Subspace::span(g.dim(), vs.to_vec()))
        };
        Ok(Some(Declared {
            nil: block("nil", &d.nil)?,
            levi: block("levi", &d.levi)?,
            torus: block("torus", &d.torus)?,
        }))
    }
}
