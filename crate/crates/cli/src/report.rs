use std::fmt::Write as _;
use std::time::Instant;

use multgen_core::multgen::{mult_subalgebra, MultGenReport};
use multgen_core::structure::{decompose, decompose_declared, StructureReport};
use multgen_core::{LieAlgebra, QMatrix, Rat, Subspace};
use serde::{Deserialize, Serialize};

use crate::input::InputDocument;
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureSection {
    pub dim: usize,
    pub rad: Vec<Vec<Rat>>,
    pub nil: Vec<Vec<Rat>>,
    pub levi: Vec<Vec<Rat>>,
    pub torus: Vec<Vec<Rat>>,
    pub reductive: Vec<Vec<Rat>>,
    pub declared: bool,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultGenSection {
    pub n1: Vec<Vec<Rat>>,
    pub s: Vec<Vec<Rat>>,
    pub m: Vec<Vec<Rat>>,
    pub oracle: Vec<Vec<Rat>>,
    pub g_add: Vec<Vec<Rat>>,
    pub center_of_m: Vec<Vec<Rat>>,
    pub dim_m: usize,
    pub is_mult_generated: bool,
    pub is_add_generated: bool,
    /// `dim g − dim g_add`.
    pub char_rank: usize,
    pub quotient_dim: usize,
    pub quotient_nilpotent: bool,
    /// `exp` of the `s` basis, as matrices.
    pub unipotent_generators: Vec<Vec<Vec<Rat>>>,
}

/// Microseconds per stage.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub structure_us: u64,
    pub multgen_us: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub input: InputDocument,
    pub structure: StructureSection,
    pub multgen: MultGenSection,
    pub prop_conditions: [bool; 5],
    pub oracle_agrees: bool,
    pub timing: Timing,
}

fn basis(s: &Subspace) -> Vec<Vec<Rat>> {
    s.basis().to_vec()
}

impl ReportDocument {
    pub fn build(input: InputDocument, structure: &StructureReport, mult: &MultGenReport, timing: Timing) -> Self {
        ReportDocument {
            input,
            structure: StructureSection {
                dim: structure.g.dim(),
                rad: basis(&structure.rad),
                nil: basis(&structure.nil),
                levi: basis(&structure.levi),
                torus: basis(&structure.torus),
                reductive: basis(&structure.reductive),
                declared: structure.declared,
                checks: structure
                    .verified
                    .checks()
                    .iter()
                    .map(|&(name, passed)| Check { name: name.to_string(), passed })
                    .collect(),
            },
            multgen: MultGenSection {
                n1: basis(&mult.n1),
                s: basis(&mult.s),
                m: basis(&mult.m),
                oracle: basis(&mult.oracle),
                g_add: basis(&mult.g_add),
                center_of_m: basis(&mult.center_of_m),
                dim_m: mult.m.dim(),
                is_mult_generated: mult.is_mult_generated,
                is_add_generated: mult.is_add_generated,
                char_rank: mult.char_rank,
                quotient_dim: mult.quotient_dim,
                quotient_nilpotent: mult.quotient_nilpotent,
                unipotent_generators: mult.unipotent_generators.iter().map(QMatrix::to_rows).collect(),
            },
            prop_conditions: mult.prop_conditions,
            oracle_agrees: mult.oracle_agrees(),
            timing,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }
}

/// Run the full pipeline on a parsed input.
pub fn analyze_document(input: InputDocument) -> Result<ReportDocument, CliError> {
    let g = input.algebra()?;
    let start = Instant::now();
    let structure = match input.declared_blocks(&g)? {
        Some(d) => decompose_declared(&g, d)?,
        None => decompose(&g)?,
    };
    let structure_us = start.elapsed().as_micros() as u64;
    let start = Instant::now();
    let mult = mult_subalgebra(&structure)?;
    let multgen_us = start.elapsed().as_micros() as u64;
    Ok(ReportDocument::build(input, &structure, &mult, Timing { structure_us, multgen_us }))
}

const PARAMS: &[&str] = &["a", "b", "c", "d", "e", "f", "g", "h", "k", "l", "p", "q", "r", "u", "v", "w", "x", "y", "z"];

fn param(k: usize) -> String {
    match PARAMS.get(k) {
        Some(p) => p.to_string(),
        None => format!("a{k}"),
    }
}

/// Entries of the generic element `Σ p_k X_k` of a subspace, each a
/// linear form in the parameters `a, b, c, …`.
pub fn generic_element(g: &LieAlgebra, sub: &[Vec<Rat>]) -> Vec<Vec<String>> {
    let mats: Vec<QMatrix> = sub.iter().map(|v| g.element(v)).collect();
    let n = g.size();
    let mut out = vec![vec![String::new(); n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let mut text = String::new();
            for (k, m) in mats.iter().enumerate() {
                let c = &m[(i, j)];
                if c.is_zero() {
                    continue;
                }
                let neg = c.is_negative();
                let mag = c.abs();
                if text.is_empty() {
                    text.push_str(if neg { "-" } else { "" });
                } else {
                    text.push_str(if neg { " - " } else { " + " });
                }
                if !mag.is_one() {
                    let _ = write!(text, "{mag}");
                }
                text.push_str(&param(k));
            }
            *cell = if text.is_empty() { "0".into() } else { text };
        }
    }
    out
}

fn render_grid(grid: &[Vec<String>], out: &mut String) {
    let width = grid.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    for row in grid {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "  ( {} )", cells.join("  "));
    }
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Plain-text report: dimensions, flags, and the generic elements of `g`
/// and `m` drawn as parameterized matrices.
pub fn render_pretty(report: &ReportDocument) -> Result<String, CliError> {
    let g = report.input.algebra()?;
    let st = &report.structure;
    let mg = &report.multgen;
    let mut out = String::new();
    if let Some(name) = &report.input.name {
        let _ = writeln!(out, "{name}");
    }
    let _ = writeln!(
        out,
        "dim g = {}   rad {}   nil {}   levi {}   torus {}   reductive {}",
        st.dim,
        st.rad.len(),
        st.nil.len(),
        st.levi.len(),
        st.torus.len(),
        st.reductive.len()
    );
    let _ = writeln!(out, "dim n1 = {}   dim s = {}   dim m = {}   dim g/m = {}", mg.n1.len(), mg.s.len(), mg.dim_m, mg.quotient_dim);
    let _ = writeln!(out, "multiplicatively generated: {}", flag(mg.is_mult_generated));
    let _ = writeln!(out, "additively generated: {}", flag(mg.is_add_generated));
    let _ = writeln!(out, "character rank: {}", mg.char_rank);
    let _ = writeln!(out, "conditions: {:?}", report.prop_conditions);
    let _ = writeln!(out, "oracle agrees: {}", flag(report.oracle_agrees));
    let _ = writeln!(out, "center of m: dim {}", mg.center_of_m.len());
    let full: Vec<Vec<Rat>> = (0..g.dim()).map(|i| g.unit(i)).collect();
    let _ = writeln!(out, "\ng:");
    render_grid(&generic_element(&g, &full), &mut out);
    let _ = writeln!(out, "\nm:");
    render_grid(&generic_element(&g, &mg.m), &mut out);
    Ok(out)
}
