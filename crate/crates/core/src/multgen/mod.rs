//! The subalgebra `m = r ⊕ s` generated by semisimple elements, where
//! `n₁ = [r, nil]` and `s` is the subalgebra of `nil` generated by `n₁`.
//!
//! `m` is cross-checked on every input against the smallest ideal of `g`
//! containing `r`, and the equivalent characterizations of `m = g` are
//! evaluated independently and required to agree.

use crate::chevalley::exp_nilpotent;
use crate::error::{Error, Result};
use crate::exactla::{QMatrix, Subspace};
use crate::liecore::LieAlgebra;
use crate::structure::{decompose, StructureReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultGenReport {
    pub n1: Subspace,
    /// `{v ∈ nil : [r, v] = 0}`.
    pub fixed: Subspace,
    pub s: Subspace,
    pub m: Subspace,
    /// Ideal closure of the reductive part, computed separately from `m`.
    pub oracle: Subspace,
    /// `levi ⊕ nil`.
    pub g_add: Subspace,
    pub is_mult_generated: bool,
    pub is_add_generated: bool,
    /// `dim g − dim g_add`, the dimension of the torus quotient.
    pub char_rank: usize,
    pub prop_conditions: [bool; 5],
    pub center_of_m: Subspace,
    /// `dim g − dim m`.
    pub quotient_dim: usize,
    pub quotient_nilpotent: bool,
    /// `exp` of each basis element of `s`.
    pub unipotent_generators: Vec<QMatrix>,
}

impl MultGenReport {
    pub fn oracle_agrees(&self) -> bool {
        self.m == self.oracle
    }
}

fn violation(msg: impl Into<String>) -> Error {
    Error::TheoremViolation(msg.into())
}

/// `n₁ = [r, nil]`, verified to complement the fixed vectors in `nil`.
pub fn nontrivial_isotypic(report: &StructureReport) -> Result<Subspace> {
    Ok(isotypic_split(report)?.0)
}

fn isotypic_split(report: &StructureReport) -> Result<(Subspace, Subspace)> {
    let g = &report.g;
    let n1 = g.product_space(&report.reductive, &report.nil)?;
    let fixed = g.centralizer_in(&report.reductive, &report.nil)?;
    let sum = n1.sum(&fixed)?;
    if sum != report.nil || sum.dim() != n1.dim() + fixed.dim() {
        return Err(Error::not_algebraic("nil = [r, nil] ⊕ nil^r"));
    }
    Ok((n1, fixed))
}

/// Smallest bracket-closed subspace containing `seed`.
pub fn bracket_closure(g: &LieAlgebra, seed: &Subspace) -> Result<Subspace> {
    g.subalgebra_closure(seed)
}

/// Smallest subspace containing `r` that is stable under `exp(ad v)` for
/// every `v` in the nil basis, closed under brackets afterwards. This is
/// the tangent algebra of the group generated by the conjugates of the
/// reductive subgroup.
pub fn conjugation_closure(report: &StructureReport) -> Result<Subspace> {
    let g = &report.g;
    let flows: Vec<QMatrix> = report
        .nil
        .basis()
        .iter()
        .map(|v| exp_nilpotent(&g.ad(v)))
        .collect::<Result<_>>()?;
    let mut w = report.reductive.clone();
    for _ in 0..=g.dim() {
        let mut images = w.basis().to_vec();
        for f in &flows {
            images.extend(w.basis().iter().map(|x| f.mul_vec(x)));
        }
        let next = Subspace::span(g.dim(), images);
        if next == w {
            break;
        }
        w = next;
    }
    g.subalgebra_closure(&w)
}

/// The five equivalent conditions for `m = g`, each from its own
/// computation:
/// generated by the reductive part, generated by conjugates of it,
/// `nil ⊆ [g,g]`, the ideal closure of `r` is `g`, `[g,g] = levi ⊕ nil`.
pub fn proposition_conditions(report: &StructureReport, m: &Subspace, oracle: &Subspace) -> Result<[bool; 5]> {
    let g = &report.g;
    let derived = g.product_space(&g.full(), &g.full())?;
    let levi_nil = report.levi.sum(&report.nil)?;
    let c = [
        m.is_full(),
        conjugation_closure(report)?.is_full(),
        derived.contains_subspace(&report.nil)?,
        oracle.is_full(),
        derived == levi_nil,
    ];
    if c.iter().any(|&b| b != c[0]) {
        return Err(violation(format!("equivalent conditions disagree: {c:?}")));
    }
    Ok(c)
}

pub fn mult_subalgebra(report: &StructureReport) -> Result<MultGenReport> {
    let g = &report.g;
    let (n1, fixed) = isotypic_split(report)?;
    let s = bracket_closure(g, &n1)?;
    if !s.contains_subspace(&n1)? || !report.nil.contains_subspace(&s)? {
        return Err(violation("n₁ ⊆ s ⊆ nil"));
    }
    let m = report.reductive.sum(&s)?;
    if m.dim() != report.reductive.dim() + s.dim() {
        return Err(violation("r ∩ s ≠ 0"));
    }
    if !g.is_ideal(&m)? {
        return Err(violation("m is not an ideal"));
    }
    let oracle = g.ideal_closure(&report.reductive)?;
    if m != oracle {
        return Err(violation(format!(
            "r ⊕ s (dim {}) differs from the ideal closure of r (dim {})",
            m.dim(),
            oracle.dim()
        )));
    }
    let prop_conditions = proposition_conditions(report, &m, &oracle)?;
    let g_add = report.levi.sum(&report.nil)?;
    if !g_add.sum(&report.torus)?.is_full() {
        return Err(violation("g_add + torus ≠ g"));
    }
    let quotient_dim = g.dim() - m.dim();
    let quotient_nilpotent = g.is_nilpotent_modulo(&m)?;
    if quotient_dim != report.nil.dim() - s.dim() || !quotient_nilpotent {
        return Err(violation("g/m is not the nilpotent quotient nil/s"));
    }
    let center_of_m = g.centralizer_in(&m, &m)?;
    let unipotent_generators =
        g.matrices(&s).iter().map(exp_nilpotent).collect::<Result<Vec<_>>>()?;
    Ok(MultGenReport {
        n1,
        fixed,
        is_mult_generated: m.is_full(),
        is_add_generated: report.rad == report.nil,
        char_rank: g.dim() - g_add.dim(),
        g_add,
        s,
        m,
        oracle,
        prop_conditions,
        center_of_m,
        quotient_dim,
        quotient_nilpotent,
        unipotent_generators,
    })
}

/// Whether the subalgebra `g_sub` of the reductive algebra `f`, containing
/// the maximal toral subalgebra `torus` of dimension `rank`, is generated
/// by semisimple elements.
pub fn corollary_check(f: &LieAlgebra, g_sub: &Subspace, torus: &Subspace, rank: usize) -> Result<bool> {
    let fr = decompose(f)?;
    if !fr.nil.is_zero() {
        return Err(Error::InvalidParameters("ambient algebra is not reductive".into()));
    }
    if !f.is_subalgebra(g_sub)? {
        return Err(Error::InvalidParameters("subspace is not bracket-closed".into()));
    }
    let mut semisimple = true;
    for t in f.matrices(torus) {
        semisimple &= crate::chevalley::is_semisimple_matrix(&t)?;
    }
    let toral = semisimple && f.product_space(torus, torus)?.is_zero();
    if !toral || torus.dim() != rank || f.centralizer(torus)? != *torus {
        return Err(Error::InvalidParameters("torus is not a maximal toral subalgebra".into()));
    }
    if !g_sub.contains_subspace(torus)? {
        return Err(Error::InvalidParameters("subalgebra does not contain the torus".into()));
    }
    let g = f.subalgebra(g_sub)?;
    let report = decompose(&g)?;
    Ok(mult_subalgebra(&report)?.is_mult_generated)
}

/// Decompose and run the multiplicative-generation analysis.
pub fn analyze(g: &LieAlgebra) -> Result<(StructureReport, MultGenReport)> {
    let report = decompose(g)?;
    let mult = mult_subalgebra(&report)?;
    Ok((report, mult))
}
