//! Built-in example algebras and a seeded generator of random algebraic
//! Lie algebras.

mod random;

pub use random::{random_algebraic, AlgebraicSpec, ModuleSpec, RandomParams, Reductive};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{QMatrix, Rat, Subspace};
use crate::liecore::LieAlgebra;
use crate::multgen::MultGenReport;
use crate::structure::StructureReport;

/// Dimensions and the headline flag produced by the full pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub dim: usize,
    pub rad: usize,
    pub nil: usize,
    pub levi: usize,
    pub torus: usize,
    pub reductive: usize,
    pub m: usize,
    pub is_mult_generated: bool,
}

impl Expected {
    pub fn observed(report: &StructureReport, mult: &MultGenReport) -> Self {
        let (rad, nil, levi, torus, reductive) = report.dims();
        Expected {
            dim: report.g.dim(),
            rad,
            nil,
            levi,
            torus,
            reductive,
            m: mult.m.dim(),
            is_mult_generated: mult.is_mult_generated,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub g: LieAlgebra,
    pub expected: Option<Expected>,
}

/// A subalgebra of a reductive algebra containing a maximal toral
/// subalgebra of it.
#[derive(Clone, Debug)]
pub struct RegularPair {
    pub f: LieAlgebra,
    pub g_sub: Subspace,
    pub torus: Subspace,
    pub rank: usize,
}

fn e(n: usize, i: usize, j: usize) -> QMatrix {
    QMatrix::unit(n, i, j)
}

fn int(v: i64) -> Rat {
    Rat::from_int(v)
}

pub fn solvable_example() -> LieAlgebra {
    let u = |i: usize, j: usize| e(4, i - 1, j - 1);
    LieAlgebra::new(4, vec![u(2, 2), u(1, 2), u(1, 3), u(1, 4), u(2, 4), u(3, 4)]).expect("closed")
}

/// `E_ii − E_{i+1,i+1}` for `i < n − 1`.
fn cartan_sl(n: usize) -> Vec<QMatrix> {
    (0..n - 1).map(|i| &e(n, i, i) - &e(n, i + 1, i + 1)).collect()
}

fn sl_matrices(n: usize, keep: impl Fn(usize, usize) -> bool) -> Vec<QMatrix> {
    let mut b = cartan_sl(n);
    for i in 0..n {
        for j in 0..n {
            if i != j && keep(i, j) {
                b.push(e(n, i, j));
            }
        }
    }
    b
}

pub fn sl(n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::InvalidParameters("sl(n) needs n ≥ 2".into()));
    }
    LieAlgebra::new(n, sl_matrices(n, |_, _| true))
}

fn block_of(blocks: &[usize]) -> Vec<usize> {
    blocks.iter().enumerate().flat_map(|(b, &len)| std::iter::repeat_n(b, len)).collect()
}

/// Block upper-triangular matrices of trace zero for the composition
/// `blocks` of `n`.
pub fn parabolic_sl(blocks: &[usize]) -> Result<LieAlgebra> {
    let n: usize = blocks.iter().sum();
    if n < 2 || blocks.contains(&0) {
        return Err(Error::InvalidParameters(format!("bad composition {blocks:?}")));
    }
    let owner = block_of(blocks);
    LieAlgebra::new(n, sl_matrices(n, |i, j| owner[i] <= owner[j]))
}

fn sp4_parts() -> (Vec<QMatrix>, Vec<QMatrix>, Vec<QMatrix>) {
    // [[A, B], [C, -Aᵀ]] with B, C symmetric
    let mut levi = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            levi.push(&e(4, i, j) - &e(4, j + 2, i + 2));
        }
    }
    let sym = |r: usize, c: usize| {
        vec![e(4, r, c), e(4, r + 1, c + 1), &e(4, r, c + 1) + &e(4, r + 1, c)]
    };
    (levi, sym(0, 2), sym(2, 0))
}

pub fn sp4() -> LieAlgebra {
    let (levi, upper, lower) = sp4_parts();
    LieAlgebra::new(4, [levi, upper, lower].concat()).expect("closed")
}

/// Siegel parabolic of `sp4`: the `C = 0` part.
pub fn parabolic_sp4() -> LieAlgebra {
    let (levi, upper, _) = sp4_parts();
    LieAlgebra::new(4, [levi, upper].concat()).expect("closed")
}

pub fn gm(n: usize) -> Result<LieAlgebra> {
    if n == 0 {
        return Err(Error::InvalidParameters("gm(n) needs n ≥ 1".into()));
    }
    LieAlgebra::new(n, (0..n).map(|i| e(n, i, i)).collect())
}

/// `E_{i,n+1}` in `gl_{n+1}`.
pub fn ga(n: usize) -> Result<LieAlgebra> {
    if n == 0 {
        return Err(Error::InvalidParameters("ga(n) needs n ≥ 1".into()));
    }
    LieAlgebra::new(n + 1, (0..n).map(|i| e(n + 1, i, n)).collect())
}

/// Torus `diag(a+b, b, 0)` acting on the Heisenberg algebra
/// `E12, E23, E13` with weights `a, b, a+b`.
pub fn heisenberg_torus(a: i64, b: i64) -> Result<LieAlgebra> {
    if a == 0 && b == 0 {
        return Err(Error::InvalidParameters("heisenberg-torus(0,0) has no torus".into()));
    }
    let t = QMatrix::diagonal(&[int(a + b), int(b), Rat::zero()]);
    LieAlgebra::new(3, vec![t, e(3, 0, 1), e(3, 1, 2), e(3, 0, 2)])
}

pub fn upper_triangular(n: usize) -> Result<LieAlgebra> {
    if n == 0 {
        return Err(Error::InvalidParameters("upper-triangular(n) needs n ≥ 1".into()));
    }
    let mut b: Vec<QMatrix> = (0..n).map(|i| e(n, i, i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            b.push(e(n, i, j));
        }
    }
    LieAlgebra::new(n, b)
}

fn sl2_borel() -> LieAlgebra {
    LieAlgebra::new(2, sl_matrices(2, |i, j| i < j)).expect("closed")
}

const fn exp(
    dim: usize,
    (rad, nil, levi, torus, reductive): (usize, usize, usize, usize, usize),
    m: usize,
    is_mult_generated: bool,
) -> Expected {
    Expected { dim, rad, nil, levi, torus, reductive, m, is_mult_generated }
}

/// Shipped entries with their golden values.
pub const SHIPPED: &[(&str, Expected)] = &[
    ("paper-ex", exp(6, (6, 5, 0, 1, 1), 4, false)),
    ("sl2", exp(3, (0, 0, 3, 0, 3), 3, true)),
    ("sl3", exp(8, (0, 0, 8, 0, 8), 8, true)),
    ("sp4", exp(10, (0, 0, 10, 0, 10), 10, true)),
    ("sl2-borel", exp(2, (2, 1, 0, 1, 1), 2, true)),
    ("parabolic-sl3-21", exp(6, (3, 2, 3, 1, 4), 6, true)),
    ("parabolic-sl3-12", exp(6, (3, 2, 3, 1, 4), 6, true)),
    ("parabolic-sl4-22", exp(11, (5, 4, 6, 1, 7), 11, true)),
    ("parabolic-sl4-211", exp(10, (7, 5, 3, 2, 5), 10, true)),
    ("parabolic-sp4", exp(7, (4, 3, 3, 1, 4), 7, true)),
    ("gm1", exp(1, (1, 0, 0, 1, 1), 1, true)),
    ("gm3", exp(3, (3, 0, 0, 3, 3), 3, true)),
    ("ga1", exp(1, (1, 1, 0, 0, 0), 0, false)),
    ("ga3", exp(3, (3, 3, 0, 0, 0), 0, false)),
    ("heisenberg-torus(1,0)", exp(4, (4, 3, 0, 1, 1), 3, false)),
    ("heisenberg-torus(1,-1)", exp(4, (4, 3, 0, 1, 1), 4, true)),
    ("heisenberg-torus(0,1)", exp(4, (4, 3, 0, 1, 1), 3, false)),
    ("heisenberg-torus(1,1)", exp(4, (4, 3, 0, 1, 1), 4, true)),
    ("upper-triangular3", exp(6, (6, 3, 0, 3, 3), 6, true)),
];

fn normalize(name: &str) -> String {
    name.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_lowercase()
}

fn unknown(name: &str) -> Error {
    Error::UnknownBuiltin(name.to_string())
}

/// Parses `prefix<n>` or `prefix(n)`.
fn family_arg<'a>(name: &'a str, prefix: &str) -> Option<&'a str> {
    let rest = name.strip_prefix(prefix)?;
    let rest = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
    (!rest.is_empty()).then_some(rest)
}

fn parse_usize(s: &str, name: &str) -> Result<usize> {
    s.parse().map_err(|_| unknown(name))
}

fn parse_composition(name: &str, n: usize, parts: &str) -> Result<Vec<usize>> {
    let blocks: Vec<usize> = if parts.contains(',') {
        parts.split(',').map(|p| parse_usize(p, name)).collect::<Result<_>>()?
    } else {
        parts.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| unknown(name))).collect::<Result<_>>()?
    };
    if blocks.iter().sum::<usize>() != n {
        return Err(Error::InvalidParameters(format!("{blocks:?} is not a composition of {n}")));
    }
    Ok(blocks)
}

/// Canonical name and composition of a parabolic of `sl_n`, from
/// `parabolic-sl<n>-<parts>` or `parabolic(sl_n;a,b,…)`.
fn parse_parabolic_sl(name: &str) -> Result<Option<Vec<usize>>> {
    if let Some(rest) = name.strip_prefix("parabolic-sl") {
        let (n, parts) = rest.split_once('-').ok_or_else(|| unknown(name))?;
        return parse_composition(name, parse_usize(n, name)?, parts).map(Some);
    }
    if let Some(rest) = name.strip_prefix("parabolic(sl_").or_else(|| name.strip_prefix("parabolic(sl")) {
        let inner = rest.strip_suffix(')').ok_or_else(|| unknown(name))?;
        let (n, parts) = inner.split_once(';').ok_or_else(|| unknown(name))?;
        return parse_composition(name, parse_usize(n, name)?, parts).map(Some);
    }
    Ok(None)
}

fn composition_name(blocks: &[usize]) -> String {
    let n: usize = blocks.iter().sum();
    if blocks.iter().all(|&b| b < 10) {
        let parts: String = blocks.iter().map(|b| b.to_string()).collect();
        format!("parabolic-sl{n}-{parts}")
    } else {
        let parts: Vec<String> = blocks.iter().map(|b| b.to_string()).collect();
        format!("parabolic-sl{n}-{}", parts.join(","))
    }
}

/// Resolve a builtin name to its canonical form and algebra.
fn resolve(raw: &str) -> Result<(String, LieAlgebra)> {
    let name = normalize(raw);
    let fixed = match name.as_str() {
        "paper-ex" => Some(("paper-ex", solvable_example())),
        "sl2-borel" | "borel(sl2)" | "borel(sl_2)" => Some(("sl2-borel", sl2_borel())),
        "sp4" | "sp(4)" | "sp_4" => Some(("sp4", sp4())),
        "parabolic-sp4" | "parabolic(sp4)" | "parabolic(sp_4)" => Some(("parabolic-sp4", parabolic_sp4())),
        _ => None,
    };
    if let Some((n, g)) = fixed {
        return Ok((n.to_string(), g));
    }
    if let Some(blocks) = parse_parabolic_sl(&name)? {
        return Ok((composition_name(&blocks), parabolic_sl(&blocks)?));
    }
    if let Some(rest) = name.strip_prefix("heisenberg-torus(").and_then(|r| r.strip_suffix(')')) {
        let (a, b) = rest.split_once(',').ok_or_else(|| unknown(raw))?;
        let a: i64 = a.parse().map_err(|_| unknown(raw))?;
        let b: i64 = b.parse().map_err(|_| unknown(raw))?;
        return Ok((format!("heisenberg-torus({a},{b})"), heisenberg_torus(a, b)?));
    }
    type Family = fn(usize) -> Result<LieAlgebra>;
    let families: [(&str, &str, Family); 5] = [
        ("upper-triangular", "upper-triangular", upper_triangular),
        ("sl_", "sl", sl),
        ("sl", "sl", sl),
        ("gm", "gm", gm),
        ("ga", "ga", ga),
    ];
    for (prefix, canon, build) in families {
        if let Some(arg) = family_arg(&name, prefix) {
            let n = parse_usize(arg, raw)?;
            return Ok((format!("{canon}{n}"), build(n)?));
        }
    }
    Err(unknown(raw))
}

/// Look up a builtin by name. Parameterized families accept both
/// `sl3` and `sl(3)` styles.
pub fn builtin(name: &str) -> Result<CatalogEntry> {
    let (canonical, g) = resolve(name)?;
    let expected = SHIPPED.iter().find(|(n, _)| *n == canonical).map(|&(_, e)| e);
    Ok(CatalogEntry { name: canonical, g, expected })
}

/// All shipped entries, in listing order.
pub fn shipped() -> Vec<CatalogEntry> {
    SHIPPED.iter().map(|(n, _)| builtin(n).expect("shipped names resolve")).collect()
}

/// Embedding data for the regular subalgebras among the builtins:
/// borel and parabolics of `sl_n`, and the Siegel parabolic of `sp4`.
pub fn regular_pair(name: &str) -> Result<RegularPair> {
    let (canonical, sub) = resolve(name)?;
    let (f, rank) = if canonical == "parabolic-sp4" {
        (sp4(), 2)
    } else if canonical == "sl2-borel" || canonical.starts_with("parabolic-sl") {
        let n = sub.size();
        (sl(n)?, n - 1)
    } else {
        return Err(Error::InvalidParameters(format!("{canonical} has no regular embedding")));
    };
    let g_sub = f
        .pull_back(&sub, &sub.full())
        .ok_or_else(|| Error::InvalidParameters("subalgebra is not inside the ambient".into()))?;
    let diagonal = |m: &QMatrix| (0..m.rows()).all(|i| (0..m.cols()).all(|j| i == j || m[(i, j)].is_zero()));
    let torus = Subspace::coordinate(f.dim(), (0..f.dim()).filter(|&i| diagonal(&f.basis()[i])));
    Ok(RegularPair { f, g_sub, torus, rank })
}
