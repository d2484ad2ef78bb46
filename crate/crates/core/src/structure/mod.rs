//! Decomposition of an algebraic matrix Lie algebra
//! `g = (l ⊕ z) ⊕ n`: Levi part `l`, toral part `z`, nilpotent radical `n`,
//! with `rad = z ⊕ n` and reductive part `r = l ⊕ z`.
//!
//! Every stage is verified on the concrete input. A failed check is
//! reported as [`Error::InputNotAlgebraic`] naming the check; the pipeline
//! never silently returns a decomposition it could not confirm.

mod weights;

pub use weights::{rational_roots, weight_decomposition, WeightSpace};

use crate::chevalley::{is_nilpotent_matrix, is_semisimple_matrix, jordan_chevalley};
use crate::error::{Error, Result};
use crate::exactla::{BasisCoords, QMatrix, Rat, Subspace};
use crate::liecore::LieAlgebra;

/// Named pass/fail results of the structural checks, in evaluation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    checks: Vec<(&'static str, bool)>,
}

impl Verification {
    fn new() -> Self {
        Verification { checks: Vec::new() }
    }

    fn record(&mut self, name: &'static str, ok: bool) {
        self.checks.push((name, ok));
    }

    pub fn checks(&self) -> &[(&'static str, bool)] {
        &self.checks
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|&(_, ok)| ok)
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        self.checks.iter().find(|(_, ok)| !ok).map(|&(name, _)| name)
    }
}

#[derive(Clone, Debug)]
pub struct StructureReport {
    pub g: LieAlgebra,
    pub rad: Subspace,
    pub nil: Subspace,
    pub levi: Subspace,
    pub torus: Subspace,
    pub reductive: Subspace,
    pub verified: Verification,
    /// Whether `(nil, levi, torus)` came from the input rather than the
    /// automatic construction.
    pub declared: bool,
}

impl StructureReport {
    /// `(rad, nil, levi, torus, reductive)` dimensions.
    pub fn dims(&self) -> (usize, usize, usize, usize, usize) {
        (
            self.rad.dim(),
            self.nil.dim(),
            self.levi.dim(),
            self.torus.dim(),
            self.reductive.dim(),
        )
    }
}

/// User-supplied decomposition, in coordinates of `g`'s basis.
#[derive(Clone, Debug)]
pub struct Declared {
    pub nil: Subspace,
    pub levi: Subspace,
    pub torus: Subspace,
}

/// Solvable radical as the Killing-orthogonal complement of `[g, g]`,
/// verified to be a solvable ideal.
pub fn solvable_radical(g: &LieAlgebra) -> Result<Subspace> {
    let kappa = g.killing_form();
    let derived = g.product_space(&g.full(), &g.full())?;
    let functionals: Vec<Vec<Rat>> = derived.basis().iter().map(|d| kappa.mul_vec(d)).collect();
    let rad = g.full().restrict_kernel(&functionals);
    if !g.is_ideal(&rad)? {
        return Err(Error::not_algebraic("radical is an ideal"));
    }
    if !g.derived_series_of(&rad).last().is_some_and(Subspace::is_zero) {
        return Err(Error::not_algebraic("radical is solvable"));
    }
    Ok(rad)
}

/// Whether all products of `size` matrices from the span vanish.
pub fn associative_nilpotent(matrices: &[QMatrix], size: usize) -> bool {
    if matrices.is_empty() {
        return true;
    }
    let dim = size * size;
    let mut layer = Subspace::span(dim, matrices.iter().map(|m| m.as_slice().to_vec()));
    for _ in 0..size {
        if layer.is_zero() {
            return true;
        }
        let mut prods = Vec::new();
        for p in layer.basis() {
            let pm = QMatrix::from_vec(size, size, p.clone()).expect("flattened square matrix");
            for y in matrices {
                let q = &pm * y;
                if !q.is_zero() {
                    prods.push(q.into_vec());
                }
            }
        }
        layer = Subspace::span(dim, prods);
    }
    layer.is_zero()
}

/// Nilpotent radical: the part of `rad` orthogonal to all of `g` under the
/// trace form of the defining representation, verified to be an ideal
/// whose associative closure is nilpotent.
pub fn nilpotent_radical(g: &LieAlgebra, rad: &Subspace) -> Result<Subspace> {
    let t = g.trace_form();
    let functionals: Vec<Vec<Rat>> = t.to_rows();
    let nil = rad.restrict_kernel(&functionals);
    if !g.is_ideal(&nil)? {
        return Err(Error::not_algebraic("nilpotent radical is an ideal"));
    }
    if !associative_nilpotent(&g.matrices(&nil), g.size()) {
        return Err(Error::not_algebraic("nilpotent radical consists of nilpotent matrices"));
    }
    Ok(nil)
}

/// A Levi subalgebra complementing `rad`.
///
/// Starts from the coordinate complement of `rad` and corrects it down the
/// derived series `rad = R₀ ⊃ R₁ ⊃ … ⊃ 0`: at step `t` the defects
/// `[x_i, x_j] - Σ c^k_{ij} x_k` lie in `R_t`, and a linear system for
/// corrections in `R_t` pushes them into `R_{t+1}`.
pub fn levi_subalgebra(g: &LieAlgebra, rad: &Subspace) -> Result<Subspace> {
    let d = g.dim();
    if rad.is_full() {
        return Ok(g.zero());
    }
    let mut x = g.full().complement_of(rad)?;
    let m = x.len();

    // structure constants of g/rad on the chosen complement
    let mut frame_vecs = x.clone();
    frame_vecs.extend(rad.basis().iter().cloned());
    let frame = BasisCoords::new(d, &frame_vecs).expect("complement plus radical is a basis");
    let mut quot = vec![vec![Vec::new(); m]; m];
    for i in 0..m {
        for j in 0..m {
            let c = frame.coords(&g.bracket_coords(&x[i], &x[j])).expect("bracket lies in g");
            quot[i][j] = c[..m].to_vec();
        }
    }

    let series = g.derived_series_of(rad);
    if !series.last().is_some_and(Subspace::is_zero) {
        return Err(Error::not_algebraic("radical is solvable"));
    }
    for step in series.windows(2) {
        let (rt, rnext) = (&step[0], &step[1]);
        let w = rt.complement_of(rnext)?;
        let p = w.len();
        if p == 0 {
            continue;
        }
        let q: Vec<Vec<Rat>> = rnext.annihilator().basis().to_vec();
        let proj = |v: &[Rat]| -> Vec<Rat> { q.iter().map(|f| dot(f, v)).collect() };
        let qw: Vec<Vec<Rat>> = w.iter().map(|wa| proj(wa)).collect();
        let qxw: Vec<Vec<Vec<Rat>>> = x
            .iter()
            .map(|xi| w.iter().map(|wa| proj(&g.bracket_coords(xi, wa))).collect())
            .collect();

        let unknowns = m * p;
        let var = |i: usize, a: usize| i * p + a;
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..m {
            for j in (i + 1)..m {
                let mut defect = g.bracket_coords(&x[i], &x[j]);
                for (k, c) in quot[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        for (dv, xv) in defect.iter_mut().zip(&x[k]) {
                            *dv -= &(c * xv);
                        }
                    }
                }
                let qd = proj(&defect);
                for (l, qd_l) in qd.iter().enumerate() {
                    let mut row = vec![Rat::zero(); unknowns];
                    for a in 0..p {
                        row[var(j, a)] += &qxw[i][a][l];
                        row[var(i, a)] -= &qxw[j][a][l];
                        for (k, c) in quot[i][j].iter().enumerate() {
                            if !c.is_zero() {
                                row[var(k, a)] -= &(c * &qw[a][l]);
                            }
                        }
                    }
                    rows.push(row);
                    rhs.push(-qd_l);
                }
            }
        }
        if rows.is_empty() {
            continue;
        }
        let a = QMatrix::from_rows(rows).expect("rows share the unknown count");
        let u = crate::exactla::solve(&a, &rhs)
            .ok_or_else(|| Error::not_algebraic("Levi lifting system is consistent"))?;
        for (i, xi) in x.iter_mut().enumerate() {
            for (a, wa) in w.iter().enumerate() {
                let coef = &u[var(i, a)];
                if coef.is_zero() {
                    continue;
                }
                for (xv, wv) in xi.iter_mut().zip(wa) {
                    *xv += &(coef * wv);
                }
            }
        }
    }

    let levi = Subspace::span(d, x);
    if !g.is_subalgebra(&levi)? {
        return Err(Error::not_algebraic("Levi part is a subalgebra"));
    }
    Ok(levi)
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).map(|(x, y)| x * y).sum()
}

/// Toral complement `z` with `rad = z ⊕ nil`, `[z, levi] = 0`.
///
/// Works inside the centralizer of `levi` in `rad`: repeatedly takes the
/// first basis vector not yet covered modulo `nil`, replaces it by its
/// semisimple Jordan part, and shrinks the working space to the centralizer
/// of everything chosen so far.
pub fn toral_complement(
    g: &LieAlgebra,
    rad: &Subspace,
    nil: &Subspace,
    levi: &Subspace,
) -> Result<Subspace> {
    let mut work = g.centralizer_in(levi, rad)?;
    let mut covered = nil.clone();
    let mut chosen: Vec<Vec<Rat>> = Vec::new();
    while covered.dim() < rad.dim() {
        let mut pick = None;
        for v in work.basis() {
            if !covered.contains(v)? {
                pick = Some(v.clone());
                break;
            }
        }
        let x = pick.ok_or_else(|| Error::not_algebraic("toral complement has full dimension"))?;
        let s = jordan_chevalley(&g.element(&x))?.s;
        let s = g
            .coords_of(&s)
            .ok_or_else(|| Error::not_algebraic("semisimple parts lie in g"))?;
        if !rad.contains(&s)? || covered.contains(&s)? {
            return Err(Error::not_algebraic("semisimple part is a new radical direction"));
        }
        let line = Subspace::span(g.dim(), [s.clone()]);
        covered = covered.sum(&line)?;
        work = g.centralizer_in(&line, &work)?;
        chosen.push(s);
    }
    Ok(Subspace::span(g.dim(), chosen))
}

/// Jordan parts of every basis element lie in `g`.
pub fn jordan_closed(g: &LieAlgebra) -> Result<bool> {
    for b in g.basis() {
        let p = jordan_chevalley(b)?;
        if !g.contains_matrix(&p.s) || !g.contains_matrix(&p.n) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn killing_nondegenerate(g: &LieAlgebra, a: &Subspace) -> Result<bool> {
    if a.is_zero() {
        return Ok(true);
    }
    let sub = g.subalgebra(a)?;
    Ok(crate::exactla::rank(&sub.killing_form()) == sub.dim())
}

fn direct_sum(a: &Subspace, b: &Subspace) -> Result<Option<Subspace>> {
    let s = a.sum(b)?;
    Ok((s.dim() == a.dim() + b.dim()).then_some(s))
}

fn assemble(
    g: &LieAlgebra,
    rad: Subspace,
    nil: Subspace,
    levi: Subspace,
    torus: Subspace,
    declared: bool,
) -> Result<StructureReport> {
    for s in [&nil, &levi, &torus] {
        if s.ambient_dim() != g.dim() {
            return Err(Error::AmbientMismatch { left: g.dim(), right: s.ambient_dim() });
        }
    }
    let mut v = Verification::new();
    v.record("radical is a solvable ideal", g.is_ideal(&rad)? && g.derived_series_of(&rad).last().is_some_and(Subspace::is_zero));
    v.record("nil is an ideal", g.is_ideal(&nil)?);
    v.record("nil is associatively nilpotent", associative_nilpotent(&g.matrices(&nil), g.size()));
    v.record("nil lies in the radical", rad.contains_subspace(&nil)?);
    v.record("levi is a subalgebra", g.is_subalgebra(&levi)?);
    let levi_perfect = levi.is_zero() || g.product_space(&levi, &levi)? == levi;
    v.record("levi is perfect", levi_perfect);
    v.record("levi has nondegenerate Killing form", killing_nondegenerate(g, &levi)?);
    v.record("levi complements the radical", direct_sum(&levi, &rad)?.is_some_and(|s| s.is_full()));
    let torus_mats = g.matrices(&torus);
    v.record("torus is abelian", g.product_space(&torus, &torus)?.is_zero());
    let mut semisimple = true;
    for t in &torus_mats {
        semisimple &= is_semisimple_matrix(t)?;
    }
    v.record("torus basis is semisimple", semisimple);
    v.record("torus centralizes levi", g.product_space(&torus, &levi)?.is_zero());
    let rad_split = direct_sum(&torus, &nil)?;
    v.record("radical = torus ⊕ nil", rad_split.as_ref() == Some(&rad));
    let reductive = levi.sum(&torus)?;
    v.record("reductive = levi ⊕ torus", reductive.dim() == levi.dim() + torus.dim());
    v.record("g = reductive ⊕ nil", direct_sum(&reductive, &nil)?.is_some_and(|s| s.is_full()));
    let mut nil_elements = true;
    for n in g.matrices(&nil) {
        nil_elements &= is_nilpotent_matrix(&n)?;
    }
    v.record("nil basis is nilpotent", nil_elements);
    v.record("Jordan parts of the basis lie in g", jordan_closed(g)?);

    if let Some(check) = v.first_failure() {
        return Err(Error::not_algebraic(check));
    }
    Ok(StructureReport { g: g.clone(), rad, nil, levi, torus, reductive, verified: v, declared })
}

/// Full structure pipeline.
pub fn decompose(g: &LieAlgebra) -> Result<StructureReport> {
    let rad = solvable_radical(g)?;
    let nil = nilpotent_radical(g, &rad)?;
    let levi = levi_subalgebra(g, &rad)?;
    let torus = toral_complement(g, &rad, &nil, &levi)?;
    assemble(g, rad, nil, levi, torus, false)
}

/// Verify a user-supplied decomposition instead of constructing one.
pub fn decompose_declared(g: &LieAlgebra, declared: Declared) -> Result<StructureReport> {
    let rad = solvable_radical(g)?;
    assemble(g, rad, declared.nil, declared.levi, declared.torus, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize, j: usize) -> QMatrix {
        QMatrix::unit(n, i - 1, j - 1)
    }

    fn h2() -> QMatrix {
        QMatrix::from_ints(&[[1, 0], [0, -1]])
    }

    fn solvable_example() -> LieAlgebra {
        let b = vec![e(4, 2, 2), e(4, 1, 2), e(4, 1, 3), e(4, 1, 4), e(4, 2, 4), e(4, 3, 4)];
        LieAlgebra::new(4, b).unwrap()
    }

    fn parabolic_sl3() -> LieAlgebra {
        let b = vec![
            QMatrix::from_ints(&[[1, 0, 0], [0, -1, 0], [0, 0, 0]]),
            QMatrix::from_ints(&[[0, 0, 0], [0, 1, 0], [0, 0, -1]]),
            e(3, 1, 2),
            e(3, 2, 1),
            e(3, 1, 3),
            e(3, 2, 3),
        ];
        LieAlgebra::new(3, b).unwrap()
    }

    #[test]
    fn radicals() {
        let sl2 = LieAlgebra::new(2, vec![e(2, 1, 2), h2(), e(2, 2, 1)]).unwrap();
        assert!(solvable_radical(&sl2).unwrap().is_zero());
        let g = solvable_example();
        assert!(solvable_radical(&g).unwrap().is_full());
        assert_eq!(solvable_radical(&parabolic_sl3()).unwrap().dim(), 3);
    }

    #[test]
    fn nilradicals() {
        let borel = LieAlgebra::new(2, vec![h2(), e(2, 1, 2)]).unwrap();
        let rad = solvable_radical(&borel).unwrap();
        assert_eq!(nilpotent_radical(&borel, &rad).unwrap(), Subspace::coordinate(2, [1]));

        let g = solvable_example();
        let nil = nilpotent_radical(&g, &g.full()).unwrap();
        assert_eq!(nil, Subspace::coordinate(6, 1..6));

        let gm3 = LieAlgebra::new(3, (0..3).map(|i| QMatrix::unit(3, i, i)).collect()).unwrap();
        assert!(nilpotent_radical(&gm3, &gm3.full()).unwrap().is_zero());
    }

    #[test]
    fn levi_parts() {
        let sl2 = LieAlgebra::new(2, vec![e(2, 1, 2), h2(), e(2, 2, 1)]).unwrap();
        assert!(levi_subalgebra(&sl2, &sl2.zero()).unwrap().is_full());
        let g = solvable_example();
        assert!(levi_subalgebra(&g, &g.full()).unwrap().is_zero());
        let p = parabolic_sl3();
        let rad = solvable_radical(&p).unwrap();
        let levi = levi_subalgebra(&p, &rad).unwrap();
        assert_eq!(levi.dim(), 3);
        // a copy of sl2 in the upper 2x2 block
        for m in p.matrices(&levi) {
            assert!(m[(0, 2)].is_zero() && m[(1, 2)].is_zero() && m[(2, 2)].is_zero());
        }
        assert!(p.product_space(&levi, &levi).unwrap() == levi);
    }

    #[test]
    fn tori() {
        let g = solvable_example();
        let nil = Subspace::coordinate(6, 1..6);
        let z = toral_complement(&g, &g.full(), &nil, &g.zero()).unwrap();
        assert_eq!(z, Subspace::coordinate(6, [0]));

        let borel = LieAlgebra::new(2, vec![h2(), e(2, 1, 2)]).unwrap();
        let z = toral_complement(&borel, &borel.full(), &Subspace::coordinate(2, [1]), &borel.zero()).unwrap();
        assert_eq!(borel.matrices(&z), vec![h2()]);
    }

    #[test]
    fn toral_complement_takes_semisimple_parts() {
        // basis {D + N, N} with D = E11, N = E23: the first lift D + N is not
        // semisimple, the torus must come out as span{D}
        let d = QMatrix::unit(3, 0, 0);
        let n = e(3, 2, 3);
        let g = LieAlgebra::new(3, vec![&d + &n, n]).unwrap();
        let r = decompose(&g).unwrap();
        assert_eq!(r.dims(), (2, 1, 0, 1, 1));
        assert_eq!(g.matrices(&r.torus), vec![d]);
    }

    #[test]
    fn full_decompositions() {
        let r = decompose(&solvable_example()).unwrap();
        assert_eq!(r.dims(), (6, 5, 0, 1, 1));
        assert!(r.verified.all_passed());

        let sl2 = LieAlgebra::new(2, vec![e(2, 1, 2), h2(), e(2, 2, 1)]).unwrap();
        assert_eq!(decompose(&sl2).unwrap().dims(), (0, 0, 3, 0, 3));

        let heis = LieAlgebra::new(
            3,
            vec![QMatrix::unit(3, 0, 0), e(3, 1, 2), e(3, 2, 3), e(3, 1, 3)],
        )
        .unwrap();
        let r = decompose(&heis).unwrap();
        assert_eq!(r.dims(), (4, 3, 0, 1, 1));
        assert_eq!(r.nil, Subspace::coordinate(4, 1..4));

        let p = decompose(&parabolic_sl3()).unwrap();
        assert_eq!(p.dims(), (3, 2, 3, 1, 4));
    }

    #[test]
    fn deterministic() {
        let a = decompose(&parabolic_sl3()).unwrap();
        let b = decompose(&parabolic_sl3()).unwrap();
        assert_eq!((a.levi, a.torus), (b.levi, b.torus));
    }

    #[test]
    fn non_algebraic_inputs_are_rejected() {
        // x = E11 + E23: its Jordan parts are not in span{x}
        let x = QMatrix::from_ints(&[[1, 0, 0], [0, 0, 1], [0, 0, 0]]);
        let g = LieAlgebra::new(3, vec![x]).unwrap();
        assert!(matches!(decompose(&g), Err(Error::InputNotAlgebraic { .. })));
    }

    #[test]
    fn declared_blocks() {
        let g = solvable_example();
        let good = Declared {
            nil: Subspace::coordinate(6, 1..6),
            levi: g.zero(),
            torus: Subspace::coordinate(6, [0]),
        };
        let r = decompose_declared(&g, good).unwrap();
        assert!(r.declared);
        let fake = Declared {
            nil: Subspace::coordinate(6, 2..6),
            levi: g.zero(),
            torus: Subspace::coordinate(6, [0, 1]),
        };
        assert!(matches!(decompose_declared(&g, fake), Err(Error::InputNotAlgebraic { .. })));
    }
}
