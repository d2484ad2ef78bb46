use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{QMatrix, Rat};
use crate::liecore::LieAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reductive {
    None,
    Torus(usize),
    Sl2,
    Sl2Torus(usize),
}

impl Reductive {
    fn torus_rank(self) -> usize {
        match self {
            Reductive::None | Reductive::Sl2 => 0,
            Reductive::Torus(k) | Reductive::Sl2Torus(k) => k,
        }
    }

    fn has_sl2(self) -> bool {
        matches!(self, Reductive::Sl2 | Reductive::Sl2Torus(_))
    }

    fn dim(self) -> usize {
        self.torus_rank() + if self.has_sl2() { 3 } else { 0 }
    }
}

/// An irreducible `sl2`-module of dimension `sl2_dim` (1 to 3) on which
/// the `i`-th torus generator acts by the scalar `weights[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub sl2_dim: usize,
    pub weights: Vec<i64>,
}

/// Group data for `r ⋉ (V ⊕ h)`: `r` acts on `V` through the block form
/// `[[ρ(x), v], [0, 0]]`, and the torus acts on an optional Heisenberg
/// block `E12, E23, E13` by `diag(α+β, β, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraicSpec {
    pub reductive: Reductive,
    pub modules: Vec<ModuleSpec>,
    /// `(α_i, β_i)` per torus generator.
    pub heisenberg: Option<Vec<(i64, i64)>>,
}

/// `(e, h, f)` on the irreducible module of dimension `d`.
fn sl2_irrep(d: usize) -> [QMatrix; 3] {
    let mut e = QMatrix::zeros(d, d);
    let mut h = QMatrix::zeros(d, d);
    let mut f = QMatrix::zeros(d, d);
    let top = d as i64 - 1;
    for k in 0..d {
        h[(k, k)] = Rat::from_int(top - 2 * k as i64);
        if k + 1 < d {
            let k1 = k as i64 + 1;
            e[(k, k + 1)] = Rat::from_int(k1 * (top - k1 + 1));
            f[(k + 1, k)] = Rat::one();
        }
    }
    [e, h, f]
}

impl AlgebraicSpec {
    fn v_dim(&self) -> usize {
        self.modules.iter().map(|m| m.sl2_dim).sum()
    }

    pub fn total_dim(&self) -> usize {
        self.reductive.dim() + self.v_dim() + if self.heisenberg.is_some() { 3 } else { 0 }
    }

    fn validate(&self) -> Result<()> {
        let k = self.reductive.torus_rank();
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        for m in &self.modules {
            if !(1..=3).contains(&m.sl2_dim) {
                return bad(format!("module dimension {} outside 1..=3", m.sl2_dim));
            }
            if m.weights.len() != k {
                return bad(format!("module has {} weights for a rank-{k} torus", m.weights.len()));
            }
            if m.sl2_dim > 1 && !self.reductive.has_sl2() {
                return bad("non-trivial sl2 module without sl2".into());
            }
        }
        if self.reductive.has_sl2() && self.modules.iter().all(|m| m.sl2_dim == 1) {
            return bad("sl2 needs a faithful module".into());
        }
        if let Some(w) = &self.heisenberg {
            if w.len() != k {
                return bad(format!("heisenberg block has {} weights for a rank-{k} torus", w.len()));
            }
        }
        if self.total_dim() == 0 {
            return bad("empty algebra".into());
        }
        Ok(())
    }

    fn affine_size(&self) -> usize {
        let v = self.v_dim();
        if v == 0 {
            0
        } else {
            v + 1
        }
    }

    pub fn ambient_size(&self) -> usize {
        self.affine_size() + if self.heisenberg.is_some() { 3 } else { 0 }
    }

    /// Place a block on the diagonal at `offset`.
    fn embed(&self, block: &QMatrix, offset: usize, into: &mut QMatrix) {
        for i in 0..block.rows() {
            for j in 0..block.cols() {
                into[(offset + i, offset + j)] = block[(i, j)].clone();
            }
        }
    }

    /// Reductive basis: `e, h, f` of sl2 (if present) then the torus
    /// generators, each acting on every block.
    fn reductive_matrices(&self) -> Vec<QMatrix> {
        let n = self.ambient_size();
        let k = self.reductive.torus_rank();
        let mut out = Vec::new();
        if self.reductive.has_sl2() {
            for which in 0..3 {
                let mut x = QMatrix::zeros(n, n);
                let mut off = 0;
                for m in &self.modules {
                    self.embed(&sl2_irrep(m.sl2_dim)[which], off, &mut x);
                    off += m.sl2_dim;
                }
                out.push(x);
            }
        }
        for i in 0..k {
            let mut x = QMatrix::zeros(n, n);
            let mut off = 0;
            for m in &self.modules {
                for d in 0..m.sl2_dim {
                    x[(off + d, off + d)] = Rat::from_int(m.weights[i]);
                }
                off += m.sl2_dim;
            }
            if let Some(w) = &self.heisenberg {
                let (a, b) = w[i];
                let h = self.affine_size();
                x[(h, h)] = Rat::from_int(a + b);
                x[(h + 1, h + 1)] = Rat::from_int(b);
            }
            out.push(x);
        }
        out
    }

    pub fn build(&self) -> Result<LieAlgebra> {
        self.validate()?;
        let n = self.ambient_size();
        let mut basis = self.reductive_matrices();
        let v = self.v_dim();
        for i in 0..v {
            basis.push(QMatrix::unit(n, i, v));
        }
        if self.heisenberg.is_some() {
            let h = self.affine_size();
            basis.push(QMatrix::unit(n, h, h + 1));
            basis.push(QMatrix::unit(n, h + 1, h + 2));
            basis.push(QMatrix::unit(n, h, h + 2));
        }
        LieAlgebra::new(n, basis)
    }

    /// Coordinates (in the basis of [`build`](Self::build)) of a split
    /// toral family: `h` of sl2 and the torus generators.
    pub fn split_torus(&self) -> Vec<Vec<Rat>> {
        let d = self.total_dim();
        let mut idx = Vec::new();
        if self.reductive.has_sl2() {
            idx.push(1);
        }
        let start = if self.reductive.has_sl2() { 3 } else { 0 };
        idx.extend(start..start + self.reductive.torus_rank());
        idx.into_iter().map(|i| crate::exactla::unit_vector(d, i)).collect()
    }
}

/// Bounds for [`random_algebraic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomParams {
    pub max_dim: usize,
    pub max_weight: i64,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams { max_dim: 8, max_weight: 2 }
    }
}

fn sample_spec(rng: &mut ChaCha8Rng, params: RandomParams) -> AlgebraicSpec {
    let reductive = match rng.gen_range(0..4) {
        0 => Reductive::None,
        1 => Reductive::Torus(rng.gen_range(1..=2)),
        2 => Reductive::Sl2,
        _ => Reductive::Sl2Torus(1),
    };
    let k = reductive.torus_rank();
    let w = params.max_weight;
    let weights = |rng: &mut ChaCha8Rng| (0..k).map(|_| rng.gen_range(-w..=w)).collect::<Vec<_>>();
    let mut spec = AlgebraicSpec { reductive, modules: Vec::new(), heisenberg: None };
    if k > 0 && rng.gen_bool(0.35) {
        let pairs = (0..k).map(|_| (rng.gen_range(-w..=w), rng.gen_range(-w..=w))).collect();
        spec.heisenberg = Some(pairs);
    }
    let budget = params.max_dim.saturating_sub(spec.total_dim());
    if reductive.has_sl2() && budget >= 2 {
        let d = rng.gen_range(2..=budget.min(3));
        spec.modules.push(ModuleSpec { sl2_dim: d, weights: weights(rng) });
    }
    let count = rng.gen_range(0..=3);
    for _ in 0..count {
        let room = params.max_dim.saturating_sub(spec.total_dim());
        if room == 0 {
            break;
        }
        let top = if reductive.has_sl2() { room.min(3) } else { 1 };
        let d = rng.gen_range(1..=top);
        spec.modules.push(ModuleSpec { sl2_dim: d, weights: weights(rng) });
    }
    spec
}

/// A random algebraic Lie algebra of dimension at most `params.max_dim`,
/// a pure function of `(seed, params)`. Samples whose construction is
/// degenerate (for instance a torus generator acting by zero) are
/// redrawn from the same stream.
pub fn random_algebraic(seed: u64, params: RandomParams) -> Result<(AlgebraicSpec, LieAlgebra)> {
    if params.max_dim < 1 || params.max_weight < 0 {
        return Err(Error::InvalidParameters(format!("{params:?}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let spec = sample_spec(&mut rng, params);
        if spec.total_dim() > params.max_dim {
            continue;
        }
        if let Ok(g) = spec.build() {
            return Ok((spec, g));
        }
    }
    Err(Error::InvalidParameters(format!("no algebra found for {params:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{ga, heisenberg_torus};
    use crate::multgen::analyze;

    #[test]
    fn irreps_satisfy_sl2_relations() {
        for d in 1..=3 {
            let [e, h, f] = sl2_irrep(d);
            let br = |a: &QMatrix, b: &QMatrix| &(a * b) - &(b * a);
            assert_eq!(br(&e, &f), h);
            assert_eq!(br(&h, &e), e.scale(&Rat::from_int(2)));
            assert_eq!(br(&h, &f), f.scale(&Rat::from_int(-2)));
        }
    }

    #[test]
    fn degenerate_parameters_give_ga2() {
        let spec = AlgebraicSpec {
            reductive: Reductive::None,
            modules: vec![ModuleSpec { sl2_dim: 1, weights: vec![] }; 2],
            heisenberg: None,
        };
        assert_eq!(spec.build().unwrap().basis(), ga(2).unwrap().basis());
    }

    #[test]
    fn torus_with_closing_bracket_is_heisenberg_torus() {
        let spec = AlgebraicSpec { reductive: Reductive::Torus(1), modules: vec![], heisenberg: Some(vec![(1, 0)]) };
        assert_eq!(spec.build().unwrap().basis(), heisenberg_torus(1, 0).unwrap().basis());
    }

    #[test]
    fn sl2_on_standard_module() {
        let spec = AlgebraicSpec {
            reductive: Reductive::Sl2,
            modules: vec![ModuleSpec { sl2_dim: 2, weights: vec![] }],
            heisenberg: None,
        };
        let g = spec.build().unwrap();
        assert_eq!(g.dim(), 5);
        let (_, m) = analyze(&g).unwrap();
        assert!(m.is_mult_generated);
    }

    #[test]
    fn incompatible_parameters() {
        let spec = AlgebraicSpec {
            reductive: Reductive::Torus(1),
            modules: vec![ModuleSpec { sl2_dim: 1, weights: vec![1, 2] }],
            heisenberg: None,
        };
        assert!(matches!(spec.build(), Err(Error::InvalidParameters(_))));
        let spec = AlgebraicSpec {
            reductive: Reductive::Sl2,
            modules: vec![ModuleSpec { sl2_dim: 1, weights: vec![] }],
            heisenberg: None,
        };
        assert!(matches!(spec.build(), Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn seeded_determinism() {
        let p = RandomParams::default();
        for seed in 0..20 {
            let (s1, g1) = random_algebraic(seed, p).unwrap();
            let (s2, g2) = random_algebraic(seed, p).unwrap();
            assert_eq!(s1, s2);
            assert_eq!(g1.basis(), g2.basis());
            assert!(g1.dim() <= 8);
        }
    }
}
