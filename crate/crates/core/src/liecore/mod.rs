//! Matrix Lie algebras over the rationals.
//!
//! A [`LieAlgebra`] is a bracket-closed list of `n × n` matrices. Structure
//! constants are computed once at construction; afterwards every subspace of
//! `g` is a [`Subspace`] of `Q^{dim g}` in the coordinates of that basis, and
//! all bracket work happens on coordinate vectors.

use crate::error::{Error, Result};
use crate::exactla::{unit_vector, BasisCoords, QMatrix, Rat, Subspace};

/// Commutator `xy - yx`.
pub fn bracket(x: &QMatrix, y: &QMatrix) -> Result<QMatrix> {
    if !x.is_square() || !y.is_square() || x.rows() != y.rows() {
        return Err(Error::SizeMismatch(format!(
            "bracket of {}x{} and {}x{}",
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols()
        )));
    }
    Ok(&(x * y) - &(y * x))
}

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    size: usize,
    basis: Vec<QMatrix>,
    frame: BasisCoords,
    /// `constants[i][j]` holds the coordinates of `[x_i, x_j]`.
    constants: Vec<Vec<Vec<Rat>>>,
}

impl LieAlgebra {
    /// Builds the algebra spanned by `basis` inside `gl_size`.
    ///
    /// Fails if the matrices are dependent, the span is not closed under the
    /// bracket, or the Jacobi identity fails on a basis triple.
    pub fn new(size: usize, basis: Vec<QMatrix>) -> Result<Self> {
        for b in &basis {
            if b.rows() != size || b.cols() != size {
                return Err(Error::SizeMismatch(format!(
                    "basis matrix is {}x{}, expected {size}x{size}",
                    b.rows(),
                    b.cols()
                )));
            }
        }
        let flat: Vec<Vec<Rat>> = basis.iter().map(|b| b.as_slice().to_vec()).collect();
        let frame = BasisCoords::new(size * size, &flat).ok_or(Error::DependentBasis)?;
        let d = basis.len();
        let mut constants = vec![vec![vec![Rat::zero(); d]; d]; d];
        for i in 0..d {
            for j in (i + 1)..d {
                let br = bracket(&basis[i], &basis[j])?;
                let c = frame.coords(br.as_slice()).ok_or(Error::NotClosed { i, j })?;
                constants[j][i] = c.iter().map(|x| -x).collect();
                constants[i][j] = c;
            }
        }
        let g = LieAlgebra { size, basis, frame, constants };
        g.check_jacobi()?;
        Ok(g)
    }

    fn check_jacobi(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in (i + 1)..d {
                for k in (j + 1)..d {
                    let (ei, ej, ek) = (self.unit(i), self.unit(j), self.unit(k));
                    let a = self.bracket_coords(&ei, &self.bracket_coords(&ej, &ek));
                    let b = self.bracket_coords(&ej, &self.bracket_coords(&ek, &ei));
                    let c = self.bracket_coords(&ek, &self.bracket_coords(&ei, &ej));
                    if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(x + y + z).is_zero()) {
                        return Err(Error::Jacobi(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix size `n` of the ambient `gl_n`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[QMatrix] {
        &self.basis
    }

    /// Coordinates of `[x_i, x_j]`.
    pub fn structure_constants(&self, i: usize, j: usize) -> &[Rat] {
        &self.constants[i][j]
    }

    pub fn unit(&self, i: usize) -> Vec<Rat> {
        unit_vector(self.dim(), i)
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    pub fn zero(&self) -> Subspace {
        Subspace::zero(self.dim())
    }

    /// The matrix `Σ c_i x_i`.
    pub fn element(&self, coords: &[Rat]) -> QMatrix {
        assert_eq!(coords.len(), self.dim(), "coordinate vector length != dim g");
        let mut m = QMatrix::zeros(self.size, self.size);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                m = &m + &b.scale(c);
            }
        }
        m
    }

    /// Coordinates of a matrix, if it lies in `g`.
    pub fn coords_of(&self, m: &QMatrix) -> Option<Vec<Rat>> {
        if m.rows() != self.size || m.cols() != self.size {
            return None;
        }
        self.frame.coords(m.as_slice())
    }

    pub fn contains_matrix(&self, m: &QMatrix) -> bool {
        self.coords_of(m).is_some()
    }

    /// Basis matrices of a coordinate subspace.
    pub fn matrices(&self, a: &Subspace) -> Vec<QMatrix> {
        a.basis().iter().map(|v| self.element(v)).collect()
    }

    /// Bracket in coordinates: `[a, b]_k = Σ a_i b_j c^k_{ij}`.
    pub fn bracket_coords(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let d = self.dim();
        let mut out = vec![Rat::zero(); d];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() || i == j {
                    continue;
                }
                let coef = ai * bj;
                for (o, c) in out.iter_mut().zip(&self.constants[i][j]) {
                    if !c.is_zero() {
                        *o += &(&coef * c);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad x` on `g` (column `j` is `[x, x_j]`).
    pub fn ad(&self, x: &[Rat]) -> QMatrix {
        let d = self.dim();
        let mut m = QMatrix::zeros(d, d);
        for j in 0..d {
            let col = self.bracket_coords(x, &self.unit(j));
            for (i, v) in col.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    fn check(&self, a: &Subspace) -> Result<()> {
        if a.ambient_dim() == self.dim() {
            Ok(())
        } else {
            Err(Error::AmbientMismatch { left: self.dim(), right: a.ambient_dim() })
        }
    }

    /// `[a, b]`: span of brackets of basis pairs.
    pub fn product_space(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.check(a)?;
        self.check(b)?;
        let mut gens = Vec::with_capacity(a.dim() * b.dim());
        for x in a.basis() {
            for y in b.basis() {
                let br = self.bracket_coords(x, y);
                if br.iter().any(|c| !c.is_zero()) {
                    gens.push(br);
                }
            }
        }
        Ok(Subspace::span(self.dim(), gens))
    }

    /// `g, [g,g], [[g,g],[g,g]], …` up to and including the stable term.
    pub fn derived_series(&self) -> Vec<Subspace> {
        self.derived_series_of(&self.full())
    }

    pub fn derived_series_of(&self, a: &Subspace) -> Vec<Subspace> {
        let mut series = vec![a.clone()];
        for _ in 0..=self.dim() {
            let last = series.last().expect("nonempty");
            let next = self.product_space(last, last).expect("same algebra");
            if &next == last {
                break;
            }
            series.push(next);
        }
        series
    }

    /// `g, [g,g], [g,[g,g]], …` up to and including the stable term.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = self.full();
        let mut series = vec![full.clone()];
        for _ in 0..=self.dim() {
            let last = series.last().expect("nonempty");
            let next = self.product_space(&full, last).expect("same algebra");
            if &next == last {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.iter().flatten().flatten().all(Rat::is_zero)
    }

    /// Killing form `κ(x_i, x_j) = tr(ad x_i ∘ ad x_j)` on the basis.
    pub fn killing_form(&self) -> QMatrix {
        let d = self.dim();
        let ads: Vec<QMatrix> = (0..d).map(|i| self.ad(&self.unit(i))).collect();
        let mut k = QMatrix::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let t = trace_of_product(&ads[i], &ads[j]);
                k[(j, i)] = t.clone();
                k[(i, j)] = t;
            }
        }
        k
    }

    /// Trace form `tr(x_i x_j)` of the defining representation.
    pub fn trace_form(&self) -> QMatrix {
        let d = self.dim();
        let mut t = QMatrix::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let v = trace_of_product(&self.basis[i], &self.basis[j]);
                t[(j, i)] = v.clone();
                t[(i, j)] = v;
            }
        }
        t
    }

    /// `[g, a] ⊆ a`.
    pub fn is_ideal(&self, a: &Subspace) -> Result<bool> {
        let br = self.product_space(&self.full(), a)?;
        a.contains_subspace(&br)
    }

    /// `[a, a] ⊆ a`.
    pub fn is_subalgebra(&self, a: &Subspace) -> Result<bool> {
        let br = self.product_space(a, a)?;
        a.contains_subspace(&br)
    }

    /// Smallest ideal of `g` containing `seed`:
    /// `m₀ = seed`, `m_{k+1} = m_k + [g, m_k]` until stable.
    pub fn ideal_closure(&self, seed: &Subspace) -> Result<Subspace> {
        self.check(seed)?;
        let full = self.full();
        let mut m = seed.clone();
        for _ in 0..=self.dim() {
            let next = m.sum(&self.product_space(&full, &m)?)?;
            if next == m {
                break;
            }
            m = next;
        }
        Ok(m)
    }

    /// Smallest subalgebra containing `seed`:
    /// `s₀ = seed`, `s_{k+1} = s_k + [s_k, s_k]` until stable.
    pub fn subalgebra_closure(&self, seed: &Subspace) -> Result<Subspace> {
        self.check(seed)?;
        let mut s = seed.clone();
        for _ in 0..=self.dim() {
            let next = s.sum(&self.product_space(&s, &s)?)?;
            if next == s {
                break;
            }
            s = next;
        }
        Ok(s)
    }

    /// Centralizer `{x ∈ g : [x, a] = 0}`.
    pub fn centralizer(&self, a: &Subspace) -> Result<Subspace> {
        self.check(a)?;
        if a.is_zero() {
            return Ok(self.full());
        }
        // [x, y] = -ad(y) x, so stack the ad(y) for y in a basis of a
        let blocks: Vec<QMatrix> = a.basis().iter().map(|y| self.ad(y)).collect();
        Ok(crate::exactla::kernel(&QMatrix::vstack(&blocks)))
    }

    /// Centralizer of `a` inside the subspace `within`.
    pub fn centralizer_in(&self, a: &Subspace, within: &Subspace) -> Result<Subspace> {
        within.intersect(&self.centralizer(a)?)
    }

    /// Whether the quotient `g / ideal` is a nilpotent Lie algebra:
    /// the series `c₀ = g`, `c_{k+1} = [g, c_k] + ideal` reaches `ideal`.
    pub fn is_nilpotent_modulo(&self, ideal: &Subspace) -> Result<bool> {
        let full = self.full();
        let mut c = full.clone();
        for _ in 0..=self.dim() {
            if c == *ideal {
                return Ok(true);
            }
            let next = self.product_space(&full, &c)?.sum(ideal)?;
            if next == c {
                break;
            }
            c = next;
        }
        Ok(c == *ideal)
    }

    /// The Lie algebra spanned by the matrices of a subalgebra of `g`.
    pub fn subalgebra(&self, a: &Subspace) -> Result<LieAlgebra> {
        self.check(a)?;
        LieAlgebra::new(self.size, self.matrices(a))
    }

    /// Express a subspace of `other` (another algebra containing `self`'s
    /// matrices, same ambient size) in `self`'s coordinates.
    pub fn pull_back(&self, other: &LieAlgebra, a: &Subspace) -> Option<Subspace> {
        let vecs: Option<Vec<Vec<Rat>>> =
            other.matrices(a).iter().map(|m| self.coords_of(m)).collect();
        vecs.map(|v| Subspace::span(self.dim(), v))
    }
}

fn trace_of_product(a: &QMatrix, b: &QMatrix) -> Rat {
    let n = a.rows();
    let mut acc = Rat::zero();
    for i in 0..n {
        for k in 0..n {
            let x = &a[(i, k)];
            let y = &b[(k, i)];
            if !x.is_zero() && !y.is_zero() {
                acc += &(x * y);
            }
        }
    }
    acc
}
