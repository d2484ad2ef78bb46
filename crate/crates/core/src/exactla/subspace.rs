use super::echelon::{kernel_from_rref, rref_rows};
use super::matrix::dot;
use super::{QMatrix, Rat};
use crate::error::{Error, Result};

/// A linear subspace of `Q^ambient_dim`, stored as the unique reduced
/// row-echelon basis of its span. Two subspaces are equal iff their
/// representations are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

fn check_ambient(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::AmbientMismatch { left: a, right: b })
    }
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim).map(|i| unit_vector(ambient_dim, i)).collect();
        Subspace { ambient_dim, basis, pivots: (0..ambient_dim).collect() }
    }

    /// Span of the given vectors. Panics if a vector has the wrong length.
    pub fn span<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rat>>,
    {
        let mut rows: Vec<Vec<Rat>> = vectors
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), ambient_dim, "vector length != ambient dimension"))
            .collect();
        let pivots = rref_rows(&mut rows, ambient_dim);
        Subspace { ambient_dim, basis: rows, pivots }
    }

    /// Span of the given vectors, reporting a length mismatch as an error.
    pub fn try_span(ambient_dim: usize, vectors: Vec<Vec<Rat>>) -> Result<Self> {
        for v in &vectors {
            check_ambient(ambient_dim, v.len())?;
        }
        Ok(Self::span(ambient_dim, vectors))
    }

    /// Span of coordinate unit vectors `e_i` for the given indices.
    pub fn coordinate(ambient_dim: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Self::span(ambient_dim, indices.into_iter().map(|i| unit_vector(ambient_dim, i)))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_ambient(self.ambient_dim, other.ambient_dim)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        Ok(Self::span(
            self.ambient_dim,
            self.basis.iter().chain(&other.basis).cloned(),
        ))
    }

    /// `self ∩ other`, from the kernel of `[A^T | -B^T]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        check_ambient(self.ambient_dim, other.ambient_dim)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        let (a, b) = (self.dim(), other.dim());
        // one equation per ambient coordinate, unknowns (alpha, beta)
        let mut rows: Vec<Vec<Rat>> = (0..self.ambient_dim)
            .map(|c| {
                self.basis
                    .iter()
                    .map(|v| v[c].clone())
                    .chain(other.basis.iter().map(|w| -&w[c]))
                    .collect()
            })
            .collect();
        let pivots = rref_rows(&mut rows, a + b);
        let ker = kernel_from_rref(&rows, &pivots, a + b);
        Ok(Self::span(
            self.ambient_dim,
            ker.basis.iter().map(|coef| self.combine(&coef[..a])),
        ))
    }

    /// Linear combination `Σ coef_i · basis_i`.
    pub fn combine(&self, coef: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.ambient_dim];
        for (c, v) in coef.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(v) {
                if !x.is_zero() {
                    *o += &(c * x);
                }
            }
        }
        out
    }

    /// Remainder of `v` after eliminating every pivot coordinate; zero iff
    /// `v` lies in the span.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rat]) -> Result<bool> {
        check_ambient(self.ambient_dim, v.len())?;
        Ok(self.reduce(v).iter().all(Rat::is_zero))
    }

    /// `other ⊆ self`.
    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        check_ambient(self.ambient_dim, other.ambient_dim)?;
        for v in &other.basis {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the span.
    pub fn coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let c: Vec<Rat> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        (self.combine(&c) == v).then_some(c)
    }

    /// Vectors from `self`'s basis that extend a basis of `sub` to one of
    /// `sub + self`, chosen greedily in basis order.
    pub fn complement_of(&self, sub: &Subspace) -> Result<Vec<Vec<Rat>>> {
        check_ambient(self.ambient_dim, sub.ambient_dim)?;
        let mut acc = sub.clone();
        let mut picked = Vec::new();
        for v in &self.basis {
            if !acc.contains(v)? {
                acc = acc.sum(&Subspace::span(self.ambient_dim, [v.clone()]))?;
                picked.push(v.clone());
            }
        }
        Ok(picked)
    }

    /// Annihilator `{y : y · b = 0 for all b in self}`.
    pub fn annihilator(&self) -> Subspace {
        kernel_from_rref(&self.basis, &self.pivots, self.ambient_dim)
    }

    /// Basis vectors as rows of a matrix.
    pub fn to_matrix(&self) -> QMatrix {
        if self.basis.is_empty() {
            return QMatrix::zeros(0, self.ambient_dim);
        }
        QMatrix::from_rows(self.basis.clone()).expect("echelon rows share a length")
    }

    /// Kernel of the map `x ↦ (f_1·x, ..., f_k·x)` restricted to `self`.
    pub fn restrict_kernel(&self, functionals: &[Vec<Rat>]) -> Subspace {
        if self.is_zero() {
            return self.clone();
        }
        let mut rows: Vec<Vec<Rat>> = functionals
            .iter()
            .map(|f| self.basis.iter().map(|b| dot(f, b)).collect())
            .collect();
        let pivots = rref_rows(&mut rows, self.dim());
        let ker = kernel_from_rref(&rows, &pivots, self.dim());
        Self::span(self.ambient_dim, ker.basis.iter().map(|c| self.combine(c)))
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

/// Coordinates relative to an arbitrary list of linearly independent
/// vectors (not the echelon basis).
#[derive(Clone, Debug)]
pub struct BasisCoords {
    span: Subspace,
    /// Row `i` expresses echelon vector `i` in terms of the original vectors.
    transform: Vec<Vec<Rat>>,
    len: usize,
}

impl BasisCoords {
    /// Returns `None` if the vectors are dependent.
    pub fn new(ambient_dim: usize, vectors: &[Vec<Rat>]) -> Option<Self> {
        let k = vectors.len();
        let mut rows: Vec<Vec<Rat>> = vectors
            .iter()
            .enumerate()
            .map(|(i, v)| {
                assert_eq!(v.len(), ambient_dim, "vector length != ambient dimension");
                let mut r = v.clone();
                r.extend((0..k).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
                r
            })
            .collect();
        let pivots = rref_rows(&mut rows, ambient_dim + k);
        if pivots.len() < k || pivots.iter().any(|&p| p >= ambient_dim) {
            return None;
        }
        let basis: Vec<Vec<Rat>> = rows.iter().map(|r| r[..ambient_dim].to_vec()).collect();
        let transform = rows.into_iter().map(|r| r[ambient_dim..].to_vec()).collect();
        Some(BasisCoords {
            span: Subspace { ambient_dim, basis, pivots },
            transform,
            len: k,
        })
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    /// `c` with `v = Σ c_i vectors_i`, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let r = self.span.coords(v)?;
        let mut out = vec![Rat::zero(); self.len];
        for (ri, t) in r.iter().zip(&self.transform) {
            if ri.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(t) {
                if !x.is_zero() {
                    *o += &(ri * x);
                }
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| Rat::from_int(x)).collect()
    }

    fn e(n: usize, i: usize) -> Vec<Rat> {
        unit_vector(n, i)
    }

    #[test]
    fn sums() {
        let a = Subspace::span(3, [e(3, 0)]);
        let b = Subspace::span(3, [e(3, 1)]);
        assert_eq!(a.sum(&b).unwrap(), Subspace::coordinate(3, [0, 1]));
        let full = Subspace::full(3);
        assert_eq!(full.sum(&full).unwrap(), full);
        let c = Subspace::span(3, [v(&[1, 1, 0])]);
        assert_eq!(a.sum(&c).unwrap(), Subspace::coordinate(3, [0, 1]));
    }

    #[test]
    fn intersections() {
        let a = Subspace::coordinate(3, [0, 1]);
        let b = Subspace::coordinate(3, [1, 2]);
        let i = a.intersect(&b).unwrap();
        assert_eq!(i, Subspace::coordinate(3, [1]));
        assert_eq!(a.dim() + b.dim(), a.sum(&b).unwrap().dim() + i.dim());
        let full = Subspace::full(3);
        assert_eq!(full.intersect(&full).unwrap(), full);
        let x = Subspace::coordinate(3, [0]);
        let y = Subspace::coordinate(3, [1]);
        assert!(x.intersect(&y).unwrap().is_zero());
    }

    #[test]
    fn membership() {
        let a = Subspace::coordinate(2, [0, 1]);
        assert!(a.contains(&v(&[1, 1])).unwrap());
        let b = Subspace::coordinate(2, [0]);
        assert!(!b.contains(&e(2, 1)).unwrap());
        let c = Subspace::span(2, [v(&[1, 2])]);
        assert!(c.contains(&v(&[2, 4])).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(a.sum(&b), Err(Error::AmbientMismatch { .. })));
        assert!(a.intersect(&b).is_err());
        assert!(a.contains(&v(&[1, 2, 3])).is_err());
    }

    #[test]
    fn coordinates_in_original_basis() {
        let vs = vec![v(&[1, 1, 0]), v(&[0, 1, 1])];
        let bc = BasisCoords::new(3, &vs).unwrap();
        let target = v(&[2, 5, 3]);
        assert_eq!(bc.coords(&target).unwrap(), v(&[2, 3]));
        assert!(bc.coords(&v(&[1, 0, 0])).is_none());
        assert!(BasisCoords::new(2, &[v(&[1, 2]), v(&[2, 4])]).is_none());
    }

    #[test]
    fn annihilator_and_restricted_kernel() {
        let a = Subspace::span(3, [v(&[1, 1, 0])]);
        let ann = a.annihilator();
        assert_eq!(ann.dim(), 2);
        assert!(ann.basis().iter().all(|y| dot(y, &v(&[1, 1, 0])).is_zero()));
        let plane = Subspace::coordinate(3, [0, 1]);
        let k = plane.restrict_kernel(&[v(&[1, -1, 7])]);
        assert_eq!(k, a);
    }
}
