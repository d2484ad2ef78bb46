//! Element-level tools: semisimplicity and nilpotency tests, the
//! Jordan–Chevalley decomposition, and exact exp/log between nilpotent Lie
//! elements and unipotent group elements.
//!
//! Semisimplicity is decided over the algebraic closure without computing
//! eigenvalues: a matrix is semisimple iff its minimal polynomial is
//! squarefree.

use crate::error::{Error, Result};
use crate::exactla::{inverse, BasisCoords, Poly, QMatrix, Rat};

fn require_square(x: &QMatrix) -> Result<()> {
    if x.is_square() {
        Ok(())
    } else {
        Err(Error::SizeMismatch(format!("{}x{} is not square", x.rows(), x.cols())))
    }
}

/// Monic annihilating polynomial of least degree, found as the first linear
/// dependency among `I, x, x², …`.
pub fn minimal_polynomial(x: &QMatrix) -> Result<Poly> {
    require_square(x)?;
    let n = x.rows();
    let mut powers = vec![QMatrix::identity(n).into_vec()];
    let mut p = QMatrix::identity(n);
    for _ in 0..=n {
        p = &p * x;
        let coords = BasisCoords::new(n * n, &powers)
            .expect("lower powers are independent")
            .coords(p.as_slice());
        if let Some(c) = coords {
            let mut coeffs: Vec<Rat> = c.into_iter().map(|v| -v).collect();
            coeffs.push(Rat::one());
            return Ok(Poly::new(coeffs));
        }
        powers.push(p.as_slice().to_vec());
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

/// Characteristic polynomial `det(tI - x)` by the Faddeev–LeVerrier
/// recurrence.
pub fn characteristic_polynomial(x: &QMatrix) -> Result<Poly> {
    require_square(x)?;
    let n = x.rows();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let id = QMatrix::identity(n);
    let mut m = QMatrix::zeros(n, n);
    for k in 1..=n {
        m = &(x * &m) + &id.scale(&coeffs[n - k + 1]);
        let am = x * &m;
        coeffs[n - k] = -(am.trace() / Rat::from_int(k as i64));
    }
    Ok(Poly::new(coeffs))
}

/// Diagonalizable over the algebraic closure.
pub fn is_semisimple_matrix(x: &QMatrix) -> Result<bool> {
    Ok(minimal_polynomial(x)?.is_squarefree())
}

pub fn is_nilpotent_matrix(x: &QMatrix) -> Result<bool> {
    let mp = minimal_polynomial(x)?;
    let c = mp.coeffs();
    Ok(c[..c.len() - 1].iter().all(Rat::is_zero))
}

/// `x = s + n` with `s` semisimple, `n` nilpotent, `sn = ns`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanPair {
    pub s: QMatrix,
    pub n: QMatrix,
}

impl JordanPair {
    /// Recheck every defining property against `x`.
    pub fn verify(&self, x: &QMatrix) -> Result<bool> {
        Ok(&self.s + &self.n == *x
            && &self.s * &self.n == &self.n * &self.s
            && is_semisimple_matrix(&self.s)?
            && is_nilpotent_matrix(&self.n)?
            && in_power_algebra(x, &self.s)?
            && in_power_algebra(x, &self.n)?)
    }
}

/// Whether `y ∈ span{I, x, x², …}`.
pub fn in_power_algebra(x: &QMatrix, y: &QMatrix) -> Result<bool> {
    require_square(x)?;
    let n = x.rows();
    let deg = minimal_polynomial(x)?.degree().unwrap_or(0);
    let powers: Vec<Vec<Rat>> = (0..deg).map(|k| x.pow(k as u32).into_vec()).collect();
    let frame = BasisCoords::new(n * n, &powers).expect("powers below the minimal degree are independent");
    Ok(frame.coords(y.as_slice()).is_some())
}

fn newton_steps(n: usize) -> usize {
    // ⌈log₂ n⌉ + 1
    let mut k = 0;
    while (1usize << k) < n {
        k += 1;
    }
    k + 1
}

/// Jordan–Chevalley decomposition over the rationals.
///
/// With `f` the squarefree part of the characteristic polynomial, the
/// iteration `z ← z - f(z) f'(z)⁻¹` starting at `x` converges quadratically
/// to the semisimple part; `⌈log₂ n⌉ + 1` steps suffice and the result is
/// re-verified before returning.
pub fn jordan_chevalley(x: &QMatrix) -> Result<JordanPair> {
    require_square(x)?;
    let size = x.rows();
    if size == 0 {
        return Ok(JordanPair { s: x.clone(), n: x.clone() });
    }
    let f = characteristic_polynomial(x)?.squarefree_part();
    let df = f.derivative();
    let mut z = x.clone();
    for _ in 0..newton_steps(size) {
        let fz = f.eval_matrix(&z);
        if fz.is_zero() {
            break;
        }
        let dz = df.eval_matrix(&z);
        let inv = inverse(&dz).ok_or_else(|| {
            Error::NotInvertible("f'(z) during Jordan-Chevalley lifting".into())
        })?;
        z = &z - &(&fz * &inv);
    }
    let pair = JordanPair { n: x - &z, s: z };
    if !f.eval_matrix(&pair.s).is_zero() || !pair.verify(x)? {
        return Err(Error::TheoremViolation(
            "Jordan-Chevalley lifting failed verification".into(),
        ));
    }
    Ok(pair)
}

/// `exp(v) = Σ_{k<n} v^k / k!` for nilpotent `v`.
pub fn exp_nilpotent(v: &QMatrix) -> Result<QMatrix> {
    require_square(v)?;
    if !is_nilpotent_matrix(v)? {
        return Err(Error::NotNilpotent);
    }
    let n = v.rows();
    let mut term = QMatrix::identity(n);
    let mut acc = term.clone();
    for k in 1..n.max(1) {
        term = (&term * v).scale(&Rat::new(1, k as i64));
        if term.is_zero() {
            break;
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// `log(u) = Σ_{k<n} (-1)^{k+1} (u - I)^k / k` for unipotent `u`.
pub fn log_unipotent(u: &QMatrix) -> Result<QMatrix> {
    require_square(u)?;
    let n = u.rows();
    let w = u - &QMatrix::identity(n);
    if !is_nilpotent_matrix(&w)? {
        return Err(Error::NotUnipotent);
    }
    let mut acc = QMatrix::zeros(n, n);
    let mut power = QMatrix::identity(n);
    for k in 1..n.max(1) {
        power = &power * &w;
        if power.is_zero() {
            break;
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        acc = &acc + &power.scale(&Rat::new(sign, k as i64));
    }
    Ok(acc)
}

/// A one-parameter subgroup of `GL_n`: either additive, `a ↦ exp(a v)`
/// with `v` nilpotent, or multiplicative, `t ↦ P diag(t^{w_1}, …) P⁻¹`
/// with integer weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OneParamCurve {
    Additive { direction: QMatrix },
    Multiplicative { conj: QMatrix, conj_inv: QMatrix, weights: Vec<i64> },
}

impl OneParamCurve {
    pub fn additive(direction: QMatrix) -> Result<Self> {
        if !is_nilpotent_matrix(&direction)? {
            return Err(Error::NotNilpotent);
        }
        Ok(OneParamCurve::Additive { direction })
    }

    pub fn diagonal(weights: Vec<i64>) -> Self {
        let n = weights.len();
        OneParamCurve::Multiplicative {
            conj: QMatrix::identity(n),
            conj_inv: QMatrix::identity(n),
            weights,
        }
    }

    pub fn multiplicative(conj: QMatrix, weights: Vec<i64>) -> Result<Self> {
        require_square(&conj)?;
        if conj.rows() != weights.len() {
            return Err(Error::SizeMismatch("weight count != matrix size".into()));
        }
        let conj_inv = inverse(&conj)
            .ok_or_else(|| Error::NotInvertible("torus change of basis".into()))?;
        Ok(OneParamCurve::Multiplicative { conj, conj_inv, weights })
    }

    /// Group element at parameter `a` (nonzero for multiplicative curves).
    pub fn eval(&self, a: &Rat) -> Result<QMatrix> {
        match self {
            OneParamCurve::Additive { direction } => exp_nilpotent(&direction.scale(a)),
            OneParamCurve::Multiplicative { conj, conj_inv, weights } => {
                if a.is_zero() {
                    return Err(Error::NotInvertible("torus parameter must be nonzero".into()));
                }
                let d: Vec<Rat> = weights.iter().map(|&w| a.pow(w as i32)).collect();
                Ok(&(conj * &QMatrix::diagonal(&d)) * conj_inv)
            }
        }
    }

    /// Tangent vector at the identity.
    pub fn tangent(&self) -> QMatrix {
        match self {
            OneParamCurve::Additive { direction } => direction.clone(),
            OneParamCurve::Multiplicative { conj, conj_inv, weights } => {
                let d: Vec<Rat> = weights.iter().map(|&w| Rat::from_int(w)).collect();
                &(conj * &QMatrix::diagonal(&d)) * conj_inv
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m<const C: usize>(rows: &[[i64; C]]) -> QMatrix {
        QMatrix::from_ints(rows)
    }

    #[test]
    fn minimal_polynomials() {
        assert_eq!(minimal_polynomial(&QMatrix::identity(2)).unwrap(), Poly::from_ints(&[-1, 1]));
        assert_eq!(minimal_polynomial(&m(&[[0, 1], [0, 0]])).unwrap(), Poly::from_ints(&[0, 0, 1]));
        assert_eq!(minimal_polynomial(&m(&[[1, 0], [0, 2]])).unwrap(), Poly::from_ints(&[2, -3, 1]));
        assert_eq!(minimal_polynomial(&QMatrix::zeros(3, 3)).unwrap(), Poly::t());
    }

    #[test]
    fn characteristic_polynomial_matches_trace_and_det() {
        let x = m(&[[2, 1, 0], [0, 2, 0], [1, 0, 3]]);
        // (t-2)^2 (t-3)
        assert_eq!(characteristic_polynomial(&x).unwrap(), Poly::from_ints(&[-12, 16, -7, 1]));
    }

    #[test]
    fn element_classification() {
        let d = m(&[[1, 0], [0, -1]]);
        assert!(is_semisimple_matrix(&d).unwrap());
        assert!(!is_nilpotent_matrix(&d).unwrap());
        let e12 = m(&[[0, 1], [0, 0]]);
        assert!(is_nilpotent_matrix(&e12).unwrap());
        assert!(!is_semisimple_matrix(&e12).unwrap());
        let rot = m(&[[0, -1], [1, 0]]);
        assert!(is_semisimple_matrix(&rot).unwrap());
        assert_eq!(minimal_polynomial(&rot).unwrap(), Poly::from_ints(&[1, 0, 1]));
    }

    #[test]
    fn jordan_examples() {
        let nil = m(&[[0, 1, 2], [0, 0, 3], [0, 0, 0]]);
        let p = jordan_chevalley(&nil).unwrap();
        assert!(p.s.is_zero());
        assert_eq!(p.n, nil);

        let block = m(&[[1, 1], [0, 1]]);
        let p = jordan_chevalley(&block).unwrap();
        assert_eq!(p.s, QMatrix::identity(2));
        assert_eq!(p.n, m(&[[0, 1], [0, 0]]));

        let diag = m(&[[1, 1], [0, 0]]);
        let p = jordan_chevalley(&diag).unwrap();
        assert_eq!(p.s, diag);
        assert!(p.n.is_zero());
    }

    #[test]
    fn jordan_with_irrational_eigenvalues() {
        // rotation block ⊗ unipotent: s = blockdiag(R, R), n couples them
        let x = m(&[[0, -1, 1, 0], [1, 0, 0, 1], [0, 0, 0, -1], [0, 0, 1, 0]]);
        let p = jordan_chevalley(&x).unwrap();
        assert_eq!(p.s, m(&[[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]));
        assert!(p.verify(&x).unwrap());
    }

    #[test]
    fn exp_and_log() {
        assert_eq!(exp_nilpotent(&QMatrix::zeros(3, 3)).unwrap(), QMatrix::identity(3));
        let e12 = m(&[[0, 1], [0, 0]]);
        assert_eq!(exp_nilpotent(&e12).unwrap(), m(&[[1, 1], [0, 1]]));
        let a = Rat::new(3, 2);
        let b = Rat::new(-7, 5);
        let lhs = &exp_nilpotent(&e12.scale(&a)).unwrap() * &exp_nilpotent(&e12.scale(&b)).unwrap();
        assert_eq!(lhs, exp_nilpotent(&e12.scale(&(&a + &b))).unwrap());

        assert!(log_unipotent(&QMatrix::identity(3)).unwrap().is_zero());
        assert_eq!(log_unipotent(&m(&[[1, 1], [0, 1]])).unwrap(), e12);
        assert_eq!(exp_nilpotent(&QMatrix::identity(2)), Err(Error::NotNilpotent));
        assert_eq!(log_unipotent(&m(&[[2, 0], [0, 1]])), Err(Error::NotUnipotent));
    }

    #[test]
    fn torus_conjugates_additive_curve_by_its_weight() {
        // solvable example: λ(t) = diag(1, t, 1, 1), c(a) = exp(a E12); weight -1
        let lam = OneParamCurve::diagonal(vec![0, 1, 0, 0]);
        let c = OneParamCurve::additive(QMatrix::unit(4, 0, 1)).unwrap();
        let t = Rat::new(5, 3);
        let a = Rat::new(-2, 7);
        let lt = lam.eval(&t).unwrap();
        let lt_inv = lam.eval(&t.recip().unwrap()).unwrap();
        let lhs = &(&lt * &c.eval(&a).unwrap()) * &lt_inv;
        let rhs = c.eval(&(&t.pow(-1) * &a)).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lam.tangent(), QMatrix::unit(4, 1, 1));
        assert!(lam.eval(&Rat::zero()).is_err());
    }
}
