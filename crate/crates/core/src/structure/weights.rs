use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::StructureReport;
use crate::chevalley::minimal_polynomial;
use crate::error::{Error, Result};
use crate::exactla::{kernel, Poly, QMatrix, Rat, Subspace};

/// Joint eigenspace of a family of toral elements acting on `nil`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpace {
    /// One `ad`-eigenvalue per element of the acting family.
    pub weight: Vec<Rat>,
    pub space: Subspace,
}

impl WeightSpace {
    pub fn is_zero_weight(&self) -> bool {
        self.weight.iter().all(Rat::is_zero)
    }
}

// Divisor enumeration is by trial division; beyond this the diagnostic
// gives up rather than stall.
const MAX_TRIAL: u128 = 1 << 40;

fn divisors(n: &BigInt) -> Option<Vec<u128>> {
    let n = n.abs().to_u128()?;
    if n > MAX_TRIAL {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u128;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

/// Distinct rational roots of `p`, ascending, by the rational root test.
/// Returns `None` when the coefficients are too large to enumerate divisors.
pub fn rational_roots(p: &Poly) -> Option<Vec<Rat>> {
    if p.is_zero() {
        return Some(Vec::new());
    }
    let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut roots = Vec::new();
    if ints[0].is_zero() {
        roots.push(Rat::zero());
        let skip = ints.iter().take_while(|c| c.is_zero()).count();
        ints.drain(..skip);
    }
    if ints.len() > 1 {
        let lead = ints.last().expect("nonempty").clone();
        let tail = divisors(&ints[0])?;
        let heads = divisors(&lead)?;
        let reduced = Poly::new(ints.iter().cloned().map(Rat::from).collect());
        for &a in &tail {
            for &b in &heads {
                for sign in [1i64, -1] {
                    let cand = Rat::from_bigints(BigInt::from(a) * sign, BigInt::from(b))
                        .expect("divisors are positive");
                    if !roots.contains(&cand) && reduced.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

/// Matrix of `ad t` restricted to the invariant subspace `nil`, in the
/// echelon basis of `nil`.
fn restricted_ad(report: &StructureReport, t: &[Rat]) -> Result<QMatrix> {
    let nil = &report.nil;
    let k = nil.dim();
    let mut m = QMatrix::zeros(k, k);
    for (j, b) in nil.basis().iter().enumerate() {
        let img = report.g.bracket_coords(t, b);
        let c = nil
            .coords(&img)
            .ok_or_else(|| Error::NotSplit("toral element does not preserve nil".into()))?;
        for (i, v) in c.into_iter().enumerate() {
            m[(i, j)] = v;
        }
    }
    Ok(m)
}

/// Joint `ad`-eigenspace decomposition of `nil` under the elements
/// `t_basis` (coordinates in `g`). Requires every `ad t|nil` to be
/// diagonalizable with rational eigenvalues and the family to commute on
/// `nil`; otherwise [`Error::NotSplit`].
pub fn weight_decomposition(report: &StructureReport, t_basis: &[Vec<Rat>]) -> Result<Vec<WeightSpace>> {
    let g = &report.g;
    let mut spaces = vec![WeightSpace { weight: Vec::new(), space: report.nil.clone() }];
    if report.nil.is_zero() {
        return Ok(spaces);
    }
    for t in t_basis {
        if t.len() != g.dim() {
            return Err(Error::AmbientMismatch { left: g.dim(), right: t.len() });
        }
        let restricted = restricted_ad(report, t)?;
        let mp = minimal_polynomial(&restricted)?;
        let roots = rational_roots(&mp)
            .ok_or_else(|| Error::NotSplit("eigenvalue search exceeded its bound".into()))?;
        let split = roots.iter().fold(Poly::one(), |acc, r| acc.mul(&Poly::linear(r.clone())));
        if split != mp {
            return Err(Error::NotSplit(format!("ad-minimal polynomial {mp} does not split into distinct rational factors")));
        }
        let ad = g.ad(t);
        let id = QMatrix::identity(g.dim());
        let mut next = Vec::new();
        for ws in &spaces {
            for r in &roots {
                let eig = kernel(&(&ad - &id.scale(r)));
                let sub = ws.space.intersect(&eig)?;
                if !sub.is_zero() {
                    let mut weight = ws.weight.clone();
                    weight.push(r.clone());
                    next.push(WeightSpace { weight, space: sub });
                }
            }
        }
        spaces = next;
    }
    let total: usize = spaces.iter().map(|w| w.space.dim()).sum();
    if total != report.nil.dim() {
        return Err(Error::NotSplit("toral elements are not simultaneously diagonalizable".into()));
    }
    Ok(spaces)
}
