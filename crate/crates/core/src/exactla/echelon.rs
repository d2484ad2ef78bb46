//! Gauss-Jordan elimination over the rationals.
//!
//! Pivots are chosen as the first nonzero entry scanning rows top-down, so
//! the output is a deterministic function of the input.

use super::{QMatrix, Rat, Subspace};

/// In-place reduction of a list of equal-length rows to reduced row-echelon
/// form. Zero rows are dropped; returns the pivot columns.
pub(crate) fn rref_rows(rows: &mut Vec<Vec<Rat>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r >= rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[r][col..].iter_mut() {
                *x *= &inv;
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, tail) = tail.split_first_mut().expect("row r exists");
        for other in head.iter_mut().chain(tail.iter_mut()) {
            if other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (x, y) in other[col..].iter_mut().zip(&pivot_row[col..]) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Reduced row-echelon form of `m` (same shape, zero rows at the bottom)
/// together with its rank.
pub fn rref(m: &QMatrix) -> (QMatrix, usize) {
    let mut rows = m.to_rows();
    let pivots = rref_rows(&mut rows, m.cols());
    let rank = pivots.len();
    rows.resize(m.rows(), vec![Rat::zero(); m.cols()]);
    let out = if m.rows() == 0 {
        QMatrix::zeros(0, m.cols())
    } else {
        QMatrix::from_rows(rows).expect("rows have equal length")
    };
    (out, rank)
}

pub fn rank(m: &QMatrix) -> usize {
    let mut rows = m.to_rows();
    rref_rows(&mut rows, m.cols()).len()
}

/// Null space `{v : m v = 0}` as a canonical subspace of `Q^cols`.
pub fn kernel(m: &QMatrix) -> Subspace {
    let mut rows = m.to_rows();
    let pivots = rref_rows(&mut rows, m.cols());
    kernel_from_rref(&rows, &pivots, m.cols())
}

pub(crate) fn kernel_from_rref(rows: &[Vec<Rat>], pivots: &[usize], ncols: usize) -> Subspace {
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let basis = (0..ncols).filter(|&c| !is_pivot[c]).map(|free| {
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (row, &pc) in rows.iter().zip(pivots) {
            v[pc] = -&row[free];
        }
        v
    });
    Subspace::span(ncols, basis)
}

/// One solution of `a x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(a: &QMatrix, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let n = a.cols();
    let mut rows: Vec<Vec<Rat>> = (0..a.rows())
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let pivots = rref_rows(&mut rows, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (row, &pc) in rows.iter().zip(&pivots) {
        x[pc] = row[n].clone();
    }
    Some(x)
}

pub fn inverse(m: &QMatrix) -> Option<QMatrix> {
    assert!(m.is_square(), "inverse of a non-square matrix");
    let n = m.rows();
    let mut rows: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    let pivots = rref_rows(&mut rows, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    QMatrix::from_rows(rows.into_iter().map(|r| r[n..].to_vec()).collect()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity() {
        let id = QMatrix::identity(3);
        assert_eq!(rref(&id), (id.clone(), 3));
    }

    #[test]
    fn rref_rank_one() {
        let m = QMatrix::from_ints(&[[2, 4], [1, 2]]);
        let (r, k) = rref(&m);
        assert_eq!(r, QMatrix::from_ints(&[[1, 2], [0, 0]]));
        assert_eq!(k, 1);
    }

    #[test]
    fn rref_zero() {
        let z = QMatrix::zeros(2, 2);
        assert_eq!(rref(&z), (z.clone(), 0));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&QMatrix::identity(2)).dim(), 0);
        let k = kernel(&QMatrix::from_ints(&[[1, 2]]));
        assert_eq!(k, Subspace::span(2, [vec![Rat::from_int(-2), Rat::one()]]));
        assert_eq!(k.basis()[0], vec![Rat::one(), Rat::new(-1, 2)]);
        assert_eq!(kernel(&QMatrix::zeros(1, 3)), Subspace::full(3));
    }

    #[test]
    fn solve_and_inverse() {
        let a = QMatrix::from_ints(&[[2, 1], [1, 3]]);
        let x = solve(&a, &[Rat::from_int(3), Rat::from_int(5)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![Rat::from_int(3), Rat::from_int(5)]);
        let inv = inverse(&a).unwrap();
        assert_eq!(&a * &inv, QMatrix::identity(2));
        assert!(inverse(&QMatrix::from_ints(&[[1, 2], [2, 4]])).is_none());
        assert!(solve(&QMatrix::from_ints(&[[1, 1], [1, 1]]), &[Rat::one(), Rat::zero()]).is_none());
    }
}
