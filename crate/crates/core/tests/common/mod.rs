#![allow(dead_code)]

use multgen_core::exactla::{inverse, kernel, QMatrix, Rat};
use multgen_core::structure::rational_roots;
use multgen_core::chevalley::characteristic_polynomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rat(rng: &mut ChaCha8Rng) -> Rat {
    let den = [1, 1, 1, 2, 3][rng.gen_range(0..5)];
    Rat::new(rng.gen_range(-3..=3), den)
}

/// Unit lower times unit upper with small integer entries: invertible over Z.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> QMatrix {
    let mut l = QMatrix::identity(n);
    let mut u = QMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            l[(i, j)] = Rat::from_int(rng.gen_range(-2..=2));
            u[(j, i)] = Rat::from_int(rng.gen_range(-2..=2));
        }
    }
    &l * &u
}

pub fn strictly_upper(rng: &mut ChaCha8Rng, n: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            m[(i, j)] = small_rat(rng);
        }
    }
    m
}

/// `x = P(D + N)P⁻¹` with `D` semisimple, `N` nilpotent, `[D, N] = 0`.
/// Returns `(x, s₀, n₀)`. Some samples carry a pair of rotation blocks, so
/// the eigenvalues are not always rational.
pub fn jordan_sample(rng: &mut ChaCha8Rng) -> (QMatrix, QMatrix, QMatrix) {
    let size = rng.gen_range(1..=5);
    let mut d = QMatrix::zeros(size, size);
    let mut n = QMatrix::zeros(size, size);
    let mut at = 0;
    if size >= 4 && rng.gen_bool(0.3) {
        // diag(R, R) with R² = -c, coupled by [[0, I], [0, 0]]
        let c = rng.gen_range(1..=3);
        for b in [0, 2] {
            d[(b, b + 1)] = Rat::from_int(-c);
            d[(b + 1, b)] = Rat::one();
        }
        if rng.gen_bool(0.5) {
            n[(0, 2)] = Rat::one();
            n[(1, 3)] = Rat::one();
        }
        at = 4;
    }
    while at < size {
        let len = rng.gen_range(1..=size - at);
        let lambda = small_rat(rng);
        for i in at..at + len {
            d[(i, i)] = lambda.clone();
            for j in i + 1..at + len {
                if rng.gen_bool(0.6) {
                    n[(i, j)] = small_rat(rng);
                }
            }
        }
        at += len;
    }
    let p = random_unimodular(rng, size);
    let pi = inverse(&p).expect("unimodular");
    let s0 = &(&p * &d) * &pi;
    let n0 = &(&p * &n) * &pi;
    (&s0 + &n0, s0, n0)
}

/// Semisimple part by generalized eigenspaces, when the characteristic
/// polynomial splits over the rationals.
pub fn diagonalization_oracle(x: &QMatrix) -> Option<QMatrix> {
    let size = x.rows();
    let roots = rational_roots(&characteristic_polynomial(x).ok()?)?;
    let id = QMatrix::identity(size);
    let mut columns = Vec::new();
    let mut eigen = Vec::new();
    for r in &roots {
        let w = kernel(&(x - &id.scale(r)).pow(size as u32));
        for v in w.basis() {
            columns.push(v.clone());
            eigen.push(r.clone());
        }
    }
    if columns.len() != size {
        return None;
    }
    let q = QMatrix::from_rows(columns).ok()?.transpose();
    let qi = inverse(&q)?;
    Some(&(&q * &QMatrix::diagonal(&eigen)) * &qi)
}

/// Whether all eigenvalues are rational and pairwise distinct.
pub fn rational_distinct(x: &QMatrix) -> bool {
    let cp = characteristic_polynomial(x).expect("square");
    match rational_roots(&cp) {
        Some(r) => r.len() == x.rows() && cp.is_squarefree(),
        None => false,
    }
}
