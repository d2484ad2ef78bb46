//! Exact rational arithmetic: scalars, dense matrices, polynomials, and the
//! lattice of subspaces that every other module computes in.
//!
//! Matrices of `gl_n` are identified with vectors of length `n²` through
//! row-major flattening ([`QMatrix::as_slice`]).

mod echelon;
mod matrix;
mod poly;
mod rat;
mod subspace;

pub use echelon::{inverse, kernel, rank, rref, solve};
pub use matrix::QMatrix;
pub use poly::Poly;
pub use rat::Rat;
pub use subspace::{unit_vector, BasisCoords, Subspace};
