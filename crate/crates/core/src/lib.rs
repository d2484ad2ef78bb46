//! Exact computation of the Lie algebra of the subgroup generated by all
//! semisimple elements of a connected linear algebraic group.
//!
//! Given a matrix Lie algebra `g = Lie(G)` over the rationals, the pipeline
//! decomposes `g = r ⊕ n` (reductive part plus nilpotent radical), forms
//! `n₁ = [r, n]` and its bracket closure `s`, and returns `m = r ⊕ s`, the
//! Lie algebra of the subgroup generated by semisimple elements. Every
//! result is cross-checked against the minimal ideal of `g` containing `r`.

pub mod catalog;
pub mod chevalley;
pub mod error;
pub mod exactla;
pub mod liecore;
pub mod multgen;
pub mod structure;

pub use error::{Error, Result};
pub use exactla::{QMatrix, Rat, Subspace};
pub use liecore::LieAlgebra;
