//! Exact arithmetic in degenerate cyclotomic Yokonuma-Hecke algebras over
//! `Q(ζ_r)`, their degenerate cyclotomic Hecke counterparts, and the explicit
//! isomorphism between the Yokonuma algebra and a direct sum of matrix
//! algebras over Hecke algebras.
//!
//! Most users start from [`yokonuma::YAlgebra`] and [`iso::Isomorphism`].

pub mod cli;
pub mod combinatorics;
pub mod element;
pub mod error;
pub mod hecke;
pub mod io;
pub mod iso;
pub mod linalg;
pub mod representation;
pub mod rewrite;
pub mod scalar;
pub mod structure;
pub mod verify;
pub mod yokonuma;
