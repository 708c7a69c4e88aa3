//! Exact fixed-point invariants and dynamical zeta functions for affine-induced
//! maps on infra-nilmanifolds and infra-solvmanifolds of type (R).
//!
//! The crate is layered bottom-up:
//!
//! - [`algebra`]: exact rational matrices and polynomials, determinants,
//!   characteristic polynomials, compound matrices and eigenvalue classification.
//! - [`zeta`]: reconstruction of `exp(Σ a_n z^n / n)` as an exact rational
//!   function, with evaluation and pole analysis.
//! - [`manifold`]: holonomy groups, affine maps and the expanding-determinant split.
//! - [`invariants`]: averaging formulas for Lefschetz, Nielsen and Reidemeister
//!   numbers of iterates and coincidences.
//! - [`suite`]: zeta functions, functional equations, growth rates and torsion values.
//! - [`congruence`]: Gauss, Euler and Dold congruence checks.
//! - [`fixtures`]: built-in manifolds and maps.

pub mod algebra;
pub mod congruence;
pub mod error;
pub mod fixtures;
pub mod invariants;
pub mod manifold;
pub mod suite;
pub mod zeta;

pub use error::{Error, Result};
