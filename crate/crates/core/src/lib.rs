//! Exact-arithmetic toolkit for finite-dimensional Hopf algebras given by
//! structure constants: verification of the axioms, Drinfeld twists and the
//! twisted Hopf algebra, integrals and (co)semisimplicity tests, two-sided
//! twisted coalgebras with coseparability pairings, module coalgebras,
//! duality for non-degenerate twists, and group-algebra constructions
//! (symplectic twists, R-matrices, twist classification).
//!
//! All arithmetic is exact, over GF(p) or over cyclotomic fields Q(zeta_n),
//! so every check in the crate is an exact identity rather than a numerical
//! approximation.

pub mod cotwist;
pub mod duality;
pub mod error;
pub mod groups;
pub mod hopf;
pub mod integrals;
pub mod moduleco;
pub mod rng;
pub mod scalars;
pub mod twisting;
pub mod zoo;

pub use error::{HopfError, Result};
