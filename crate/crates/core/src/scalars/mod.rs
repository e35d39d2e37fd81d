//! Exact field arithmetic and exact linear algebra.

mod field;
mod matrix;

pub use field::{ArithOp, FieldSpec, Scalar};
pub use matrix::{
    factor_minpoly_roots, minimal_polynomial, normalize_first_nonzero, solve_linear,
    split_into_roots, LinearSolution, Matrix,
};
