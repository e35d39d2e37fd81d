//! Finite groups, group algebras, symplectic twists, R-matrices,
//! double-coset representation dimensions, and the twist census.

mod algebra;
mod classify;
mod group;
mod repdims;
mod rmatrix;
mod symplectic;

pub use algebra::{function_algebra, group_algebra};
pub use classify::{classify_twists, CensusEntry, TwistCensus};
pub use group::{abelian_basis, AbelianBasis, FiniteGroup};
pub use repdims::{repdims, CosetRepDims, MinimalTwistSpec, RepDimsReport};
pub use rmatrix::{
    drinfeld_element, r_u, triangular_r_matrix, verify_quasitriangular, QuasitriangularReport,
};
pub use symplectic::{
    form_is_nondegenerate, standard_symplectic_form, symplectic_twist,
    symplectic_twist_tensor, symplectic_twist_with_splitting, twist_bicharacter, validate_form,
    Splitting,
};
