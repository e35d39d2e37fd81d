//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while building or checking Hopf data.
///
/// Property *failures* (a twist equation that does not hold, an axiom that
/// breaks) are reported through report structs, not through this enum; the
/// enum covers malformed inputs and violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("no primitive root of unity of order {order} in this field")]
    NoSuchRoot { order: u64 },
    #[error("minimal polynomial does not split into linear factors over the field")]
    FailedToSplit,
    #[error("tensor or vector has inconsistent shape: {0}")]
    ShapeError(String),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("counit scalar of the candidate twist is zero")]
    ZeroCounitScalar,
    #[error("gauge element must satisfy eps(x) = 1")]
    CounitNotOne,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("Hopf axiom failed: {0}")]
    AxiomFailure(String),
    #[error("integral space has dimension {dim}, expected 1")]
    DegenerateIntegralSpace { dim: usize },
    #[error("Hopf algebra is not unimodular")]
    NotUnimodular,
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("coseparability pairing condition failed at basis pair ({0}, {1})")]
    PairingConditionFailure(usize, usize),
    #[error("comultiplication is not coassociative at basis index {0}")]
    CoassociativityFailure(usize),
    #[error("trace-form radical criterion needs char 0 or char > dim (char {ch}, dim {dim})")]
    TraceCriterionInapplicable { ch: u64, dim: usize },
    #[error("field too small to split the algebra into matrix blocks")]
    FieldTooSmall,
    #[error("module coalgebra is not Galois: extracted element is not invertible")]
    GaloisFailure,
    #[error("Hopf algebra is not a group algebra")]
    NotGroupAlgebra,
    #[error("twist is degenerate, expected a non-degenerate twist")]
    DegenerateTwist,
    #[error("inner-action system has no one-dimensional invertible solution for element {0}")]
    SchurFailure(usize),
    #[error("computed pairing value is not a scalar multiple of the unit")]
    NotScalar,
    #[error("2-cocycle identity failed at basis triple ({0}, {1}, {2})")]
    CocycleFailure(usize, usize, usize),
    #[error("invalid Cayley table: {0}")]
    InvalidCayleyTable(String),
    #[error("bicharacter is degenerate, expected non-degenerate")]
    DegeneracyDetected,
    #[error("characteristic 2 is not allowed here")]
    CharTwo,
    #[error("coset span is not closed under multiplication")]
    NotASubalgebra,
    #[error("parse error: {0}")]
    ParseError(String),
}

pub type Result<T> = std::result::Result<T, HopfError>;
