//! Numerical and geometric invariants of the graded hypersurface families:
//! anticanonical degree, Hodge numbers, Fano index, Hilbert-function values,
//! elementary contractions, and first-order deformation dimensions.
//!
//! Every computation is exact.  Degrees come from finite differences of the
//! anticanonical Hilbert function, Hodge numbers from a stratified
//! Newton-polytope count, and contractions from the wall structure of the
//! moving cone.

pub mod contractions;
pub mod deform;
pub mod degree;
pub mod hodge;
mod labels;

pub use contractions::{elementary_contractions, ContractionDescriptor, ContractionKind};
pub use deform::{deformation_formula_applicable, deformation_h1};
pub use degree::{
    anticanonical_class, anticanonical_degree, fano_index, hilbert_dim, hilbert_dim_ambient,
    hilbert_values,
};
pub use hodge::{hodge_numbers, HodgeTriple};

use thiserror::Error;

/// Failures of the invariant computations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    /// The anticanonical Hilbert function does not agree with a quartic with
    /// positive leading term: the datum does not describe a Fano fourfold.
    #[error("anticanonical Hilbert values do not fit a quartic with positive leading term")]
    FitInconsistent,
    /// A stratum carries exactly one supported monomial; such strata are
    /// vertices of the Newton polytope and must not appear in the
    /// stratification of a consistent datum.
    #[error("a stratum reduced to a single supported monomial")]
    StratumDegenerate,
    /// The hypotheses of the first-order deformation formula fail for this
    /// datum, so the formula does not compute h^1 of the tangent sheaf.
    #[error("deformation formula hypotheses fail for this datum")]
    NotApplicable,
}
