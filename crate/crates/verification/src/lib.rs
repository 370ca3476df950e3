//! Certification pipeline for rank-two graded hypersurface presentations.
//!
//! Given a degree system, the pipeline selects the ample chamber from the
//! anticanonical class, runs the local factoriality and quasismoothness
//! degree tests on every chamber inside the moving cone, and then tries to
//! certify that the ring of a general member is factorial and the general
//! member smooth.  Steps that cannot be certified combinatorially are
//! reported as requiring an external oracle rather than silently upgraded.

pub mod checks;
pub mod pipeline;
pub mod report;

pub use checks::{
    all_small_modifications_smooth, base_point_free, fano_chamber, fano_chamber_in,
    locally_factorial, presentation_generically_prime, quasismooth_degree_test, z_mu_smooth,
};
pub use pipeline::verify_candidate;
pub use report::{Status, VerificationReport};

use grading_core::GradingError;
use thiserror::Error;

/// Failures that prevent a verification run from producing a report.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerificationError {
    /// The input datum violates a structural invariant.
    #[error(transparent)]
    Invalid(#[from] GradingError),
    /// The anticanonical class does not single out an ample chamber: it lies
    /// outside the interior of the moving cone or on a chamber wall.
    #[error(
        "anticanonical class ({}, {}) does not lie in the interior of a \
         unique chamber of the moving cone",
        minus_k[0],
        minus_k[1]
    )]
    NotFano { minus_k: [i64; 2] },
}
