//! Rank-two graded presentations with seven generators and one relation.
//!
//! A datum consists of a 2×7 integer degree matrix `Q` (columns are the
//! generator degrees) together with the degree `μ` of the single relation.
//! This crate validates such data, derives the monomial fiber `M(μ)` and its
//! Newton polytope, computes effective and moving cones, builds the chamber
//! fan of the associated torus action, and normalizes data to a canonical
//! representative under admissible coordinate changes.

pub mod canonical;
pub mod data;
pub mod faces;
pub mod fan;
pub mod newton;
pub mod product;

pub use canonical::{apply_change, canonical_form};
pub use data::{SpecifyingData, ValidData};
pub use faces::{
    orbit_cone, relevant_faces, toric_relevant_faces, xbar_face, FaceIndexSet,
};
pub use fan::{git_fan, GitFan};
pub use newton::NewtonData;
pub use product::{product_split, ProductSplit};

use thiserror::Error;

/// Rejection reasons for a specifying datum.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    /// The degree columns span a half plane or the whole plane, or a column
    /// is zero: the grading is not pointed.
    #[error("degree columns do not span a pointed cone")]
    NotPointed,
    /// Some six-column subset fails to generate ℤ² as a group.
    #[error("columns without column {omitted} do not generate the lattice")]
    NotAlmostFree { omitted: usize },
    /// The relation degree is zero.
    #[error("relation degree is zero")]
    RelationDegreeZero,
    /// The relation degree equals a generator degree, so the presentation
    /// would not be minimal.
    #[error("relation degree equals generator degree {index}")]
    RelationDegreeIsGenerator { index: usize },
    /// No monomial of the relation degree exists.
    #[error("no monomials of the relation degree")]
    EmptyFiber,
    /// Columns are not in counter-clockwise order.
    #[error("column at position {position} is clockwise of its predecessor")]
    NotCcwOrdered { position: usize },
}

impl From<lattice_geometry::GeometryError> for GradingError {
    fn from(e: lattice_geometry::GeometryError) -> Self {
        match e {
            lattice_geometry::GeometryError::NotPointed => GradingError::NotPointed,
        }
    }
}
