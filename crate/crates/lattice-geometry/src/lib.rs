//! Exact integer lattice geometry.
//!
//! Everything here is integer arithmetic only: planar cones and their
//! incidence tests, integer matrix normal forms (Smith, kernels,
//! saturations), enumeration of graded monomial fibers, a double
//! description dualizer for cones in small dimension, lattice polytopes
//! with face lattices and exact Ehrhart counting, and a combinatorial
//! factoriality criterion for hypersurface rings.

pub mod cone;
pub mod dd;
pub mod factoriality;
pub mod fiber;
pub mod mat;
pub mod polytope;
pub mod vec2;

pub use cone::Cone2;
pub use dd::{dual_description, DualDescription};
pub use factoriality::newton_polytope_forces_ufd;
pub use fiber::FiberEnumerator;
pub use mat::{
    generates_lattice, kernel_basis, part_of_basis, rank, saturation_basis, snf, solve_integer,
    IntMat, Snf,
};
pub use polytope::{binom_poly, Ehrhart, Face, Facet, LatticePolytope};
pub use vec2::{gcd, gcd_i128, gcd_slice, v, Vec2};

/// Errors shared by the geometric primitives.
#[derive(thiserror::Error, Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeometryError {
    /// A cone that was required to be pointed (no line contained in it)
    /// turned out not to be.
    #[error("cone is not pointed")]
    NotPointed,
}
