//! First-order deformations: the dimension of `H^1` of the tangent sheaf,
//! computed from ambient monomial counts when the hypersurface moves freely
//! enough inside its ambient toric variety.

use crate::InvariantError;
use grading_core::{NewtonData, ValidData};
use verification::{base_point_free, fano_chamber};

/// Whether the closed-form first-order deformation count applies: the
/// relation degree must be base point free on the ample model, and no
/// generator degree may lie in the relation degree plus the monoid generated
/// by all generator degrees (such a degree would let the relation absorb a
/// generator).
pub fn deformation_formula_applicable(d: &ValidData) -> bool {
    let n = NewtonData::new(d);
    let Ok(lambda) = fano_chamber(d, &n) else {
        return false;
    };
    if !base_point_free(d, &lambda, d.mu()) {
        return false;
    }
    let fiber = d.fiber();
    let mu = d.mu();
    !d.columns().iter().any(|&w| fiber.monoid_contains(w - mu))
}

/// `h^1` of the tangent sheaf: relation monomials, minus the rescaling of
/// the relation, plus the two-dimensional grading torus, minus the ambient
/// coordinate changes, plus the externally supplied automorphism dimension
/// `dim_aut` of the family member.
pub fn deformation_h1(d: &ValidData, dim_aut: i64) -> Result<i64, InvariantError> {
    if !deformation_formula_applicable(d) {
        return Err(InvariantError::NotApplicable);
    }
    let fiber = d.fiber();
    let relation_monomials = fiber.count(d.mu()) as i64;
    let coordinate_changes: i64 = d.columns().iter().map(|&w| fiber.count(w) as i64).sum();
    Ok(relation_monomials - 1 + 2 - coordinate_changes + dim_aut)
}
