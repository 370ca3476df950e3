//! Degree-type invariants: the anticanonical class and its gcd index, graded
//! component dimensions, and the fourth power of the anticanonical divisor
//! read off from finite differences of the Hilbert function.

use crate::InvariantError;
use grading_core::ValidData;
use lattice_geometry::vec2::{gcd, v, Vec2};

/// The anticanonical class `-K = w_1 + ... + w_7 - mu`.
pub fn anticanonical_class(d: &ValidData) -> Vec2 {
    d.anticanonical_class()
}

/// The gcd of the two coordinates of the anticanonical class.  The divisor
/// class group is free of rank two, so this is the largest integer dividing
/// the anticanonical class.
pub fn fano_index(d: &ValidData) -> i64 {
    let k = d.anticanonical_class();
    gcd(k.x, k.y)
}

/// Dimension of the degree-`w` component of the quotient ring: monomials of
/// degree `w` minus monomials of degree `w - mu` (multiples of the relation).
pub fn hilbert_dim(d: &ValidData, w: Vec2) -> i64 {
    let fiber = d.fiber();
    let mu = d.mu();
    fiber.count(w) as i64 - fiber.count(v(w.x - mu.x, w.y - mu.y)) as i64
}

/// Dimension of the degree-`w` component of the ambient polynomial ring,
/// i.e. the plain monomial count with no relation subtracted.
pub fn hilbert_dim_ambient(d: &ValidData, w: Vec2) -> i64 {
    d.fiber().count(w) as i64
}

/// The first seven values of `k -> hilbert_dim(k * (-K))`.
pub fn hilbert_values(d: &ValidData) -> [i64; 7] {
    let mk = d.anticanonical_class();
    let mu = d.mu();
    let fiber = d.fiber();
    let mut out = [0i64; 7];
    for (k, slot) in out.iter_mut().enumerate() {
        let w = v(k as i64 * mk.x, k as i64 * mk.y);
        *slot =
            fiber.count(w) as i64 - fiber.count(v(w.x - mu.x, w.y - mu.y)) as i64;
    }
    out
}

/// Degree of the fourth power of the anticanonical divisor.
///
/// For an ample anticanonical class the Hilbert function
/// `k -> hilbert_dim(k * (-K))` is a quartic whose fourth finite difference
/// is the degree.  The fifth differences at 0 and 1 are checked to vanish
/// (equivalently, the quartic through k = 0..4 also matches at k = 5, 6) and
/// the result must be positive; otherwise the input is rejected.
pub fn anticanonical_degree(d: &ValidData) -> Result<i64, InvariantError> {
    let h = hilbert_values(d);
    let mut a = h.to_vec();
    let mut fourth = 0i64;
    for order in 1..=5usize {
        for i in 0..(7 - order) {
            a[i] = a[i + 1] - a[i];
        }
        if order == 4 {
            fourth = a[0];
        }
    }
    if a[0] != 0 || a[1] != 0 || fourth <= 0 {
        return Err(InvariantError::FitInconsistent);
    }
    Ok(fourth)
}
