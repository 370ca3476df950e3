//! The monomial fiber of the relation degree and its Newton polytope.

use lattice_geometry::polytope::LatticePolytope;

use crate::data::ValidData;
use crate::faces::FaceIndexSet;

/// All exponent vectors of the relation degree, together with their convex
/// hull. The generic relation has exactly these monomials, so every
/// combinatorial predicate on the relation factors through this data.
#[derive(Clone, Debug)]
pub struct NewtonData {
    monomials: Vec<Vec<i64>>,
    polytope: LatticePolytope,
}

impl NewtonData {
    pub fn new(d: &ValidData) -> NewtonData {
        let monomials = d.fiber().points(d.mu());
        assert!(!monomials.is_empty(), "validated data has a nonempty fiber");
        let as_i128: Vec<Vec<i128>> = monomials
            .iter()
            .map(|m| m.iter().map(|&c| c as i128).collect())
            .collect();
        let polytope = LatticePolytope::new(&as_i128);
        NewtonData {
            monomials,
            polytope,
        }
    }

    /// Exponent vectors in lexicographic order.
    pub fn monomials(&self) -> &[Vec<i64>] {
        &self.monomials
    }

    pub fn polytope(&self) -> &LatticePolytope {
        &self.polytope
    }

    /// Number of monomials supported inside the orthant face given by `f`
    /// (all coordinates outside `f` zero).
    pub fn support_count(&self, f: FaceIndexSet) -> usize {
        self.monomials
            .iter()
            .filter(|m| FaceIndexSet::support_of(m).is_subset_of(f))
            .count()
    }
}
