//! Orthant faces, their orbit cones, and the relevance predicates.

use std::fmt;

use lattice_geometry::cone::Cone2;

use crate::data::ValidData;
use crate::newton::NewtonData;

/// A subset of the seven coordinate indices, identifying a face of the
/// positive orthant in the exponent space.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceIndexSet(u8);

impl FaceIndexSet {
    pub const EMPTY: FaceIndexSet = FaceIndexSet(0);
    pub const FULL: FaceIndexSet = FaceIndexSet(0x7f);

    pub fn from_mask(mask: u8) -> FaceIndexSet {
        assert!(mask <= 0x7f, "only seven indices exist");
        FaceIndexSet(mask)
    }

    /// Face from 0-based coordinate indices.
    pub fn from_indices(indices: &[usize]) -> FaceIndexSet {
        let mut mask = 0u8;
        for &i in indices {
            assert!(i < 7);
            mask |= 1 << i;
        }
        FaceIndexSet(mask)
    }

    /// Smallest face containing the given exponent vector.
    pub fn support_of(exponents: &[i64]) -> FaceIndexSet {
        let mut mask = 0u8;
        for (i, &e) in exponents.iter().enumerate() {
            if e != 0 {
                mask |= 1 << i;
            }
        }
        FaceIndexSet(mask)
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn contains(self, index: usize) -> bool {
        index < 7 && self.0 & (1 << index) != 0
    }

    pub fn is_subset_of(self, other: FaceIndexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// 0-based indices in the face.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..7).filter(move |i| mask & (1 << i) != 0)
    }

    /// All 128 faces.
    pub fn all() -> impl Iterator<Item = FaceIndexSet> {
        (0..=0x7fu8).map(FaceIndexSet)
    }
}

impl fmt::Debug for FaceIndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // 1-based indices for readability.
        let ones: Vec<usize> = self.indices().map(|i| i + 1).collect();
        write!(f, "F{ones:?}")
    }
}

/// Image of the orthant face under the degree matrix: the cone spanned by
/// the columns indexed by `f`.
pub fn orbit_cone(d: &ValidData, f: FaceIndexSet) -> Cone2 {
    let gens: Vec<_> = f.indices().map(|i| d.columns()[i]).collect();
    Cone2::hull(&gens).expect("subcone of a pointed cone is pointed")
}

/// Whether the generic relation meets the torus orbit of the face: the
/// number of monomials supported inside `f` differs from one. (A single
/// supported monomial is a nonvanishing unit on the orbit; zero or several
/// leave a genuine intersection.)
pub fn xbar_face(_d: &ValidData, n: &NewtonData, f: FaceIndexSet) -> bool {
    n.support_count(f) != 1
}

/// Faces whose orbit meets the generic hypersurface and whose orbit cone
/// contains `lambda` in its relative interior — the strata visible on the
/// quotient for the linearization `lambda`.
pub fn relevant_faces(d: &ValidData, n: &NewtonData, lambda: &Cone2) -> Vec<FaceIndexSet> {
    FaceIndexSet::all()
        .filter(|&f| xbar_face(d, n, f) && lambda.relint_subset_of(&orbit_cone(d, f)))
        .collect()
}

/// Faces relevant for the ambient toric variety of the linearization
/// `lambda`: same relative-interior condition, but with no requirement that
/// the hypersurface meets the orbit.
pub fn toric_relevant_faces(d: &ValidData, lambda: &Cone2) -> Vec<FaceIndexSet> {
    FaceIndexSet::all()
        .filter(|&f| lambda.relint_subset_of(&orbit_cone(d, f)))
        .collect()
}
