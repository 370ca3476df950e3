//! Splitting a degree system into a product of a graded hypersurface block
//! and a projective-space block.

use crate::data::ValidData;
use lattice_geometry::vec2::Vec2;

/// Result of a successful product split.
///
/// The columns fall on exactly two rays that form a lattice basis, and the
/// relation degree lies on the first of them; all monomials then only involve
/// variables of the first block, so the presented variety is the product of a
/// weighted hypersurface (first block) and a weighted projective space
/// (second block).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSplit {
    /// Heights of the first block's columns along their common ray, in
    /// column order.
    pub hypersurface_weights: Vec<i64>,
    /// Height of the relation degree along the first block's ray.
    pub relation_degree: i64,
    /// Heights of the second block's columns along their common ray, in
    /// column order.
    pub complement_weights: Vec<i64>,
}

/// Height of `w` along the primitive ray `r`, assuming `w` lies on it.
fn height_on(r: Vec2, w: Vec2) -> i64 {
    if r.x != 0 {
        w.x / r.x
    } else {
        w.y / r.y
    }
}

/// Attempts to split the columns into two blocks, each supported on a single
/// coordinate after a unimodular change, with every monomial of the relation
/// degree supported in the first block.  Returns `None` when no such split
/// exists.
pub fn product_split(d: &ValidData) -> Option<ProductSplit> {
    let cols = d.columns();
    let mut rays: Vec<Vec2> = Vec::new();
    for c in cols.iter() {
        let p = c.primitive();
        if !rays.contains(&p) {
            rays.push(p);
        }
    }
    if rays.len() != 2 {
        return None;
    }
    let (ra, rb) = (rays[0], rays[1]);
    let eps = ra.det(rb);
    if eps.abs() != 1 {
        return None;
    }
    // Coordinates of μ in the basis (ra, rb).
    let mu = d.mu();
    let a = mu.det(rb) * eps.signum();
    let b = ra.det(mu) * eps.signum();
    let (first, second) = if b == 0 {
        (ra, rb)
    } else if a == 0 {
        (rb, ra)
    } else {
        return None;
    };
    let mut hypersurface_weights = Vec::new();
    let mut complement_weights = Vec::new();
    for c in cols.iter() {
        if c.primitive() == first {
            hypersurface_weights.push(height_on(first, *c));
        } else {
            complement_weights.push(height_on(second, *c));
        }
    }
    Some(ProductSplit {
        hypersurface_weights,
        relation_degree: height_on(first, mu),
        complement_weights,
    })
}
