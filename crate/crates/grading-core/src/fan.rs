//! The chamber fan of the torus action on the hypersurface.

use lattice_geometry::cone::Cone2;
use lattice_geometry::vec2::Vec2;

use crate::data::ValidData;
use crate::faces::{orbit_cone, xbar_face, FaceIndexSet};
use crate::newton::NewtonData;

/// Angular subdivision of the effective cone by all orbit-cone boundaries.
///
/// Rays are primitive and counter-clockwise ordered; chambers are the wedges
/// between consecutive rays. Every chamber interior has a constant set of
/// orbit cones containing it.
#[derive(Clone, Debug)]
pub struct GitFan {
    rays: Vec<Vec2>,
    chambers: Vec<Cone2>,
}

impl GitFan {
    pub fn rays(&self) -> &[Vec2] {
        &self.rays
    }

    pub fn chambers(&self) -> &[Cone2] {
        &self.chambers
    }

    /// The chamber containing `w` in its interior, if any. `None` when `w`
    /// lies on a ray or outside the effective cone.
    pub fn chamber_interior_containing(&self, w: Vec2) -> Option<&Cone2> {
        self.chambers.iter().find(|c| c.relint_contains(w))
    }
}

/// Builds the chamber fan: walls are the boundary rays of two-dimensional
/// orbit cones and the one-dimensional orbit cones themselves, over all
/// faces whose orbit meets the generic hypersurface.
pub fn git_fan(d: &ValidData, n: &NewtonData) -> GitFan {
    let mut rays: Vec<Vec2> = Vec::new();
    match *d.effective_cone() {
        Cone2::Zero => unreachable!("validated columns are nonzero"),
        Cone2::Ray(r) => rays.push(r),
        Cone2::Wedge { cw, ccw } => {
            rays.push(cw);
            rays.push(ccw);
        }
    }
    for f in FaceIndexSet::all() {
        if !xbar_face(d, n, f) {
            continue;
        }
        match orbit_cone(d, f) {
            Cone2::Zero => {}
            Cone2::Ray(r) => rays.push(r),
            Cone2::Wedge { cw, ccw } => {
                rays.push(cw);
                rays.push(ccw);
            }
        }
    }

    // All rays lie in the pointed effective cone, so the pairwise
    // determinant sign is a total counter-clockwise order.
    rays.sort_by(|a, b| a.det(*b).cmp(&0).reverse());
    rays.dedup();

    let chambers: Vec<Cone2> = rays
        .windows(2)
        .map(|pair| {
            debug_assert!(pair[0].det(pair[1]) > 0);
            Cone2::Wedge {
                cw: pair[0],
                ccw: pair[1],
            }
        })
        .collect();

    GitFan { rays, chambers }
}
