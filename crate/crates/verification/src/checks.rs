//! The individual geometric checks composed by the pipeline.

use crate::report::Status;
use crate::VerificationError;
use grading_core::{
    git_fan, relevant_faces, toric_relevant_faces, xbar_face, FaceIndexSet, GitFan, NewtonData,
    ValidData,
};
use lattice_geometry::cone::Cone2;
use lattice_geometry::fiber::FiberEnumerator;
use lattice_geometry::mat::generates_lattice;
use lattice_geometry::vec2::{v, Vec2};

fn face_columns(d: &ValidData, f: FaceIndexSet) -> Vec<Vec2> {
    f.indices().map(|i| d.columns()[i]).collect()
}

fn face_monoid(d: &ValidData, f: FaceIndexSet) -> FiberEnumerator {
    FiberEnumerator::new(&face_columns(d, f)).expect("subsets of pointed columns stay pointed")
}

/// The chamber whose interior contains the anticanonical class.
///
/// Fails when the anticanonical class lies outside the interior of the
/// moving cone or on a chamber wall.
pub fn fano_chamber(d: &ValidData, n: &NewtonData) -> Result<Cone2, VerificationError> {
    fano_chamber_in(d, &git_fan(d, n))
}

/// As [`fano_chamber`], reusing an already computed fan.
pub fn fano_chamber_in(d: &ValidData, fan: &GitFan) -> Result<Cone2, VerificationError> {
    let minus_k = d.anticanonical_class();
    let not_fano = || VerificationError::NotFano {
        minus_k: [minus_k.x, minus_k.y],
    };
    if !d.moving_cone().relint_contains(minus_k) {
        return Err(not_fano());
    }
    fan.chamber_interior_containing(minus_k)
        .copied()
        .ok_or_else(not_fano)
}

/// Local factoriality on the variety of the chamber `lambda`: the degrees of
/// every distinguished face must generate the full grading lattice.
pub fn locally_factorial(d: &ValidData, n: &NewtonData, lambda: &Cone2) -> bool {
    relevant_faces(d, n, lambda)
        .into_iter()
        .all(|f| generates_lattice(&face_columns(d, f)))
}

/// Degree-level quasismoothness test on the chamber `lambda`: for every
/// distinguished face, the relation degree — possibly after subtracting one
/// generator degree — must be a nonnegative integer combination of the face
/// degrees.
pub fn quasismooth_degree_test(d: &ValidData, n: &NewtonData, lambda: &Cone2) -> bool {
    let mu = d.mu();
    relevant_faces(d, n, lambda).into_iter().all(|f| {
        let monoid = face_monoid(d, f);
        monoid.monoid_contains(mu)
            || d.columns()
                .iter()
                .any(|w| monoid.monoid_contains(v(mu.x - w.x, mu.y - w.y)))
    })
}

/// Whether every chamber inside the moving cone passes both the local
/// factoriality and the quasismoothness degree test, so that all small
/// modifications of the variety are smooth as well.
pub fn all_small_modifications_smooth(d: &ValidData, n: &NewtonData) -> Status {
    let fan = git_fan(d, n);
    let ok = fan
        .chambers()
        .iter()
        .filter(|eta| eta.is_subset_of(d.moving_cone()))
        .all(|eta| locally_factorial(d, n, eta) && quasismooth_degree_test(d, n, eta));
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// Whether the class `w` is base point free on the ambient toric variety of
/// the chamber `lambda`: on every face of that variety, `w` must be a
/// nonnegative integer combination of the face degrees.
pub fn base_point_free(d: &ValidData, lambda: &Cone2, w: Vec2) -> bool {
    toric_relevant_faces(d, lambda)
        .into_iter()
        .all(|f| face_monoid(d, f).monoid_contains(w))
}

/// Smoothness of the minimal ambient toric variety of the chamber `lambda`:
/// every face of the ambient variety on which the hypersurface meets the
/// corresponding orbit must have degrees generating the full grading
/// lattice.
pub fn z_mu_smooth(d: &ValidData, n: &NewtonData, lambda: &Cone2) -> bool {
    toric_relevant_faces(d, lambda)
        .into_iter()
        .filter(|f| xbar_face(d, n, *f))
        .all(|f| generates_lattice(&face_columns(d, f)))
}

/// Accumulates monomial counts: slot 7 counts all points, slot `i < 7`
/// counts the points whose `i`-th exponent vanishes.
fn subsystem_dimensions(points: &[Vec<i64>], dims: &mut [i64; 8]) {
    for p in points {
        dims[7] += 1;
        for (i, &e) in p.iter().enumerate() {
            if e == 0 {
                dims[i] += 1;
            }
        }
    }
}

/// Whether a general polynomial of the relation degree is prime and stays
/// prime after setting any single variable to zero.
///
/// The quotient by the relation is a Cox ring only if every variable defines
/// a prime element of the quotient, which for a general relation `g` happens
/// exactly when each restriction `g` with `T_i = 0` is a prime polynomial in
/// the remaining variables.  Reducibility of a general member of a monomial
/// linear system is decided dimensionally: the reducible members form the
/// union over splittings `mu = u + (mu - u)` of the products of lower-degree
/// pairs, and such a product family fills the whole system if and only if
/// `dim S_u + dim S_{mu-u} >= dim S_mu + 1` on the respective subsystems.
/// A system spanned by fewer than two monomials fails outright: an empty
/// restriction means a variable divides every relation, and a single
/// monomial of the relation degree is never prime because the relation
/// degree differs from all generator degrees.
pub fn presentation_generically_prime(d: &ValidData) -> bool {
    let mu = d.mu();
    let Cone2::Wedge { cw, ccw } = *d.effective_cone() else {
        return false;
    };
    let det = cw.det(ccw);
    let a_max = cw.det(mu);
    let b_max = mu.det(ccw);
    let fiber = d.fiber();

    let mut dim_mu = [0i64; 8];
    subsystem_dimensions(&fiber.points(mu), &mut dim_mu);
    if dim_mu.iter().any(|&c| c < 2) {
        return false;
    }

    for a in 0..=a_max {
        for b in 0..=b_max {
            // Visit each unordered splitting once.
            if (a_max - a, b_max - b) < (a, b) {
                continue;
            }
            // The degree u inside the effective cone with cw.det(u) = a and
            // u.det(ccw) = b, when it is a lattice point.
            let ux = b * cw.x + a * ccw.x;
            let uy = b * cw.y + a * ccw.y;
            if ux % det != 0 || uy % det != 0 {
                continue;
            }
            let u = v(ux / det, uy / det);
            if u.is_zero() || u == mu {
                continue;
            }
            let pts_u = fiber.points(u);
            if pts_u.is_empty() {
                continue;
            }
            let pts_v = fiber.points(mu - u);
            if pts_v.is_empty() {
                continue;
            }
            let mut du = [0i64; 8];
            let mut dv = [0i64; 8];
            subsystem_dimensions(&pts_u, &mut du);
            subsystem_dimensions(&pts_v, &mut dv);
            for s in 0..8 {
                if du[s] >= 1 && dv[s] >= 1 && du[s] + dv[s] >= dim_mu[s] + 1 {
                    return false;
                }
            }
        }
    }
    true
}
