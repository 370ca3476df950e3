//! The full certification pipeline.

use std::collections::BTreeMap;

use crate::checks::{
    base_point_free, fano_chamber_in, locally_factorial, presentation_generically_prime,
    quasismooth_degree_test, z_mu_smooth,
};
use crate::report::{Status, VerificationReport};
use crate::VerificationError;
use grading_core::{git_fan, NewtonData, SpecifyingData};
use lattice_geometry::cone::Cone2;
use lattice_geometry::factoriality::newton_polytope_forces_ufd;

fn as_status(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// Runs the full certification pipeline on one datum.
///
/// The necessary conditions — existence of the ample chamber, primality of a
/// general relation and of its restrictions, local factoriality and the
/// quasismoothness degree test on every chamber inside the moving cone —
/// yield `pass`/`fail` entries in the checks map.  The two
/// certificates (factoriality of the ring of a general member, smoothness of
/// a general member) yield `pass` or `requires-oracle`: a candidate that
/// survives all necessary conditions but lacks a certificate is flagged, not
/// rejected, since only an external computation can settle it.
pub fn verify_candidate(d: &SpecifyingData) -> Result<VerificationReport, VerificationError> {
    let vd = d.validate()?;
    let n = NewtonData::new(&vd);
    let fan = git_fan(&vd, &n);
    let lambda = fano_chamber_in(&vd, &fan)?;
    let mu = vd.mu();

    let mut checks: BTreeMap<String, Status> = BTreeMap::new();

    let prime = presentation_generically_prime(&vd);
    checks.insert("generator-primality".into(), as_status(prime));

    let lf = locally_factorial(&vd, &n, &lambda);
    checks.insert("locally-factorial".into(), as_status(lf));

    let qs = quasismooth_degree_test(&vd, &n, &lambda);
    checks.insert("quasismooth-degrees".into(), as_status(qs));

    let small = fan
        .chambers()
        .iter()
        .filter(|eta| eta.is_subset_of(vd.moving_cone()))
        .all(|eta| locally_factorial(&vd, &n, eta) && quasismooth_degree_test(&vd, &n, eta));
    checks.insert("small-modifications".into(), as_status(small));

    // Factoriality certificate: the Newton polytope criterion, or base point
    // freeness of an ample relation degree.
    let newton = newton_polytope_forces_ufd(n.monomials());
    let bpf = lambda.relint_contains(mu) && base_point_free(&vd, &lambda, mu);
    let factoriality_route = if newton {
        "factorial-newton"
    } else if bpf {
        "base-point-free"
    } else {
        "oracle"
    };
    checks.insert(
        "factoriality".into(),
        if newton || bpf {
            Status::Pass
        } else {
            Status::RequiresOracle
        },
    );

    // Smoothness certificate: a smooth minimal ambient toric variety together
    // with a relation degree in the closed ample chamber makes the general
    // member smooth by a Bertini argument.
    let bertini = lambda.contains(mu) && z_mu_smooth(&vd, &n, &lambda);
    let smoothness_route = if bertini { "bertini" } else { "oracle" };
    checks.insert(
        "smoothness".into(),
        if bertini {
            Status::Pass
        } else {
            Status::RequiresOracle
        },
    );

    let overall = checks.values().copied().max().expect("checks are nonempty");
    let Cone2::Wedge { cw, ccw } = lambda else {
        unreachable!("chambers are two-dimensional")
    };
    Ok(VerificationReport {
        fano_chamber: [[cw.x, cw.y], [ccw.x, ccw.y]],
        checks,
        factoriality_route: factoriality_route.into(),
        smoothness_route: smoothness_route.into(),
        overall,
    })
}
