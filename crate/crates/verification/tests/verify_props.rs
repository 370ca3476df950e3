//! Randomized structural checks of the certification pipeline.

use grading_core::{apply_change, git_fan, NewtonData, SpecifyingData};
use lattice_geometry::cone::Cone2;
use lattice_geometry::vec2::{v, Vec2};
use proptest::prelude::*;
use verification::{
    fano_chamber_in, locally_factorial, verify_candidate, z_mu_smooth, Status,
};

fn build(raw: [(i64, i64); 7], coeffs: [i64; 7]) -> Option<SpecifyingData> {
    let cols_raw: Vec<Vec2> = raw.iter().map(|&(x, y)| v(x, y)).collect();
    if cols_raw.iter().any(|c| c.is_zero()) {
        return None;
    }
    Cone2::hull(&cols_raw).ok()?;
    let mut cols = cols_raw;
    cols.sort_by(|a, b| a.det(*b).cmp(&0).reverse());
    let mut arr = [Vec2::ZERO; 7];
    arr.copy_from_slice(&cols);
    let mut mu = Vec2::ZERO;
    for (c, w) in coeffs.iter().zip(arr.iter()) {
        mu = v(mu.x + c * w.x, mu.y + c * w.y);
    }
    let d = SpecifyingData::from_columns(&arr, mu);
    d.validate().ok()?;
    Some(d)
}

fn arb_data() -> impl Strategy<Value = SpecifyingData> {
    (
        proptest::array::uniform7((-2i64..=2, 0i64..=2)),
        proptest::array::uniform7(0i64..=2),
    )
        .prop_filter_map("degenerate grading", |(raw, coeffs)| build(raw, coeffs))
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        max_global_rejects: 65536,
        ..ProptestConfig::default()
    })]

    /// The verification outcome does not depend on the choice of lattice
    /// coordinates or on the column order.
    #[test]
    fn outcome_invariant_under_coordinate_changes(
        d in arb_data(),
        a in -2i64..=2,
        b in -2i64..=2,
        flip in any::<bool>(),
    ) {
        let u = [[1 + a * b, a], [b, 1]]; // lower * upper shear, determinant 1
        let perm: [usize; 7] = if flip {
            [6, 5, 4, 3, 2, 1, 0]
        } else {
            [0, 1, 2, 3, 4, 5, 6]
        };
        let moved = apply_change(&d, u, flip, &perm);
        match (verify_candidate(&d), verify_candidate(&moved)) {
            (Ok(r), Ok(rm)) => {
                prop_assert_eq!(r.overall, rm.overall);
                prop_assert_eq!(r.factoriality_route, rm.factoriality_route);
                prop_assert_eq!(r.smoothness_route, rm.smoothness_route);
            }
            (Err(e), Err(em)) => {
                let same = matches!(
                    (&e, &em),
                    (
                        verification::VerificationError::NotFano { .. },
                        verification::VerificationError::NotFano { .. }
                    )
                );
                prop_assert!(same, "errors differ: {:?} vs {:?}", e, em);
            }
            (r, rm) => {
                prop_assert!(false, "outcomes differ: {:?} vs {:?}", r, rm);
            }
        }
    }

    /// Ambient-variety smoothness at a chamber coincides with local
    /// factoriality there: both quantify the lattice-generation condition
    /// over the same faces.
    #[test]
    fn ambient_smoothness_matches_chamber_factoriality(d in arb_data()) {
        let vd = d.validate().unwrap();
        let n = NewtonData::new(&vd);
        let fan = git_fan(&vd, &n);
        if let Ok(lambda) = fano_chamber_in(&vd, &fan) {
            prop_assert_eq!(
                z_mu_smooth(&vd, &n, &lambda),
                locally_factorial(&vd, &n, &lambda)
            );
        }
    }

    /// The aggregate status is the join of the per-check statuses, and the
    /// recorded routes agree with the certificate checks.
    #[test]
    fn report_is_internally_consistent(d in arb_data()) {
        if let Ok(r) = verify_candidate(&d) {
            let join = r.checks.values().copied().max().unwrap();
            prop_assert_eq!(r.overall, join);
            prop_assert_eq!(
                r.check("factoriality") == Some(Status::Pass),
                r.factoriality_route != "oracle"
            );
            prop_assert_eq!(
                r.check("smoothness") == Some(Status::Pass),
                r.smoothness_route == "bertini"
            );
        }
    }
}
