//! Randomized checks of the canonical representative: idempotence, validity,
//! and invariance under admissible coordinate changes.

use grading_core::{apply_change, canonical_form, SpecifyingData};
use lattice_geometry::cone::Cone2;
use lattice_geometry::vec2::{v, Vec2};
use proptest::prelude::*;

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

fn mat_mul(a: [[i64; 2]; 2], b: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut out = [[0i64; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// A unimodular matrix built from three elementary shears, optionally
/// negated; together with the orientation flip of `apply_change` this
/// reaches both components of the integral linear group.
fn arb_unimodular() -> impl Strategy<Value = [[i64; 2]; 2]> {
    (-3i64..=3, -3i64..=3, -3i64..=3, any::<bool>()).prop_map(|(a, b, c, neg)| {
        let lower = |m: i64| [[1, 0], [m, 1]];
        let upper = |m: i64| [[1, m], [0, 1]];
        let u = mat_mul(mat_mul(lower(a), upper(b)), lower(c));
        if neg {
            [[-u[0][0], -u[0][1]], [-u[1][0], -u[1][1]]]
        } else {
            u
        }
    })
}

fn arb_permutation() -> impl Strategy<Value = [usize; 7]> {
    Just((0..7).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|p| {
            let mut arr = [0usize; 7];
            arr.copy_from_slice(&p);
            arr
        })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 96,
        max_global_rejects: 65536,
        ..ProptestConfig::default()
    })]

    /// Canonicalizing twice gives the same result as canonicalizing once.
    #[test]
    fn canonical_form_is_idempotent(d in arb_data()) {
        let c = canonical_form(&d);
        prop_assert_eq!(canonical_form(&c), c);
    }

    /// The canonical representative of valid data is itself valid.
    #[test]
    fn canonical_form_preserves_validity(d in arb_data()) {
        let c = canonical_form(&d);
        prop_assert!(c.validate().is_ok(), "canonical form {:?} is invalid", c);
    }

    /// Any admissible coordinate change leaves the canonical form unchanged.
    #[test]
    fn canonical_form_is_an_orbit_invariant(
        d in arb_data(),
        u in arb_unimodular(),
        flip in any::<bool>(),
        perm in arb_permutation(),
    ) {
        let moved = apply_change(&d, u, flip, &perm);
        prop_assert_eq!(
            canonical_form(&moved),
            canonical_form(&d),
            "change u = {:?}, flip = {}, perm = {:?}",
            u,
            flip,
            perm
        );
    }
}
