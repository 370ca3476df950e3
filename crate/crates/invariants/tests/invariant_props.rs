//! Randomized structural checks of the invariant computations.

use grading_core::{apply_change, SpecifyingData};
use invariants::{anticanonical_class, fano_index, hilbert_dim, hilbert_dim_ambient, hilbert_values};
use lattice_geometry::cone::Cone2;
use lattice_geometry::vec2::{gcd, v, Vec2};
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

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        max_global_rejects: 65536,
        ..ProptestConfig::default()
    })]

    /// The degree-zero graded component consists of the constants only.
    #[test]
    fn degree_zero_component_is_constants(d in arb_data()) {
        let vd = d.validate().unwrap();
        prop_assert_eq!(hilbert_dim(&vd, v(0, 0)), 1);
    }

    /// Component dimensions are sandwiched between zero and the ambient
    /// count: subtracting the relation never overshoots because
    /// multiplication by a fixed monomial of the relation degree embeds the
    /// smaller component into the larger.
    #[test]
    fn component_dimensions_are_bounded(
        d in arb_data(),
        wx in -2i64..=6,
        wy in 0i64..=6,
    ) {
        let vd = d.validate().unwrap();
        let w = v(wx, wy);
        let dim = hilbert_dim(&vd, w);
        prop_assert!(dim >= 0);
        prop_assert!(dim <= hilbert_dim_ambient(&vd, w));
    }

    /// The index divides the anticanonical class with primitive quotient.
    #[test]
    fn index_is_the_divisibility_of_the_anticanonical_class(d in arb_data()) {
        let vd = d.validate().unwrap();
        let k = anticanonical_class(&vd);
        prop_assume!(!k.is_zero());
        let i = fano_index(&vd);
        prop_assert!(i >= 1);
        prop_assert_eq!(k.x % i, 0);
        prop_assert_eq!(k.y % i, 0);
        prop_assert_eq!(gcd(k.x / i, k.y / i), 1);
    }

    /// The anticanonical Hilbert values and the index only depend on the
    /// orbit of the datum under admissible coordinate changes.
    #[test]
    fn series_is_an_orbit_constant(
        d in arb_data(),
        a in -2i64..=2,
        b in -2i64..=2,
        flip in any::<bool>(),
    ) {
        let u = [[1 + a * b, a], [b, 1]];
        let perm: [usize; 7] = if flip {
            [6, 5, 4, 3, 2, 1, 0]
        } else {
            [0, 1, 2, 3, 4, 5, 6]
        };
        let moved = apply_change(&d, u, flip, &perm);
        let vd = d.validate().unwrap();
        let vm = moved.validate().unwrap();
        prop_assert_eq!(hilbert_values(&vm), hilbert_values(&vd));
        let k = anticanonical_class(&vd);
        if !k.is_zero() {
            prop_assert_eq!(fano_index(&vm), fano_index(&vd));
        }
    }
}
