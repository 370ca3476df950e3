use lattice_geometry::{dual_description, gcd_slice};
use proptest::prelude::*;

fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rays_satisfy_all_constraints(
        cons in proptest::collection::vec(proptest::collection::vec(-5i128..=5, 3), 1..7)
    ) {
        let d = dual_description(3, &cons);
        for r in &d.rays {
            prop_assert!(r.iter().any(|&x| x != 0));
            prop_assert_eq!(gcd_slice(r), 1, "rays are primitive");
            for h in &cons {
                prop_assert!(dot(h, r) >= 0);
            }
        }
        for l in &d.lineality {
            for h in &cons {
                prop_assert_eq!(dot(h, l), 0);
            }
        }
        // No two rays are parallel.
        for (i, r) in d.rays.iter().enumerate() {
            for s in &d.rays[i + 1..] {
                prop_assert_ne!(r, s);
            }
        }
    }

    #[test]
    fn double_dual_is_idempotent(
        gens in proptest::collection::vec((1i128..=6, -5i128..=5, -5i128..=5).prop_map(|(x, y, z)| vec![x, y, z]), 1..6)
    ) {
        // Generators with positive first coordinate span a pointed cone.
        // Restrict to spanning sets, where the dual is full dimensional and
        // dualizing twice recovers the extreme rays among the generators.
        let rank = lattice_geometry::rank(&lattice_geometry::IntMat::from_cols(&gens, 3));
        if rank < 3 {
            return Ok(());
        }
        let facets = dual_description(3, &gens);
        prop_assert!(facets.lineality.is_empty());
        let back = dual_description(3, &facets.rays);
        prop_assert!(back.lineality.is_empty());
        // Every recovered ray is parallel to an input generator.
        for r in &back.rays {
            let mut g2 = r.clone();
            let g = gcd_slice(&g2);
            if g > 1 {
                for x in &mut g2 {
                    *x /= g;
                }
            }
            prop_assert!(
                gens.iter().any(|h| {
                    let gh = gcd_slice(h);
                    h.iter().zip(&g2).all(|(&a, &b)| a == b * gh)
                }),
                "{:?} not among generators", r
            );
        }
        // And dualizing a third time reproduces the facet set exactly.
        let again = dual_description(3, &back.rays);
        let mut a = again.rays.clone();
        let mut b = facets.rays.clone();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }
}
