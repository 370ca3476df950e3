use lattice_geometry::LatticePolytope;
use proptest::prelude::*;

/// Brute-force lattice point counts of the `j`-th dilate in the rebased
/// coordinates, from the facet description: boundary-inclusive and strict.
fn brute_force_counts(p: &LatticePolytope, j: i128) -> (i128, i128) {
    let dim = p.dim();
    if dim == 0 {
        return (1, 1);
    }
    let pts = p.rebased_points();
    let mut lo = vec![i128::MAX; dim];
    let mut hi = vec![i128::MIN; dim];
    for q in pts {
        for k in 0..dim {
            lo[k] = lo[k].min(q[k] * j);
            hi[k] = hi[k].max(q[k] * j);
        }
    }
    let mut all = 0i128;
    let mut strict = 0i128;
    let mut x = lo.clone();
    'outer: loop {
        let mut inside = true;
        let mut interior = true;
        for f in p.facets() {
            let s: i128 = f.normal.iter().zip(&x).map(|(&a, &b)| a * b).sum();
            if s < f.rhs * j {
                inside = false;
                interior = false;
                break;
            }
            if s == f.rhs * j {
                interior = false;
            }
        }
        if inside {
            all += 1;
        }
        if interior {
            strict += 1;
        }
        for k in 0..dim {
            x[k] += 1;
            if x[k] <= hi[k] {
                continue 'outer;
            }
            x[k] = lo[k];
            if k == dim - 1 {
                break 'outer;
            }
        }
    }
    (all, strict)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(80))]

    #[test]
    fn ehrhart_matches_brute_force(
        pts in proptest::collection::vec(proptest::collection::vec(0i128..=4, 3), 2..7)
    ) {
        let p = LatticePolytope::new(&pts);
        let e = p.ehrhart();
        prop_assert_eq!(e.dim(), p.dim());
        for j in 1..=3i128 {
            let (all, strict) = brute_force_counts(&p, j);
            prop_assert_eq!(e.count(j as i64), all, "count at dilate {}", j);
            prop_assert_eq!(e.interior(j as i64), strict, "interior at dilate {}", j);
        }
        // Reciprocity written directly: count(-j) = (-1)^dim interior(j).
        let sign = if p.dim() % 2 == 0 { 1 } else { -1 };
        for j in 1..=3i64 {
            prop_assert_eq!(e.count(-j), sign * e.interior(j));
        }
        // Value at zero is 1 for the closed polytope.
        prop_assert_eq!(e.count(0), 1);
        // h*-entries are nonnegative and sum to the normalized volume.
        prop_assert!(e.delta().iter().all(|&d| d >= 0));
    }
}

#[test]
fn product_of_simplices_3_by_2() {
    // Hull of { e_i + e_j : 0 <= i < 4 <= j < 7 } in Z^7: a product of a
    // tetrahedron and a triangle, of dimension 5.
    let mut pts = Vec::new();
    for i in 0..4 {
        for j in 4..7 {
            let mut p = vec![0i128; 7];
            p[i] = 1;
            p[j] = 1;
            pts.push(p);
        }
    }
    let p = LatticePolytope::new(&pts);
    assert_eq!(p.dim(), 5);
    assert_eq!(p.vertex_indices().len(), 12);
    let e = p.ehrhart();
    // Counts factor: binomial(j+3,3) * binomial(j+2,2).
    assert_eq!(e.count(1), 4 * 3);
    assert_eq!(e.count(2), 10 * 6);
    assert_eq!(e.count(3), 20 * 10);
    // Interior points appear from the fourth dilate on.
    assert_eq!(e.interior(1), 0);
    assert_eq!(e.interior(2), 0);
    assert_eq!(e.interior(3), 0);
    assert_eq!(e.interior(4), 3);
    assert_eq!(e.interior(5), 24);
    // Normalized volume 5! / (3! 2!) = 10.
    assert_eq!(e.normalized_volume(), 10);
}

#[test]
fn faces_of_the_product() {
    let mut pts = Vec::new();
    for i in 0..4 {
        for j in 4..7 {
            let mut p = vec![0i128; 7];
            p[i] = 1;
            p[j] = 1;
            pts.push(p);
        }
    }
    let p = LatticePolytope::new(&pts);
    let faces = p.proper_faces();
    // Face counts of a product of simplices: f_k = sum over a+b=k of
    // (faces of dim a of the 3-simplex) * (faces of dim b of the triangle).
    let simplex3 = [4, 6, 4, 1]; // faces of dim 0..3
    let simplex2 = [3, 3, 1];
    for k in 0..5 {
        let expected: usize = (0..=k)
            .filter(|&a| a < 4 && k - a < 3)
            .map(|a| simplex3[a] * simplex2[k - a])
            .sum();
        let got = faces.iter().filter(|f| f.dim == k).count();
        assert_eq!(got, expected, "faces of dimension {k}");
    }
}
