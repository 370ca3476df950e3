use lattice_geometry::{
    generates_lattice, kernel_basis, part_of_basis, saturation_basis, snf, solve_integer, v,
    IntMat,
};
use proptest::prelude::*;

fn mat_strategy(max_m: usize, max_n: usize) -> impl Strategy<Value = IntMat> {
    (1..=max_m, 1..=max_n).prop_flat_map(|(m, n)| {
        proptest::collection::vec(-9i128..=9, m * n).prop_map(move |entries| {
            let mut a = IntMat::zero(m, n);
            for i in 0..m {
                for j in 0..n {
                    a[(i, j)] = entries[i * n + j];
                }
            }
            a
        })
    })
}

fn mat_product(a: &IntMat, b: &IntMat) -> IntMat {
    assert_eq!(a.n, b.m);
    let mut c = IntMat::zero(a.m, b.n);
    for i in 0..a.m {
        for j in 0..b.n {
            c[(i, j)] = (0..a.n).map(|k| a[(i, k)] * b[(k, j)]).sum();
        }
    }
    c
}

fn is_unimodular(a: &IntMat) -> bool {
    a.m == a.n && {
        let s = snf(a);
        s.rank == a.m && s.divisors.iter().all(|&d| d == 1)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_is_a_diagonalization(a in mat_strategy(5, 5)) {
        let s = snf(&a);
        // u a v = d with unimodular transforms and their tracked inverses.
        let uav = mat_product(&mat_product(&s.u, &a), &s.v);
        prop_assert_eq!(&uav, &s.d);
        prop_assert_eq!(mat_product(&s.u, &s.u_inv), IntMat::identity(a.m));
        prop_assert_eq!(mat_product(&s.v, &s.v_inv), IntMat::identity(a.n));
        prop_assert!(is_unimodular(&s.u));
        prop_assert!(is_unimodular(&s.v));
        // Positive divisors in a divisibility chain, zero block after rank.
        for w in s.divisors.windows(2) {
            prop_assert!(w[0] > 0 && w[1] % w[0] == 0);
        }
        for i in 0..a.m {
            for j in 0..a.n {
                if i != j || i >= s.rank {
                    prop_assert_eq!(s.d[(i, j)], 0);
                } else {
                    prop_assert_eq!(s.d[(i, i)], s.divisors[i]);
                }
            }
        }
    }

    #[test]
    fn kernel_vectors_annihilate(a in mat_strategy(4, 6)) {
        let s = snf(&a);
        let k = kernel_basis(&a);
        prop_assert_eq!(k.len(), a.n - s.rank);
        for b in &k {
            prop_assert_eq!(a.mul_vec(b), vec![0; a.m]);
        }
        // Kernel basis vectors extend to a basis: they span a saturated
        // sublattice.
        prop_assert!(part_of_basis(&k, a.n));
    }

    #[test]
    fn solve_recovers_images(a in mat_strategy(4, 5), x in proptest::collection::vec(-5i128..=5, 5)) {
        let x = &x[..a.n];
        let t = a.mul_vec(x);
        let sol = solve_integer(&a, &t);
        prop_assert!(sol.is_some());
        prop_assert_eq!(a.mul_vec(&sol.unwrap()), t);
    }

    #[test]
    fn saturation_contains_generators(cols in proptest::collection::vec(proptest::collection::vec(-6i128..=6, 4), 1..5)) {
        let b = saturation_basis(&cols, 4);
        let bm = IntMat::from_cols(&b, 4);
        // Every generator is an integer combination of the basis.
        for c in &cols {
            prop_assert!(solve_integer(&bm, c).is_some());
        }
        // The basis is part of a lattice basis of Z^4.
        prop_assert!(part_of_basis(&b, 4));
        let a = IntMat::from_cols(&cols, 4);
        prop_assert_eq!(b.len(), snf(&a).rank);
    }

    #[test]
    fn lattice_generation_matches_divisor_oracle(entries in proptest::collection::vec(-7i64..=7, 2..12)) {
        let vs: Vec<_> = entries.chunks(2).filter(|c| c.len() == 2).map(|c| v(c[0], c[1])).collect();
        let cols: Vec<Vec<i128>> = vs.iter().map(|w| vec![w.x as i128, w.y as i128]).collect();
        let s = snf(&IntMat::from_cols(&cols, 2));
        let full = s.rank == 2 && s.divisors.iter().all(|&d| d == 1);
        prop_assert_eq!(generates_lattice(&vs), full);
    }
}
