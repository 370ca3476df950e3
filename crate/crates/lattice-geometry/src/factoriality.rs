use crate::dd::dual_description;
use crate::mat::{part_of_basis, saturation_basis};
use crate::polytope::LatticePolytope;

/// Sufficient combinatorial criterion on a set of exponent vectors ensuring
/// that, for a general polynomial supported exactly on these monomials, the
/// quotient of the polynomial ring by it is a unique factorization domain.
///
/// Let `D` be the convex hull of the exponents. The criterion requires
///
/// 1. `dim D >= 4`,
/// 2. every coordinate hyperplane meets `D` (each variable is missing from
///    at least one monomial), and
/// 3. for every edge `E` of `D`, the cone dual to
///    `cone(D - u : u in E)` is regular, i.e. spanned by part of a lattice
///    basis (together with its lineality space).
///
/// A `false` return is inconclusive: the ring may or may not be factorial.
pub fn newton_polytope_forces_ufd(exponents: &[Vec<i64>]) -> bool {
    if exponents.is_empty() {
        return false;
    }
    let ambient = exponents[0].len();
    let pts: Vec<Vec<i128>> = exponents
        .iter()
        .map(|p| p.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let poly = LatticePolytope::new(&pts);
    if poly.dim() < 4 {
        return false;
    }
    for i in 0..ambient {
        let min = exponents.iter().map(|p| p[i]).min().unwrap();
        if min != 0 {
            return false;
        }
    }
    let n = poly.dim();
    let rebased = poly.rebased_points();
    let vertex_set: Vec<usize> = poly.vertex_indices().to_vec();
    for face in poly.proper_faces() {
        if face.dim != 1 {
            continue;
        }
        let ends: Vec<usize> = face
            .points
            .iter()
            .copied()
            .filter(|i| vertex_set.contains(i))
            .collect();
        assert_eq!(ends.len(), 2, "an edge has two vertices");
        let v0 = &rebased[ends[0]];
        let v1 = &rebased[ends[1]];
        let mut gens: Vec<Vec<i128>> = rebased
            .iter()
            .map(|p| p.iter().zip(v0).map(|(&a, &b)| a - b).collect())
            .collect();
        gens.push(v0.iter().zip(v1).map(|(&a, &b)| a - b).collect());
        gens.retain(|g| g.iter().any(|&x| x != 0));
        let dual = dual_description(n, &gens);
        let lin = saturation_basis(&dual.lineality, n);
        let mut combined = lin;
        combined.extend(dual.rays);
        if !part_of_basis(&combined, n) {
            return false;
        }
    }
    true
}
