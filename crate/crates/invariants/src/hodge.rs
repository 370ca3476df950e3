//! Hodge numbers via stratified lattice-point counting.
//!
//! The family member decomposes into locally closed strata indexed by the
//! relevant faces of its ample chamber.  A stratum either misses the
//! hypersurface equation entirely (an open torus orbit) or is a
//! nondegenerate hypersurface in a torus, possibly times a torus factor.
//! For each stratum the mixed-Hodge numbers with compact support are
//! assembled into a signed table `e[p][q]` determined by the Newton polytope
//! of the supported monomials: interior lattice counts of its dilates fix
//! the row sums, the cells above the antidiagonal come from the ambient
//! torus, and the first column follows a face recursion.  Additivity over
//! the strata then yields the table of the compact family member, from
//! which the Hodge numbers are read off.

use crate::InvariantError;
use grading_core::{relevant_faces, FaceIndexSet, NewtonData, ValidData};
use lattice_geometry::polytope::{binom_poly, LatticePolytope};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use verification::fano_chamber;

/// The three Hodge numbers of the family member that are not fixed by its
/// dimension and Picard rank: `h^{2,1}`, `h^{3,1}` and `h^{2,2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeTriple {
    pub h21: i64,
    pub h31: i64,
    pub h22: i64,
}

type Grid = [[i64; 5]; 5];
type ColumnMemo = HashMap<Vec<Vec<i128>>, Vec<i64>>;

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn binom(n: usize, k: usize) -> i64 {
    i64::try_from(binom_poly(n as i128, k)).expect("small binomial")
}

fn cast(x: i128) -> i64 {
    i64::try_from(x).expect("stratum invariants fit in 64 bits")
}

/// Number of lattice points of a segment minus one.
fn lattice_length(poly: &LatticePolytope) -> i64 {
    cast(poly.ehrhart().count(1)) - 1
}

/// The Hodge numbers `(h21, h31, h22)` of the family member.
///
/// Requires an input whose verification does not fail; in particular the
/// anticanonical class must select an ample chamber.
pub fn hodge_numbers(d: &ValidData) -> Result<HodgeTriple, InvariantError> {
    let n = NewtonData::new(d);
    let lambda = fano_chamber(d, &n)
        .expect("Hodge numbers require an anticanonical class interior to a chamber");
    let strata = relevant_faces(d, &n, &lambda);

    let mut grid: Grid = [[0; 5]; 5];
    let mut has_free = false;
    let mut memo: ColumnMemo = HashMap::new();

    for face in strata {
        let amb = face.len() - 2;
        let pts: Vec<Vec<i128>> = n
            .monomials()
            .iter()
            .filter(|m| FaceIndexSet::support_of(m).is_subset_of(face))
            .map(|m| m.iter().map(|&e| e as i128).collect())
            .collect();
        if pts.is_empty() {
            // Open torus orbit of dimension `amb`: table (uv - 1)^amb.
            assert!(amb <= 4, "torus strata of the fourfold have dimension at most 4");
            for k in 0..=amb {
                grid[k][k] += sign(amb - k) * binom(amb, k);
            }
            continue;
        }
        if pts.len() == 1 {
            return Err(InvariantError::StratumDegenerate);
        }
        let poly = LatticePolytope::new(&pts);
        let nd = poly.dim();
        let t = amb - nd;
        let (sub, free) = hypersurface_grid(&poly, &mut memo);
        if free {
            // Only the dense stratum has a five-dimensional polytope, and it
            // has no torus factor.
            assert!(!has_free && t == 0);
            has_free = true;
        }
        // Multiply by the torus factor (uv - 1)^t: a diagonal shift.
        for k in 0..=t {
            let c = sign(t - k) * binom(t, k);
            for p in 0..(5 - k) {
                for q in 0..(5 - k) {
                    grid[p + k][q + k] += c * sub[p][q];
                }
            }
        }
    }

    if has_free {
        // The dense stratum's table is stored with its one undetermined cell
        // (the (1,2) entry) set to zero; pin it down with h^{1,1} = 2.
        let x = grid[1][1] - 2;
        grid[1][1] -= x;
        grid[2][2] -= x;
        grid[1][2] += x;
        grid[2][1] += x;
    }

    // Structural checks of the assembled table.
    assert_eq!(grid[0][0], 1, "constant functions only");
    for p in 1..5 {
        assert_eq!(grid[p][0], 0, "no global holomorphic forms");
        assert_eq!(grid[0][p], 0, "no global holomorphic forms");
    }
    for p in 0..5 {
        for q in 0..5 {
            assert_eq!(grid[p][q], grid[q][p], "conjugation symmetry");
            assert_eq!(grid[p][q], grid[4 - p][4 - q], "Serre duality");
        }
    }
    assert_eq!(grid[1][1], 2, "Picard rank two");

    let h21 = -grid[2][1];
    let h31 = grid[3][1];
    let h22 = grid[2][2];
    assert!(h21 >= 0 && h31 >= 0 && h22 >= 0, "Hodge numbers are nonnegative");
    Ok(HodgeTriple { h21, h31, h22 })
}

/// Signed Hodge table of a nondegenerate hypersurface in the torus whose
/// Newton polytope is `poly` (full-dimensional after rebasing, dimension
/// between 1 and 5).
///
/// The boolean is true when the table contains one undetermined cell: in
/// dimension five the row sums determine everything except the difference
/// moved between the (1,1)/(2,2) and (1,2)/(2,1) cells.  The returned table
/// then carries the representative with the (1,2) cell set to zero.
fn hypersurface_grid(poly: &LatticePolytope, memo: &mut ColumnMemo) -> (Grid, bool) {
    let n = poly.dim();
    assert!((1..=5).contains(&n), "hypersurface stratum dimension");
    let mut e: Grid = [[0; 5]; 5];
    if n == 1 {
        e[0][0] = lattice_length(poly);
        return (e, false);
    }

    let ehr = poly.ehrhart();
    let lstar: Vec<i128> = (1..=n as i64).map(|j| ehr.interior(j)).collect();
    // phi_i = sum_{j=1}^{i} (-1)^{i+j} C(n+1, i-j) * interior(j-th dilate)
    let phi = |i: usize| -> i128 {
        (1..=i)
            .map(|j| sign(i + j) as i128 * binom_poly((n + 1) as i128, i - j) * lstar[j - 1])
            .sum()
    };
    // Row sums: K_p = (-1)^(p+n-1) C(n, p+1) + (-1)^(n-1) phi_{n-p}.
    let kp: Vec<i128> = (0..n)
        .map(|p| {
            sign(p + n - 1) as i128 * binom_poly(n as i128, p + 1)
                + sign(n - 1) as i128 * phi(n - p)
        })
        .collect();

    // Above the antidiagonal the table equals that of the ambient torus:
    // zero off the diagonal, signed binomials on it.
    for p in 0..n {
        if 2 * p > n - 1 {
            e[p][p] = sign(n - 1 - p) * binom(n, p + 1);
        }
    }

    // First column by face recursion, first row by symmetry.
    let col = first_column(poly, memo);
    for (p, &c) in col.iter().enumerate() {
        e[p][0] = c;
        e[0][p] = c;
    }

    // Remaining cells row by row from the bottom.
    let mut free = false;
    match n {
        2 => {}
        3 => {
            e[1][1] = cast(kp[1]) - e[1][0] - e[1][2];
        }
        4 => {
            e[2][1] = cast(kp[2]) - e[2][0] - e[2][2] - e[2][3];
            e[1][2] = e[2][1];
            e[1][1] = cast(kp[1]) - e[1][0] - e[1][2] - e[1][3];
        }
        5 => {
            e[3][1] = cast(kp[3]) - e[3][0] - e[3][2] - e[3][3] - e[3][4];
            e[1][3] = e[3][1];
            e[1][1] = cast(kp[1]) - e[1][0] - e[1][3] - e[1][4];
            e[2][2] = cast(kp[2]) - e[2][0] - e[2][3] - e[2][4];
            free = true;
        }
        _ => unreachable!(),
    }

    // Every row sum must match; for n = 5 the undetermined cell cancels
    // inside each row, so this also checks the stored representative.
    for p in 0..n {
        let s: i64 = (0..n).map(|q| e[p][q]).sum();
        assert_eq!(s as i128, kp[p], "row sum of the signed Hodge table");
    }
    (e, free)
}

/// The `q = 0` column `e[p][0]` of the signed Hodge table of the open
/// hypersurface with Newton polytope `poly`, for `p` up to `dim - 1`.
///
/// The compactified hypersurface has `h^{p,0}` equal to 1 for p = 0, the
/// interior lattice-point count for p = dim - 1 and zero otherwise; removing
/// the boundary pieces (one per proper face of dimension at least one)
/// yields the open values.  Memoized on the face's point set, which is
/// shared between strata.
fn first_column(poly: &LatticePolytope, memo: &mut ColumnMemo) -> Vec<i64> {
    let mut key: Vec<Vec<i128>> = poly.original_points().to_vec();
    key.sort();
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let n = poly.dim();
    let col: Vec<i64> = if n == 1 {
        vec![lattice_length(poly)]
    } else {
        let lstar1 = poly.ehrhart().interior(1);
        let faces = poly.proper_faces();
        let sub: Vec<(usize, Vec<i64>)> = faces
            .iter()
            .filter(|f| f.dim >= 1)
            .map(|f| (f.dim, first_column(&poly.subpolytope(&f.points), memo)))
            .collect();
        (0..n)
            .map(|p| {
                let hp0: i128 = if p == 0 {
                    1
                } else if p == n - 1 {
                    lstar1
                } else {
                    0
                };
                let mut val = sign(p) as i128 * hp0;
                for (fd, fc) in &sub {
                    if p < *fd {
                        val -= fc[p] as i128;
                    }
                }
                cast(val)
            })
            .collect()
    };
    memo.insert(key, col.clone());
    col
}
