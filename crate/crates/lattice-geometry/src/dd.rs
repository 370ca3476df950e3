use crate::vec2::gcd_slice;
use std::collections::HashSet;

/// Double description of `{ x in R^dim : h . x >= 0 for all h }`:
/// a basis of the lineality space together with the extreme rays of the
/// quotient by it. Rays are primitive integer vectors.
///
/// Incremental Motzkin/Burger construction with exact zero-set bookkeeping
/// and the combinatorial adjacency test, so the set of rays is exactly the
/// set of extreme rays, with no redundant members.
pub struct DualDescription {
    pub lineality: Vec<Vec<i128>>,
    pub rays: Vec<Vec<i128>>,
}

struct RayRec {
    v: Vec<i128>,
    /// Bit j set iff `constraints[j] . v == 0` (exact, maintained per step).
    tight: Vec<u64>,
}

pub fn dual_description(dim: usize, constraints: &[Vec<i128>]) -> DualDescription {
    let words = constraints.len().div_ceil(64);
    let mut lin: Vec<Vec<i128>> = (0..dim)
        .map(|i| (0..dim).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut rays: Vec<RayRec> = Vec::new();

    for (k, h) in constraints.iter().enumerate() {
        assert_eq!(h.len(), dim);
        if let Some(i0) = lin.iter().position(|l| dot(l, h) != 0) {
            // The constraint cuts the lineality space: one basis vector
            // becomes a ray, the others are folded into the hyperplane.
            let mut l0 = lin.swap_remove(i0);
            if dot(&l0, h) < 0 {
                for x in &mut l0 {
                    *x = -*x;
                }
            }
            let a0 = dot(&l0, h);
            for l in &mut lin {
                let c = dot(l, h);
                if c != 0 {
                    for (x, &y) in l.iter_mut().zip(&l0) {
                        *x = a0 * *x - c * y;
                    }
                    reduce(l);
                }
            }
            for r in &mut rays {
                let c = dot(&r.v, h);
                if c != 0 {
                    for (x, &y) in r.v.iter_mut().zip(&l0) {
                        *x = a0 * *x - c * y;
                    }
                    reduce(&mut r.v);
                }
                // All old rays now lie in the hyperplane of h.
                set_bit(&mut r.tight, k);
            }
            reduce(&mut l0);
            let mut tight = vec![0u64; words];
            // l0 came from the lineality space, so it is tight at every
            // previously processed constraint, and h . l0 > 0.
            for j in 0..k {
                debug_assert_eq!(dot(&l0, &constraints[j]), 0);
                set_bit(&mut tight, j);
            }
            rays.push(RayRec { v: l0, tight });
        } else {
            let vals: Vec<i128> = rays.iter().map(|r| dot(&r.v, h)).collect();
            let mut fresh: Vec<RayRec> = Vec::new();
            for (pi, rp) in rays.iter().enumerate() {
                if vals[pi] <= 0 {
                    continue;
                }
                for (ni, rn) in rays.iter().enumerate() {
                    if vals[ni] >= 0 {
                        continue;
                    }
                    let common: Vec<u64> = rp
                        .tight
                        .iter()
                        .zip(&rn.tight)
                        .map(|(a, b)| a & b)
                        .collect();
                    let adjacent = !rays.iter().enumerate().any(|(ri, rr)| {
                        ri != pi && ri != ni && contains_bits(&rr.tight, &common)
                    });
                    if !adjacent {
                        continue;
                    }
                    // Positive combination tight at h: vals[pi] * n - vals[ni] * p.
                    let mut v: Vec<i128> = rn
                        .v
                        .iter()
                        .zip(&rp.v)
                        .map(|(&n, &p)| vals[pi] * n - vals[ni] * p)
                        .collect();
                    reduce(&mut v);
                    if v.iter().all(|&x| x == 0) {
                        continue;
                    }
                    // Cancellation can make the new ray tight at constraints
                    // where neither parent is, so recompute the zero set.
                    let mut tight = vec![0u64; words];
                    for (j, hj) in constraints[..=k].iter().enumerate() {
                        if dot(&v, hj) == 0 {
                            set_bit(&mut tight, j);
                        }
                    }
                    fresh.push(RayRec { v, tight });
                }
            }
            let old = std::mem::take(&mut rays);
            for (ri, mut r) in old.into_iter().enumerate() {
                if vals[ri] > 0 {
                    rays.push(r);
                } else if vals[ri] == 0 {
                    set_bit(&mut r.tight, k);
                    rays.push(r);
                }
            }
            rays.extend(fresh);
            let mut seen: HashSet<Vec<i128>> = HashSet::new();
            rays.retain(|r| seen.insert(r.v.clone()));
        }
    }

    DualDescription {
        lineality: lin,
        rays: rays.into_iter().map(|r| r.v).collect(),
    }
}

fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

fn reduce(v: &mut [i128]) {
    let g = gcd_slice(v);
    if g > 1 {
        for x in v {
            *x /= g;
        }
    }
}

fn set_bit(bits: &mut [u64], j: usize) {
    bits[j / 64] |= 1 << (j % 64);
}

/// Is every bit of `sub` set in `sup`?
fn contains_bits(sup: &[u64], sub: &[u64]) -> bool {
    sup.iter().zip(sub).all(|(a, b)| a & b == *b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<Vec<i128>>) -> Vec<Vec<i128>> {
        v.sort();
        v
    }

    #[test]
    fn octant() {
        let d = dual_description(
            3,
            &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
        );
        assert!(d.lineality.is_empty());
        assert_eq!(
            sorted(d.rays),
            vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]
        );
    }

    #[test]
    fn square_cone() {
        // Dual of the cone over the unit square at height one: the four
        // constraints x >= 0, y >= 0, z - x >= 0, z - y >= 0.
        let d = dual_description(
            3,
            &[
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![-1, 0, 1],
                vec![0, -1, 1],
            ],
        );
        assert!(d.lineality.is_empty());
        assert_eq!(
            sorted(d.rays),
            vec![
                vec![0, 0, 1],
                vec![0, 1, 1],
                vec![1, 0, 1],
                vec![1, 1, 1]
            ]
        );
    }

    #[test]
    fn with_lineality() {
        // Only one constraint in R^2: half plane, lineality dimension 1.
        let d = dual_description(2, &[vec![1, 0]]);
        assert_eq!(d.lineality.len(), 1);
        assert_eq!(d.lineality[0][0], 0);
        assert_eq!(d.rays.len(), 1);
        assert_eq!(d.rays[0], vec![1, 0]);
    }

    #[test]
    fn redundant_constraints() {
        // x >= 0, y >= 0, and the redundant x + y >= 0.
        let d = dual_description(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert!(d.lineality.is_empty());
        assert_eq!(sorted(d.rays), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn empty_interior() {
        // x >= 0 and -x >= 0 force x = 0: a line in R^2 becomes lineality
        // of the dual description in the y direction.
        let d = dual_description(2, &[vec![1, 0], vec![-1, 0]]);
        assert_eq!(d.lineality.len(), 1);
        assert!(d.rays.is_empty());
        assert_eq!(d.lineality[0][0], 0);
        assert_ne!(d.lineality[0][1], 0);
    }
}
