//! Elementary contractions read off from the two boundary rays of the moving
//! cone.
//!
//! For each boundary ray the degrees either stop at the ray (the contraction
//! is a fibration over the weighted projective space of the ray, or onto a
//! hypersurface in it when the relation degree sits on the ray) or a single
//! generator degree lies strictly beyond it (the contraction is birational
//! and contracts that generator's divisor onto a center inside a weighted
//! hypersurface).  Data whose generator degrees split into two independent
//! blocks describe a product and get one product descriptor instead.

use crate::labels::{center_label, hypersurface_label, projective_label};
use grading_core::{product_split, FaceIndexSet, NewtonData, ValidData};
use lattice_geometry::{vec2::Vec2, Cone2};
use serde::{Deserialize, Serialize};
use verification::fano_chamber;

/// The three shapes an elementary contraction can take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ContractionKind {
    Fibration,
    Birational,
    Product,
}

/// One elementary contraction (or the product decomposition).
///
/// For a fibration, `base_or_target` is the base and `fiber_or_center` the
/// general fiber.  For a birational contraction they are the target variety
/// and the center the divisor is contracted onto.  For a product they are
/// the hypersurface factor and the toric factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionDescriptor {
    pub kind: ContractionKind,
    /// Whether the contraction exists on a small modification of the family
    /// member rather than the member itself: the contracted ray is not a
    /// face of the ample chamber.
    pub via_small_modification: bool,
    pub base_or_target: String,
    pub fiber_or_center: String,
    /// Whether the target of a birational contraction is singular.  Always
    /// false for fibrations and products.
    pub singular_target: bool,
}

/// Height of `w` along the primitive ray generator `ray`, i.e. the integer
/// `h` with `w = h * ray`.
fn height_along(ray: Vec2, w: Vec2) -> i64 {
    debug_assert_eq!(ray.det(w), 0);
    if ray.x != 0 {
        w.x / ray.x
    } else {
        w.y / ray.y
    }
}

fn prime_factors(mut m: i64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            out.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// The elementary contractions of the family member, one per boundary ray of
/// the moving cone (clockwise ray first), or a single product descriptor
/// when the degrees split into two independent blocks.
///
/// Requires an input whose verification does not fail; in particular the
/// anticanonical class must select an ample chamber.
pub fn elementary_contractions(d: &ValidData) -> Vec<ContractionDescriptor> {
    if let Some(split) = product_split(d) {
        return vec![ContractionDescriptor {
            kind: ContractionKind::Product,
            via_small_modification: false,
            base_or_target: hypersurface_label(
                split.relation_degree,
                &split.hypersurface_weights,
            ),
            fiber_or_center: projective_label(&split.complement_weights),
            singular_target: false,
        }];
    }
    let n = NewtonData::new(d);
    let lambda = fano_chamber(d, &n)
        .expect("contractions require an anticanonical class interior to a chamber");
    let Cone2::Wedge {
        cw: mov_cw,
        ccw: mov_ccw,
    } = *d.moving_cone()
    else {
        panic!("contractions require a two-dimensional moving cone");
    };
    vec![
        side_contraction(d, &n, &lambda, mov_cw, 1),
        side_contraction(d, &n, &lambda, mov_ccw, -1),
    ]
}

/// The contraction attached to one boundary ray of the moving cone.
/// `orient` is +1 for the clockwise ray and -1 for the counterclockwise one,
/// so that `orient * det(ray, w)` is nonnegative on the effective cone side
/// that contains the moving cone.
fn side_contraction(
    d: &ValidData,
    n: &NewtonData,
    lambda: &Cone2,
    ray: Vec2,
    orient: i64,
) -> ContractionDescriptor {
    let ray = ray.primitive();
    let cols = d.columns();
    let mu = d.mu();
    let f = |w: Vec2| orient * ray.det(w);

    let via = match lambda {
        Cone2::Wedge { cw, ccw } => ray != cw.primitive() && ray != ccw.primitive(),
        _ => true,
    };

    let on_ray: Vec<usize> = (0..7).filter(|&i| f(cols[i]) == 0).collect();
    let outside: Vec<usize> = (0..7).filter(|&i| f(cols[i]) < 0).collect();

    if outside.is_empty() {
        // Fibration: the effective cone stops at the ray.
        let heights: Vec<i64> = on_ray.iter().map(|&i| height_along(ray, cols[i])).collect();
        let off_weights: Vec<i64> = (0..7)
            .filter(|i| !on_ray.contains(i))
            .map(|i| f(cols[i]))
            .collect();
        let u_mu = f(mu);
        let (base, fiber) = if u_mu > 0 {
            // The relation survives on the fibers: they are hypersurfaces.
            (
                projective_label(&heights),
                hypersurface_label(u_mu, &off_weights),
            )
        } else {
            // The relation degree sits on the ray: it constrains the base
            // and the general fiber is the whole complementary space.
            (
                hypersurface_label(height_along(ray, mu), &heights),
                projective_label(&off_weights),
            )
        };
        return ContractionDescriptor {
            kind: ContractionKind::Fibration,
            via_small_modification: via,
            base_or_target: base,
            fiber_or_center: fiber,
            singular_target: false,
        };
    }

    // Birational: exactly one generator degree lies strictly beyond the ray
    // and its divisor is contracted.
    assert_eq!(
        outside.len(),
        1,
        "exactly one generator degree lies beyond a birational boundary ray"
    );
    let c = outside[0];
    let vc = cols[c].primitive();
    let phi = |w: Vec2| orient * vc.det(w);
    debug_assert!((0..7).all(|j| j == c || phi(cols[j]) > 0));
    let phi_mu = phi(mu);
    assert!(phi_mu > 0, "relation degree is not on the contracted ray");

    // Elimination: a variable that appears in exactly one monomial, and
    // there linearly together with powers of the contracted variable only,
    // can be solved for; the target then loses both variables.
    let mut eliminated: Option<usize> = None;
    for i in 0..7 {
        if i == c {
            continue;
        }
        let diff = mu - cols[i];
        if vc.det(diff) != 0 {
            continue;
        }
        let k = height_along(vc, diff);
        if k < 1 || diff != k * vc {
            continue;
        }
        // diff must be an exact multiple of the full column, not just of its
        // primitive direction.
        let hc = height_along(vc, cols[c]);
        if k % hc != 0 {
            continue;
        }
        let uses: usize = n.monomials().iter().filter(|m| m[i] >= 1).count();
        if uses == 1 {
            eliminated = Some(i);
            break;
        }
    }

    let (target, target_weights): (String, Vec<(usize, i64)>) = match eliminated {
        Some(i) => {
            let tw: Vec<(usize, i64)> = (0..7)
                .filter(|&j| j != c && j != i)
                .map(|j| (j, phi(cols[j])))
                .collect();
            let weights: Vec<i64> = tw.iter().map(|&(_, a)| a).collect();
            (projective_label(&weights), tw)
        }
        None => {
            let tw: Vec<(usize, i64)> = (0..7)
                .filter(|&j| j != c)
                .map(|j| (j, phi(cols[j])))
                .collect();
            let weights: Vec<i64> = tw.iter().map(|&(_, a)| a).collect();
            (hypersurface_label(phi_mu, &weights), tw)
        }
    };

    // Center: cut out by the monomials supported on the ray columns and the
    // contracted column; if there are none, the center is the whole weighted
    // projective space of the ray columns.
    let ray_and_c = FaceIndexSet::from_indices(
        &on_ray
            .iter()
            .copied()
            .chain(std::iter::once(c))
            .collect::<Vec<usize>>(),
    );
    let has_face_monomial = n
        .monomials()
        .iter()
        .any(|m| FaceIndexSet::support_of(m).is_subset_of(ray_and_c));
    let center_weights: Vec<i64> = on_ray.iter().map(|&i| phi(cols[i])).collect();
    let center = if has_face_monomial {
        center_label(phi_mu, &center_weights)
    } else {
        projective_label(&center_weights)
    };

    // Singularity of the target: either the weighted ambient space is
    // singular along a positive-dimensional locus the hypersurface cannot
    // avoid, or every monomial vanishes to order at least two off the
    // contracted locus.
    let mut singular = false;
    let mut primes: Vec<i64> = target_weights
        .iter()
        .flat_map(|&(_, a)| prime_factors(a))
        .collect();
    primes.sort_unstable();
    primes.dedup();
    for p in primes {
        let jp: Vec<usize> = target_weights
            .iter()
            .filter(|&&(_, a)| a % p == 0)
            .map(|&(j, _)| j)
            .collect();
        if jp.len() >= 2 {
            singular = true;
            break;
        }
        if jp.len() == 1 {
            let pair = FaceIndexSet::from_indices(&[jp[0], c]);
            let covered = n
                .monomials()
                .iter()
                .any(|m| FaceIndexSet::support_of(m).is_subset_of(pair));
            if !covered {
                singular = true;
                break;
            }
        }
    }
    if !singular {
        let min_off: i64 = n
            .monomials()
            .iter()
            .map(|m| {
                (0..7)
                    .filter(|j| !on_ray.contains(j) && *j != c)
                    .map(|j| m[j])
                    .sum()
            })
            .min()
            .expect("the relation has monomials");
        singular = min_off >= 2;
    }

    ContractionDescriptor {
        kind: ContractionKind::Birational,
        via_small_modification: via,
        base_or_target: target,
        fiber_or_center: center,
        singular_target: singular,
    }
}
