//! Canonical representative under admissible coordinate changes.
//!
//! Two specifying data describe the same graded presentation when they
//! differ by a unimodular change of the grading lattice combined with a
//! permutation of columns that restores counter-clockwise order. The
//! canonical form is the lexicographically least encoding over the orbit,
//! where integers compare as 0 < 1 < −1 < 2 < −2 < …

use lattice_geometry::cone::Cone2;
use lattice_geometry::vec2::{v, Vec2};

use crate::data::SpecifyingData;

/// Balanced order key: 0 < 1 < −1 < 2 < −2 < …
fn balanced_key(z: i64) -> u64 {
    if z > 0 {
        2 * z as u64 - 1
    } else {
        2 * (-(z as i128)) as u64
    }
}

fn encode(columns: &[Vec2; 7], mu: Vec2) -> [u64; 16] {
    let mut out = [0u64; 16];
    for (j, w) in columns.iter().enumerate() {
        out[2 * j] = balanced_key(w.x);
        out[2 * j + 1] = balanced_key(w.y);
    }
    out[14] = balanced_key(mu.x);
    out[15] = balanced_key(mu.y);
    out
}

/// Unimodular map sending the primitive vector `p` to (1,0), with
/// determinant one.
fn basis_to_first_axis(p: Vec2) -> [[i64; 2]; 2] {
    // Rows (a,b) and (-q,s) with a*p.x + b*p.y = 1 via the extended
    // Euclidean algorithm; the second row kills p.
    let (a, b) = bezout(p.x, p.y);
    [[a, b], [-p.y, p.x]]
}

/// Coefficients (a, b) with a*x + b*y = gcd(x, y) = 1 for primitive (x, y).
fn bezout(x: i64, y: i64) -> (i64, i64) {
    let (mut r0, mut r1) = (x, y);
    let (mut a0, mut a1) = (1i64, 0i64);
    let (mut b0, mut b1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (a0, a1) = (a1, a0 - q * a1);
        (b0, b1) = (b1, b0 - q * b1);
    }
    if r0 < 0 {
        (a0, b0) = (-a0, -b0);
    }
    (a0, b0)
}

fn apply_matrix(u: [[i64; 2]; 2], w: Vec2) -> Vec2 {
    v(
        u[0][0] * w.x + u[0][1] * w.y,
        u[1][0] * w.x + u[1][1] * w.y,
    )
}

/// Applies an admissible coordinate change: an integer 2×2 matrix `u` with
/// determinant ±1, optionally composed with the orientation flip
/// (x, y) ↦ (x, −y), followed by the column permutation `perm`
/// (column `j` of the result is the transformed column `perm[j]`).
pub fn apply_change(
    d: &SpecifyingData,
    u: [[i64; 2]; 2],
    flip: bool,
    perm: &[usize; 7],
) -> SpecifyingData {
    let det = u[0][0] * u[1][1] - u[0][1] * u[1][0];
    assert!(det == 1 || det == -1, "change of basis must be unimodular");
    let cols = d.columns();
    let transform = |w: Vec2| {
        let w = apply_matrix(u, w);
        if flip {
            v(w.x, -w.y)
        } else {
            w
        }
    };
    let mut new_cols = [Vec2::ZERO; 7];
    for (j, c) in new_cols.iter_mut().enumerate() {
        *c = transform(cols[perm[j]]);
    }
    SpecifyingData::from_columns(&new_cols, transform(d.mu()))
}

/// The canonical representative of the orbit of `d` under admissible
/// coordinate changes. Requires pointed columns; column order in the input
/// is irrelevant.
pub fn canonical_form(d: &SpecifyingData) -> SpecifyingData {
    let mut best: Option<([u64; 16], SpecifyingData)> = None;
    for flip in [false, true] {
        let mut cols = d.columns();
        let mut mu = d.mu();
        if flip {
            for c in cols.iter_mut() {
                *c = v(c.x, -c.y);
            }
            mu = v(mu.x, -mu.y);
        }

        let eff = Cone2::hull(&cols).expect("canonical form needs a pointed datum");
        let cw = match eff {
            Cone2::Zero => panic!("canonical form needs nonzero columns"),
            Cone2::Ray(r) => r,
            Cone2::Wedge { cw, .. } => cw,
        };
        let rotate = basis_to_first_axis(cw);
        for c in cols.iter_mut() {
            *c = apply_matrix(rotate, *c);
        }
        mu = apply_matrix(rotate, mu);
        debug_assert!(cols.iter().all(|c| c.y > 0 || (c.y == 0 && c.x > 0)));

        // Counter-clockwise order; on a common ray, shorter columns first.
        // Shears preserve both parts of this order, so one sort suffices.
        cols.sort_by(|a, b| {
            a.det(*b)
                .cmp(&0)
                .reverse()
                .then_with(|| (a.x.abs() + a.y.abs()).cmp(&(b.x.abs() + b.y.abs())))
        });

        // Scan shears (x, y) ↦ (x + m·y, y); the encoding grows without
        // bound in |m| as soon as anything has y ≠ 0, so the minimum is
        // interior for a wide enough window.
        let shear_sensitive = cols.iter().any(|c| c.y != 0) || mu.y != 0;
        let mut half_width = 40i64;
        let (m_best, enc_best) = loop {
            if !shear_sensitive {
                break (0, encode(&cols, mu));
            }
            let mut inner: Option<(i64, [u64; 16])> = None;
            for m in -half_width..=half_width {
                let mut sheared = cols;
                for c in sheared.iter_mut() {
                    *c = v(c.x + m * c.y, c.y);
                }
                let enc = encode(&sheared, v(mu.x + m * mu.y, mu.y));
                if inner.as_ref().map_or(true, |(_, e)| enc < *e) {
                    inner = Some((m, enc));
                }
            }
            let (m, enc) = inner.expect("nonempty scan window");
            if m.abs() < half_width {
                break (m, enc);
            }
            half_width *= 2;
            assert!(
                half_width <= 40 << 12,
                "canonical shear scan failed to stabilize"
            );
        };

        let mut sheared = cols;
        for c in sheared.iter_mut() {
            *c = v(c.x + m_best * c.y, c.y);
        }
        let candidate =
            SpecifyingData::from_columns(&sheared, v(mu.x + m_best * mu.y, mu.y));
        if best.as_ref().map_or(true, |(e, _)| enc_best < *e) {
            best = Some((enc_best, candidate));
        }
    }
    best.expect("both orientations scanned").1
}
