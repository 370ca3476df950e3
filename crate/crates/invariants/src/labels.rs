//! Rendering of the label strings used for contraction bases, targets,
//! fibers and centers: (weighted) projective spaces and hypersurfaces in
//! them.

use lattice_geometry::vec2::gcd;

/// Label of the (weighted) projective space with the given positive weights:
/// `pt` for a single weight, `P{n}` when the weights reduce to all ones,
/// otherwise `P(a1,...,ak)` with weights sorted ascending.  An overall
/// common factor of the weights is divided out first.
pub(crate) fn projective_label(weights: &[i64]) -> String {
    assert!(!weights.is_empty() && weights.iter().all(|&a| a > 0));
    if weights.len() == 1 {
        return "pt".to_string();
    }
    // A common factor of all weights does not change the variety.
    let g = weights.iter().fold(0i64, |acc, &a| gcd(acc, a));
    let mut w: Vec<i64> = weights.iter().map(|&a| a / g).collect();
    if w.iter().all(|&a| a == 1) {
        return format!("P{}", w.len() - 1);
    }
    w.sort_unstable();
    let parts: Vec<String> = w.iter().map(|a| a.to_string()).collect();
    format!("P({})", parts.join(","))
}

/// Label of a degree-`d` hypersurface in the weighted projective space with
/// the given weights: `Y(d;n)` when all weights are 1 (`n` the dimension of
/// the ambient projective space), otherwise `Y(d;a1,...,ak)` sorted
/// ascending.  Weights are printed verbatim; common factors are not divided
/// out.
pub(crate) fn hypersurface_label(degree: i64, weights: &[i64]) -> String {
    assert!(degree > 0 && !weights.is_empty() && weights.iter().all(|&a| a > 0));
    if weights.iter().all(|&a| a == 1) {
        return format!("Y({};{})", degree, weights.len() as i64 - 1);
    }
    let mut w = weights.to_vec();
    w.sort_unstable();
    let parts: Vec<String> = w.iter().map(|a| a.to_string()).collect();
    format!("Y({};{})", degree, parts.join(","))
}

/// Label of the center of a birational contraction: a degree-`d`
/// hypersurface in the weighted projective space of the given weights, with
/// the common factor of degree and weights divided out and low-degree cases
/// replaced by the isomorphic classical space: a linear section is a smaller
/// projective space, a conic is `P1`, a quadric surface is `P1xP1`.
pub(crate) fn center_label(degree: i64, weights: &[i64]) -> String {
    assert!(degree > 0 && !weights.is_empty() && weights.iter().all(|&a| a > 0));
    let mut g = degree;
    for &a in weights {
        g = gcd(g, a);
    }
    let d = degree / g;
    let w: Vec<i64> = weights.iter().map(|&a| a / g).collect();
    let all_one = w.iter().all(|&a| a == 1);
    if all_one && d == 1 {
        return format!("P{}", w.len() as i64 - 2);
    }
    if all_one && d == 2 && w.len() == 3 {
        return "P1".to_string();
    }
    if all_one && d == 2 && w.len() == 4 {
        return "P1xP1".to_string();
    }
    hypersurface_label(d, &w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_labels() {
        assert_eq!(projective_label(&[1]), "pt");
        assert_eq!(projective_label(&[3]), "pt");
        assert_eq!(projective_label(&[1, 1]), "P1");
        assert_eq!(projective_label(&[1, 1, 1, 1]), "P3");
        assert_eq!(projective_label(&[2, 1, 1]), "P(1,1,2)");
        assert_eq!(projective_label(&[2, 2]), "P1");
        assert_eq!(projective_label(&[2, 4]), "P(1,2)");
    }

    #[test]
    fn hypersurface_labels() {
        assert_eq!(hypersurface_label(1, &[1, 1, 1]), "Y(1;2)");
        assert_eq!(hypersurface_label(6, &[3, 1, 1, 1, 1]), "Y(6;1,1,1,1,3)");
        assert_eq!(hypersurface_label(2, &[1; 6]), "Y(2;5)");
    }

    #[test]
    fn center_labels() {
        assert_eq!(center_label(2, &[1, 1, 1]), "P1");
        assert_eq!(center_label(2, &[1, 1, 1, 1]), "P1xP1");
        assert_eq!(center_label(1, &[1, 1, 1]), "P1");
        assert_eq!(center_label(6, &[2, 2, 2]), "Y(3;2)");
        assert_eq!(center_label(12, &[2, 4, 6]), "Y(6;1,2,3)");
        assert_eq!(center_label(4, &[1, 1, 2]), "Y(4;1,1,2)");
        assert_eq!(center_label(3, &[1, 1, 1, 1]), "Y(3;3)");
    }
}
