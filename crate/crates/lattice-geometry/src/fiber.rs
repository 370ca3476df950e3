use crate::cone::Cone2;
use crate::vec2::Vec2;
use crate::GeometryError;

/// Enumeration of the fibers of a pointed `Z^2`-grading.
///
/// For a list of nonzero column degrees `w_1, ..., w_r` that generate a
/// pointed cone, the fiber over `w` is the finite set
/// `{ nu in Z_{>=0}^r : sum_i nu_i w_i = w }`, i.e. the exponent vectors of
/// the monomials of degree `w`.
pub struct FiberEnumerator {
    columns: Vec<Vec2>,
    /// Functional strictly positive on every column.
    kappa: Vec2,
    /// `suffix[i]` is the cone spanned by `columns[i..]`.
    suffix: Vec<Cone2>,
}

impl FiberEnumerator {
    pub fn new(columns: &[Vec2]) -> Result<FiberEnumerator, GeometryError> {
        if columns.iter().any(|c| c.is_zero()) {
            return Err(GeometryError::NotPointed);
        }
        let total = Cone2::hull(columns)?;
        let kappa = total.positive_functional();
        debug_assert!(columns.iter().all(|&c| kappa.dot(c) > 0));
        let mut suffix = vec![Cone2::Zero; columns.len() + 1];
        for i in (0..columns.len()).rev() {
            suffix[i] = Cone2::hull(&columns[i..]).expect("subset of pointed set");
        }
        Ok(FiberEnumerator {
            columns: columns.to_vec(),
            kappa,
            suffix,
        })
    }

    pub fn columns(&self) -> &[Vec2] {
        &self.columns
    }

    /// All exponent vectors of degree `w`, in lexicographic order.
    pub fn points(&self, w: Vec2) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut current = vec![0i64; self.columns.len()];
        self.walk(0, w, &mut current, &mut |nu| {
            out.push(nu.to_vec());
            true
        });
        out
    }

    pub fn count(&self, w: Vec2) -> usize {
        let mut n = 0usize;
        let mut current = vec![0i64; self.columns.len()];
        self.walk(0, w, &mut current, &mut |_| {
            n += 1;
            true
        });
        n
    }

    /// Is `w` a nonnegative integer combination of the columns?
    pub fn monoid_contains(&self, w: Vec2) -> bool {
        let mut found = false;
        let mut current = vec![0i64; self.columns.len()];
        self.walk(0, w, &mut current, &mut |_| {
            found = true;
            false
        });
        found
    }

    /// Depth first over exponents; the visitor returns `false` to stop early.
    fn walk(
        &self,
        i: usize,
        remaining: Vec2,
        current: &mut [i64],
        visit: &mut dyn FnMut(&[i64]) -> bool,
    ) -> bool {
        if i == self.columns.len() {
            if remaining.is_zero() {
                return visit(current);
            }
            return true;
        }
        if !self.suffix[i].contains(remaining) {
            return true;
        }
        let c = self.columns[i];
        let denom = self.kappa.dot(c);
        let max_t = self.kappa.dot(remaining) / denom;
        for t in 0..=max_t {
            current[i] = t;
            if !self.walk(i + 1, remaining - t * c, current, visit) {
                return false;
            }
        }
        current[i] = 0;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vec2::v;

    #[test]
    fn product_of_projective_spaces() {
        // Degrees of P3 x P2: four columns (1,0) and three columns (0,1).
        let cols = vec![
            v(1, 0),
            v(1, 0),
            v(1, 0),
            v(1, 0),
            v(0, 1),
            v(0, 1),
            v(0, 1),
        ];
        let f = FiberEnumerator::new(&cols).unwrap();
        // Monomials of degree (a, b) number C(a+3,3) * C(b+2,2).
        assert_eq!(f.count(v(1, 1)), 4 * 3);
        assert_eq!(f.count(v(3, 2)), 20 * 6);
        assert_eq!(f.count(v(0, 0)), 1);
        assert_eq!(f.count(v(-1, 0)), 0);
        assert!(f.monoid_contains(v(3, 2)));
        assert!(!f.monoid_contains(v(-1, 2)));
        let pts = f.points(v(1, 1));
        assert_eq!(pts.len(), 12);
        for p in &pts {
            assert_eq!(p[0] + p[1] + p[2] + p[3], 1);
            assert_eq!(p[4] + p[5] + p[6], 1);
        }
    }

    #[test]
    fn negative_and_mixed_degrees() {
        let cols = vec![v(1, 0), v(1, 1), v(-1, 1)];
        let f = FiberEnumerator::new(&cols).unwrap();
        // (0, 2) = (1,1) + (-1,1) = 2(1,0) + 2(-1,1).
        assert_eq!(f.points(v(0, 2)), vec![vec![0, 1, 1], vec![2, 0, 2]]);
        // a(1,0) + b(1,1) + c(-1,1) = (1,3) forces b + c = 3, a = 4 - 2b,
        // so b in {0, 1, 2}: three solutions.
        assert_eq!(f.count(v(1, 3)), 3);
    }
}
