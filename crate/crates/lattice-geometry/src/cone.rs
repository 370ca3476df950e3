use crate::vec2::{v, Vec2};
use crate::GeometryError;

/// A convex polyhedral cone in the plane that contains no line.
///
/// `Wedge { cw, ccw }` is the cone spanned by two primitive rays with
/// `det(cw, ccw) > 0`, i.e. `ccw` lies counterclockwise of `cw` and the
/// opening angle is strictly less than half a turn.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Cone2 {
    Zero,
    Ray(Vec2),
    Wedge { cw: Vec2, ccw: Vec2 },
}

impl Cone2 {
    /// Cone generated by the given vectors.
    ///
    /// Fails with `NotPointed` when the generators span a half plane or the
    /// whole plane, since all cones this crate works with must be pointed.
    pub fn hull(gens: &[Vec2]) -> Result<Cone2, GeometryError> {
        let mut cone = Cone2::Zero;
        for &g in gens {
            if g.is_zero() {
                continue;
            }
            let p = g.primitive();
            cone = match cone {
                Cone2::Zero => Cone2::Ray(p),
                Cone2::Ray(r) => {
                    if r == p {
                        Cone2::Ray(r)
                    } else if r == -p {
                        return Err(GeometryError::NotPointed);
                    } else if r.det(p) > 0 {
                        Cone2::Wedge { cw: r, ccw: p }
                    } else {
                        Cone2::Wedge { cw: p, ccw: r }
                    }
                }
                Cone2::Wedge { cw, ccw } => {
                    if in_wedge(cw, ccw, p) {
                        Cone2::Wedge { cw, ccw }
                    } else if in_wedge(p, ccw, cw) && cw.det(p) != 0 {
                        // p extends the cone on the clockwise side
                        let c = Cone2::Wedge { cw: p, ccw };
                        check_pointed(c)?;
                        c
                    } else if in_wedge(cw, p, ccw) && p.det(cw) != 0 {
                        let c = Cone2::Wedge { cw, ccw: p };
                        check_pointed(c)?;
                        c
                    } else {
                        return Err(GeometryError::NotPointed);
                    }
                }
            };
        }
        Ok(cone)
    }

    pub fn dim(&self) -> usize {
        match self {
            Cone2::Zero => 0,
            Cone2::Ray(_) => 1,
            Cone2::Wedge { .. } => 2,
        }
    }

    pub fn contains(&self, p: Vec2) -> bool {
        match *self {
            Cone2::Zero => p.is_zero(),
            Cone2::Ray(r) => p.is_zero() || (r.det(p) == 0 && r.dot(p) > 0),
            Cone2::Wedge { cw, ccw } => cw.det(p) >= 0 && p.det(ccw) >= 0,
        }
    }

    /// Membership in the relative interior.
    pub fn relint_contains(&self, p: Vec2) -> bool {
        match *self {
            Cone2::Zero => p.is_zero(),
            Cone2::Ray(r) => r.det(p) == 0 && r.dot(p) > 0,
            Cone2::Wedge { cw, ccw } => cw.det(p) > 0 && p.det(ccw) > 0,
        }
    }

    pub fn is_subset_of(&self, other: &Cone2) -> bool {
        match *self {
            Cone2::Zero => true,
            Cone2::Ray(r) => other.contains(r),
            Cone2::Wedge { cw, ccw } => other.contains(cw) && other.contains(ccw),
        }
    }

    /// Is the relative interior of `self` contained in that of `other`?
    pub fn relint_subset_of(&self, other: &Cone2) -> bool {
        match *self {
            Cone2::Zero => other.relint_contains(Vec2::ZERO),
            Cone2::Ray(r) => other.relint_contains(r),
            Cone2::Wedge { cw, ccw } => match *other {
                Cone2::Wedge { .. } => {
                    other.relint_contains(cw + ccw)
                        && other.contains(cw)
                        && other.contains(ccw)
                }
                _ => false,
            },
        }
    }

    pub fn intersect(&self, other: &Cone2) -> Cone2 {
        match (*self, *other) {
            (Cone2::Zero, _) | (_, Cone2::Zero) => Cone2::Zero,
            (Cone2::Ray(r), _) => {
                if other.contains(r) {
                    Cone2::Ray(r)
                } else {
                    Cone2::Zero
                }
            }
            (_, Cone2::Ray(r)) => {
                if self.contains(r) {
                    Cone2::Ray(r)
                } else {
                    Cone2::Zero
                }
            }
            (Cone2::Wedge { cw: a1, ccw: a2 }, Cone2::Wedge { cw: b1, ccw: b2 }) => {
                // The intersection of two planar wedges is spanned by the most
                // counterclockwise of the two cw edges and the most clockwise of
                // the two ccw edges, when those still open up a cone.
                let lo = if in_wedge(a1, a2, b1) { b1 } else { a1 };
                let hi = if in_wedge(b1, b2, a2) { a2 } else { b2 };
                let lo_ok = self.contains(lo) && other.contains(lo);
                let hi_ok = self.contains(hi) && other.contains(hi);
                match (lo_ok, hi_ok) {
                    (true, true) => {
                        if lo == hi {
                            Cone2::Ray(lo)
                        } else if lo.det(hi) > 0 {
                            Cone2::Wedge { cw: lo, ccw: hi }
                        } else {
                            Cone2::Zero
                        }
                    }
                    (true, false) => Cone2::Ray(lo),
                    (false, true) => Cone2::Ray(hi),
                    (false, false) => Cone2::Zero,
                }
            }
        }
    }

    /// The extreme rays, clockwise-most first.
    pub fn rays(&self) -> Vec<Vec2> {
        match *self {
            Cone2::Zero => vec![],
            Cone2::Ray(r) => vec![r],
            Cone2::Wedge { cw, ccw } => vec![cw, ccw],
        }
    }

    /// A linear functional that is strictly positive on the relative interior
    /// and (for a wedge) on every nonzero point of the cone.
    pub fn positive_functional(&self) -> Vec2 {
        match *self {
            Cone2::Zero => v(0, 0),
            Cone2::Ray(r) => r,
            Cone2::Wedge { cw, ccw } => {
                // Inner normals of the two edges; their sum is positive on
                // every nonzero point of the wedge.
                let a = v(ccw.y, -ccw.x); // a . cw = det(cw, ccw) > 0, a . ccw = 0
                let b = v(-cw.y, cw.x); // b . ccw = det(cw, ccw) > 0, b . cw = 0
                a + b
            }
        }
    }
}

fn in_wedge(cw: Vec2, ccw: Vec2, p: Vec2) -> bool {
    cw.det(p) >= 0 && p.det(ccw) >= 0
}

fn check_pointed(c: Cone2) -> Result<(), GeometryError> {
    if let Cone2::Wedge { cw, ccw } = c {
        if cw.det(ccw) <= 0 {
            return Err(GeometryError::NotPointed);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hull_basic() {
        let c = Cone2::hull(&[v(2, 0), v(1, 1), v(0, 3)]).unwrap();
        assert_eq!(
            c,
            Cone2::Wedge {
                cw: v(1, 0),
                ccw: v(0, 1)
            }
        );
        assert!(c.contains(v(5, 3)));
        assert!(c.relint_contains(v(5, 3)));
        assert!(c.contains(v(1, 0)));
        assert!(!c.relint_contains(v(1, 0)));
        assert!(!c.contains(v(-1, 2)));
    }

    #[test]
    fn hull_not_pointed() {
        assert!(Cone2::hull(&[v(1, 0), v(-1, 0)]).is_err());
        assert!(Cone2::hull(&[v(1, 0), v(0, 1), v(-1, -1)]).is_err());
        assert!(Cone2::hull(&[v(1, 0), v(-1, 1), v(0, -1)]).is_err());
    }

    #[test]
    fn intersect_wedges() {
        let a = Cone2::hull(&[v(1, 0), v(0, 1)]).unwrap();
        let b = Cone2::hull(&[v(1, 1), v(-1, 2)]).unwrap();
        let c = a.intersect(&b);
        assert_eq!(
            c,
            Cone2::Wedge {
                cw: v(1, 1),
                ccw: v(0, 1)
            }
        );
        let d = Cone2::hull(&[v(-1, 0), v(0, -1)]).unwrap();
        assert_eq!(a.intersect(&d), Cone2::Zero);
        let e = Cone2::hull(&[v(1, 0), v(1, 1)]).unwrap();
        let f = Cone2::hull(&[v(1, 1), v(0, 1)]).unwrap();
        assert_eq!(e.intersect(&f), Cone2::Ray(v(1, 1)));
    }

    #[test]
    fn positive_functional_positive() {
        for c in [
            Cone2::hull(&[v(1, 0), v(0, 1)]).unwrap(),
            Cone2::hull(&[v(3, -1), v(2, 5)]).unwrap(),
            Cone2::hull(&[v(-1, 2), v(-3, 1)]).unwrap(),
        ] {
            let k = c.positive_functional();
            for r in c.rays() {
                assert!(k.dot(r) > 0, "{k} not positive on {r}");
            }
        }
    }
}
