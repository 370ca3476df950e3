use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A point of the rank-two lattice `Z^2`, used both for divisor classes and
/// for linear forms on them.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Vec2 {
    pub x: i64,
    pub y: i64,
}

pub const fn v(x: i64, y: i64) -> Vec2 {
    Vec2 { x, y }
}

impl Vec2 {
    pub const ZERO: Vec2 = v(0, 0);

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    /// Determinant of the 2x2 matrix with columns `self`, `other`.
    /// Positive iff `other` lies counterclockwise of `self` (by less than a
    /// half turn).
    pub fn det(self, other: Vec2) -> i64 {
        self.x
            .checked_mul(other.y)
            .and_then(|a| a.checked_sub(self.y * other.x))
            .expect("determinant overflow")
    }

    pub fn dot(self, other: Vec2) -> i64 {
        self.x * other.x + self.y * other.y
    }

    /// The primitive lattice vector on the same ray. Zero stays zero.
    pub fn primitive(self) -> Vec2 {
        if self.is_zero() {
            return self;
        }
        let g = gcd(self.x, self.y);
        v(self.x / g, self.y / g)
    }

    pub fn is_primitive(self) -> bool {
        !self.is_zero() && gcd(self.x, self.y) == 1
    }

    /// True if `self` and `other` span the whole lattice, i.e. form a basis.
    pub fn is_basis_with(self, other: Vec2) -> bool {
        self.det(other).abs() == 1
    }

    /// Rotate a quarter turn counterclockwise.
    pub fn rot90(self) -> Vec2 {
        v(-self.y, self.x)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        v(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        v(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        v(-self.x, -self.y)
    }
}

impl Mul<Vec2> for i64 {
    type Output = Vec2;
    fn mul(self, o: Vec2) -> Vec2 {
        v(self * o.x, self * o.y)
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Nonnegative greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Gcd of a slice of `i128` values.
pub fn gcd_slice(values: &[i128]) -> i128 {
    values.iter().fold(0i128, |g, &x| gcd_i128(g, x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_orientation() {
        assert_eq!(v(1, 0).det(v(0, 1)), 1);
        assert_eq!(v(0, 1).det(v(1, 0)), -1);
        assert_eq!(v(2, 3).det(v(4, 6)), 0);
    }

    #[test]
    fn primitive_vectors() {
        assert_eq!(v(4, -6).primitive(), v(2, -3));
        assert_eq!(v(0, 5).primitive(), v(0, 1));
        assert_eq!(v(-3, 0).primitive(), v(-1, 0));
        assert!(v(2, 3).is_primitive());
        assert!(!v(2, 4).is_primitive());
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(0, -7), 7);
        assert_eq!(gcd(12, 18), 6);
    }
}
