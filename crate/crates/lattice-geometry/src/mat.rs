use crate::vec2::{gcd_i128, Vec2};

/// Dense integer matrix with `i128` entries, row major.
///
/// All the normal form routines below are exact; entries stay well inside
/// `i128` for the small, mildly sized matrices this crate works with
/// (at most seven rows and a few hundred columns of small integers).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMat {
    pub m: usize,
    pub n: usize,
    a: Vec<i128>,
}

impl IntMat {
    pub fn zero(m: usize, n: usize) -> IntMat {
        IntMat {
            m,
            n,
            a: vec![0; m * n],
        }
    }

    pub fn identity(n: usize) -> IntMat {
        let mut r = IntMat::zero(n, n);
        for i in 0..n {
            r[(i, i)] = 1;
        }
        r
    }

    pub fn from_rows(rows: &[Vec<i128>]) -> IntMat {
        let m = rows.len();
        let n = if m == 0 { 0 } else { rows[0].len() };
        let mut r = IntMat::zero(m, n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                r[(i, j)] = x;
            }
        }
        r
    }

    pub fn from_cols(cols: &[Vec<i128>], m: usize) -> IntMat {
        let n = cols.len();
        let mut r = IntMat::zero(m, n);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), m, "ragged columns");
            for (i, &x) in col.iter().enumerate() {
                r[(i, j)] = x;
            }
        }
        r
    }

    pub fn col(&self, j: usize) -> Vec<i128> {
        (0..self.m).map(|i| self[(i, j)]).collect()
    }

    pub fn mul_vec(&self, x: &[i128]) -> Vec<i128> {
        assert_eq!(x.len(), self.n);
        (0..self.m)
            .map(|i| (0..self.n).map(|j| self[(i, j)] * x[j]).sum())
            .collect()
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.n {
            let (a, b) = (self[(i, k)], self[(j, k)]);
            self[(i, k)] = b;
            self[(j, k)] = a;
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.m {
            let (a, b) = (self[(k, i)], self[(k, j)]);
            self[(k, i)] = b;
            self[(k, j)] = a;
        }
    }

    /// row[i] += c * row[j]
    fn add_row(&mut self, i: usize, j: usize, c: i128) {
        for k in 0..self.n {
            let d = c * self[(j, k)];
            self[(i, k)] += d;
        }
    }

    /// col[i] += c * col[j]
    fn add_col(&mut self, i: usize, j: usize, c: i128) {
        for k in 0..self.m {
            let d = c * self[(k, j)];
            self[(k, i)] += d;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for k in 0..self.n {
            self[(i, k)] = -self[(i, k)];
        }
    }

    fn negate_col(&mut self, j: usize) {
        for k in 0..self.m {
            self[(k, j)] = -self[(k, j)];
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = i128;
    fn index(&self, (i, j): (usize, usize)) -> &i128 {
        &self.a[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i128 {
        &mut self.a[i * self.n + j]
    }
}

/// Smith normal form `u * a * v = d` with unimodular `u`, `v`.
///
/// `d` is diagonal with `divisors[0] | divisors[1] | ...`, all positive.
/// The inverses of the transforms are tracked as well, since several callers
/// need them (saturation bases, integer solving).
pub struct Snf {
    pub rank: usize,
    pub divisors: Vec<i128>,
    pub d: IntMat,
    pub u: IntMat,
    pub u_inv: IntMat,
    pub v: IntMat,
    pub v_inv: IntMat,
}

pub fn snf(input: &IntMat) -> Snf {
    let (m, n) = (input.m, input.n);
    let mut d = input.clone();
    let mut u = IntMat::identity(m);
    let mut u_inv = IntMat::identity(m);
    let mut vm = IntMat::identity(n);
    let mut v_inv = IntMat::identity(n);

    // Row op on d: also apply to u (left transform), inverse op to u_inv
    // (on columns). Column op on d: apply to vm (right transform, on
    // columns), inverse op to v_inv (on rows).
    //
    // A fresh minimal pivot is selected before every reduction sweep;
    // reducing against a stale small pivot lets entries grow by a factor of
    // (entry / pivot) per pass, which explodes quickly.
    let mut t = 0usize;
    'advance: while t < m.min(n) {
        loop {
            // Pivot of minimal absolute value in the remaining block.
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if d[(i, j)] != 0
                        && best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'advance };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            u_inv.swap_cols(t, pi);
            d.swap_cols(t, pj);
            vm.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);

            // One balanced reduction sweep of column and row t.
            for i in t + 1..m {
                let q = div_round(d[(i, t)], d[(t, t)]);
                if q != 0 {
                    d.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                    u_inv.add_col(t, i, q);
                }
            }
            for j in t + 1..n {
                let q = div_round(d[(t, j)], d[(t, t)]);
                if q != 0 {
                    d.add_col(j, t, -q);
                    vm.add_col(j, t, -q);
                    v_inv.add_row(t, j, q);
                }
            }
            let cleared = (t + 1..m).all(|i| d[(i, t)] == 0)
                && (t + 1..n).all(|j| d[(t, j)] == 0);
            if !cleared {
                // Leftover remainders are at most half the pivot, so the
                // next pivot selection strictly shrinks.
                continue;
            }

            // Enforce divisibility of the rest of the block by the pivot.
            let p = d[(t, t)];
            let mut offender = None;
            'scan: for i in t + 1..m {
                for j in t + 1..n {
                    if d[(i, j)] % p != 0 {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            if let Some(i) = offender {
                // Fold that row into row t and redo the clearing; the next
                // pivot divides strictly fewer times.
                d.add_row(t, i, 1);
                u.add_row(t, i, 1);
                u_inv.add_col(i, t, -1);
                continue;
            }
            if d[(t, t)] < 0 {
                d.negate_row(t);
                u.negate_row(t);
                u_inv.negate_col(t);
            }
            t += 1;
            break;
        }
    }

    let rank = t;
    let divisors = (0..rank).map(|i| d[(i, i)]).collect();
    Snf {
        rank,
        divisors,
        d,
        u,
        u_inv,
        v: vm,
        v_inv,
    }
}

/// Division rounding toward the nearest integer, which keeps remainders
/// small during the normal form reduction.
fn div_round(a: i128, b: i128) -> i128 {
    let q = a / b;
    let r = a - q * b;
    if 2 * r.abs() > b.abs() {
        q + if (r > 0) == (b > 0) { 1 } else { -1 }
    } else {
        q
    }
}

pub fn rank(a: &IntMat) -> usize {
    snf(a).rank
}

/// Basis of the integer kernel `{x : a x = 0}`.
/// The basis spans a saturated sublattice (the kernel always is one).
pub fn kernel_basis(a: &IntMat) -> Vec<Vec<i128>> {
    let s = snf(a);
    (s.rank..a.n).map(|j| s.v.col(j)).collect()
}

/// Basis of the saturation of the span of the given vectors inside `Z^ambient`,
/// i.e. of `(span ⊗ Q) ∩ Z^ambient`.
pub fn saturation_basis(gens: &[Vec<i128>], ambient: usize) -> Vec<Vec<i128>> {
    let a = IntMat::from_cols(gens, ambient);
    let s = snf(&a);
    (0..s.rank).map(|i| s.u_inv.col(i)).collect()
}

/// Solve `a x = t` over the integers. Returns `None` if there is no integral
/// solution (including the case where there is no rational one).
pub fn solve_integer(a: &IntMat, t: &[i128]) -> Option<Vec<i128>> {
    assert_eq!(t.len(), a.m);
    let s = snf(a);
    let ut = s.u.mul_vec(t);
    let mut y = vec![0i128; a.n];
    for i in 0..a.m {
        if i < s.rank {
            if ut[i] % s.divisors[i] != 0 {
                return None;
            }
            y[i] = ut[i] / s.divisors[i];
        } else if ut[i] != 0 {
            return None;
        }
    }
    Some(s.v.mul_vec(&y))
}

/// Do the given classes generate all of `Z^2` as a group?
/// Equivalent to the gcd of all 2x2 minors being 1.
pub fn generates_lattice(vs: &[Vec2]) -> bool {
    let mut g: i128 = 0;
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            g = gcd_i128(g, a.det(b) as i128);
            if g == 1 {
                return true;
            }
        }
    }
    false
}

/// Are the vectors part of a lattice basis of the ambient lattice?
/// True iff they are linearly independent and span a saturated sublattice.
pub fn part_of_basis(vectors: &[Vec<i128>], ambient: usize) -> bool {
    if vectors.is_empty() {
        return true;
    }
    if vectors.len() > ambient {
        return false;
    }
    let s = snf(&IntMat::from_cols(vectors, ambient));
    s.rank == vectors.len() && s.divisors.iter().all(|&d| d == 1)
}
