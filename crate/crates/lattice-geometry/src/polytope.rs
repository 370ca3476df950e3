use crate::dd::dual_description;
use crate::mat::{kernel_basis, rank, saturation_basis, snf, solve_integer, IntMat};
use std::collections::{HashMap, HashSet};

/// Facet inequality `normal . x >= rhs` in the rebased coordinates.
#[derive(Clone, Debug)]
pub struct Facet {
    pub normal: Vec<i128>,
    pub rhs: i128,
    /// Indices of the stored points lying on the facet.
    pub points_on: Vec<usize>,
}

/// A face given by the set of stored points lying on it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Face {
    pub points: Vec<usize>,
    pub dim: usize,
}

/// Convex hull of finitely many integer points, rebased into the lattice
/// spanned by the points inside their affine hull. All invariants computed
/// from the rebased coordinates (faces, Ehrhart data) agree with those of
/// the original embedded polytope, because the basis change is induced by a
/// saturated sublattice of the ambient lattice.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    orig: Vec<Vec<i128>>,
    dim: usize,
    pts: Vec<Vec<i128>>,
    facets: Vec<Facet>,
    vertices: Vec<usize>,
}

fn sub(a: &[i128], b: &[i128]) -> Vec<i128> {
    a.iter().zip(b).map(|(&x, &y)| x - y).collect()
}

fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

impl LatticePolytope {
    pub fn new(points: &[Vec<i128>]) -> LatticePolytope {
        assert!(!points.is_empty(), "polytope needs at least one point");
        let mut orig: Vec<Vec<i128>> = Vec::new();
        for p in points {
            if !orig.contains(p) {
                orig.push(p.clone());
            }
        }
        let ambient = orig[0].len();
        let base = orig[0].clone();
        let diffs: Vec<Vec<i128>> = orig.iter().map(|p| sub(p, &base)).collect();
        let basis = saturation_basis(&diffs, ambient);
        let dim = basis.len();
        let bmat = IntMat::from_cols(&basis, ambient);
        let pts: Vec<Vec<i128>> = diffs
            .iter()
            .map(|d| solve_integer(&bmat, d).expect("differences lie in the saturated span"))
            .collect();

        let (facets, vertices) = if dim == 0 {
            (Vec::new(), vec![0])
        } else {
            let cons: Vec<Vec<i128>> = pts
                .iter()
                .map(|p| {
                    let mut v = p.clone();
                    v.push(1);
                    v
                })
                .collect();
            let dd = dual_description(dim + 1, &cons);
            assert!(
                dd.lineality.is_empty(),
                "points affinely span the rebased space"
            );
            let mut facets: Vec<Facet> = Vec::new();
            for ray in dd.rays {
                let normal = ray[..dim].to_vec();
                let rhs = -ray[dim];
                let points_on: Vec<usize> = pts
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| dot(&normal, p) == rhs)
                    .map(|(i, _)| i)
                    .collect();
                debug_assert!(pts.iter().all(|p| dot(&normal, p) >= rhs));
                facets.push(Facet {
                    normal,
                    rhs,
                    points_on,
                });
            }
            let vertices: Vec<usize> = (0..pts.len())
                .filter(|&i| {
                    let normals: Vec<Vec<i128>> = facets
                        .iter()
                        .filter(|f| f.points_on.contains(&i))
                        .map(|f| f.normal.clone())
                        .collect();
                    normals.len() >= dim && rank(&IntMat::from_cols(&normals, dim)) == dim
                })
                .collect();
            (facets, vertices)
        };

        LatticePolytope {
            orig,
            dim,
            pts,
            facets,
            vertices,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_points(&self) -> usize {
        self.pts.len()
    }

    /// The stored points in the original ambient coordinates.
    pub fn original_points(&self) -> &[Vec<i128>] {
        &self.orig
    }

    /// The stored points in rebased (full-dimensional) coordinates.
    pub fn rebased_points(&self) -> &[Vec<i128>] {
        &self.pts
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Indices of the stored points that are vertices of the hull.
    pub fn vertex_indices(&self) -> &[usize] {
        &self.vertices
    }

    /// All proper faces (dimension `0` to `dim - 1`), each as the set of
    /// stored-point indices lying on it. Every proper face of a polytope is
    /// an intersection of the facets containing it, so closing the facet
    /// point sets under intersection produces exactly the face list.
    pub fn proper_faces(&self) -> Vec<Face> {
        if self.dim == 0 {
            return Vec::new();
        }
        let mut sets: HashSet<Vec<usize>> = HashSet::new();
        for f in &self.facets {
            let mut s = f.points_on.clone();
            s.sort_unstable();
            if !s.is_empty() {
                sets.insert(s);
            }
        }
        loop {
            let snapshot: Vec<Vec<usize>> = sets.iter().cloned().collect();
            let before = sets.len();
            for i in 0..snapshot.len() {
                for j in i + 1..snapshot.len() {
                    let a: HashSet<usize> = snapshot[i].iter().copied().collect();
                    let mut inter: Vec<usize> = snapshot[j]
                        .iter()
                        .copied()
                        .filter(|x| a.contains(x))
                        .collect();
                    inter.sort_unstable();
                    if !inter.is_empty() {
                        sets.insert(inter);
                    }
                }
            }
            if sets.len() == before {
                break;
            }
        }
        let mut faces: Vec<Face> = sets
            .into_iter()
            .map(|points| {
                let d = self.affine_dim(&points);
                Face { points, dim: d }
            })
            .collect();
        faces.sort_by(|a, b| (a.dim, &a.points).cmp(&(b.dim, &b.points)));
        faces
    }

    fn affine_dim(&self, indices: &[usize]) -> usize {
        let p0 = &self.pts[indices[0]];
        let diffs: Vec<Vec<i128>> = indices[1..]
            .iter()
            .map(|&i| sub(&self.pts[i], p0))
            .collect();
        if diffs.is_empty() {
            0
        } else {
            rank(&IntMat::from_cols(&diffs, self.dim))
        }
    }

    /// The polytope spanned by a subset of the stored points (typically a
    /// face), rebased into its own lattice. Indices refer to stored points.
    pub fn subpolytope(&self, indices: &[usize]) -> LatticePolytope {
        let pts: Vec<Vec<i128>> = indices.iter().map(|&i| self.orig[i].clone()).collect();
        LatticePolytope::new(&pts)
    }

    /// Pulling triangulation: every simplex is a list of `dim + 1` vertex
    /// indices. Only hull vertices appear as simplex corners.
    pub fn triangulation(&self) -> Vec<Vec<usize>> {
        let faces = self.proper_faces();
        let top = Face {
            points: (0..self.pts.len()).collect(),
            dim: self.dim,
        };
        let mut memo: HashMap<Vec<usize>, Vec<Vec<usize>>> = HashMap::new();
        self.pull(&top, &faces, &mut memo)
    }

    fn pull(
        &self,
        face: &Face,
        all_faces: &[Face],
        memo: &mut HashMap<Vec<usize>, Vec<Vec<usize>>>,
    ) -> Vec<Vec<usize>> {
        if let Some(t) = memo.get(&face.points) {
            return t.clone();
        }
        let result = if face.dim == 0 {
            vec![vec![face.points[0]]]
        } else {
            // Lexicographically smallest vertex of the face, by rebased
            // coordinates, so the choice is deterministic.
            let v0 = *face
                .points
                .iter()
                .filter(|i| self.vertices.contains(i))
                .min_by_key(|&&i| self.pts[i].clone())
                .expect("every positive-dimensional face has a vertex");
            let mut simplices = Vec::new();
            for g in all_faces {
                if g.dim + 1 == face.dim
                    && g.points.iter().all(|p| face.points.contains(p))
                    && g.points.len() < face.points.len()
                    && !g.points.contains(&v0)
                {
                    for s in self.pull(g, all_faces, memo) {
                        let mut s2 = s.clone();
                        s2.push(v0);
                        simplices.push(s2);
                    }
                }
            }
            simplices
        };
        memo.insert(face.points.clone(), result.clone());
        result
    }

    /// Ehrhart data of the polytope, via a half-open decomposition of the
    /// pulling triangulation.
    pub fn ehrhart(&self) -> Ehrhart {
        let n = self.dim;
        let simplices = self.triangulation();
        assert!(!simplices.is_empty());
        let mut delta = vec![0i128; n + 2];

        // Reference point: barycenter of the first simplex, stored as an
        // integer vector over the common denominator `n + 1`. Ties against
        // facet hyperplanes are broken as if the point were perturbed by
        // (eps, eps^2, ...), which makes it generic for the decomposition.
        let wden = (n + 1) as i128;
        let mut wnum = vec![0i128; n];
        for &vi in &simplices[0] {
            for (k, &x) in self.pts[vi].iter().enumerate() {
                wnum[k] += x;
            }
        }

        for (si, simplex) in simplices.iter().enumerate() {
            let mut excluded = vec![false; simplex.len()];
            if n > 0 {
                for f in 0..simplex.len() {
                    // Hyperplane through the vertices other than position f.
                    let others: Vec<usize> = simplex
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != f)
                        .map(|(_, &v)| v)
                        .collect();
                    let p0 = &self.pts[others[0]];
                    let rows: Vec<Vec<i128>> = others[1..]
                        .iter()
                        .map(|&v| sub(&self.pts[v], p0))
                        .collect();
                    // Width must be explicit: for dim 1 there are no rows.
                    let mut a_mat = IntMat::zero(rows.len(), n);
                    for (ri, row) in rows.iter().enumerate() {
                        for (ci, &x) in row.iter().enumerate() {
                            a_mat[(ri, ci)] = x;
                        }
                    }
                    let kb = kernel_basis(&a_mat);
                    assert_eq!(kb.len(), 1, "simplex facet spans a hyperplane");
                    let mut a = kb.into_iter().next().unwrap();
                    let mut b = dot(&a, p0);
                    // Orient so the simplex lies on the >= side.
                    let apex = dot(&a, &self.pts[simplex[f]]);
                    assert_ne!(apex, b, "simplex is full-dimensional");
                    if apex < b {
                        for x in &mut a {
                            *x = -*x;
                        }
                        b = -b;
                    }
                    let side = dot(&a, &wnum) - b * wden;
                    let open = if side != 0 {
                        side < 0
                    } else {
                        // Perturbation direction: first nonzero normal entry.
                        let lead = *a.iter().find(|&&x| x != 0).unwrap();
                        lead < 0
                    };
                    excluded[f] = open;
                }
                if si == 0 {
                    assert!(
                        excluded.iter().all(|&e| !e),
                        "reference point is interior to the first simplex"
                    );
                }
            }
            self.simplex_delta(simplex, &excluded, &mut delta);
        }

        Ehrhart { dim: n, delta }
    }

    /// Accumulate the h*-contributions of one (half-open) simplex by
    /// enumerating lattice classes of its fundamental parallelepiped.
    fn simplex_delta(&self, simplex: &[usize], excluded: &[bool], delta: &mut [i128]) {
        let n = self.dim;
        // Lift vertices to height one.
        let cols: Vec<Vec<i128>> = simplex
            .iter()
            .map(|&vi| {
                let mut c = self.pts[vi].clone();
                c.push(1);
                c
            })
            .collect();
        let u = IntMat::from_cols(&cols, n + 1);
        let s = snf(&u);
        assert_eq!(s.rank, n + 1, "simplex vertices are affinely independent");
        let nvol: i128 = s.divisors.iter().product();

        // Lattice classes modulo the parallelepiped: z = u_inv_of_p * y with
        // y ranging over the box of elementary divisors, where p u q = d.
        // Barycentric coordinates of z are lambda = q * (y_i / d_i), kept
        // exact over the common denominator nvol.
        let mut y = vec![0i128; n + 1];
        loop {
            let z = s.u_inv.mul_vec(&y);
            // lambda numerators over denominator nvol
            let mut height = z[n];
            for i in 0..=n {
                let mut num = 0i128;
                for (j, &yj) in y.iter().enumerate() {
                    num += s.v[(i, j)] * yj * (nvol / s.divisors[j]);
                }
                // Normalize into [0,1) for closed facets, (0,1] for open.
                let r = if excluded[i] {
                    (num - 1).rem_euclid(nvol) + 1
                } else {
                    num.rem_euclid(nvol)
                };
                debug_assert_eq!((r - num) % nvol, 0);
                height += (r - num) / nvol;
            }
            let h = usize::try_from(height).expect("heights lie in 0..=n+1");
            delta[h] += 1;

            // Next mixed-radix value of y.
            let mut carry = true;
            for i in 0..=n {
                if carry {
                    y[i] += 1;
                    if y[i] == s.divisors[i] {
                        y[i] = 0;
                    } else {
                        carry = false;
                    }
                }
            }
            if carry {
                break;
            }
        }
    }
}

/// The h*-vector of a lattice polytope: `count(j)` is the number of lattice
/// points in the `j`-th dilate, a polynomial in `j`; `interior(j)` counts
/// relative-interior points via reciprocity.
pub struct Ehrhart {
    dim: usize,
    delta: Vec<i128>,
}

impl Ehrhart {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn delta(&self) -> &[i128] {
        &self.delta
    }

    /// Normalized volume, i.e. `dim! *` euclidean volume in the rebased
    /// lattice; equals the sum of the h*-entries.
    pub fn normalized_volume(&self) -> i128 {
        self.delta.iter().sum()
    }

    /// Number of lattice points of the `j`-th dilate, as the Ehrhart
    /// polynomial evaluated at `j` (any integer, including negatives).
    pub fn count(&self, j: i64) -> i128 {
        let n = self.dim;
        let mut total = 0i128;
        for (h, &dh) in self.delta.iter().enumerate() {
            if dh != 0 {
                total += dh * binom_poly(i128::from(j) - h as i128 + n as i128, n);
            }
        }
        total
    }

    /// Relative-interior lattice points of the `j`-th dilate, by
    /// Ehrhart reciprocity.
    pub fn interior(&self, j: i64) -> i128 {
        let sign = if self.dim % 2 == 0 { 1 } else { -1 };
        sign * self.count(-j)
    }
}

/// The polynomial `binomial(t, n) = t (t-1) ... (t-n+1) / n!`, defined for
/// every integer `t`.
pub fn binom_poly(t: i128, n: usize) -> i128 {
    let mut num = 1i128;
    let mut den = 1i128;
    for i in 0..n {
        num *= t - i as i128;
        den *= (i + 1) as i128;
    }
    num / den
}
