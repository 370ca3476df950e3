//! The bounded scan over normalized degree matrices and relation degrees.
//!
//! Normal form of the scan: columns are grouped on counter-clockwise ordered
//! primitive rays, the clockwise-most ray is (1, 0) and all further rays lie
//! in the upper half plane.  Every pointed degree matrix is unimodularly
//! equivalent to one of this shape, so scanning it loses no orbit whose
//! normalized entries fit the bounds.
//!
//! The scan runs in stages of increasing cost.  Ray subsets and column
//! multiplicities come first; at that level the moving cone is already
//! known, so relation degrees whose anticanonical class falls outside its
//! interior are discarded by two half-plane comparisons against precomputed
//! windows.  Only the rare survivors pay for relation-monomial enumeration,
//! the chamber structure, the structural smoothness tests, and finally the
//! full certification pipeline.

use grading_core::{
    canonical_form, orbit_cone, FaceIndexSet, SpecifyingData, ValidData,
};
use lattice_geometry::cone::Cone2;
use lattice_geometry::fiber::FiberEnumerator;
use lattice_geometry::vec2::{gcd, v, Vec2};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use verification::{presentation_generically_prime, verify_candidate, Status};

/// Size limits of the search space: the largest absolute degree-matrix entry
/// and the componentwise bound on the relation degree, both after
/// normalization.  The defaults are large enough to contain every family of
/// the classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    pub max_abs_entry: i64,
    pub max_mu: (i64, i64),
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_abs_entry: 6,
            max_mu: (12, 12),
        }
    }
}

/// Switches for the structural pruning filters.  Both filters are necessary
/// conditions for a surviving candidate, so disabling them changes the
/// running time but never the result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Skip data whose effective cone violates boundary regularity: when the
    /// moving cone fills the effective cone and the relation degree is
    /// interior, local factoriality forces the effective cone to be regular
    /// with primitive boundary generators.
    pub prune_boundary_regularity: bool,
    /// Skip data where some pair of generator degrees spans the selected
    /// chamber without generating the grading lattice, unless exactly one
    /// relation monomial is supported on the pair.
    pub prune_pair_generation: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            prune_boundary_regularity: true,
            prune_pair_generation: true,
        }
    }
}

/// Stage counters of one scan, for performance diagnosis.
#[doc(hidden)]
#[derive(Clone, Copy, Debug, Default)]
pub struct ScanStats {
    pub subsets: u64,
    pub compositions: u64,
    pub variants: u64,
    pub ample_degrees: u64,
    pub after_boundary_prune: u64,
    pub fibers_built: u64,
    pub spread_relations: u64,
    pub without_fixed_component: u64,
    pub validated: u64,
    pub with_chamber: u64,
    pub after_pair_prune: u64,
    pub structurally_smooth: u64,
    pub generically_prime: u64,
    pub certified: u64,
}

impl ScanStats {
    fn merge(mut self, other: ScanStats) -> ScanStats {
        self.subsets += other.subsets;
        self.compositions += other.compositions;
        self.variants += other.variants;
        self.ample_degrees += other.ample_degrees;
        self.after_boundary_prune += other.after_boundary_prune;
        self.fibers_built += other.fibers_built;
        self.spread_relations += other.spread_relations;
        self.without_fixed_component += other.without_fixed_component;
        self.validated += other.validated;
        self.with_chamber += other.with_chamber;
        self.after_pair_prune += other.after_pair_prune;
        self.structurally_smooth += other.structurally_smooth;
        self.generically_prime += other.generically_prime;
        self.certified += other.certified;
        self
    }
}

/// All canonical specifying data within the bounds that pass the full
/// certification pipeline, sorted and without duplicates.
pub fn enumerate_candidates(bounds: &SearchBounds) -> Vec<SpecifyingData> {
    enumerate_candidates_with(bounds, &SearchOptions::default())
}

/// As [`enumerate_candidates`] with explicit pruning switches.
pub fn enumerate_candidates_with(
    bounds: &SearchBounds,
    options: &SearchOptions,
) -> Vec<SpecifyingData> {
    scan_with_statistics(bounds, options).0
}

/// As [`enumerate_candidates_with`], also reporting the stage counters.
#[doc(hidden)]
pub fn scan_with_statistics(
    bounds: &SearchBounds,
    options: &SearchOptions,
) -> (Vec<SpecifyingData>, ScanStats) {
    let pool = ray_pool(bounds.max_abs_entry);
    if pool.len() < 2 {
        return (Vec::new(), ScanStats::default());
    }
    let shared = Shared::new(bounds, options, pool);
    // Work-stealing over the choice of the second ray; each task walks the
    // subtree of ray subsets extending it.
    let (mut found, stats) = (1..shared.pool.len())
        .into_par_iter()
        .map(|second| {
            let mut worker = Worker::new(&shared);
            worker.scan_second(second);
            (worker.found, worker.stats)
        })
        .reduce(
            || (Vec::new(), ScanStats::default()),
            |(mut fa, sa), (fb, sb)| {
                fa.extend(fb);
                (fa, sa.merge(sb))
            },
        );
    found.sort_by_key(|d| (d.degree_matrix, d.relation_degree));
    found.dedup();
    (found, stats)
}

/// Primitive ray directions of the normal form, counter-clockwise from
/// (1, 0): the base ray plus every primitive upper-half-plane direction
/// within the entry bound.
fn ray_pool(max_entry: i64) -> Vec<Vec2> {
    if max_entry < 1 {
        return Vec::new();
    }
    let mut pool = vec![v(1, 0)];
    for y in 1..=max_entry {
        for x in -max_entry..=max_entry {
            if gcd(x, y) == 1 {
                pool.push(v(x, y));
            }
        }
    }
    pool.sort_by(|a, b| a.det(*b).cmp(&0).reverse());
    pool
}

/// Largest factor keeping a multiple of `ray` within the entry bound.
fn max_factor(ray: Vec2, max_entry: i64) -> i64 {
    let mut t = i64::MAX;
    if ray.x != 0 {
        t = t.min(max_entry / ray.x.abs());
    }
    if ray.y != 0 {
        t = t.min(max_entry / ray.y.abs());
    }
    t
}

/// Exact almost-freeness: after omitting any one column the remaining six
/// must generate the full lattice, which for a 2 x 6 integer matrix means
/// the greatest common divisor of its 2 x 2 minors is one.
fn almost_free(cols: &[Vec2; 7]) -> bool {
    let mut dets = [[0i64; 7]; 7];
    for i in 0..7 {
        for j in (i + 1)..7 {
            dets[i][j] = cols[i].det(cols[j]);
        }
    }
    'omit: for omit in 0..7 {
        let mut g = 0i64;
        for i in 0..7 {
            if i == omit {
                continue;
            }
            for j in (i + 1)..7 {
                if j == omit {
                    continue;
                }
                g = gcd(g, dets[i][j]);
                if g == 1 {
                    continue 'omit;
                }
            }
        }
        return false;
    }
    true
}

/// Per-mask counts of relation monomials supported inside each coordinate
/// subset.
fn support_counts(points: &[Vec<i64>]) -> [u32; 128] {
    let mut counts = [0u32; 128];
    for p in points {
        let mut mask = 0usize;
        for (i, &e) in p.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        counts[mask] += 1;
    }
    for bit in 0..7 {
        for mask in 0..128usize {
            if mask & (1 << bit) != 0 {
                counts[mask] += counts[mask ^ (1 << bit)];
            }
        }
    }
    counts
}

/// The wall rays of the linearization fan, mirrored from the fan
/// construction but fed with precomputed support counts: boundary rays of
/// the effective cone plus the rays of the orbit cones of all faces whose
/// orbit meets the generic hypersurface, sorted counter-clockwise.
fn fan_walls(vd: &ValidData, counts: &[u32; 128], orbit_cones: &[Cone2; 128]) -> Vec<Vec2> {
    let mut rays: Vec<Vec2> = Vec::with_capacity(16);
    match *vd.effective_cone() {
        Cone2::Zero => unreachable!("validated columns are nonzero"),
        Cone2::Ray(r) => rays.push(r),
        Cone2::Wedge { cw, ccw } => {
            rays.push(cw);
            rays.push(ccw);
        }
    }
    for mask in 0..128usize {
        if counts[mask] == 1 {
            continue;
        }
        match orbit_cones[mask] {
            Cone2::Zero => {}
            Cone2::Ray(r) => rays.push(r),
            Cone2::Wedge { cw, ccw } => {
                rays.push(cw);
                rays.push(ccw);
            }
        }
    }
    rays.sort_by(|a, b| a.det(*b).cmp(&0).reverse());
    rays.dedup();
    rays
}

/// Structural smoothness: the ample chamber and every chamber inside the
/// moving cone must be locally factorial — degrees of each distinguished
/// face generate the grading lattice — and pass the degree-level
/// quasismoothness test.  These are exactly the rejection conditions of the
/// certification pipeline, evaluated without polytope machinery.
fn structurally_smooth(
    vd: &ValidData,
    counts: &[u32; 128],
    orbit_cones: &[Cone2; 128],
    walls: &[Vec2],
    lambda: &Cone2,
) -> bool {
    let mov = *vd.moving_cone();
    // Face-level verdicts do not depend on the chamber; compute lazily.
    let mut face_ok: [Option<bool>; 128] = [None; 128];
    for pair in walls.windows(2) {
        let eta = Cone2::Wedge {
            cw: pair[0],
            ccw: pair[1],
        };
        if eta != *lambda && !eta.is_subset_of(&mov) {
            continue;
        }
        for mask in 0..128usize {
            if counts[mask] == 1 || !eta.relint_subset_of(&orbit_cones[mask]) {
                continue;
            }
            let ok = *face_ok[mask].get_or_insert_with(|| face_smooth(vd, mask));
            if !ok {
                return false;
            }
        }
    }
    true
}

/// One distinguished face: its degrees must generate the grading lattice,
/// and the relation degree — possibly after subtracting one generator
/// degree — must lie in the monoid generated by the face degrees.
fn face_smooth(vd: &ValidData, mask: usize) -> bool {
    let cols: Vec<Vec2> = (0..7)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| vd.columns()[i])
        .collect();
    let mut g = 0i64;
    'outer: for i in 0..cols.len() {
        for j in (i + 1)..cols.len() {
            g = gcd(g, cols[i].det(cols[j]));
            if g == 1 {
                break 'outer;
            }
        }
    }
    if g != 1 {
        return false;
    }
    let monoid = FiberEnumerator::new(&cols).expect("subsets of pointed columns stay pointed");
    let mu = vd.mu();
    monoid.monoid_contains(mu)
        || vd
            .columns()
            .iter()
            .any(|w| monoid.monoid_contains(v(mu.x - w.x, mu.y - w.y)))
}

/// Necessary pair condition on the selected chamber: whenever the chamber is
/// contained in the cone of two generator degrees, either the two degrees
/// generate the lattice, or exactly one relation monomial lives on the pair.
fn pair_generation_ok(cols: &[Vec2; 7], lambda: &Cone2, counts: &[u32; 128]) -> bool {
    for i in 0..7 {
        for j in (i + 1)..7 {
            let det = cols[i].det(cols[j]);
            if det == 0 {
                continue;
            }
            let pair = if det > 0 {
                Cone2::Wedge {
                    cw: cols[i],
                    ccw: cols[j],
                }
            } else {
                Cone2::Wedge {
                    cw: cols[j],
                    ccw: cols[i],
                }
            };
            if lambda.is_subset_of(&pair) && det.abs() != 1 && counts[(1 << i) | (1 << j)] != 1 {
                return false;
            }
        }
    }
    true
}

/// Immutable data shared by all workers.
struct Shared<'a> {
    options: &'a SearchOptions,
    pool: Vec<Vec2>,
    factor_cap: Vec<i64>,
    /// `sorted_window[last][cw]`: relation degrees of the window inside the
    /// effective cone spanned by the base ray and `pool[last]`, paired with
    /// and sorted by their half-plane evaluation `det(pool[cw], mu)`.  The
    /// anticanonical class of a variant with column total `t` lies strictly
    /// inside a moving cone with clockwise ray `pool[cw]` exactly on the
    /// prefix with evaluation below `det(pool[cw], t)`.
    sorted_window: Vec<Vec<Vec<(i64, Vec2)>>>,
}

impl<'a> Shared<'a> {
    fn new(bounds: &'a SearchBounds, options: &'a SearchOptions, pool: Vec<Vec2>) -> Shared<'a> {
        let factor_cap: Vec<i64> = pool
            .iter()
            .map(|&r| max_factor(r, bounds.max_abs_entry))
            .collect();
        let window_cap_x = bounds.max_mu.0.max(0);
        let window_cap_y = bounds.max_mu.1.max(0);
        let sorted_window: Vec<Vec<Vec<(i64, Vec2)>>> = pool
            .iter()
            .enumerate()
            .map(|(last, &last_ray)| {
                let mut window = Vec::new();
                for b in 0..=window_cap_y {
                    for a in -window_cap_x..=window_cap_x {
                        let mu = v(a, b);
                        if !mu.is_zero() && last_ray.det(mu) <= 0 {
                            window.push(mu);
                        }
                    }
                }
                pool[..=last]
                    .iter()
                    .map(|&cw_ray| {
                        let mut list: Vec<(i64, Vec2)> =
                            window.iter().map(|&mu| (cw_ray.det(mu), mu)).collect();
                        list.sort_by_key(|&(da, _)| da);
                        list
                    })
                    .collect()
            })
            .collect();
        Shared {
            options,
            pool,
            factor_cap,
            sorted_window,
        }
    }
}

struct Worker<'a> {
    shared: &'a Shared<'a>,
    chosen: Vec<usize>,
    found: Vec<SpecifyingData>,
    stats: ScanStats,
}

/// Composition-level context for the factor recursion.
struct VariantCtx<'a> {
    /// Window entries sorted by their evaluation against the clockwise
    /// moving-cone ray.
    list: &'a [(i64, Vec2)],
    mov_cw: Vec2,
    mov_ccw: Vec2,
    mov_is_eff: bool,
    eff_regular: bool,
    last_ray: usize,
}

impl<'a> Worker<'a> {
    fn new(shared: &'a Shared<'a>) -> Worker<'a> {
        Worker {
            shared,
            chosen: Vec::with_capacity(7),
            found: Vec::new(),
            stats: ScanStats::default(),
        }
    }

    /// All ray subsets whose two clockwise-most members are the base ray and
    /// `second`.
    fn scan_second(&mut self, second: usize) {
        self.chosen.clear();
        self.chosen.push(0);
        self.chosen.push(second);
        self.extend_subset(second + 1);
    }

    fn extend_subset(&mut self, from: usize) {
        self.process_subset();
        if self.chosen.len() == 7 {
            return;
        }
        for next in from..self.shared.pool.len() {
            self.chosen.push(next);
            self.extend_subset(next + 1);
            self.chosen.pop();
        }
    }

    fn process_subset(&mut self) {
        self.stats.subsets += 1;
        let m = self.chosen.len();
        let mut pidx = [0usize; 7];
        let mut rays = [Vec2::ZERO; 7];
        let mut caps = [0i64; 7];
        for (slot, &i) in self.chosen.iter().enumerate() {
            pidx[slot] = i;
            rays[slot] = self.shared.pool[i];
            caps[slot] = self.shared.factor_cap[i];
        }
        let eff_regular = rays[0].det(rays[m - 1]) == 1;
        let mut mult = [0i64; 7];
        self.compositions(m, &rays, &pidx, &caps, &mut mult, 0, 7, eff_regular);
    }

    #[allow(clippy::too_many_arguments)]
    fn compositions(
        &mut self,
        m: usize,
        rays: &[Vec2; 7],
        pidx: &[usize; 7],
        caps: &[i64; 7],
        mult: &mut [i64; 7],
        slot: usize,
        remaining: i64,
        eff_regular: bool,
    ) {
        if slot == m - 1 {
            mult[slot] = remaining;
            self.process_composition(m, rays, pidx, caps, mult, eff_regular);
            return;
        }
        let reserve = (m - slot - 1) as i64;
        for k in 1..=(remaining - reserve) {
            mult[slot] = k;
            self.compositions(m, rays, pidx, caps, mult, slot + 1, remaining - k, eff_regular);
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn process_composition(
        &mut self,
        m: usize,
        rays: &[Vec2; 7],
        pidx: &[usize; 7],
        caps: &[i64; 7],
        mult: &[i64; 7],
        eff_regular: bool,
    ) {
        self.stats.compositions += 1;
        // Moving cone at ray level: omitting a column only shrinks the hull
        // when the clockwise- or counter-clockwise-most ray carries a single
        // column.
        let a = if mult[0] >= 2 { 0 } else { 1 };
        let b = if mult[m - 1] >= 2 { m - 1 } else { m - 2 };
        if a >= b || rays[a].det(rays[b]) <= 0 {
            return;
        }
        let list = &self.shared.sorted_window[pidx[m - 1]][pidx[a]];
        if list.is_empty() {
            return;
        }
        let ctx = VariantCtx {
            list,
            mov_cw: rays[a],
            mov_ccw: rays[b],
            mov_is_eff: a == 0 && b == m - 1,
            eff_regular,
            last_ray: m - 1,
        };
        let mut ray_of = [0usize; 7];
        let mut col = 0usize;
        for (r, &k) in mult.iter().enumerate().take(m) {
            for _ in 0..k {
                ray_of[col] = r;
                col += 1;
            }
        }
        let mut cols = [Vec2::ZERO; 7];
        self.assign_factors(
            rays,
            caps,
            &ctx,
            &mut cols,
            &ray_of,
            0,
            1,
            Vec2::ZERO,
            true,
        );
    }

    #[allow(clippy::too_many_arguments)]
    fn assign_factors(
        &mut self,
        rays: &[Vec2],
        caps: &[i64],
        ctx: &VariantCtx<'_>,
        cols: &mut [Vec2; 7],
        ray_of: &[usize; 7],
        col: usize,
        min_factor: i64,
        total: Vec2,
        boundary_primitive: bool,
    ) {
        if col == 7 {
            self.process_variant(ctx, cols, total, boundary_primitive);
            return;
        }
        let ray_idx = ray_of[col];
        let start = if col > 0 && ray_of[col - 1] == ray_idx {
            min_factor
        } else {
            1
        };
        let ray = rays[ray_idx];
        let on_boundary = ray_idx == 0 || ray_idx == ctx.last_ray;
        for f in start..=caps[ray_idx] {
            cols[col] = f * ray;
            let bp = boundary_primitive && (!on_boundary || f == 1);
            self.assign_factors(
                rays,
                caps,
                ctx,
                cols,
                ray_of,
                col + 1,
                f,
                total + cols[col],
                bp,
            );
        }
    }

    fn process_variant(
        &mut self,
        ctx: &VariantCtx<'_>,
        cols: &[Vec2; 7],
        total: Vec2,
        boundary_primitive: bool,
    ) {
        self.stats.variants += 1;
        let cap_a = ctx.mov_cw.det(total);
        let cap_b = total.det(ctx.mov_ccw);
        if cap_a <= ctx.list[0].0 {
            return;
        }
        let options = self.shared.options;
        let prefix = ctx.list.partition_point(|&(da, _)| da < cap_a);
        let mut free: Option<bool> = None;
        let mut fiber: Option<FiberEnumerator> = None;
        for &(da, mu) in &ctx.list[..prefix] {
            // The anticanonical class total - mu lies strictly inside the
            // moving cone exactly when both half-plane evaluations pass.
            let db = mu.det(ctx.mov_ccw);
            if db >= cap_b {
                continue;
            }
            self.stats.ample_degrees += 1;
            if cols.contains(&mu) {
                continue;
            }
            if options.prune_boundary_regularity
                && ctx.mov_is_eff
                && da > 0
                && db > 0
                && !(ctx.eff_regular && boundary_primitive)
            {
                // Interior relation degree with full moving cone: local
                // factoriality needs a regular effective cone with primitive
                // boundary generators.
                continue;
            }
            self.stats.after_boundary_prune += 1;
            let free = *free.get_or_insert_with(|| almost_free(cols));
            if !free {
                return;
            }
            if fiber.is_none() {
                self.stats.fibers_built += 1;
            }
            let fiber = fiber.get_or_insert_with(|| {
                FiberEnumerator::new(cols).expect("scan columns are pointed")
            });
            let points = fiber.points(mu);
            if points.len() < 2 {
                continue;
            }
            self.stats.spread_relations += 1;
            let counts = support_counts(&points);
            let full = 0x7fusize;
            if (0..7).any(|j| counts[full ^ (1 << j)] == 0) {
                // A variable divides every relation monomial.
                continue;
            }
            self.stats.without_fixed_component += 1;
            let data = SpecifyingData::from_columns(cols, mu);
            let Ok(vd) = data.validate() else {
                continue;
            };
            self.stats.validated += 1;
            let mut orbit_cones = [Cone2::Zero; 128];
            for (mask, slot) in orbit_cones.iter_mut().enumerate() {
                if counts[mask] != 1 {
                    *slot = orbit_cone(&vd, FaceIndexSet::from_mask(mask as u8));
                }
            }
            let walls = fan_walls(&vd, &counts, &orbit_cones);
            let minus_k = total - mu;
            let Some(lambda) = walls
                .windows(2)
                .map(|p| Cone2::Wedge {
                    cw: p[0],
                    ccw: p[1],
                })
                .find(|c| c.relint_contains(minus_k))
            else {
                continue;
            };
            self.stats.with_chamber += 1;
            if options.prune_pair_generation && !pair_generation_ok(cols, &lambda, &counts) {
                continue;
            }
            self.stats.after_pair_prune += 1;
            if !structurally_smooth(&vd, &counts, &orbit_cones, &walls, &lambda) {
                continue;
            }
            self.stats.structurally_smooth += 1;
            if !presentation_generically_prime(&vd) {
                continue;
            }
            self.stats.generically_prime += 1;
            let Ok(report) = verify_candidate(&data) else {
                continue;
            };
            if report.overall == Status::Fail {
                continue;
            }
            if report.checks.get("small-modifications") != Some(&Status::Pass) {
                continue;
            }
            self.stats.certified += 1;
            self.found.push(canonical_form(&data));
        }
    }
}
