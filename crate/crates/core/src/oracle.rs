//! Brute-force checks against the distance definition of a cell.
//!
//! Nothing here solves an LP: membership is decided by comparing squared
//! distances, so these routines can falsify the polyhedral machinery.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{membership_gap, BoundingBox, HPolyhedron, Point, Site, SiteSystem};

/// Samples closer than this (normalized slack) to any constraint are not
/// compared.
pub const BOUNDARY_SKIP_TOL: f64 = 1e-7;
/// Draws attempted by [`random_system`] before giving up.
pub const MAX_DRAWS: usize = 1000;

/// A jittered lattice of `resolution` points per axis over a box.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleGrid {
    pub bbox: BoundingBox,
    pub resolution: usize,
    pub jitter_seed: u64,
}

impl SampleGrid {
    pub fn new(bbox: BoundingBox, resolution: usize, jitter_seed: u64) -> Result<Self> {
        if resolution < 2 {
            return Err(Error::PreconditionViolated(
                "grid resolution must be at least 2".into(),
            ));
        }
        Ok(SampleGrid {
            bbox,
            resolution,
            jitter_seed,
        })
    }

    pub fn dim(&self) -> usize {
        self.bbox.dim()
    }

    pub fn len(&self) -> usize {
        self.resolution.pow(self.dim() as u32)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All sample points. Each lattice point moves by up to a quarter of the
    /// spacing per axis, drawn from a generator seeded with `jitter_seed`.
    /// Points on the box boundary are clamped back into the box.
    pub fn points(&self) -> Vec<Vec<f64>> {
        let n = self.dim();
        let (lo, hi) = (self.bbox.min(), self.bbox.max());
        let steps: Vec<f64> = (0..n)
            .map(|i| (hi[i] - lo[i]) / (self.resolution - 1) as f64)
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(self.jitter_seed);
        let mut out = Vec::with_capacity(self.len());
        let mut idx = vec![0usize; n];
        for _ in 0..self.len() {
            let p = (0..n)
                .map(|i| {
                    let j: f64 = rng.gen_range(-0.25..=0.25);
                    let v = lo[i] + (idx[i] as f64 + j) * steps[i];
                    v.clamp(lo[i], hi[i])
                })
                .collect();
            out.push(p);
            for slot in idx.iter_mut() {
                *slot += 1;
                if *slot < self.resolution {
                    break;
                }
                *slot = 0;
            }
        }
        out
    }
}

fn check_dims(sys: &SiteSystem, grid: &SampleGrid) -> Result<()> {
    if sys.dim() != grid.dim() {
        return Err(Error::DimensionMismatch {
            expected: sys.dim(),
            found: grid.dim(),
        });
    }
    Ok(())
}

/// Grid points that lie in the cell by the distance definition.
pub fn sample_cell(sys: &SiteSystem, grid: &SampleGrid) -> Result<Vec<Point>> {
    check_dims(sys, grid)?;
    grid.points()
        .into_par_iter()
        .filter(|x| membership_gap(x, sys) <= 0.0)
        .map(Point::new)
        .collect()
}

/// Outcome of comparing two membership tests over a grid.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AgreementReport {
    pub samples: usize,
    pub disagreements: usize,
    pub skipped_boundary: usize,
}

impl AgreementReport {
    pub fn agrees(&self) -> bool {
        self.disagreements == 0
    }

    pub fn skipped_fraction(&self) -> f64 {
        if self.samples == 0 {
            0.0
        } else {
            self.skipped_boundary as f64 / self.samples as f64
        }
    }
}

fn near_boundary(hrep: &HPolyhedron, x: &[f64]) -> bool {
    hrep.halfspaces()
        .iter()
        .any(|h| h.normalized_slack(x).abs() < BOUNDARY_SKIP_TOL)
}

/// Compares membership in `sys` by distances with satisfaction of `hrep`.
pub fn agree(sys: &SiteSystem, hrep: &HPolyhedron, grid: &SampleGrid) -> Result<AgreementReport> {
    check_dims(sys, grid)?;
    if hrep.dim() != sys.dim() {
        return Err(Error::DimensionMismatch {
            expected: sys.dim(),
            found: hrep.dim(),
        });
    }
    agree_with(
        grid,
        |x| hrep.contains_point(x, 0.0),
        |x| membership_gap(x, sys) <= 0.0,
        |x| near_boundary(hrep, x),
    )
}

/// Compares two arbitrary membership tests over `grid`, skipping samples for
/// which `boundary` holds.
pub fn agree_with<F, G, B>(
    grid: &SampleGrid,
    first: F,
    second: G,
    boundary: B,
) -> Result<AgreementReport>
where
    F: Fn(&[f64]) -> bool + Sync,
    G: Fn(&[f64]) -> bool + Sync,
    B: Fn(&[f64]) -> bool + Sync,
{
    let points = grid.points();
    let samples = points.len();
    let (disagreements, skipped_boundary) = points
        .par_iter()
        .map(|x| {
            if boundary(x) {
                (0, 1)
            } else if first(x) != second(x) {
                (1, 0)
            } else {
                (0, 0)
            }
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(AgreementReport {
        samples,
        disagreements,
        skipped_boundary,
    })
}

/// Seeded random system with sites uniform in `[-spread, spread]^n`,
/// labels `p0, p1, ...`, and `S` the first `s_count` of them.
pub fn random_system(
    seed: u64,
    n: usize,
    t_count: usize,
    s_count: usize,
    spread: f64,
) -> Result<SiteSystem> {
    if s_count == 0 || s_count >= t_count {
        return Err(Error::PreconditionViolated(format!(
            "need 1 <= |S| < |T|, got |S| = {s_count}, |T| = {t_count}"
        )));
    }
    if n == 0 || !(spread.is_finite() && spread > 0.0) {
        return Err(Error::PreconditionViolated(
            "dimension and spread must be positive".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let min_sq = 1e-6 * spread * spread;
    for _ in 0..MAX_DRAWS {
        let pts: Vec<Point> = (0..t_count)
            .map(|_| Point::new((0..n).map(|_| rng.gen_range(-spread..=spread)).collect()))
            .collect::<Result<_>>()?;
        let separated =
            (0..t_count).all(|i| (i + 1..t_count).all(|j| pts[i].dist_sq(&pts[j]) >= min_sq));
        if !separated {
            continue;
        }
        let sites = pts
            .into_iter()
            .enumerate()
            .map(|(i, p)| Site::new(format!("p{i}"), p))
            .collect();
        let labels: Vec<String> = (0..s_count).map(|i| format!("p{i}")).collect();
        return SiteSystem::new(sites, &labels);
    }
    Err(Error::DegenerateDraw)
}

/// Seeded random planar targets, each moved by a random similarity.
pub mod targets {
    use std::f64::consts::PI;

    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use crate::cell_ops::cyclic_determinant;
    use crate::constructions::TargetShape;
    use crate::geom2::{self, P2};

    /// Quadrilaterals with a normalized in-circle determinant below this
    /// are not drawn as non-cyclic targets.
    pub const MIN_CYCLIC_GAP: f64 = 1e-3;

    struct Similarity {
        angle: f64,
        scale: f64,
        shift: P2,
    }

    impl Similarity {
        fn draw(rng: &mut ChaCha8Rng) -> Self {
            Similarity {
                angle: rng.gen_range(0.0..2.0 * PI),
                scale: rng.gen_range(0.5..3.0),
                shift: [rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)],
            }
        }

        fn point(&self, p: P2) -> P2 {
            geom2::add(
                geom2::scale(geom2::rotate(p, self.angle), self.scale),
                self.shift,
            )
        }

        fn dir(&self, v: P2) -> P2 {
            geom2::unit(geom2::rotate(v, self.angle))
        }
    }

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn min_side_angle(dirs: &[P2]) -> f64 {
        let mut best = f64::INFINITY;
        for i in 0..dirs.len() {
            for j in i + 1..dirs.len() {
                let a = geom2::angle_between(dirs[i], dirs[j]);
                best = best.min(a.min(PI - a));
            }
        }
        best
    }

    /// A convex quadrilateral whose vertices are clearly not concyclic.
    pub fn quadrilateral(seed: u64) -> [P2; 4] {
        let mut r = rng(seed);
        loop {
            let pts: Vec<P2> = (0..4)
                .map(|_| [r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0)])
                .collect();
            let hull = geom2::convex_hull(&pts);
            if hull.len() != 4 {
                continue;
            }
            let q = [hull[0], hull[1], hull[2], hull[3]];
            let sharp = (0..4).all(|i| {
                let (p, a, b) = (q[i], q[(i + 1) % 4], q[(i + 3) % 4]);
                let ang = geom2::angle_between(geom2::sub(a, p), geom2::sub(b, p));
                ang > 0.15 && ang < PI - 0.15 && geom2::dist(p, a) > 0.1
            });
            if !sharp || !cyclic_determinant(&q).is_some_and(|d| d.abs() > MIN_CYCLIC_GAP) {
                continue;
            }
            let t = Similarity::draw(&mut r);
            return q.map(|p| t.point(p));
        }
    }

    /// A nondegenerate triangle.
    pub fn triangle(seed: u64) -> [P2; 3] {
        let mut r = rng(seed);
        loop {
            let q: [P2; 3] =
                std::array::from_fn(|_| [r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0)]);
            if geom2::orient(q[0], q[1], q[2]).abs() > 0.1 {
                let t = Similarity::draw(&mut r);
                return q.map(|p| t.point(p));
            }
        }
    }

    /// Four points on a circle, in cyclic order.
    pub fn cyclic_quadrilateral(seed: u64) -> [P2; 4] {
        let mut r = rng(seed);
        loop {
            let mut angles: Vec<f64> = (0..4).map(|_| r.gen_range(0.0..2.0 * PI)).collect();
            angles.sort_by(f64::total_cmp);
            let gaps_ok = (0..4).all(|i| {
                let next = if i == 3 {
                    angles[0] + 2.0 * PI
                } else {
                    angles[i + 1]
                };
                next - angles[i] > 0.2
            });
            if !gaps_ok {
                continue;
            }
            let t = Similarity::draw(&mut r);
            let q: [P2; 4] = std::array::from_fn(|i| geom2::from_angle(angles[i]));
            return q.map(|p| t.point(p));
        }
    }

    /// Cone at a hidden apex with sides `u1`, `u2`, cut by a chain from the
    /// `u1` side to the `u2` side. Returns apex, the two cut points, and the
    /// side directions.
    fn cone_cut(r: &mut ChaCha8Rng) -> (P2, P2, P2, P2, P2) {
        let opening = r.gen_range(0.25..PI - 0.25);
        let u1 = geom2::from_angle(0.0);
        let u2 = geom2::from_angle(opening);
        let c = geom2::scale(u1, r.gen_range(0.5..2.0));
        let d = geom2::scale(u2, r.gen_range(0.5..2.0));
        ([0.0, 0.0], c, d, u1, u2)
    }

    /// Two vertices with diverging rays.
    pub fn unbounded_three(seed: u64) -> TargetShape {
        let mut r = rng(seed);
        let (_, c, d, u1, u2) = cone_cut(&mut r);
        let t = Similarity::draw(&mut r);
        TargetShape::UnboundedThreeSide {
            vertices: [t.point(c), t.point(d)],
            rays: [t.dir(u1), t.dir(u2)],
        }
    }

    /// Three vertices between two parallel rays.
    pub fn unbounded_quad_parallel(seed: u64) -> TargetShape {
        let mut r = rng(seed);
        let width: f64 = r.gen_range(0.5..3.0);
        let b = [r.gen_range(-1.0..1.0), width];
        let c = [r.gen_range(-1.0..1.0), 0.0];
        let h = width * r.gen_range(0.15..0.85);
        let on_bc = c[0] + (b[0] - c[0]) * h / width;
        let a = [on_bc - r.gen_range(0.2..2.0), h];
        let t = Similarity::draw(&mut r);
        let ray = t.dir([1.0, 0.0]);
        TargetShape::UnboundedQuadParallel {
            vertices: [t.point(b), t.point(a), t.point(c)],
            rays: [ray, ray],
        }
    }

    /// Three vertices with diverging rays, no two sides parallel.
    pub fn unbounded_quad_general(seed: u64) -> TargetShape {
        let mut r = rng(seed);
        loop {
            let (apex, c, d, u1, u2) = cone_cut(&mut r);
            let w: [f64; 3] = std::array::from_fn(|_| r.gen_range(0.1..1.0));
            let total: f64 = w.iter().sum();
            let a = geom2::scale(
                geom2::add(
                    geom2::add(geom2::scale(apex, w[0]), geom2::scale(c, w[1])),
                    geom2::scale(d, w[2]),
                ),
                1.0 / total,
            );
            let sides = [u1, geom2::sub(a, c), geom2::sub(d, a), u2];
            if min_side_angle(&sides) < 0.05 {
                continue;
            }
            let t = Similarity::draw(&mut r);
            return TargetShape::UnboundedQuadGeneral {
                vertices: [t.point(c), t.point(a), t.point(d)],
                rays: [t.dir(u1), t.dir(u2)],
            };
        }
    }
}
