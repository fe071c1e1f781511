use std::f64::consts::PI;

use crate::cell_ops::{classify2d, is_cyclic_p2, remove_redundant, ShapeTag};
use crate::error::{Error, Result};
use crate::geom2::{self, P2};
use crate::model::{cell_hrep, HPolyhedron, Point, SiteSystem};
use crate::predicates::contains;

use super::target::{chain_hrep, polygon_hrep};
use super::{same_vertex_set, ImpossibilityKind, ImpossibilityReason};

/// Vertex agreement required between target and realized cell.
pub const ROUND_TRIP_TOL: f64 = 1e-7;
/// Slack required on angle conditions when choosing a labeling, in radians.
pub const ANGLE_MARGIN: f64 = 1e-6;
/// First offset of the moving site from its vertex, relative to the side length.
pub const INITIAL_EPSILON: f64 = 0.1;
pub const MAX_EPSILON_RETRIES: usize = 8;

fn sites(s: [P2; 2], t: [P2; 2]) -> Result<SiteSystem> {
    let p = |q: P2| Point::new(q.to_vec());
    SiteSystem::from_points(&[p(s[0])?, p(s[1])?], &[p(t[0])?, p(t[1])?])
}

/// Checks that `sys` realizes `target`: matching tag, mutual containment of
/// the irredundant cell and the target, and matching vertices.
fn verify(sys: &SiteSystem, target: &HPolyhedron, tag: ShapeTag, vertices: &[P2]) -> Result<()> {
    let shape = classify2d(sys)?;
    if shape.tag() != tag {
        return Err(Error::ConstructionFailed(format!(
            "realized {} instead of {tag}",
            shape.tag()
        )));
    }
    let reduced = remove_redundant(&cell_hrep(sys))?;
    if !contains(target, &reduced)? || !contains(&reduced, target)? {
        return Err(Error::ConstructionFailed("cell differs from target".into()));
    }
    let scale = 1.0 + vertices.iter().map(|v| geom2::norm(*v)).fold(0.0, f64::max);
    if !same_vertex_set(&shape.vertices(), vertices, ROUND_TRIP_TOL * scale) {
        return Err(Error::ConstructionFailed(
            "vertices differ from target".into(),
        ));
    }
    Ok(())
}

fn first_success<I>(candidates: I, last_error: &str) -> Result<SiteSystem>
where
    I: IntoIterator<Item = Result<SiteSystem>>,
{
    let mut err = Error::ConstructionFailed(last_error.into());
    for c in candidates {
        match c {
            Ok(sys) => return Ok(sys),
            Err(e) => err = e,
        }
    }
    Err(err)
}

/// Angle at `p` between the directions to `q` and `r`.
fn angle_at(p: P2, q: P2, r: P2) -> f64 {
    geom2::angle_between(geom2::sub(q, p), geom2::sub(r, p))
}

/// The four-site kite on the corners `a`, `c`, `b`: `t1` is where the line
/// through `a` at `angle_a` from `ab` meets the line through `b` at
/// `angle_b` from `ba`, both turned toward `c`; `t2` mirrors `t1` in `ab`
/// and the `S` sites mirror `t1` in `ca` and `cb`.
fn kite(a: P2, c: P2, b: P2, angle_a: f64, angle_b: f64) -> Result<SiteSystem> {
    let side = geom2::orient(a, b, c).signum();
    let da = geom2::rotate(geom2::unit(geom2::sub(b, a)), side * angle_a);
    let db = geom2::rotate(geom2::unit(geom2::sub(a, b)), -side * angle_b);
    let t1 = geom2::line_intersection(a, da, b, db)
        .ok_or_else(|| Error::ConstructionFailed("construction lines are parallel".into()))?;
    sites(
        [geom2::reflect(t1, c, a), geom2::reflect(t1, c, b)],
        [t1, geom2::reflect(t1, a, b)],
    )
}

fn strictly_convex(v: &[P2; 4]) -> bool {
    let scale = v.iter().map(|p| geom2::norm(*p)).fold(1.0, f64::max);
    let signs: Vec<f64> = (0..4)
        .map(|i| geom2::orient(v[i], v[(i + 1) % 4], v[(i + 2) % 4]))
        .collect();
    let tol = 1e-12 * scale * scale;
    signs.iter().all(|&s| s > tol) || signs.iter().all(|&s| s < -tol)
}

/// Sites whose cell is the given convex, non-cyclic quadrilateral.
///
/// The vertices are relabeled `A, C, B, D` around the cycle (all rotations
/// and reflections, first admissible wins) until the angles `CAD` at `A` and
/// `CBD` at `B` sum to less than a straight angle; the kite construction on
/// that labeling is then checked against the target.
pub fn construct_quadrilateral(vertices: [P2; 4]) -> Result<SiteSystem> {
    if !strictly_convex(&vertices) {
        return Err(Error::NonConvexInput);
    }
    if is_cyclic_p2(&vertices) {
        return Err(Error::CyclicInput(ImpossibilityReason::new(
            ImpossibilityKind::CyclicQuadrilateral,
        )));
    }
    let target = polygon_hrep(&vertices)?;
    let labelings = (0..8).filter_map(|k| {
        let mut q: Vec<P2> = (0..4).map(|j| vertices[(k % 4 + j) % 4]).collect();
        if k >= 4 {
            q.reverse();
        }
        let (a, c, b, d) = (q[0], q[1], q[2], q[3]);
        let alpha = angle_at(a, c, d);
        let beta = angle_at(b, c, d);
        (alpha + beta < PI - ANGLE_MARGIN).then(|| {
            let sys = kite(a, c, b, alpha, beta)?;
            verify(&sys, &target, ShapeTag::BoundedQuadrilateral, &vertices)?;
            Ok(sys)
        })
    });
    first_success(labelings, "no corner labeling admits the construction")
}

fn parallel_sides() -> Error {
    Error::ParallelUnboundedSides(ImpossibilityReason::new(
        ImpossibilityKind::ParallelSidedTwoVertexUnbounded,
    ))
}

/// Sites whose cell is the unbounded polygon with vertices `v1`, `v2`, the
/// ray from `v1` along `r1` and the ray from `v2` along `r2`.
///
/// With `C` where the ray lines meet behind the segment, `t1` is placed near
/// one vertex `P` (at distance `epsilon |v1 v2|`) inside the angle between
/// the direction away from the other vertex `Q` and the line whose mirror
/// images close up; then `s1`, `s2` mirror `t1` in `PQ` and `PC`, and `t2`
/// mirrors `s1` in `QC`. `epsilon` starts at [`INITIAL_EPSILON`] and is
/// halved on failed verification.
pub fn construct_unbounded_three(v1: P2, v2: P2, r1: P2, r2: P2) -> Result<SiteSystem> {
    let gap = geom2::dist(v1, v2);
    if gap <= 1e-12 * (1.0 + geom2::norm(v1)) {
        return Err(Error::NotThreeSided);
    }
    if geom2::norm(r1) == 0.0 || geom2::norm(r2) == 0.0 {
        return Err(Error::InvalidTarget("zero ray direction".into()));
    }
    let (r1, r2) = (geom2::unit(r1), geom2::unit(r2));
    if geom2::angle_between(r1, r2) <= ANGLE_MARGIN {
        return Err(parallel_sides());
    }
    let target = chain_hrep(&[v1, v2], [r1, r2])?;
    let c = geom2::line_intersection(v1, r1, v2, r2)
        .ok_or_else(|| Error::InvalidTarget("unbounded sides are antiparallel".into()))?;
    let inward = {
        let mid = geom2::scale(geom2::add(v1, v2), 0.5);
        geom2::sub(geom2::add(mid, geom2::add(r1, r2)), mid)
    };
    let attempts = [(v1, v2), (v2, v1)].into_iter().flat_map(|(p, q)| {
        let away = geom2::unit(geom2::sub(p, q));
        let phi = geom2::angle_of(geom2::sub(q, p)) + geom2::angle_of(geom2::sub(c, p))
            - geom2::angle_of(geom2::sub(c, q));
        let mut line = geom2::from_angle(phi);
        if geom2::dot(line, inward) > 0.0 {
            line = geom2::scale(line, -1.0);
        }
        let dir = geom2::unit(geom2::add(away, line));
        (0..=MAX_EPSILON_RETRIES).map(move |k| {
            let eps = INITIAL_EPSILON * 0.5f64.powi(k as i32);
            let t1 = geom2::add(p, geom2::scale(dir, eps * gap));
            let s1 = geom2::reflect(t1, p, q);
            let s2 = geom2::reflect(t1, p, c);
            let t2 = geom2::reflect(s1, q, c);
            (s1, s2, t1, t2)
        })
    });
    let mut last = Error::ConstructionFailed("no admissible placement".into());
    for (s1, s2, t1, t2) in attempts {
        let sys = match sites([s1, s2], [t1, t2]) {
            Ok(s) => s,
            Err(e) => {
                last = e;
                continue;
            }
        };
        match verify(&sys, &target, ShapeTag::UnboundedThreeSide, &[v1, v2]) {
            Ok(()) => return Ok(sys),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// Sites whose cell is the unbounded quadrilateral with middle vertex `a`,
/// end vertices `b` and `c`, and rays from `b` and `c` in a common direction.
///
/// `b` and `c` lie on the two lines bounding a band. One `S` site `s` is
/// solved for so that its mirror images in `ab` and `ac` differ by twice the
/// band width straight across the band; the other `S` site is the mirror
/// image of the first of them in the line through `b`.
pub fn construct_unbounded_quad_parallel(a: P2, b: P2, c: P2, rays: [P2; 2]) -> Result<SiteSystem> {
    if geom2::norm(rays[0]) == 0.0 || geom2::norm(rays[1]) == 0.0 {
        return Err(Error::InvalidTarget("zero ray direction".into()));
    }
    let r = geom2::unit(rays[0]);
    if geom2::angle_between(r, geom2::unit(rays[1])) > ANGLE_MARGIN {
        return Err(Error::InvalidTarget(
            "unbounded sides are not parallel".into(),
        ));
    }
    let mut n = geom2::perp(r);
    if geom2::dot(geom2::sub(b, c), n) < 0.0 {
        n = geom2::scale(n, -1.0);
    }
    let width = geom2::dot(geom2::sub(b, c), n);
    let scale = 1.0 + geom2::norm(a).max(geom2::norm(b)).max(geom2::norm(c));
    if width <= 1e-12 * scale {
        return Err(Error::InvalidTarget("band has no width".into()));
    }
    let above_c = geom2::dot(geom2::sub(a, c), n);
    if above_c <= 1e-9 || width - above_c <= 1e-9 {
        return Err(Error::VertexOnBandBoundary);
    }
    if angle_at(a, b, c) >= PI - 1e-9 {
        return Err(Error::FlatAngle);
    }
    let target = chain_hrep(&[b, a, c], [geom2::scale(r, 1.0), r])?;

    let f = |s: P2| geom2::sub(geom2::reflect(s, a, b), geom2::reflect(s, a, c));
    let f0 = f([0.0, 0.0]);
    let j0 = geom2::sub(f([1.0, 0.0]), f0);
    let j1 = geom2::sub(f([0.0, 1.0]), f0);
    // [r.J; n.J] s = [-r.f0, 2w - n.f0]
    let m = [
        [geom2::dot(r, j0), geom2::dot(r, j1)],
        [geom2::dot(n, j0), geom2::dot(n, j1)],
    ];
    let rhs = [-geom2::dot(r, f0), 2.0 * width - geom2::dot(n, f0)];
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if det.abs() <= 1e-12 {
        return Err(Error::ConstructionFailed(
            "apex site is not determined".into(),
        ));
    }
    let s = [
        (rhs[0] * m[1][1] - m[0][1] * rhs[1]) / det,
        (m[0][0] * rhs[1] - m[1][0] * rhs[0]) / det,
    ];
    let tb = geom2::reflect(s, a, b);
    let tc = geom2::reflect(s, a, c);
    let s_band = geom2::reflect(tb, b, geom2::add(b, r));
    let sys = sites([s, s_band], [tb, tc])?;
    verify(&sys, &target, ShapeTag::UnboundedQuadrilateral, &[b, a, c])?;
    Ok(sys)
}

/// Sites whose cell is the unbounded quadrilateral with vertex chain
/// `c, a, d` and nonparallel rays from `c` and `d`.
///
/// `B`, where the ray lines meet behind `a`, closes the kite: the
/// quadrilateral construction runs on corners `a, c, B` with the supplement
/// of the interior angle at `a` and the angle `CBD` at `B`.
pub fn construct_unbounded_quad_general(c: P2, a: P2, d: P2, rays: [P2; 2]) -> Result<SiteSystem> {
    if geom2::norm(rays[0]) == 0.0 || geom2::norm(rays[1]) == 0.0 {
        return Err(Error::InvalidTarget("zero ray direction".into()));
    }
    let sides = [
        geom2::unit(rays[0]),
        geom2::unit(geom2::sub(a, c)),
        geom2::unit(geom2::sub(d, a)),
        geom2::unit(rays[1]),
    ];
    for i in 0..4 {
        for j in i + 1..4 {
            if geom2::cross(sides[i], sides[j]).abs() <= ANGLE_MARGIN.sin() {
                return Err(Error::ParallelSides);
            }
        }
    }
    let target = chain_hrep(&[c, a, d], rays)?;
    let b = geom2::line_intersection(c, rays[0], d, rays[1]).ok_or(Error::ParallelSides)?;
    let alpha = angle_at(a, c, d);
    let beta = angle_at(b, c, d);
    let candidates = [(c, d), (d, c)].into_iter().map(|(cc, _)| {
        let sys = kite(a, cc, b, PI - alpha, beta)?;
        verify(&sys, &target, ShapeTag::UnboundedQuadrilateral, &[c, a, d])?;
        Ok(sys)
    });
    first_success(candidates, "kite construction failed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn site_coords(sys: &SiteSystem) -> Vec<P2> {
        sys.sites()
            .iter()
            .map(|s| [s.point.coords()[0], s.point.coords()[1]])
            .collect()
    }

    fn close(a: P2, b: P2) -> bool {
        geom2::dist(a, b) < 1e-9
    }

    #[test]
    fn quadrilateral_example() {
        let v = [[0.0, 0.0], [2.0, 1.0], [4.0, 0.0], [2.0, -2.0]];
        let sys = construct_quadrilateral(v).unwrap();
        let mut mirrored = v;
        mirrored.reverse();
        assert!(construct_quadrilateral(mirrored).is_ok());
        let pts = site_coords(&sys);
        assert_eq!(pts.len(), 4);
    }

    #[test]
    fn square_is_refused() {
        let sq = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]];
        assert!(matches!(
            construct_quadrilateral(sq),
            Err(Error::CyclicInput(_))
        ));
        let bent = [[0.0, 0.0], [2.0, 0.0], [1.0, 0.2], [1.0, 2.0]];
        assert_eq!(construct_quadrilateral(bent), Err(Error::NonConvexInput));
    }

    #[test]
    fn unbounded_three_example() {
        let r1 = geom2::from_angle(2.0 * PI / 3.0);
        let r2 = geom2::from_angle(PI / 3.0);
        assert!(construct_unbounded_three([0.0, 0.0], [2.0, 0.0], r1, r2).is_ok());
        assert!(matches!(
            construct_unbounded_three([0.0, 0.0], [2.0, 0.0], [0.0, 1.0], [0.0, 1.0]),
            Err(Error::ParallelUnboundedSides(_))
        ));
        assert_eq!(
            construct_unbounded_three([1.0, 1.0], [1.0, 1.0], r1, r2),
            Err(Error::NotThreeSided)
        );
    }

    #[test]
    fn parallel_quad_example() {
        let sys = construct_unbounded_quad_parallel(
            [0.0, 1.0],
            [1.0, 2.0],
            [1.0, 0.0],
            [[1.0, 0.0], [1.0, 0.0]],
        )
        .unwrap();
        let pts = site_coords(&sys);
        assert!(close(pts[0], [2.0, 1.0]));
        assert!(close(pts[1], [0.0, 1.0]));
        assert!(close(pts[2], [0.0, 3.0]));
        assert!(close(pts[3], [0.0, -1.0]));
        assert_eq!(
            construct_unbounded_quad_parallel(
                [0.0, 2.0],
                [1.0, 2.0],
                [1.0, 0.0],
                [[1.0, 0.0], [1.0, 0.0]]
            ),
            Err(Error::VertexOnBandBoundary)
        );
    }

    #[test]
    fn general_quad_example() {
        let sys = construct_unbounded_quad_general(
            [2.0, 1.0],
            [1.0, 0.0],
            [2.0, -1.0],
            [[2.0, 1.0], [2.0, -1.0]],
        )
        .unwrap();
        let pts = site_coords(&sys);
        let expected = [
            [7.0 / 3.0, 0.0],
            [5.0 / 3.0, 0.0],
            [1.0, 4.0 / 3.0],
            [1.0, -4.0 / 3.0],
        ];
        for e in expected {
            assert!(pts.iter().any(|p| close(*p, e)), "missing {e:?} in {pts:?}");
        }
    }
}
