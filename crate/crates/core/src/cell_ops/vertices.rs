use crate::geom2::{self, P2};
use crate::model::{HPolyhedron, Point};

/// Vertices must satisfy every row to this normalized slack.
pub const VERTEX_SLACK_TOL: f64 = 1e-9;
/// Vertices closer than this are merged.
pub const VERTEX_DEDUP_TOL: f64 = 1e-8;
/// Unit normals whose cross product is at most this are treated as parallel.
const PARALLEL_TOL: f64 = 1e-12;

/// Unit-normal rows `(a, b)` of a planar polyhedron.
pub(crate) fn unit_rows(hrep: &HPolyhedron) -> Vec<(P2, f64)> {
    hrep.halfspaces()
        .iter()
        .map(|h| {
            let u = h.normalized();
            ([u.normal()[0], u.normal()[1]], u.offset())
        })
        .collect()
}

fn feasible_point(rows: &[(P2, f64)], x: P2) -> bool {
    rows.iter()
        .all(|(a, b)| b - geom2::dot(*a, x) >= -VERTEX_SLACK_TOL * (1.0 + b.abs()))
}

pub(crate) fn vertices_p2(hrep: &HPolyhedron) -> Vec<P2> {
    assert_eq!(hrep.dim(), 2, "planar polyhedron expected");
    let rows = unit_rows(hrep);
    let mut out: Vec<P2> = Vec::new();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let (a, b) = rows[i];
            let (c, d) = rows[j];
            let det = geom2::cross(a, c);
            if det.abs() <= PARALLEL_TOL {
                continue;
            }
            let x = [(b * c[1] - d * a[1]) / det, (a[0] * d - c[0] * b) / det];
            if !feasible_point(&rows, x) {
                continue;
            }
            if out
                .iter()
                .all(|v| geom2::dist(*v, x) > VERTEX_DEDUP_TOL * (1.0 + geom2::norm(x)))
            {
                out.push(x);
            }
        }
    }
    if out.len() >= 3 {
        geom2::sort_ccw(&mut out);
    }
    out
}

/// Vertices of a planar polyhedron: pairwise boundary-line intersections
/// that satisfy every row, deduplicated, in counterclockwise order around
/// their centroid.
pub fn vertices2d(hrep: &HPolyhedron) -> Vec<Point> {
    vertices_p2(hrep)
        .into_iter()
        .map(|[x, y]| Point::xy(x, y))
        .collect()
}

/// The part of one row's boundary line that lies in the polyhedron:
/// `point + lambda * direction` for `lo <= lambda <= hi` (either end may be
/// infinite). `direction` is the unit normal turned counterclockwise, so
/// the polyhedron lies to the left of travel.
#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub row: usize,
    pub point: P2,
    pub direction: P2,
    pub lo: f64,
    pub hi: f64,
}

impl Edge {
    pub fn at(&self, lambda: f64) -> P2 {
        geom2::add(self.point, geom2::scale(self.direction, lambda))
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }
}

/// Edges of a planar polyhedron of positive length, one per row at most.
pub fn edges2d(hrep: &HPolyhedron) -> Vec<Edge> {
    let rows = unit_rows(hrep);
    let mut out = Vec::new();
    'rows: for (i, &(a, b)) in rows.iter().enumerate() {
        let point = geom2::scale(a, b);
        let direction = geom2::perp(a);
        let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
        for (j, &(c, d)) in rows.iter().enumerate() {
            if j == i {
                continue;
            }
            let rate = geom2::dot(c, direction);
            let room = d - geom2::dot(c, point);
            if rate.abs() <= PARALLEL_TOL {
                if room < -VERTEX_SLACK_TOL * (1.0 + d.abs()) {
                    continue 'rows;
                }
                continue;
            }
            let bound = room / rate;
            if rate > 0.0 {
                hi = hi.min(bound);
            } else {
                lo = lo.max(bound);
            }
        }
        let long = if lo.is_finite() && hi.is_finite() {
            hi - lo > VERTEX_DEDUP_TOL * (1.0 + lo.abs().min(hi.abs()))
        } else {
            hi > lo
        };
        if long {
            out.push(Edge {
                row: i,
                point,
                direction,
                lo,
                hi,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> HPolyhedron {
        HPolyhedron::from_rows(
            2,
            &[
                (&[1.0, 0.0], 1.0),
                (&[-1.0, 0.0], 0.0),
                (&[0.0, 1.0], 1.0),
                (&[0.0, -1.0], 0.0),
            ],
        )
    }

    #[test]
    fn square_corners() {
        let v = vertices2d(&unit_square());
        assert_eq!(v.len(), 4);
        for corner in [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]] {
            assert!(v
                .iter()
                .any(|p| geom2::dist([p.coords()[0], p.coords()[1]], corner) < 1e-15));
        }
        let e = edges2d(&unit_square());
        assert_eq!(e.len(), 4);
        assert!(e.iter().all(|e| (e.hi - e.lo - 1.0).abs() < 1e-15));
    }

    #[test]
    fn example_vertex_sets() {
        let singleton = HPolyhedron::from_rows(
            2,
            &[
                (&[1.0, 0.0], 0.5),
                (&[0.0, 1.0], 0.5),
                (&[0.0, -1.0], -0.5),
                (&[-1.0, 0.0], -0.5),
            ],
        );
        let v = vertices2d(&singleton);
        assert_eq!(v, vec![Point::xy(0.5, 0.5)]);
        assert!(edges2d(&singleton).is_empty());

        let empty = HPolyhedron::from_rows(2, &[(&[1.0, 0.0], -0.5), (&[-1.0, 0.0], -0.5)]);
        assert!(vertices2d(&empty).is_empty());
        assert!(edges2d(&empty).is_empty());
    }

    #[test]
    fn halfplane_edge_is_a_line() {
        let p = HPolyhedron::from_rows(2, &[(&[0.0, 2.0], 2.0)]);
        let e = edges2d(&p);
        assert_eq!(e.len(), 1);
        assert!(e[0].lo.is_infinite() && e[0].hi.is_infinite());
        assert_eq!(e[0].point, [0.0, 1.0]);
    }
}
