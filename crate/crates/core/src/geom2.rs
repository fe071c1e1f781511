//! Small planar vector helpers shared by classification and constructions.

pub type P2 = [f64; 2];

pub fn add(a: P2, b: P2) -> P2 {
    [a[0] + b[0], a[1] + b[1]]
}

pub fn sub(a: P2, b: P2) -> P2 {
    [a[0] - b[0], a[1] - b[1]]
}

pub fn scale(a: P2, k: f64) -> P2 {
    [a[0] * k, a[1] * k]
}

pub fn dot(a: P2, b: P2) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

pub fn cross(a: P2, b: P2) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

pub fn norm(a: P2) -> f64 {
    a[0].hypot(a[1])
}

pub fn dist(a: P2, b: P2) -> f64 {
    norm(sub(a, b))
}

pub fn unit(a: P2) -> P2 {
    scale(a, 1.0 / norm(a))
}

/// Counterclockwise quarter turn.
pub fn perp(a: P2) -> P2 {
    [-a[1], a[0]]
}

pub fn rotate(a: P2, angle: f64) -> P2 {
    let (s, c) = angle.sin_cos();
    [c * a[0] - s * a[1], s * a[0] + c * a[1]]
}

pub fn from_angle(angle: f64) -> P2 {
    let (s, c) = angle.sin_cos();
    [c, s]
}

pub fn angle_of(a: P2) -> f64 {
    a[1].atan2(a[0])
}

/// Twice the signed area of `(a, b, c)`; positive for a left turn.
pub fn orient(a: P2, b: P2, c: P2) -> f64 {
    cross(sub(b, a), sub(c, a))
}

/// Unsigned angle between two nonzero vectors, in `[0, pi]`.
pub fn angle_between(a: P2, b: P2) -> f64 {
    cross(a, b).abs().atan2(dot(a, b))
}

/// Mirror image of `p` in the line through `a` and `b`.
pub fn reflect(p: P2, a: P2, b: P2) -> P2 {
    let u = unit(sub(b, a));
    let w = sub(p, a);
    let along = scale(u, dot(w, u));
    let across = sub(w, along);
    sub(add(a, along), across)
}

/// Intersection of the lines `p + s u` and `q + t v`, if they are not parallel.
pub fn line_intersection(p: P2, u: P2, q: P2, v: P2) -> Option<P2> {
    let den = cross(u, v);
    if den.abs() <= 1e-12 * norm(u) * norm(v) {
        return None;
    }
    let s = cross(sub(q, p), v) / den;
    Some(add(p, scale(u, s)))
}

pub fn centroid(points: &[P2]) -> P2 {
    let n = points.len().max(1) as f64;
    let s = points.iter().fold([0.0, 0.0], |acc, p| add(acc, *p));
    scale(s, 1.0 / n)
}

/// Sorts points counterclockwise around their centroid, starting from the
/// lowest-angle point.
pub fn sort_ccw(points: &mut [P2]) {
    let c = centroid(points);
    points.sort_by(|a, b| angle_of(sub(*a, c)).total_cmp(&angle_of(sub(*b, c))));
}

/// Convex hull by Andrew's monotone chain, counterclockwise, without
/// collinear boundary points.
pub fn convex_hull(points: &[P2]) -> Vec<P2> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<P2> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &P2>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2
                && orient(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_in_axis() {
        let r = reflect([1.0, 2.0], [0.0, 0.0], [1.0, 0.0]);
        assert!((r[0] - 1.0).abs() < 1e-15 && (r[1] + 2.0).abs() < 1e-15);
    }

    #[test]
    fn lines_meet() {
        let x = line_intersection([0.0, 0.0], [1.0, 1.0], [2.0, 0.0], [0.0, 1.0]).unwrap();
        assert!((x[0] - 2.0).abs() < 1e-15 && (x[1] - 2.0).abs() < 1e-15);
        assert!(line_intersection([0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [2.0, 0.0]).is_none());
    }

    #[test]
    fn hull_drops_interior_and_collinear() {
        let pts = [
            [0.0, 0.0],
            [2.0, 0.0],
            [1.0, 0.0],
            [2.0, 2.0],
            [0.0, 2.0],
            [1.0, 1.0],
        ];
        let h = convex_hull(&pts);
        assert_eq!(h, vec![[0.0, 0.0], [2.0, 0.0], [2.0, 2.0], [0.0, 2.0]]);
    }

    #[test]
    fn ccw_sorting() {
        let mut pts = [[1.0, 1.0], [0.0, 0.0], [0.0, 1.0], [1.0, 0.0]];
        sort_ccw(&mut pts);
        for i in 0..4 {
            assert!(orient(pts[i], pts[(i + 1) % 4], pts[(i + 2) % 4]) > 0.0);
        }
    }
}
