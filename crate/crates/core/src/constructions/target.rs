use crate::cell_ops::ShapeTag;
use crate::error::{Error, Result};
use crate::geom2::{self, P2};
use crate::model::{HPolyhedron, Halfspace, Point};

/// Unit vectors must have norm one to within this.
pub const UNIT_TOL: f64 = 1e-12;

/// A planar (or, for the first four, `n`-dimensional) cell to realize.
///
/// Vertex chains may be given in either orientation. For unbounded shapes
/// the rays point away from the first and last vertex of the chain.
#[derive(Clone, Debug, PartialEq)]
pub enum TargetShape {
    Singleton {
        center: Point,
    },
    Halfspace {
        d: Vec<f64>,
        gamma: f64,
        sigma: usize,
        tau: usize,
    },
    Strip {
        d: Vec<f64>,
        alpha: f64,
        beta: f64,
    },
    Wedge {
        v1: Vec<f64>,
        v2: Vec<f64>,
        b1: f64,
        b2: f64,
    },
    NonCyclicQuadrilateral {
        vertices: [P2; 4],
    },
    UnboundedThreeSide {
        vertices: [P2; 2],
        rays: [P2; 2],
    },
    UnboundedQuadParallel {
        vertices: [P2; 3],
        rays: [P2; 2],
    },
    UnboundedQuadGeneral {
        vertices: [P2; 3],
        rays: [P2; 2],
    },
}

impl TargetShape {
    /// The tag a faithful realization classifies as.
    pub fn tag(&self) -> ShapeTag {
        match self {
            TargetShape::Singleton { .. } => ShapeTag::Singleton,
            TargetShape::Halfspace { .. } => ShapeTag::Halfplane,
            TargetShape::Strip { .. } => ShapeTag::Strip,
            TargetShape::Wedge { .. } => ShapeTag::Wedge,
            TargetShape::NonCyclicQuadrilateral { .. } => ShapeTag::BoundedQuadrilateral,
            TargetShape::UnboundedThreeSide { .. } => ShapeTag::UnboundedThreeSide,
            TargetShape::UnboundedQuadParallel { .. }
            | TargetShape::UnboundedQuadGeneral { .. } => ShapeTag::UnboundedQuadrilateral,
        }
    }

    /// Inequalities describing the target.
    pub fn hrep(&self) -> Result<HPolyhedron> {
        match self {
            TargetShape::Singleton { center } => {
                let n = center.dim();
                let mut rows = Vec::with_capacity(2 * n);
                for (i, &c) in center.coords().iter().enumerate() {
                    let mut e = vec![0.0; n];
                    e[i] = 1.0;
                    rows.push(Halfspace::new(e.clone(), c)?);
                    e[i] = -1.0;
                    rows.push(Halfspace::new(e, -c)?);
                }
                HPolyhedron::new(n, rows)
            }
            TargetShape::Halfspace { d, gamma, .. } => {
                HPolyhedron::new(d.len(), vec![Halfspace::new(d.clone(), *gamma)?])
            }
            TargetShape::Strip { d, alpha, beta } => HPolyhedron::new(
                d.len(),
                vec![
                    Halfspace::new(d.clone(), *beta)?,
                    Halfspace::new(d.iter().map(|v| -v).collect(), -alpha)?,
                ],
            ),
            TargetShape::Wedge { v1, v2, b1, b2 } => HPolyhedron::new(
                v1.len(),
                vec![
                    Halfspace::new(v1.clone(), *b1)?,
                    Halfspace::new(v2.clone(), *b2)?,
                ],
            ),
            TargetShape::NonCyclicQuadrilateral { vertices } => polygon_hrep(vertices),
            TargetShape::UnboundedThreeSide { vertices, rays } => chain_hrep(vertices, *rays),
            TargetShape::UnboundedQuadParallel { vertices, rays }
            | TargetShape::UnboundedQuadGeneral { vertices, rays } => chain_hrep(vertices, *rays),
        }
    }

    /// Vertices the realized cell must reproduce (planar shapes only).
    pub fn vertices(&self) -> Vec<P2> {
        match self {
            TargetShape::Singleton { center } if center.dim() == 2 => {
                vec![[center.coords()[0], center.coords()[1]]]
            }
            TargetShape::NonCyclicQuadrilateral { vertices } => vertices.to_vec(),
            TargetShape::UnboundedThreeSide { vertices, .. } => vertices.to_vec(),
            TargetShape::UnboundedQuadParallel { vertices, .. }
            | TargetShape::UnboundedQuadGeneral { vertices, .. } => vertices.to_vec(),
            _ => Vec::new(),
        }
    }
}

pub(crate) fn check_unit(v: &[f64]) -> Result<()> {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if !n.is_finite() || (n - 1.0).abs() > UNIT_TOL {
        return Err(Error::PreconditionViolated(format!(
            "expected a unit vector, got norm {n}"
        )));
    }
    Ok(())
}

/// Halfspace bounded by the line through `p` along `dir`, oriented so that
/// `inside` satisfies it strictly.
fn line_row(p: P2, dir: P2, inside: P2) -> Result<Halfspace> {
    let len = geom2::norm(dir);
    if len == 0.0 || !len.is_finite() {
        return Err(Error::InvalidTarget("zero-length side".into()));
    }
    let mut n = geom2::scale(geom2::perp(dir), 1.0 / len);
    let mut off = geom2::dot(n, p);
    let slack = off - geom2::dot(n, inside);
    let scale = 1.0 + geom2::norm(p).max(geom2::norm(inside));
    if slack.abs() <= 1e-12 * scale {
        return Err(Error::InvalidTarget("degenerate side".into()));
    }
    if slack < 0.0 {
        n = geom2::scale(n, -1.0);
        off = -off;
    }
    Halfspace::new(n.to_vec(), off)
}

fn check_convex(hrep: &HPolyhedron, vertices: &[P2]) -> Result<()> {
    for v in vertices {
        let scale = 1.0 + geom2::norm(*v);
        if hrep.min_normalized_slack(v) < -1e-9 * scale {
            return Err(Error::NonConvexInput);
        }
    }
    Ok(())
}

/// Inequalities of the convex polygon with the given vertex cycle.
pub fn polygon_hrep(vertices: &[P2]) -> Result<HPolyhedron> {
    if vertices.len() < 3 {
        return Err(Error::InvalidTarget("polygon needs three vertices".into()));
    }
    let k = vertices.len();
    let scale = vertices.iter().map(|p| geom2::norm(*p)).fold(1.0, f64::max);
    let turns: Vec<f64> = (0..k)
        .map(|i| geom2::orient(vertices[i], vertices[(i + 1) % k], vertices[(i + 2) % k]))
        .collect();
    let tol = 1e-12 * scale * scale;
    if !(turns.iter().all(|&t| t > tol) || turns.iter().all(|&t| t < -tol)) {
        return Err(Error::NonConvexInput);
    }
    let inside = geom2::centroid(vertices);
    let rows = (0..k)
        .map(|i| {
            let (p, q) = (vertices[i], vertices[(i + 1) % k]);
            line_row(p, geom2::sub(q, p), inside)
        })
        .collect::<Result<Vec<_>>>()?;
    let hrep = HPolyhedron::new(2, rows)?;
    check_convex(&hrep, vertices)?;
    Ok(hrep)
}

/// Inequalities of the unbounded convex polygon bounded by the ray from the
/// first vertex, the vertex chain, and the ray from the last vertex.
pub fn chain_hrep(vertices: &[P2], rays: [P2; 2]) -> Result<HPolyhedron> {
    let (first, last) = match (vertices.first(), vertices.last()) {
        (Some(f), Some(l)) => (*f, *l),
        _ => return Err(Error::InvalidTarget("chain needs a vertex".into())),
    };
    if rays.iter().any(|r| geom2::norm(*r) == 0.0) {
        return Err(Error::InvalidTarget("zero ray direction".into()));
    }
    let reach = 1.0
        + vertices
            .iter()
            .map(|v| geom2::dist(*v, first))
            .fold(0.0, f64::max);
    let push = geom2::add(geom2::unit(rays[0]), geom2::unit(rays[1]));
    let inside = geom2::add(geom2::centroid(vertices), geom2::scale(push, reach));
    let mut rows = vec![line_row(first, rays[0], inside)?];
    for w in vertices.windows(2) {
        rows.push(line_row(w[0], geom2::sub(w[1], w[0]), inside)?);
    }
    rows.push(line_row(last, rays[1], inside)?);
    let hrep = HPolyhedron::new(2, rows)?;
    check_convex(&hrep, vertices)?;
    for (v, r) in [(first, rays[0]), (last, rays[1])] {
        let far = geom2::add(v, geom2::scale(geom2::unit(r), 10.0 * reach));
        if hrep.min_normalized_slack(&far) < -1e-9 * (1.0 + geom2::norm(far)) {
            return Err(Error::NonConvexInput);
        }
    }
    Ok(hrep)
}
