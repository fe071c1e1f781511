use std::fmt;

use nalgebra::Matrix4;

use crate::error::{Error, Result};
use crate::geom2::{self, P2};
use crate::lp;
use crate::model::{cell_hrep, HPolyhedron, Halfspace, Point, SiteSystem};
use crate::predicates::{has_interior, is_bounded, is_empty};

use super::redundancy::remove_redundant;
use super::vertices::{edges2d, unit_rows, vertices_p2, Edge};

/// Normalized in-circle determinants at or below this are concyclic.
pub const CYCLIC_TOL: f64 = 1e-9;
/// Non-cyclic verdicts with determinant at or below this are flagged ambiguous.
pub const CYCLIC_AMBIGUOUS_TOL: f64 = 1e-7;
/// Ray directions within this angle (radians) count as parallel.
pub const PARALLEL_ANGLE_TOL: f64 = 1e-9;
/// Depth below which a raw polyhedron is treated as having no interior.
pub const INTERIOR_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShapeTag {
    Empty,
    Singleton,
    OneDimensional,
    Halfplane,
    Strip,
    Wedge,
    Triangle,
    BoundedQuadrilateral,
    UnboundedThreeSide,
    UnboundedQuadrilateral,
    OtherPolygon,
}

impl ShapeTag {
    pub const ALL: [ShapeTag; 11] = [
        ShapeTag::Empty,
        ShapeTag::Singleton,
        ShapeTag::OneDimensional,
        ShapeTag::Halfplane,
        ShapeTag::Strip,
        ShapeTag::Wedge,
        ShapeTag::Triangle,
        ShapeTag::BoundedQuadrilateral,
        ShapeTag::UnboundedThreeSide,
        ShapeTag::UnboundedQuadrilateral,
        ShapeTag::OtherPolygon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ShapeTag::Empty => "Empty",
            ShapeTag::Singleton => "Singleton",
            ShapeTag::OneDimensional => "OneDimensional",
            ShapeTag::Halfplane => "Halfplane",
            ShapeTag::Strip => "Strip",
            ShapeTag::Wedge => "Wedge",
            ShapeTag::Triangle => "Triangle",
            ShapeTag::BoundedQuadrilateral => "BoundedQuadrilateral",
            ShapeTag::UnboundedThreeSide => "UnboundedThreeSide",
            ShapeTag::UnboundedQuadrilateral => "UnboundedQuadrilateral",
            ShapeTag::OtherPolygon => "OtherPolygon",
        }
    }
}

impl fmt::Display for ShapeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Shape of a planar cell after redundancy removal.
///
/// Vertex lists of bounded shapes are counterclockwise. For unbounded shapes
/// the vertices follow the boundary counterclockwise, and `rays` holds the
/// direction of the unbounded edge at the first vertex (pointing away from
/// it) followed by the one at the last vertex.
#[derive(Clone, Debug, PartialEq)]
pub enum CellShape {
    Empty,
    Singleton {
        point: P2,
    },
    OneDimensional {
        vertices: Vec<P2>,
        rays: Vec<P2>,
    },
    Halfplane {
        halfspace: Halfspace,
    },
    Strip {
        halfspaces: [Halfspace; 2],
        width: f64,
    },
    Wedge {
        apex: P2,
        rays: [P2; 2],
    },
    Triangle {
        vertices: Vec<P2>,
    },
    BoundedQuadrilateral {
        vertices: Vec<P2>,
        cyclic: bool,
        ambiguous: bool,
    },
    UnboundedThreeSide {
        vertices: Vec<P2>,
        rays: [P2; 2],
        parallel_unbounded_sides: bool,
    },
    UnboundedQuadrilateral {
        vertices: Vec<P2>,
        rays: [P2; 2],
        parallel_unbounded_sides: bool,
    },
    OtherPolygon {
        vertices: Vec<P2>,
        rays: Vec<P2>,
        bounded: bool,
    },
}

impl CellShape {
    pub fn tag(&self) -> ShapeTag {
        match self {
            CellShape::Empty => ShapeTag::Empty,
            CellShape::Singleton { .. } => ShapeTag::Singleton,
            CellShape::OneDimensional { .. } => ShapeTag::OneDimensional,
            CellShape::Halfplane { .. } => ShapeTag::Halfplane,
            CellShape::Strip { .. } => ShapeTag::Strip,
            CellShape::Wedge { .. } => ShapeTag::Wedge,
            CellShape::Triangle { .. } => ShapeTag::Triangle,
            CellShape::BoundedQuadrilateral { .. } => ShapeTag::BoundedQuadrilateral,
            CellShape::UnboundedThreeSide { .. } => ShapeTag::UnboundedThreeSide,
            CellShape::UnboundedQuadrilateral { .. } => ShapeTag::UnboundedQuadrilateral,
            CellShape::OtherPolygon { .. } => ShapeTag::OtherPolygon,
        }
    }

    /// Vertices carried by the shape, if any.
    pub fn vertices(&self) -> Vec<P2> {
        match self {
            CellShape::Singleton { point } => vec![*point],
            CellShape::Wedge { apex, .. } => vec![*apex],
            CellShape::OneDimensional { vertices, .. }
            | CellShape::Triangle { vertices }
            | CellShape::BoundedQuadrilateral { vertices, .. }
            | CellShape::UnboundedThreeSide { vertices, .. }
            | CellShape::UnboundedQuadrilateral { vertices, .. }
            | CellShape::OtherPolygon { vertices, .. } => vertices.clone(),
            _ => Vec::new(),
        }
    }

    /// Whether the shape is a bounded set (the empty set counts as bounded).
    pub fn is_bounded(&self) -> bool {
        match self {
            CellShape::Empty
            | CellShape::Singleton { .. }
            | CellShape::Triangle { .. }
            | CellShape::BoundedQuadrilateral { .. } => true,
            CellShape::OneDimensional { rays, .. } => rays.is_empty(),
            CellShape::OtherPolygon { bounded, .. } => *bounded,
            _ => false,
        }
    }

    pub fn rays(&self) -> Vec<P2> {
        match self {
            CellShape::Wedge { rays, .. }
            | CellShape::UnboundedThreeSide { rays, .. }
            | CellShape::UnboundedQuadrilateral { rays, .. } => rays.to_vec(),
            CellShape::OneDimensional { rays, .. } | CellShape::OtherPolygon { rays, .. } => {
                rays.clone()
            }
            _ => Vec::new(),
        }
    }
}

fn normalized_points(points: &[P2; 4]) -> [P2; 4] {
    let c = geom2::centroid(points);
    let r = points
        .iter()
        .map(|p| geom2::dist(*p, c))
        .fold(0.0, f64::max);
    let r = if r > 0.0 { r } else { 1.0 };
    points.map(|p| geom2::scale(geom2::sub(p, c), 1.0 / r))
}

/// Normalized in-circle determinant of four planar points, or `None` when
/// three of them are collinear (no circle passes through all four).
///
/// The points are centered and scaled to unit spread, and each row
/// `[x, y, x^2 + y^2, 1]` is scaled to unit length before taking the
/// determinant.
pub fn cyclic_determinant(points: &[P2; 4]) -> Option<f64> {
    let q = normalized_points(points);
    for i in 0..4 {
        for j in i + 1..4 {
            for k in j + 1..4 {
                if geom2::orient(q[i], q[j], q[k]).abs() <= 1e-12 {
                    return None;
                }
            }
        }
    }
    let mut m = Matrix4::zeros();
    for (r, p) in q.iter().enumerate() {
        let row = [p[0], p[1], p[0] * p[0] + p[1] * p[1], 1.0];
        let len = row.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (c, v) in row.iter().enumerate() {
            m[(r, c)] = v / len;
        }
    }
    Some(m.determinant())
}

pub(crate) fn is_cyclic_p2(points: &[P2; 4]) -> bool {
    cyclic_determinant(points).is_some_and(|d| d.abs() <= CYCLIC_TOL)
}

/// Whether four planar points lie on a common circle.
pub fn cyclic_test(p1: &Point, p2: &Point, p3: &Point, p4: &Point) -> Result<bool> {
    let mut pts = [[0.0; 2]; 4];
    for (slot, p) in pts.iter_mut().zip([p1, p2, p3, p4]) {
        match p.coords() {
            &[x, y] => *slot = [x, y],
            c => {
                return Err(Error::DimensionMismatch {
                    expected: 2,
                    found: c.len(),
                })
            }
        }
    }
    Ok(is_cyclic_p2(&pts))
}

fn same_direction(a: P2, b: P2) -> bool {
    geom2::angle_between(a, b) <= PARALLEL_ANGLE_TOL
}

/// Extreme rays of the recession cone `{d : <a_i, d> <= 0}`, as unit vectors.
pub(crate) fn recession_rays(rows: &[(P2, f64)]) -> Vec<P2> {
    if rows.is_empty() {
        return vec![[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]];
    }
    let mut out: Vec<P2> = Vec::new();
    for (a, _) in rows {
        for d in [geom2::perp(*a), geom2::scale(geom2::perp(*a), -1.0)] {
            let ok = rows.iter().all(|(c, _)| geom2::dot(*c, d) <= 1e-9);
            if ok && !out.iter().any(|r| same_direction(*r, d)) {
                out.push(d);
            }
        }
    }
    out
}

/// Rays attached to the finite ends of unbounded edges:
/// `(vertex, outward direction, incoming)`.
fn unbounded_ends(edges: &[Edge]) -> Vec<(P2, P2, bool)> {
    let mut out = Vec::new();
    for e in edges {
        match (e.lo.is_finite(), e.hi.is_finite()) {
            (false, true) => out.push((e.at(e.hi), geom2::scale(e.direction, -1.0), true)),
            (true, false) => out.push((e.at(e.lo), e.direction, false)),
            _ => {}
        }
    }
    out
}

/// Vertices of an unbounded polygon in counterclockwise boundary order, with
/// the rays at the first and last vertex.
fn boundary_chain(edges: &[Edge]) -> Option<(Vec<P2>, [P2; 2])> {
    let ends = unbounded_ends(edges);
    let incoming = ends.iter().find(|e| e.2)?;
    let outgoing = ends.iter().find(|e| !e.2)?;
    if ends.len() != 2 {
        return None;
    }
    let bounded: Vec<&Edge> = edges.iter().filter(|e| e.is_bounded()).collect();
    let mut chain = vec![incoming.0];
    let mut used = vec![false; bounded.len()];
    let mut current = incoming.0;
    let close = |a: P2, b: P2| geom2::dist(a, b) <= 1e-7 * (1.0 + geom2::norm(a));
    while !close(current, outgoing.0) {
        let next = bounded
            .iter()
            .enumerate()
            .find(|(i, e)| !used[*i] && close(e.at(e.lo), current))?;
        used[next.0] = true;
        current = next.1.at(next.1.hi);
        chain.push(current);
    }
    if chain.len() != bounded.len() + 1 {
        return None;
    }
    Some((chain, [incoming.1, outgoing.1]))
}

/// Shape of a reduced planar polyhedron, given its boundedness and whether it
/// has interior points.
pub(crate) fn shape_of_reduced(reduced: &HPolyhedron, bounded: bool, interior: bool) -> CellShape {
    let rows = unit_rows(reduced);
    let verts = vertices_p2(reduced);
    let rays = if bounded {
        Vec::new()
    } else {
        recession_rays(&rows)
    };
    if !interior {
        return if bounded && verts.len() == 1 {
            CellShape::Singleton { point: verts[0] }
        } else {
            CellShape::OneDimensional {
                vertices: verts,
                rays,
            }
        };
    }
    let other = |verts: Vec<P2>, rays: Vec<P2>| CellShape::OtherPolygon {
        vertices: verts,
        rays,
        bounded,
    };
    let hs = reduced.halfspaces();
    match rows.len() {
        1 => CellShape::Halfplane {
            halfspace: hs[0].clone(),
        },
        2 if geom2::cross(rows[0].0, rows[1].0).abs() <= 1e-12 => {
            let width = rows[0].1 + rows[1].1;
            CellShape::Strip {
                halfspaces: [hs[0].clone(), hs[1].clone()],
                width,
            }
        }
        2 => {
            let ends = unbounded_ends(&edges2d(reduced));
            match (verts.as_slice(), ends.as_slice()) {
                ([apex], [a, b]) => {
                    let (first, second) = if a.2 { (a, b) } else { (b, a) };
                    CellShape::Wedge {
                        apex: *apex,
                        rays: [first.1, second.1],
                    }
                }
                _ => other(verts, rays),
            }
        }
        m if bounded => match (m, verts.len()) {
            (3, 3) => CellShape::Triangle { vertices: verts },
            (4, 4) => {
                let quad = [verts[0], verts[1], verts[2], verts[3]];
                let det = cyclic_determinant(&quad);
                let cyclic = det.is_some_and(|d| d.abs() <= CYCLIC_TOL);
                let ambiguous =
                    det.is_some_and(|d| d.abs() > CYCLIC_TOL && d.abs() <= CYCLIC_AMBIGUOUS_TOL);
                CellShape::BoundedQuadrilateral {
                    vertices: verts,
                    cyclic,
                    ambiguous,
                }
            }
            _ => other(verts, rays),
        },
        m => match boundary_chain(&edges2d(reduced)) {
            Some((chain, chain_rays)) => {
                let parallel = same_direction(chain_rays[0], chain_rays[1]);
                match (m, chain.len()) {
                    (3, 2) => CellShape::UnboundedThreeSide {
                        vertices: chain,
                        rays: chain_rays,
                        parallel_unbounded_sides: parallel,
                    },
                    (4, 3) => CellShape::UnboundedQuadrilateral {
                        vertices: chain,
                        rays: chain_rays,
                        parallel_unbounded_sides: parallel,
                    },
                    _ => other(chain, chain_rays.to_vec()),
                }
            }
            None => other(verts, rays),
        },
    }
}

/// Taxonomy label of the planar cell `V_T(S)`.
///
/// Emptiness, interior and boundedness come from the certified predicates;
/// the remaining structure from the irredundant inequalities.
pub fn classify2d(sys: &SiteSystem) -> Result<CellShape> {
    if sys.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: sys.dim(),
        });
    }
    if is_empty(sys)?.value {
        return Ok(CellShape::Empty);
    }
    let interior = has_interior(sys)?.value;
    let bounded = is_bounded(sys)?.value;
    let reduced = remove_redundant(&cell_hrep(sys))?;
    Ok(shape_of_reduced(&reduced, bounded, interior))
}

/// Taxonomy label of an arbitrary planar polyhedron, decided from its rows
/// alone.
pub fn classify_hrep(hrep: &HPolyhedron) -> Result<CellShape> {
    if hrep.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: hrep.dim(),
        });
    }
    if !lp::solve_feasibility(&hrep.to_linear_system())?.is_feasible() {
        return Ok(CellShape::Empty);
    }
    let reduced = remove_redundant(hrep)?;
    let interior = lp::depth_margin(2, reduced.halfspaces(), 1.0)? > INTERIOR_TOL;
    let bounded = !reduced.is_empty() && recession_rays(&unit_rows(&reduced)).is_empty();
    Ok(shape_of_reduced(&reduced, bounded, interior))
}
