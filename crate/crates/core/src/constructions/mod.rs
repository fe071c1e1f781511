//! Site systems realizing prescribed planar cells, and refusals for shapes
//! no system with two sites in `S` and four in total can produce.

mod planar;
mod target;

use std::fmt;

use crate::cell_ops::{classify_hrep, CellShape};
use crate::error::{Error, Result};
use crate::geom2;
use crate::model::{HPolyhedron, Point, SiteSystem};

pub use planar::{
    construct_quadrilateral, construct_unbounded_quad_general, construct_unbounded_quad_parallel,
    construct_unbounded_three, ANGLE_MARGIN, INITIAL_EPSILON, MAX_EPSILON_RETRIES, ROUND_TRIP_TOL,
};
pub use target::{chain_hrep, polygon_hrep, TargetShape, UNIT_TOL};

use target::check_unit;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ImpossibilityKind {
    Triangle,
    CyclicQuadrilateral,
    OneDimensional,
    ParallelSidedTwoVertexUnbounded,
}

/// Why a target shape cannot be a cell `V_T(S)` with `|S| = 2`, `|T| = 4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImpossibilityReason {
    pub kind: ImpossibilityKind,
    pub citation: &'static str,
}

impl ImpossibilityReason {
    pub fn new(kind: ImpossibilityKind) -> Self {
        let citation = match kind {
            ImpossibilityKind::Triangle => {
                "a cell with two sites in S and four in total is not a triangle"
            }
            ImpossibilityKind::CyclicQuadrilateral => {
                "a bounded cell with two sites in S and four in total is not a cyclic quadrilateral"
            }
            ImpossibilityKind::OneDimensional => {
                "a cell with two sites in S and four in total is not one-dimensional"
            }
            ImpossibilityKind::ParallelSidedTwoVertexUnbounded => {
                "a cell with two sites in S and four in total is not an unbounded polygon with parallel sides and just two vertices"
            }
        };
        ImpossibilityReason { kind, citation }
    }
}

impl fmt::Display for ImpossibilityReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.citation)
    }
}

fn add_scaled(base: &[f64], d: &[f64], k: f64) -> Vec<f64> {
    base.iter().zip(d).map(|(b, v)| b + k * v).collect()
}

fn points(coords: Vec<Vec<f64>>) -> Result<Vec<Point>> {
    coords.into_iter().map(Point::new).collect()
}

/// Four sites at the corners of the square of half-width 1/2 centered at
/// `c`, with `S` on the diagonal through `c + (-h, -h)`. The cell is `{c}`.
pub fn construct_singleton(c: &Point) -> Result<SiteSystem> {
    let [x, y] = match c.coords() {
        &[x, y] => [x, y],
        other => {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: other.len(),
            })
        }
    };
    let h = 0.5;
    SiteSystem::from_points(
        &[Point::xy(x - h, y - h), Point::xy(x + h, y + h)],
        &[Point::xy(x + h, y - h), Point::xy(x - h, y + h)],
    )
}

/// `sigma` sites in `S` and `tau` in total, all on the line through the
/// origin along `d`, whose cell is `{x : <d, x> <= gamma}`.
pub fn construct_halfspace(d: &[f64], gamma: f64, sigma: usize, tau: usize) -> Result<SiteSystem> {
    check_unit(d)?;
    if sigma == 0 || tau <= sigma {
        return Err(Error::PreconditionViolated(format!(
            "need 1 <= sigma < tau, got sigma = {sigma}, tau = {tau}"
        )));
    }
    let x0: Vec<f64> = d.iter().map(|v| gamma * v).collect();
    let m = sigma - 1;
    let p = tau - sigma - 1;
    let mut s = vec![add_scaled(&x0, d, -1.0)];
    for i in 1..=m {
        s.push(add_scaled(&x0, d, -(i as f64) / (m as f64 + 1.0)));
    }
    let mut t = vec![add_scaled(&x0, d, 1.0)];
    for j in 1..=p {
        t.push(add_scaled(&x0, d, 1.0 + j as f64));
    }
    SiteSystem::from_points(&points(s)?, &points(t)?)
}

/// Four collinear sites whose cell is the strip `alpha <= <d, x> <= beta`.
pub fn construct_strip(d: &[f64], alpha: f64, beta: f64) -> Result<SiteSystem> {
    check_unit(d)?;
    if alpha.is_nan() || beta.is_nan() || beta - alpha < 1e-12 {
        return Err(Error::DegenerateStrip);
    }
    let at = |k: f64| d.iter().map(|v| k * v).collect::<Vec<f64>>();
    let s = vec![at((3.0 * alpha + beta) / 4.0), at((alpha + beta) / 2.0)];
    let t = vec![
        at((3.0 * alpha - beta) / 2.0),
        at((7.0 * beta - 3.0 * alpha) / 4.0),
    ];
    SiteSystem::from_points(&points(s)?, &points(t)?)
}

/// Apex of the wedge `<v_i, x> <= b_i` inside `span{v1, v2}`.
fn wedge_apex(v1: &[f64], v2: &[f64], b1: f64, b2: f64) -> Result<Vec<f64>> {
    let beta: f64 = v1.iter().zip(v2).map(|(a, b)| a * b).sum();
    let det = 1.0 - beta * beta;
    if det < 1e-10 {
        return Err(Error::ParallelNormals);
    }
    let a = (b1 - beta * b2) / det;
    let b = (b2 - beta * b1) / det;
    Ok(v1.iter().zip(v2).map(|(x, y)| a * x + b * y).collect())
}

/// Two `S` sites and two other sites whose cell is the wedge
/// `{x : <v1, x> <= b1, <v2, x> <= b2}`.
///
/// The sites are `-v_i - 2 v_j` and `-v_i + 2(1 + <v1, v2>) v_j`, all at
/// squared distance `5 + 4 <v1, v2>` from the apex, shifted to the apex.
pub fn construct_wedge(v1: &[f64], v2: &[f64], b1: f64, b2: f64) -> Result<SiteSystem> {
    check_unit(v1)?;
    check_unit(v2)?;
    if v1.len() != v2.len() {
        return Err(Error::DimensionMismatch {
            expected: v1.len(),
            found: v2.len(),
        });
    }
    let apex = wedge_apex(v1, v2, b1, b2)?;
    let beta: f64 = v1.iter().zip(v2).map(|(a, b)| a * b).sum();
    let combo = |a: f64, x: &[f64], b: f64, y: &[f64]| -> Vec<f64> {
        x.iter().zip(y).map(|(p, q)| a * p + b * q).collect()
    };
    let s = [combo(-1.0, v1, -2.0, v2), combo(-1.0, v2, -2.0, v1)];
    let t = [
        combo(-1.0, v1, 2.0 * (1.0 + beta), v2),
        combo(-1.0, v2, 2.0 * (1.0 + beta), v1),
    ];
    let expected = 5.0 + 4.0 * beta;
    for p in s.iter().chain(&t) {
        let sq: f64 = p.iter().map(|v| v * v).sum();
        if (sq - expected).abs() > 1e-9 * expected.max(1.0) {
            return Err(Error::ConstructionFailed(format!(
                "wedge site at squared distance {sq}, expected {expected}"
            )));
        }
    }
    let shift = |p: &Vec<f64>| add_scaled(p, &apex, 1.0);
    SiteSystem::from_points(
        &points(s.iter().map(shift).collect())?,
        &points(t.iter().map(shift).collect())?,
    )
}

/// Sites of the first example system, whose cell is empty.
pub fn construct_empty() -> SiteSystem {
    SiteSystem::from_points(
        &[Point::xy(-1.0, 0.0), Point::xy(1.0, 0.0)],
        &[Point::xy(0.0, 0.0)],
    )
    .expect("distinct sites")
}

/// What to realize: a parametrized shape or raw planar inequalities.
#[derive(Clone, Debug, PartialEq)]
pub enum Target {
    Shape(TargetShape),
    HRep(HPolyhedron),
}

/// Result of [`construct`]: sites realizing the target, or a proof-backed refusal.
#[derive(Clone, Debug, PartialEq)]
pub enum Construction {
    Sites(SiteSystem),
    Impossible(ImpossibilityReason),
}

impl Construction {
    pub fn sites(&self) -> Option<&SiteSystem> {
        match self {
            Construction::Sites(s) => Some(s),
            Construction::Impossible(_) => None,
        }
    }
}

fn refuse(kind: ImpossibilityKind) -> Result<Construction> {
    Ok(Construction::Impossible(ImpossibilityReason::new(kind)))
}

fn lift(r: Result<SiteSystem>) -> Result<Construction> {
    match r {
        Ok(sys) => Ok(Construction::Sites(sys)),
        Err(Error::CyclicInput(reason)) | Err(Error::ParallelUnboundedSides(reason)) => {
            Ok(Construction::Impossible(reason))
        }
        Err(e) => Err(e),
    }
}

fn build_shape(shape: &TargetShape) -> Result<SiteSystem> {
    match shape {
        TargetShape::Singleton { center } => construct_singleton(center),
        TargetShape::Halfspace {
            d,
            gamma,
            sigma,
            tau,
        } => construct_halfspace(d, *gamma, *sigma, *tau),
        TargetShape::Strip { d, alpha, beta } => construct_strip(d, *alpha, *beta),
        TargetShape::Wedge { v1, v2, b1, b2 } => construct_wedge(v1, v2, *b1, *b2),
        TargetShape::NonCyclicQuadrilateral { vertices } => construct_quadrilateral(*vertices),
        TargetShape::UnboundedThreeSide { vertices, rays } => {
            construct_unbounded_three(vertices[0], vertices[1], rays[0], rays[1])
        }
        TargetShape::UnboundedQuadParallel { vertices, rays } => {
            construct_unbounded_quad_parallel(vertices[1], vertices[0], vertices[2], *rays)
        }
        TargetShape::UnboundedQuadGeneral { vertices, rays } => {
            construct_unbounded_quad_general(vertices[0], vertices[1], vertices[2], *rays)
        }
    }
}

/// Unit normal and offset of a halfspace.
fn unit_row(h: &crate::model::Halfspace) -> (Vec<f64>, f64) {
    let u = h.normalized();
    (u.normal().to_vec(), u.offset())
}

/// Realizes `target` or explains why no site system can.
///
/// Raw inequalities are classified first and dispatched by shape: empty
/// targets reuse the first example's sites, halfplanes use two `S` sites of
/// four, and triangles, cyclic quadrilaterals, one-dimensional sets and
/// two-vertex unbounded polygons with parallel sides are refused.
pub fn construct(target: &Target) -> Result<Construction> {
    let hrep = match target {
        Target::Shape(shape) => return lift(build_shape(shape)),
        Target::HRep(h) => h,
    };
    match classify_hrep(hrep)? {
        CellShape::Empty => Ok(Construction::Sites(construct_empty())),
        CellShape::Singleton { point } => lift(construct_singleton(&Point::xy(point[0], point[1]))),
        CellShape::OneDimensional { .. } => refuse(ImpossibilityKind::OneDimensional),
        CellShape::Halfplane { halfspace } => {
            let (d, gamma) = unit_row(&halfspace);
            lift(construct_halfspace(&d, gamma, 2, 4))
        }
        CellShape::Strip { halfspaces, .. } => {
            let (d, beta) = unit_row(&halfspaces[0]);
            let (_, neg_alpha) = unit_row(&halfspaces[1]);
            lift(construct_strip(&d, -neg_alpha, beta))
        }
        CellShape::Wedge { .. } => {
            let reduced = crate::cell_ops::remove_redundant(hrep)?;
            let (v1, b1) = unit_row(&reduced.halfspaces()[0]);
            let (v2, b2) = unit_row(&reduced.halfspaces()[1]);
            lift(construct_wedge(&v1, &v2, b1, b2))
        }
        CellShape::Triangle { .. } => refuse(ImpossibilityKind::Triangle),
        CellShape::BoundedQuadrilateral {
            vertices, cyclic, ..
        } => {
            if cyclic {
                return refuse(ImpossibilityKind::CyclicQuadrilateral);
            }
            lift(construct_quadrilateral([
                vertices[0],
                vertices[1],
                vertices[2],
                vertices[3],
            ]))
        }
        CellShape::UnboundedThreeSide {
            vertices,
            rays,
            parallel_unbounded_sides,
        } => {
            if parallel_unbounded_sides {
                return refuse(ImpossibilityKind::ParallelSidedTwoVertexUnbounded);
            }
            lift(construct_unbounded_three(
                vertices[0],
                vertices[1],
                rays[0],
                rays[1],
            ))
        }
        CellShape::UnboundedQuadrilateral {
            vertices,
            rays,
            parallel_unbounded_sides,
        } => {
            if parallel_unbounded_sides {
                lift(construct_unbounded_quad_parallel(
                    vertices[1],
                    vertices[0],
                    vertices[2],
                    rays,
                ))
            } else {
                lift(construct_unbounded_quad_general(
                    vertices[0],
                    vertices[1],
                    vertices[2],
                    rays,
                ))
            }
        }
        CellShape::OtherPolygon { vertices, .. } => Err(Error::UnrecognizedShape(format!(
            "{} irredundant sides and {} vertices",
            crate::cell_ops::remove_redundant(hrep)?.len(),
            vertices.len()
        ))),
    }
}

/// Planar distance helper for tests and callers comparing vertex sets.
pub fn same_vertex_set(a: &[geom2::P2], b: &[geom2::P2], tol: f64) -> bool {
    a.len() == b.len()
        && a.iter()
            .all(|p| b.iter().any(|q| geom2::dist(*p, *q) <= tol))
        && b.iter()
            .all(|p| a.iter().any(|q| geom2::dist(*p, *q) <= tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cell_ops::{classify2d, remove_redundant, ShapeTag};
    use crate::model::cell_hrep;
    use crate::predicates::contains;

    fn coords(sys: &SiteSystem) -> Vec<Vec<f64>> {
        sys.sites()
            .iter()
            .map(|s| s.point.coords().to_vec())
            .collect()
    }

    #[test]
    fn singleton_reproduces_square_corners() {
        let sys = construct_singleton(&Point::xy(0.5, 0.5)).unwrap();
        assert_eq!(
            coords(&sys),
            vec![
                vec![0.0, 0.0],
                vec![1.0, 1.0],
                vec![1.0, 0.0],
                vec![0.0, 1.0]
            ]
        );
        let origin = construct_singleton(&Point::xy(0.0, 0.0)).unwrap();
        assert_eq!(
            classify2d(&origin).unwrap(),
            CellShape::Singleton { point: [0.0, 0.0] }
        );
    }

    #[test]
    fn halfspace_sites() {
        let sys = construct_halfspace(&[0.0, 1.0], 0.0, 2, 3).unwrap();
        assert_eq!(
            coords(&sys),
            vec![vec![0.0, -1.0], vec![0.0, -0.5], vec![0.0, 1.0]]
        );
        let reduced = remove_redundant(&cell_hrep(&sys)).unwrap();
        assert_eq!(reduced.len(), 1);
        let target = HPolyhedron::from_rows(2, &[(&[0.0, 1.0], 0.0)]);
        assert!(contains(&target, &reduced).unwrap() && contains(&reduced, &target).unwrap());
        let wide = construct_halfspace(&[0.0, 1.0], 0.0, 2, 4).unwrap();
        assert_eq!(classify2d(&wide).unwrap().tag(), ShapeTag::Halfplane);
        assert!(construct_halfspace(&[0.0, 2.0], 0.0, 1, 2).is_err());
    }

    #[test]
    fn strip_sites() {
        let sys = construct_strip(&[1.0, 0.0], 0.0, 1.0).unwrap();
        assert_eq!(
            coords(&sys),
            vec![
                vec![0.25, 0.0],
                vec![0.5, 0.0],
                vec![-0.5, 0.0],
                vec![1.75, 0.0]
            ]
        );
        assert_eq!(
            construct_strip(&[1.0, 0.0], 1.0, 1.0),
            Err(Error::DegenerateStrip)
        );
        let sym = construct_strip(&[0.0, 1.0], -1.0, 1.0).unwrap();
        let reduced = remove_redundant(&cell_hrep(&sym)).unwrap();
        let target = HPolyhedron::from_rows(2, &[(&[0.0, 1.0], 1.0), (&[0.0, -1.0], 1.0)]);
        assert!(contains(&target, &reduced).unwrap() && contains(&reduced, &target).unwrap());
    }

    #[test]
    fn wedge_sites() {
        let sys = construct_wedge(&[1.0, 0.0], &[0.0, 1.0], 0.0, 0.0).unwrap();
        assert_eq!(
            coords(&sys),
            vec![
                vec![-1.0, -2.0],
                vec![-2.0, -1.0],
                vec![-1.0, 2.0],
                vec![2.0, -1.0]
            ]
        );
        let moved = construct_wedge(&[1.0, 0.0], &[0.0, 1.0], 1.0, 1.0).unwrap();
        match classify2d(&moved).unwrap() {
            CellShape::Wedge { apex, .. } => assert!(geom2::dist(apex, [1.0, 1.0]) < 1e-12),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            construct_wedge(&[1.0, 0.0], &[1.0, 0.0], 0.0, 0.0),
            Err(Error::ParallelNormals)
        );
    }

    #[test]
    fn dispatch_refuses_triangles() {
        let tri = HPolyhedron::from_rows(
            2,
            &[(&[-1.0, 0.0], 0.0), (&[0.0, -1.0], 0.0), (&[1.0, 1.0], 1.0)],
        );
        match construct(&Target::HRep(tri)).unwrap() {
            Construction::Impossible(r) => {
                assert_eq!(r.kind, ImpossibilityKind::Triangle);
                assert!(r.citation.contains("is not a triangle"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn dispatch_strip() {
        let strip = HPolyhedron::from_rows(2, &[(&[1.0, 0.0], 1.0), (&[-1.0, 0.0], 0.0)]);
        let sys = construct(&Target::HRep(strip)).unwrap();
        let sys = sys.sites().unwrap();
        assert_eq!(coords(sys)[0], vec![0.25, 0.0]);
        assert_eq!(classify2d(sys).unwrap().tag(), ShapeTag::Strip);
    }

    #[test]
    fn dispatch_cyclic_square() {
        let sq = polygon_hrep(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]).unwrap();
        match construct(&Target::HRep(sq)).unwrap() {
            Construction::Impossible(r) => {
                assert_eq!(r.kind, ImpossibilityKind::CyclicQuadrilateral)
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
