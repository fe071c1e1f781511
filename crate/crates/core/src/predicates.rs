//! Certified yes/no tests on site systems.
//!
//! Each test reduces to a cone or convex-hull membership problem on the
//! pair vectors of the system and carries the LP evidence with its answer.

use num_rational::BigRational;
use num_traits::Zero;

use crate::cell_ops::edges2d;
use crate::cell_ops::remove_redundant;
use crate::error::{Error, Result};
use crate::geom2::{self, P2};
use crate::lp::{self, FarkasCertificate, FeasibilityResult, LinearSystem, Relation, Scalar};
use crate::model::{cell_hrep, HPolyhedron, Point, SiteSystem};

/// Evidence attached to a [`PredicateReport`].
#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    /// Cone coefficients over the lifted pair vectors.
    Multipliers(FarkasCertificate),
    /// A point of the cell.
    Witness(Point),
    /// Convex coefficients over the lifted pair vectors reproducing the origin.
    ConvexCombination(Vec<f64>),
    /// Cone coefficients for each of `e_1, -e_1, ..., e_n, -e_n` in turn.
    SpanningDirections(Vec<FarkasCertificate>),
    /// A signed basis direction missing from the cone of difference vectors.
    MissingDirection(Vec<f64>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct PredicateReport {
    pub value: bool,
    pub certificate: Option<Certificate>,
    pub method: &'static str,
}

pub const METHOD_EMPTY: &str = "empty cell characterization (dual cone condition)";
pub const METHOD_BOUNDED: &str = "boundedness via cone of difference vectors";
pub const METHOD_INTERIOR: &str = "Slater condition via convex hull of lifted vectors";

/// `(0, ..., 0, -1)` of length `n + 1`.
fn emptiness_target<T: Scalar>(n: usize) -> Vec<T> {
    let mut v = vec![T::zero(); n + 1];
    v[n] = -T::one();
    v
}

fn signed_basis<T: Scalar>(n: usize) -> impl Iterator<Item = Vec<T>> {
    (0..2 * n).map(move |k| {
        let mut e = vec![T::zero(); n];
        e[k / 2] = if k % 2 == 0 { T::one() } else { -T::one() };
        e
    })
}

/// Whether the cell is empty.
///
/// Decided by cone membership of `(0_n, -1)` in the lifted pair vectors and
/// cross-checked against feasibility of the cell's inequalities; a
/// disagreement between the two is reported as ill-conditioning.
pub fn is_empty(sys: &SiteSystem) -> Result<PredicateReport> {
    let n = sys.dim();
    let cone = lp::in_cone(&emptiness_target(n), &sys.lifted_vectors())?;
    let feas = lp::solve_feasibility(&cell_hrep(sys).to_linear_system())?;
    match (cone, feas) {
        (Some(cert), FeasibilityResult::Infeasible { .. }) => Ok(PredicateReport {
            value: true,
            certificate: Some(Certificate::Multipliers(cert)),
            method: METHOD_EMPTY,
        }),
        (None, FeasibilityResult::Feasible { witness }) => Ok(PredicateReport {
            value: false,
            certificate: Some(Certificate::Witness(Point::new(witness)?)),
            method: METHOD_EMPTY,
        }),
        _ => Err(Error::NumericallyIllConditioned(
            "cone and feasibility routes disagree on emptiness".into(),
        )),
    }
}

/// Whether the cell's recession cone is trivial, i.e. `cone{t - s} = R^n`.
///
/// Only meaningful for nonempty cells; callers gate on [`is_empty`].
pub fn is_bounded(sys: &SiteSystem) -> Result<PredicateReport> {
    let diffs = sys.difference_vectors();
    let mut certs = Vec::with_capacity(2 * sys.dim());
    for e in signed_basis::<f64>(sys.dim()) {
        match lp::in_cone(&e, &diffs)? {
            Some(c) => certs.push(c),
            None => {
                return Ok(PredicateReport {
                    value: false,
                    certificate: Some(Certificate::MissingDirection(e)),
                    method: METHOD_BOUNDED,
                })
            }
        }
    }
    Ok(PredicateReport {
        value: true,
        certificate: Some(Certificate::SpanningDirections(certs)),
        method: METHOD_BOUNDED,
    })
}

/// Whether the origin of `R^{n+1}` avoids the convex hull of the lifted pair
/// vectors. This is the raw Slater-type condition: it can hold for an empty
/// cell, so callers combine it with [`is_empty`].
pub fn has_interior(sys: &SiteSystem) -> Result<PredicateReport> {
    let origin = vec![0.0; sys.dim() + 1];
    Ok(match lp::in_convex_hull(&origin, &sys.lifted_vectors())? {
        Some(c) => PredicateReport {
            value: false,
            certificate: Some(Certificate::ConvexCombination(c)),
            method: METHOD_INTERIOR,
        },
        None => PredicateReport {
            value: true,
            certificate: None,
            method: METHOD_INTERIOR,
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CardinalityVerdict {
    EmptyOrUnbounded,
}

/// `EmptyOrUnbounded` when `|T| < 2 sqrt(n + 1)`, tested as `|T|^2 < 4(n + 1)`.
pub fn cardinality_precheck(sys: &SiteSystem) -> Option<CardinalityVerdict> {
    let t = sys.len();
    (t * t < 4 * (sys.dim() + 1)).then_some(CardinalityVerdict::EmptyOrUnbounded)
}

/// Tolerance on the "no site of `T \ S` inside the ball" check.
pub const BALL_TOL: f64 = 1e-9;

/// A closed ball containing `S` whose interior misses `T \ S`, centered at a
/// point of the cell. `None` when the cell is empty.
pub fn ball_witness(sys: &SiteSystem) -> Result<Option<(Point, f64)>> {
    let report = is_empty(sys)?;
    let center = match report.certificate {
        Some(Certificate::Witness(p)) if !report.value => p,
        _ => return Ok(None),
    };
    let radius = sys
        .s_sites()
        .map(|s| s.point.dist(&center))
        .fold(0.0, f64::max);
    for t in sys.t_sites() {
        if t.point.dist(&center) < radius - BALL_TOL * (1.0 + radius) {
            return Err(Error::NumericallyIllConditioned(format!(
                "site `{}` lies inside the witness ball",
                t.label
            )));
        }
    }
    Ok(Some((center, radius)))
}

/// Determinants at or below this magnitude count as collinear.
pub const ORIENT_TOL: f64 = 1e-12;

fn orient_sign(a: P2, b: P2, c: P2) -> i8 {
    let d = geom2::orient(a, b, c);
    if d > ORIENT_TOL {
        1
    } else if d < -ORIENT_TOL {
        -1
    } else {
        0
    }
}

fn planar(p: &Point) -> Result<P2> {
    match p.coords() {
        &[x, y] => Ok([x, y]),
        c => Err(Error::DimensionMismatch {
            expected: 2,
            found: c.len(),
        }),
    }
}

/// Whether the open segments `(s1, s2)` and `(t1, t2)` meet in exactly one
/// point. Touching endpoints and collinear overlaps do not count.
pub fn segments_cross(s1: &Point, s2: &Point, t1: &Point, t2: &Point) -> Result<bool> {
    let (s1, s2, t1, t2) = (planar(s1)?, planar(s2)?, planar(t1)?, planar(t2)?);
    let d1 = orient_sign(t1, t2, s1);
    let d2 = orient_sign(t1, t2, s2);
    let d3 = orient_sign(s1, s2, t1);
    let d4 = orient_sign(s1, s2, t2);
    Ok(d1 * d2 < 0 && d3 * d4 < 0)
}

/// Whether `inner` lies inside `outer`, i.e. every row of `outer` is implied
/// by the rows of `inner`.
pub fn contains(outer: &HPolyhedron, inner: &HPolyhedron) -> Result<bool> {
    if outer.dim() != inner.dim() {
        return Err(Error::DimensionMismatch {
            expected: outer.dim(),
            found: inner.dim(),
        });
    }
    if !lp::solve_feasibility(&inner.to_linear_system())?.is_feasible() {
        return Err(Error::InfeasibleBase);
    }
    for h in outer.halfspaces() {
        if !lp::implied(h, inner.halfspaces())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Relative tolerance for "the bisector crosses an edge strictly inside".
pub const FACET_TOL: f64 = 1e-9;

/// For a planar system with `|S| = 2` and nonempty interior: whether the
/// bisector line of the two `S` sites avoids the relative interior of every
/// edge of the cell.
pub fn facet_bisector_check(sys: &SiteSystem) -> Result<bool> {
    if sys.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: sys.dim(),
        });
    }
    let s: Vec<P2> = sys
        .s_sites()
        .map(|s| planar(&s.point))
        .collect::<Result<_>>()?;
    if s.len() != 2 {
        return Err(Error::PreconditionViolated(
            "need exactly two S sites".into(),
        ));
    }
    if is_empty(sys)?.value || !has_interior(sys)?.value {
        return Err(Error::PreconditionViolated(
            "cell has empty interior".into(),
        ));
    }
    let h_normal = geom2::sub(s[0], s[1]);
    let h_offset = 0.5 * (geom2::dot(s[0], s[0]) - geom2::dot(s[1], s[1]));
    let h_len = geom2::norm(h_normal);
    let reduced = remove_redundant(&cell_hrep(sys))?;
    for edge in edges2d(&reduced) {
        let u = edge.direction;
        let along = geom2::dot(h_normal, u) / h_len;
        let at_point = (geom2::dot(h_normal, edge.point) - h_offset) / h_len;
        if along.abs() <= FACET_TOL {
            if at_point.abs() <= FACET_TOL {
                return Ok(false);
            }
            continue;
        }
        let lam = -at_point / along;
        let scale = 1.0 + lam.abs();
        let inside_lo = edge.lo == f64::NEG_INFINITY || lam > edge.lo + FACET_TOL * scale;
        let inside_hi = edge.hi == f64::INFINITY || lam < edge.hi - FACET_TOL * scale;
        if inside_lo && inside_hi {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A site system with exact rational coordinates, for the exact LP mode.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalSites {
    pub dim: usize,
    pub s: Vec<Vec<BigRational>>,
    pub others: Vec<Vec<BigRational>>,
}

impl RationalSites {
    pub fn new(s: Vec<Vec<BigRational>>, others: Vec<Vec<BigRational>>) -> Result<Self> {
        let dim = s.first().map_or(0, Vec::len);
        if dim == 0 || others.is_empty() {
            return Err(Error::InvalidSubset("need nonempty S and T \\ S".into()));
        }
        if let Some(p) = s.iter().chain(&others).find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.len(),
            });
        }
        Ok(RationalSites { dim, s, others })
    }

    /// Exact image of a floating-point system.
    pub fn from_system(sys: &SiteSystem) -> Self {
        let conv = |p: &Point| -> Vec<BigRational> {
            p.coords()
                .iter()
                .map(|&c| BigRational::from_f64_exact(c))
                .collect()
        };
        RationalSites {
            dim: sys.dim(),
            s: sys.s_sites().map(|s| conv(&s.point)).collect(),
            others: sys.t_sites().map(|t| conv(&t.point)).collect(),
        }
    }

    fn norm_sq(p: &[BigRational]) -> BigRational {
        p.iter().fold(BigRational::zero(), |a, v| a + v * v)
    }

    pub fn difference_vectors(&self) -> Vec<Vec<BigRational>> {
        let mut out = Vec::new();
        for s in &self.s {
            for t in &self.others {
                out.push(t.iter().zip(s).map(|(a, b)| a - b).collect());
            }
        }
        out
    }

    pub fn lifted_vectors(&self) -> Vec<Vec<BigRational>> {
        let mut out = Vec::new();
        for s in &self.s {
            for t in &self.others {
                let mut v: Vec<BigRational> = t.iter().zip(s).map(|(a, b)| a - b).collect();
                v.push(Self::norm_sq(t) - Self::norm_sq(s));
                out.push(v);
            }
        }
        out
    }

    /// Cell inequalities `<t - s, x> <= (|t|^2 - |s|^2) / 2`, `S`-major.
    pub fn linear_system(&self) -> LinearSystem<BigRational> {
        let half = lp::ratio(1, 2);
        let mut sys = LinearSystem::new(self.dim);
        for s in &self.s {
            for t in &self.others {
                let a = t.iter().zip(s).map(|(x, y)| x - y).collect();
                let b = (Self::norm_sq(t) - Self::norm_sq(s)) * half.clone();
                sys.push(a, Relation::Le, b).expect("consistent dimension");
            }
        }
        sys
    }
}

/// Exact counterpart of [`PredicateReport`].
#[derive(Clone, Debug, PartialEq)]
pub struct ExactReport {
    pub value: bool,
    pub multipliers: Option<Vec<BigRational>>,
    pub witness: Option<Vec<BigRational>>,
    pub method: &'static str,
}

pub fn is_empty_exact(sys: &RationalSites) -> Result<ExactReport> {
    let cone = lp::in_cone_exact(&emptiness_target(sys.dim), &sys.lifted_vectors())?;
    let feas = lp::solve_feasibility_exact(&sys.linear_system())?;
    match (cone, feas) {
        (Some(cert), FeasibilityResult::Infeasible { .. }) => Ok(ExactReport {
            value: true,
            multipliers: Some(cert.multipliers().to_vec()),
            witness: None,
            method: METHOD_EMPTY,
        }),
        (None, FeasibilityResult::Feasible { witness }) => Ok(ExactReport {
            value: false,
            multipliers: None,
            witness: Some(witness),
            method: METHOD_EMPTY,
        }),
        _ => Err(Error::NumericallyIllConditioned(
            "exact routes disagree on emptiness".into(),
        )),
    }
}

pub fn is_bounded_exact(sys: &RationalSites) -> Result<ExactReport> {
    let diffs = sys.difference_vectors();
    for e in signed_basis::<BigRational>(sys.dim) {
        if lp::in_cone_exact(&e, &diffs)?.is_none() {
            return Ok(ExactReport {
                value: false,
                multipliers: None,
                witness: Some(e),
                method: METHOD_BOUNDED,
            });
        }
    }
    Ok(ExactReport {
        value: true,
        multipliers: None,
        witness: None,
        method: METHOD_BOUNDED,
    })
}

pub fn has_interior_exact(sys: &RationalSites) -> Result<ExactReport> {
    let origin = vec![BigRational::zero(); sys.dim + 1];
    let hull = lp::in_convex_hull_exact(&origin, &sys.lifted_vectors())?;
    Ok(ExactReport {
        value: hull.is_none(),
        multipliers: hull,
        witness: None,
        method: METHOD_INTERIOR,
    })
}

/// Exact cone test `(0, -1)` with certificate reconstruction, exposed for
/// callers that want the combination itself.
pub fn exact_emptiness_combination(sys: &RationalSites) -> Result<Option<Vec<BigRational>>> {
    let gens = sys.lifted_vectors();
    Ok(lp::in_cone_exact(&emptiness_target(sys.dim), &gens)?.map(|c| c.reconstruct(&gens)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::construct_quadrilateral;
    use crate::model::tests::{midpoint_between, square_corners};

    #[test]
    fn midpoint_between_is_empty_with_half_multipliers() {
        let r = is_empty(&midpoint_between()).unwrap();
        assert!(r.value);
        let Some(Certificate::Multipliers(c)) = r.certificate else {
            panic!("expected multipliers");
        };
        for m in c.multipliers() {
            assert!((m - 0.5).abs() < 1e-12);
        }
        let back = c.reconstruct(&midpoint_between().lifted_vectors());
        assert_eq!(back.len(), 3);
        assert!(back[0].abs() < 1e-12 && back[1].abs() < 1e-12);
        assert!((back[2] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn midpoint_between_exact() {
        let r = is_empty_exact(&RationalSites::from_system(&midpoint_between())).unwrap();
        assert!(r.value);
        assert_eq!(
            r.multipliers.unwrap(),
            vec![lp::ratio(1, 2), lp::ratio(1, 2)]
        );
        let combo = exact_emptiness_combination(&RationalSites::from_system(&midpoint_between()))
            .unwrap()
            .unwrap();
        assert_eq!(
            combo,
            vec![lp::ratio(0, 1), lp::ratio(0, 1), lp::ratio(-1, 1)]
        );
    }

    #[test]
    fn square_corners_predicates() {
        let sys = square_corners();
        let e = is_empty(&sys).unwrap();
        assert!(!e.value);
        let Some(Certificate::Witness(w)) = e.certificate else {
            panic!("expected witness");
        };
        assert!(w.dist(&Point::xy(0.5, 0.5)) < 1e-9);
        assert!(is_bounded(&sys).unwrap().value);
        let int = has_interior(&sys).unwrap();
        assert!(!int.value);
        let Some(Certificate::ConvexCombination(c)) = int.certificate else {
            panic!("expected convex combination");
        };
        assert!((c.iter().sum::<f64>() - 1.0).abs() < 1e-12);

        let exact = RationalSites::from_system(&sys);
        assert!(!is_empty_exact(&exact).unwrap().value);
        assert!(is_bounded_exact(&exact).unwrap().value);
        assert!(!has_interior_exact(&exact).unwrap().value);
    }

    #[test]
    fn halfplane_is_unbounded() {
        let sys = SiteSystem::from_points(&[Point::xy(0.0, 0.0)], &[Point::xy(1.0, 0.0)]).unwrap();
        let r = is_bounded(&sys).unwrap();
        assert!(!r.value);
        assert!(matches!(
            r.certificate,
            Some(Certificate::MissingDirection(_))
        ));
        assert!(has_interior(&sys).unwrap().value);
        assert_eq!(
            cardinality_precheck(&sys),
            Some(CardinalityVerdict::EmptyOrUnbounded)
        );
        assert_eq!(cardinality_precheck(&square_corners()), None);
    }

    #[test]
    fn ball_around_square_corners() {
        let (c, r) = ball_witness(&square_corners()).unwrap().unwrap();
        assert!(c.dist(&Point::xy(0.5, 0.5)) < 1e-9);
        assert!((r - 0.5f64.sqrt()).abs() < 1e-9);
        assert!(ball_witness(&midpoint_between()).unwrap().is_none());
    }

    #[test]
    fn crossing_segments() {
        let p = Point::xy;
        let cross = |a, b, c, d| segments_cross(&a, &b, &c, &d).unwrap();
        assert!(cross(p(0.0, 0.0), p(1.0, 1.0), p(1.0, 0.0), p(0.0, 1.0)));
        assert!(!cross(p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0), p(1.0, 1.0)));
        // Touching at an endpoint does not count.
        assert!(!cross(p(0.0, 0.0), p(2.0, 0.0), p(1.0, 0.0), p(1.0, 1.0)));
        assert!(!cross(p(0.0, 0.0), p(2.0, 0.0), p(1.0, 0.0), p(3.0, 0.0)));
    }

    #[test]
    fn containment() {
        let unit = HPolyhedron::from_rows(2, &[(&[1.0, 0.0], 1.0), (&[0.0, 1.0], 1.0)]);
        let square = HPolyhedron::from_rows(
            2,
            &[
                (&[1.0, 0.0], 0.5),
                (&[-1.0, 0.0], 0.0),
                (&[0.0, 1.0], 0.5),
                (&[0.0, -1.0], 0.0),
            ],
        );
        assert!(contains(&unit, &square).unwrap());
        assert!(!contains(&square, &unit).unwrap());
        let empty = HPolyhedron::from_rows(2, &[(&[1.0, 0.0], -1.0), (&[-1.0, 0.0], -1.0)]);
        assert_eq!(contains(&unit, &empty), Err(Error::InfeasibleBase));
    }

    #[test]
    fn kite_bisector_avoids_edges() {
        let sys =
            construct_quadrilateral([[0.0, 0.0], [2.0, 1.0], [4.0, 0.0], [2.0, -2.0]]).unwrap();
        assert!(facet_bisector_check(&sys).unwrap());
        assert!(matches!(
            facet_bisector_check(&square_corners()),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
