//! Sites, site systems and their translation into linear inequalities.
//!
//! A cell `V_T(S)` is the set of points that are no farther from every site of
//! `S` than from every site of `T \ S`. Each pair `(s, t)` contributes the
//! halfspace `<t - s, x> <= (|t|^2 - |s|^2) / 2`, and the cell is the
//! intersection of all `|S| (|T| - |S|)` of them.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::lp::{LinearSystem, Relation};

/// Squared distances below this trigger a near-duplicate warning.
pub const NEAR_DUPLICATE_SQ: f64 = 1e-18;

/// A point of `R^n` with finite coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Point(coords))
    }

    /// Planar point. Panics on non-finite input.
    pub fn xy(x: f64, y: f64) -> Self {
        Point::new(vec![x, y]).expect("finite planar coordinates")
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![0.0; dim.max(1)])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.0
    }

    pub fn norm_sq(&self) -> f64 {
        dot(&self.0, &self.0)
    }

    pub fn dist_sq(&self, other: &Point) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b) * (a - b))
            .sum()
    }

    pub fn dist(&self, other: &Point) -> f64 {
        self.dist_sq(other).sqrt()
    }

    fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: self.dim(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// A labeled site.
#[derive(Clone, Debug, PartialEq)]
pub struct Site {
    pub label: String,
    pub point: Point,
}

impl Site {
    pub fn new(label: impl Into<String>, point: Point) -> Self {
        Site {
            label: label.into(),
            point,
        }
    }
}

/// The pair `(T, S)`: labeled sites and a nonempty proper subset of them.
#[derive(Clone, Debug, PartialEq)]
pub struct SiteSystem {
    dim: usize,
    sites: Vec<Site>,
    in_s: Vec<bool>,
}

impl SiteSystem {
    /// Validates dimensions, label uniqueness, exact pairwise distinctness and
    /// that `s_labels` names a nonempty proper subset.
    pub fn new<I, L>(sites: Vec<Site>, s_labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = L>,
        L: AsRef<str>,
    {
        let Some(first) = sites.first() else {
            return Err(Error::InvalidSubset("no sites".into()));
        };
        let dim = first.point.dim();
        let mut labels = BTreeSet::new();
        for site in &sites {
            site.point.check_dim(dim)?;
            if !labels.insert(site.label.as_str()) {
                return Err(Error::DuplicateLabel(site.label.clone()));
            }
        }
        let wanted: BTreeSet<String> = s_labels
            .into_iter()
            .map(|l| l.as_ref().to_string())
            .collect();
        if let Some(missing) = wanted.iter().find(|l| !labels.contains(l.as_str())) {
            return Err(Error::InvalidSubset(format!("unknown label `{missing}`")));
        }
        if wanted.is_empty() {
            return Err(Error::InvalidSubset("S is empty".into()));
        }
        if wanted.len() == sites.len() {
            return Err(Error::InvalidSubset("S must be a proper subset".into()));
        }

        let mut min_sq = f64::INFINITY;
        for (i, a) in sites.iter().enumerate() {
            for b in &sites[i + 1..] {
                if a.point == b.point {
                    return Err(Error::DuplicateSite(a.label.clone(), b.label.clone()));
                }
                min_sq = min_sq.min(a.point.dist_sq(&b.point));
            }
        }
        if min_sq < NEAR_DUPLICATE_SQ {
            log::warn!("sites are nearly coincident (min squared distance {min_sq:e})");
        }

        let in_s = sites.iter().map(|s| wanted.contains(&s.label)).collect();
        Ok(SiteSystem { dim, sites, in_s })
    }

    /// Builds a system from unlabeled points; `S` sites are labeled `s1, s2, ...`
    /// and the others `t1, t2, ...`.
    pub fn from_points(s: &[Point], others: &[Point]) -> Result<Self> {
        let mut sites = Vec::with_capacity(s.len() + others.len());
        let mut s_labels = Vec::with_capacity(s.len());
        for (i, p) in s.iter().enumerate() {
            let label = format!("s{}", i + 1);
            s_labels.push(label.clone());
            sites.push(Site::new(label, p.clone()));
        }
        for (i, p) in others.iter().enumerate() {
            sites.push(Site::new(format!("t{}", i + 1), p.clone()));
        }
        SiteSystem::new(sites, s_labels)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn is_in_s(&self, label: &str) -> bool {
        self.sites
            .iter()
            .zip(&self.in_s)
            .any(|(s, &flag)| flag && s.label == label)
    }

    /// Sites of `S`, in input order.
    pub fn s_sites(&self) -> impl Iterator<Item = &Site> {
        self.sites
            .iter()
            .zip(&self.in_s)
            .filter_map(|(s, &flag)| flag.then_some(s))
    }

    /// Sites of `T \ S`, in input order.
    pub fn t_sites(&self) -> impl Iterator<Item = &Site> {
        self.sites
            .iter()
            .zip(&self.in_s)
            .filter_map(|(s, &flag)| (!flag).then_some(s))
    }

    pub fn s_labels(&self) -> Vec<&str> {
        self.s_sites().map(|s| s.label.as_str()).collect()
    }

    pub fn s_count(&self) -> usize {
        self.in_s.iter().filter(|&&f| f).count()
    }

    pub fn t_count(&self) -> usize {
        self.sites.len()
    }

    /// Lifted pair vectors `(t - s, |t|^2 - |s|^2)` in `cell_hrep` row order.
    pub fn lifted_vectors(&self) -> Vec<Vec<f64>> {
        let mut out = Vec::with_capacity(self.s_count() * (self.len() - self.s_count()));
        for s in self.s_sites() {
            for t in self.t_sites() {
                let mut v: Vec<f64> = t
                    .point
                    .coords()
                    .iter()
                    .zip(s.point.coords())
                    .map(|(a, b)| a - b)
                    .collect();
                v.push(t.point.norm_sq() - s.point.norm_sq());
                out.push(v);
            }
        }
        out
    }

    /// Difference vectors `t - s` in `cell_hrep` row order.
    pub fn difference_vectors(&self) -> Vec<Vec<f64>> {
        let mut out = Vec::new();
        for s in self.s_sites() {
            for t in self.t_sites() {
                out.push(
                    t.point
                        .coords()
                        .iter()
                        .zip(s.point.coords())
                        .map(|(a, b)| a - b)
                        .collect(),
                );
            }
        }
        out
    }
}

/// The closed halfspace `<normal, x> <= offset`.
#[derive(Clone, Debug, PartialEq)]
pub struct Halfspace {
    normal: Vec<f64>,
    offset: f64,
}

impl Halfspace {
    pub fn new(normal: Vec<f64>, offset: f64) -> Result<Self> {
        if normal.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if normal
            .iter()
            .chain(std::iter::once(&offset))
            .any(|v| !v.is_finite())
        {
            return Err(Error::NonFinite);
        }
        if normal.iter().all(|&v| v == 0.0) {
            return Err(Error::ZeroNormal);
        }
        Ok(Halfspace { normal, offset })
    }

    pub fn normal(&self) -> &[f64] {
        &self.normal
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// `offset - <normal, x>`; nonnegative inside.
    pub fn slack(&self, x: &[f64]) -> f64 {
        self.offset - dot(&self.normal, x)
    }

    /// Slack divided by the normal's length, i.e. the signed distance to the
    /// boundary hyperplane.
    pub fn normalized_slack(&self, x: &[f64]) -> f64 {
        self.slack(x) / norm(&self.normal)
    }

    /// Same halfspace with a unit normal.
    pub fn normalized(&self) -> Halfspace {
        let n = norm(&self.normal);
        Halfspace {
            normal: self.normal.iter().map(|v| v / n).collect(),
            offset: self.offset / n,
        }
    }
}

impl fmt::Display for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.normal {
            write!(f, "{c} ")?;
        }
        write!(f, "| {}", self.offset)
    }
}

/// Finite intersection of halfspaces, optionally tagged with the `(s, t)`
/// label pair that produced each row.
#[derive(Clone, Debug, PartialEq)]
pub struct HPolyhedron {
    dim: usize,
    halfspaces: Vec<Halfspace>,
    provenance: Option<Vec<(String, String)>>,
}

impl HPolyhedron {
    pub fn new(dim: usize, halfspaces: Vec<Halfspace>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        for h in &halfspaces {
            if h.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: h.dim(),
                });
            }
        }
        Ok(HPolyhedron {
            dim,
            halfspaces,
            provenance: None,
        })
    }

    pub fn with_provenance(mut self, provenance: Vec<(String, String)>) -> Result<Self> {
        if provenance.len() != self.halfspaces.len() {
            return Err(Error::PreconditionViolated(format!(
                "{} provenance entries for {} halfspaces",
                provenance.len(),
                self.halfspaces.len()
            )));
        }
        self.provenance = Some(provenance);
        Ok(self)
    }

    /// Convenience constructor from `(normal, offset)` rows; panics on invalid rows.
    pub fn from_rows(dim: usize, rows: &[(&[f64], f64)]) -> Self {
        let hs = rows
            .iter()
            .map(|(a, b)| Halfspace::new(a.to_vec(), *b).expect("valid row"))
            .collect();
        HPolyhedron::new(dim, hs).expect("consistent dimensions")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    pub fn len(&self) -> usize {
        self.halfspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.halfspaces.is_empty()
    }

    pub fn provenance(&self) -> Option<&[(String, String)]> {
        self.provenance.as_deref()
    }

    /// Keeps the rows at `indices` (in the given order), carrying provenance along.
    pub fn select(&self, indices: &[usize]) -> HPolyhedron {
        HPolyhedron {
            dim: self.dim,
            halfspaces: indices
                .iter()
                .map(|&i| self.halfspaces[i].clone())
                .collect(),
            provenance: self
                .provenance
                .as_ref()
                .map(|p| indices.iter().map(|&i| p[i].clone()).collect()),
        }
    }

    /// Appends rows, dropping provenance.
    pub fn intersect(&self, extra: &[Halfspace]) -> Result<HPolyhedron> {
        let mut hs = self.halfspaces.clone();
        hs.extend_from_slice(extra);
        HPolyhedron::new(self.dim, hs)
    }

    /// Smallest normalized slack over all rows (`+inf` when there are no rows).
    pub fn min_normalized_slack(&self, x: &[f64]) -> f64 {
        self.halfspaces
            .iter()
            .map(|h| h.normalized_slack(x))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn contains_point(&self, x: &[f64], tol: f64) -> bool {
        self.min_normalized_slack(x) >= -tol
    }

    pub fn to_linear_system(&self) -> LinearSystem {
        let mut sys = LinearSystem::new(self.dim);
        for h in &self.halfspaces {
            sys.push(h.normal.clone(), Relation::Le, h.offset)
                .expect("row length matches dimension");
        }
        sys
    }
}

/// Axis-aligned box `min <= x <= max`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundingBox {
    min: Vec<f64>,
    max: Vec<f64>,
}

impl BoundingBox {
    pub fn new(min: Vec<f64>, max: Vec<f64>) -> Result<Self> {
        if min.len() != max.len() || min.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: min.len().max(1),
                found: max.len(),
            });
        }
        if min.iter().chain(&max).any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        if min.iter().zip(&max).any(|(a, b)| a >= b) {
            return Err(Error::PreconditionViolated(
                "degenerate bounding box".into(),
            ));
        }
        Ok(BoundingBox { min, max })
    }

    /// Planar box; panics if degenerate.
    pub fn plane(x0: f64, y0: f64, x1: f64, y1: f64) -> Self {
        BoundingBox::new(vec![x0, y0], vec![x1, y1]).expect("nondegenerate box")
    }

    /// Box around `points`, grown about its center by `factor` (a point set
    /// with no extent in some axis gets half-width one there).
    pub fn around<'a>(points: impl IntoIterator<Item = &'a Point>, factor: f64) -> Result<Self> {
        let mut lo: Vec<f64> = Vec::new();
        let mut hi: Vec<f64> = Vec::new();
        for p in points {
            if lo.is_empty() {
                lo = p.coords().to_vec();
                hi = p.coords().to_vec();
            }
            for (i, &c) in p.coords().iter().enumerate() {
                lo[i] = lo[i].min(c);
                hi[i] = hi[i].max(c);
            }
        }
        let (min, max) = lo
            .iter()
            .zip(&hi)
            .map(|(a, b)| {
                let mid = 0.5 * (a + b);
                let half = if b > a { 0.5 * (b - a) * factor } else { 1.0 };
                (mid - half, mid + half)
            })
            .unzip();
        BoundingBox::new(min, max)
    }

    pub fn dim(&self) -> usize {
        self.min.len()
    }

    pub fn min(&self) -> &[f64] {
        &self.min
    }

    pub fn max(&self) -> &[f64] {
        &self.max
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.iter()
            .zip(self.min.iter().zip(&self.max))
            .all(|(v, (a, b))| a <= v && v <= b)
    }

    /// The `2n` halfspaces bounding the box.
    pub fn halfspaces(&self) -> Vec<Halfspace> {
        let n = self.dim();
        let mut out = Vec::with_capacity(2 * n);
        for i in 0..n {
            let mut e = vec![0.0; n];
            e[i] = 1.0;
            out.push(Halfspace::new(e.clone(), self.max[i]).expect("unit normal"));
            e[i] = -1.0;
            out.push(Halfspace::new(e, -self.min[i]).expect("unit normal"));
        }
        out
    }
}

/// The halfspace of points no farther from `s` than from `t`.
pub fn bisector_halfspace(s: &Point, t: &Point) -> Result<Halfspace> {
    t.check_dim(s.dim())?;
    if s == t {
        return Err(Error::DegenerateSites);
    }
    let normal: Vec<f64> = t
        .coords()
        .iter()
        .zip(s.coords())
        .map(|(a, b)| a - b)
        .collect();
    let offset = 0.5 * (t.norm_sq() - s.norm_sq());
    Halfspace::new(normal, offset).map_err(|_| Error::DegenerateSites)
}

/// One halfspace per `(s, t)` pair with `s` in `S` and `t` in `T \ S`,
/// `S`-major, each tagged with its label pair.
pub fn cell_hrep(sys: &SiteSystem) -> HPolyhedron {
    let mut hs = Vec::with_capacity(sys.s_count() * (sys.len() - sys.s_count()));
    let mut prov = Vec::with_capacity(hs.capacity());
    for s in sys.s_sites() {
        for t in sys.t_sites() {
            hs.push(bisector_halfspace(&s.point, &t.point).expect("validated distinct sites"));
            prov.push((s.label.clone(), t.label.clone()));
        }
    }
    HPolyhedron::new(sys.dim(), hs)
        .and_then(|p| p.with_provenance(prov))
        .expect("consistent system")
}

/// Distance-definition membership, using squared distances only.
pub fn membership(x: &Point, sys: &SiteSystem) -> Result<bool> {
    x.check_dim(sys.dim())?;
    Ok(membership_gap(x.coords(), sys) <= 0.0)
}

/// `max_s |x - s|^2 - min_t |x - t|^2`; the point is in the cell iff this is `<= 0`.
pub(crate) fn membership_gap(x: &[f64], sys: &SiteSystem) -> f64 {
    let dsq = |p: &Point| -> f64 {
        p.coords()
            .iter()
            .zip(x)
            .map(|(a, b)| (a - b) * (a - b))
            .sum()
    };
    let far_s = sys
        .s_sites()
        .map(|s| dsq(&s.point))
        .fold(f64::NEG_INFINITY, f64::max);
    let near_t = sys
        .t_sites()
        .map(|t| dsq(&t.point))
        .fold(f64::INFINITY, f64::min);
    far_s - near_t
}

/// Tolerance for `Q^T Q = I` in [`transform`].
pub const ORTHOGONALITY_TOL: f64 = 1e-12;

/// Maps every site `x -> Q x + shift`. `rotation` is row-major `n x n`.
pub fn transform(sys: &SiteSystem, rotation: &[Vec<f64>], shift: &Point) -> Result<SiteSystem> {
    let n = sys.dim();
    shift.check_dim(n)?;
    if rotation.len() != n || rotation.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: rotation.len(),
        });
    }
    for i in 0..n {
        for j in 0..n {
            let qtq: f64 = (0..n).map(|k| rotation[k][i] * rotation[k][j]).sum();
            let expect = if i == j { 1.0 } else { 0.0 };
            if (qtq - expect).abs() > ORTHOGONALITY_TOL {
                return Err(Error::NotOrthogonal);
            }
        }
    }
    let sites = sys
        .sites()
        .iter()
        .map(|site| {
            let x = site.point.coords();
            let mapped = (0..n)
                .map(|i| dot(&rotation[i], x) + shift.coords()[i])
                .collect();
            Point::new(mapped).map(|p| Site::new(site.label.clone(), p))
        })
        .collect::<Result<Vec<_>>>()?;
    SiteSystem::new(sites, sys.s_labels())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn midpoint_between() -> SiteSystem {
        SiteSystem::from_points(
            &[Point::xy(-1.0, 0.0), Point::xy(1.0, 0.0)],
            &[Point::xy(0.0, 0.0)],
        )
        .unwrap()
    }

    pub(crate) fn square_corners() -> SiteSystem {
        SiteSystem::from_points(
            &[Point::xy(0.0, 0.0), Point::xy(1.0, 1.0)],
            &[Point::xy(1.0, 0.0), Point::xy(0.0, 1.0)],
        )
        .unwrap()
    }

    #[test]
    fn bisector_examples() {
        let h = bisector_halfspace(&Point::xy(-1.0, 0.0), &Point::xy(0.0, 0.0)).unwrap();
        assert_eq!(h.normal(), &[1.0, 0.0]);
        assert_eq!(h.offset(), -0.5);

        let h = bisector_halfspace(&Point::xy(0.0, 0.0), &Point::xy(1.0, 1.0)).unwrap();
        assert_eq!(h.normal(), &[1.0, 1.0]);
        assert_eq!(h.offset(), 1.0);

        let a = Point::new(vec![3.0]).unwrap();
        assert_eq!(bisector_halfspace(&a, &a), Err(Error::DegenerateSites));
        assert!(matches!(
            bisector_halfspace(&a, &Point::xy(0.0, 1.0)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn midpoint_between_rows() {
        let p = cell_hrep(&midpoint_between());
        assert_eq!(p.len(), 2);
        assert_eq!(p.halfspaces()[0].normal(), &[1.0, 0.0]);
        assert_eq!(p.halfspaces()[0].offset(), -0.5);
        assert_eq!(p.halfspaces()[1].normal(), &[-1.0, 0.0]);
        assert_eq!(p.halfspaces()[1].offset(), -0.5);
        let prov = p.provenance().unwrap();
        assert_eq!(prov[0], ("s1".to_string(), "t1".to_string()));
        assert_eq!(prov[1], ("s2".to_string(), "t1".to_string()));
    }

    #[test]
    fn square_corners_rows_pin_center() {
        let p = cell_hrep(&square_corners());
        assert_eq!(p.len(), 4);
        for h in p.halfspaces() {
            assert_eq!(h.slack(&[0.5, 0.5]), 0.0);
        }
    }

    #[test]
    fn single_pair_gives_one_row() {
        let sys = SiteSystem::from_points(&[Point::xy(0.0, 0.0)], &[Point::xy(2.0, 0.0)]).unwrap();
        assert_eq!(cell_hrep(&sys).len(), 1);
    }

    #[test]
    fn membership_examples() {
        assert!(membership(&Point::xy(0.5, 0.5), &square_corners()).unwrap());
        assert!(!membership(&Point::xy(0.0, 0.0), &midpoint_between()).unwrap());
        let sys = SiteSystem::from_points(&[Point::xy(0.3, 0.7)], &[Point::xy(2.0, 0.0)]).unwrap();
        assert!(membership(&Point::xy(0.3, 0.7), &sys).unwrap());
        assert!(matches!(
            membership(&Point::new(vec![0.0]).unwrap(), &sys),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn system_validation() {
        let a = Site::new("a", Point::xy(0.0, 0.0));
        let b = Site::new("b", Point::xy(1.0, 0.0));
        assert!(matches!(
            SiteSystem::new(vec![a.clone(), b.clone()], ["a", "b"]),
            Err(Error::InvalidSubset(_))
        ));
        assert!(matches!(
            SiteSystem::new(vec![a.clone(), b.clone()], Vec::<&str>::new()),
            Err(Error::InvalidSubset(_))
        ));
        assert!(matches!(
            SiteSystem::new(vec![a.clone(), b.clone()], ["z"]),
            Err(Error::InvalidSubset(_))
        ));
        let dup = Site::new("c", Point::xy(0.0, 0.0));
        assert!(matches!(
            SiteSystem::new(vec![a.clone(), dup], ["a"]),
            Err(Error::DuplicateSite(_, _))
        ));
        let same_label = Site::new("a", Point::xy(5.0, 0.0));
        assert!(matches!(
            SiteSystem::new(vec![a.clone(), same_label], ["a"]),
            Err(Error::DuplicateLabel(_))
        ));
        let three_d = Site::new("d", Point::new(vec![0.0, 0.0, 1.0]).unwrap());
        assert!(matches!(
            SiteSystem::new(vec![a, three_d], ["a"]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert_eq!(Point::new(vec![f64::NAN]), Err(Error::NonFinite));
    }

    #[test]
    fn transform_identity_and_errors() {
        let sys = square_corners();
        let id = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        assert_eq!(transform(&sys, &id, &Point::xy(0.0, 0.0)).unwrap(), sys);
        let shear = vec![vec![1.0, 0.5], vec![0.0, 1.0]];
        assert_eq!(
            transform(&sys, &shear, &Point::xy(0.0, 0.0)),
            Err(Error::NotOrthogonal)
        );
    }

    #[test]
    fn shifted_midpoint_between_stays_empty_by_definition() {
        let id = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        let moved = transform(&midpoint_between(), &id, &Point::xy(5.0, 5.0)).unwrap();
        let h = cell_hrep(&moved);
        // x1 <= 4.5 and x1 >= 5.5
        assert_eq!(h.halfspaces()[0].normal(), &[1.0, 0.0]);
        assert_eq!(h.halfspaces()[0].offset(), 4.5);
        assert_eq!(h.halfspaces()[1].offset(), -5.5);
    }
}
