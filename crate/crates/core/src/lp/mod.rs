//! Certified linear feasibility.
//!
//! Every answer comes with evidence: a witness point when a system is
//! feasible, nonnegative Farkas multipliers when it is not. Both are checked
//! against the input before they are returned; a check that fails is reported
//! as [`Error::NumericallyIllConditioned`] rather than a wrong answer.
//!
//! The engine is generic over [`Scalar`], so the same code runs on `f64`
//! (with [`Tolerances::default`]) and on exact rationals
//! (with [`Tolerances::exact`]).

mod scalar;
mod simplex;

use num_rational::BigRational;

pub use scalar::{ratio, Scalar, Tolerances};

use crate::error::{Error, Result};
use crate::model::Halfspace;
use simplex::Outcome;

/// Desk-scale limits for [`solve_feasibility`].
pub const MAX_VARS: usize = 64;
pub const MAX_ROWS: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Row<T> {
    pub coeffs: Vec<T>,
    pub relation: Relation,
    pub rhs: T,
}

/// Rows `<coeffs, x> (<= | =) rhs` over `num_vars` free variables.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSystem<T = f64> {
    num_vars: usize,
    rows: Vec<Row<T>>,
}

impl<T: Scalar> LinearSystem<T> {
    pub fn new(num_vars: usize) -> Self {
        LinearSystem {
            num_vars,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, coeffs: Vec<T>, relation: Relation, rhs: T) -> Result<()> {
        if coeffs.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: coeffs.len(),
            });
        }
        self.rows.push(Row {
            coeffs,
            relation,
            rhs,
        });
        Ok(())
    }

    pub fn with_row(mut self, coeffs: Vec<T>, relation: Relation, rhs: T) -> Result<Self> {
        self.push(coeffs, relation, rhs)?;
        Ok(self)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn rows(&self) -> &[Row<T>] {
        &self.rows
    }

    /// All rows as `<=` inequalities; an equality row becomes the pair
    /// `a x <= b`, `-a x <= -b` in that order. Farkas certificates index this list.
    pub fn expanded(&self) -> Vec<(Vec<T>, T)> {
        let mut out = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            out.push((row.coeffs.clone(), row.rhs.clone()));
            if row.relation == Relation::Eq {
                out.push((
                    row.coeffs.iter().map(|v| -v.clone()).collect(),
                    -row.rhs.clone(),
                ));
            }
        }
        out
    }
}

/// Nonnegative multipliers, one per row of the system they certify.
#[derive(Clone, Debug, PartialEq)]
pub struct FarkasCertificate<T = f64> {
    multipliers: Vec<T>,
}

impl<T: Scalar> FarkasCertificate<T> {
    /// Clamps entries in `[-clamp, 0)` to zero; anything more negative is rejected.
    pub fn new(multipliers: Vec<T>, clamp: &T) -> Result<Self> {
        let mut out = Vec::with_capacity(multipliers.len());
        for m in multipliers {
            if m.is_negative() {
                if m < -clamp.clone() {
                    return Err(Error::NumericallyIllConditioned(format!(
                        "negative multiplier {m:?}"
                    )));
                }
                out.push(T::zero());
            } else {
                out.push(m);
            }
        }
        Ok(FarkasCertificate { multipliers: out })
    }

    pub fn multipliers(&self) -> &[T] {
        &self.multipliers
    }

    /// `sum_i lambda_i a_i` and `sum_i lambda_i b_i` over the given rows.
    pub fn combine(&self, rows: &[(Vec<T>, T)]) -> (Vec<T>, T) {
        let n = rows.first().map_or(0, |r| r.0.len());
        let mut coeffs = vec![T::zero(); n];
        let mut rhs = T::zero();
        for (lam, (a, b)) in self.multipliers.iter().zip(rows) {
            for (c, v) in coeffs.iter_mut().zip(a) {
                *c = c.clone() + lam.clone() * v.clone();
            }
            rhs = rhs + lam.clone() * b.clone();
        }
        (coeffs, rhs)
    }

    /// `sum_i lambda_i g_i` for cone/hull coefficients.
    pub fn reconstruct(&self, generators: &[Vec<T>]) -> Vec<T> {
        let n = generators.first().map_or(0, Vec::len);
        let mut out = vec![T::zero(); n];
        for (lam, g) in self.multipliers.iter().zip(generators) {
            for (o, v) in out.iter_mut().zip(g) {
                *o = o.clone() + lam.clone() * v.clone();
            }
        }
        out
    }
}

/// Outcome of a feasibility test: exactly one of witness or certificate.
#[derive(Clone, Debug, PartialEq)]
pub enum FeasibilityResult<T = f64> {
    Feasible { witness: Vec<T> },
    Infeasible { certificate: FarkasCertificate<T> },
}

impl<T> FeasibilityResult<T> {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityResult::Feasible { .. })
    }

    pub fn witness(&self) -> Option<&[T]> {
        match self {
            FeasibilityResult::Feasible { witness } => Some(witness),
            FeasibilityResult::Infeasible { .. } => None,
        }
    }

    pub fn certificate(&self) -> Option<&FarkasCertificate<T>> {
        match self {
            FeasibilityResult::Feasible { .. } => None,
            FeasibilityResult::Infeasible { certificate } => Some(certificate),
        }
    }
}

/// Result of maximizing a linear objective over a system.
#[derive(Clone, Debug, PartialEq)]
pub enum Optimum<T = f64> {
    Optimal { x: Vec<T>, value: T },
    Unbounded,
    Infeasible(FarkasCertificate<T>),
}

fn max_abs<T: Scalar>(values: impl IntoIterator<Item = T>) -> T {
    values
        .into_iter()
        .fold(T::zero(), |m, v| if v.abs() > m { v.abs() } else { m })
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Scaled `<=` rows plus the factors that produced them.
struct ScaledRows<T> {
    rows: Vec<(Vec<T>, T)>,
    scales: Vec<T>,
}

fn scale_rows<T: Scalar>(rows: Vec<(Vec<T>, T)>) -> ScaledRows<T> {
    let mut scales = Vec::with_capacity(rows.len());
    let rows = rows
        .into_iter()
        .map(|(a, b)| {
            let mut all = a.clone();
            all.push(b.clone());
            let s = T::row_scale(&all);
            scales.push(s.clone());
            (a.into_iter().map(|v| v * s.clone()).collect(), b * s)
        })
        .collect();
    ScaledRows { rows, scales }
}

/// Standard form of `A x <= b` with free `x`: columns `[x+, x-, slack]`.
fn standard_form<T: Scalar>(rows: &[(Vec<T>, T)], n: usize) -> (Vec<Vec<T>>, Vec<T>) {
    let m = rows.len();
    let mut a = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for (i, (coeffs, rhs)) in rows.iter().enumerate() {
        let mut r = Vec::with_capacity(2 * n + m);
        r.extend(coeffs.iter().cloned());
        r.extend(coeffs.iter().map(|v| -v.clone()));
        r.extend((0..m).map(|k| if k == i { T::one() } else { T::zero() }));
        a.push(r);
        b.push(rhs.clone());
    }
    (a, b)
}

/// Turns phase-one multipliers into a verified certificate on the unscaled rows,
/// normalized so the combined right-hand side is `-1`.
fn certificate_from_multipliers<T: Scalar>(
    y: &[T],
    scaled: &ScaledRows<T>,
    tol: &Tolerances<T>,
) -> Result<FarkasCertificate<T>> {
    let lam_scaled = FarkasCertificate::new(y.iter().map(|v| -v.clone()).collect(), &tol.pivot)?;
    let total = lam_scaled
        .multipliers()
        .iter()
        .fold(T::zero(), |a, v| a + v.clone());
    let (combo, rhs) = lam_scaled.combine(&scaled.rows);
    let bound = tol.feasibility.clone() * (T::one() + total);
    if max_abs(combo) > bound || rhs >= -bound.clone() || !rhs.is_negative() {
        return Err(Error::NumericallyIllConditioned(
            "Farkas certificate failed verification".into(),
        ));
    }
    let norm = -rhs;
    let lam = lam_scaled
        .multipliers()
        .iter()
        .zip(&scaled.scales)
        .map(|(l, s)| l.clone() * s.clone() / norm.clone())
        .collect();
    FarkasCertificate::new(lam, &tol.pivot)
}

fn verify_witness<T: Scalar>(x: &[T], rows: &[(Vec<T>, T)], tol: &Tolerances<T>) -> Result<()> {
    let bound = tol.feasibility.clone() * (T::one() + max_abs(x.iter().cloned()));
    for (a, b) in rows {
        if dot(a, x) - b.clone() > bound {
            return Err(Error::NumericallyIllConditioned(
                "witness violates a row".into(),
            ));
        }
    }
    Ok(())
}

/// Decides feasibility of `sys` with default `f64` tolerances.
pub fn solve_feasibility(sys: &LinearSystem) -> Result<FeasibilityResult> {
    solve_feasibility_with(sys, &Tolerances::default())
}

/// Exact-arithmetic feasibility.
pub fn solve_feasibility_exact(
    sys: &LinearSystem<BigRational>,
) -> Result<FeasibilityResult<BigRational>> {
    solve_feasibility_with(sys, &Tolerances::exact())
}

pub fn solve_feasibility_with<T: Scalar>(
    sys: &LinearSystem<T>,
    tol: &Tolerances<T>,
) -> Result<FeasibilityResult<T>> {
    let rows = sys.expanded();
    if sys.num_vars() > MAX_VARS || rows.len() > MAX_ROWS {
        return Err(Error::PreconditionViolated(format!(
            "system too large: {} variables, {} rows",
            sys.num_vars(),
            rows.len()
        )));
    }
    let n = sys.num_vars();
    let scaled = scale_rows(rows);
    let (a, b) = standard_form(&scaled.rows, n);
    match simplex::solve(&a, &b, None, tol)? {
        Outcome::Optimal { z } => {
            let x: Vec<T> = (0..n).map(|j| z[j].clone() - z[n + j].clone()).collect();
            verify_witness(&x, &scaled.rows, tol)?;
            Ok(FeasibilityResult::Feasible { witness: x })
        }
        Outcome::Infeasible { y } => Ok(FeasibilityResult::Infeasible {
            certificate: certificate_from_multipliers(&y, &scaled, tol)?,
        }),
        Outcome::Unbounded => unreachable!("pure feasibility has no objective"),
    }
}

/// Maximizes `<objective, x>` over `sys`.
pub fn maximize(objective: &[f64], sys: &LinearSystem) -> Result<Optimum> {
    maximize_with(objective, sys, &Tolerances::default())
}

pub fn maximize_with<T: Scalar>(
    objective: &[T],
    sys: &LinearSystem<T>,
    tol: &Tolerances<T>,
) -> Result<Optimum<T>> {
    let n = sys.num_vars();
    if objective.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: objective.len(),
        });
    }
    let scaled = scale_rows(sys.expanded());
    let (a, b) = standard_form(&scaled.rows, n);
    let obj_scale = T::row_scale(objective);
    let mut cost = Vec::with_capacity(2 * n + scaled.rows.len());
    cost.extend(objective.iter().map(|c| -c.clone() * obj_scale.clone()));
    cost.extend(objective.iter().map(|c| c.clone() * obj_scale.clone()));
    cost.extend((0..scaled.rows.len()).map(|_| T::zero()));
    match simplex::solve(&a, &b, Some(&cost), tol)? {
        Outcome::Optimal { z } => {
            let x: Vec<T> = (0..n).map(|j| z[j].clone() - z[n + j].clone()).collect();
            verify_witness(&x, &scaled.rows, tol)?;
            let value = dot(objective, &x);
            Ok(Optimum::Optimal { x, value })
        }
        Outcome::Unbounded => Ok(Optimum::Unbounded),
        Outcome::Infeasible { y } => Ok(Optimum::Infeasible(certificate_from_multipliers(
            &y, &scaled, tol,
        )?)),
    }
}

/// Nonnegative `lambda` with `sum_j lambda_j g_j = target`, if one exists.
pub fn in_cone(target: &[f64], generators: &[Vec<f64>]) -> Result<Option<FarkasCertificate>> {
    in_cone_with(target, generators, &Tolerances::default())
}

pub fn in_cone_exact(
    target: &[BigRational],
    generators: &[Vec<BigRational>],
) -> Result<Option<FarkasCertificate<BigRational>>> {
    in_cone_with(target, generators, &Tolerances::exact())
}

pub fn in_cone_with<T: Scalar>(
    target: &[T],
    generators: &[Vec<T>],
    tol: &Tolerances<T>,
) -> Result<Option<FarkasCertificate<T>>> {
    combination(target, generators, false, tol)
}

/// Convex coefficients reproducing `target` from `points`, if any exist.
pub fn in_convex_hull(target: &[f64], points: &[Vec<f64>]) -> Result<Option<Vec<f64>>> {
    in_convex_hull_with(target, points, &Tolerances::default())
}

pub fn in_convex_hull_exact(
    target: &[BigRational],
    points: &[Vec<BigRational>],
) -> Result<Option<Vec<BigRational>>> {
    in_convex_hull_with(target, points, &Tolerances::exact())
}

pub fn in_convex_hull_with<T: Scalar>(
    target: &[T],
    points: &[Vec<T>],
    tol: &Tolerances<T>,
) -> Result<Option<Vec<T>>> {
    Ok(combination(target, points, true, tol)?.map(|c| c.multipliers))
}

/// Solves `G lambda = target, lambda >= 0` (plus `sum lambda = 1` when `convex`).
fn combination<T: Scalar>(
    target: &[T],
    generators: &[Vec<T>],
    convex: bool,
    tol: &Tolerances<T>,
) -> Result<Option<FarkasCertificate<T>>> {
    let d = target.len();
    if let Some(g) = generators.iter().find(|g| g.len() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: g.len(),
        });
    }
    let k = generators.len();
    if k == 0 {
        let zero_target = !convex && target.iter().all(|v| v.is_zero());
        return Ok(zero_target.then(|| FarkasCertificate {
            multipliers: Vec::new(),
        }));
    }
    let mut rows: Vec<(Vec<T>, T)> = (0..d)
        .map(|i| {
            (
                generators.iter().map(|g| g[i].clone()).collect(),
                target[i].clone(),
            )
        })
        .collect();
    if convex {
        rows.push((vec![T::one(); k], T::one()));
    }
    let scaled = scale_rows(rows);
    let (a, b): (Vec<_>, Vec<_>) = scaled.rows.into_iter().unzip();
    match simplex::solve(&a, &b, None, tol)? {
        Outcome::Optimal { z } => {
            let cert = FarkasCertificate::new(z, &tol.pivot)?;
            let recon = cert.reconstruct(generators);
            let mag = max_abs(target.iter().cloned())
                + cert
                    .multipliers()
                    .iter()
                    .zip(generators)
                    .fold(T::zero(), |acc, (l, g)| {
                        acc + l.clone() * max_abs(g.iter().cloned())
                    });
            let bound = tol.feasibility.clone() * (T::one() + mag);
            let err = max_abs(recon.iter().zip(target).map(|(r, t)| r.clone() - t.clone()));
            if err > bound {
                return Err(Error::NumericallyIllConditioned(
                    "cone coefficients failed verification".into(),
                ));
            }
            if convex {
                let total = cert
                    .multipliers()
                    .iter()
                    .fold(T::zero(), |a, v| a + v.clone());
                if (total - T::one()).abs() > tol.feasibility {
                    return Err(Error::NumericallyIllConditioned(
                        "convex coefficients do not sum to one".into(),
                    ));
                }
            }
            Ok(Some(cert))
        }
        Outcome::Infeasible { .. } => Ok(None),
        Outcome::Unbounded => unreachable!("pure feasibility has no objective"),
    }
}

/// Slack allowed on the bounded optimum in [`implied`], in units of distance.
pub const IMPLIED_TOL: f64 = 1e-9;

/// Whether every point of `system` satisfies `candidate`.
///
/// Decided by maximizing the candidate's unit normal over the system; an
/// unbounded maximum means not implied. Errors with [`Error::InfeasibleBase`]
/// when the system itself is empty.
pub fn implied(candidate: &Halfspace, system: &[Halfspace]) -> Result<bool> {
    let dim = candidate.dim();
    let mut sys = LinearSystem::new(dim);
    for h in system {
        sys.push(h.normal().to_vec(), Relation::Le, h.offset())?;
    }
    let unit = candidate.normalized();
    match maximize(unit.normal(), &sys)? {
        Optimum::Optimal { value, .. } => Ok(value <= unit.offset() + IMPLIED_TOL),
        Optimum::Unbounded => Ok(false),
        Optimum::Infeasible(_) => Err(Error::InfeasibleBase),
    }
}

/// Largest `tau <= cap` such that some `x` satisfies every row with distance
/// slack `tau`. Positive means an interior point exists at depth `tau`;
/// negative measures how far the system is from feasible.
pub fn depth_margin(dim: usize, rows: &[Halfspace], cap: f64) -> Result<f64> {
    let mut sys = LinearSystem::new(dim + 1);
    for h in rows {
        let u = h.normalized();
        let mut coeffs = u.normal().to_vec();
        coeffs.push(1.0);
        sys.push(coeffs, Relation::Le, u.offset())?;
    }
    let mut cap_row = vec![0.0; dim + 1];
    cap_row[dim] = 1.0;
    sys.push(cap_row.clone(), Relation::Le, cap)?;
    match maximize(&cap_row, &sys)? {
        Optimum::Optimal { value, .. } => Ok(value),
        Optimum::Unbounded | Optimum::Infeasible(_) => Err(Error::NumericallyIllConditioned(
            "margin problem must have a finite optimum".into(),
        )),
    }
}
