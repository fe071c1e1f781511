//! Dense two-phase primal simplex on `A z = b, z >= 0` with Bland's rule.
//!
//! Phase one adds one artificial column per row. When its optimum is positive
//! the simplex multipliers `y` at that optimum satisfy `A^T y <= 0` and
//! `b^T y > 0`, which is the Farkas alternative for the standard form.

use crate::error::{Error, Result};

use super::scalar::{Scalar, Tolerances};

pub(crate) enum Outcome<T> {
    /// `y` with `A^T y <= 0` and `b^T y > 0` (in the caller's row signs).
    Infeasible {
        y: Vec<T>,
    },
    Optimal {
        z: Vec<T>,
    },
    Unbounded,
}

struct Tableau<T> {
    rows: Vec<Vec<T>>,
    /// Reduced costs; the last entry is minus the current objective value.
    obj: Vec<T>,
    basis: Vec<usize>,
    width: usize,
}

impl<T: Scalar> Tableau<T> {
    fn rhs(&self, r: usize) -> &T {
        &self.rows[r][self.width]
    }

    fn pivot(&mut self, r: usize, c: usize, tol: &Tolerances<T>) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v = v.clone() / p.clone();
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v = v.clone() - f.clone() * pv.clone();
            }
            row[c] = T::zero();
            let rhs = &mut row[self.width];
            if rhs.is_negative() && *rhs > -tol.pivot.clone() {
                *rhs = T::zero();
            }
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for (v, pv) in self.obj.iter_mut().zip(&pivot_row) {
                *v = v.clone() - f.clone() * pv.clone();
            }
            self.obj[c] = T::zero();
        }
        self.basis[r] = c;
    }

    /// Runs Bland-rule iterations over columns `0..allowed`.
    /// Returns `false` when the objective is unbounded below.
    fn iterate(&mut self, allowed: usize, tol: &Tolerances<T>) -> Result<bool> {
        let limit = 10_000 + 50 * (self.rows.len() + self.width);
        let neg_tol = -tol.feasibility.clone();
        for _ in 0..limit {
            let Some(enter) = (0..allowed).find(|&j| self.obj[j] < neg_tol) else {
                return Ok(true);
            };
            let mut leave: Option<(usize, T)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][enter];
                if *a <= tol.pivot {
                    continue;
                }
                let ratio = self.rhs(r).clone() / a.clone();
                leave = match leave {
                    None => Some((r, ratio)),
                    Some((br, best)) => {
                        let diff = ratio.clone() - best.clone();
                        if diff < -tol.pivot.clone()
                            || (diff <= tol.pivot && self.basis[r] < self.basis[br])
                        {
                            Some((r, ratio))
                        } else {
                            Some((br, best))
                        }
                    }
                };
            }
            let Some((r, _)) = leave else {
                return Ok(false);
            };
            self.pivot(r, enter, tol);
        }
        Err(Error::NumericallyIllConditioned(
            "simplex iteration limit reached".into(),
        ))
    }
}

/// Minimizes `cost^T z` over `A z = b, z >= 0` (pure feasibility when `cost`
/// is `None`). Rows of `a` must all have the same length.
pub(crate) fn solve<T: Scalar>(
    a: &[Vec<T>],
    b: &[T],
    cost: Option<&[T]>,
    tol: &Tolerances<T>,
) -> Result<Outcome<T>> {
    let m = a.len();
    let n = a
        .first()
        .map_or_else(|| cost.map_or(0, <[T]>::len), Vec::len);
    let width = n + m;

    let signs: Vec<bool> = b.iter().map(|v| v.is_negative()).collect();
    let mut rows = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let mut r = Vec::with_capacity(width + 1);
        if signs[i] {
            r.extend(row.iter().map(|v| -v.clone()));
        } else {
            r.extend(row.iter().cloned());
        }
        r.extend((0..m).map(|k| if k == i { T::one() } else { T::zero() }));
        r.push(if signs[i] { -rhs.clone() } else { rhs.clone() });
        rows.push(r);
    }
    let mut obj = vec![T::zero(); width + 1];
    for r in &rows {
        for j in 0..n {
            obj[j] = obj[j].clone() - r[j].clone();
        }
        obj[width] = obj[width].clone() - r[width].clone();
    }
    let mut tab = Tableau {
        rows,
        obj,
        basis: (n..width).collect(),
        width,
    };

    tab.iterate(n, tol)?;
    let phase_one = -tab.obj[width].clone();
    if phase_one > tol.feasibility {
        let y = (0..m)
            .map(|i| {
                let yi = T::one() - tab.obj[n + i].clone();
                if signs[i] {
                    -yi
                } else {
                    yi
                }
            })
            .collect();
        return Ok(Outcome::Infeasible { y });
    }

    // Drive artificials out of the basis; rows where that is impossible are
    // linearly dependent on the rest and get dropped.
    let mut r = 0;
    while r < tab.rows.len() {
        if tab.basis[r] >= n {
            let col = (0..n).find(|&j| tab.rows[r][j].abs() > tol.pivot);
            match col {
                Some(j) => tab.pivot(r, j, tol),
                None => {
                    tab.rows.remove(r);
                    tab.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }

    if let Some(c) = cost {
        let mut obj = vec![T::zero(); width + 1];
        obj[..n].clone_from_slice(c);
        for (row, &bv) in tab.rows.iter().zip(&tab.basis) {
            let cb = obj[bv].clone();
            if cb.is_zero() {
                continue;
            }
            for (v, rv) in obj.iter_mut().zip(row) {
                *v = v.clone() - cb.clone() * rv.clone();
            }
        }
        tab.obj = obj;
        if !tab.iterate(n, tol)? {
            return Ok(Outcome::Unbounded);
        }
    }

    let mut z = vec![T::zero(); n];
    for (row, &bv) in tab.rows.iter().zip(&tab.basis) {
        if bv < n {
            let v = row[width].clone();
            z[bv] = if v.is_negative() { T::zero() } else { v };
        }
    }
    Ok(Outcome::Optimal { z })
}
