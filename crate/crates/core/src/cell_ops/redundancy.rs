use crate::error::Result;
use crate::lp::{self, LinearSystem, Relation};
use crate::model::{HPolyhedron, Halfspace};

/// Normalized rows closer than this in every coordinate describe the same halfspace.
pub const COINCIDENT_TOL: f64 = 1e-12;

fn coincident(a: &Halfspace, b: &Halfspace) -> bool {
    let (a, b) = (a.normalized(), b.normalized());
    let scale = 1.0 + a.offset().abs().max(b.offset().abs());
    a.normal()
        .iter()
        .zip(b.normal())
        .all(|(x, y)| (x - y).abs() <= COINCIDENT_TOL)
        && (a.offset() - b.offset()).abs() <= COINCIDENT_TOL * scale
}

fn feasible(dim: usize, rows: &[&Halfspace]) -> Result<bool> {
    let mut sys = LinearSystem::new(dim);
    for h in rows {
        sys.push(h.normal().to_vec(), Relation::Le, h.offset())?;
    }
    Ok(lp::solve_feasibility(&sys)?.is_feasible())
}

/// Drops rows that do not change the solution set.
///
/// Coincident rows are collapsed to their first occurrence, then each
/// remaining row is dropped in order if the rows still kept imply it. For an
/// infeasible input the result is an infeasible subsystem from which no
/// single row can be removed. Kept rows retain their relative order and
/// provenance.
pub fn remove_redundant(hrep: &HPolyhedron) -> Result<HPolyhedron> {
    let rows = hrep.halfspaces();
    let mut keep: Vec<usize> = Vec::with_capacity(rows.len());
    for (i, h) in rows.iter().enumerate() {
        if !keep.iter().any(|&k| coincident(&rows[k], h)) {
            keep.push(i);
        }
    }

    let all: Vec<&Halfspace> = keep.iter().map(|&k| &rows[k]).collect();
    let is_feasible = feasible(hrep.dim(), &all)?;

    let mut pos = 0;
    while pos < keep.len() {
        let others: Vec<&Halfspace> = keep
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != pos)
            .map(|(_, &k)| &rows[k])
            .collect();
        let drop = if is_feasible {
            let others: Vec<Halfspace> = others.into_iter().cloned().collect();
            !others.is_empty() && lp::implied(&rows[keep[pos]], &others)?
        } else {
            !feasible(hrep.dim(), &others)?
        };
        if drop {
            keep.remove(pos);
        } else {
            pos += 1;
        }
    }
    Ok(hrep.select(&keep))
}
