use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{cell_hrep, BoundingBox, HPolyhedron, Point, Site, SiteSystem};
use crate::predicates::is_empty;

use super::vertices::vertices2d;

/// Largest site count accepted by [`diagram`].
pub const MAX_DIAGRAM_SITES: usize = 12;

/// For each `s` in `S`, the systems of `V_{T \ {s}}(S \ {s})` and `V_S(s)`.
/// The cell is the union over `s` of the intersections of each pair.
pub fn union_decompose(sys: &SiteSystem) -> Result<Vec<(String, (SiteSystem, SiteSystem))>> {
    if sys.s_count() < 2 {
        return Err(Error::PreconditionViolated(
            "union decomposition needs |S| >= 2".into(),
        ));
    }
    let s_labels: Vec<String> = sys.s_labels().iter().map(|l| l.to_string()).collect();
    let mut out = Vec::with_capacity(s_labels.len());
    for s in &s_labels {
        let rest_sites: Vec<Site> = sys
            .sites()
            .iter()
            .filter(|site| &site.label != s)
            .cloned()
            .collect();
        let rest = SiteSystem::new(rest_sites, s_labels.iter().filter(|l| *l != s))?;
        let s_only: Vec<Site> = sys.s_sites().cloned().collect();
        let own = SiteSystem::new(s_only, [s])?;
        out.push((s.clone(), (rest, own)));
    }
    Ok(out)
}

/// One cell of an order-k diagram.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagramCell {
    /// Sorted labels of the subset `S`.
    pub subset: Vec<String>,
    pub hrep: HPolyhedron,
    pub empty: bool,
    /// Vertices of the cell clipped to the diagram's box, counterclockwise
    /// (planar diagrams only; empty otherwise).
    pub region: Vec<Point>,
}

/// All cells `V_T(S)` with `|S| = k`, subsets in lexicographic order of
/// sorted labels.
pub fn diagram(sites: &[Site], k: usize, bbox: &BoundingBox) -> Result<Vec<DiagramCell>> {
    if sites.len() > MAX_DIAGRAM_SITES {
        return Err(Error::PreconditionViolated(format!(
            "at most {MAX_DIAGRAM_SITES} sites supported"
        )));
    }
    if k == 0 || k >= sites.len() {
        return Err(Error::PreconditionViolated(format!(
            "order {k} must satisfy 1 <= k < {}",
            sites.len()
        )));
    }
    let dim = sites[0].point.dim();
    if bbox.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: bbox.dim(),
        });
    }
    let mut labels: Vec<&str> = sites.iter().map(|s| s.label.as_str()).collect();
    labels.sort_unstable();
    let subsets: Vec<Vec<String>> = labels
        .iter()
        .combinations(k)
        .map(|c| c.into_iter().map(|l| l.to_string()).collect())
        .collect();
    let clip = bbox.halfspaces();
    subsets
        .into_par_iter()
        .map(|subset| {
            let sys = SiteSystem::new(sites.to_vec(), &subset)?;
            let hrep = cell_hrep(&sys);
            let empty = is_empty(&sys)?.value;
            let region = if empty || dim != 2 {
                Vec::new()
            } else {
                vertices2d(&hrep.intersect(&clip)?)
            };
            Ok(DiagramCell {
                subset,
                hrep,
                empty,
                region,
            })
        })
        .collect()
}
