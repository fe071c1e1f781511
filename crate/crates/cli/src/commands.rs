//! The subcommands, as functions from parsed arguments to a report and an
//! exit code.

use std::fmt::Write;

use kcell::cell_ops::{classify2d, diagram, remove_redundant, CellShape, DiagramCell};
use kcell::constructions::{
    construct, polygon_hrep, Construction, ImpossibilityReason, Target, TargetShape,
};
use kcell::geom2::P2;
use kcell::oracle::{agree, SampleGrid};
use kcell::predicates::{
    ball_witness, has_interior, has_interior_exact, is_bounded, is_bounded_exact, is_empty,
    is_empty_exact, Certificate, ExactReport, PredicateReport,
};
use kcell::{cell_hrep, BoundingBox, HPolyhedron, SiteSystem};

use crate::error::{CliError, CliResult, EXIT_FALSIFIED, EXIT_IMPOSSIBLE, EXIT_OK};
use crate::files::{parse_hrep, read_text, SiteFile};
use crate::format::{fmt12, fmt17, fmt_ratio, join};
use crate::svg::{render, RenderSpec};

/// Text to print and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub code: i32,
    pub text: String,
}

impl Report {
    fn ok(text: String) -> Self {
        Report {
            code: EXIT_OK,
            text,
        }
    }
}

fn planar(file: &SiteFile) -> CliResult<()> {
    if file.dim != 2 {
        return Err(CliError::UnsupportedDimension(file.dim));
    }
    Ok(())
}

fn point_text(p: P2) -> String {
    format!("({}, {})", fmt12(p[0]), fmt12(p[1]))
}

/// The cell's inequalities, one `a | b (s, t)` row per line, preceded by a
/// `dim` line so the output is itself an inequality file.
pub fn cmd_cell(path: &str, reduce: bool) -> CliResult<Report> {
    let sys = SiteFile::read(path)?.to_system()?;
    let mut h = cell_hrep(&sys);
    if reduce {
        h = remove_redundant(&h)?;
    }
    let mut out = format!("dim {}\n", h.dim());
    let prov = h.provenance().map(<[_]>::to_vec).unwrap_or_default();
    for (i, row) in h.halfspaces().iter().enumerate() {
        let _ = write!(
            out,
            "{} | {}",
            join(row.normal(), |x| fmt17(*x)),
            fmt17(row.offset())
        );
        if let Some((s, t)) = prov.get(i) {
            let _ = write!(out, " ({s}, {t})");
        }
        out.push('\n');
    }
    Ok(Report::ok(out))
}

/// Predicates accepted by [`cmd_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    Empty,
    Bounded,
    Interior,
    Ball,
}

impl Predicate {
    fn name(self) -> &'static str {
        match self {
            Predicate::Empty => "empty",
            Predicate::Bounded => "bounded",
            Predicate::Interior => "interior",
            Predicate::Ball => "ball",
        }
    }
}

fn float_report(out: &mut String, r: &PredicateReport) {
    let _ = writeln!(out, "value: {}", r.value);
    let _ = writeln!(out, "method: {}", r.method);
    match &r.certificate {
        None => out.push_str("certificate: none\n"),
        Some(Certificate::Multipliers(c)) => {
            let _ = writeln!(
                out,
                "certificate: multipliers {}",
                join(c.multipliers(), |x| fmt12(*x))
            );
        }
        Some(Certificate::Witness(p)) => {
            let _ = writeln!(
                out,
                "certificate: witness {}",
                join(p.coords(), |x| fmt12(*x))
            );
        }
        Some(Certificate::ConvexCombination(c)) => {
            let _ = writeln!(
                out,
                "certificate: convex-combination {}",
                join(c, |x| fmt12(*x))
            );
        }
        Some(Certificate::MissingDirection(e)) => {
            let _ = writeln!(
                out,
                "certificate: missing-direction {}",
                join(e, |x| fmt12(*x))
            );
        }
        Some(Certificate::SpanningDirections(certs)) => {
            out.push_str("certificate: spanning-directions\n");
            for (k, c) in certs.iter().enumerate() {
                let sign = if k % 2 == 0 { '+' } else { '-' };
                let _ = writeln!(
                    out,
                    "  {sign}e{}: {}",
                    k / 2 + 1,
                    join(c.multipliers(), |x| fmt12(*x))
                );
            }
        }
    }
}

fn exact_report(out: &mut String, r: &ExactReport, kind: Predicate) {
    let _ = writeln!(out, "value: {}", r.value);
    let _ = writeln!(out, "method: {}", r.method);
    out.push_str("arithmetic: exact\n");
    let label = match kind {
        Predicate::Interior => "convex-combination",
        _ => "multipliers",
    };
    if let Some(m) = &r.multipliers {
        let _ = writeln!(out, "certificate: {label} {}", join(m, fmt_ratio));
    } else if let Some(w) = &r.witness {
        let label = if kind == Predicate::Bounded {
            "missing-direction"
        } else {
            "witness"
        };
        let _ = writeln!(out, "certificate: {label} {}", join(w, fmt_ratio));
    } else {
        out.push_str("certificate: none\n");
    }
}

/// Evaluates one predicate and prints its value, method and certificate.
/// Files containing `p/q` coordinates use exact arithmetic.
pub fn cmd_check(path: &str, predicate: Predicate) -> CliResult<Report> {
    let file = SiteFile::read(path)?;
    let sys = file.to_system()?;
    let mut out = format!("predicate: {}\n", predicate.name());
    if predicate == Predicate::Ball {
        match ball_witness(&sys)? {
            Some((c, r)) => {
                out.push_str("value: true\nmethod: ball around a point of the cell\n");
                let _ = writeln!(out, "center: {}", join(c.coords(), |x| fmt12(*x)));
                let _ = writeln!(out, "radius: {}", fmt12(r));
            }
            None => out.push_str("value: false\nmethod: ball around a point of the cell\n"),
        }
        return Ok(Report::ok(out));
    }
    if file.is_exact() {
        let q = file.to_rational()?;
        let r = match predicate {
            Predicate::Empty => is_empty_exact(&q)?,
            Predicate::Bounded => is_bounded_exact(&q)?,
            _ => has_interior_exact(&q)?,
        };
        exact_report(&mut out, &r, predicate);
    } else {
        let r = match predicate {
            Predicate::Empty => is_empty(&sys)?,
            Predicate::Bounded => is_bounded(&sys)?,
            _ => has_interior(&sys)?,
        };
        float_report(&mut out, &r);
    }
    Ok(Report::ok(out))
}

/// Shape tag with its vertices on the first line, then rays and flags.
pub fn describe_shape(shape: &CellShape) -> String {
    let mut out = shape.tag().to_string();
    for v in shape.vertices() {
        out.push(' ');
        out.push_str(&point_text(v));
    }
    out.push('\n');
    let rays = shape.rays();
    if !rays.is_empty() {
        let _ = writeln!(out, "rays: {}", join(&rays, |r| point_text(*r)));
    }
    match shape {
        CellShape::Halfplane { halfspace } => {
            let halfspace = halfspace.normalized();
            let _ = writeln!(
                out,
                "halfspace: {} | {}",
                join(halfspace.normal(), |x| fmt12(*x)),
                fmt12(halfspace.offset())
            );
        }
        CellShape::Strip { halfspaces, width } => {
            for h in halfspaces.iter().map(|h| h.normalized()) {
                let _ = writeln!(
                    out,
                    "halfspace: {} | {}",
                    join(h.normal(), |x| fmt12(*x)),
                    fmt12(h.offset())
                );
            }
            let _ = writeln!(out, "width: {}", fmt12(*width));
        }
        CellShape::BoundedQuadrilateral {
            cyclic, ambiguous, ..
        } => {
            let _ = writeln!(out, "cyclic: {cyclic}");
            if *ambiguous {
                out.push_str("cyclic-test: near threshold\n");
            }
        }
        CellShape::UnboundedThreeSide {
            parallel_unbounded_sides,
            ..
        }
        | CellShape::UnboundedQuadrilateral {
            parallel_unbounded_sides,
            ..
        } => {
            let _ = writeln!(out, "parallel: {parallel_unbounded_sides}");
        }
        CellShape::OtherPolygon { bounded, .. } => {
            let _ = writeln!(out, "bounded: {bounded}");
        }
        _ => {}
    }
    out
}

pub fn cmd_classify(path: &str) -> CliResult<Report> {
    let file = SiteFile::read(path)?;
    planar(&file)?;
    let shape = classify2d(&file.to_system()?)?;
    Ok(Report::ok(describe_shape(&shape)))
}

/// Shapes accepted by `construct --shape`.
pub const SHAPE_NAMES: [&str; 10] = [
    "empty",
    "singleton",
    "halfspace",
    "strip",
    "wedge",
    "triangle",
    "quadrilateral",
    "unbounded-three",
    "unbounded-quad-parallel",
    "unbounded-quad-general",
];

/// Parameters of `construct`. Positional `values` carry the center of a
/// singleton or the vertex coordinates of a polygon.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ConstructRequest {
    pub shape: Option<String>,
    pub values: Vec<f64>,
    pub d: Vec<f64>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub gamma: Option<f64>,
    pub sigma: Option<usize>,
    pub tau: Option<usize>,
    pub v1: Vec<f64>,
    pub v2: Vec<f64>,
    pub b1: Option<f64>,
    pub b2: Option<f64>,
    pub rays: Vec<f64>,
    pub target: Option<String>,
}

fn need(v: Option<f64>, flag: &str) -> CliResult<f64> {
    v.ok_or_else(|| CliError::Usage(format!("missing --{flag}")))
}

fn points<const K: usize>(values: &[f64], what: &str) -> CliResult<[P2; K]> {
    if values.len() != 2 * K {
        return Err(CliError::Usage(format!(
            "{what} needs {} coordinates, got {}",
            2 * K,
            values.len()
        )));
    }
    Ok(std::array::from_fn(|i| [values[2 * i], values[2 * i + 1]]))
}

fn shape_target(req: &ConstructRequest, name: &str) -> CliResult<Target> {
    let shape = match name {
        "singleton" => TargetShape::Singleton {
            center: kcell::Point::new(req.values.clone())?,
        },
        "halfspace" => TargetShape::Halfspace {
            d: req.d.clone(),
            gamma: need(req.gamma, "gamma")?,
            sigma: req.sigma.unwrap_or(2),
            tau: req.tau.unwrap_or(4),
        },
        "strip" => TargetShape::Strip {
            d: req.d.clone(),
            alpha: need(req.alpha, "alpha")?,
            beta: need(req.beta, "beta")?,
        },
        "wedge" => TargetShape::Wedge {
            v1: req.v1.clone(),
            v2: req.v2.clone(),
            b1: need(req.b1, "b1")?,
            b2: need(req.b2, "b2")?,
        },
        "triangle" => {
            let v: [P2; 3] = points(&req.values, "triangle")?;
            return Ok(Target::HRep(polygon_hrep(&v)?));
        }
        "quadrilateral" => TargetShape::NonCyclicQuadrilateral {
            vertices: points(&req.values, "quadrilateral")?,
        },
        "unbounded-three" => TargetShape::UnboundedThreeSide {
            vertices: points(&req.values, "unbounded-three")?,
            rays: points(&req.rays, "--rays")?,
        },
        "unbounded-quad-parallel" => TargetShape::UnboundedQuadParallel {
            vertices: points(&req.values, "unbounded-quad-parallel")?,
            rays: points(&req.rays, "--rays")?,
        },
        "unbounded-quad-general" => TargetShape::UnboundedQuadGeneral {
            vertices: points(&req.values, "unbounded-quad-general")?,
            rays: points(&req.rays, "--rays")?,
        },
        other => {
            return Err(CliError::Usage(format!(
                "unknown shape `{other}`; expected one of {}",
                SHAPE_NAMES.join(", ")
            )))
        }
    };
    Ok(Target::Shape(shape))
}

fn impossible(reason: &ImpossibilityReason) -> Report {
    Report {
        code: EXIT_IMPOSSIBLE,
        text: format!("impossible: {reason}\n"),
    }
}

/// Sites realizing a shape or inequality file, as a site file; refusals
/// exit with code 5.
pub fn cmd_construct(req: &ConstructRequest) -> CliResult<Report> {
    let target = match (&req.shape, &req.target) {
        (Some(_), Some(_)) => {
            return Err(CliError::Usage("give either --shape or --target".into()))
        }
        (None, None) => return Err(CliError::Usage("need --shape or --target".into())),
        (Some(name), None) if name == "empty" => {
            let sys = kcell::constructions::construct_empty();
            return Ok(Report::ok(SiteFile::from_system(&sys).emit()));
        }
        (Some(name), None) => shape_target(req, name)?,
        (None, Some(path)) => Target::HRep(parse_hrep(&read_text(path)?)?),
    };
    let result = match construct(&target) {
        Err(kcell::Error::CyclicInput(r)) | Err(kcell::Error::ParallelUnboundedSides(r)) => {
            return Ok(impossible(&r))
        }
        other => other?,
    };
    Ok(match result {
        Construction::Sites(sys) => Report::ok(SiteFile::from_system(&sys).emit()),
        Construction::Impossible(r) => impossible(&r),
    })
}

/// Parameters of `diagram`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagramRequest {
    pub input: String,
    pub k: usize,
    pub svg: Option<String>,
    pub bbox: Option<[f64; 4]>,
    pub resolution: usize,
    pub palette_seed: u64,
    pub width_px: u32,
    pub height_px: u32,
}

/// Samples of the coverage check: every point off the cell boundaries must
/// lie in exactly one nonempty cell.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Coverage {
    pub samples: usize,
    pub uncovered: usize,
    pub multiple: usize,
    pub skipped: usize,
}

pub fn coverage(
    cells: &[DiagramCell],
    bbox: &BoundingBox,
    resolution: usize,
) -> CliResult<Coverage> {
    let grid = SampleGrid::new(bbox.clone(), resolution, 0)?;
    let live: Vec<&HPolyhedron> = cells.iter().filter(|c| !c.empty).map(|c| &c.hrep).collect();
    let mut cov = Coverage::default();
    for x in grid.points() {
        cov.samples += 1;
        let near = live.iter().any(|h| {
            h.halfspaces()
                .iter()
                .any(|r| r.normalized_slack(&x).abs() < kcell::oracle::BOUNDARY_SKIP_TOL)
        });
        if near {
            cov.skipped += 1;
            continue;
        }
        match live.iter().filter(|h| h.contains_point(&x, 0.0)).count() {
            0 => cov.uncovered += 1,
            1 => {}
            _ => cov.multiple += 1,
        }
    }
    Ok(cov)
}

/// Order-k diagram of a planar site file: an SVG (when requested), the
/// empty/nonempty status of every subset, and a coverage check. Exits 1
/// when a sample is uncovered or covered twice.
pub fn cmd_diagram(req: &DiagramRequest) -> CliResult<Report> {
    let file = SiteFile::read(&req.input)?;
    planar(&file)?;
    let sys = file.to_system()?;
    let sites = sys.sites();
    let bbox = match req.bbox {
        Some([x0, y0, x1, y1]) => BoundingBox::new(vec![x0, y0], vec![x1, y1])?,
        None => BoundingBox::around(sites.iter().map(|s| &s.point), 1.5)?,
    };
    let cells = diagram(sites, req.k, &bbox)?;
    if let Some(path) = &req.svg {
        if req.width_px == 0 || req.height_px == 0 {
            return Err(CliError::Usage("image size must be positive".into()));
        }
        let spec = RenderSpec {
            bbox: bbox.clone(),
            width_px: req.width_px,
            height_px: req.height_px,
            palette_seed: req.palette_seed,
        };
        std::fs::write(path, render(&cells, sites, &spec)).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
    }
    let empty = cells.iter().filter(|c| c.empty).count();
    let mut out = format!(
        "order: {}\nsites: {}\ncells: {} ({} nonempty, {} empty)\n",
        req.k,
        sites.len(),
        cells.len(),
        cells.len() - empty,
        empty
    );
    for c in &cells {
        let status = if c.empty { "empty" } else { "nonempty" };
        let _ = writeln!(out, "{{{}}} {status}", c.subset.join(","));
    }
    let cov = coverage(&cells, &bbox, req.resolution)?;
    let _ = writeln!(
        out,
        "coverage: {} samples, {} uncovered, {} multiply covered, {} near boundaries",
        cov.samples, cov.uncovered, cov.multiple, cov.skipped
    );
    let code = if cov.uncovered + cov.multiple == 0 {
        EXIT_OK
    } else {
        EXIT_FALSIFIED
    };
    Ok(Report { code, text: out })
}

/// Parameters of `verify`.
#[derive(Clone, Debug, PartialEq)]
pub struct VerifyRequest {
    pub input: String,
    pub samples: usize,
    pub seed: u64,
    pub hrep: Option<String>,
}

/// Samples a jittered grid over twice the sites' extent and compares the
/// distance definition with the cell's inequalities (or the given file's).
/// Exits 1 on any disagreement.
pub fn cmd_verify(req: &VerifyRequest) -> CliResult<Report> {
    let sys: SiteSystem = SiteFile::read(&req.input)?.to_system()?;
    let hrep = match &req.hrep {
        Some(path) => parse_hrep(&read_text(path)?)?,
        None => cell_hrep(&sys),
    };
    let n = sys.dim() as f64;
    let per_axis = ((req.samples.max(1) as f64).powf(1.0 / n).ceil() as usize).max(2);
    let bbox = BoundingBox::around(sys.sites().iter().map(|s| &s.point), 2.0)?;
    let grid = SampleGrid::new(bbox, per_axis, req.seed)?;
    let rep = agree(&sys, &hrep, &grid)?;
    let text = format!(
        "samples: {}\ndisagreements: {}\nskipped_boundary: {}\n",
        rep.samples, rep.disagreements, rep.skipped_boundary
    );
    let code = if rep.agrees() {
        EXIT_OK
    } else {
        EXIT_FALSIFIED
    };
    Ok(Report { code, text })
}
