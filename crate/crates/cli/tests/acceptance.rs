//! End-to-end acceptance suite. Runs every criterion, prints one PASS/FAIL
//! line for each, and exits nonzero if any fails.

use std::f64::consts::PI;
use std::time::Instant;

use kcell::cell_ops::{
    classify2d, remove_redundant, union_decompose, vertices2d, CellShape, ShapeTag,
};
use kcell::constructions::{
    construct, construct_halfspace, construct_singleton, construct_strip, construct_wedge,
    polygon_hrep, same_vertex_set, Construction, Target, TargetShape,
};
use kcell::geom2::{self, P2};
use kcell::lp::{self, ratio, FeasibilityResult};
use kcell::oracle::{agree, agree_with, random_system, targets, SampleGrid};
use kcell::predicates::{
    contains, facet_bisector_check, has_interior, is_bounded, is_empty, is_empty_exact,
    segments_cross, Certificate, RationalSites,
};
use kcell::{cell_hrep, membership, BoundingBox, HPolyhedron, Point, SiteSystem};
use kcell_cli::commands::{cmd_cell, cmd_construct, cmd_diagram, ConstructRequest, DiagramRequest};
use kcell_cli::files::{emit_hrep, SiteFile};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;

/// Near-degenerate instances: the largest uniform inset of the cell's
/// inequalities lies within this of zero.
const BOUNDARY_FILTER: f64 = 1e-7;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn midpoint_between() -> SiteSystem {
    SiteSystem::from_points(
        &[Point::xy(-1.0, 0.0), Point::xy(1.0, 0.0)],
        &[Point::xy(0.0, 0.0)],
    )
    .unwrap()
}

fn square_corners() -> SiteSystem {
    SiteSystem::from_points(
        &[Point::xy(0.0, 0.0), Point::xy(1.0, 1.0)],
        &[Point::xy(1.0, 0.0), Point::xy(0.0, 1.0)],
    )
    .unwrap()
}

fn write_sites(dir: &TempDir, name: &str, sys: &SiteSystem) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, SiteFile::from_system(sys).emit()).unwrap();
    p.to_str().unwrap().to_string()
}

fn margin(sys: &SiteSystem) -> Result<f64, String> {
    lp::depth_margin(sys.dim(), cell_hrep(sys).halfspaces(), 1.0).map_err(err)
}

fn midpoint_between_reproduction() -> Outcome {
    let sys = midpoint_between();
    let r = is_empty(&sys).map_err(err)?;
    check(r.value, "is_empty is false")?;
    let Some(Certificate::Multipliers(c)) = r.certificate else {
        return Err("no multipliers".into());
    };
    let back = c.reconstruct(&sys.lifted_vectors());
    let target = [0.0, 0.0, -1.0];
    let dev = back
        .iter()
        .zip(target)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    check(dev <= 1e-12, format!("reconstruction off by {dev:e}"))?;

    let exact = RationalSites::from_system(&sys);
    let er = is_empty_exact(&exact).map_err(err)?;
    check(er.value, "exact is_empty is false")?;
    let gens = exact.lifted_vectors();
    let mult = er.multipliers.ok_or("no exact multipliers")?;
    let mut sum = vec![ratio(0, 1); 3];
    for (m, g) in mult.iter().zip(&gens) {
        for (s, v) in sum.iter_mut().zip(g) {
            *s = s.clone() + m * v;
        }
    }
    check(
        sum == vec![ratio(0, 1), ratio(0, 1), ratio(-1, 1)],
        format!("exact reconstruction {sum:?}"),
    )?;

    let dir = TempDir::new().map_err(err)?;
    let path = write_sites(&dir, "midpoint.txt", &sys);
    let out = cmd_cell(&path, false).map_err(err)?.text;
    let rows: Vec<&str> = out
        .lines()
        .skip(1)
        .map(|l| l.split(" (").next().unwrap())
        .collect();
    check(
        rows == ["1 0 | -0.5", "-1 0 | -0.5"],
        format!("cell rows {rows:?}"),
    )?;
    let exact_text: Vec<String> = mult.iter().map(|m| m.to_string()).collect();
    Ok(format!(
        "multipliers {:?}, exact {}",
        c.multipliers(),
        exact_text.join(" ")
    ))
}

fn square_corners_reproduction() -> Outcome {
    let sys = square_corners();
    check(!is_empty(&sys).map_err(err)?.value, "reported empty")?;
    check(is_bounded(&sys).map_err(err)?.value, "reported unbounded")?;
    check(!has_interior(&sys).map_err(err)?.value, "reported interior")?;
    let reduced = remove_redundant(&cell_hrep(&sys)).map_err(err)?;
    let v = vertices2d(&reduced);
    check(v.len() == 1, format!("vertices {v:?}"))?;
    check(
        v[0].dist(&Point::xy(0.5, 0.5)) <= 1e-12,
        format!("vertex {}", v[0]),
    )?;
    let shape = classify2d(&sys).map_err(err)?;
    check(
        shape.tag() == ShapeTag::Singleton,
        format!("classified {}", shape.tag()),
    )?;
    Ok("singleton at (1/2, 1/2)".into())
}

fn wedge_identity() -> Outcome {
    let sys = construct_wedge(&[1.0, 0.0], &[0.0, 1.0], 0.0, 0.0).map_err(err)?;
    for site in sys.sites() {
        check(
            site.point.norm_sq() == 5.0,
            format!("|{}|^2 = {}", site.label, site.point.norm_sq()),
        )?;
    }
    let full = cell_hrep(&sys);
    let reduced = remove_redundant(&full).map_err(err)?;
    let mut rows: Vec<(Vec<f64>, f64)> = reduced
        .halfspaces()
        .iter()
        .map(|h| {
            let u = h.normalized();
            (u.normal().to_vec(), u.offset())
        })
        .collect();
    rows.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    let want = [(vec![1.0, 0.0], 0.0), (vec![0.0, 1.0], 0.0)];
    check(rows.len() == 2, format!("{} reduced rows", rows.len()))?;
    for ((a, b), (wa, wb)) in rows.iter().zip(&want) {
        let dev = a
            .iter()
            .zip(wa)
            .map(|(x, y)| (x - y).abs())
            .fold((b - wb).abs(), f64::max);
        check(dev <= 1e-12, format!("row {a:?} | {b}"))?;
    }
    let mut dropped = 0;
    for h in full.halfspaces() {
        let kept = reduced.halfspaces().iter().any(|r| r == h);
        if !kept {
            check(
                lp::implied(h, reduced.halfspaces()).map_err(err)?,
                format!("row {h} not implied"),
            )?;
            dropped += 1;
        }
    }
    check(dropped == 2, format!("{dropped} rows proven redundant"))?;
    Ok("norms 5, two cross rows implied".into())
}

fn strip_reproduction() -> Outcome {
    let sys = construct_strip(&[1.0, 0.0], 0.0, 1.0).map_err(err)?;
    let reduced = remove_redundant(&cell_hrep(&sys)).map_err(err)?;
    check(
        reduced.len() == 2,
        format!("{} reduced rows", reduced.len()),
    )?;
    let target = HPolyhedron::from_rows(2, &[(&[1.0, 0.0], 1.0), (&[-1.0, 0.0], 0.0)]);
    for h in reduced.halfspaces() {
        let u = h.normalized();
        let hit = target.halfspaces().iter().any(|t| {
            t.normal()
                .iter()
                .zip(u.normal())
                .all(|(a, b)| (a - b).abs() <= 1e-9)
                && (t.offset() - u.offset()).abs() <= 1e-9
        });
        check(hit, format!("unexpected row {u}"))?;
    }
    check(
        contains(&target, &reduced).map_err(err)?,
        "cell not inside target",
    )?;
    check(
        contains(&reduced, &target).map_err(err)?,
        "target not inside cell",
    )?;
    Ok("reduced cell is 0 <= x1 <= 1".into())
}

fn small_system(seed: u64, max_t: usize) -> SiteSystem {
    let mut r = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let t = r.gen_range(2..=max_t);
    let s = r.gen_range(1..t);
    random_system(seed, 2, t, s, 1.0).unwrap()
}

fn oracle_equivalence() -> Outcome {
    let (mut samples, mut skipped) = (0, 0);
    for seed in 0..1000 {
        let sys = small_system(seed, 6);
        let bbox = BoundingBox::around(sys.sites().iter().map(|s| &s.point), 2.0).map_err(err)?;
        let grid = SampleGrid::new(bbox, 200, seed).map_err(err)?;
        let rep = agree(&sys, &cell_hrep(&sys), &grid).map_err(err)?;
        check(
            rep.disagreements == 0,
            format!("seed {seed}: {} disagreements", rep.disagreements),
        )?;
        samples += rep.samples;
        skipped += rep.skipped_boundary;
    }
    Ok(format!(
        "{samples} samples, 0 disagreements, {skipped} on boundaries"
    ))
}

fn predicate_cross_validation() -> Outcome {
    let (mut compared, mut skipped, mut empty) = (0, 0, 0);
    for seed in 0..1000u64 {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let n = r.gen_range(2..=3);
        let t = r.gen_range(2..=7);
        let s = r.gen_range(1..t);
        let sys = random_system(seed, n, t, s, 1.0).map_err(err)?;
        if margin(&sys)?.abs() < BOUNDARY_FILTER {
            skipped += 1;
            continue;
        }
        let mut target = vec![0.0; n + 1];
        target[n] = -1.0;
        let by_cone = lp::in_cone(&target, &sys.lifted_vectors())
            .map_err(err)?
            .is_some();
        let by_hrep = matches!(
            lp::solve_feasibility(&cell_hrep(&sys).to_linear_system()).map_err(err)?,
            FeasibilityResult::Infeasible { .. }
        );
        check(
            by_cone == by_hrep,
            format!("seed {seed}: cone {by_cone}, hrep {by_hrep}"),
        )?;
        compared += 1;
        empty += usize::from(by_cone);
    }
    let frac = skipped as f64 / 1000.0;
    check(frac < 0.05, format!("skipped fraction {frac}"))?;
    Ok(format!(
        "{compared} agree ({empty} empty), skipped fraction {frac:.3}"
    ))
}

fn impossibility_suite() -> Outcome {
    let (mut errors, mut counts) = (0, std::collections::BTreeMap::new());
    for seed in 0..100_000 {
        let sys = random_system(seed, 2, 4, 2, 1.0).map_err(err)?;
        let shape = match classify2d(&sys) {
            Ok(s) => s,
            Err(_) => {
                errors += 1;
                continue;
            }
        };
        let bad = match &shape {
            CellShape::Triangle { .. } | CellShape::OneDimensional { .. } => true,
            CellShape::BoundedQuadrilateral { cyclic, .. } => *cyclic,
            CellShape::UnboundedThreeSide {
                parallel_unbounded_sides,
                ..
            } => *parallel_unbounded_sides,
            _ => false,
        };
        check(!bad, format!("seed {seed}: {shape:?}"))?;
        *counts.entry(shape.tag().name()).or_insert(0) += 1;
    }
    Ok(format!(
        "0 violations, {errors} ill-conditioned, shapes {counts:?}"
    ))
}

fn boundedness_equivalence() -> Outcome {
    let (mut compared, mut skipped, mut bounded) = (0, 0, 0);
    for seed in 0..10_000 {
        let sys = random_system(seed, 2, 4, 2, 1.0).map_err(err)?;
        let p: Vec<P2> = sys
            .sites()
            .iter()
            .map(|s| [s.point.coords()[0], s.point.coords()[1]])
            .collect();
        let degenerate = (0..4).any(|i| {
            let q: Vec<P2> = (0..4).filter(|&j| j != i).map(|j| p[j]).collect();
            geom2::orient(q[0], q[1], q[2]).abs() < BOUNDARY_FILTER
        });
        if degenerate || margin(&sys)?.abs() < BOUNDARY_FILTER {
            skipped += 1;
            continue;
        }
        let pts: Vec<&Point> = sys.sites().iter().map(|s| &s.point).collect();
        let crossing = segments_cross(pts[0], pts[1], pts[2], pts[3]).map_err(err)?;
        let b = is_bounded(&sys).map_err(err)?.value;
        check(
            b == crossing,
            format!("seed {seed}: bounded {b}, crossing {crossing}"),
        )?;
        compared += 1;
        bounded += usize::from(b);
    }
    Ok(format!(
        "{compared} agree ({bounded} bounded), {skipped} filtered"
    ))
}

fn hull_vertex_characterization() -> Outcome {
    let mut cells = 0;
    for seed in 0..1000u64 {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let t = r.gen_range(2..=7);
        let sys = random_system(seed, 2, t, 1, 1.0).map_err(err)?;
        let sites = sys.sites().to_vec();
        let pts: Vec<P2> = sites
            .iter()
            .map(|s| [s.point.coords()[0], s.point.coords()[1]])
            .collect();
        let hull = geom2::convex_hull(&pts);
        for (i, site) in sites.iter().enumerate() {
            let on_hull = hull.contains(&pts[i]);
            let others: Vec<&str> = sites
                .iter()
                .filter(|x| x.label != site.label)
                .map(|x| x.label.as_str())
                .collect();
            let leave_out = SiteSystem::new(sites.clone(), &others).map_err(err)?;
            let nonempty = !is_empty(&leave_out).map_err(err)?.value;
            check(
                nonempty == on_hull,
                format!(
                    "seed {seed}: {} on hull {on_hull}, cell nonempty {nonempty}",
                    site.label
                ),
            )?;
            let single = SiteSystem::new(sites.clone(), [&site.label]).map_err(err)?;
            check(
                !is_empty(&single).map_err(err)?.value,
                format!("seed {seed}: classic cell of {} empty", site.label),
            )?;
            cells += 2;
        }
    }
    Ok(format!("{cells} cells, 0 violations"))
}

fn small_sets_unbounded() -> Outcome {
    let mut nonempty = 0;
    let cases: [(usize, usize, Option<usize>); 4] =
        [(2, 3, None), (3, 3, None), (4, 4, None), (2, 4, Some(3))];
    for seed in 0..1000u64 {
        let (n, max_t, fixed_s) = cases[(seed % 4) as usize];
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let t = if fixed_s.is_some() {
            max_t
        } else {
            r.gen_range(2..=max_t)
        };
        let s = fixed_s.unwrap_or_else(|| r.gen_range(1..t));
        let sys = random_system(seed, n, t, s, 1.0).map_err(err)?;
        if !is_empty(&sys).map_err(err)?.value {
            nonempty += 1;
            check(
                !is_bounded(&sys).map_err(err)?.value,
                format!("seed {seed}: nonempty and bounded with n={n}, |T|={t}, |S|={s}"),
            )?;
        }
    }
    Ok(format!("{nonempty} nonempty cells, all unbounded"))
}

fn round_trip(
    sys: &SiteSystem,
    target: &HPolyhedron,
    tag: ShapeTag,
    vertices: &[P2],
) -> Result<(), String> {
    let shape = classify2d(sys).map_err(err)?;
    check(
        shape.tag() == tag,
        format!("realized {} instead of {tag}", shape.tag()),
    )?;
    let cell = remove_redundant(&cell_hrep(sys)).map_err(err)?;
    check(
        contains(target, &cell).map_err(err)?,
        "cell not inside target",
    )?;
    check(
        contains(&cell, target).map_err(err)?,
        "target not inside cell",
    )?;
    check(
        same_vertex_set(&shape.vertices(), vertices, 1e-7),
        format!("vertices {:?} vs {vertices:?}", shape.vertices()),
    )
}

fn shape_round_trip(shape: TargetShape) -> Result<(), String> {
    let sys = match construct(&Target::Shape(shape.clone())).map_err(err)? {
        Construction::Sites(s) => s,
        Construction::Impossible(r) => return Err(format!("{shape:?} refused: {r}")),
    };
    round_trip(
        &sys,
        &shape.hrep().map_err(err)?,
        shape.tag(),
        &shape.vertices(),
    )
    .map_err(|e| format!("{shape:?}: {e}"))
}

fn construction_round_trips() -> Outcome {
    for seed in 0..100u64 {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let d = geom2::from_angle(r.gen_range(0.0..2.0 * PI));
        let c = [r.gen_range(-5.0..5.0), r.gen_range(-5.0..5.0)];

        let sys = construct_singleton(&Point::xy(c[0], c[1])).map_err(err)?;
        let single = TargetShape::Singleton {
            center: Point::xy(c[0], c[1]),
        };
        round_trip(
            &sys,
            &single.hrep().map_err(err)?,
            ShapeTag::Singleton,
            &[c],
        )?;

        let gamma = r.gen_range(-3.0..3.0);
        let sigma = r.gen_range(1..=3);
        let tau = sigma + r.gen_range(1..=3);
        let sys = construct_halfspace(&d, gamma, sigma, tau).map_err(err)?;
        let half = HPolyhedron::from_rows(2, &[(&d, gamma)]);
        round_trip(&sys, &half, ShapeTag::Halfplane, &[])?;

        let alpha = r.gen_range(-3.0..3.0);
        let beta = alpha + r.gen_range(0.1..3.0);
        let sys = construct_strip(&d, alpha, beta).map_err(err)?;
        let strip = TargetShape::Strip {
            d: d.to_vec(),
            alpha,
            beta,
        };
        round_trip(&sys, &strip.hrep().map_err(err)?, ShapeTag::Strip, &[])?;

        let a1 = r.gen_range(0.0..2.0 * PI);
        let v1 = geom2::from_angle(a1);
        let v2 = geom2::from_angle(
            a1 + r.gen_range(0.2..PI - 0.2) * if r.gen_bool(0.5) { 1.0 } else { -1.0 },
        );
        let (b1, b2) = (r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0));
        let sys = construct_wedge(&v1, &v2, b1, b2).map_err(err)?;
        let wedge = HPolyhedron::from_rows(2, &[(&v1, b1), (&v2, b2)]);
        let det = v1[0] * v2[1] - v1[1] * v2[0];
        let apex = [
            (b1 * v2[1] - b2 * v1[1]) / det,
            (v1[0] * b2 - v2[0] * b1) / det,
        ];
        round_trip(&sys, &wedge, ShapeTag::Wedge, &[apex])?;

        shape_round_trip(TargetShape::NonCyclicQuadrilateral {
            vertices: targets::quadrilateral(seed),
        })?;
        shape_round_trip(targets::unbounded_three(seed))?;
        shape_round_trip(targets::unbounded_quad_parallel(seed))?;
        shape_round_trip(targets::unbounded_quad_general(seed))?;
    }

    let dir = TempDir::new().map_err(err)?;
    let path = dir.path().join("target.hrep");
    let path = path.to_str().unwrap().to_string();
    let mut refused = 0;
    for seed in 0..10_000u64 {
        let tri = polygon_hrep(&targets::triangle(seed)).map_err(err)?;
        let cyc = polygon_hrep(&targets::cyclic_quadrilateral(seed)).map_err(err)?;
        for (what, h) in [("triangle", tri), ("cyclic quadrilateral", cyc)] {
            std::fs::write(&path, emit_hrep(&h)).map_err(err)?;
            let rep = cmd_construct(&ConstructRequest {
                target: Some(path.clone()),
                ..Default::default()
            })
            .map_err(|e| format!("seed {seed} {what}: {e}"))?;
            check(
                rep.code == 5,
                format!("seed {seed}: {what} exit {}", rep.code),
            )?;
            refused += 1;
        }
    }
    Ok(format!(
        "8 constructors x 100 round trips, {refused} impossible targets refused with exit 5"
    ))
}

fn union_decomposition() -> Outcome {
    let (mut samples, mut skipped) = (0, 0);
    for seed in 0..1000u64 {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let t = r.gen_range(3..=6);
        let s = r.gen_range(2..t);
        let sys = random_system(seed, 2, t, s, 1.0).map_err(err)?;
        let pieces = union_decompose(&sys).map_err(err)?;
        let mut rows: Vec<kcell::Halfspace> = cell_hrep(&sys).halfspaces().to_vec();
        for (_, (a, b)) in &pieces {
            rows.extend_from_slice(cell_hrep(a).halfspaces());
            rows.extend_from_slice(cell_hrep(b).halfspaces());
        }
        let bbox = BoundingBox::around(sys.sites().iter().map(|s| &s.point), 2.0).map_err(err)?;
        let grid = SampleGrid::new(bbox, 100, seed).map_err(err)?;
        let pt = |x: &[f64]| Point::new(x.to_vec()).unwrap();
        let rep = agree_with(
            &grid,
            |x| membership(&pt(x), &sys).unwrap(),
            |x| {
                let p = pt(x);
                pieces
                    .iter()
                    .any(|(_, (a, b))| membership(&p, a).unwrap() && membership(&p, b).unwrap())
            },
            |x| {
                rows.iter()
                    .any(|h| h.normalized_slack(x).abs() < BOUNDARY_FILTER)
            },
        )
        .map_err(err)?;
        check(
            rep.disagreements == 0,
            format!("seed {seed}: {} disagreements", rep.disagreements),
        )?;
        samples += rep.samples;
        skipped += rep.skipped_boundary;
    }
    Ok(format!(
        "{samples} samples, 0 disagreements, {skipped} on boundaries"
    ))
}

fn facet_bisectors() -> Outcome {
    for seed in 0..100u64 {
        let q = targets::quadrilateral(seed);
        let sys = match construct(&Target::Shape(TargetShape::NonCyclicQuadrilateral {
            vertices: q,
        }))
        .map_err(err)?
        {
            Construction::Sites(s) => s,
            Construction::Impossible(r) => return Err(format!("seed {seed} refused: {r}")),
        };
        check(
            facet_bisector_check(&sys).map_err(err)?,
            format!("seed {seed}: bisector of S meets an edge"),
        )?;
    }
    Ok("100 constructed quadrilaterals".into())
}

fn coverage_line(text: &str) -> Option<(usize, usize)> {
    let line = text.lines().find(|l| l.starts_with("coverage:"))?;
    let nums: Vec<usize> = line
        .split(|c: char| !c.is_ascii_digit())
        .filter_map(|t| t.parse().ok())
        .collect();
    Some((nums[1], nums[2]))
}

fn diagram_analogue() -> Outcome {
    let dir = TempDir::new().map_err(err)?;
    let mut seeds_with_empty = 0;
    for seed in 0..20u64 {
        let sys = random_system(seed, 2, 6, 1, 1.0).map_err(err)?;
        let input = write_sites(&dir, &format!("six{seed}.txt"), &sys);
        for k in [1, 2] {
            let svg = dir.path().join(format!("d{seed}_{k}.svg"));
            let rep = cmd_diagram(&DiagramRequest {
                input: input.clone(),
                k,
                svg: Some(svg.to_str().unwrap().into()),
                bbox: None,
                resolution: 100,
                palette_seed: seed,
                width_px: 400,
                height_px: 400,
            })
            .map_err(err)?;
            let (uncovered, multiple) = coverage_line(&rep.text).ok_or("no coverage line")?;
            check(
                rep.code == 0 && uncovered == 0 && multiple == 0,
                format!("seed {seed}, k={k}: {uncovered} uncovered, {multiple} multiply covered"),
            )?;
            check(svg.exists(), "no SVG written")?;
            if k == 2 && rep.text.lines().any(|l| l.ends_with(" empty")) {
                seeds_with_empty += 1;
            }
        }
    }
    check(
        seeds_with_empty >= 1,
        "no seed produced an empty order-2 cell",
    )?;
    Ok(format!(
        "40 diagrams tile their boxes; {seeds_with_empty}/20 order-2 diagrams have empty subsets"
    ))
}

fn main() {
    let criteria: [Criterion; 14] = [
        ("two sites around a midpoint", midpoint_between_reproduction),
        (
            "square corners meet in one point",
            square_corners_reproduction,
        ),
        ("wedge identity", wedge_identity),
        ("strip reproduction", strip_reproduction),
        ("oracle equivalence", oracle_equivalence),
        ("predicate cross-validation", predicate_cross_validation),
        ("impossibility suite", impossibility_suite),
        (
            "boundedness iff crossing diagonals",
            boundedness_equivalence,
        ),
        ("hull vertex characterization", hull_vertex_characterization),
        ("small site sets give no bounded cell", small_sets_unbounded),
        ("construction round trips", construction_round_trips),
        ("union decomposition", union_decomposition),
        ("facet bisector property", facet_bisectors),
        ("order-1 and order-2 diagrams", diagram_analogue),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:2} {name}: PASS ({detail}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:2} {name}: FAIL ({why}) [{secs:.1}s]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
