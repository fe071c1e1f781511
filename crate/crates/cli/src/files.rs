//! Site files and inequality files.
//!
//! A site file is
//!
//! ```text
//! dim 2
//! a 0 0
//! b 1 0
//! c 1/3 2
//! S: a
//! ```
//!
//! Coordinates are decimal numbers or exact `p/q` ratios. Blank lines and
//! lines starting with `#` are ignored. An inequality file starts with the
//! same `dim` line followed by rows `a1 ... an | b`, each optionally
//! followed by a parenthesized note such as the `(s, t)` pair it came from.

use kcell::lp::Scalar;
use kcell::predicates::RationalSites;
use kcell::{HPolyhedron, Halfspace, Point, Site, SiteSystem};
use num_rational::BigRational;

use crate::error::{CliError, CliResult};
use crate::format::fmt17;

#[derive(Clone, Debug, PartialEq)]
pub enum Coord {
    Float(f64),
    Ratio(BigRational),
}

impl Coord {
    pub fn value(&self) -> f64 {
        match self {
            Coord::Float(x) => *x,
            Coord::Ratio(q) => q.to_f64_lossy(),
        }
    }

    pub fn exact(&self) -> BigRational {
        match self {
            Coord::Float(x) => BigRational::from_f64_exact(*x),
            Coord::Ratio(q) => q.clone(),
        }
    }

    fn emit(&self) -> String {
        match self {
            Coord::Float(x) => fmt17(*x),
            Coord::Ratio(q) => format!("{}/{}", q.numer(), q.denom()),
        }
    }
}

fn parse_coord(tok: &str, line: usize) -> CliResult<Coord> {
    if tok.contains('/') {
        let q: BigRational = tok
            .parse()
            .map_err(|_| CliError::parse(line, format!("bad ratio `{tok}`")))?;
        return Ok(Coord::Ratio(q));
    }
    let x: f64 = tok
        .parse()
        .map_err(|_| CliError::parse(line, format!("bad number `{tok}`")))?;
    if !x.is_finite() {
        return Err(CliError::parse(line, format!("non-finite number `{tok}`")));
    }
    Ok(Coord::Float(x))
}

fn parse_f64(tok: &str, line: usize) -> CliResult<f64> {
    Ok(parse_coord(tok, line)?.value())
}

/// Meaningful lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_dim(entry: Option<(usize, &str)>) -> CliResult<usize> {
    let (line, text) = entry.ok_or_else(|| CliError::parse(1, "missing `dim <n>` line"))?;
    let mut toks = text.split_whitespace();
    match (toks.next(), toks.next(), toks.next()) {
        (Some("dim"), Some(n), None) => match n.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(CliError::parse(line, format!("bad dimension `{n}`"))),
        },
        _ => Err(CliError::parse(line, "expected `dim <n>`")),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SiteFile {
    pub dim: usize,
    pub sites: Vec<(String, Vec<Coord>)>,
    pub s_labels: Vec<String>,
}

impl SiteFile {
    pub fn parse(text: &str) -> CliResult<Self> {
        let mut lines = content_lines(text);
        let dim = parse_dim(lines.next())?;
        let mut sites = Vec::new();
        let mut s_labels = None;
        for (line, text) in lines {
            if s_labels.is_some() {
                return Err(CliError::parse(line, "content after the `S:` line"));
            }
            if let Some(rest) = text.strip_prefix("S:") {
                s_labels = Some(rest.split_whitespace().map(String::from).collect());
                continue;
            }
            let mut toks = text.split_whitespace();
            let label = toks.next().expect("nonempty line");
            if !label.chars().all(|c| c.is_ascii_graphic()) {
                return Err(CliError::parse(
                    line,
                    format!("label `{label}` is not ASCII"),
                ));
            }
            let coords = toks
                .map(|t| parse_coord(t, line))
                .collect::<CliResult<Vec<_>>>()?;
            if coords.len() != dim {
                return Err(CliError::parse(
                    line,
                    format!("expected {dim} coordinates, found {}", coords.len()),
                ));
            }
            sites.push((label.to_string(), coords));
        }
        let s_labels = s_labels.ok_or_else(|| {
            CliError::parse(text.lines().count().max(1), "missing `S: <labels>` line")
        })?;
        Ok(SiteFile {
            dim,
            sites,
            s_labels,
        })
    }

    pub fn read(path: &str) -> CliResult<Self> {
        SiteFile::parse(&read_text(path)?)
    }

    pub fn from_system(sys: &SiteSystem) -> Self {
        SiteFile {
            dim: sys.dim(),
            sites: sys
                .sites()
                .iter()
                .map(|s| {
                    let c = s.point.coords().iter().map(|&x| Coord::Float(x)).collect();
                    (s.label.clone(), c)
                })
                .collect(),
            s_labels: sys.s_labels().iter().map(|l| l.to_string()).collect(),
        }
    }

    /// Canonical text: coordinates with 17 significant digits, ratios reduced.
    pub fn emit(&self) -> String {
        let mut out = format!("dim {}\n", self.dim);
        for (label, coords) in &self.sites {
            out.push_str(label);
            for c in coords {
                out.push(' ');
                out.push_str(&c.emit());
            }
            out.push('\n');
        }
        out.push_str("S:");
        for l in &self.s_labels {
            out.push(' ');
            out.push_str(l);
        }
        out.push('\n');
        out
    }

    /// Whether any coordinate was given as a ratio.
    pub fn is_exact(&self) -> bool {
        self.sites
            .iter()
            .any(|(_, c)| c.iter().any(|x| matches!(x, Coord::Ratio(_))))
    }

    pub fn to_system(&self) -> CliResult<SiteSystem> {
        let sites = self
            .sites
            .iter()
            .map(|(label, c)| {
                Ok(Site::new(
                    label.clone(),
                    Point::new(c.iter().map(Coord::value).collect())?,
                ))
            })
            .collect::<CliResult<Vec<_>>>()?;
        Ok(SiteSystem::new(sites, &self.s_labels)?)
    }

    /// Exact image; validates the system the same way as [`Self::to_system`].
    pub fn to_rational(&self) -> CliResult<RationalSites> {
        self.to_system()?;
        let exact = |c: &Vec<Coord>| c.iter().map(Coord::exact).collect::<Vec<_>>();
        let (s, others): (Vec<_>, Vec<_>) = self
            .sites
            .iter()
            .partition(|(label, _)| self.s_labels.contains(label));
        Ok(RationalSites::new(
            s.iter().map(|(_, c)| exact(c)).collect(),
            others.iter().map(|(_, c)| exact(c)).collect(),
        )?)
    }
}

pub fn read_text(path: &str) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}

pub fn parse_hrep(text: &str) -> CliResult<HPolyhedron> {
    let mut lines = content_lines(text);
    let dim = parse_dim(lines.next())?;
    let mut rows = Vec::new();
    for (line, text) in lines {
        let (lhs, rhs) = text
            .split_once('|')
            .ok_or_else(|| CliError::parse(line, "expected `a1 ... an | b`"))?;
        let a = lhs
            .split_whitespace()
            .map(|t| parse_f64(t, line))
            .collect::<CliResult<Vec<_>>>()?;
        if a.len() != dim {
            return Err(CliError::parse(
                line,
                format!("expected {dim} coefficients, found {}", a.len()),
            ));
        }
        let rhs = rhs.split_once('(').map_or(rhs, |(b, _)| b);
        let mut rhs_toks = rhs.split_whitespace();
        let b = match (rhs_toks.next(), rhs_toks.next()) {
            (Some(t), None) => parse_f64(t, line)?,
            _ => return Err(CliError::parse(line, "expected one number after `|`")),
        };
        rows.push(Halfspace::new(a, b).map_err(|e| CliError::parse(line, e.to_string()))?);
    }
    Ok(HPolyhedron::new(dim, rows)?)
}

pub fn emit_hrep(h: &HPolyhedron) -> String {
    let mut out = format!("dim {}\n", h.dim());
    for row in h.halfspaces() {
        let a: Vec<String> = row.normal().iter().map(|&x| fmt17(x)).collect();
        out.push_str(&format!("{} | {}\n", a.join(" "), fmt17(row.offset())));
    }
    out
}
