//! SVG rendering of planar diagrams.

use std::fmt::Write;

use kcell::cell_ops::DiagramCell;
use kcell::{BoundingBox, Site};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Viewport and coloring of a rendering.
#[derive(Clone, Debug, PartialEq)]
pub struct RenderSpec {
    pub bbox: BoundingBox,
    pub width_px: u32,
    pub height_px: u32,
    pub palette_seed: u64,
}

impl RenderSpec {
    fn map(&self, p: &[f64]) -> (f64, f64) {
        let (lo, hi) = (self.bbox.min(), self.bbox.max());
        let x = (p[0] - lo[0]) / (hi[0] - lo[0]) * f64::from(self.width_px);
        let y = (hi[1] - p[1]) / (hi[1] - lo[1]) * f64::from(self.height_px);
        (x, y)
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// One filled, dash-outlined path per nonempty cell (clipped to the box),
/// the subset label at each cell's vertex average, and a marker per site.
pub fn render(cells: &[DiagramCell], sites: &[Site], spec: &RenderSpec) -> String {
    let (w, h) = (spec.width_px, spec.height_px);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(
        out,
        "<rect x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\" fill=\"#ffffff\" stroke=\"#000000\"/>"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(spec.palette_seed);
    let mut labels = String::new();
    out.push_str("<g id=\"cells\">\n");
    for cell in cells.iter().filter(|c| !c.empty && c.region.len() >= 3) {
        let color = format!(
            "#{:02x}{:02x}{:02x}",
            rng.gen_range(110u8..=235),
            rng.gen_range(110u8..=235),
            rng.gen_range(110u8..=235)
        );
        let mut d = String::new();
        for (i, p) in cell.region.iter().enumerate() {
            let (x, y) = spec.map(p.coords());
            let _ = write!(d, "{}{x:.3} {y:.3} ", if i == 0 { "M " } else { "L " });
        }
        d.push('Z');
        let _ = writeln!(
            out,
            "<path d=\"{d}\" fill=\"{color}\" stroke=\"#333333\" stroke-width=\"1\" stroke-dasharray=\"5 3\"/>"
        );
        let n = cell.region.len() as f64;
        let (cx, cy) = cell
            .region
            .iter()
            .map(|p| spec.map(p.coords()))
            .fold((0.0, 0.0), |a, b| (a.0 + b.0 / n, a.1 + b.1 / n));
        let _ = writeln!(
            labels,
            "<text x=\"{cx:.3}\" y=\"{cy:.3}\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">{}</text>",
            escape(&cell.subset.join(","))
        );
    }
    out.push_str("</g>\n<g id=\"labels\">\n");
    out.push_str(&labels);
    out.push_str("</g>\n<g id=\"sites\">\n");
    for s in sites {
        let (x, y) = spec.map(s.point.coords());
        let _ = writeln!(
            out,
            "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"3\" fill=\"#000000\"/>"
        );
        let _ = writeln!(
            out,
            "<text x=\"{:.3}\" y=\"{:.3}\" font-family=\"sans-serif\" font-size=\"11\">{}</text>",
            x + 4.0,
            y - 4.0,
            escape(&s.label)
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}
