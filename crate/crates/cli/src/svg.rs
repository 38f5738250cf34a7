//! Static SVG rendering of domains, paths, traces and contours.
//!
//! Output depends only on the input: coordinates are printed with fixed
//! precision and elements are emitted in input order.

use std::fmt::Write;

use mocposite::continuation::ContinuationTrace;
use mocposite::{principal_log, principal_sqrt, Complex, ContourSpec, EquationKind, Orientation, PolyPath, SlitDomain};

const WIDTH: f64 = 800.0;
const MARGIN: f64 = 0.1;
const PALETTE: [&str; 2] = ["#1f77b4", "#d62728"];

#[derive(Debug, Default)]
pub struct Scene {
    pub domain: Option<SlitDomain>,
    pub paths: Vec<PolyPath>,
    pub traces: Vec<(ContinuationTrace, EquationKind)>,
    pub contours: Vec<ContourSpec>,
}

struct Frame {
    lo: Complex,
    hi: Complex,
    scale: f64,
    height: f64,
}

impl Frame {
    fn fit(points: &[Complex]) -> Self {
        let mut lo = Complex::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Complex::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for z in points.iter().filter(|z| z.re.is_finite() && z.im.is_finite()) {
            lo = Complex::new(lo.re.min(z.re), lo.im.min(z.im));
            hi = Complex::new(hi.re.max(z.re), hi.im.max(z.im));
        }
        if lo.re > hi.re {
            lo = Complex::new(-1.0, -1.0);
            hi = Complex::new(1.0, 1.0);
        }
        // keep flat boxes at least a quarter as tall as they are wide
        let span = (hi.re - lo.re).max(hi.im - lo.im).max(1e-9);
        let centre = (lo + hi) * 0.5;
        let half = Complex::new((hi.re - lo.re).max(span * 0.25), (hi.im - lo.im).max(span * 0.25)) * (0.5 + MARGIN);
        let (lo, hi) = (centre - half, centre + half);
        let scale = WIDTH / (hi.re - lo.re);
        let height = (hi.im - lo.im) * scale;
        Self { lo, hi, scale, height }
    }

    fn xy(&self, z: Complex) -> (f64, f64) {
        ((z.re - self.lo.re) * self.scale, (self.hi.im - z.im) * self.scale)
    }

    fn coords(&self, points: &[Complex]) -> String {
        let mut out = String::new();
        for (k, z) in points.iter().enumerate() {
            let (x, y) = self.xy(*z);
            if k > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{x:.3},{y:.3}");
        }
        out
    }
}

/// Sheet index of a continued value: 0 on the principal sheet, 1 otherwise
/// (for logarithms, the parity of the `2πi` offset).
fn sheet(w: Complex, kind: EquationKind) -> usize {
    match kind {
        EquationKind::Sqrt => {
            let p = principal_sqrt(w * w);
            usize::from((w - p).norm() > (w + p).norm())
        }
        EquationKind::Log => {
            let k = principal_log(w.exp()).map_or(0.0, |p| ((w - p).im / std::f64::consts::TAU).round());
            (k as i64).rem_euclid(2) as usize
        }
    }
}

/// Splits a trace into maximal runs on one sheet; neighbouring runs share
/// their boundary sample.
pub fn sheet_runs(trace: &ContinuationTrace, kind: EquationKind) -> Vec<(usize, Vec<Complex>)> {
    let mut runs: Vec<(usize, Vec<Complex>)> = Vec::new();
    for (z, w) in &trace.samples {
        let s = sheet(*w, kind);
        match runs.last_mut() {
            Some((current, points)) if *current == s => points.push(*z),
            Some((_, points)) => {
                let joint = *points.last().expect("runs are never empty");
                runs.push((s, vec![joint, *z]));
            }
            None => runs.push((s, vec![*z])),
        }
    }
    runs
}

pub fn render(scene: &Scene) -> String {
    let mut extent: Vec<Complex> = Vec::new();
    if let Some(domain) = &scene.domain {
        extent.extend(domain.finite_points());
    }
    for p in &scene.paths {
        extent.extend_from_slice(p.points());
    }
    for (t, _) in &scene.traces {
        extent.extend(t.samples.iter().map(|(z, _)| *z));
    }
    for c in &scene.contours {
        extent.extend(c.sample_points());
    }
    let frame = Frame::fit(&extent);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH:.0}" height="{h:.0}" viewBox="0 0 {WIDTH:.3} {h:.3}">"#,
        h = frame.height
    );
    out.push_str(concat!(
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"8\" ",
        "markerHeight=\"8\" orient=\"auto-start-reverse\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"context-stroke\"/>",
        "</marker></defs>\n"
    ));
    let _ = writeln!(out, r#"<rect class="background" width="100%" height="100%" fill="white"/>"#);
    axes(&mut out, &frame);

    if let Some(domain) = &scene.domain {
        for slit in &domain.slits {
            for pair in slit.samples().windows(2) {
                let (x0, y0) = frame.xy(pair[0]);
                let (x1, y1) = frame.xy(pair[1]);
                let _ = writeln!(
                    out,
                    r#"<path class="slit" d="M{x0:.3},{y0:.3} L{x1:.3},{y1:.3}" stroke="black" stroke-width="2" fill="none"/>"#
                );
            }
            if let (Some(dir), Some(end)) = (slit.unbounded_tail(), slit.samples().last()) {
                // the slit continues to infinity beyond its last sample
                let (x0, y0) = frame.xy(*end);
                let (x1, y1) = frame.xy(*end + dir * (0.05 * (frame.hi.re - frame.lo.re)));
                let _ = writeln!(
                    out,
                    r#"<path class="slit-tail" d="M{x0:.3},{y0:.3} L{x1:.3},{y1:.3}" stroke="black" stroke-width="2" stroke-dasharray="4 3" fill="none"/>"#
                );
            }
        }
        for p in &domain.punctures {
            let (x, y) = frame.xy(*p);
            let _ = writeln!(out, r#"<circle class="puncture" cx="{x:.3}" cy="{y:.3}" r="4" fill="black"/>"#);
        }
    }

    for p in &scene.paths {
        let mut points = p.points().to_vec();
        if p.is_closed() {
            points.push(p.start());
        }
        let _ = writeln!(
            out,
            r##"<polyline class="path" points="{}" stroke="#2ca02c" stroke-width="1.5" fill="none" marker-end="url(#arrow)"/>"##,
            frame.coords(&points)
        );
    }

    for (trace, kind) in &scene.traces {
        for (s, points) in sheet_runs(trace, *kind) {
            let label = if s == 0 { "principal" } else { "flipped" };
            let _ = writeln!(
                out,
                r#"<polyline class="trace sheet-{label}" points="{}" stroke="{}" stroke-width="2" fill="none"/>"#,
                frame.coords(&points),
                PALETTE[s]
            );
        }
        if let Some((z, _)) = trace.samples.last() {
            let (x, y) = frame.xy(*z);
            let _ = writeln!(out, r#"<circle class="trace-end" cx="{x:.3}" cy="{y:.3}" r="3" fill="black"/>"#);
        }
    }

    for c in &scene.contours {
        let points = c.sample_points();
        let shape = match c.shape {
            mocposite::quadrature::ContourShape::Circle { .. } => "circle",
            mocposite::quadrature::ContourShape::Ellipse { .. } => "ellipse",
        };
        let orientation = match c.orientation {
            Orientation::Ccw => "ccw",
            Orientation::Cw => "cw",
        };
        let _ = writeln!(
            out,
            r##"<polygon class="contour {shape} {orientation}" points="{}" stroke="#9467bd" stroke-width="1.5" fill="none"/>"##,
            frame.coords(&points)
        );
        // one arrowhead a few samples into the traversal shows the direction
        let k = (points.len() / 8).max(1);
        let _ = writeln!(
            out,
            r##"<polyline class="orientation" points="{}" stroke="#9467bd" fill="none" marker-end="url(#arrow)"/>"##,
            frame.coords(&points[k - 1..=k])
        );
    }

    out.push_str("</svg>\n");
    out
}

fn axes(out: &mut String, frame: &Frame) {
    let grey = r##"stroke="#cccccc" stroke-width="1""##;
    if frame.lo.im <= 0.0 && 0.0 <= frame.hi.im {
        let (x0, y) = frame.xy(Complex::new(frame.lo.re, 0.0));
        let (x1, _) = frame.xy(Complex::new(frame.hi.re, 0.0));
        let _ = writeln!(out, r#"<line class="axis" x1="{x0:.3}" y1="{y:.3}" x2="{x1:.3}" y2="{y:.3}" {grey}/>"#);
    }
    if frame.lo.re <= 0.0 && 0.0 <= frame.hi.re {
        let (x, y0) = frame.xy(Complex::new(0.0, frame.hi.im));
        let (_, y1) = frame.xy(Complex::new(0.0, frame.lo.im));
        let _ = writeln!(out, r#"<line class="axis" x1="{x:.3}" y1="{y0:.3}" x2="{x:.3}" y2="{y1:.3}" {grey}/>"#);
    }
}
