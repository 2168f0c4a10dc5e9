//! Static SVG rendering of the domain boundary.

use std::fmt::Write as _;

use trifold::domain::{CurveKind, DomainBoundary};

pub const SIZE: f64 = 800.0;
const MARGIN: f64 = 60.0;

fn color(kind: CurveKind) -> &'static str {
    match kind {
        CurveKind::Gamma1 => "#1f77b4",
        CurveKind::Gamma2Plus => "#d62728",
        CurveKind::Gamma2Minus => "#ff7f0e",
        CurveKind::Gamma3Plus => "#2ca02c",
        CurveKind::Gamma3Minus => "#9467bd",
    }
}

/// Maps coefficient-plane points into the viewport with one scale for both axes.
struct Frame {
    scale: f64,
    cx: f64,
    cy: f64,
}

impl Frame {
    fn new(lo: (f64, f64), hi: (f64, f64)) -> Self {
        let span = (hi.0 - lo.0).max(hi.1 - lo.1).max(f64::MIN_POSITIVE);
        Self {
            scale: (SIZE - 2.0 * MARGIN) / span,
            cx: 0.5 * (lo.0 + hi.0),
            cy: 0.5 * (lo.1 + hi.1),
        }
    }

    fn x(&self, a: f64) -> f64 {
        SIZE / 2.0 + (a - self.cx) * self.scale
    }

    fn y(&self, b: f64) -> f64 {
        SIZE / 2.0 - (b - self.cy) * self.scale
    }
}

pub fn render(boundary: &DomainBoundary<f64>) -> String {
    let (lo, hi) = boundary.bounding_box();
    let frame = Frame::new((lo.x.min(0.0), lo.y.min(0.0)), (hi.x.max(0.0), hi.y.max(0.0)));
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="30" font-family="sans-serif" font-size="18" text-anchor="middle">U_{} in the (a, b) plane</text>"#,
        SIZE / 2.0,
        boundary.fold()
    );

    // axes through the origin
    let (x0, y0) = (frame.x(0.0), frame.y(0.0));
    let _ = writeln!(
        s,
        r##"<g id="axes" stroke="#888" stroke-width="1"><line x1="{:.3}" y1="{y0:.3}" x2="{:.3}" y2="{y0:.3}"/><line x1="{x0:.3}" y1="{:.3}" x2="{x0:.3}" y2="{:.3}"/></g>"##,
        MARGIN / 2.0,
        SIZE - MARGIN / 2.0,
        SIZE - MARGIN / 2.0,
        MARGIN / 2.0
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="14">a</text>"#,
        SIZE - MARGIN / 2.0 + 4.0,
        y0 + 5.0
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="14">b</text>"#,
        x0 - 4.0,
        MARGIN / 2.0 - 6.0
    );

    for kind in CurveKind::ALL {
        let mut d = String::new();
        for (i, sample) in boundary.segment_samples(kind).enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            let _ = write!(d, "{cmd}{:.3},{:.3} ", frame.x(sample.point.x), frame.y(sample.point.y));
        }
        let _ = writeln!(
            s,
            r#"<path id="{}" d="{}" fill="none" stroke="{}" stroke-width="2"/>"#,
            kind.name(),
            d.trim_end(),
            color(kind)
        );
    }

    let _ = writeln!(s, r#"<g id="legend" font-family="sans-serif" font-size="13">"#);
    for (i, kind) in CurveKind::ALL.iter().enumerate() {
        let y = SIZE - MARGIN / 2.0 - 18.0 * (CurveKind::ALL.len() - 1 - i) as f64;
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="{}" stroke-width="3"/><text x="{}" y="{}">{}</text>"#,
            MARGIN / 2.0,
            MARGIN / 2.0 + 24.0,
            color(*kind),
            MARGIN / 2.0 + 30.0,
            y + 4.0,
            kind.name()
        );
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    s
}
