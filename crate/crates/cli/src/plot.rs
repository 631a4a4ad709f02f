//! Static SVG drawing of two-dimensional moment polyhedra.
//!
//! The feasible region is shaded by exact membership tests on a quarter-step
//! grid; the lines of the inequality system, the dominant chamber walls and
//! the shifted cone `Λ + cone(ℜ_n⁺)` are overlaid.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use orbitope::exactmath::{ratio, AffineIneq};
use orbitope::{assemble, Error, GroupData, Provenance, RatVec};

/// Drawing area in pixels (square), and margin around it.
const SIZE: f64 = 480.0;
const MARGIN: f64 = 40.0;
/// Grid points per unit for the shading.
const SHADE_STEPS: i64 = 4;

struct Frame {
    lo: f64,
    hi: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        MARGIN + (x - self.lo) / (self.hi - self.lo) * SIZE
    }

    fn py(&self, y: f64) -> f64 {
        MARGIN + SIZE - (y - self.lo) / (self.hi - self.lo) * SIZE
    }

    /// The segment of `a·x = b` inside the window, if any.
    fn clip(&self, a: [f64; 2], b: f64) -> Option<[(f64, f64); 2]> {
        let mut pts: Vec<(f64, f64)> = Vec::new();
        let mut push = |p: (f64, f64)| {
            let inside = |t: f64| t >= self.lo - 1e-9 && t <= self.hi + 1e-9;
            if inside(p.0) && inside(p.1) && !pts.iter().any(|q| (q.0 - p.0).abs() + (q.1 - p.1).abs() < 1e-9) {
                pts.push(p);
            }
        };
        for edge in [self.lo, self.hi] {
            if a[1] != 0.0 {
                push((edge, (b - a[0] * edge) / a[1]));
            }
            if a[0] != 0.0 {
                push(((b - a[1] * edge) / a[0], edge));
            }
        }
        (pts.len() >= 2).then(|| [pts[0], pts[1]])
    }
}

fn coeffs(c: &AffineIneq) -> ([f64; 2], f64) {
    let n = c.normal().entries();
    let f = |r: &orbitope::Rational| r.to_f64().unwrap_or(0.0);
    ([f(&n[0]), f(&n[1])], f(c.bound()))
}

fn line(svg: &mut String, frame: &Frame, c: &AffineIneq, style: &str) {
    let (a, b) = coeffs(c);
    if let Some([(x1, y1), (x2, y2)]) = frame.clip(a, b) {
        let _ = writeln!(
            svg,
            r#"  <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" {style}/>"#,
            frame.px(x1),
            frame.py(y1),
            frame.px(x2),
            frame.py(y2)
        );
    }
}

/// Render the polyhedron of `Λ` for a rank-2 group as an SVG document.
pub fn render(g: &GroupData, lambda: &RatVec) -> anyhow::Result<String> {
    if g.dim != 2 {
        return Err(Error::UnsupportedFamily(format!(
            "plotting needs two coordinates; {} has {} (use sp:n=2 or su:n=2,q=1)",
            g.family, g.dim
        ))
        .into());
    }
    let poly = assemble(g, lambda)?;
    let lam: Vec<f64> = lambda.entries().iter().map(|r| r.to_f64().unwrap_or(0.0)).collect();
    let lo = lam.iter().copied().fold(0.0f64, f64::min).floor() - 2.0;
    let hi = lam.iter().copied().fold(0.0f64, f64::max).ceil() + 8.0;
    let frame = Frame { lo, hi };
    let total = SIZE + 2.0 * MARGIN;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{total}" height="{total}" viewBox="0 0 {total} {total}">"#
    );
    let _ = writeln!(svg, r#"  <title>{} orbit polyhedron, Lambda = ({})</title>"#, g.family.display_name(), orbitope::polytope::format_point(lambda));
    let _ = writeln!(svg, r#"  <rect x="0" y="0" width="{total}" height="{total}" fill="white"/>"#);

    // Shaded feasible region.
    let (lo_i, hi_i) = (lo as i64 * SHADE_STEPS, hi as i64 * SHADE_STEPS);
    let cell = SIZE / ((hi - lo) * SHADE_STEPS as f64);
    let _ = writeln!(svg, r##"  <g fill="#9ecae1" fill-opacity="0.6">"##);
    for i in lo_i..=hi_i {
        for j in lo_i..=hi_i {
            let p = RatVec::new(vec![ratio(i, SHADE_STEPS), ratio(j, SHADE_STEPS)]);
            if poly.member(&p)? {
                let (x, y) = (i as f64 / SHADE_STEPS as f64, j as f64 / SHADE_STEPS as f64);
                let _ = writeln!(
                    svg,
                    r#"    <rect x="{:.2}" y="{:.2}" width="{cell:.2}" height="{cell:.2}"/>"#,
                    frame.px(x) - cell / 2.0,
                    frame.py(y) - cell / 2.0
                );
            }
        }
    }
    let _ = writeln!(svg, "  </g>");

    // Axes and integer ticks.
    let axis = r#"stroke="black" stroke-width="1""#;
    if lo < 0.0 && hi > 0.0 {
        let _ = writeln!(svg, r#"  <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" {axis}/>"#, frame.px(lo), frame.py(0.0), frame.px(hi), frame.py(0.0));
        let _ = writeln!(svg, r#"  <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" {axis}/>"#, frame.px(0.0), frame.py(lo), frame.px(0.0), frame.py(hi));
    }
    for k in (lo as i64)..=(hi as i64) {
        let t = k as f64;
        let _ = writeln!(svg, r#"  <text x="{:.2}" y="{:.2}" font-size="10" text-anchor="middle">{k}</text>"#, frame.px(t), MARGIN + SIZE + 14.0);
        let _ = writeln!(svg, r#"  <text x="{:.2}" y="{:.2}" font-size="10" text-anchor="end">{k}</text>"#, MARGIN - 6.0, frame.py(t) + 3.0);
    }
    let _ = writeln!(svg, r#"  <text x="{:.2}" y="{:.2}" font-size="12">xi1</text>"#, MARGIN + SIZE - 20.0, MARGIN + SIZE + 30.0);
    let _ = writeln!(svg, r#"  <text x="{:.2}" y="{:.2}" font-size="12">xi2</text>"#, 4.0, MARGIN - 10.0);

    // Shifted cone Λ + cone(ℜ_n⁺).
    let cone = g.noncompact_cone()?.translate(lambda)?;
    for c in cone.ineqs() {
        line(&mut svg, &frame, c, r##"stroke="#31a354" stroke-width="1.5" stroke-dasharray="6 3""##);
    }
    // Chamber walls (whether or not they bound the polyhedron), then facets.
    for c in g.chamber.ineqs() {
        line(&mut svg, &frame, c, r##"stroke="#636363" stroke-width="1" stroke-dasharray="2 3""##);
    }
    for (c, prov) in poly.system.ineqs().iter().zip(&poly.provenance) {
        if *prov != Provenance::Chamber {
            line(&mut svg, &frame, c, r##"stroke="#08519c" stroke-width="1.5""##);
        }
    }
    let _ = writeln!(svg, r##"  <circle cx="{:.2}" cy="{:.2}" r="3.5" fill="#de2d26"/>"##, frame.px(lam[0]), frame.py(lam[1]));
    let _ = writeln!(svg, r#"  <text x="{:.2}" y="{:.2}" font-size="11">Lambda</text>"#, frame.px(lam[0]) + 6.0, frame.py(lam[1]) + 14.0);
    svg.push_str("</svg>\n");
    Ok(svg)
}
