//! Farey tessellation and geodesics as SVG, y axis pointing up.

use std::collections::HashSet;
use std::fmt::Write as _;

use modsurf_core::exact::BoundaryPoint;
use modsurf_core::farey::{farey_triangles, forward_steps, is_in_a, FareyEdge, Letter};
use modsurf_core::hyperbolic::Geodesic;
use modsurf_core::{Error, Result};
use num_complex::Complex64;

/// Pixels per unit of the upper half-plane.
const SCALE: f64 = 100.0;

/// Visible part of the half-plane: `[x_min, x_max] × (0, y_max]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub x_min: f64,
    pub x_max: f64,
    pub y_max: f64,
}

impl Default for Window {
    fn default() -> Self {
        Window {
            x_min: -2.0,
            x_max: 3.0,
            y_max: 2.5,
        }
    }
}

impl Window {
    pub fn new(x_min: f64, x_max: f64, y_max: f64) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite() && y_max.is_finite()) || x_min >= x_max || y_max <= 0.0 {
            return Err(Error::Domain(format!("bad window [{x_min}, {x_max}] × (0, {y_max}]")));
        }
        Ok(Window { x_min, x_max, y_max })
    }

    fn contains_x(&self, x: f64) -> bool {
        self.x_min <= x && x <= self.x_max
    }

    fn px(&self, x: f64) -> f64 {
        (x - self.x_min) * SCALE
    }

    fn py(&self, y: f64) -> f64 {
        (self.y_max - y) * SCALE
    }

    fn width(&self) -> f64 {
        (self.x_max - self.x_min) * SCALE
    }

    fn height(&self) -> f64 {
        self.y_max * SCALE
    }
}

#[derive(Clone, Debug)]
pub struct Drawing {
    pub svg: String,
    /// Number of `<path class="edge">` elements.
    pub edges: usize,
    /// Annotated letters in drawing order.
    pub letters: Vec<Letter>,
}

/// Distinct edges of `farey_triangles(depth)` whose finite endpoints lie in the window.
pub fn window_edges(depth: usize, w: &Window) -> Vec<FareyEdge> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for t in farey_triangles(depth) {
        for e in t.edges() {
            let inside = [e.left(), e.right()].iter().all(|p| p.is_infinite() || w.contains_x(p.to_f64()));
            if inside && seen.insert(e.clone()) {
                out.push(e);
            }
        }
    }
    out
}

/// Geodesic between two boundary points as path data.
fn arc_data(a: &BoundaryPoint, b: &BoundaryPoint, w: &Window) -> String {
    match (a.is_infinite(), b.is_infinite()) {
        (true, _) | (_, true) => {
            let x = if a.is_infinite() { b.to_f64() } else { a.to_f64() };
            format!("M {:.3} {:.3} L {:.3} {:.3}", w.px(x), w.py(0.0), w.px(x), 0.0)
        }
        _ => {
            let (u, v) = (a.to_f64().min(b.to_f64()), a.to_f64().max(b.to_f64()));
            let r = (v - u) / 2.0 * SCALE;
            format!(
                "M {:.3} {:.3} A {:.3} {:.3} 0 0 1 {:.3} {:.3}",
                w.px(u),
                w.py(0.0),
                r,
                r,
                w.px(v),
                w.py(0.0)
            )
        }
    }
}

/// Where the semicircle `(c, r)` meets the edge `e`.
fn meet(c: f64, r: f64, e: &FareyEdge) -> Option<Complex64> {
    let a = e.left().to_f64();
    let x = if e.right().is_infinite() {
        a
    } else {
        let b = e.right().to_f64();
        let (c2, r2) = ((a + b) / 2.0, (b - a) / 2.0);
        if (c2 - c).abs() < f64::EPSILON {
            return None;
        }
        (r * r - r2 * r2 + c2 * c2 - c * c) / (2.0 * (c2 - c))
    };
    let y2 = r * r - (x - c) * (x - c);
    (y2 > 1e-18).then(|| Complex64::new(x, y2.sqrt()))
}

/// Hyperbolic midpoint of two points on the geodesic with feet `p`, `f`.
fn midpoint(p: f64, f: f64, z1: Complex64, z2: Complex64) -> Complex64 {
    let m = |z: Complex64| (z - p) / (z - f);
    let (w1, w2) = (m(z1), m(z2));
    let w = Complex64::from_polar((w1.norm() * w2.norm()).sqrt(), w1.arg());
    (w * f - p) / (w - 1.0)
}

/// Letters of the first `depth + 1` crossings with their label positions.
fn annotations(g: &Geodesic, depth: usize) -> Result<Vec<(Letter, Complex64)>> {
    let (p, f) = (g.past().to_f64(), g.future().to_f64());
    let (c, r) = ((p + f) / 2.0, (f - p).abs() / 2.0);
    let mut entry = FareyEdge::imaginary_axis();
    let mut out = Vec::new();
    for step in forward_steps(g)?.take(depth + 1) {
        if step.letter == Letter::End {
            break;
        }
        let z_in = meet(c, r, &entry);
        let pos = match (z_in, meet(c, r, &step.edge)) {
            (Some(a), Some(b)) => midpoint(p, f, a, b),
            (Some(a), None) => a,
            _ => Complex64::new(f, 0.0),
        };
        out.push((step.letter, pos));
        entry = step.edge;
    }
    Ok(out)
}

/// Renders the tessellation to `depth` and, optionally, a geodesic; letters
/// are drawn only for geodesics in A.
pub fn draw(depth: usize, w: &Window, geodesic: Option<&Geodesic>) -> Result<Drawing> {
    let edges = window_edges(depth, w);
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.3}" height="{:.3}" viewBox="0 0 {:.3} {:.3}">"#,
        w.width(),
        w.height(),
        w.width(),
        w.height()
    );
    let _ = writeln!(
        s,
        r#"<defs><clipPath id="plane"><rect x="0" y="0" width="{:.3}" height="{:.3}"/></clipPath></defs>"#,
        w.width(),
        w.height()
    );
    let _ = writeln!(s, r#"<g clip-path="url(#plane)" fill="none">"#);
    for e in &edges {
        let _ = writeln!(
            s,
            r#"<path class="edge" stroke="black" stroke-width="1" d="{}"/>"#,
            arc_data(&e.left(), &e.right(), w)
        );
    }
    let mut letters = Vec::new();
    if let Some(g) = geodesic {
        let _ = writeln!(
            s,
            r#"<path class="geodesic" stroke="crimson" stroke-width="2" d="{}"/>"#,
            arc_data(g.past(), g.future(), w)
        );
        if is_in_a(g) {
            for (letter, z) in annotations(g, depth)? {
                let _ = writeln!(
                    s,
                    r#"<text class="letter" x="{:.3}" y="{:.3}" font-size="14" text-anchor="middle">{}</text>"#,
                    w.px(z.re),
                    w.py(z.im),
                    letter
                );
                letters.push(letter);
            }
        }
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    Ok(Drawing {
        svg: s,
        edges: edges.len(),
        letters,
    })
}
