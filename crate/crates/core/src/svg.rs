//! Static SVG plots of a curve, both offset branches and the reported
//! singular points.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::offset::{eval_f64, eval_offset_point_f64, Branch, CurveSpec, OffsetSystem};
use crate::report::Report;

const WIDTH: f64 = 640.0;
const MAX_DEPTH: u32 = 10;

/// Plotting window in curve coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Window {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        let ok = [x0, y0, x1, y1].iter().all(|v| v.is_finite()) && x1 > x0 && y1 > y0;
        if ok {
            Ok(Window { x0, y0, x1, y1 })
        } else {
            Err(Error::EmptyWindow)
        }
    }

    /// `"x0,y0,x1,y1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let v: Vec<f64> = s
            .split(',')
            .map(|p| p.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("window `{s}`: expected x0,y0,x1,y1")))?;
        if v.len() != 4 {
            return Err(Error::Parse(format!("window `{s}`: expected four numbers")));
        }
        Window::new(v[0], v[1], v[2], v[3])
    }

    fn diag(&self) -> f64 {
        (self.x1 - self.x0).hypot(self.y1 - self.y0)
    }

    /// The window grown by `k` times its size on each side.
    fn grown(&self, k: f64) -> Window {
        let (dx, dy) = ((self.x1 - self.x0) * k, (self.y1 - self.y0) * k);
        Window { x0: self.x0 - dx, y0: self.y0 - dy, x1: self.x1 + dx, y1: self.y1 + dy }
    }

    fn contains(&self, p: (f64, f64)) -> bool {
        self.x0 <= p.0 && p.0 <= self.x1 && self.y0 <= p.1 && p.1 <= self.y1
    }
}

/// A window around the reported points and the nearby part of the
/// generator, with aspect ratio at most 2.
pub fn auto_window(c: &CurveSpec, report: &Report) -> Window {
    let d = crate::scalar::rat_to_f64(&c.d);
    let mut pts: Vec<(f64, f64)> = report.roots.iter().flat_map(|r| r.points.iter().map(|p| (p.x, p.y))).collect();
    let reach = pts.iter().map(|p| p.0.abs().max(p.1.abs())).fold(0.0, f64::max);
    let bound = if pts.is_empty() { 10.0 * d } else { 1.5 * (reach + d) };
    for k in 1..400 {
        let t = (std::f64::consts::PI * (k as f64 / 400.0 - 0.5)).tan();
        if let Some(p) = generator_point(c, t) {
            if p.0.abs() <= bound && p.1.abs() <= bound {
                pts.push(p);
            }
        }
    }
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for (x, y) in pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    if x0 > x1 {
        return Window { x0: -1.0, y0: -1.0, x1: 1.0, y1: 1.0 };
    }
    let m = d + 0.05 * (x1 - x0).max(y1 - y0);
    let (mut w, mut h) = (x1 - x0 + 2.0 * m, y1 - y0 + 2.0 * m);
    let (cx, cy) = (0.5 * (x0 + x1), 0.5 * (y0 + y1));
    w = w.max(0.5 * h);
    h = h.max(0.5 * w);
    Window { x0: cx - 0.5 * w, y0: cy - 0.5 * h, x1: cx + 0.5 * w, y1: cy + 0.5 * h }
}

fn generator_point(c: &CurveSpec, t: f64) -> Option<(f64, f64)> {
    let w = eval_f64(&c.w, t);
    let p = (eval_f64(&c.x, t) / w, eval_f64(&c.y, t) / w);
    (p.0.is_finite() && p.1.is_finite()).then_some(p)
}

fn finite(p: Option<(f64, f64)>) -> Option<(f64, f64)> {
    p.filter(|q| q.0.is_finite() && q.1.is_finite())
}

/// Polylines of `f` over the whole parameter line (`t = tan θ`), split at
/// poles, at jumps and far outside the window.
fn trace(f: &dyn Fn(f64) -> Option<(f64, f64)>, win: &Window, samples: usize) -> Vec<Vec<(f64, f64)>> {
    let far = win.grown(2.0);
    let chord = 0.01 * win.diag();
    let at = |th: f64| finite(f(th.tan()));
    let n = samples.max(8);
    let half = std::f64::consts::FRAC_PI_2;
    let thetas: Vec<f64> = (0..=n).map(|k| -half + std::f64::consts::PI * k as f64 / n as f64).collect();
    let mut pts: Vec<Option<(f64, f64)>> = Vec::new();
    let mut prev = (thetas[0], at(thetas[0]));
    pts.push(prev.1);
    for &th in &thetas[1..] {
        let cur = (th, at(th));
        refine(&at, prev, cur, chord, &far, 0, &mut pts);
        pts.push(cur.1);
        prev = cur;
    }
    let mut out = Vec::new();
    let mut line: Vec<(f64, f64)> = Vec::new();
    for p in pts {
        let keep = match (p, line.last()) {
            (Some(q), Some(l)) => far.contains(q) && (q.0 - l.0).hypot(q.1 - l.1) <= win.diag(),
            (Some(q), None) => far.contains(q),
            (None, _) => false,
        };
        if keep {
            line.push(p.unwrap());
        } else {
            if line.len() > 1 {
                out.push(std::mem::take(&mut line));
            }
            line.clear();
            if let Some(q) = p.filter(|q| far.contains(*q)) {
                line.push(q);
            }
        }
    }
    if line.len() > 1 {
        out.push(line);
    }
    out
}

type Sample = (f64, Option<(f64, f64)>);
type PointFn<'a> = dyn Fn(f64) -> Option<(f64, f64)> + 'a;

fn refine(
    at: &dyn Fn(f64) -> Option<(f64, f64)>,
    a: Sample,
    b: Sample,
    chord: f64,
    far: &Window,
    depth: u32,
    out: &mut Vec<Option<(f64, f64)>>,
) {
    if depth >= MAX_DEPTH {
        return;
    }
    let split = match (a.1, b.1) {
        (Some(p), Some(q)) => (far.contains(p) || far.contains(q)) && (p.0 - q.0).hypot(p.1 - q.1) > chord,
        (None, None) => false,
        _ => true,
    };
    if !split {
        return;
    }
    let mid = 0.5 * (a.0 + b.0);
    let m = (mid, at(mid));
    refine(at, a, m, chord, far, depth + 1, out);
    out.push(m.1);
    refine(at, m, b, chord, far, depth + 1, out);
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

pub fn emit_svg(c: &CurveSpec, sys: &OffsetSystem, report: &Report, win: &Window, samples: usize) -> Result<String> {
    let win = Window::new(win.x0, win.y0, win.x1, win.y1)?;
    let height = WIDTH * (win.y1 - win.y0) / (win.x1 - win.x0);
    let sx = |x: f64| (x - win.x0) / (win.x1 - win.x0) * WIDTH;
    let sy = |y: f64| (win.y1 - y) / (win.y1 - win.y0) * height;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH:.0}" height="{height:.0}" viewBox="0 0 {WIDTH:.2} {height:.2}">"#
    );
    let _ = writeln!(s, "<title>{} d={}</title>", escape(&report.curve), escape(&report.d));
    let _ = writeln!(
        s,
        r#"<defs><clipPath id="view"><rect x="0" y="0" width="{WIDTH:.2}" height="{height:.2}"/></clipPath></defs>"#
    );
    let _ = writeln!(s, r##"<rect x="0" y="0" width="{WIDTH:.2}" height="{height:.2}" fill="#ffffff"/>"##);
    let _ = writeln!(s, r#"<g clip-path="url(#view)" fill="none" stroke-width="1.2" stroke-linejoin="round">"#);

    let gen = |t: f64| generator_point(c, t);
    let plus = |t: f64| eval_offset_point_f64(c, sys, t, Branch::Plus);
    let minus = |t: f64| eval_offset_point_f64(c, sys, t, Branch::Minus);
    let layers: [(&str, &str, &PointFn); 3] =
        [("generator", "#000000", &gen), ("offset-plus", "#d0702c", &plus), ("offset-minus", "#2c6fd0", &minus)];
    for (id, colour, f) in layers {
        let _ = writeln!(s, r#"<g id="{id}" stroke="{colour}">"#);
        for line in trace(f, &win, samples) {
            let pts: Vec<String> = line.iter().map(|p| format!("{:.2},{:.2}", sx(p.0), sy(p.1))).collect();
            let _ = writeln!(s, r#"<polyline points="{}"/>"#, pts.join(" "));
        }
        let _ = writeln!(s, "</g>");
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g id="singularities" stroke-width="1">"#);
    for (i, r) in report.roots.iter().enumerate() {
        for p in &r.points {
            if !win.contains((p.x, p.y)) {
                continue;
            }
            let (x, y) = (sx(p.x), sy(p.y));
            let label = format!("t{i} {} {}", r.kind, p.branch);
            let shape = match r.kind.as_str() {
                "self_intersection" => {
                    format!(r##"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="#c0392b" stroke="#000000"/>"##)
                }
                "local" => format!(
                    r##"<rect x="{:.2}" y="{:.2}" width="7" height="7" fill="#27ae60" stroke="#000000"/>"##,
                    x - 3.5,
                    y - 3.5
                ),
                "cusp_generated" => format!(
                    r##"<polygon points="{x:.2},{:.2} {:.2},{:.2} {:.2},{:.2}" fill="#8e44ad" stroke="#000000"/>"##,
                    y - 5.0,
                    x - 4.5,
                    y + 3.5,
                    x + 4.5,
                    y + 3.5
                ),
                "superfluous" => format!(
                    r##"<polygon points="{x:.2},{:.2} {:.2},{y:.2} {x:.2},{:.2} {:.2},{y:.2}" fill="none" stroke="#7f8c8d" stroke-dasharray="2,1"/>"##,
                    y - 5.0,
                    x + 5.0,
                    y + 5.0,
                    x - 5.0
                ),
                _ => format!(
                    r##"<path d="M{:.2},{:.2} L{:.2},{:.2} M{:.2},{:.2} L{:.2},{:.2}" stroke="#000000"/>"##,
                    x - 4.0,
                    y - 4.0,
                    x + 4.0,
                    y + 4.0,
                    x - 4.0,
                    y + 4.0,
                    x + 4.0,
                    y - 4.0
                ),
            };
            let _ = writeln!(s, "<g><title>{}</title>{shape}</g>", escape(&label));
        }
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    Ok(s)
}
