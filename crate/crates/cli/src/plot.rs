//! Floating-point traces of `Γ_{p,q}` in an affine chart, rendered as SVG
//! polylines or CSV rows.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt::Write;

use chebcurves::cremona::GatePoint;
use num_traits::ToPrimitive;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotChart {
    /// `x = b/a`, `y = c/a`.
    A,
    /// `x = a/c`, `y = b/c`.
    C,
}

impl PlotChart {
    fn project(self, [a, b, c]: [f64; 3]) -> (f64, f64, f64) {
        match self {
            PlotChart::A => (a, b / a, c / a),
            PlotChart::C => (c, a / c, b / c),
        }
    }

    fn label(self) -> &'static str {
        match self {
            PlotChart::A => "x = b/a, y = c/a",
            PlotChart::C => "x = a/c, y = b/c",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Viewport {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Result<Self, String> {
        let v = Viewport { x_min, x_max, y_min, y_max };
        if ![x_min, x_max, y_min, y_max].iter().all(|z| z.is_finite()) {
            return Err("viewport bounds must be finite".into());
        }
        if x_min >= x_max || y_min >= y_max {
            return Err("viewport must have positive width and height".into());
        }
        Ok(v)
    }

    fn contains(&self, (x, y): (f64, f64)) -> bool {
        x >= self.x_min && x <= self.x_max && y >= self.y_min && y <= self.y_max
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Sampling {
    /// Uniform in `θ` over `(0, π)` with `t = cos θ`, plus tails uniform in
    /// `1/t` on both sides of `[−1, 1]`.
    Default,
    Uniform { t_min: f64, t_max: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlotSpec {
    pub p: u32,
    pub q: u32,
    pub chart: PlotChart,
    pub sampling: Sampling,
    pub samples: usize,
    pub view: Viewport,
}

/// Parameter values in increasing order.
pub fn sample_params(n: usize, sampling: Sampling) -> Vec<f64> {
    match sampling {
        Sampling::Uniform { t_min, t_max } => {
            let step = (t_max - t_min) / (n.max(2) - 1) as f64;
            (0..n).map(|j| t_min + step * j as f64).collect()
        }
        Sampling::Default => {
            let n_tail = n / 4;
            let n_mid = n - 2 * n_tail;
            let s = |j: usize| (j as f64 + 0.5) / n_tail as f64;
            let left = (0..n_tail).map(|j| -1.0 / s(j));
            let mid = (0..n_mid).rev().map(|j| (PI * (j as f64 + 0.5) / n_mid as f64).cos());
            let right = (0..n_tail).rev().map(|j| 1.0 / s(j));
            left.chain(mid).chain(right).collect()
        }
    }
}

/// `[U_{p−1}(t), U_{q−1}(t), U_{p+q−1}(t)]` by the three-term recurrence.
pub fn gamma(p: u32, q: u32, t: f64) -> [f64; 3] {
    let n = (p + q) as usize;
    let mut u = vec![1.0; n];
    if n > 1 {
        u[1] = 2.0 * t;
    }
    for k in 2..n {
        u[k] = 2.0 * t * u[k - 1] - u[k - 2];
    }
    [u[p as usize - 1], u[q as usize - 1], u[n - 1]]
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    /// The chart coordinate that is divided by.
    pub den: f64,
}

pub fn trace(spec: &PlotSpec) -> Vec<Sample> {
    sample_params(spec.samples, spec.sampling)
        .into_iter()
        .map(|t| {
            let (den, x, y) = spec.chart.project(gamma(spec.p, spec.q, t));
            Sample { t, x, y, den }
        })
        .collect()
}

/// Splits where the chart denominator vanishes or changes sign, so that no
/// segment crosses the line at infinity.
pub fn branches(samples: &[Sample]) -> Vec<Vec<Sample>> {
    let mut out: Vec<Vec<Sample>> = Vec::new();
    let mut cur: Vec<Sample> = Vec::new();
    for s in samples {
        if s.den == 0.0 || !s.x.is_finite() || !s.y.is_finite() {
            out.extend((!cur.is_empty()).then(|| std::mem::take(&mut cur)));
            continue;
        }
        if cur.last().is_some_and(|prev| prev.den.signum() != s.den.signum()) {
            out.push(std::mem::take(&mut cur));
        }
        cur.push(*s);
    }
    out.extend((!cur.is_empty()).then_some(cur));
    out
}

/// Liang–Barsky clipping of the segment `p0 → p1`.
pub fn clip_segment(p0: (f64, f64), p1: (f64, f64), v: &Viewport) -> Option<((f64, f64), (f64, f64))> {
    let (dx, dy) = (p1.0 - p0.0, p1.1 - p0.1);
    let mut lo: f64 = 0.0;
    let mut hi: f64 = 1.0;
    for (pk, qk) in [
        (-dx, p0.0 - v.x_min),
        (dx, v.x_max - p0.0),
        (-dy, p0.1 - v.y_min),
        (dy, v.y_max - p0.1),
    ] {
        if pk == 0.0 {
            if qk < 0.0 {
                return None;
            }
        } else {
            let r = qk / pk;
            if pk < 0.0 {
                lo = lo.max(r);
            } else {
                hi = hi.min(r);
            }
        }
    }
    if lo > hi {
        return None;
    }
    let at = |s: f64| (p0.0 + s * dx, p0.1 + s * dy);
    let start = if lo == 0.0 { p0 } else { at(lo) };
    let end = if hi == 1.0 { p1 } else { at(hi) };
    Some((start, end))
}

/// Visible pieces of each branch.
pub fn polylines(branches: &[Vec<Sample>], v: &Viewport) -> Vec<Vec<(f64, f64)>> {
    let mut out = Vec::new();
    for branch in branches {
        let pts: Vec<(f64, f64)> = branch.iter().map(|s| (s.x, s.y)).collect();
        if let [only] = pts[..] {
            if v.contains(only) {
                out.push(vec![only]);
            }
            continue;
        }
        let mut cur: Vec<(f64, f64)> = Vec::new();
        for w in pts.windows(2) {
            match clip_segment(w[0], w[1], v) {
                Some((a, b)) => {
                    if cur.last() != Some(&a) {
                        if !cur.is_empty() {
                            out.push(std::mem::take(&mut cur));
                        }
                        cur.push(a);
                    }
                    cur.push(b);
                    if b != w[1] {
                        out.push(std::mem::take(&mut cur));
                    }
                }
                None => {
                    if !cur.is_empty() {
                        out.push(std::mem::take(&mut cur));
                    }
                }
            }
        }
        if !cur.is_empty() {
            out.push(cur);
        }
    }
    out
}

/// Gate points passed by the curve that are finite in the chart and visible.
pub fn markers(spec: &PlotSpec, gates: &[GatePoint]) -> Vec<(GatePoint, (f64, f64))> {
    let unique: BTreeSet<GatePoint> = gates.iter().copied().chain([GatePoint::G0]).collect();
    unique
        .into_iter()
        .filter_map(|g| {
            let c = g.point().coords().clone().map(|x| x.to_f64().unwrap_or(f64::NAN));
            let (den, x, y) = spec.chart.project(c);
            (den != 0.0 && spec.view.contains((x, y))).then_some((g, (x, y)))
        })
        .collect()
}

const SIZE: f64 = 600.0;
const MARGIN: f64 = 20.0;

fn to_px(v: &Viewport, (x, y): (f64, f64)) -> (f64, f64) {
    let w = SIZE - 2.0 * MARGIN;
    let px = MARGIN + (x - v.x_min) / (v.x_max - v.x_min) * w;
    let py = MARGIN + (v.y_max - y) / (v.y_max - v.y_min) * w;
    (px, py)
}

pub fn render_svg(spec: &PlotSpec, lines: &[Vec<(f64, f64)>], marks: &[(GatePoint, (f64, f64))]) -> String {
    let v = &spec.view;
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let _ = writeln!(s, "<title>{}:{} curve, {}</title>", spec.p, spec.q, spec.chart.label());
    let _ = writeln!(s, "<rect x=\"0\" y=\"0\" width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>");
    let (x0, y0) = to_px(v, (0.0, 0.0));
    let (lo, hi) = (MARGIN, SIZE - MARGIN);
    if (v.x_min..=v.x_max).contains(&0.0) {
        let _ = writeln!(s, "<line x1=\"{x0:.3}\" y1=\"{lo}\" x2=\"{x0:.3}\" y2=\"{hi}\" stroke=\"#999999\" stroke-width=\"0.75\"/>");
    }
    if (v.y_min..=v.y_max).contains(&0.0) {
        let _ = writeln!(s, "<line x1=\"{lo}\" y1=\"{y0:.3}\" x2=\"{hi}\" y2=\"{y0:.3}\" stroke=\"#999999\" stroke-width=\"0.75\"/>");
    }
    for line in lines {
        let pts: Vec<String> = line
            .iter()
            .map(|&p| {
                let (x, y) = to_px(v, p);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let _ = writeln!(s, "<polyline fill=\"none\" stroke=\"#1f4e99\" stroke-width=\"1.5\" points=\"{}\"/>", pts.join(" "));
    }
    for (g, p) in marks {
        let (x, y) = to_px(v, *p);
        let _ = writeln!(s, "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"3.5\" fill=\"#c0392b\"/>");
        let _ = writeln!(s, "<text x=\"{:.3}\" y=\"{:.3}\" font-family=\"sans-serif\" font-size=\"12\">{g}</text>", x + 5.0, y - 5.0);
    }
    s.push_str("</svg>\n");
    s
}

/// `t,x,y` rows for every sample with finite chart coordinates.
pub fn render_csv(samples: &[Sample]) -> String {
    let mut s = String::from("t,x,y\n");
    for p in samples.iter().filter(|p| p.x.is_finite() && p.y.is_finite()) {
        let _ = writeln!(s, "{},{},{}", p.t, p.x, p.y);
    }
    s
}
