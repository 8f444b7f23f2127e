//! Triangles with complex sides and angles.
//!
//! Sides `(a, b, c)` and angles `[α, β, γ]` form a triangle when the laws of
//! sines and cosines hold and `α + β + γ ≡ π (mod 2π)`. Angle triples are
//! taken up to the overall sign change `[α, β, γ] ~ [−α, −β, −γ]`.
//!
//! This module works in double precision.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

fn cx(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexTriple {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
}

impl ComplexTriple {
    pub fn new(a: Complex64, b: Complex64, c: Complex64) -> Self {
        ComplexTriple { a, b, c }
    }

    pub fn real(a: f64, b: f64, c: f64) -> Self {
        Self::new(cx(a), cx(b), cx(c))
    }

    pub fn as_array(&self) -> [Complex64; 3] {
        [self.a, self.b, self.c]
    }

    /// Largest side modulus.
    pub fn scale(&self) -> f64 {
        self.as_array().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// `Δ = (a+b+c)(−a+b+c)(a−b+c)(a+b−c)`, the semiperimeter `s`, and the
/// Heron form `16s(s−a)(s−b)(s−c)`, which equals `Δ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Discriminant {
    pub delta: Complex64,
    pub s: Complex64,
    pub heron: Complex64,
    /// The four factors of `Δ` in the order above.
    pub factors: [Complex64; 4],
}

pub fn discriminant(sides: &ComplexTriple) -> Discriminant {
    let ComplexTriple { a, b, c } = *sides;
    let factors = [a + b + c, -a + b + c, a - b + c, a + b - c];
    let delta = factors.iter().product();
    let s = (a + b + c) / 2.0;
    let heron = 16.0 * s * (s - a) * (s - b) * (s - c);
    Discriminant {
        delta,
        s,
        heron,
        factors,
    }
}

/// Angle triple modulo `2π` and overall sign, stored as its canonical
/// representative.
///
/// Real triples are negated when needed so that the first angle that is not
/// `0` or `π` lies in `(0, π)`; complex triples so that the first angle with
/// non-zero imaginary part has positive imaginary part. Real parts are then
/// reduced into `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleClass {
    angles: [Complex64; 3],
}

impl AngleClass {
    pub fn new(angles: [Complex64; 3], tol: f64) -> Self {
        let small = |x: f64| x.abs() <= tol * x.abs().max(1.0).max(PI);
        let is_real = angles.iter().all(|z| small(z.im));
        let flip = if is_real {
            angles
                .iter()
                .map(|z| z.re.rem_euclid(TAU))
                .find(|&r| !(small(r) || small(r - PI) || small(r - TAU)))
                .is_some_and(|r| r > PI)
        } else {
            angles.iter().find(|z| !small(z.im)).is_some_and(|z| z.im < 0.0)
        };
        let angles = angles.map(|z| {
            let z = if flip { -z } else { z };
            let mut re = z.re.rem_euclid(TAU);
            if small(re - TAU) {
                re = 0.0;
            }
            Complex64::new(re, if is_real { 0.0 } else { z.im })
        });
        AngleClass { angles }
    }

    pub fn real(angles: [f64; 3]) -> Self {
        Self::new(angles.map(cx), DEFAULT_TOLERANCE)
    }

    pub fn angles(&self) -> [Complex64; 3] {
        self.angles
    }

    pub fn negated(&self, tol: f64) -> Self {
        Self::new(self.angles.map(|z| -z), tol)
    }

    /// Distance of `α + β + γ − π` from the nearest multiple of `2π`.
    pub fn sum_defect(&self) -> f64 {
        let s: Complex64 = self.angles.iter().sum::<Complex64>() - PI;
        let k = (s.re / TAU).round();
        (s - TAU * k).norm()
    }

    /// Agreement as classes, allowing for wrap-around at `2π`.
    pub fn approx_eq(&self, other: &AngleClass, tol: f64) -> bool {
        self.angles.iter().zip(other.angles.iter()).all(|(x, y)| {
            let d = x - y;
            let k = (d.re / TAU).round();
            (d - TAU * k).norm() <= tol
        })
    }
}

/// Which factor of `Δ` vanishes for a zero-area triangle with non-zero sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaFactor {
    /// `a + b + c = 0`: angles `[π, π, π]`.
    Sum,
    /// `−a + b + c = 0`: `[π, 0, 0]`.
    OppositeA,
    /// `a − b + c = 0`: `[0, π, 0]`.
    OppositeB,
    /// `a + b − c = 0`: `[0, 0, π]`.
    OppositeC,
}

impl DeltaFactor {
    const ALL: [DeltaFactor; 4] = [DeltaFactor::Sum, DeltaFactor::OppositeA, DeltaFactor::OppositeB, DeltaFactor::OppositeC];

    pub fn angles(self) -> [f64; 3] {
        match self {
            DeltaFactor::Sum => [PI, PI, PI],
            DeltaFactor::OppositeA => [PI, 0.0, 0.0],
            DeltaFactor::OppositeB => [0.0, PI, 0.0],
            DeltaFactor::OppositeC => [0.0, 0.0, PI],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            DeltaFactor::Sum => "a+b+c",
            DeltaFactor::OppositeA => "-a+b+c",
            DeltaFactor::OppositeB => "a-b+c",
            DeltaFactor::OppositeC => "a+b-c",
        }
    }
}

/// The one-parameter families of zero-side triangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// The two non-zero sides are equal: `[α, π−α, 0]` up to placement.
    Isosceles,
    /// They are opposite: `[α, −α, π]` up to placement.
    AntiIsosceles,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Classification {
    Unique(AngleClass),
    ZeroArea(DeltaFactor, AngleClass),
    /// More than one factor of `Δ` is within tolerance of zero.
    Ambiguous(Vec<DeltaFactor>),
    Family { zero_side: usize, kind: FamilyKind },
    NoTriangle { zero_side: usize },
    AllZero,
}

impl Classification {
    pub fn angles(&self) -> Option<&AngleClass> {
        match self {
            Classification::Unique(a) | Classification::ZeroArea(_, a) => Some(a),
            _ => None,
        }
    }
}

/// Description of a family, e.g. `[α, π−α, 0]` for `c = 0, a = b`.
pub fn family_description(zero_side: usize, kind: FamilyKind) -> String {
    let (x, y, z) = match kind {
        FamilyKind::Isosceles => ("α", "π−α", "0"),
        FamilyKind::AntiIsosceles => ("α", "−α", "π"),
    };
    let slots = match zero_side {
        0 => [z, x, y],
        1 => [x, z, y],
        _ => [x, y, z],
    };
    format!("[{}]", slots.join(", "))
}

/// Scale-relative law residuals: `|a sin β − b sin α|` and cyclic, then
/// `|a² − b² − c² + 2bc cos α|` and cyclic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LawResiduals {
    pub sines: [f64; 3],
    pub cosines: [f64; 3],
}

impl LawResiduals {
    pub fn max(&self) -> f64 {
        self.sines.iter().chain(self.cosines.iter()).fold(0.0, |m, &x| m.max(x))
    }
}

fn relative(diff: Complex64, parts: &[Complex64]) -> f64 {
    let scale = parts.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        diff.norm()
    } else {
        diff.norm() / scale
    }
}

pub fn law_residuals(sides: &ComplexTriple, angles: &AngleClass) -> LawResiduals {
    let s = sides.as_array();
    let x = angles.angles();
    let mut sines = [0.0; 3];
    let mut cosines = [0.0; 3];
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let lhs = s[i] * x[j].sin();
        let rhs = s[j] * x[i].sin();
        sines[i] = relative(lhs - rhs, &[lhs, rhs, s[i], s[j]]);
        let terms = [s[i] * s[i], s[j] * s[j], s[k] * s[k], 2.0 * s[j] * s[k] * x[i].cos()];
        cosines[i] = relative(terms[0] - terms[1] - terms[2] + terms[3], &terms);
    }
    LawResiduals { sines, cosines }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TriangleSolution {
    pub sides: ComplexTriple,
    pub classification: Classification,
    pub delta: Complex64,
    /// `√Δ / 4` with the principal root.
    pub area: Complex64,
    pub residuals: Option<LawResiduals>,
    /// Set when the square-root branches could not be separated cleanly.
    pub diagnostic: Option<String>,
}

/// `z` with `sin z = s`, `cos z = c`, assuming `s² + c² = 1`.
fn angle_from(s: Complex64, c: Complex64) -> Complex64 {
    -Complex64::i() * (c + Complex64::i() * s).ln()
}

/// Recovers the angles of a triangle from its sides.
pub fn solve_sss(sides: &ComplexTriple, tol: f64) -> TriangleSolution {
    let disc = discriminant(sides);
    let area = disc.delta.sqrt() / 4.0;
    let scale = sides.scale();
    let mut sol = TriangleSolution {
        sides: *sides,
        classification: Classification::AllZero,
        delta: disc.delta,
        area,
        residuals: None,
        diagnostic: None,
    };
    let s = sides.as_array();
    let zeros: Vec<usize> = (0..3).filter(|&i| s[i].norm() <= tol * scale).collect();
    if scale == 0.0 || zeros.len() >= 2 {
        return sol;
    }
    if let [i] = zeros[..] {
        let (x, y) = (s[(i + 1) % 3], s[(i + 2) % 3]);
        sol.classification = if (x - y).norm() <= tol * scale {
            Classification::Family { zero_side: i, kind: FamilyKind::Isosceles }
        } else if (x + y).norm() <= tol * scale {
            Classification::Family { zero_side: i, kind: FamilyKind::AntiIsosceles }
        } else {
            Classification::NoTriangle { zero_side: i }
        };
        return sol;
    }

    let vanishing: Vec<DeltaFactor> = DeltaFactor::ALL
        .into_iter()
        .zip(disc.factors)
        .filter(|(_, f)| f.norm() <= tol * scale)
        .map(|(k, _)| k)
        .collect();
    match vanishing[..] {
        [] => {}
        [k] => {
            let angles = AngleClass::real(k.angles());
            sol.residuals = Some(law_residuals(sides, &angles));
            sol.classification = Classification::ZeroArea(k, angles);
            return sol;
        }
        _ => {
            sol.classification = Classification::Ambiguous(vanishing);
            return sol;
        }
    }

    let [a, b, c] = s;
    let two_a = 2.0 * area;
    let (sa, sb, sc) = (two_a / (b * c), two_a / (a * c), two_a / (a * b));
    let (ca0, cb0) = ((1.0 - sa * sa).sqrt(), (1.0 - sb * sb).sqrt());
    let norm = sa.norm().max(sb.norm()).max(sc.norm()).max(1.0);
    let mut branches: Vec<(f64, Complex64, Complex64)> = [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)]
        .into_iter()
        .map(|(ea, eb)| {
            let (ca, cb) = (ca0 * ea, cb0 * eb);
            ((sb * ca + sa * cb - sc).norm() / norm, ca, cb)
        })
        .collect();
    branches.sort_by(|x, y| x.0.total_cmp(&y.0));
    let (best, ca, cb) = branches[0];
    let passing: Vec<_> = branches.iter().filter(|b| b.0 <= tol).collect();
    let distinct = passing
        .iter()
        .filter(|b| (b.1 - ca).norm() > tol * norm || (b.2 - cb).norm() > tol * norm)
        .count();
    if passing.is_empty() {
        sol.diagnostic = Some(format!("no square-root branch within tolerance (best residual {best:.3e})"));
    } else if distinct > 0 {
        sol.diagnostic = Some(format!("{} distinct square-root branches within tolerance", distinct + 1));
    }
    let alpha = angle_from(sa, ca);
    let beta = angle_from(sb, cb);
    let gamma = PI - alpha - beta;
    let angles = AngleClass::new([alpha, beta, gamma], tol);
    sol.residuals = Some(law_residuals(sides, &angles));
    sol.classification = Classification::Unique(angles);
    sol
}

/// Formats as `re`, `re+imi` or `re-imi`.
pub fn format_complex(z: Complex64) -> String {
    let re = if z.re == 0.0 { 0.0 } else { z.re };
    if z.im == 0.0 {
        format!("{re}")
    } else if z.im < 0.0 {
        format!("{re}-{}i", -z.im)
    } else {
        format!("{re}+{}i", z.im)
    }
}

/// Parses `re`, `imi`, `re+imi`, `re-imi`; `i` alone means `1i`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("invalid complex number `{s}`"));
    let num = |x: &str| -> Result<f64> {
        match x {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => x.parse::<f64>().map_err(|_| bad()).and_then(|v| if v.is_finite() { Ok(v) } else { Err(bad()) }),
        }
    };
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return num_only(&t).ok_or_else(bad).map(cx);
    };
    // split at the last sign that is not the leading one or part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => {
            let re = num_only(&body[..k]).ok_or_else(bad)?;
            Ok(Complex64::new(re, num(&body[k..])?))
        }
        None => Ok(Complex64::new(0.0, num(body)?)),
    }
}

fn num_only(x: &str) -> Option<f64> {
    x.parse::<f64>().ok().filter(|v| v.is_finite())
}

impl FromStr for ComplexTriple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<_> = s.split_whitespace().collect();
        let [a, b, c] = parts[..] else {
            return Err(Error::Parse(format!("expected three sides, got `{s}`")));
        };
        Ok(ComplexTriple::new(parse_complex(a)?, parse_complex(b)?, parse_complex(c)?))
    }
}

impl fmt::Display for AngleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.angles.map(format_complex);
        write!(f, "[{a}, {b}, {c}]")
    }
}
