use num_traits::Zero;

use super::{GatePoint, ProjPoint};
use crate::poly::HomoPoly3;
use crate::{Error, Result};

/// A line that a map collapses to a single point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalLine {
    pub line: HomoPoly3,
    pub image: ProjPoint,
}

/// A plane Cremona map given by three homogeneous components of equal
/// degree, with its base points and exceptional lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadMap {
    name: &'static str,
    components: [HomoPoly3; 3],
    base_points: Vec<ProjPoint>,
    exceptional_lines: Vec<ExceptionalLine>,
}

fn poly(s: &str) -> HomoPoly3 {
    s.parse().expect("built-in polynomial")
}

fn line(s: &str, image: GatePoint) -> ExceptionalLine {
    ExceptionalLine {
        line: poly(s),
        image: image.point(),
    }
}

impl QuadMap {
    /// `[a:b:c] ↦ [ac : b²−a² : bc]`. Sends base angles `(α, β)` to `(α, β−α)`.
    ///
    /// Exceptional lines are listed as `b+a`, `b−a`, `c`, blown down to
    /// `F−`, `F+`, `F0`.
    pub fn heron() -> Self {
        QuadMap {
            name: "H",
            components: [poly("a*c"), poly("b^2 - a^2"), poly("b*c")],
            base_points: vec![
                GatePoint::G0.point(),
                GatePoint::GPlus.point(),
                GatePoint::GMinus.point(),
            ],
            exceptional_lines: vec![
                line("b + a", GatePoint::FMinus),
                line("b - a", GatePoint::FPlus),
                line("c", GatePoint::F0),
            ],
        }
    }

    /// `[u:v:w] ↦ [uv : vw : w²−u²]`.
    ///
    /// Exceptional lines `b`, `c−a`, `c+a` are blown down to `G0`, `G+`, `G−`.
    pub fn inverse_heron() -> Self {
        QuadMap {
            name: "H^-1",
            components: [poly("a*b"), poly("b*c"), poly("c^2 - a^2")],
            base_points: vec![
                GatePoint::F0.point(),
                GatePoint::FPlus.point(),
                GatePoint::FMinus.point(),
            ],
            exceptional_lines: vec![
                line("b", GatePoint::G0),
                line("c - a", GatePoint::GPlus),
                line("c + a", GatePoint::GMinus),
            ],
        }
    }

    /// `[a:b:c] ↦ [b:a:c]`.
    pub fn swap() -> Self {
        QuadMap {
            name: "S",
            components: [poly("b"), poly("a"), poly("c")],
            base_points: Vec::new(),
            exceptional_lines: Vec::new(),
        }
    }

    /// `[a:b:c] ↦ [bc:ac:ab]`.
    pub fn standard_quadratic() -> Self {
        QuadMap {
            name: "Q",
            components: [poly("b*c"), poly("a*c"), poly("a*b")],
            base_points: vec![
                GatePoint::E0.point(),
                GatePoint::F0.point(),
                GatePoint::G0.point(),
            ],
            exceptional_lines: vec![
                line("a", GatePoint::E0),
                line("b", GatePoint::F0),
                line("c", GatePoint::G0),
            ],
        }
    }

    pub fn identity() -> Self {
        QuadMap {
            name: "id",
            components: [poly("a"), poly("b"), poly("c")],
            base_points: Vec::new(),
            exceptional_lines: Vec::new(),
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn components(&self) -> &[HomoPoly3; 3] {
        &self.components
    }

    pub fn degree(&self) -> u32 {
        self.components[0].degree()
    }

    pub fn base_points(&self) -> &[ProjPoint] {
        &self.base_points
    }

    pub fn exceptional_lines(&self) -> &[ExceptionalLine] {
        &self.exceptional_lines
    }

    pub fn is_base_point(&self, x: &ProjPoint) -> bool {
        self.base_points.contains(x)
    }

    pub fn is_exceptional(&self, x: &ProjPoint) -> bool {
        let s = x.scalars();
        self.exceptional_lines.iter().any(|l| l.line.eval(&s).is_zero())
    }

    pub fn apply(&self, x: &ProjPoint) -> Result<ProjPoint> {
        let s = x.scalars();
        let image = self.components.clone().map(|g| g.eval(&s));
        ProjPoint::new(image).map_err(|_| Error::BasePoint {
            map: self.name.to_string(),
            point: x.to_string(),
        })
    }

    /// Components of `self ∘ inner`.
    pub fn compose_after(&self, inner: &QuadMap) -> Result<[HomoPoly3; 3]> {
        let [x, y, z] = &self.components;
        Ok([
            x.compose(&inner.components)?,
            y.compose(&inner.components)?,
            z.compose(&inner.components)?,
        ])
    }
}

pub fn heron_map() -> QuadMap {
    QuadMap::heron()
}

pub fn inverse_heron_map() -> QuadMap {
    QuadMap::inverse_heron()
}

pub fn swap_map() -> QuadMap {
    QuadMap::swap()
}

pub fn standard_quadratic() -> QuadMap {
    QuadMap::standard_quadratic()
}

pub fn apply_map(m: &QuadMap, x: &ProjPoint) -> Result<ProjPoint> {
    m.apply(x)
}

/// `f ∘ m`, canonicalized. Contains the exceptional lines of `m` as factors
/// whenever `f` passes through their images.
pub fn algebraic_transform(f: &HomoPoly3, m: &QuadMap) -> Result<HomoPoly3> {
    Ok(f.compose(m.components())?.canonical())
}

/// The algebraic transform with each exceptional line of `m` divided out to
/// the stated power. `multiplicities[i]` pairs with `m.exceptional_lines()[i]`.
pub fn proper_transform(f: &HomoPoly3, m: &QuadMap, multiplicities: &[u32]) -> Result<HomoPoly3> {
    let lines = m.exceptional_lines();
    if multiplicities.len() != lines.len() {
        return Err(Error::MultiplicityCount {
            expected: lines.len(),
            got: multiplicities.len(),
        });
    }
    let mut g = f.compose(m.components())?;
    for (l, &k) in lines.iter().zip(multiplicities) {
        for _ in 0..k {
            g = g.divide_exact(&l.line)?;
        }
    }
    Ok(g.canonical())
}

/// Divides out every exceptional line as often as it goes, returning the
/// proper transform and the powers that were removed.
pub fn proper_transform_discover(f: &HomoPoly3, m: &QuadMap) -> Result<(HomoPoly3, Vec<u32>)> {
    let mut g = f.compose(m.components())?;
    let mut powers = Vec::with_capacity(m.exceptional_lines().len());
    for l in m.exceptional_lines() {
        let mut k = 0;
        while !g.is_zero() {
            let (q, r) = g.div_rem_linear(&l.line)?;
            if !r.is_zero() {
                break;
            }
            g = q;
            k += 1;
        }
        powers.push(k);
    }
    Ok((g.canonical(), powers))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> HomoPoly3 {
        s.parse().unwrap()
    }

    fn pt(a: i64, b: i64, c: i64) -> ProjPoint {
        ProjPoint::from_ints(a, b, c).unwrap()
    }

    #[test]
    fn base_points_are_common_zeros() {
        for m in [QuadMap::heron(), QuadMap::inverse_heron(), QuadMap::standard_quadratic()] {
            for x in m.base_points() {
                assert!(matches!(m.apply(x), Err(Error::BasePoint { .. })), "{} at {x}", m.name());
            }
        }
        let h = QuadMap::heron();
        assert_eq!(h.base_points(), &[pt(0, 0, 1), pt(1, 1, 0), pt(1, -1, 0)]);
        assert_eq!(
            QuadMap::standard_quadratic().base_points(),
            &[pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)]
        );
        assert!(QuadMap::swap().base_points().is_empty());
    }

    #[test]
    fn exceptional_lines_blow_down() {
        for m in [QuadMap::heron(), QuadMap::inverse_heron(), QuadMap::standard_quadratic()] {
            for l in m.exceptional_lines() {
                // two sample points on each line, avoiding base points
                let samples = [[1, 2, 3], [2, -5, 7], [3, 1, -4], [5, 3, 2]];
                let mut hits = 0;
                for s in samples {
                    // project the sample onto the line: keep two coordinates, solve for the third
                    let x = point_on_line(&l.line, s);
                    if let Some(x) = x {
                        if m.is_base_point(&x) {
                            continue;
                        }
                        assert_eq!(m.apply(&x).unwrap(), l.image, "{} on {}", m.name(), l.line);
                        hits += 1;
                    }
                }
                assert!(hits >= 2);
            }
        }
    }

    fn point_on_line(l: &HomoPoly3, s: [i64; 3]) -> Option<ProjPoint> {
        use crate::poly::{Monomial3, Var};
        let coef = |v: Var| l.coeff(&Monomial3::var(v));
        let v = Var::ALL.into_iter().rev().find(|v| !coef(*v).is_zero())?;
        let mut c = s.map(crate::poly::scalar);
        c[v.index()] = num_traits::Zero::zero();
        let rest = l.eval(&c);
        c[v.index()] = -rest / coef(v);
        ProjPoint::new(c).ok()
    }

    #[test]
    fn heron_examples() {
        let h = QuadMap::heron();
        assert_eq!(h.apply(&pt(4, 6, 5)).unwrap(), pt(2, 2, 3));
        assert!(matches!(h.apply(&pt(1, 1, 0)), Err(Error::BasePoint { .. })));
        let hi = QuadMap::inverse_heron();
        for x in [pt(4, 6, 5), pt(1, 3, 8), pt(2, 7, -3)] {
            assert_eq!(hi.apply(&h.apply(&x).unwrap()).unwrap(), x);
        }
    }

    #[test]
    fn swap_is_involution() {
        let s = QuadMap::swap();
        let ss = s.compose_after(&s).unwrap();
        assert_eq!(&ss, QuadMap::identity().components());
    }

    #[test]
    fn heron_then_inverse_is_a_multiple_of_identity() {
        // H^-1 ∘ H = k·(a, b, c) with k = c·(b² − a²)
        let comp = QuadMap::inverse_heron().compose_after(&QuadMap::heron()).unwrap();
        let k = comp[0].divide_exact(&p("a")).unwrap();
        assert_eq!(comp[1], k.mul(&p("b")));
        assert_eq!(comp[2], k.mul(&p("c")));
    }

    #[test]
    fn algebraic_transform_examples() {
        let h = QuadMap::heron();
        let f12 = p("b^2 - a^2 - a*c");
        let f13 = p("a^3 - a^2*b - a*b^2 + b^3 - a*c^2");
        assert_eq!(algebraic_transform(&f12, &h).unwrap(), p("b + a").mul(&f13).canonical());
        assert_eq!(
            algebraic_transform(&f12, &QuadMap::swap()).unwrap(),
            f12.swap_ab().canonical()
        );
        assert_eq!(algebraic_transform(&f12, &QuadMap::identity()).unwrap(), f12.canonical());
    }

    #[test]
    fn proper_transform_examples() {
        let h = QuadMap::heron();
        let f11 = p("b - a");
        let f12 = p("b^2 - a^2 - a*c");
        let f13 = p("a^3 - a^2*b - a*b^2 + b^3 - a*c^2");
        assert_eq!(proper_transform(&f11, &h, &[0, 0, 0]).unwrap(), f12.canonical());
        assert_eq!(proper_transform(&f12, &h, &[1, 0, 0]).unwrap(), f13);
        let f14 = proper_transform(&f13, &h, &[1, 1, 0]).unwrap();
        assert_eq!(f14.degree(), 4);
        assert_eq!(proper_transform(&f12, &h, &[0, 1, 0]), Err(Error::NotDivisible));
        assert!(matches!(
            proper_transform(&f12, &h, &[1]),
            Err(Error::MultiplicityCount { expected: 3, got: 1 })
        ));
    }

    #[test]
    fn discovery_finds_the_stated_powers() {
        let h = QuadMap::heron();
        let f13 = p("a^3 - a^2*b - a*b^2 + b^3 - a*c^2");
        let (g, powers) = proper_transform_discover(&f13, &h).unwrap();
        assert_eq!(powers, vec![1, 1, 0]);
        assert_eq!(g, proper_transform(&f13, &h, &[1, 1, 0]).unwrap());
    }
}
