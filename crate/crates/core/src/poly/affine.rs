use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{text::write_term, HomoPoly3, Monomial3, Scalar, Var};
use crate::{Error, Result};

/// Affine chart of the projective plane: the coordinate set to 1.
///
/// The remaining two coordinates become `x, y` in the order `a, b, c`, so
/// chart `a = 1` has `x = b, y = c` and chart `c = 1` has `x = a, y = b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chart {
    A,
    B,
    C,
}

impl Chart {
    pub fn var(self) -> Var {
        match self {
            Chart::A => Var::A,
            Chart::B => Var::B,
            Chart::C => Var::C,
        }
    }

    /// The homogeneous coordinates playing the roles of `x` and `y`.
    pub fn affine_vars(self) -> [Var; 2] {
        match self {
            Chart::A => [Var::B, Var::C],
            Chart::B => [Var::A, Var::C],
            Chart::C => [Var::A, Var::B],
        }
    }
}

/// Sparse polynomial in the affine coordinates `x, y`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl BiPoly {
    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Scalar)>>(terms: I) -> Self {
        let mut map: BTreeMap<(u32, u32), Scalar> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(Scalar::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        BiPoly { terms: map }
    }

    pub fn from_int_terms(terms: &[(i64, (u32, u32))]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(c, e)| (e, Scalar::from_integer(c.into()))),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Scalar {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.terms.iter()
    }

    /// Largest total degree of a term; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|(i, j)| i + j).max().unwrap_or(0)
    }

    /// Smallest total degree of a term, i.e. the order of vanishing at the
    /// origin. `None` for the zero polynomial.
    pub fn order_at_origin(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).min()
    }

    /// Substitutes `x ↦ x + x0`, `y ↦ y + y0`, moving `(x0, y0)` to the origin.
    pub fn translate(&self, x0: &Scalar, y0: &Scalar) -> BiPoly {
        let mut out: BTreeMap<(u32, u32), Scalar> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            let xs = binomial_expansion(x0, i);
            let ys = binomial_expansion(y0, j);
            for (k, xk) in xs.iter().enumerate() {
                if xk.is_zero() {
                    continue;
                }
                for (l, yl) in ys.iter().enumerate() {
                    *out.entry((k as u32, l as u32)).or_insert_with(Scalar::zero) += c * xk * yl;
                }
            }
        }
        BiPoly::from_terms(out)
    }

    /// Homogenizes to the given degree in the given chart.
    pub fn homogenize(&self, degree: u32, chart: Chart) -> Result<HomoPoly3> {
        let actual = self.total_degree();
        if actual > degree {
            return Err(Error::HomogenizeDegree {
                target: degree,
                actual,
            });
        }
        let [vx, vy] = chart.affine_vars();
        let terms = self.terms.iter().map(|(&(i, j), c)| {
            let mut exps = [0; 3];
            exps[vx.index()] = i;
            exps[vy.index()] = j;
            exps[chart.var().index()] = degree - i - j;
            (Monomial3 { exps }, c.clone())
        });
        let mut out = HomoPoly3::from_terms(terms)?;
        if out.is_zero() {
            out = HomoPoly3::zero(degree);
        }
        Ok(out)
    }
}

/// Coefficients of `(x + s)^n` in ascending powers of `x`.
fn binomial_expansion(s: &Scalar, n: u32) -> Vec<Scalar> {
    let mut row = vec![Scalar::one()];
    for _ in 0..n {
        let mut next = vec![Scalar::zero(); row.len() + 1];
        for (k, c) in row.iter().enumerate() {
            next[k + 1] += c;
            next[k] += c * s;
        }
        row = next;
    }
    row
}

impl HomoPoly3 {
    /// Sets the chart variable to 1.
    pub fn dehomogenize(&self, chart: Chart) -> BiPoly {
        let [vx, vy] = chart.affine_vars();
        BiPoly::from_terms(
            self.terms()
                .map(|(m, c)| ((m.exp(vx), m.exp(vy)), c.clone())),
        )
    }
}

struct XyPower(u32, u32);

impl fmt::Display for XyPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |f: &mut fmt::Formatter<'_>, name: &str, e: u32| match e {
            1 => f.write_str(name),
            e => write!(f, "{name}^{e}"),
        };
        if self.0 > 0 {
            part(f, "x", self.0)?;
        }
        if self.0 > 0 && self.1 > 0 {
            f.write_str("*")?;
        }
        if self.1 > 0 {
            part(f, "y", self.1)?;
        }
        Ok(())
    }
}

impl fmt::Display for BiPoly {
    /// Descending total degree, then descending power of `x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| std::cmp::Reverse((i + j, i)));
        for (n, (i, j)) in keys.into_iter().enumerate() {
            write_term(f, &self.terms[&(i, j)], &XyPower(i, j), i + j == 0, n == 0)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_circle_analogue() {
        let f: HomoPoly3 = "b^2 - a^2 - a*c".parse().unwrap();
        let g = f.dehomogenize(Chart::A);
        assert_eq!(g, BiPoly::from_int_terms(&[(1, (2, 0)), (-1, (0, 0)), (-1, (0, 1))]));
        assert_eq!(g.to_string(), "x^2 - y - 1");
    }

    #[test]
    fn constant() {
        let one = HomoPoly3::one();
        for chart in [Chart::A, Chart::B, Chart::C] {
            let g = one.dehomogenize(chart);
            assert_eq!(g.to_string(), "1");
            assert_eq!(g.homogenize(0, chart).unwrap(), one);
        }
    }

    #[test]
    fn rehomogenize_source_germ() {
        // x^p - y^q in chart c = 1 at degree p + q - 1
        for (p, q) in [(2u32, 3u32), (3, 5), (1, 4)] {
            let g = BiPoly::from_int_terms(&[(1, (p, 0)), (-1, (0, q))]);
            let h = g.homogenize(p + q - 1, Chart::C).unwrap();
            let expected = HomoPoly3::from_int_terms(&[(1, [p, 0, q - 1]), (-1, [0, q, p - 1])]).unwrap();
            assert_eq!(h, expected);
        }
    }

    #[test]
    fn translate_moves_point_to_origin() {
        // (x - 2)^2 + (y + 1) translated by (2, -1) is x^2 + y
        let g = BiPoly::from_int_terms(&[(1, (2, 0)), (-4, (1, 0)), (4, (0, 0)), (1, (0, 1)), (1, (0, 0))]);
        let t = g.translate(&crate::poly::scalar(2), &crate::poly::scalar(-1));
        assert_eq!(t, BiPoly::from_int_terms(&[(1, (2, 0)), (1, (0, 1))]));
        assert_eq!(t.order_at_origin(), Some(1));
    }

    #[test]
    fn homogenize_rejects_low_degree() {
        let g = BiPoly::from_int_terms(&[(1, (2, 1))]);
        assert!(g.homogenize(2, Chart::A).is_err());
    }

    #[test]
    fn round_trip_through_chart() {
        let f: HomoPoly3 = "a^3 - a^2*b - a*b^2 + b^3 - a*c^2".parse().unwrap();
        for chart in [Chart::A, Chart::B, Chart::C] {
            assert_eq!(f.dehomogenize(chart).homogenize(3, chart).unwrap(), f);
        }
    }
}
