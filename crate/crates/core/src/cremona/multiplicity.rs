use num_traits::{One, Zero};

use super::ProjPoint;
use crate::poly::{Chart, HomoPoly3, Scalar, Var};
use crate::{Error, Result};

const CHARTS: [Chart; 3] = [Chart::A, Chart::B, Chart::C];

/// Order of vanishing of `f` at `x`: the lowest total degree among the terms
/// of `f` re-expanded around `x` in an affine chart. Zero off the curve.
///
/// The zero polynomial vanishes to every order; its degree is returned.
pub fn algebraic_multiplicity(f: &HomoPoly3, x: &ProjPoint) -> u32 {
    if f.is_zero() {
        return f.degree();
    }
    let xi = x.scalars();
    let v = xi.iter().position(|c| !c.is_zero()).expect("projective point");
    let xi = normalize(&xi, v);

    // X_u ↦ X_u + ξ_u·X_v keeps X_v fixed, so setting X_v = 1 afterwards
    // expands f around ξ.
    let xv = HomoPoly3::var(Var::ALL[v]);
    let shift: [HomoPoly3; 3] = std::array::from_fn(|u| {
        if u == v {
            xv.clone()
        } else {
            HomoPoly3::var(Var::ALL[u])
                .add(&xv.scale(&xi[u]))
                .expect("linear forms")
        }
    });
    let g = f.compose(&shift).expect("linear map");
    let m = f.degree() - g.max_exp(Var::ALL[v]);

    debug_assert!(
        second_chart(f, &xi, v).is_none_or(|m2| m2 == m),
        "multiplicity of {f} at {x} depends on the chart"
    );
    m
}

fn normalize(xi: &[Scalar; 3], v: usize) -> [Scalar; 3] {
    let k = Scalar::one() / &xi[v];
    xi.clone().map(|c| c * &k)
}

/// The same order computed by dehomogenizing and translating in another
/// chart where `ξ` is finite.
fn second_chart(f: &HomoPoly3, xi: &[Scalar; 3], first: usize) -> Option<u32> {
    let w = (0..3).find(|&w| w != first && !xi[w].is_zero())?;
    let xi = normalize(xi, w);
    let chart = CHARTS[w];
    let [vx, vy] = chart.affine_vars();
    let g = f
        .dehomogenize(chart)
        .translate(&xi[vx.index()], &xi[vy.index()]);
    Some(g.order_at_origin().unwrap_or(f.degree()))
}

/// Degree and multiplicities of the proper transform of a degree-`d` curve
/// under a quadratic map, given the curve's multiplicities `m` at the three
/// base points of the inverse map: `2d − Σm` and `d − m_j − m_k`.
pub fn check_transform_multiplicities(d: u32, m: [u32; 3]) -> Result<(u32, [u32; 3])> {
    let invalid = Error::InvalidMultiplicities { degree: d, m };
    if m.iter().any(|&mi| mi > d) {
        return Err(invalid);
    }
    let total: u32 = m.iter().sum();
    let degree = (2 * d).checked_sub(total).ok_or(invalid.clone())?;
    let pair = |j: usize, k: usize| d.checked_sub(m[j] + m[k]).ok_or(invalid.clone());
    Ok((degree, [pair(1, 2)?, pair(0, 2)?, pair(0, 1)?]))
}
