//! Chebyshev polynomials and the rational parametrization of p:q curves.
//!
//! With `t = cos θ`, `U_n(t) = sin((n+1)θ) / sin θ` and `T_n(t) = cos(nθ)`.
//! A p:q triangle has base angles `pθ, qθ`, and the law of sines puts its
//! sides in the ratio `U_{p-1}(t) : U_{q-1}(t) : U_{p+q-1}(t)`.

use num_integer::Integer;
use num_traits::Zero;

use crate::cremona::ProjPoint;
use crate::poly::{scalar, Scalar, UniPoly};
use crate::{Error, Result};

fn two_t() -> UniPoly {
    UniPoly::from_ints(&[0, 2])
}

/// `U_0, ..., U_n`.
pub fn chebyshev_u_upto(n: u32) -> Vec<UniPoly> {
    let mut out = vec![UniPoly::one()];
    if n >= 1 {
        out.push(two_t());
    }
    for k in 2..=n as usize {
        let next = two_t().mul(&out[k - 1]).sub(&out[k - 2]);
        out.push(next);
    }
    out
}

/// Second kind: `U_0 = 1`, `U_1 = 2t`, `U_{n+1} = 2t·U_n − U_{n−1}`.
pub fn chebyshev_u(n: u32) -> UniPoly {
    chebyshev_u_upto(n).pop().expect("at least U_0")
}

/// First kind: `T_0 = 1`, `T_1 = t`, `T_{n+1} = 2t·T_n − T_{n−1}`.
pub fn chebyshev_t(n: u32) -> UniPoly {
    let mut prev = UniPoly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = UniPoly::t();
    for _ in 1..n {
        let next = two_t().mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Rejects zero or non-coprime curve indices.
pub fn check_indices(p: u32, q: u32) -> Result<()> {
    if p == 0 || q == 0 {
        return Err(Error::ZeroIndex);
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    Ok(())
}

/// A parameter value on the projective line: a rational `t` or `∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Param {
    Finite(Scalar),
    Infinity,
}

/// The Chebyshev parametrization `t ↦ [U_{p−1}(t) : U_{q−1}(t) : U_{p+q−1}(t)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamTriple {
    p: u32,
    q: u32,
    components: [UniPoly; 3],
}

impl ParamTriple {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        check_indices(p, q)?;
        let us = chebyshev_u_upto(p + q - 1);
        let components = [
            us[(p - 1) as usize].clone(),
            us[(q - 1) as usize].clone(),
            us[(p + q - 1) as usize].clone(),
        ];
        Ok(ParamTriple { p, q, components })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn components(&self) -> &[UniPoly; 3] {
        &self.components
    }

    /// The image of `t`. `∞` goes to the source point `[0:0:1]`, since the
    /// third component has strictly the largest degree.
    pub fn evaluate(&self, t: &Param) -> Result<ProjPoint> {
        match t {
            Param::Infinity => {
                debug_assert!(
                    self.components[2].degree() > self.components[0].degree()
                        && self.components[2].degree() > self.components[1].degree()
                );
                ProjPoint::from_ints(0, 0, 1)
            }
            Param::Finite(t) => {
                let coords = [
                    self.components[0].eval(t),
                    self.components[1].eval(t),
                    self.components[2].eval(t),
                ];
                if coords.iter().all(Zero::is_zero) {
                    return Err(Error::Invariant(format!(
                        "all components of the {}:{} parametrization vanish at t = {t}",
                        self.p, self.q
                    )));
                }
                ProjPoint::new(coords)
            }
        }
    }

    pub fn evaluate_f64(&self, t: f64) -> [f64; 3] {
        [
            self.components[0].eval_f64(t),
            self.components[1].eval_f64(t),
            self.components[2].eval_f64(t),
        ]
    }
}

pub fn parametrization(p: u32, q: u32) -> Result<ParamTriple> {
    ParamTriple::new(p, q)
}

pub fn evaluate_param(pt: &ParamTriple, t: &Param) -> Result<ProjPoint> {
    pt.evaluate(t)
}

/// Convenience for integer parameter values.
pub fn param(n: i64) -> Param {
    Param::Finite(scalar(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;
    use std::f64::consts::PI;

    // Trigonometric oracle: U_n(cos θ) sin θ = sin((n+1)θ), T_n(cos θ) = cos(nθ).
    fn trig_oracle_u(n: u32, theta: f64) -> f64 {
        ((n as f64 + 1.0) * theta).sin() / theta.sin()
    }

    #[test]
    fn u_base_cases() {
        assert_eq!(chebyshev_u(0), UniPoly::one());
        assert_eq!(chebyshev_u(1), UniPoly::from_ints(&[0, 2]));
        assert_eq!(chebyshev_u(2), UniPoly::from_ints(&[-1, 0, 4]));
    }

    #[test]
    fn t_base_cases() {
        assert_eq!(chebyshev_t(0), UniPoly::one());
        assert_eq!(chebyshev_t(1), UniPoly::t());
        assert_eq!(chebyshev_t(2), UniPoly::from_ints(&[-1, 0, 2]));
        assert_eq!(chebyshev_t(3).eval(&ratio(1, 2)), scalar(-1));
    }

    #[test]
    fn polynomials_match_trig_oracle() {
        for n in 0..12 {
            let u = chebyshev_u(n);
            let t = chebyshev_t(n);
            for k in 1..9 {
                let theta = k as f64 * 0.33;
                let x = theta.cos();
                assert!((u.eval_f64(x) - trig_oracle_u(n, theta)).abs() < 1e-8);
                assert!((t.eval_f64(x) - (n as f64 * theta).cos()).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn u_leading_coefficient() {
        for n in 0..10u32 {
            let u = chebyshev_u(n);
            assert_eq!(u.degree(), Some(n as usize));
            assert_eq!(u.leading(), Some(&scalar(1 << n)));
        }
    }

    #[test]
    fn parametrization_examples() {
        let p12 = parametrization(1, 2).unwrap();
        assert_eq!(
            p12.components(),
            &[UniPoly::one(), UniPoly::from_ints(&[0, 2]), UniPoly::from_ints(&[-1, 0, 4])]
        );
        let p11 = parametrization(1, 1).unwrap();
        assert_eq!(p11.components(), &[UniPoly::one(), UniPoly::one(), UniPoly::from_ints(&[0, 2])]);
        let p23 = parametrization(2, 3).unwrap();
        assert_eq!(
            p23.components(),
            &[
                UniPoly::from_ints(&[0, 2]),
                UniPoly::from_ints(&[-1, 0, 4]),
                UniPoly::from_ints(&[1, 0, -12, 0, 16])
            ]
        );
        assert_eq!(parametrization(2, 4), Err(Error::NotCoprime { p: 2, q: 4 }));
        assert_eq!(parametrization(0, 1), Err(Error::ZeroIndex));
    }

    #[test]
    fn evaluate_examples() {
        let pt = parametrization(1, 2).unwrap();
        assert_eq!(
            pt.evaluate(&Param::Finite(ratio(3, 4))).unwrap(),
            ProjPoint::from_ints(4, 6, 5).unwrap()
        );
        assert_eq!(pt.evaluate(&Param::Infinity).unwrap(), ProjPoint::from_ints(0, 0, 1).unwrap());
        assert_eq!(
            pt.evaluate(&Param::Finite(ratio(3, 2))).unwrap(),
            ProjPoint::from_ints(1, 3, 8).unwrap()
        );
    }

    #[test]
    fn theta_pi_over_three_sanity() {
        let theta = PI / 3.0;
        assert!((chebyshev_u(2).eval_f64(theta.cos()) - trig_oracle_u(2, theta)).abs() < 1e-12);
    }
}
