use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::chebyshev::{chebyshev_t, parametrization, Param, ParamTriple};
use crate::cremona::{GatePoint, ProjPoint};
use crate::poly::{Scalar, UniPoly};
use crate::{Error, Result};

/// Which parameter values to feed through `Γ_{p,q}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamSource {
    Values(Vec<Scalar>),
    /// Every reduced fraction `n/d` with `1 ≤ d ≤ max_den` in `[lo, hi]`.
    DenominatorBound { max_den: u32, lo: Scalar, hi: Scalar },
}

/// Reduced fractions with bounded denominator in `[lo, hi]`, ascending.
pub fn enumerate_params(max_den: u32, lo: &Scalar, hi: &Scalar) -> Vec<Scalar> {
    let mut out = BTreeSet::new();
    for d in 1..=max_den {
        let d = BigInt::from(d);
        let dq = Scalar::from_integer(d.clone());
        let first = (lo * &dq).ceil().to_integer();
        let last = (hi * &dq).floor().to_integer();
        let mut n = first;
        while n <= last {
            if n.gcd(&d).is_one() {
                out.insert(Scalar::new(n.clone(), d.clone()));
            }
            n += 1;
        }
    }
    out.into_iter().collect()
}

/// A primitive integer triple proportional to `Γ_{p,q}(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple {
    pub t: Scalar,
    pub sides: [BigInt; 3],
}

impl Triple {
    pub fn point(&self) -> ProjPoint {
        ProjPoint::from_bigints(self.sides.clone()).expect("non-zero triple")
    }

    /// All sides positive and every triangle inequality strict.
    pub fn is_real_triangle(&self) -> bool {
        let [a, b, c] = &self.sides;
        let positive = self.sides.iter().all(|s| s > &BigInt::zero());
        positive && a < &(b + c) && b < &(a + c) && c < &(a + b)
    }
}

/// A parameter value whose image has a zero coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GateHit {
    pub t: Scalar,
    pub point: ProjPoint,
    pub gate: Option<GatePoint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TripleReport {
    pub triples: Vec<Triple>,
    pub gate_hits: Vec<GateHit>,
}

pub fn oppenheim_triples(p: u32, q: u32, source: &ParamSource) -> Result<TripleReport> {
    let param = parametrization(p, q)?;
    let ts = match source {
        ParamSource::Values(ts) => ts.clone(),
        ParamSource::DenominatorBound { max_den, lo, hi } => enumerate_params(*max_den, lo, hi),
    };
    let mut report = TripleReport::default();
    for t in ts {
        let point = param.evaluate(&Param::Finite(t.clone()))?;
        if point.has_zero_coordinate() {
            let gate = GatePoint::classify(&point);
            report.gate_hits.push(GateHit { t, point, gate });
        } else {
            report.triples.push(Triple {
                t,
                sides: point.coords().clone(),
            });
        }
    }
    Ok(report)
}

/// The rational `t` with `Γ_{p,q}(t) = x`.
///
/// The law of cosines gives `cos pθ` and `cos qθ` from the sides; `t` is the
/// common root of `T_p(t) − cos pθ` and `T_q(t) − cos qθ`.
pub fn recover_parameter(p: u32, q: u32, x: &ProjPoint) -> Result<Scalar> {
    let param = parametrization(p, q)?;
    if x.has_zero_coordinate() {
        return Err(Error::ZeroCoordinate);
    }
    let [a, b, c] = x.scalars();
    let two = Scalar::from_integer(2.into());
    let cos_p = (&b * &b + &c * &c - &a * &a) / (&two * &b * &c);
    let cos_q = (&a * &a + &c * &c - &b * &b) / (&two * &a * &c);
    let g = chebyshev_t(p)
        .sub(&UniPoly::constant(cos_p))
        .gcd(&chebyshev_t(q).sub(&UniPoly::constant(cos_q)));
    if g.degree() != Some(1) {
        return Err(if on_param_curve(&param, x) {
            Error::NonLinearGcd(g.degree().unwrap_or(0))
        } else {
            Error::NotOnCurve { p, q }
        });
    }
    let t = -g.coeff(0);
    if param.evaluate(&Param::Finite(t.clone()))? != *x {
        return Err(Error::NotOnCurve { p, q });
    }
    Ok(t)
}

fn on_param_curve(param: &ParamTriple, x: &ProjPoint) -> bool {
    crate::factory::build_curve(param.p(), param.q())
        .map(|rec| rec.on_curve(x))
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{ratio, scalar};

    fn ints(a: i64, b: i64, c: i64) -> [BigInt; 3] {
        [a.into(), b.into(), c.into()]
    }

    #[test]
    fn examples() {
        let r = oppenheim_triples(1, 2, &ParamSource::Values(vec![ratio(3, 4), ratio(3, 2)])).unwrap();
        assert_eq!(r.triples[0].sides, ints(4, 6, 5));
        assert_eq!(r.triples[1].sides, ints(1, 3, 8));
        assert!(r.triples[0].is_real_triangle());
        assert!(!r.triples[1].is_real_triangle());
        let r = oppenheim_triples(1, 1, &ParamSource::Values(vec![ratio(1, 2)])).unwrap();
        assert_eq!(r.triples[0].sides, ints(1, 1, 1));
    }

    #[test]
    fn gate_hits_are_separated() {
        // 1:2 passes F− at t = 0 and G± at t = ±1/2
        let r = oppenheim_triples(1, 2, &ParamSource::Values(vec![scalar(0), ratio(1, 2), ratio(-1, 2)])).unwrap();
        assert!(r.triples.is_empty());
        let gates: Vec<_> = r.gate_hits.iter().map(|h| h.gate).collect();
        assert_eq!(gates, [Some(GatePoint::FMinus), Some(GatePoint::GPlus), Some(GatePoint::GMinus)]);
    }

    #[test]
    fn enumeration() {
        let ts = enumerate_params(3, &scalar(0), &scalar(1));
        assert_eq!(ts, [scalar(0), ratio(1, 3), ratio(1, 2), ratio(2, 3), scalar(1)]);
    }

    #[test]
    fn recover_examples() {
        assert_eq!(recover_parameter(1, 2, &ProjPoint::from_ints(4, 6, 5).unwrap()), Ok(ratio(3, 4)));
        assert_eq!(recover_parameter(1, 2, &ProjPoint::from_ints(1, 3, 8).unwrap()), Ok(ratio(3, 2)));
        assert_eq!(
            recover_parameter(1, 2, &ProjPoint::from_ints(1, 1, 1).unwrap()),
            Err(Error::NotOnCurve { p: 1, q: 2 })
        );
        assert_eq!(recover_parameter(1, 2, &ProjPoint::from_ints(1, 1, 0).unwrap()), Err(Error::ZeroCoordinate));
    }
}
