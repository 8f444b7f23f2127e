use std::fmt;

use num_traits::{One, Zero};

use super::{text::write_term, Scalar, Substitution};
use crate::{Error, Result};

/// Dense polynomial in the parameter `t`.
///
/// `coeffs[i]` is the coefficient of `t^i`; trailing zeros are stripped, so
/// the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_coeffs(vec![Scalar::zero(), Scalar::one()])
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Scalar::from_integer(c.into())).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += x * y;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dl = d.leading().ok_or(Error::DivisionByZero)?;
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut q = vec![Scalar::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((UniPoly::from_coeffs(q), UniPoly::from_coeffs(r)))
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            Some(l) => self.scale(&(Scalar::one() / l)),
            None => UniPoly::zero(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is non-zero");
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Substitution for UniPoly {
    fn unit(&self) -> Self {
        UniPoly::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        UniPoly::add(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        UniPoly::mul(self, rhs)
    }
    fn scale(&self, c: &Scalar) -> Self {
        UniPoly::scale(self, c)
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

struct TPower(usize);

impl fmt::Display for TPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            1 => f.write_str("t"),
            n => write!(f, "t^{n}"),
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_term(f, c, &TPower(i), i == 0, first)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    #[test]
    fn display() {
        assert_eq!(UniPoly::from_ints(&[-1, 0, 4]).to_string(), "4*t^2 - 1");
        assert_eq!(UniPoly::from_ints(&[0, 2]).to_string(), "2*t");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    #[test]
    fn trailing_zeros_stripped() {
        let p = UniPoly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(UniPoly::from_ints(&[0, 0]).degree(), None);
    }

    #[test]
    fn div_rem_reconstructs() {
        let f = UniPoly::from_ints(&[5, -3, 0, 2, 7]);
        let d = UniPoly::from_ints(&[1, 3]);
        let (q, r) = f.div_rem(&d).unwrap();
        assert_eq!(q.mul(&d).add(&r), f);
        assert!(r.degree().unwrap_or(0) < 1);
        assert!(f.div_rem(&UniPoly::zero()).is_err());
    }

    #[test]
    fn gcd_shared_root() {
        let f = UniPoly::from_ints(&[-1, 0, 1]);
        let g = UniPoly::from_ints(&[-1, 1]);
        assert_eq!(f.gcd(&g), UniPoly::from_ints(&[-1, 1]));
    }

    #[test]
    fn gcd_with_zero_is_monic() {
        let f = UniPoly::from_ints(&[2, 0, 4]);
        assert_eq!(
            f.gcd(&UniPoly::zero()),
            UniPoly::from_coeffs(vec![ratio(1, 2), ratio(0, 1), ratio(1, 1)])
        );
        assert_eq!(UniPoly::zero().gcd(&f), f.monic());
    }

    #[test]
    fn eval_horner() {
        let p = UniPoly::from_ints(&[-1, 0, 4]);
        assert_eq!(p.eval(&ratio(3, 4)), ratio(5, 4));
        assert_eq!(p.eval_f64(1.5), 8.0);
    }
}
