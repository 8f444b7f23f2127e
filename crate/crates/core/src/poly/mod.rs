//! Exact polynomial arithmetic over the rationals.
//!
//! [`HomoPoly3`] holds homogeneous polynomials in `a, b, c` (sparse), and
//! [`UniPoly`] holds polynomials in a single parameter `t` (dense). Both use
//! arbitrary-precision rational coefficients, so every identity checked by
//! this crate is checked exactly.

mod affine;
mod homo;
mod monomial;
mod text;
mod uni;

pub use affine::{BiPoly, Chart};
pub use homo::HomoPoly3;
pub use monomial::{Monomial3, Var};
pub use uni::UniPoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficient field for all symbolic work.
pub type Scalar = BigRational;

pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `n` or `n/d` into an exact rational.
pub fn parse_scalar(s: &str) -> crate::Result<Scalar> {
    let s = s.trim();
    let bad = || crate::Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Values that a homogeneous polynomial can be evaluated at: polynomials in
/// `a, b, c`, polynomials in `t`, or plain rationals.
///
/// `unit` returns the multiplicative identity of the same family as `self`.
pub trait Substitution: Clone {
    fn unit(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn scale(&self, c: &Scalar) -> Self;
    fn is_zero_value(&self) -> bool;
}

impl Substitution for Scalar {
    fn unit(&self) -> Self {
        Scalar::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale(&self, c: &Scalar) -> Self {
        self * c
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}
