use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial3, Scalar, Substitution, Var};
use crate::{Error, Result};

/// A homogeneous polynomial in `a, b, c` with exact rational coefficients.
///
/// Terms are stored sparsely, keyed by monomial in graded-lex order, with no
/// zero coefficients. The zero polynomial still carries a degree so that
/// degree bookkeeping stays exact through products and compositions.
///
/// Arithmetic is exact and does not rescale; [`HomoPoly3::canonical`] gives
/// the representative with coprime integer coefficients and a positive
/// leading coefficient, which turns "equal up to scale" into `==`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomoPoly3 {
    terms: BTreeMap<Monomial3, Scalar>,
    degree: u32,
}

impl HomoPoly3 {
    pub fn zero(degree: u32) -> Self {
        HomoPoly3 {
            terms: BTreeMap::new(),
            degree,
        }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(c, Monomial3::ONE)
    }

    pub fn var(v: Var) -> Self {
        Self::term(Scalar::one(), Monomial3::var(v))
    }

    pub fn term(c: Scalar, m: Monomial3) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        HomoPoly3 {
            terms,
            degree: m.degree(),
        }
    }

    /// `x*a + y*b + z*c`.
    pub fn linear(x: i64, y: i64, z: i64) -> Self {
        Self::from_int_terms(&[(x, [1, 0, 0]), (y, [0, 1, 0]), (z, [0, 0, 1])])
            .expect("linear forms are homogeneous")
    }

    /// Sums the given terms. Fails if the non-zero terms have different
    /// total degrees. An empty sum is the zero polynomial of degree 0.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial3, Scalar)>,
    {
        let mut map: BTreeMap<Monomial3, Scalar> = BTreeMap::new();
        let mut degree = None;
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            match degree {
                None => degree = Some(m.degree()),
                Some(d) if d != m.degree() => return Err(Error::NotHomogeneous),
                _ => {}
            }
            *map.entry(m).or_insert_with(Scalar::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(HomoPoly3 {
            terms: map,
            degree: degree.unwrap_or(0),
        })
    }

    pub fn from_int_terms(terms: &[(i64, [u32; 3])]) -> Result<Self> {
        Self::from_terms(terms.iter().map(|&(c, [i, j, k])| {
            (Monomial3::new(i, j, k), Scalar::from_integer(BigInt::from(c)))
        }))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order; use `.rev()` for display order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial3, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial3) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial3, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Largest exponent of `v` over all terms.
    pub fn max_exp(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn add(&self, other: &HomoPoly3) -> Result<HomoPoly3> {
        if self.is_zero() && other.is_zero() && self.degree != other.degree {
            return Ok(HomoPoly3::zero(self.degree.max(other.degree)));
        }
        if !self.is_zero() && !other.is_zero() && self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &HomoPoly3) -> Result<HomoPoly3> {
        self.add(&other.neg())
    }

    // Callers guarantee equal degrees whenever both sides are non-zero.
    fn add_unchecked(&self, other: &HomoPoly3) -> HomoPoly3 {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(*m).or_insert_with(Scalar::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        HomoPoly3 {
            terms,
            degree: self.degree,
        }
    }

    pub fn neg(&self) -> HomoPoly3 {
        HomoPoly3 {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
            degree: self.degree,
        }
    }

    pub fn scale(&self, k: &Scalar) -> HomoPoly3 {
        if k.is_zero() {
            return HomoPoly3::zero(self.degree);
        }
        HomoPoly3 {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
            degree: self.degree,
        }
    }

    pub fn mul(&self, other: &HomoPoly3) -> HomoPoly3 {
        let mut terms: BTreeMap<Monomial3, Scalar> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *terms.entry(m1.mul(m2)).or_insert_with(Scalar::zero) += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        HomoPoly3 {
            terms,
            degree: self.degree + other.degree,
        }
    }

    pub fn pow(&self, n: u32) -> HomoPoly3 {
        let mut out = HomoPoly3::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = out.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Exchanges `a` and `b`.
    pub fn swap_ab(&self) -> HomoPoly3 {
        HomoPoly3 {
            terms: self.terms.iter().map(|(m, c)| (m.swap_ab(), c.clone())).collect(),
            degree: self.degree,
        }
    }

    /// Evaluates `self(x, y, z)` by nested Horner schemes in `a` and `b`,
    /// with powers of the third value precomputed.
    pub fn substitute<R: Substitution>(&self, vals: &[R; 3]) -> R {
        let [va, vb, vc] = vals;
        let unit = va.unit();
        let zero = unit.scale(&Scalar::zero());
        let n = self.degree;
        if self.is_zero() {
            return zero;
        }
        let mut cpow = Vec::with_capacity(n as usize + 1);
        cpow.push(unit.clone());
        for k in 1..=n as usize {
            let next = cpow[k - 1].mul(vc);
            cpow.push(next);
        }
        let mut acc = zero.clone();
        for i in (0..=n).rev() {
            let m = n - i;
            let mut inner = zero.clone();
            for j in (0..=m).rev() {
                if !inner.is_zero_value() {
                    inner = inner.mul(vb);
                }
                if let Some(e) = self.terms.get(&Monomial3::new(i, j, m - j)) {
                    inner = inner.add(&cpow[(m - j) as usize].scale(e));
                }
            }
            if !acc.is_zero_value() {
                acc = acc.mul(va);
            }
            acc = acc.add(&inner);
        }
        acc
    }

    /// `self ∘ map`: substitutes the three components for `a, b, c`.
    pub fn compose(&self, map: &[HomoPoly3; 3]) -> Result<HomoPoly3> {
        let d = map[0].degree;
        if map.iter().any(|g| g.degree != d) {
            return Err(Error::UnequalMapDegrees);
        }
        let mut out = self.substitute(map);
        out.degree = self.degree * d;
        debug_assert!(out.terms.keys().all(|m| m.degree() == out.degree));
        Ok(out)
    }

    pub fn eval(&self, point: &[Scalar; 3]) -> Scalar {
        self.substitute(point)
    }

    /// Coprime integer coefficients with positive leading coefficient.
    pub fn canonical(&self) -> HomoPoly3 {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .terms
            .values()
            .map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let leading_negative = ints.last().is_some_and(|c| c.is_negative());
        if leading_negative {
            g = -g;
        }
        let terms = self
            .terms
            .keys()
            .zip(ints)
            .map(|(m, c)| (*m, Scalar::from_integer(c / &g)))
            .collect();
        HomoPoly3 {
            terms,
            degree: self.degree,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical() == *self
    }

    pub fn eq_up_to_scale(&self, other: &HomoPoly3) -> bool {
        self.degree == other.degree && self.canonical() == other.canonical()
    }

    /// Exact quotient `self / g`. Linear divisors go through univariate
    /// synthetic division; anything else through leading-term reduction.
    pub fn divide_exact(&self, g: &HomoPoly3) -> Result<HomoPoly3> {
        if g.degree == 1 && !g.is_zero() {
            let (q, r) = self.div_rem_linear(g)?;
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            Ok(q)
        } else {
            self.divide_exact_reduction(g)
        }
    }

    /// Divides by a linear form `l = λ·v + r(others)`, viewing `self` as a
    /// polynomial in the pivot variable `v` with coefficients in the other
    /// two variables. Returns `(quotient, remainder)` with
    /// `self = l·quotient + remainder` and the remainder free of `v`.
    pub fn div_rem_linear(&self, l: &HomoPoly3) -> Result<(HomoPoly3, HomoPoly3)> {
        if l.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if l.degree != 1 {
            return Err(Error::DegreeMismatch(l.degree, 1));
        }
        if self.is_zero() {
            return Ok((
                HomoPoly3::zero(self.degree.saturating_sub(1)),
                HomoPoly3::zero(self.degree),
            ));
        }
        if self.degree == 0 {
            return Ok((HomoPoly3::zero(0), self.clone()));
        }
        let pivot = Var::ALL
            .into_iter()
            .find(|v| !l.coeff(&Monomial3::var(*v)).is_zero())
            .expect("non-zero linear form has a variable");
        let pm = Monomial3::var(pivot);
        let lambda = l.coeff(&pm);
        // v ≡ r (mod l) with r free of v
        let rest = l.sub(&HomoPoly3::term(lambda.clone(), pm))?;
        let r = rest.scale(&(-Scalar::one() / &lambda));

        let kmax = self.max_exp(pivot);
        let n = self.degree;
        let mut slices: Vec<HomoPoly3> = (0..=kmax).map(|k| HomoPoly3::zero(n - k)).collect();
        for (m, c) in &self.terms {
            let k = m.exp(pivot);
            let mut exps = m.exps;
            exps[pivot.index()] = 0;
            let reduced = Monomial3 { exps };
            slices[k as usize].terms.insert(reduced, c.clone());
        }
        if kmax == 0 {
            return Ok((HomoPoly3::zero(n - 1), self.clone()));
        }
        // synthetic division by (v - r)
        let mut q: Vec<HomoPoly3> = vec![HomoPoly3::zero(0); kmax as usize];
        q[kmax as usize - 1] = slices[kmax as usize].clone();
        for k in (1..kmax as usize).rev() {
            q[k - 1] = slices[k].add_unchecked(&r.mul(&q[k]));
        }
        let remainder = slices[0].add_unchecked(&r.mul(&q[0]));
        let mut quotient = HomoPoly3::zero(n - 1);
        let inv = Scalar::one() / &lambda;
        for (k, qk) in q.iter().enumerate() {
            for (m, c) in &qk.terms {
                let mut exps = m.exps;
                exps[pivot.index()] += k as u32;
                quotient.terms.insert(Monomial3 { exps }, c * &inv);
            }
        }
        let mut remainder = remainder;
        remainder.degree = n;
        Ok((quotient, remainder))
    }

    /// Exact division by repeatedly cancelling the leading term.
    pub fn divide_exact_reduction(&self, g: &HomoPoly3) -> Result<HomoPoly3> {
        let (gm, gc) = g.leading().ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(HomoPoly3::zero(self.degree.saturating_sub(g.degree)));
        }
        if self.degree < g.degree {
            return Err(Error::NotDivisible);
        }
        let mut rem = self.clone();
        let mut quotient = HomoPoly3::zero(self.degree - g.degree);
        while let Some((m, c)) = rem.leading() {
            let qm = m.checked_div(gm).ok_or(Error::NotDivisible)?;
            let qc = c / gc;
            let step = HomoPoly3::term(qc.clone(), qm);
            rem = rem.add_unchecked(&g.mul(&step).neg());
            quotient.terms.insert(qm, qc);
        }
        Ok(quotient)
    }

    pub fn is_divisible_by(&self, g: &HomoPoly3) -> bool {
        self.divide_exact(g).is_ok()
    }
}

impl Substitution for HomoPoly3 {
    fn unit(&self) -> Self {
        HomoPoly3::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        assert!(
            self.is_zero() || rhs.is_zero() || self.degree == rhs.degree,
            "substituted values must share one degree"
        );
        self.add_unchecked(rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        HomoPoly3::mul(self, rhs)
    }
    fn scale(&self, c: &Scalar) -> Self {
        HomoPoly3::scale(self, c)
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}
