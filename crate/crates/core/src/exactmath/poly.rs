//! Dense univariate polynomials over any [`Field`].

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_traits::Zero;

use super::field::Field;
use crate::error::{Error, Result};

/// Dense polynomial, coefficient `i` multiplies `X^i`. Trailing zeros are
/// always trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_ints(field: F, coeffs: &[i64]) -> Self {
        let cs = coeffs.iter().map(|&c| field.from_i64(c)).collect();
        Self::new(field, cs)
    }

    pub fn zero(field: F) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Self::new(field, vec![one])
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// The polynomial `X`.
    pub fn x(field: F) -> Self {
        let cs = vec![field.zero(), field.one()];
        Self::new(field, cs)
    }

    /// `c * X^n`.
    pub fn monomial(field: F, c: F::Elem, n: usize) -> Self {
        let mut cs = vec![field.zero(); n + 1];
        cs[n] = c;
        Self::new(field, cs)
    }

    /// `X - a`.
    pub fn linear_root(field: F, a: &F::Elem) -> Self {
        let cs = vec![field.neg(a), field.one()];
        Self::new(field, cs)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> F::Elem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| self.field.is_one(c))
    }

    fn check(&self, other: &Self) {
        assert!(
            self.field == other.field,
            "polynomials over different coefficient domains"
        );
    }

    pub fn try_same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedContext(format!("{:?} vs {:?}", self.field, other.field)))
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let cs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => f.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(f.clone(), cs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let cs = self.coeffs.iter().map(|c| self.field.neg(c)).collect();
        Poly {
            field: self.field.clone(),
            coeffs: cs,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field.clone());
        }
        let f = &self.field;
        let mut cs = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = f.mul(a, b);
                cs[i + j] = f.add(&cs[i + j], &t);
            }
        }
        Self::new(f.clone(), cs)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let cs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Self::new(self.field.clone(), cs)
    }

    /// Multiplies by `X^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut cs = vec![self.field.zero(); n];
        cs.extend(self.coeffs.iter().cloned());
        Self::new(self.field.clone(), cs)
    }

    /// Quotient and remainder; the divisor's leading coefficient must be
    /// invertible.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.try_same_field(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let inv = f.inv(&divisor.lc()).ok_or(Error::DivisionByZero)?;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(f.clone()), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![f.zero(); rem.len() - dd];
        for k in (0..quo.len()).rev() {
            let c = f.mul(&rem[k + dd], &inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let t = f.mul(&c, b);
                rem[k + j] = f.sub(&rem[k + j], &t);
            }
            quo[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(f.clone(), quo), Self::new(f.clone(), rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    pub fn quo(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.0)
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InvalidArgument("inexact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Scales to a monic polynomial (zero stays zero).
    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self
            .field
            .inv(&self.lc())
            .expect("leading coefficient of a nonzero polynomial is invertible");
        self.scale(&inv)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        self.check(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, u, v)` with `u*self + v*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        self.check(other);
        let fld = self.field.clone();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(fld.clone()), Self::zero(fld.clone()));
        let (mut t0, mut t1) = (Self::zero(fld.clone()), Self::one(fld.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("nonzero divisor");
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = fld.inv(&r0.lc()).expect("invertible leading coefficient");
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let cs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(c, &f.from_i64(i as i64)))
            .collect();
        Self::new(f.clone(), cs)
    }

    /// `self(g(X))`.
    pub fn compose(&self, g: &Self) -> Self {
        self.check(g);
        let mut acc = Self::zero(self.field.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(self.field.clone(), c.clone()));
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `self^e mod m`.
    pub fn powmod(&self, e: &BigUint, m: &Self) -> Result<Self> {
        let mut acc = Self::one(self.field.clone()).rem(m)?;
        let base = self.rem(m)?;
        if e.is_zero() {
            return Ok(acc);
        }
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m)?;
            if e.bit(i) {
                acc = acc.mul(&base).rem(m)?;
            }
        }
        Ok(acc)
    }

    /// Applies `g` to every coefficient, landing in another domain.
    pub fn map<G: Field>(&self, target: G, g: impl Fn(&F::Elem) -> G::Elem) -> Poly<G> {
        let cs = self.coeffs.iter().map(g).collect();
        Poly::new(target, cs)
    }

    /// Same as [`Poly::map`] but the coefficient map may fail.
    pub fn try_map<G: Field>(&self, target: G, g: impl Fn(&F::Elem) -> Option<G::Elem>) -> Option<Poly<G>> {
        let cs = self.coeffs.iter().map(g).collect::<Option<Vec<_>>>()?;
        Some(Poly::new(target, cs))
    }

    /// Product of `X - r` over the given roots.
    pub fn from_roots(field: F, roots: &[F::Elem]) -> Self {
        roots.iter().fold(Self::one(field.clone()), |acc, r| {
            acc.mul(&Self::linear_root(field.clone(), r))
        })
    }

    pub fn product<'a>(field: F, factors: impl IntoIterator<Item = &'a Self>) -> Self
    where
        F: 'a,
    {
        factors.into_iter().fold(Self::one(field), |acc, f| acc.mul(f))
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Self) -> Poly<F> {
        Poly::add(self, rhs)
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Self) -> Poly<F> {
        Poly::sub(self, rhs)
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Self) -> Poly<F> {
        Poly::mul(self, rhs)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::{PrimeField, Rationals};
    use crate::exactmath::rational::rat;

    fn q(cs: &[i64]) -> Poly<Rationals> {
        Poly::from_ints(Rationals, cs)
    }

    #[test]
    fn divrem_difference_of_squares() {
        let (quo, rem) = q(&[-1, 0, 1]).divrem(&q(&[-1, 1])).unwrap();
        assert_eq!(quo, q(&[1, 1]));
        assert!(rem.is_zero());
    }

    #[test]
    fn gcd_shared_root() {
        assert_eq!(q(&[-1, 0, 1]).gcd(&q(&[1, -2, 1])), q(&[-1, 1]));
    }

    #[test]
    fn eval_brumer_at_one() {
        // X^5 - 2X^4 + 2X^3 - X^2 + 1
        assert_eq!(q(&[1, 0, -1, 2, -2, 1]).eval(&rat(1)), rat(1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(q(&[1, 1]).divrem(&Poly::zero(Rationals)), Err(Error::DivisionByZero));
    }

    #[test]
    fn xgcd_bezout() {
        let a = q(&[1, 2, 3, 4]);
        let b = q(&[-1, 0, 1]);
        let (g, u, v) = a.xgcd(&b);
        assert_eq!(&(&u * &a) + &(&v * &b), g);
    }

    #[test]
    fn powmod_frobenius() {
        let f = PrimeField::new(7).unwrap();
        let m = Poly::from_ints(f, &[3, 1, 0, 1]);
        let x = Poly::x(f);
        let lhs = x.powmod(&BigUint::from(49u32), &m).unwrap();
        let x7 = x.powmod(&BigUint::from(7u32), &m).unwrap();
        assert_eq!(lhs, x7.powmod(&BigUint::from(7u32), &m).unwrap());
    }

    #[test]
    fn compose_and_derivative() {
        let f = q(&[0, 0, 1]);
        let g = q(&[1, 1]);
        assert_eq!(f.compose(&g), q(&[1, 2, 1]));
        assert_eq!(q(&[5, 3, 0, 2]).derivative(), q(&[3, 0, 6]));
    }
}
