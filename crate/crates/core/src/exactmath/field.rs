//! Coefficient domains.
//!
//! A [`Field`] value is the *context* of a coefficient domain (the prime of
//! `F_p`, the modulus of `F_{2^m}`, the radicand of `Q(sqrt D)`); elements are
//! plain data and every operation goes through the context.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{is_rational_square, squarefree_decomposition, Rational};
use crate::error::{Error, Result};

// conversions need the field instance for the modulus
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + fmt::Debug + PartialEq {
    type Elem: Clone + fmt::Debug + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Image of an integer under the canonical map `Z -> F`.
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    /// Image of a rational, or `None` when its denominator maps to zero.
    fn from_rational(&self, r: &Rational) -> Option<Self::Elem> {
        let d = self.inv(&self.from_int(r.denom()))?;
        Some(self.mul(&self.from_int(r.numer()), &d))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        Some(self.mul(a, &self.inv(b)?))
    }

    /// Inverse of the Frobenius map in positive characteristic; the identity
    /// on prime fields and in characteristic zero.
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem {
        a.clone()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn inv(&self, a: &Rational) -> Option<Rational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn from_int(&self, n: &BigInt) -> Rational {
        Rational::from_integer(n.clone())
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn from_rational(&self, r: &Rational) -> Option<Rational> {
        Some(r.clone())
    }
}

/// The prime field `F_p` for a prime `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..1 << 32).contains(&p) || !is_prime_u64(p) {
            return Err(Error::InvalidArgument(format!("{p} is not a prime below 2^32")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    /// Symmetric lift to `(-p/2, p/2]`.
    pub fn lift(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        Some(self.pow(a, self.p - 2))
    }
    fn from_int(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().expect("reduced residue")
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The field `F_{2^m}` represented as `F_2[z]/(modulus)`, elements as bit
/// vectors with bit `i` holding the coefficient of `z^i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gf2m {
    m: u32,
    modulus: u64,
}

impl Gf2m {
    /// Uses the smallest irreducible polynomial of degree `m` (as an integer
    /// bit pattern) as modulus.
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 || m > 31 {
            return Err(Error::InvalidArgument(format!("F_2^m supports 1 <= m <= 31, got {m}")));
        }
        let modulus = ((1u64 << m)..(1u64 << (m + 1)))
            .find(|&f| f & 1 == 1 && bitpoly_is_irreducible(f))
            .or_else(|| (m == 1).then_some(0b10))
            .expect("irreducible polynomials exist in every degree");
        Ok(Gf2m { m, modulus })
    }

    pub fn with_modulus(modulus: u64) -> Result<Self> {
        let m = 63 - modulus.leading_zeros();
        if m == 0 || m > 31 || !bitpoly_is_irreducible(modulus) {
            return Err(Error::InvalidArgument(format!(
                "{modulus:#x} is not an irreducible modulus"
            )));
        }
        Ok(Gf2m { m, modulus })
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        1 << self.m
    }
}

fn clmul(a: u64, b: u64) -> u64 {
    let mut acc = 0u64;
    let mut b = b;
    let mut i = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a << i;
        }
        b >>= 1;
        i += 1;
    }
    acc
}

fn bitpoly_deg(a: u64) -> i32 {
    63 - a.leading_zeros() as i32
}

fn bitpoly_rem(mut a: u64, m: u64) -> u64 {
    let dm = bitpoly_deg(m);
    while a != 0 && bitpoly_deg(a) >= dm {
        a ^= m << (bitpoly_deg(a) - dm);
    }
    a
}

fn bitpoly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = bitpoly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

fn bitpoly_mulmod(a: u64, b: u64, m: u64) -> u64 {
    // operands have degree < 32 so the carry-less product fits in 63 bits
    bitpoly_rem(clmul(a, b), m)
}

/// Rabin's test for a polynomial over `F_2` given as a bit pattern.
fn bitpoly_is_irreducible(f: u64) -> bool {
    let n = bitpoly_deg(f);
    if n <= 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    // x^(2^k) mod f
    let frob = |k: i32| {
        let mut h = bitpoly_rem(0b10, f);
        for _ in 0..k {
            h = bitpoly_mulmod(h, h, f);
        }
        h
    };
    if frob(n) != bitpoly_rem(0b10, f) {
        return false;
    }
    let mut q = 2;
    let mut rest = n;
    while rest > 1 {
        if rest % q == 0 {
            let h = frob(n / q) ^ 0b10;
            if bitpoly_gcd(f, bitpoly_rem(h, f)) != 1 {
                return false;
            }
            while rest % q == 0 {
                rest /= q;
            }
        }
        q += 1;
    }
    true
}

impl Field for Gf2m {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        a ^ b
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        a ^ b
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        bitpoly_mulmod(*a, *b, self.modulus)
    }
    fn neg(&self, a: &u64) -> u64 {
        *a
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        Some(self.pow(a, self.order() - 2))
    }
    fn from_int(&self, n: &BigInt) -> u64 {
        u64::from(n.is_odd())
    }
    fn pth_root(&self, a: &u64) -> u64 {
        let mut r = *a;
        for _ in 1..self.m {
            r = self.mul(&r, &r);
        }
        r
    }
    fn characteristic(&self) -> u64 {
        2
    }
}

/// An element `a + b sqrt(D)` of a quadratic field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadNum {
    pub a: Rational,
    pub b: Rational,
}

impl QuadNum {
    pub fn rational(a: Rational) -> Self {
        QuadNum { a, b: Rational::zero() }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }
}

/// The quadratic field `Q(sqrt D)` with `D` squarefree, `D != 0, 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadField {
    d: BigInt,
}

impl QuadField {
    /// Builds `Q(sqrt r)` for a non-square rational `r`. Returns the field and
    /// the positive rational `m` with `sqrt(r) = m * sqrt(D)`.
    pub fn from_radicand(r: &Rational) -> Result<(Self, Rational)> {
        if r.is_zero() || is_rational_square(r) {
            return Err(Error::SquareRadicand(r.to_string()));
        }
        let (d, m) = squarefree_decomposition(r);
        Ok((QuadField { d }, m))
    }

    pub fn new(d: i64) -> Result<Self> {
        Ok(Self::from_radicand(&Rational::from_integer(BigInt::from(d)))?.0)
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    /// `m * sqrt(D)`.
    pub fn sqrt_times(&self, m: &Rational) -> QuadNum {
        QuadNum {
            a: Rational::zero(),
            b: m.clone(),
        }
    }

    pub fn sqrt_d(&self) -> QuadNum {
        self.sqrt_times(&Rational::one())
    }

    pub fn elem(&self, a: Rational, b: Rational) -> QuadNum {
        QuadNum { a, b }
    }

    pub fn conj(&self, x: &QuadNum) -> QuadNum {
        QuadNum {
            a: x.a.clone(),
            b: -&x.b,
        }
    }

    pub fn norm(&self, x: &QuadNum) -> Rational {
        &x.a * &x.a - Rational::from_integer(self.d.clone()) * &x.b * &x.b
    }

    pub fn trace(&self, x: &QuadNum) -> Rational {
        &x.a + &x.a
    }

    /// Square root inside the field, when one exists.
    pub fn sqrt(&self, x: &QuadNum) -> Option<QuadNum> {
        use super::rational::rational_sqrt;
        if x.b.is_zero() {
            if let Some(r) = rational_sqrt(&x.a) {
                return Some(QuadNum::rational(r));
            }
            // a = D * v^2  gives sqrt = v sqrt(D)
            let dq = Rational::from_integer(self.d.clone());
            return rational_sqrt(&(&x.a / &dq)).map(|v| QuadNum {
                a: Rational::zero(),
                b: v,
            });
        }
        // (u + v sqrt D)^2 = u^2 + D v^2 + 2uv sqrt D
        let n = rational_sqrt(&self.norm(x))?;
        let two = Rational::from_integer(BigInt::from(2));
        for cand in [(&x.a + &n) / &two, (&x.a - &n) / &two] {
            if let Some(u) = rational_sqrt(&cand) {
                if u.is_zero() {
                    continue;
                }
                let v = &x.b / (&two * &u);
                let root = QuadNum { a: u, b: v };
                if self.mul(&root, &root) == *x {
                    return Some(root);
                }
            }
        }
        None
    }

    pub fn is_square(&self, x: &QuadNum) -> bool {
        self.sqrt(x).is_some()
    }
}

impl Field for QuadField {
    type Elem = QuadNum;

    fn zero(&self) -> QuadNum {
        QuadNum::rational(Rational::zero())
    }
    fn one(&self) -> QuadNum {
        QuadNum::rational(Rational::one())
    }
    fn is_zero(&self, x: &QuadNum) -> bool {
        x.a.is_zero() && x.b.is_zero()
    }
    fn add(&self, x: &QuadNum, y: &QuadNum) -> QuadNum {
        QuadNum {
            a: &x.a + &y.a,
            b: &x.b + &y.b,
        }
    }
    fn sub(&self, x: &QuadNum, y: &QuadNum) -> QuadNum {
        QuadNum {
            a: &x.a - &y.a,
            b: &x.b - &y.b,
        }
    }
    fn mul(&self, x: &QuadNum, y: &QuadNum) -> QuadNum {
        if x.b.is_zero() {
            return QuadNum {
                a: &x.a * &y.a,
                b: &x.a * &y.b,
            };
        }
        if y.b.is_zero() {
            return QuadNum {
                a: &x.a * &y.a,
                b: &x.b * &y.a,
            };
        }
        let d = Rational::from_integer(self.d.clone());
        QuadNum {
            a: &x.a * &y.a + d * &x.b * &y.b,
            b: &x.a * &y.b + &x.b * &y.a,
        }
    }
    fn neg(&self, x: &QuadNum) -> QuadNum {
        QuadNum { a: -&x.a, b: -&x.b }
    }
    fn inv(&self, x: &QuadNum) -> Option<QuadNum> {
        let n = self.norm(x);
        if n.is_zero() {
            return None;
        }
        Some(QuadNum {
            a: &x.a / &n,
            b: -&x.b / &n,
        })
    }
    fn from_int(&self, n: &BigInt) -> QuadNum {
        QuadNum::rational(Rational::from_integer(n.clone()))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn from_rational(&self, r: &Rational) -> Option<QuadNum> {
        Some(QuadNum::rational(r.clone()))
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use super::rational::display_rational;
        if self.b.is_zero() {
            write!(f, "{}", display_rational(&self.a))
        } else if self.a.is_zero() {
            write!(f, "{}*sqrtD", display_rational(&self.b))
        } else {
            let sign = if self.b.is_negative() { "-" } else { "+" };
            write!(
                f,
                "({} {} {}*sqrtD)",
                display_rational(&self.a),
                sign,
                display_rational(&self.b.abs())
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{rat, ratio};

    #[test]
    fn quad_examples() {
        let k = QuadField::new(2).unwrap();
        let x = k.elem(rat(1), rat(1));
        assert_eq!(k.norm(&x), rat(-1));
        let k5 = QuadField::new(5).unwrap();
        let three = QuadNum::rational(rat(3));
        assert_eq!(k5.conj(&three), three);
        let s = k5.sqrt_d();
        assert_eq!(k5.mul(&s, &s), QuadNum::rational(rat(5)));
        let inv = k5.inv(&k5.elem(rat(2), rat(1))).unwrap();
        assert_eq!(k5.mul(&inv, &k5.elem(rat(2), rat(1))), k5.one());
    }

    #[test]
    fn quad_rejects_squares() {
        assert!(QuadField::from_radicand(&ratio(9, 4)).is_err());
        assert!(QuadField::new(0).is_err());
        let (k, m) = QuadField::from_radicand(&rat(125)).unwrap();
        assert_eq!(k.radicand(), &BigInt::from(5));
        assert_eq!(m, rat(5));
    }

    #[test]
    fn quad_sqrt() {
        let k = QuadField::new(13).unwrap();
        let x = k.elem(ratio(3, 2), ratio(1, 2));
        let sq = k.mul(&x, &x);
        let r = k.sqrt(&sq).unwrap();
        assert_eq!(k.mul(&r, &r), sq);
        assert!(!k.is_square(&k.sqrt_d()));
        assert!(k.is_square(&QuadNum::rational(rat(13))));
    }

    #[test]
    fn prime_field_ops() {
        let f = PrimeField::new(101).unwrap();
        assert_eq!(f.mul(&f.inv(&7).unwrap(), &7), 1);
        assert_eq!(f.from_i64(-1), 100);
        assert_eq!(f.from_rational(&ratio(1, 2)).unwrap(), 51);
        assert!(PrimeField::new(100).is_err());
    }

    #[test]
    fn gf2m_field() {
        let f = Gf2m::new(8).unwrap();
        assert_eq!(f.modulus(), 0x11b);
        let g = Gf2m::new(16).unwrap();
        for a in [1u64, 2, 0x1234, 0xffff] {
            assert_eq!(g.mul(&a, &g.inv(&a).unwrap()), 1);
        }
        assert!(Gf2m::with_modulus(0b111).is_ok());
        assert!(Gf2m::with_modulus(0b101).is_err());
    }
}
