//! Quadratic extensions `K(sqrt r)` of an arbitrary field of characteristic
//! other than 2. Stacking two gives the biquadratic fields needed when two
//! points carry different quadratic invariants.

use num_bigint::BigInt;

use super::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TowerNum<E> {
    pub a: E,
    pub b: E,
}

/// `K(sqrt r)`; the radicand must be a non-square of `K`, which is the
/// caller's responsibility.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadExt<K: Field> {
    base: K,
    radicand: K::Elem,
}

impl<K: Field> QuadExt<K> {
    pub fn new(base: K, radicand: K::Elem) -> Self {
        QuadExt { base, radicand }
    }

    pub fn base(&self) -> &K {
        &self.base
    }

    pub fn radicand(&self) -> &K::Elem {
        &self.radicand
    }

    pub fn embed(&self, a: K::Elem) -> TowerNum<K::Elem> {
        TowerNum { a, b: self.base.zero() }
    }

    pub fn elem(&self, a: K::Elem, b: K::Elem) -> TowerNum<K::Elem> {
        TowerNum { a, b }
    }

    pub fn sqrt_r(&self) -> TowerNum<K::Elem> {
        TowerNum {
            a: self.base.zero(),
            b: self.base.one(),
        }
    }

    pub fn conj(&self, x: &TowerNum<K::Elem>) -> TowerNum<K::Elem> {
        TowerNum {
            a: x.a.clone(),
            b: self.base.neg(&x.b),
        }
    }

    /// `Some(a)` when `x` lies in the base field.
    pub fn in_base(&self, x: &TowerNum<K::Elem>) -> Option<K::Elem> {
        self.base.is_zero(&x.b).then(|| x.a.clone())
    }
}

impl<K: Field> Field for QuadExt<K> {
    type Elem = TowerNum<K::Elem>;

    fn zero(&self) -> Self::Elem {
        self.embed(self.base.zero())
    }

    fn one(&self) -> Self::Elem {
        self.embed(self.base.one())
    }

    fn is_zero(&self, x: &Self::Elem) -> bool {
        self.base.is_zero(&x.a) && self.base.is_zero(&x.b)
    }

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        TowerNum {
            a: self.base.add(&x.a, &y.a),
            b: self.base.add(&x.b, &y.b),
        }
    }

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        TowerNum {
            a: self.base.sub(&x.a, &y.a),
            b: self.base.sub(&x.b, &y.b),
        }
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let k = &self.base;
        let bb = k.mul(&k.mul(&x.b, &y.b), &self.radicand);
        TowerNum {
            a: k.add(&k.mul(&x.a, &y.a), &bb),
            b: k.add(&k.mul(&x.a, &y.b), &k.mul(&x.b, &y.a)),
        }
    }

    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        TowerNum {
            a: self.base.neg(&x.a),
            b: self.base.neg(&x.b),
        }
    }

    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem> {
        let k = &self.base;
        let n = k.sub(&k.mul(&x.a, &x.a), &k.mul(&k.mul(&x.b, &x.b), &self.radicand));
        let ni = k.inv(&n)?;
        Some(TowerNum {
            a: k.mul(&x.a, &ni),
            b: k.neg(&k.mul(&x.b, &ni)),
        })
    }

    fn from_int(&self, n: &BigInt) -> Self::Elem {
        self.embed(self.base.from_int(n))
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::rat;
    use crate::exactmath::{QuadField, Rationals};

    #[test]
    fn biquadratic_arithmetic() {
        let k = QuadField::new(2).unwrap();
        let l = QuadExt::new(k.clone(), k.from_i64(3));
        // (sqrt2 + sqrt3)^2 = 5 + 2 sqrt6
        let x = l.elem(k.sqrt_d(), k.one());
        let sq = l.mul(&x, &x);
        assert_eq!(sq.a, k.from_i64(5));
        assert_eq!(sq.b, k.elem(rat(0), rat(2)));
        let inv = l.inv(&x).unwrap();
        assert_eq!(l.mul(&x, &inv), l.one());
        assert_eq!(l.in_base(&l.mul(&x, &l.conj(&x))), Some(k.from_i64(-1)));
    }

    #[test]
    fn over_rationals() {
        let l = QuadExt::new(Rationals, rat(5));
        let r = l.sqrt_r();
        assert_eq!(l.mul(&r, &r), l.from_i64(5));
    }
}
