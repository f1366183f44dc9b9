//! Integer polynomials reduced modulo an integer `m` (used for p-adic lifting).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactmath::polyq::{trim_int, IntPoly};
use crate::exactmath::{Poly, PrimeField};

pub fn reduce(p: &[BigInt], m: &BigInt) -> IntPoly {
    trim_int(p.iter().map(|c| c.mod_floor(m)).collect())
}

/// Coefficients in `(-m/2, m/2]`.
pub fn symmetric(p: &[BigInt], m: &BigInt) -> IntPoly {
    let half = m >> 1;
    trim_int(
        p.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

pub fn add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> IntPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let out: Vec<BigInt> = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero))
        .collect();
    reduce(&out, m)
}

pub fn sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> IntPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let out: Vec<BigInt> = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
        .collect();
    reduce(&out, m)
}

pub fn mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> IntPoly {
    reduce(&crate::exactmath::polyq::int_mul(a, b), m)
}

pub fn scale(a: &[BigInt], c: &BigInt, m: &BigInt) -> IntPoly {
    reduce(&a.iter().map(|x| x * c).collect::<Vec<_>>(), m)
}

/// Division by a monic `b` modulo `m`.
pub fn divrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (IntPoly, IntPoly) {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    let mut r = reduce(a, m);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[k + j] = (&r[k + j] - &c * y).mod_floor(m);
        }
        q[k] = c;
    }
    r.truncate(db);
    (trim_int(q), trim_int(r))
}

pub fn inverse_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Scales to leading coefficient 1 modulo `m`.
pub fn make_monic(a: &[BigInt], m: &BigInt) -> IntPoly {
    let r = reduce(a, m);
    let inv = inverse_mod(r.last().expect("nonzero"), m).expect("unit leading coefficient");
    scale(&r, &inv, m)
}

pub fn eval(a: &[BigInt], x: &BigInt) -> BigInt {
    a.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

pub fn from_fp(f: &Poly<PrimeField>) -> IntPoly {
    f.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

pub fn to_fp(a: &[BigInt], field: PrimeField) -> Poly<PrimeField> {
    let p = BigInt::from(field.modulus());
    let cs = a
        .iter()
        .map(|c| {
            use num_traits::ToPrimitive;
            c.mod_floor(&p).to_u64().expect("reduced")
        })
        .collect();
    Poly::new(field, cs)
}

/// `ceil(sqrt(sum c_i^2))`.
pub fn norm2_ceil(a: &[BigInt]) -> BigInt {
    let s: BigInt = a.iter().map(|c| c * c).sum();
    let r = s.sqrt();
    if &r * &r == s {
        r
    } else {
        r + 1
    }
}

pub fn max_abs(a: &[BigInt]) -> BigInt {
    a.iter().map(|c| c.abs()).max().unwrap_or_default()
}
