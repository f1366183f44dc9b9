//! Rational roots and root existence modulo primes.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use super::squarefree::squarefree_part;
use super::zmod;
use crate::exactmath::polyq::{primitive_int_form, reduce_mod_p, PolyFp, PolyQ};
use crate::exactmath::{Poly, PrimeField, Rational};

/// True iff `f` has a root in `F_p`, i.e. `gcd(f, X^p - X)` is nonconstant.
pub fn has_root_mod_p(f: &PolyFp) -> bool {
    if f.is_constant() {
        return false;
    }
    let fld = *f.field();
    if f.coeff(0) == 0 {
        return true;
    }
    let x = Poly::x(fld);
    let xp = x.powmod(&BigUint::from(fld.modulus()), f).expect("nonzero modulus");
    !f.gcd(&xp.sub(&x)).is_constant()
}

/// Roots of `f` in `F_p`, by exhaustion (intended for small `p`).
pub fn roots_mod_p(f: &PolyFp) -> Vec<u64> {
    (0..f.field().modulus()).filter(|a| f.eval(a) == 0).collect()
}

/// Distinct rational roots of `f`, ascending.
///
/// Works on the squarefree integer part: roots modulo a prime not dividing
/// the leading coefficient are Newton-lifted until `lc * root` is pinned
/// down, then checked exactly.
pub fn rational_roots(f: &PolyQ) -> Vec<Rational> {
    if f.is_zero() || f.is_constant() {
        return Vec::new();
    }
    let sf = squarefree_part(f).expect("nonzero");
    let (_, g) = primitive_int_form(&sf).expect("nonzero");
    let mut roots = Vec::new();
    let mut g = g;
    if g[0].is_zero() {
        roots.push(Rational::zero());
        g.remove(0);
    }
    if g.len() == 2 {
        roots.push(Rational::new(-g[0].clone(), g[1].clone()));
    } else if g.len() > 2 {
        roots.extend(nonzero_roots(&g));
    }
    roots.sort();
    roots
}

pub fn has_rational_root(f: &PolyQ) -> bool {
    !rational_roots(f).is_empty()
}

fn nonzero_roots(g: &[BigInt]) -> Vec<Rational> {
    let lc = g.last().expect("nonzero").clone();
    let gq = crate::exactmath::polyq::polyq_from_ints(g);
    let dg: Vec<BigInt> = g.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    // try a few primes: any prime without roots settles the question
    let mut chosen = None;
    let mut tried = 0;
    for p in (101u64..).filter(|&n| crate::exactmath::field::is_prime_u64(n)) {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fld = PrimeField::new(p).expect("prime");
        let gp = zmod::to_fp(g, fld);
        if !gp.gcd(&gp.derivative()).is_constant() {
            continue;
        }
        if !has_root_mod_p(&gp) {
            return Vec::new();
        }
        let rs = roots_mod_p(&gp);
        if chosen
            .as_ref()
            .is_none_or(|(_, r): &(PrimeField, Vec<u64>)| rs.len() < r.len())
        {
            chosen = Some((fld, rs));
        }
        tried += 1;
        if tried == 3 {
            break;
        }
    }
    let (fld, rs) = chosen.expect("good primes exist");
    let p = BigInt::from(fld.modulus());
    // a root a/b has b | lc and |a| <= |g_0|, so |lc * a/b| <= |lc| * max|g_i|
    let bound = BigInt::from(2) * lc.abs() * zmod::max_abs(g);
    let mut out = Vec::new();
    for r in rs {
        let mut x = BigInt::from(r);
        let mut m = p.clone();
        while m <= bound {
            m = &m * &m;
            // Newton step modulo m; g'(x) is a unit since the root is simple
            let fx = zmod::eval(g, &x);
            let dx = zmod::eval(&dg, &x);
            let inv = zmod::inverse_mod(&dx, &m).expect("simple root");
            x = (x - fx * inv) % &m;
        }
        let y = zmod::symmetric(&[&lc * &x], &m);
        let num = y.first().cloned().unwrap_or_default();
        let cand = Rational::new(num, lc.clone());
        if !cand.is_zero() && gq.eval(&cand).is_zero() && !out.contains(&cand) {
            out.push(cand);
        }
    }
    out
}

/// Root existence in `F_p` for a rational polynomial; `None` when a
/// coefficient denominator vanishes mod `p` or the image drops degree.
pub fn has_root_mod(f: &PolyQ, field: PrimeField) -> Option<bool> {
    let fp = reduce_mod_p(f, field)?;
    if fp.deg() != f.deg() {
        return None;
    }
    Some(has_root_mod_p(&fp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::polyq::{polyq, polyq_from_rationals};
    use crate::exactmath::rational::{rat, ratio};

    #[test]
    fn roots_of_products() {
        let f = polyq_from_rationals(vec![rat(-3), rat(2)]) // 2X - 3
            .mul(&polyq(&[5, 0, 1]))
            .mul(&polyq(&[7, 1]).pow(2))
            .mul(&polyq(&[0, 1]));
        assert_eq!(rational_roots(&f), vec![rat(-7), rat(0), ratio(3, 2)]);
        assert!(rational_roots(&polyq(&[1, 0, -1, 2, -2, 1])).is_empty());
    }

    #[test]
    fn large_roots() {
        let r = ratio(-23671, 17);
        let f = polyq_from_rationals(vec![-r.clone(), rat(1)]).mul(&polyq(&[1, 1, 0, 1]));
        assert_eq!(rational_roots(&f), vec![r]);
    }

    #[test]
    fn roots_mod_p_gcd_matches_exhaustion() {
        let fld = PrimeField::new(101).unwrap();
        for seed in 0..40i64 {
            let f = Poly::from_ints(fld, &[seed, 3 - seed, 7, seed * seed, 1]);
            assert_eq!(has_root_mod_p(&f), !roots_mod_p(&f).is_empty());
        }
    }
}
