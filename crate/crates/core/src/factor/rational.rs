//! Factorization over Q: squarefree split, modular factorization at a good
//! prime, multifactor Hensel lifting and Zassenhaus recombination.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::finite::{count_factors, factor_squarefree, DEFAULT_SEED};
use super::squarefree::squarefree_decompose;
use super::zmod;
use super::Factorization;
use crate::error::{Error, Result};
use crate::exactmath::polyq::{polyq_from_ints, primitive_int_form, IntPoly, PolyQ};
use crate::exactmath::{Poly, PrimeField, Rationals};

/// How many good primes are tried when choosing the modular image.
const PRIME_CANDIDATES: usize = 5;

pub fn factor_over_rationals(f: &PolyQ) -> Result<Factorization<Rationals>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut factors = Vec::new();
    for (part, e) in squarefree_decompose(f)? {
        for g in factor_squarefree_q(&part) {
            factors.push((g, e));
        }
    }
    let mut fz = Factorization { unit: f.lc(), factors };
    fz.canonical_sort();
    Ok(fz)
}

/// Monic irreducible factors of a squarefree rational polynomial.
pub fn factor_squarefree_q(f: &PolyQ) -> Vec<PolyQ> {
    if f.deg() <= 1 {
        return vec![f.monic()];
    }
    let (_, prim) = primitive_int_form(f).expect("nonzero");
    factor_squarefree_int(&prim)
        .into_iter()
        .map(|g| polyq_from_ints(&g).monic())
        .collect()
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).filter(|&n| crate::exactmath::field::is_prime_u64(n))
}

/// Picks a prime not dividing `lc(f)` modulo which `f` stays squarefree;
/// among the first few such primes, the one with fewest modular factors.
fn choose_prime(f: &[BigInt]) -> (PrimeField, Poly<PrimeField>, usize) {
    let lc = f.last().expect("nonzero");
    let mut best: Option<(PrimeField, Poly<PrimeField>, usize)> = None;
    let mut seen = 0;
    for p in small_primes() {
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fld = PrimeField::new(p).expect("prime");
        let fp = zmod::to_fp(f, fld);
        if !fp.gcd(&fp.derivative()).is_constant() {
            continue;
        }
        let r = count_factors(&fp.monic());
        if best.as_ref().is_none_or(|b| r < b.2) {
            best = Some((fld, fp, r));
        }
        seen += 1;
        if seen == PRIME_CANDIDATES || r == 1 {
            break;
        }
    }
    best.expect("a squarefree polynomial has good primes")
}

/// Irreducible factors (primitive, positive leading coefficient) of a
/// primitive squarefree integer polynomial.
pub fn factor_squarefree_int(f: &[BigInt]) -> Vec<IntPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let (fld, fp, r) = choose_prime(f);
    if r == 1 {
        return vec![f.to_vec()];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let modular: Vec<IntPoly> = factor_squarefree(&fp.monic(), &mut rng)
        .iter()
        .map(zmod::from_fp)
        .collect();

    let lc = f.last().expect("nonzero").abs();
    let bound = BigInt::from(2) * &lc * (BigInt::one() << n) * zmod::norm2_ceil(f);
    let p = BigInt::from(fld.modulus());
    let mut m = p.clone();
    while m <= bound {
        m *= &p;
    }
    let lifted = hensel_lift(f, &modular, fld, &m);
    recombine(f, lifted, &m)
}

/// Lifts the monic modular factors of `f` (known mod p) to monic factors
/// modulo `m = p^k`.
pub fn hensel_lift(f: &[BigInt], factors: &[IntPoly], fld: PrimeField, m: &BigInt) -> Vec<IntPoly> {
    if factors.len() == 1 {
        return vec![zmod::make_monic(f, m)];
    }
    let p = BigInt::from(fld.modulus());
    let k = factors.len() / 2;
    let lc = f.last().expect("nonzero").clone();
    let prod = |fs: &[IntPoly]| fs.iter().fold(vec![BigInt::one()], |acc, g| zmod::mul(&acc, g, &p));
    let g0 = zmod::scale(&prod(&factors[..k]), &lc, &p);
    let h0 = prod(&factors[k..]);
    let (one, s0, t0) = zmod::to_fp(&g0, fld).xgcd(&zmod::to_fp(&h0, fld));
    debug_assert_eq!(one, Poly::one(fld));
    let (mut g, mut h) = (g0, h0);
    let (mut s, mut t) = (zmod::from_fp(&s0), zmod::from_fp(&t0));
    let mut cur = p.clone();
    while &cur < m {
        let next = (&cur * &cur).min(m.clone());
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &next);
        cur = next;
    }
    let mut out = hensel_lift(&g, &factors[..k], fld, m);
    out.extend(hensel_lift(&h, &factors[k..], fld, m));
    out
}

/// One quadratic Hensel step: from `f = g h`, `s g + t h = 1` modulo a
/// modulus `q` with `q^2` divisible by `next`, to the same relations
/// modulo `next`. `h` stays monic.
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let e = zmod::sub(f, &zmod::mul(g, h, m), m);
    let (q, r) = zmod::divrem_monic(&zmod::mul(s, &e, m), h, m);
    let g2 = zmod::add(&zmod::add(g, &zmod::mul(t, &e, m), m), &zmod::mul(&q, g, m), m);
    let h2 = zmod::add(h, &r, m);
    let b = zmod::sub(
        &zmod::add(&zmod::mul(s, &g2, m), &zmod::mul(t, &h2, m), m),
        &[BigInt::one()],
        m,
    );
    let (c, d) = zmod::divrem_monic(&zmod::mul(s, &b, m), &h2, m);
    let s2 = zmod::sub(s, &d, m);
    let t2 = zmod::sub(&zmod::sub(t, &zmod::mul(t, &b, m), m), &zmod::mul(&c, &g2, m), m);
    (g2, h2, s2, t2)
}

fn primitive(p: IntPoly) -> IntPoly {
    let c = crate::exactmath::polyq::int_content(&p);
    let sign = if p.last().is_some_and(|x| x.is_negative()) {
        -c
    } else {
        c
    };
    p.into_iter().map(|x| x / &sign).collect()
}

/// Exact quotient over Z when `d` divides `f`.
fn int_div_exact(f: &[BigInt], d: &[BigInt]) -> Option<IntPoly> {
    let fq = polyq_from_ints(f);
    let dq = polyq_from_ints(d);
    let (q, r) = fq.divrem(&dq).ok()?;
    if !r.is_zero() || q.coeffs().iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(q.coeffs().iter().map(|c| c.numer().clone()).collect())
}

fn recombine(f: &[BigInt], lifted: Vec<IntPoly>, m: &BigInt) -> Vec<IntPoly> {
    let mut rest = f.to_vec();
    let mut pool = lifted;
    let mut found = Vec::new();
    let mut k = 1;
    'outer: while 2 * k <= pool.len() {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let lc = rest.last().expect("nonzero").clone();
            let cand = idx
                .iter()
                .fold(vec![lc.clone()], |acc, &i| zmod::mul(&acc, &pool[i], m));
            let cand = zmod::symmetric(&cand, m);
            // constant term test before the full division
            let c0 = cand.first().cloned().unwrap_or_default();
            let r0 = &lc * rest.first().cloned().unwrap_or_default();
            let plausible = if c0.is_zero() {
                r0.is_zero()
            } else {
                (&r0 % &c0).is_zero()
            };
            if plausible {
                let g = primitive(cand);
                if let Some(q) = int_div_exact(&rest, &g) {
                    found.push(g);
                    rest = primitive(q);
                    for &i in idx.iter().rev() {
                        pool.remove(i);
                    }
                    continue 'outer;
                }
            }
            if !next_combination(&mut idx, pool.len()) {
                break;
            }
        }
        k += 1;
    }
    if rest.len() > 1 {
        found.push(rest);
    }
    found
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::polyq::polyq;

    #[test]
    fn irreducible_quintic() {
        let f = polyq(&[1, 0, -1, 2, -2, 1]);
        assert!(factor_over_rationals(&f).unwrap().is_irreducible());
    }

    #[test]
    fn swinnerton_dyer_like() {
        // (x^2 - 2)(x^2 - 3)(x^4 - 10x^2 + 1): many modular factors, few rational ones
        let f = &(&polyq(&[-2, 0, 1]) * &polyq(&[-3, 0, 1])) * &polyq(&[1, 0, -10, 0, 1]);
        let fz = factor_over_rationals(&f).unwrap();
        assert_eq!(fz.factors.len(), 3);
        assert_eq!(fz.reconstruct(&Rationals), f);
    }

    #[test]
    fn non_monic_and_repeated() {
        let a = polyq(&[3, 0, 2]);
        let b = polyq(&[-1, 5]);
        let f = &(&a * &b.pow(2)) * &polyq(&[1, 1, 1, 7]);
        let fz = factor_over_rationals(&f).unwrap();
        assert_eq!(fz.reconstruct(&Rationals), f);
        assert_eq!(fz.factors.len(), 3);
        assert!(fz.has_repeated_factor());
    }

    #[test]
    fn combinations_enumerate() {
        let mut idx = vec![0, 1];
        let mut n = 1;
        while next_combination(&mut idx, 4) {
            n += 1;
        }
        assert_eq!(n, 6);
    }
}
