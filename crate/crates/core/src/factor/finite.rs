//! Factorization over `F_p` and `F_{2^m}`: distinct-degree splitting followed
//! by Cantor–Zassenhaus equal-degree splitting (trace map in characteristic 2).

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::squarefree::squarefree_decompose;
use super::Factorization;
use crate::error::{Error, Result};
use crate::exactmath::{Field, Gf2m, Poly, PrimeField};

/// Finite fields whose elements are encoded as integers `0..size`.
pub trait FiniteField: Field<Elem = u64> + Copy {
    fn size(&self) -> u64;
}

impl FiniteField for PrimeField {
    fn size(&self) -> u64 {
        self.modulus()
    }
}

impl FiniteField for Gf2m {
    fn size(&self) -> u64 {
        self.order()
    }
}

pub const DEFAULT_SEED: u64 = 0x5eed_f00d;

/// Complete factorization with the default seed.
pub fn factor_over_finite_field<F: FiniteField>(f: &Poly<F>) -> Result<Factorization<F>> {
    factor_over_finite_field_seeded(f, DEFAULT_SEED)
}

pub fn factor_over_finite_field_seeded<F: FiniteField>(f: &Poly<F>, seed: u64) -> Result<Factorization<F>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (part, e) in squarefree_decompose(f)? {
        for g in factor_squarefree(&part, &mut rng) {
            factors.push((g, e));
        }
    }
    let mut fz = Factorization { unit: f.lc(), factors };
    fz.sort_by_degree();
    Ok(fz)
}

/// Irreducible monic factors of a monic squarefree polynomial.
pub fn factor_squarefree<F: FiniteField>(f: &Poly<F>, rng: &mut ChaCha8Rng) -> Vec<Poly<F>> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f) {
        equal_degree(&g, d, rng, &mut out);
    }
    out
}

/// Pairs `(g, d)` where `g` is the product of all irreducible factors of
/// degree `d`.
pub fn distinct_degree<F: FiniteField>(f: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let fld = *f.field();
    let q = BigUint::from(fld.size());
    let x = Poly::x(fld);
    let mut rest = f.monic();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 0;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.powmod(&q, &rest).expect("nonzero modulus");
        let g = rest.gcd(&h.sub(&x));
        if !g.is_constant() {
            rest = rest.exact_div(&g).expect("gcd divides");
            h = h.rem(&rest).expect("nonzero modulus");
            out.push((g, d));
        }
    }
    if !rest.is_constant() {
        let n = rest.deg();
        out.push((rest, n));
    }
    out
}

/// Number of irreducible factors of a squarefree polynomial, from the
/// distinct-degree split alone.
pub fn count_factors<F: FiniteField>(f: &Poly<F>) -> usize {
    distinct_degree(f).iter().map(|(g, d)| g.deg() / d).sum()
}

fn equal_degree<F: FiniteField>(f: &Poly<F>, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly<F>>) {
    let n = f.deg();
    if n == d {
        out.push(f.monic());
        return;
    }
    let fld = *f.field();
    let q = fld.size();
    loop {
        let a = Poly::new(fld, (0..n).map(|_| rng.gen_range(0..q)).collect());
        if a.is_constant() {
            continue;
        }
        let g = f.gcd(&a);
        let g = if !g.is_constant() {
            g
        } else {
            let b = splitting_element(&a, f, d);
            f.gcd(&b)
        };
        if !g.is_constant() && g.deg() < n {
            let h = f.exact_div(&g).expect("gcd divides");
            equal_degree(&g, d, rng, out);
            equal_degree(&h, d, rng, out);
            return;
        }
    }
}

fn splitting_element<F: FiniteField>(a: &Poly<F>, f: &Poly<F>, d: usize) -> Poly<F> {
    let fld = *f.field();
    let q = fld.size();
    if fld.characteristic() == 2 {
        // absolute trace of F_{q^d} over F_2: a + a^2 + ... + a^(2^(kd - 1))
        let k = q.trailing_zeros() as usize;
        let mut term = a.rem(f).expect("nonzero modulus");
        let mut acc = term.clone();
        for _ in 1..k * d {
            term = term.mul(&term).rem(f).expect("nonzero modulus");
            acc = acc.add(&term);
        }
        acc
    } else {
        let e = (num_traits::pow(BigUint::from(q), d) - BigUint::one()) >> 1;
        let one = Poly::one(fld);
        a.powmod(&e, f).expect("nonzero modulus").sub(&one)
    }
}
