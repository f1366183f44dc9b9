//! Factorization over a quadratic field `Q(sqrt D)` by the norm method.

use super::rational::factor_squarefree_q;
use super::squarefree::squarefree_decompose;
use super::Factorization;
use crate::error::{Error, Result};
use crate::exactmath::polyq::PolyQ;
use crate::exactmath::{Field, Poly, PolyQuad, QuadField, QuadNum, Rational, Rationals};

/// Coefficientwise conjugation `a + b sqrt D -> a - b sqrt D`.
pub fn conjugate(f: &PolyQuad) -> PolyQuad {
    let k = f.field().clone();
    f.map(k.clone(), |c| k.conj(c))
}

/// `f * conj(f)`, which has rational coefficients.
pub fn norm(f: &PolyQuad) -> PolyQ {
    let n = f.mul(&conjugate(f));
    n.map(Rationals, |c| {
        debug_assert!(c.b == Rational::from_integer(0.into()));
        c.a.clone()
    })
}

pub fn embed(f: &PolyQ, k: &QuadField) -> PolyQuad {
    f.map(k.clone(), |c| QuadNum::rational(c.clone()))
}

/// `Some(g)` when every coefficient of `f` is rational.
pub fn as_rational(f: &PolyQuad) -> Option<PolyQ> {
    f.try_map(Rationals, |c| c.is_rational().then(|| c.a.clone()))
}

pub fn factor_over_quadratic(f: &PolyQuad) -> Result<Factorization<QuadField>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut factors = Vec::new();
    for (part, e) in squarefree_decompose(f)? {
        for g in factor_squarefree_quad(&part) {
            factors.push((g, e));
        }
    }
    let mut fz = Factorization { unit: f.lc(), factors };
    fz.sort_by_degree();
    Ok(fz)
}

/// Monic irreducible factors of a monic squarefree polynomial over `K`.
pub fn factor_squarefree_quad(f: &PolyQuad) -> Vec<PolyQuad> {
    if f.deg() <= 1 {
        return vec![f.monic()];
    }
    let k = f.field().clone();
    let alpha = k.sqrt_d();
    for shift in shifts() {
        // g(X) = f(X - shift * alpha)
        let c = k.mul(&k.from_i64(shift), &alpha);
        let sub = Poly::new(k.clone(), vec![k.neg(&c), k.one()]);
        let g = f.compose(&sub);
        let n = norm(&g);
        if !n.gcd(&n.derivative()).is_constant() {
            continue;
        }
        let back = Poly::new(k.clone(), vec![c, k.one()]);
        let mut out = Vec::new();
        let mut rest = g.clone();
        for nj in factor_squarefree_q(&n) {
            let h = rest.gcd(&embed(&nj, &k));
            if h.is_constant() {
                continue;
            }
            rest = rest.exact_div(&h).expect("gcd divides");
            out.push(h.compose(&back).monic());
        }
        debug_assert!(rest.is_constant());
        return out;
    }
    unreachable!("only finitely many shifts give a non-squarefree norm")
}

fn shifts() -> impl Iterator<Item = i64> {
    (0i64..).flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::rat;

    #[test]
    fn x2_minus_d_splits() {
        let k = QuadField::new(7).unwrap();
        let f = Poly::new(k.clone(), vec![k.from_i64(-7), k.zero(), k.one()]);
        let fz = factor_over_quadratic(&f).unwrap();
        assert_eq!(fz.factors.len(), 2);
        assert_eq!(fz.reconstruct(&k), f);
        let roots: Vec<QuadNum> = fz.factors.iter().map(|(g, _)| k.neg(&g.coeff(0))).collect();
        assert!(roots.contains(&k.sqrt_d()));
        assert!(roots.contains(&k.neg(&k.sqrt_d())));
    }

    #[test]
    fn x2_plus_1_over_q_sqrt2() {
        let k = QuadField::new(2).unwrap();
        let f = embed(&crate::exactmath::polyq::polyq(&[1, 0, 1]), &k);
        assert!(factor_over_quadratic(&f).unwrap().is_irreducible());
    }

    #[test]
    fn norm_is_rational() {
        let k = QuadField::new(-47).unwrap();
        let f = Poly::new(k.clone(), vec![k.elem(rat(1), rat(2)), k.one()]);
        let n = norm(&f);
        assert_eq!(n.deg(), 2);
        assert_eq!(n.coeff(0), rat(1 + 4 * 47));
    }
}
