//! Squarefree decomposition.

use crate::error::{Error, Result};
use crate::exactmath::{Field, Poly};

/// Monic squarefree parts with multiplicities; pairwise coprime, product
/// equal to the monic version of `f`. Constant inputs give an empty list.
pub fn squarefree_decompose<F: Field>(f: &Poly<F>) -> Result<Vec<(Poly<F>, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = f.monic();
    if f.is_constant() {
        return Ok(Vec::new());
    }
    if f.field().characteristic() == 0 {
        Ok(yun(&f))
    } else {
        Ok(char_p(&f))
    }
}

fn yun<F: Field>(f: &Poly<F>) -> Vec<(Poly<F>, u32)> {
    let mut out = Vec::new();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let c = df.exact_div(&a0).expect("gcd divides");
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        let nb = b.exact_div(&a).expect("gcd divides");
        let c = d.exact_div(&a).expect("gcd divides");
        d = c.sub(&nb.derivative());
        b = nb;
        i += 1;
    }
    out
}

fn char_p<F: Field>(f: &Poly<F>) -> Vec<(Poly<F>, u32)> {
    let p = f.field().characteristic() as usize;
    let mut out = Vec::new();
    let mut c = f.gcd(&f.derivative());
    let mut w = f.exact_div(&c).expect("gcd divides");
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let fac = w.exact_div(&y).expect("gcd divides");
        if !fac.is_constant() {
            out.push((fac, i));
        }
        w = y;
        c = c.exact_div(&w).expect("gcd divides");
        i += 1;
    }
    if !c.is_constant() {
        // c is a polynomial in X^p
        let fld = f.field().clone();
        let cs = c.coeffs().iter().step_by(p).map(|a| fld.pth_root(a)).collect();
        let root = Poly::new(fld, cs);
        for (g, e) in char_p(&root) {
            out.push((g, e * p as u32));
        }
    }
    merge_equal(out)
}

/// Parts of equal multiplicity from different recursion levels are merged
/// so each multiplicity appears once.
fn merge_equal<F: Field>(parts: Vec<(Poly<F>, u32)>) -> Vec<(Poly<F>, u32)> {
    let mut out: Vec<(Poly<F>, u32)> = Vec::new();
    for (g, e) in parts {
        match out.iter_mut().find(|(_, k)| *k == e) {
            Some(slot) => slot.0 = slot.0.mul(&g),
            None => out.push((g, e)),
        }
    }
    out.sort_by_key(|(_, e)| *e);
    out
}

/// Product of the distinct monic irreducible factors.
pub fn squarefree_part<F: Field>(f: &Poly<F>) -> Result<Poly<F>> {
    let parts = squarefree_decompose(f)?;
    Ok(parts
        .iter()
        .fold(Poly::one(f.field().clone()), |acc, (g, _)| acc.mul(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::polyq::polyq;
    use crate::exactmath::{Gf2m, PrimeField};

    #[test]
    fn perfect_square() {
        assert_eq!(
            squarefree_decompose(&polyq(&[1, -2, 1])).unwrap(),
            vec![(polyq(&[-1, 1]), 2)]
        );
        assert_eq!(
            squarefree_decompose(&polyq(&[-1, 0, 1])).unwrap(),
            vec![(polyq(&[-1, 0, 1]), 1)]
        );
    }

    #[test]
    fn repeated_factor_shape() {
        // X (X+1)^2 (X-3)^2
        let x = polyq(&[0, 1]);
        let a = polyq(&[1, 1]);
        let b = polyq(&[-3, 1]);
        let f = &(&x * &a.pow(2)) * &b.pow(2);
        let parts = squarefree_decompose(&f).unwrap();
        assert_eq!(parts, vec![(x, 1), (&a * &b, 2)]);
    }

    #[test]
    fn char_p_inseparable() {
        let f3 = PrimeField::new(3).unwrap();
        // (X^2 + 1)^3 (X + 1) over F_3
        let g = Poly::from_ints(f3, &[1, 0, 1]);
        let f = g.pow(3).mul(&Poly::from_ints(f3, &[1, 1]));
        let parts = squarefree_decompose(&f).unwrap();
        assert_eq!(parts, vec![(Poly::from_ints(f3, &[1, 1]), 1), (g, 3)]);

        let k = Gf2m::new(4).unwrap();
        let h = Poly::new(k, vec![3, 1, 1]);
        let parts = squarefree_decompose(&h.pow(2)).unwrap();
        assert_eq!(parts, vec![(h, 2)]);
    }
}
