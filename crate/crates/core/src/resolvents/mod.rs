//! Explicit multi-resolvent polynomials of pairs of Brumer quintics.
//!
//! Everything is built from `G^1`, `G^2` (or `G^3`, `G^4` in characteristic
//! 2) and the order-4 action on `(s, t)`; no resolvent has its own formula.

pub mod bundle;
pub mod table;

use crate::error::{Error, Result};
use crate::exactmath::{Field, Gf2m, Poly, PolyGf2m, PolyQ, Rational, Rationals};
use crate::families::{delta_generic, epsilon_d5_char2, rho_generic};

pub use bundle::{chart_of, BundlePoly, Chart, ResolventBundle, ResolventKind};
pub use table::CoefficientTable;

use table::Powers;

/// `(G^1, G^2)` over a field of characteristic other than 2.
pub fn g1_g2_with<F: Field>(
    fld: &F,
    table: &CoefficientTable,
    s: &F::Elem,
    t: &F::Elem,
    s2: &F::Elem,
    t2: &F::Elem,
) -> (Poly<F>, Poly<F>) {
    let pw = Powers::new(fld, [s, t, s2, t2]);
    let half = fld.inv(&fld.from_i64(2)).expect("characteristic is not 2");
    let c: Vec<F::Elem> = table.c.iter().map(|c| c.eval(fld, &pw)).collect();
    let three = fld.from_i64(3);
    let c4 = fld.neg(&fld.mul(&fld.sub(t, &three), &fld.sub(t2, &three)));
    let g1 = Poly::new(
        fld.clone(),
        vec![
            fld.mul(&c[0], &half),
            fld.mul(&c[1], &half),
            fld.mul(&c[2], &half),
            c[3].clone(),
            c4,
            fld.one(),
        ],
    );
    let one = fld.one();
    let g2c0 = fld.add(
        &fld.add(&fld.sub(s, t), &fld.sub(s2, t2)),
        &fld.add(&fld.mul(t, t2), &fld.from_i64(2)),
    );
    let g2 = Poly::new(fld.clone(), vec![g2c0, fld.sub(&fld.add(t, t2), &one), one]);
    (g1, g2)
}

pub fn g1_g2(s: &Rational, t: &Rational, s2: &Rational, t2: &Rational) -> (PolyQ, PolyQ) {
    g1_g2_with(&Rationals, CoefficientTable::standard(), s, t, s2, t2)
}

/// `F^1 = (G^1)^2 - (delta delta' / 4)(G^2)^2`.
pub fn f1_with<F: Field>(
    fld: &F,
    table: &CoefficientTable,
    s: &F::Elem,
    t: &F::Elem,
    s2: &F::Elem,
    t2: &F::Elem,
) -> Poly<F> {
    let (g1, g2) = g1_g2_with(fld, table, s, t, s2, t2);
    let dd = fld.mul(&delta_generic(fld, s, t), &delta_generic(fld, s2, t2));
    let k = fld.div(&dd, &fld.from_i64(4)).expect("characteristic is not 2");
    g1.mul(&g1).sub(&g2.mul(&g2).scale(&k))
}

pub fn f1(s: &Rational, t: &Rational, s2: &Rational, t2: &Rational) -> PolyQ {
    f1_with(&Rationals, CoefficientTable::standard(), s, t, s2, t2)
}

fn rho_or_err<F: Field>(fld: &F, s: &F::Elem, t: &F::Elem) -> Result<(F::Elem, F::Elem)> {
    rho_generic(fld, s, t).ok_or_else(|| Error::DegenerateParameter("t = 0 under the order-4 action".into()))
}

/// `F^i` for `i = 1..4`: `F^1` at `(s, t)` and `(s', t')` moved by the
/// order-4 action on the left (`i = 2`), the right (`i = 3`) or both (`i = 4`).
pub fn fi_with<F: Field>(
    i: usize,
    fld: &F,
    table: &CoefficientTable,
    s: &F::Elem,
    t: &F::Elem,
    s2: &F::Elem,
    t2: &F::Elem,
) -> Result<Poly<F>> {
    let (left, right) = match i {
        1 => ((s.clone(), t.clone()), (s2.clone(), t2.clone())),
        2 => (rho_or_err(fld, s, t)?, (s2.clone(), t2.clone())),
        3 => ((s.clone(), t.clone()), rho_or_err(fld, s2, t2)?),
        4 => (rho_or_err(fld, s, t)?, rho_or_err(fld, s2, t2)?),
        _ => return Err(Error::InvalidArgument(format!("resolvent index {i} not in 1..4"))),
    };
    Ok(f1_with(fld, table, &left.0, &left.1, &right.0, &right.1))
}

pub fn fi(i: usize, s: &Rational, t: &Rational, s2: &Rational, t2: &Rational) -> Result<PolyQ> {
    fi_with(i, &Rationals, CoefficientTable::standard(), s, t, s2, t2)
}

/// `H^i = G^1 - (d d'/2) G^2` after applying the order-4 action `i - 1`
/// times to `(s, t, d)`.
#[allow(clippy::too_many_arguments)]
pub fn h_with<F: Field>(
    i: usize,
    fld: &F,
    table: &CoefficientTable,
    s: &F::Elem,
    t: &F::Elem,
    d: &F::Elem,
    s2: &F::Elem,
    t2: &F::Elem,
    d2: &F::Elem,
) -> Result<Poly<F>> {
    if !(1..=4).contains(&i) {
        return Err(Error::InvalidArgument(format!("resolvent index {i} not in 1..4")));
    }
    let (mut s, mut t, mut d) = (s.clone(), t.clone(), d.clone());
    for _ in 1..i {
        let t3 = fld.mul(&fld.mul(&t, &t), &t);
        let nd = fld
            .div(&d, &t3)
            .ok_or_else(|| Error::DegenerateParameter("t = 0 under the order-4 action".into()))?;
        let (ns, nt) = rho_or_err(fld, &s, &t)?;
        s = ns;
        t = nt;
        d = nd;
    }
    let (g1, g2) = g1_g2_with(fld, table, &s, &t, s2, t2);
    let k = fld
        .div(&fld.mul(&d, d2), &fld.from_i64(2))
        .expect("characteristic is not 2");
    Ok(g1.sub(&g2.scale(&k)))
}

/// `H^i` over Q; checks `d^2 = delta_{s,t}` and `d'^2 = delta_{s',t'}`.
#[allow(clippy::too_many_arguments)]
pub fn h_c5(
    i: usize,
    s: &Rational,
    t: &Rational,
    d: &Rational,
    s2: &Rational,
    t2: &Rational,
    d2: &Rational,
) -> Result<PolyQ> {
    let fld = Rationals;
    if (d * d) != delta_generic(&fld, s, t) || (d2 * d2) != delta_generic(&fld, s2, t2) {
        return Err(Error::InvalidArgument("d does not square to delta".into()));
    }
    h_with(i, &fld, CoefficientTable::standard(), s, t, d, s2, t2, d2)
}

/// `(G^3, G^4)` in characteristic 2.
pub fn g3_g4(k: &Gf2m, table: &CoefficientTable, s: &u64, t: &u64, s2: &u64, t2: &u64) -> (PolyGf2m, PolyGf2m) {
    let pw = Powers::new(k, [s, t, s2, t2]);
    let d: Vec<u64> = table.d.iter().map(|c| c.eval(k, &pw)).collect();
    let lead = k.mul(&k.add(t, &1), &k.add(t2, &1));
    let g3 = Poly::new(*k, vec![d[0], d[1], d[2], d[3], lead, 1]);
    let u = k.add(&k.add(s, t), &k.mul(s, t));
    let u2 = k.add(&k.add(s2, t2), &k.mul(s2, t2));
    let c0 = k.add(&k.add(&k.add(s, t), &k.add(s2, t2)), &k.mul(t, t2));
    let quad = Poly::new(*k, vec![c0, k.add(&k.add(t, t2), &1), 1]);
    (g3, quad.scale(&k.mul(&u, &u2)))
}

/// `F^1` in characteristic 2: `(G^3)^2 + G^3 G^4 + (eps + eps') (G^4)^2`,
/// the expansion of `(G^3 + (e+e')G^4)(G^3 + (e+e'+1)G^4)`.
pub fn f1_char2_with(k: &Gf2m, table: &CoefficientTable, s: &u64, t: &u64, s2: &u64, t2: &u64) -> Result<PolyGf2m> {
    let e = epsilon_d5_char2(k, s, t)?;
    let e2 = epsilon_d5_char2(k, s2, t2)?;
    let (g3, g4) = g3_g4(k, table, s, t, s2, t2);
    Ok(g3.mul(&g3).add(&g3.mul(&g4)).add(&g4.mul(&g4).scale(&k.add(&e, &e2))))
}

pub fn f1_char2(k: &Gf2m, s: &u64, t: &u64, s2: &u64, t2: &u64) -> Result<PolyGf2m> {
    f1_char2_with(k, CoefficientTable::standard(), s, t, s2, t2)
}

/// The four resolvents `F^1..F^4` over one field.
pub fn all_fi_with<F: Field>(fld: &F, s: &F::Elem, t: &F::Elem, s2: &F::Elem, t2: &F::Elem) -> Result<[Poly<F>; 4]> {
    let table = CoefficientTable::standard();
    Ok([
        fi_with(1, fld, table, s, t, s2, t2)?,
        fi_with(2, fld, table, s, t, s2, t2)?,
        fi_with(3, fld, table, s, t, s2, t2)?,
        fi_with(4, fld, table, s, t, s2, t2)?,
    ])
}

/// `F^+` and `F^-` of the cyclic quartic comparison:
/// `X^4 - aa'X^2 + a^2a'^2(c +- c')^2 / ((c^2+4)(c'^2+4))`.
pub fn thc4_compare_poly(a: &Rational, c: &Rational, a2: &Rational, c2: &Rational) -> Result<(PolyQ, PolyQ)> {
    use num_traits::Zero;
    let four = Rational::from_integer(4.into());
    let n = (c * c + &four) * (c2 * c2 + &four);
    if a.is_zero() || a2.is_zero() || c.is_zero() || c2.is_zero() || n.is_zero() {
        return Err(Error::Indeterminate(
            "quartic comparison hypotheses fail: a, a', c or c' vanishes".into(),
        ));
    }
    if c == c2 || c == &-c2.clone() {
        return Err(Error::Indeterminate(
            "quartic comparison hypotheses fail: c = +-c'".into(),
        ));
    }
    let cc = c * c2;
    if cc == four || cc == -four.clone() {
        return Err(Error::Indeterminate(
            "quartic comparison hypotheses fail: c = +-4/c'".into(),
        ));
    }
    let aa = a * a2;
    let build = |sum: Rational| {
        crate::exactmath::polyq::polyq_from_rationals(vec![
            &aa * &aa * &sum * &sum / &n,
            Rational::zero(),
            -aa.clone(),
            Rational::zero(),
            Rational::from_integer(1.into()),
        ])
    };
    Ok((build(c + c2), build(c - c2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::polyq::polyq;
    use crate::exactmath::rational::{rat, ratio};
    use crate::exactmath::{discriminant, PrimeField};
    use crate::factor::factor_over_rationals;
    use crate::families::delta_value;

    #[test]
    fn g2_and_c3_at_diagonal() {
        let (g1, g2) = g1_g2(&rat(0), &rat(1), &rat(0), &rat(1));
        assert_eq!(g2, polyq(&[1, 1, 1]));
        assert_eq!(g1.coeff(3), rat(-2));
        assert_eq!(g1.coeff(4), rat(-4));
    }

    #[test]
    fn swap_symmetry() {
        let (a, b, c, d) = (ratio(3, 2), rat(-2), rat(7), ratio(1, 3));
        assert_eq!(g1_g2(&a, &b, &c, &d), g1_g2(&c, &d, &a, &b));
        assert_eq!(f1(&a, &b, &c, &d), f1(&c, &d, &a, &b));
        assert_eq!(fi(3, &a, &b, &c, &d).unwrap(), fi(2, &c, &d, &a, &b).unwrap());
    }

    #[test]
    fn golden_f1_example() {
        let fz = factor_over_rationals(&f1(&rat(0), &rat(1), &rat(-1), &rat(1))).unwrap();
        let got: Vec<_> = fz.factors.iter().map(|(f, _)| f.clone()).collect();
        assert!(got.contains(&polyq(&[-25, 7, 23, -3, -4, 1])));
        assert!(got.contains(&polyq(&[-25, -40, -24, -3, -4, 1])));
        assert_eq!(got.len(), 2);
    }

    #[test]
    fn golden_f2_repeated_factors() {
        let f = fi(2, &rat(5), &rat(-1), &rat(0), &rat(1)).unwrap();
        let expected = polyq(&[0, 1])
            .mul(&polyq(&[1, 1]).pow(2))
            .mul(&polyq(&[-3, 1]).pow(2))
            .mul(&polyq(&[-47, -38, -35, -2, -4, 1]));
        assert_eq!(f, expected);
    }

    #[test]
    fn h_product_is_f1() {
        let (s, t) = (rat(-20), rat(-7));
        let (s2, t2, d2) = crate::families::ht_params_from_ab(&rat(5), &rat(2)).unwrap();
        let d = crate::families::ht_params_from_ab(&rat(3), &rat(1)).unwrap().2;
        let h1 = h_c5(1, &s, &t, &d, &s2, &t2, &d2).unwrap();
        let h3 = h_c5(3, &s, &t, &d, &s2, &t2, &d2).unwrap();
        assert_eq!(h1.mul(&h3), f1(&s, &t, &s2, &t2));
        let h2 = h_c5(2, &s, &t, &d, &s2, &t2, &d2).unwrap();
        let h4 = h_c5(4, &s, &t, &d, &s2, &t2, &d2).unwrap();
        assert_eq!(h2.mul(&h4), fi(2, &s, &t, &s2, &t2).unwrap());
        assert!(h_c5(1, &s, &t, &(d + rat(1)), &s2, &t2, &d2).is_err());
    }

    #[test]
    fn reduction_commutes() {
        let p = PrimeField::new(101).unwrap();
        let (s, t, s2, t2) = (rat(4), rat(5), rat(-24), rat(19));
        let q = f1(&s, &t, &s2, &t2);
        let direct = f1_with(
            &p,
            CoefficientTable::standard(),
            &p.elem(4),
            &p.elem(5),
            &p.elem(-24),
            &p.elem(19),
        );
        assert_eq!(crate::exactmath::polyq::reduce_mod_p(&q, p).unwrap(), direct);
        assert_eq!(delta_value(&s, &t), delta_value(&s, &t));
    }

    #[test]
    fn char2_patterns() {
        let k = Gf2m::new(1).unwrap();
        let x = |c: &[u64]| Poly::new(k, c.to_vec());
        assert_eq!(
            f1_char2(&k, &0, &1, &1, &1).unwrap(),
            x(&[1, 0, 0, 1, 0, 1]).mul(&x(&[1, 1, 1, 1, 0, 1]))
        );
        assert_eq!(
            f1_char2(&k, &0, &1, &1, &0).unwrap(),
            x(&[1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 1])
        );
        // agrees with the rational resolvent reduced mod 2 wherever eps is defined
        let two = PrimeField::new(2).unwrap();
        for (a, b) in [(0i64, 1i64), (1, 0), (1, 1)] {
            let q = fi(1, &rat(0), &rat(1), &rat(a), &rat(b)).unwrap();
            let red = crate::exactmath::polyq::reduce_mod_p(&q, two).unwrap();
            let c2 = f1_char2(&k, &0, &1, &(a as u64), &(b as u64)).unwrap();
            assert_eq!(red.coeffs().to_vec(), c2.coeffs().to_vec());
        }
    }

    #[test]
    fn quartic_comparison() {
        let (fp, fm) = thc4_compare_poly(&rat(5), &rat(1), &rat(5), &rat(2)).unwrap();
        assert_eq!(
            fm,
            crate::exactmath::polyq::polyq_from_rationals(vec![ratio(125, 8), rat(0), rat(-25), rat(0), rat(1)])
        );
        assert_eq!(fp.coeff(0), ratio(1125, 8));
        let n = rat(40);
        let want = rat(16) * num_traits::pow(rat(5), 12) * rat(9) * num_traits::pow(rat(-2), 4)
            / num_traits::pow(n.clone(), 3);
        assert_eq!(discriminant(&fp).unwrap(), want);
        assert!(matches!(
            thc4_compare_poly(&rat(5), &rat(1), &rat(5), &rat(1)),
            Err(Error::Indeterminate(_))
        ));
    }
}
