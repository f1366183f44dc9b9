//! Resolvents attached to a pair of parameter points, with their
//! factorization and decomposition types.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::{all_fi_with, f1_with, fi_with, h_with, thc4_compare_poly, CoefficientTable};
use crate::error::{Error, Result};
use crate::exactmath::polyq::to_json_coeffs;
use crate::exactmath::rational::rational_sqrt;
use crate::exactmath::{Field, Poly, PolyQ, PolyQuad, QuadExt, QuadField, QuadNum, Rational, Rationals, TowerNum};
use crate::factor::quadratic::{as_rational, embed};
use crate::factor::{
    decomposition_type, factor_over_quadratic, factor_over_rationals, DecompType, Factorization, FoldPolicy,
};
use crate::families::{
    c4_subfield_data, delta_value, f20_to_d5, ht_params_from_ab, r_from_q, F20Transport, ParamPoint,
};

/// A point moved into Brumer's chart.
#[derive(Clone, Debug, PartialEq)]
pub enum Chart {
    /// Rational `(s, t)`; `d` is present when `delta_{s,t}` is a square.
    Rational {
        s: Rational,
        t: Rational,
        d: Option<Rational>,
    },
    /// `(s, t)` in `Q(sqrt(p^2+4))` for an F20 point.
    Quadratic { field: QuadField, s: QuadNum, t: QuadNum },
}

/// Brumer parameters of a point. For a raw D5 point with square `delta`
/// the positive root is taken as `d`; C5 points take `d` from their chart.
pub fn chart_of(pt: &ParamPoint) -> Result<Chart> {
    match pt {
        ParamPoint::D5 { s, t } => Ok(Chart::Rational {
            d: rational_sqrt(&delta_value(s, t)),
            s: s.clone(),
            t: t.clone(),
        }),
        ParamPoint::C5 { a, b } => {
            let (s, t, d) = ht_params_from_ab(a, b)?;
            Ok(Chart::Rational { s, t, d: Some(d) })
        }
        ParamPoint::F20P { p, q } => chart_of(&ParamPoint::F20R {
            p: p.clone(),
            r: r_from_q(p, q),
        }),
        ParamPoint::F20R { p, r } => Ok(match f20_to_d5(p, r) {
            F20Transport::Rational { s, t } => Chart::Rational {
                d: rational_sqrt(&delta_value(&s, &t)),
                s,
                t,
            },
            F20Transport::Quadratic { field, s, t } => Chart::Quadratic { field, s, t },
        }),
        ParamPoint::C4 { .. } => Err(Error::Unsupported("quartic points have no quintic chart".into())),
    }
}

impl Chart {
    pub fn field(&self) -> Option<&QuadField> {
        match self {
            Chart::Quadratic { field, .. } => Some(field),
            Chart::Rational { .. } => None,
        }
    }

    fn in_field(&self, _k: &QuadField) -> (QuadNum, QuadNum) {
        match self {
            Chart::Rational { s, t, .. } => (QuadNum::rational(s.clone()), QuadNum::rational(t.clone())),
            Chart::Quadratic { s, t, .. } => (s.clone(), t.clone()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ResolventKind {
    F(usize),
    H(usize),
    HFull,
    C4Pm,
}

impl ResolventKind {
    pub fn parse(text: &str) -> Result<Self> {
        let lower = text.trim().to_ascii_lowercase();
        let index = |rest: &str| -> Result<usize> {
            rest.parse::<usize>()
                .ok()
                .filter(|i| (1..=4).contains(i))
                .ok_or_else(|| Error::parse(text, "index must be 1..4"))
        };
        match lower.as_str() {
            "hfull" | "hall" => Ok(ResolventKind::HFull),
            "c4pm" | "c4" => Ok(ResolventKind::C4Pm),
            _ if lower.starts_with('f') => Ok(ResolventKind::F(index(&lower[1..])?)),
            _ if lower.starts_with('h') => Ok(ResolventKind::H(index(&lower[1..])?)),
            _ => Err(Error::parse(text, "unknown resolvent kind")),
        }
    }
}

impl fmt::Display for ResolventKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResolventKind::F(i) => write!(f, "F{i}"),
            ResolventKind::H(i) => write!(f, "H{i}"),
            ResolventKind::HFull => f.write_str("Hfull"),
            ResolventKind::C4Pm => f.write_str("C4pm"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum BundlePoly {
    Rational(PolyQ),
    Quadratic(PolyQuad),
}

impl BundlePoly {
    pub fn degree(&self) -> usize {
        match self {
            BundlePoly::Rational(f) => f.deg(),
            BundlePoly::Quadratic(f) => f.deg(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ResolventBundle {
    pub kind: ResolventKind,
    pub poly: BundlePoly,
    pub left: ParamPoint,
    pub right: ParamPoint,
    pub caveats: Vec<String>,
    /// Rational pieces whose product is `poly`, factored separately.
    parts: Vec<PolyQ>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BundleFactor {
    pub poly: Vec<String>,
    pub text: String,
    pub mult: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct BundleJson {
    pub kind: String,
    pub left: ParamPoint,
    pub right: ParamPoint,
    /// `Q` or `Q(sqrt(D))`.
    pub field: String,
    pub coeffs: Vec<String>,
    pub factorization: Vec<BundleFactor>,
    pub dt_fold: DecompType,
    pub dt_split: DecompType,
    pub caveats: Vec<String>,
}

/// Factorization of either coefficient domain, flattened for reporting.
#[derive(Clone, Debug)]
pub enum AnyFactorization {
    Rational(Factorization<Rationals>),
    Quadratic(Factorization<QuadField>),
}

impl AnyFactorization {
    pub fn decomposition_types(&self, policy: FoldPolicy) -> Vec<DecompType> {
        match self {
            AnyFactorization::Rational(fz) => decomposition_type(fz, policy),
            AnyFactorization::Quadratic(fz) => decomposition_type(fz, policy),
        }
    }

    pub fn has_linear_factor(&self) -> bool {
        match self {
            AnyFactorization::Rational(fz) => fz.has_linear_factor(),
            AnyFactorization::Quadratic(fz) => fz.has_linear_factor(),
        }
    }

    pub fn has_repeated_factor(&self) -> bool {
        match self {
            AnyFactorization::Rational(fz) => fz.has_repeated_factor(),
            AnyFactorization::Quadratic(fz) => fz.has_repeated_factor(),
        }
    }

    /// Linear factors as root strings.
    pub fn roots(&self) -> Vec<String> {
        match self {
            AnyFactorization::Rational(fz) => fz
                .rational_roots()
                .iter()
                .map(crate::exactmath::rational::display_rational)
                .collect(),
            AnyFactorization::Quadratic(fz) => {
                let k = fz.factors.first().map(|(f, _)| f.field().clone());
                fz.linear_factors()
                    .map(|f| {
                        let k = k.clone().expect("nonempty");
                        k.neg(&f.coeff(0)).to_string()
                    })
                    .collect()
            }
        }
    }
}

/// Merges equal factors of separately factored pieces.
pub(crate) fn merge(mut acc: Factorization<Rationals>, other: Factorization<Rationals>) -> Factorization<Rationals> {
    acc.unit *= other.unit;
    for (g, e) in other.factors {
        match acc.factors.iter_mut().find(|(h, _)| *h == g) {
            Some(slot) => slot.1 += e,
            None => acc.factors.push((g, e)),
        }
    }
    acc.canonical_sort();
    acc
}

fn quad_text(k: &QuadField, f: &PolyQuad) -> String {
    let mut terms = Vec::new();
    for (i, c) in f.coeffs().iter().enumerate().rev() {
        if k.is_zero(c) {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        let coef = c.to_string();
        terms.push(match (i, coef.as_str()) {
            (0, _) => coef,
            (_, "1") => mono,
            (_, "-1") => format!("-{mono}"),
            _ => format!("{coef}*{mono}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

impl ResolventBundle {
    pub fn build(kind: ResolventKind, left: &ParamPoint, right: &ParamPoint) -> Result<Self> {
        let table = CoefficientTable::standard();
        let mut caveats = Vec::new();
        let (poly, parts) = match kind {
            ResolventKind::C4Pm => {
                let (a, c) = quartic_params(left)?;
                let (a2, c2) = quartic_params(right)?;
                let (fp, fm) = thc4_compare_poly(&a, &c, &a2, &c2)?;
                (BundlePoly::Rational(fp.mul(&fm)), vec![fp, fm])
            }
            ResolventKind::H(i) => {
                let (l, r) = (chart_of(left)?, chart_of(right)?);
                match (l, r) {
                    (
                        Chart::Rational { s, t, d: Some(d) },
                        Chart::Rational {
                            s: s2,
                            t: t2,
                            d: Some(d2),
                        },
                    ) => {
                        if matches!(left, ParamPoint::D5 { .. }) || matches!(right, ParamPoint::D5 { .. }) {
                            caveats.push("d taken as the positive square root of delta".into());
                        }
                        let h = h_with(i, &Rationals, table, &s, &t, &d, &s2, &t2, &d2)?;
                        (BundlePoly::Rational(h.clone()), vec![h])
                    }
                    _ => {
                        return Err(Error::Unsupported(
                            "H resolvents need two points with rational d (cyclic quintics)".into(),
                        ))
                    }
                }
            }
            ResolventKind::F(i) => {
                let (l, r) = (chart_of(left)?, chart_of(right)?);
                match common_field(&l, &r)? {
                    None => {
                        let (s, t) = rational_st(&l);
                        let (s2, t2) = rational_st(&r);
                        let f = fi_with(i, &Rationals, table, s, t, s2, t2)?;
                        (BundlePoly::Rational(f.clone()), vec![f])
                    }
                    Some(k) => {
                        let (s, t) = l.in_field(&k);
                        let (s2, t2) = r.in_field(&k);
                        let f = fi_with(i, &k, table, &s, &t, &s2, &t2)?;
                        match as_rational(&f) {
                            Some(q) => (BundlePoly::Rational(q.clone()), vec![q]),
                            None => (BundlePoly::Quadratic(f), Vec::new()),
                        }
                    }
                }
            }
            ResolventKind::HFull => {
                let parts = h_full_parts(&chart_of(left)?, &chart_of(right)?)?;
                let prod = parts.iter().fold(Poly::one(Rationals), |acc, p| acc.mul(p));
                (BundlePoly::Rational(prod), parts)
            }
        };
        Ok(ResolventBundle {
            kind,
            poly,
            left: left.clone(),
            right: right.clone(),
            caveats,
            parts,
        })
    }

    pub fn factorization(&self) -> Result<AnyFactorization> {
        match &self.poly {
            BundlePoly::Rational(_) => {
                let mut it = self.parts.iter();
                let first = factor_over_rationals(it.next().expect("at least one part"))?;
                let mut acc = first;
                for p in it {
                    acc = merge(acc, factor_over_rationals(p)?);
                }
                Ok(AnyFactorization::Rational(acc))
            }
            BundlePoly::Quadratic(f) => Ok(AnyFactorization::Quadratic(factor_over_quadratic(f)?)),
        }
    }

    pub fn to_json(&self) -> Result<BundleJson> {
        let fz = self.factorization()?;
        let mut caveats = self.caveats.clone();
        if fz.has_repeated_factor() {
            caveats.push("repeated factors: decomposition type depends on fold policy".into());
        }
        let (field, coeffs, factorization) = match (&self.poly, &fz) {
            (BundlePoly::Rational(f), AnyFactorization::Rational(fz)) => (
                "Q".to_string(),
                to_json_coeffs(f),
                fz.factors
                    .iter()
                    .map(|(g, e)| BundleFactor {
                        poly: to_json_coeffs(g),
                        text: g.to_string(),
                        mult: *e,
                    })
                    .collect(),
            ),
            (BundlePoly::Quadratic(f), AnyFactorization::Quadratic(fz)) => {
                let k = f.field();
                (
                    format!("Q(sqrt({}))", k.radicand()),
                    f.coeffs().iter().map(|c| c.to_string()).collect(),
                    fz.factors
                        .iter()
                        .map(|(g, e)| BundleFactor {
                            poly: g.coeffs().iter().map(|c| c.to_string()).collect(),
                            text: quad_text(k, g),
                            mult: *e,
                        })
                        .collect(),
                )
            }
            _ => unreachable!("factorization domain follows the polynomial"),
        };
        Ok(BundleJson {
            kind: self.kind.to_string(),
            left: self.left.clone(),
            right: self.right.clone(),
            field,
            coeffs,
            factorization,
            dt_fold: fz.decomposition_types(FoldPolicy::Fold).remove(0),
            dt_split: fz.decomposition_types(FoldPolicy::Split).remove(0),
            caveats,
        })
    }
}

fn rational_st(c: &Chart) -> (&Rational, &Rational) {
    match c {
        Chart::Rational { s, t, .. } => (s, t),
        Chart::Quadratic { .. } => unreachable!("checked by common_field"),
    }
}

/// The quadratic field both charts live in, `None` when both are rational.
fn common_field(l: &Chart, r: &Chart) -> Result<Option<QuadField>> {
    match (l.field(), r.field()) {
        (None, None) => Ok(None),
        (Some(k), None) | (None, Some(k)) => Ok(Some(k.clone())),
        (Some(k), Some(k2)) if k == k2 => Ok(Some(k.clone())),
        _ => Err(Error::Unsupported(
            "points have different quadratic fields; only Hfull is defined over Q".into(),
        )),
    }
}

/// `(a, c)` of the cyclic quartic comparison for an F20 or quartic point.
pub fn quartic_params(pt: &ParamPoint) -> Result<(Rational, Rational)> {
    match pt {
        ParamPoint::C4 { s, u } => Ok((s.clone(), u.clone())),
        ParamPoint::F20R { p, r } => {
            let data = c4_subfield_data(p, r);
            Ok((data.a, data.c))
        }
        ParamPoint::F20P { p, q } => quartic_params(&ParamPoint::F20R {
            p: p.clone(),
            r: r_from_q(p, q),
        }),
        _ => Err(Error::Unsupported(
            "quartic comparison needs F20 or quartic points".into(),
        )),
    }
}

/// Rational pieces of `F^1 F^2 F^3 F^4`. Pairs of conjugate resolvents are
/// multiplied first so that each piece is rational and factoring stays at
/// degree 20 where possible.
pub fn h_full_parts(l: &Chart, r: &Chart) -> Result<Vec<PolyQ>> {
    match (l, r) {
        (Chart::Rational { s, t, .. }, Chart::Rational { s: s2, t: t2, .. }) => {
            Ok(all_fi_with(&Rationals, s, t, s2, t2)?.to_vec())
        }
        _ => match common_field(l, r) {
            Ok(Some(k)) => {
                let (s, t) = l.in_field(&k);
                let (s2, t2) = r.in_field(&k);
                let fs = all_fi_with(&k, &s, &t, &s2, &t2)?;
                Ok(pair_rational(&fs, as_rational).unwrap_or_else(|| vec![rationalize_product(&fs, as_rational)]))
            }
            _ => {
                // different quadratic fields: work in the biquadratic field
                let (k1, k2) = (l.field().expect("quadratic"), r.field().expect("quadratic"));
                let l1 = QuadExt::new(Rationals, Rational::from_integer(k1.radicand().clone()));
                let big = QuadExt::new(l1.clone(), l1.embed(Rational::from_integer(k2.radicand().clone())));
                let lift_left = |x: &QuadNum| big.embed(l1.elem(x.a.clone(), x.b.clone()));
                let lift_right = |x: &QuadNum| big.elem(l1.embed(x.a.clone()), l1.embed(x.b.clone()));
                let (Chart::Quadratic { s, t, .. }, Chart::Quadratic { s: s2, t: t2, .. }) = (l, r) else {
                    unreachable!("both quadratic")
                };
                let fs = all_fi_with(&big, &lift_left(s), &lift_left(t), &lift_right(s2), &lift_right(t2))?;
                let down = |f: &Poly<QuadExt<QuadExt<Rationals>>>| {
                    f.try_map(Rationals, |c: &TowerNum<TowerNum<Rational>>| {
                        (c.b.a.is_zero() && c.b.b.is_zero() && c.a.b.is_zero()).then(|| c.a.a.clone())
                    })
                };
                Ok(pair_rational(&fs, down).unwrap_or_else(|| vec![rationalize_product(&fs, down)]))
            }
        },
    }
}

fn pair_rational<F: Field>(fs: &[Poly<F>; 4], down: impl Fn(&Poly<F>) -> Option<PolyQ>) -> Option<Vec<PolyQ>> {
    for (a, b, c, d) in [(0, 3, 1, 2), (0, 2, 1, 3), (0, 1, 2, 3)] {
        if let (Some(x), Some(y)) = (down(&fs[a].mul(&fs[b])), down(&fs[c].mul(&fs[d]))) {
            return Some(vec![x, y]);
        }
    }
    None
}

fn rationalize_product<F: Field>(fs: &[Poly<F>; 4], down: impl Fn(&Poly<F>) -> Option<PolyQ>) -> PolyQ {
    let prod = fs[0].mul(&fs[1]).mul(&fs[2]).mul(&fs[3]);
    down(&prod).expect("the full product has rational coefficients")
}

/// `F^1` with both points embedded into a common quadratic field.
pub fn f1_over(k: &QuadField, l: &Chart, r: &Chart) -> PolyQuad {
    let (s, t) = l.in_field(k);
    let (s2, t2) = r.in_field(k);
    f1_with(k, CoefficientTable::standard(), &s, &t, &s2, &t2)
}

/// Embeds a rational polynomial for mixed comparisons.
pub fn embed_q(f: &PolyQ, k: &QuadField) -> PolyQuad {
    embed(f, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::rat;

    #[test]
    fn kind_parsing() {
        assert_eq!(ResolventKind::parse("F2").unwrap(), ResolventKind::F(2));
        assert_eq!(ResolventKind::parse("h4").unwrap(), ResolventKind::H(4));
        assert_eq!(ResolventKind::parse("hfull").unwrap(), ResolventKind::HFull);
        assert!(ResolventKind::parse("f5").is_err());
        assert!(ResolventKind::parse("zz").is_err());
    }

    #[test]
    fn f2_bundle_json() {
        let b = ResolventBundle::build(ResolventKind::F(2), &ParamPoint::d5(5, -1), &ParamPoint::d5(0, 1)).unwrap();
        let j = b.to_json().unwrap();
        assert_eq!(j.dt_fold.to_string(), "5,2^2,1");
        assert_eq!(j.dt_split.to_string(), "5,1^5");
        assert!(j.caveats.iter().any(|c| c.contains("repeated")));
        let back = crate::exactmath::polyq::from_json_coeffs(&j.coeffs).unwrap();
        assert_eq!(BundlePoly::Rational(back), b.poly);
    }

    #[test]
    fn f20_charts() {
        let c = chart_of(&ParamPoint::f20r(0, 3)).unwrap();
        assert!(matches!(c, Chart::Rational { ref t, .. } if *t == rat(1)));
        let c = chart_of(&ParamPoint::f20r(3, 0)).unwrap();
        assert!(c.field().is_some());
    }
}
