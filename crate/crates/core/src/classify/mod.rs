//! Galois group identification, subfield tests, the pairwise verdict engine
//! and grid search.

mod search;
mod verdict;

pub use search::{search, search_pairs, Grid, SearchConfig, SearchMatch, DEFAULT_SCREEN_PRIMES};
pub use verdict::{compare, Relation, ResolventDt, Verdict, VerdictJson, Witness};

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactmath::polyq::discriminant;
use crate::exactmath::rational::{is_rational_square, rat};
use crate::exactmath::Rational;
use crate::factor::{decomposition_type, factor_over_rationals, DecompType, FoldPolicy};
use crate::families::{
    c4_subfield_data, delta_value, f20_to_d5, ht_params_from_ab, r_from_q, F20Transport, ParamPoint,
};
use crate::resolvents::thc4_compare_poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupName {
    /// The polynomial splits completely.
    Trivial,
    C2,
    C4,
    C5,
    D5,
    F20,
    /// A reducible point of the Frobenius family with this decomposition type.
    SubC4(DecompType),
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Trivial => f.write_str("C1"),
            GroupName::C2 => f.write_str("C2"),
            GroupName::C4 => f.write_str("C4"),
            GroupName::C5 => f.write_str("C5"),
            GroupName::D5 => f.write_str("D5"),
            GroupName::F20 => f.write_str("F20"),
            GroupName::SubC4(dt) => write!(f, "SUB_C4({dt})"),
        }
    }
}

impl Serialize for GroupName {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Evidence {
    pub test: String,
    pub outcome: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupLabel {
    pub point: ParamPoint,
    pub name: GroupName,
    pub evidence: Vec<Evidence>,
    /// Radicand of the quadratic subfield of the splitting field, if any.
    #[serde(serialize_with = "ser_opt_rational")]
    pub quadratic: Option<Rational>,
}

fn ser_opt_rational<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

impl GroupLabel {
    fn new(point: &ParamPoint, name: GroupName, quadratic: Option<Rational>) -> Self {
        GroupLabel {
            point: point.clone(),
            name,
            evidence: Vec::new(),
            quadratic,
        }
    }

    fn note(mut self, test: &str, outcome: impl fmt::Display) -> Self {
        self.evidence.push(Evidence {
            test: test.into(),
            outcome: outcome.to_string(),
        });
        self
    }

    /// The splitting field has degree at most 2.
    pub fn is_small(&self) -> bool {
        matches!(self.name, GroupName::Trivial | GroupName::C2 | GroupName::SubC4(_))
    }
}

fn square_note(r: &Rational) -> String {
    format!("{} ({r})", if is_rational_square(r) { "square" } else { "non-square" })
}

/// Label for a reducible quintic: trivial or `C2`, with the quadratic field
/// read off a quadratic factor.
fn reducible_label(point: &ParamPoint, f: &crate::exactmath::PolyQ, sub_c4: bool) -> Result<GroupLabel> {
    let fz = factor_over_rationals(f)?;
    let dt = decomposition_type(&fz, FoldPolicy::Fold).remove(0);
    let quad = fz.factors.iter().find(|(g, _)| g.deg() == 2).map(|(g, _)| {
        let (a, b, c) = (g.coeff(2), g.coeff(1), g.coeff(0));
        &b * &b - rat(4) * a * c
    });
    let name = match (&quad, sub_c4) {
        (_, true) if dt.parts.contains(&4) => GroupName::C4,
        (_, true) => GroupName::SubC4(dt.clone()),
        (None, false) => GroupName::Trivial,
        (Some(_), false) => GroupName::C2,
    };
    let mut label = GroupLabel::new(point, name, quad.clone()).note("irreducible", format!("no ({dt})"));
    if let Some(m) = quad {
        label = label.note("quadratic factor discriminant", m);
    }
    Ok(label)
}

fn irreducible(f: &crate::exactmath::PolyQ) -> Result<bool> {
    Ok(factor_over_rationals(f)?.is_irreducible())
}

fn separable(point: &ParamPoint, f: &crate::exactmath::PolyQ) -> Result<()> {
    if discriminant(f)? == rat(0) {
        return Err(Error::Inseparable(point.to_string()));
    }
    Ok(())
}

/// Galois group of the defining polynomial of a point, with the tests used.
pub fn identify_group(point: &ParamPoint) -> Result<GroupLabel> {
    let f = point.polynomial()?;
    separable(point, &f)?;
    match point {
        ParamPoint::D5 { s, t } => d5_label(point, &f, s, t),
        ParamPoint::C5 { a, b } => {
            let (s, t, _) = ht_params_from_ab(a, b)?;
            let label = d5_label(point, &f, &s, &t)?;
            Ok(label.note("cyclic chart", format!("(s, t) = ({s}, {t})")))
        }
        ParamPoint::F20P { p, q } => {
            let r = r_from_q(p, q);
            identify_group(&ParamPoint::F20R { p: p.clone(), r }).map(|l| GroupLabel {
                point: point.clone(),
                ..l
            })
        }
        ParamPoint::F20R { p, r } => {
            let n = p * p + rat(4);
            if !irreducible(&f)? {
                let label = reducible_label(point, &f, true)?;
                let quad = if label.name == GroupName::C4 {
                    Some(n)
                } else {
                    label.quadratic.clone()
                };
                return Ok(GroupLabel {
                    quadratic: quad,
                    ..label
                });
            }
            match f20_to_d5(p, r) {
                F20Transport::Quadratic { .. } => Ok(GroupLabel::new(point, GroupName::F20, Some(n.clone()))
                    .note("irreducible", "yes")
                    .note("p^2+4 square", square_note(&n))),
                F20Transport::Rational { s, t } => {
                    let b = crate::exactmath::rational::rational_sqrt(&n).expect("square");
                    let w = crate::families::w_value(p, r);
                    let p2 = p * p;
                    let dp = &w * (&p2 * &p2 + rat(5) * &p2 + rat(4) + p * (&p2 + rat(3)) * &b) / rat(8);
                    let cyclic = is_rational_square(&dp);
                    let delta = delta_value(&s, &t);
                    let (name, quad) = if cyclic {
                        (GroupName::C5, None)
                    } else {
                        (GroupName::D5, Some(delta))
                    };
                    Ok(GroupLabel::new(point, name, quad)
                        .note("irreducible", "yes")
                        .note("p^2+4 square", square_note(&n))
                        .note("delta' square", square_note(&dp))
                        .note("dihedral chart", format!("(s, t) = ({s}, {t})")))
                }
            }
        }
        ParamPoint::C4 { s: _, u } => {
            let n = u * u + rat(4);
            if irreducible(&f)? {
                Ok(GroupLabel::new(point, GroupName::C4, Some(n)).note("irreducible", "yes"))
            } else {
                let fz = factor_over_rationals(&f)?;
                let dt = decomposition_type(&fz, FoldPolicy::Fold).remove(0);
                let quad = (!is_rational_square(&n)).then_some(n);
                let name = if quad.is_some() {
                    GroupName::C2
                } else {
                    GroupName::Trivial
                };
                Ok(GroupLabel::new(point, name, quad).note("irreducible", format!("no ({dt})")))
            }
        }
    }
}

fn d5_label(point: &ParamPoint, f: &crate::exactmath::PolyQ, s: &Rational, t: &Rational) -> Result<GroupLabel> {
    if !irreducible(f)? {
        return reducible_label(point, f, false);
    }
    let delta = delta_value(s, t);
    let cyclic = is_rational_square(&delta);
    let name = if cyclic { GroupName::C5 } else { GroupName::D5 };
    Ok(GroupLabel::new(point, name, (!cyclic).then(|| delta.clone()))
        .note("irreducible", "yes")
        .note("delta square", square_note(&delta)))
}

/// `Q(sqrt m1) = Q(sqrt m2)` for non-square `m1, m2`.
pub fn quadratic_subfields_equal(m1: &Rational, m2: &Rational) -> Result<bool> {
    for m in [m1, m2] {
        if *m == rat(0) || is_rational_square(m) {
            return Err(Error::SquareRadicand(m.to_string()));
        }
    }
    Ok(is_rational_square(&(m1 * m2)))
}

/// Whether the cyclic quartic subfields of two Frobenius points agree;
/// `None` when the quartic comparison hypotheses fail.
pub fn quartic_subfields_equal(p: &Rational, r: &Rational, p2: &Rational, r2: &Rational) -> Result<Option<bool>> {
    let (a, b) = (c4_subfield_data(p, r), c4_subfield_data(p2, r2));
    if a.w == rat(0) || b.w == rat(0) {
        return Err(Error::DegenerateParameter("W vanishes".into()));
    }
    quartic_root_test(&a.a, &a.c, &b.a, &b.c)
}

/// Root test of `F^+ F^-`; `None` when the hypotheses fail.
pub(crate) fn quartic_root_test(a: &Rational, c: &Rational, a2: &Rational, c2: &Rational) -> Result<Option<bool>> {
    match thc4_compare_poly(a, c, a2, c2) {
        Ok((fp, fm)) => Ok(Some(
            !crate::factor::rational_roots(&fp).is_empty() || !crate::factor::rational_roots(&fm).is_empty(),
        )),
        Err(Error::Indeterminate(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::ratio;

    #[test]
    fn groups_of_examples() {
        assert_eq!(identify_group(&ParamPoint::d5(0, 1)).unwrap().name, GroupName::D5);
        assert_eq!(identify_group(&ParamPoint::d5(-18, 1)).unwrap().name, GroupName::C5);
        assert_eq!(identify_group(&ParamPoint::d5(-7, 1)).unwrap().name, GroupName::C5);
        assert_eq!(identify_group(&ParamPoint::c5(3, 3)).unwrap().name, GroupName::C5);
        let g = identify_group(&ParamPoint::f20r(5, 2)).unwrap();
        assert_eq!(g.name, GroupName::C4);
        assert_eq!(identify_group(&ParamPoint::f20r(-3, -3)).unwrap().name, GroupName::F20);
    }

    #[test]
    fn inseparable_rejected() {
        assert!(matches!(
            identify_group(&ParamPoint::d5(3, 0)),
            Err(Error::Inseparable(_))
        ));
    }

    #[test]
    fn quadratic_tests() {
        assert!(quadratic_subfields_equal(&rat(-47), &rat(-188)).unwrap());
        assert!(!quadratic_subfields_equal(&rat(-47), &rat(-239)).unwrap());
        assert!(quadratic_subfields_equal(&rat(-47), &rat(-47)).unwrap());
        assert!(quadratic_subfields_equal(&rat(4), &rat(-47)).is_err());
        assert!(quadratic_subfields_equal(&ratio(-47, 9), &rat(-47)).unwrap());
    }

    #[test]
    fn quartic_tests() {
        assert_eq!(
            quartic_subfields_equal(&rat(3), &rat(1), &rat(3), &rat(5)).unwrap(),
            None
        );
        // p' = -p forces c' = -c, outside the comparison hypotheses
        assert_eq!(
            quartic_subfields_equal(&rat(-3), &rat(-3), &rat(3), &rat(0)).unwrap(),
            None
        );
        assert_eq!(
            quartic_subfields_equal(&rat(-1), &rat(10), &rat(11), &rat(22)).unwrap(),
            Some(true)
        );
    }
}
