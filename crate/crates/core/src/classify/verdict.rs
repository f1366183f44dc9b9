//! The pairwise verdict: how two splitting fields sit relative to each other.

use serde::Serialize;

use super::{identify_group, quadratic_subfields_equal, quartic_root_test, GroupLabel, GroupName};
use crate::error::{Error, Result};
use crate::exactmath::rational::is_rational_square;
use crate::exactmath::{Rational, Rationals};
use crate::factor::{factor_over_quadratic, factor_over_rationals, DecompType, Factorization, FoldPolicy};
use crate::families::{r_from_q, ParamPoint};
use crate::resolvents::bundle::{h_full_parts, merge, quartic_params, AnyFactorization};
use crate::resolvents::{chart_of, fi, fi_with, h_c5, Chart, CoefficientTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Relation {
    Equal,
    #[serde(rename = "INTERSECT_DEG_4")]
    IntersectDeg4,
    #[serde(rename = "INTERSECT_DEG_2")]
    IntersectDeg2,
    TrivialIntersection,
    /// One splitting field contains the other.
    Subfield,
    Ambiguous,
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = serde_json::to_value(self).expect("plain enum");
        f.write_str(s.as_str().expect("string"))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolventDt {
    pub kind: String,
    /// Base field of the factorization.
    pub field: String,
    pub fold: DecompType,
    pub split: DecompType,
    /// Every grouping of repeated factors; a single entry when squarefree.
    pub both: Vec<DecompType>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub resolvent: String,
    pub root: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub left: GroupLabel,
    pub right: GroupLabel,
    pub relation: Relation,
    pub table_row: Option<String>,
    pub resolvent_dts: Vec<ResolventDt>,
    pub witnesses: Vec<Witness>,
    pub caveats: Vec<String>,
}

/// The external JSON shape.
#[derive(Clone, Debug, Serialize)]
pub struct VerdictJson<'a> {
    pub verdict: Relation,
    pub table_row: &'a Option<String>,
    pub groups: [&'a GroupLabel; 2],
    pub dts: &'a [ResolventDt],
    pub witnesses: &'a [Witness],
    pub caveats: &'a [String],
}

impl Verdict {
    fn new(left: GroupLabel, right: GroupLabel) -> Self {
        Verdict {
            left,
            right,
            relation: Relation::Ambiguous,
            table_row: None,
            resolvent_dts: Vec::new(),
            witnesses: Vec::new(),
            caveats: Vec::new(),
        }
    }

    fn set(&mut self, relation: Relation, row: Option<&str>) {
        self.relation = relation;
        self.table_row = row.map(str::to_string);
    }

    fn ambiguous(&mut self, why: impl Into<String>) {
        self.relation = Relation::Ambiguous;
        self.caveats.push(why.into());
    }

    pub fn to_json(&self) -> VerdictJson<'_> {
        VerdictJson {
            verdict: self.relation,
            table_row: &self.table_row,
            groups: [&self.left, &self.right],
            dts: &self.resolvent_dts,
            witnesses: &self.witnesses,
            caveats: &self.caveats,
        }
    }

    /// Records the decomposition types and rational/quadratic roots of a
    /// factored resolvent; returns whether it has a root.
    fn record(&mut self, kind: &str, field: &str, fz: &AnyFactorization) -> bool {
        let both = fz.decomposition_types(FoldPolicy::Both);
        self.resolvent_dts.push(ResolventDt {
            kind: kind.into(),
            field: field.into(),
            fold: fz.decomposition_types(FoldPolicy::Fold).remove(0),
            split: fz.decomposition_types(FoldPolicy::Split).remove(0),
            both,
        });
        if fz.has_repeated_factor() {
            let note = format!("{kind} has repeated factors; its decomposition type depends on the fold policy");
            if !self.caveats.contains(&note) {
                self.caveats.push(note);
            }
        }
        let roots = fz.roots();
        for root in &roots {
            self.witnesses.push(Witness {
                resolvent: kind.into(),
                root: root.clone(),
            });
        }
        !roots.is_empty()
    }

    fn dt_matches(&self, kind: &str, parts: &[usize]) -> bool {
        self.resolvent_dts
            .iter()
            .filter(|d| d.kind == kind)
            .any(|d| d.both.iter().any(|dt| dt.has_same_parts(parts)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Class {
    /// `D5` or `C5`: a rational dihedral chart exists.
    Quintic,
    Frobenius,
    Quartic,
    /// Splitting field of degree at most 2.
    Small,
}

fn class_of(label: &GroupLabel) -> Class {
    match label.name {
        GroupName::D5 | GroupName::C5 => Class::Quintic,
        GroupName::F20 => Class::Frobenius,
        GroupName::C4 => Class::Quartic,
        GroupName::Trivial | GroupName::C2 | GroupName::SubC4(_) => Class::Small,
    }
}

fn pr_of(pt: &ParamPoint) -> Option<(Rational, Rational)> {
    match pt {
        ParamPoint::F20R { p, r } => Some((p.clone(), r.clone())),
        ParamPoint::F20P { p, q } => Some((p.clone(), r_from_q(p, q))),
        _ => None,
    }
}

fn rational_chart(pt: &ParamPoint) -> Result<(Rational, Rational, Option<Rational>)> {
    match chart_of(pt)? {
        Chart::Rational { s, t, d } => Ok((s, t, d)),
        Chart::Quadratic { .. } => Err(Error::Unsupported(format!("{pt} has no rational chart"))),
    }
}

fn q_fz(fz: Factorization<Rationals>) -> AnyFactorization {
    AnyFactorization::Rational(fz)
}

/// Compares the splitting fields of two points.
pub fn compare(left: &ParamPoint, right: &ParamPoint) -> Result<Verdict> {
    let gl = identify_group(left)?;
    let gr = identify_group(right)?;
    let (cl, cr) = (class_of(&gl), class_of(&gr));
    let mut v = Verdict::new(gl, gr);
    match (cl, cr) {
        (Class::Quintic, Class::Quintic) => quintic_pair(&mut v)?,
        (Class::Quintic, Class::Small) => quintic_small(&mut v, false)?,
        (Class::Small, Class::Quintic) => quintic_small(&mut v, true)?,
        (Class::Small, Class::Small) => small_pair(&mut v),
        (Class::Frobenius, Class::Frobenius) => frobenius_pair(&mut v)?,
        (Class::Quartic, Class::Quartic) => quartic_pair(&mut v)?,
        (Class::Frobenius, Class::Quartic) | (Class::Quartic, Class::Frobenius) => frobenius_quartic(&mut v)?,
        (Class::Frobenius | Class::Quartic, Class::Quintic) | (Class::Quintic, Class::Frobenius | Class::Quartic) => {
            mixed_quintic(&mut v)
        }
        (Class::Frobenius | Class::Quartic, Class::Small) => contains_small(&mut v, false),
        (Class::Small, Class::Frobenius | Class::Quartic) => contains_small(&mut v, true),
    }
    Ok(v)
}

/// Factored `F^1`, `F^2` for two rational charts; returns which have roots.
fn f1_f2_rational(v: &mut Verdict) -> Result<[bool; 2]> {
    let (s, t, _) = rational_chart(&v.left.point)?;
    let (s2, t2, _) = rational_chart(&v.right.point)?;
    let mut out = [false; 2];
    for (i, slot) in out.iter_mut().enumerate() {
        let f = fi(i + 1, &s, &t, &s2, &t2)?;
        *slot = v.record(&format!("F{}", i + 1), "Q", &q_fz(factor_over_rationals(&f)?));
    }
    Ok(out)
}

fn quintic_pair(v: &mut Verdict) -> Result<()> {
    let roots = f1_f2_rational(v)?;
    let equal = roots.iter().any(|&r| r);
    match (&v.left.name, &v.right.name) {
        (GroupName::D5, GroupName::D5) => {
            if equal {
                v.set(Relation::Equal, Some("II-3"));
            } else {
                let (m, m2) = (v.left.quadratic.clone(), v.right.quadratic.clone());
                let same = quadratic_subfields_equal(&m.expect("D5"), &m2.expect("D5"))?;
                if same {
                    v.set(Relation::IntersectDeg2, Some("II-2"));
                } else {
                    v.set(Relation::TrivialIntersection, Some("II-1"));
                }
            }
        }
        (GroupName::C5, GroupName::C5) => {
            let (s, t, d) = rational_chart(&v.left.point)?;
            let (s2, t2, d2) = rational_chart(&v.right.point)?;
            let (d, d2) = (d.expect("cyclic"), d2.expect("cyclic"));
            for pt in [&v.left.point, &v.right.point] {
                if !matches!(pt, ParamPoint::C5 { .. }) {
                    v.caveats.push(format!(
                        "{pt}: d taken as the positive square root of delta; H index labels depend on this sign"
                    ));
                }
            }
            let mut h_root = false;
            for i in 1..=4 {
                let h = h_c5(i, &s, &t, &d, &s2, &t2, &d2)?;
                h_root |= v.record(&format!("H{i}"), "Q", &q_fz(factor_over_rationals(&h)?));
            }
            if equal != h_root {
                v.ambiguous("F and H resolvents disagree on the existence of a rational root");
            } else if equal {
                v.set(Relation::Equal, Some("III-2"));
            } else {
                v.set(Relation::TrivialIntersection, Some("III-1"));
            }
        }
        _ => {
            if equal {
                v.ambiguous("a rational root was found although the groups differ");
            } else {
                v.set(Relation::TrivialIntersection, Some("II-4"));
            }
        }
    }
    Ok(())
}

fn small_radicand(label: &GroupLabel) -> Option<Rational> {
    label.quadratic.clone()
}

fn note_containment(v: &mut Verdict, small_on_left: bool) {
    let (big, small) = if small_on_left {
        (&v.right, &v.left)
    } else {
        (&v.left, &v.right)
    };
    let note = format!("the splitting field of {} contains that of {}", big.point, small.point);
    v.witnesses.push(Witness {
        resolvent: "subfield".into(),
        root: note,
    });
}

fn quintic_small(v: &mut Verdict, small_on_left: bool) -> Result<()> {
    let (q, sm) = if small_on_left {
        (&v.right, &v.left)
    } else {
        (&v.left, &v.right)
    };
    let (qname, delta, m) = (q.name.clone(), q.quadratic.clone(), small_radicand(sm));
    // reference decomposition types where both charts are rational
    if rational_chart(&v.left.point).is_ok() && rational_chart(&v.right.point).is_ok() {
        f1_f2_rational(v)?;
        v.witnesses.clear();
    }
    let Some(m) = m else {
        v.set(Relation::Subfield, None);
        note_containment(v, small_on_left);
        return Ok(());
    };
    match qname {
        GroupName::D5 => {
            if quadratic_subfields_equal(&delta.expect("D5"), &m)? {
                v.set(Relation::Subfield, Some("[10,1]"));
                note_containment(v, small_on_left);
            } else {
                v.set(Relation::TrivialIntersection, Some("[20,4]"));
            }
        }
        _ => v.set(Relation::TrivialIntersection, Some("[10,2]")),
    }
    Ok(())
}

fn small_pair(v: &mut Verdict) {
    match (small_radicand(&v.left), small_radicand(&v.right)) {
        (None, None) => v.set(Relation::Equal, None),
        (None, Some(_)) => {
            v.set(Relation::Subfield, None);
            note_containment(v, true);
        }
        (Some(_), None) => {
            v.set(Relation::Subfield, None);
            note_containment(v, false);
        }
        (Some(m), Some(m2)) => {
            if is_rational_square(&(&m * &m2)) {
                v.set(Relation::Equal, Some("[2,1]"));
            } else {
                v.set(Relation::TrivialIntersection, Some("[4,2]"));
            }
        }
    }
}

fn contains_small(v: &mut Verdict, small_on_left: bool) {
    let (big, sm) = if small_on_left {
        (&v.right, &v.left)
    } else {
        (&v.left, &v.right)
    };
    let n = big
        .quadratic
        .clone()
        .expect("Frobenius and quartic points carry a quadratic field");
    match small_radicand(sm) {
        Some(m) if !is_rational_square(&(&m * &n)) => v.set(Relation::TrivialIntersection, None),
        _ => {
            v.set(Relation::Subfield, None);
            note_containment(v, small_on_left);
        }
    }
}

fn mixed_quintic(v: &mut Verdict) {
    let (q, other) = if class_of(&v.left) == Class::Quintic {
        (&v.left, &v.right)
    } else {
        (&v.right, &v.left)
    };
    match (&q.quadratic, &other.quadratic) {
        (Some(m), Some(n)) if is_rational_square(&(m * n)) => v.set(Relation::IntersectDeg2, None),
        _ => v.set(Relation::TrivialIntersection, None),
    }
}

fn same_quadratic(v: &Verdict) -> bool {
    match (&v.left.quadratic, &v.right.quadratic) {
        (Some(m), Some(n)) => is_rational_square(&(m * n)),
        _ => false,
    }
}

fn quartic_pair(v: &mut Verdict) -> Result<()> {
    if !same_quadratic(v) {
        v.set(Relation::TrivialIntersection, None);
        return Ok(());
    }
    let (a, c) = quartic_params(&v.left.point)?;
    let (a2, c2) = quartic_params(&v.right.point)?;
    match quartic_root_test(&a, &c, &a2, &c2)? {
        Some(true) => v.set(Relation::Equal, None),
        Some(false) => v.set(Relation::IntersectDeg2, None),
        None => v.ambiguous("quartic comparison hypotheses fail (c = +-c' or cc' = +-4)"),
    }
    Ok(())
}

fn frobenius_quartic(v: &mut Verdict) -> Result<()> {
    if !same_quadratic(v) {
        v.set(Relation::TrivialIntersection, None);
        return Ok(());
    }
    let (a, c) = quartic_params(&v.left.point)?;
    let (a2, c2) = quartic_params(&v.right.point)?;
    match quartic_root_test(&a, &c, &a2, &c2)? {
        Some(true) => {
            v.set(Relation::Subfield, None);
            let small_on_left = v.left.name == GroupName::C4;
            note_containment(v, small_on_left);
        }
        Some(false) => v.set(Relation::IntersectDeg2, None),
        None => v.ambiguous("quartic comparison hypotheses fail (c = +-c' or cc' = +-4)"),
    }
    Ok(())
}

fn frobenius_pair(v: &mut Verdict) -> Result<()> {
    if !same_quadratic(v) {
        v.set(Relation::TrivialIntersection, Some("I-1"));
        v.caveats.push(
            "quadratic subfields differ; the degree-40 resolvent was not factored (see `resolvent hfull`)".into(),
        );
        return Ok(());
    }
    let cl = chart_of(&v.left.point)?;
    let cr = chart_of(&v.right.point)?;
    let (
        Chart::Quadratic { field: k, s, t },
        Chart::Quadratic {
            field: k2,
            s: s2,
            t: t2,
        },
    ) = (&cl, &cr)
    else {
        return Err(Error::Unsupported("Frobenius points without a quadratic chart".into()));
    };
    debug_assert_eq!(k, k2);
    let fname = format!("Q(sqrt({}))", k.radicand());

    // dihedral resolvents over the common quadratic field decide equality
    let table = CoefficientTable::standard();
    let mut equal = false;
    for i in 1..=2 {
        let f = fi_with(i, k, table, s, t, s2, t2)?;
        let fz = AnyFactorization::Quadratic(factor_over_quadratic(&f)?);
        equal |= v.record(&format!("F{i}"), &fname, &fz);
    }

    // the degree-40 resolvent over Q is the cross-check
    let parts = h_full_parts(&cl, &cr)?;
    let mut hfz: Option<Factorization<Rationals>> = None;
    for part in &parts {
        let fz = factor_over_rationals(part)?;
        hfz = Some(match hfz {
            None => fz,
            Some(acc) => merge(acc, fz),
        });
    }
    let hfz = hfz.expect("at least one part");
    let witnesses_before = v.witnesses.len();
    v.record("Hfull", "Q", &q_fz(hfz));
    v.witnesses.truncate(witnesses_before);

    let i5 = v.dt_matches("Hfull", &[10, 10, 10, 4, 4, 2]);
    let i2 = v.dt_matches("Hfull", &[20, 20]);
    let i34 = v.dt_matches("Hfull", &[10, 10, 10, 10]);
    if equal {
        if i5 {
            v.set(Relation::Equal, Some("I-5"));
        } else {
            v.ambiguous(
                "F1/F2 over the quadratic field have a root but the degree-40 resolvent lacks the 10^3,4^2,2 pattern",
            );
        }
        return Ok(());
    }
    if i5 {
        v.ambiguous("the degree-40 resolvent shows 10^3,4^2,2 but F1/F2 over the quadratic field have no root");
        return Ok(());
    }
    let (p, r) = pr_of(&v.left.point).expect("Frobenius point");
    let (p2, r2) = pr_of(&v.right.point).expect("Frobenius point");
    match super::quartic_subfields_equal(&p, &r, &p2, &r2)? {
        Some(true) if !(i2 && !i34) => v.set(Relation::IntersectDeg4, Some("I-3/I-4")),
        Some(false) if !(i34 && !i2) => v.set(Relation::IntersectDeg2, Some("I-2")),
        Some(_) => v.ambiguous("quartic subfield test and the degree-40 pattern disagree"),
        None => {
            v.caveats
                .push("quartic comparison hypotheses fail; decided by the degree-40 pattern".into());
            match (i2, i34) {
                (true, false) => v.set(Relation::IntersectDeg2, Some("I-2")),
                (false, true) => v.set(Relation::IntersectDeg4, Some("I-3/I-4")),
                _ => v.ambiguous("the degree-40 pattern does not separate I-2 from I-3/I-4"),
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_examples() {
        let v = compare(&ParamPoint::d5(5, -1), &ParamPoint::d5(0, 1)).unwrap();
        assert_eq!(v.relation, Relation::Equal);
        assert_eq!(v.table_row.as_deref(), Some("II-3"));
        assert!(v.witnesses.contains(&Witness {
            resolvent: "F2".into(),
            root: "0".into()
        }));

        let v = compare(&ParamPoint::d5(0, 1), &ParamPoint::d5(2, 1)).unwrap();
        assert_eq!(v.relation, Relation::TrivialIntersection);
        assert_eq!(v.table_row.as_deref(), Some("II-1"));
    }

    #[test]
    fn cyclic_example() {
        let v = compare(&ParamPoint::c5(3, 3), &ParamPoint::c5(23, 3)).unwrap();
        assert_eq!(v.relation, Relation::Equal);
        assert_eq!(v.table_row.as_deref(), Some("III-2"));
        assert!(v.witnesses.iter().any(|w| w.resolvent.starts_with('H')));
    }

    #[test]
    fn reducible_operand() {
        // f_{s,t} reducible gives a quadratic field; compare with a dihedral point
        let v = compare(&ParamPoint::d5(0, 1), &ParamPoint::d5(0, -1));
        assert!(v.is_ok());
    }
}
