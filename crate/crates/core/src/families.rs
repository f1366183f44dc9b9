//! Generic quintic families, their invariants and the parameter transforms
//! between the different charts.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::polyq::{polyq_from_rationals, PolyQ};
use crate::exactmath::rational::{format_rational, parse_rational, rat, ratio, rational_sqrt};
use crate::exactmath::{Field, Gf2m, Poly, PolyGf2m, QuadField, QuadNum, Rational};

/// A point of one of the parametric families.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ParamPoint {
    /// Brumer's quintic `f^{D5}_{s,t}`.
    D5 { s: Rational, t: Rational },
    /// The cyclic family `f^{C5}_{A,B}` in the Hashimoto–Tsunogai chart.
    C5 { a: Rational, b: Rational },
    /// `f^{F20}_{p,q}`.
    F20P { p: Rational, q: Rational },
    /// Lecacheux's `g^{F20}_{p,r}`.
    F20R { p: Rational, r: Rational },
    /// The cyclic quartic `f^{C4}_{s,u}`.
    C4 { s: Rational, u: Rational },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    D5,
    C5,
    F20P,
    F20R,
    C4,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::D5 => "d5",
            Family::C5 => "c5",
            Family::F20P => "f20q",
            Family::F20R => "f20r",
            Family::C4 => "c4",
        }
    }

    pub fn parse(tag: &str) -> Result<Family> {
        match tag.trim().to_ascii_lowercase().as_str() {
            "d5" => Ok(Family::D5),
            "c5" => Ok(Family::C5),
            "f20q" | "f20p" => Ok(Family::F20P),
            "f20r" => Ok(Family::F20R),
            "c4" => Ok(Family::C4),
            _ => Err(Error::parse(tag, "unknown family tag")),
        }
    }
}

impl ParamPoint {
    pub fn new(family: Family, x: Rational, y: Rational) -> Self {
        match family {
            Family::D5 => ParamPoint::D5 { s: x, t: y },
            Family::C5 => ParamPoint::C5 { a: x, b: y },
            Family::F20P => ParamPoint::F20P { p: x, q: y },
            Family::F20R => ParamPoint::F20R { p: x, r: y },
            Family::C4 => ParamPoint::C4 { s: x, u: y },
        }
    }

    pub fn d5(s: i64, t: i64) -> Self {
        ParamPoint::D5 { s: rat(s), t: rat(t) }
    }

    pub fn c5(a: i64, b: i64) -> Self {
        ParamPoint::C5 { a: rat(a), b: rat(b) }
    }

    pub fn f20r(p: i64, r: i64) -> Self {
        ParamPoint::F20R { p: rat(p), r: rat(r) }
    }

    pub fn family(&self) -> Family {
        match self {
            ParamPoint::D5 { .. } => Family::D5,
            ParamPoint::C5 { .. } => Family::C5,
            ParamPoint::F20P { .. } => Family::F20P,
            ParamPoint::F20R { .. } => Family::F20R,
            ParamPoint::C4 { .. } => Family::C4,
        }
    }

    pub fn values(&self) -> (&Rational, &Rational) {
        match self {
            ParamPoint::D5 { s, t } => (s, t),
            ParamPoint::C5 { a, b } => (a, b),
            ParamPoint::F20P { p, q } => (p, q),
            ParamPoint::F20R { p, r } => (p, r),
            ParamPoint::C4 { s, u } => (s, u),
        }
    }

    /// Parses `tag:x,y`, e.g. `d5:5,-1` or `c5:3/2,1`.
    pub fn parse(text: &str) -> Result<Self> {
        let (tag, rest) = text
            .split_once(':')
            .ok_or_else(|| Error::parse(text, "expected family:x,y"))?;
        Self::parse_values(Family::parse(tag)?, rest)
    }

    /// Parses the `x,y` part for a known family.
    pub fn parse_values(family: Family, text: &str) -> Result<Self> {
        let (x, y) = text
            .split_once(',')
            .ok_or_else(|| Error::parse(text, "expected two comma-separated rationals"))?;
        Ok(Self::new(family, parse_rational(x)?, parse_rational(y)?))
    }

    /// The defining polynomial of the point.
    pub fn polynomial(&self) -> Result<PolyQ> {
        match self {
            ParamPoint::D5 { s, t } => Ok(brumer_d5(s, t)),
            ParamPoint::C5 { a, b } => ht_c5_f(a, b),
            ParamPoint::F20P { p, q } => Ok(f20_f(p, q)),
            ParamPoint::F20R { p, r } => Ok(f20_g(p, r)),
            ParamPoint::C4 { s, u } => Ok(thc4_quartic(s, u)),
        }
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::exactmath::rational::display_rational;
        let (x, y) = self.values();
        write!(
            f,
            "{}:{},{}",
            self.family().tag(),
            display_rational(x),
            display_rational(y)
        )
    }
}

impl Serialize for ParamPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A rational quantity whose square root generates a quadratic subfield.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticInvariant {
    pub value: Rational,
    pub is_square: bool,
    pub root: Option<Rational>,
}

impl QuadraticInvariant {
    pub fn new(value: Rational) -> Self {
        let root = rational_sqrt(&value);
        QuadraticInvariant {
            is_square: root.is_some(),
            value,
            root,
        }
    }
}

impl Serialize for QuadraticInvariant {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("QuadraticInvariant", 3)?;
        st.serialize_field("value", &format_rational(&self.value))?;
        st.serialize_field("is_square", &self.is_square)?;
        st.serialize_field("root", &self.root.as_ref().map(format_rational))?;
        st.end()
    }
}

/// Evaluates `sum c * x^i * y^j` over any field.
pub(crate) fn eval_bivariate<F: Field>(fld: &F, terms: &[(i64, u32, u32)], x: &F::Elem, y: &F::Elem) -> F::Elem {
    let maxi = terms.iter().map(|t| t.1).max().unwrap_or(0) as usize;
    let maxj = terms.iter().map(|t| t.2).max().unwrap_or(0) as usize;
    let powers = |v: &F::Elem, n: usize| {
        let mut out = vec![fld.one()];
        for k in 1..=n {
            out.push(fld.mul(&out[k - 1], v));
        }
        out
    };
    let xp = powers(x, maxi);
    let yp = powers(y, maxj);
    terms.iter().fold(fld.zero(), |acc, &(c, i, j)| {
        let m = fld.mul(&xp[i as usize], &yp[j as usize]);
        fld.add(&acc, &fld.mul(&fld.from_i64(c), &m))
    })
}

/// Brumer's quintic
/// `X^5 + (t-3)X^4 + (s-t+3)X^3 + (t^2-t-2s-1)X^2 + sX + t` over any field.
pub fn brumer_generic<F: Field>(fld: &F, s: &F::Elem, t: &F::Elem) -> Poly<F> {
    let c = |k: i64| fld.from_i64(k);
    let t2 = fld.mul(t, t);
    let x2 = fld.sub(&fld.sub(&fld.sub(&t2, t), &fld.mul(&c(2), s)), &c(1));
    Poly::new(
        fld.clone(),
        vec![
            t.clone(),
            s.clone(),
            x2,
            fld.add(&fld.sub(s, t), &c(3)),
            fld.sub(t, &c(3)),
            fld.one(),
        ],
    )
}

pub fn brumer_d5(s: &Rational, t: &Rational) -> PolyQ {
    brumer_generic(&crate::exactmath::Rationals, s, t)
}

const DELTA_TERMS: [(i64, u32, u32); 13] = [
    (1, 2, 0),
    (-4, 3, 0),
    (4, 0, 1),
    (-14, 1, 1),
    (-30, 2, 1),
    (-91, 0, 2),
    (-34, 1, 2),
    (1, 2, 2),
    (40, 0, 3),
    (24, 1, 3),
    (4, 0, 4),
    (-4, 0, 5),
    (0, 0, 0),
];

/// `delta_{s,t}`, the square class of the quadratic subfield of Brumer's
/// quintic, over any field.
pub fn delta_generic<F: Field>(fld: &F, s: &F::Elem, t: &F::Elem) -> F::Elem {
    eval_bivariate(fld, &DELTA_TERMS, s, t)
}

pub fn delta_value(s: &Rational, t: &Rational) -> Rational {
    delta_generic(&crate::exactmath::Rationals, s, t)
}

pub fn delta_d5(s: &Rational, t: &Rational) -> QuadraticInvariant {
    QuadraticInvariant::new(delta_value(s, t))
}

/// `epsilon_{s,t} = (1+s+s^3+t^2+t^4+t^5)/(s+t+st)^2` in characteristic 2.
pub fn epsilon_d5_char2(k: &Gf2m, s: &u64, t: &u64) -> Result<u64> {
    let den = k.add(&k.add(s, t), &k.mul(s, t));
    let num = eval_bivariate(
        k,
        &[(1, 0, 0), (1, 1, 0), (1, 3, 0), (1, 0, 2), (1, 0, 4), (1, 0, 5)],
        s,
        t,
    );
    k.div(&num, &k.mul(&den, &den))
        .ok_or_else(|| Error::DegenerateParameter("s + t + st vanishes".into()))
}

/// The characteristic-2 form of `f^{F20}_{p,q}`:
/// `X^5 + ((q^2+pq+1)/p^2)X^4 + (p^2+p+q+1)X^3 + (p+q)X^2 + pX + 1`.
pub fn f20_f_char2(k: &Gf2m, p: &u64, q: &u64) -> Result<PolyGf2m> {
    let p2 = k.mul(p, p);
    let num = k.add(&k.add(&k.mul(q, q), &k.mul(p, q)), &1);
    let c4 = k
        .div(&num, &p2)
        .ok_or_else(|| Error::DegenerateParameter("p = 0".into()))?;
    let c3 = k.add(&k.add(&p2, p), &k.add(q, &1));
    Ok(Poly::new(*k, vec![1, *p, k.add(p, q), c3, c4, 1]))
}

fn nonzero(x: Rational, what: &str) -> Result<Rational> {
    if x.is_zero() {
        Err(Error::DegenerateParameter(format!("{what} vanishes")))
    } else {
        Ok(x)
    }
}

/// `(s, t, d)` of the cyclic chart point `(A, B)`; `d^2 = delta_{s,t}`.
pub fn ht_params_from_ab(a: &Rational, b: &Rational) -> Result<(Rational, Rational, Rational)> {
    let a2 = a * a;
    let b2 = b * b;
    let qden = nonzero(rat(1) - a + rat(7) * &b2 + a * &b2, "1 - A + 7B^2 + AB^2")?;
    let t = -(&a2 + &a2 * a - &b2 + rat(7) * a * &b2) / &qden;
    let den = nonzero(rat(-1) + rat(7) * a + rat(7) * &t + a * &t, "-1 + 7A + 7t + At")?;
    let t2 = &t * &t;
    let s = (rat(2) * a + rat(13) * &t - rat(33) * a * &t - rat(2) * &t2 + rat(8) * a * &t2 + rat(2) * &t2 * &t) / &den;
    let inner = rat(-1) - rat(11) * &t + &t2;
    let d = rat(2) * b * &inner * &inner / &den;
    Ok((s, t, d))
}

/// Inverse chart: `(A, B)` from `(s, t, d)` with `d^2 = delta_{s,t}`.
pub fn ab_from_std(s: &Rational, t: &Rational, d: &Rational) -> Result<(Rational, Rational)> {
    let t2 = t * t;
    let den = nonzero(
        rat(-2) + rat(7) * s + rat(33) * t + s * t - rat(8) * &t2,
        "-2 + 7s + 33t + st - 8t^2",
    )?;
    let a = (s + rat(13) * t - rat(7) * s * t - rat(2) * &t2 + rat(2) * &t2 * t) / &den;
    Ok((a, d / &den))
}

/// `P` and `Q` of the cyclic chart.
pub fn ht_pq(a: &Rational, b: &Rational) -> (Rational, Rational) {
    let a2 = a * a;
    let b2 = b * b;
    let u = &a2 - a - rat(1);
    let p = &u * &u + rat(25) * (&a2 + rat(1)) * &b2 + rat(125) * &b2 * &b2;
    let q = rat(1) - a + rat(7) * &b2 + a * &b2;
    (p, q)
}

/// `f^{C5}_{A,B}`: Brumer's quintic at the transformed `(s, t)`.
pub fn ht_c5_f(a: &Rational, b: &Rational) -> Result<PolyQ> {
    let (s, t, _) = ht_params_from_ab(a, b)?;
    Ok(brumer_d5(&s, &t))
}

/// `h^{C5}_{A,B} = X^5 - (P/Q^2)(A^2-2A+15B^2+2)X^3 + (P^2/Q^3)(2BX^2-(A-1)X-2B)`.
pub fn ht_c5_h(a: &Rational, b: &Rational) -> Result<PolyQ> {
    let (p, q) = ht_pq(a, b);
    let q = nonzero(q, "Q")?;
    let c3 = -(&p / (&q * &q)) * (a * a - rat(2) * a + rat(15) * b * b + rat(2));
    let k = &p * &p / (&q * &q * &q);
    Ok(polyq_from_rationals(vec![
        -(&k * rat(2) * b),
        -(&k * (a - rat(1))),
        &k * rat(2) * b,
        c3,
        rat(0),
        rat(1),
    ]))
}

/// `16 B^4 (A^2+A^3-B^2+7AB^2)^2 P^8 / Q^14`.
pub fn ht_c5_disc_formula(a: &Rational, b: &Rational) -> Result<Rational> {
    let (p, q) = ht_pq(a, b);
    let q = nonzero(q, "Q")?;
    let b2 = b * b;
    let m = a * a + a * a * a - &b2 + rat(7) * a * &b2;
    Ok(rat(16) * &b2 * &b2 * &m * &m * num_traits::pow(p, 8) / num_traits::pow(q, 14))
}

/// `g^{C5}_{s,t} = X^5 - (2-3s-2t+t^2)X^3 + dX^2 + (1-3s-10t-4st+3t^2+t^3)X - d`.
/// With `d` from [`ht_params_from_ab`], `h^{C5}_{A,B}` equals this at `-d`.
pub fn c5_g(s: &Rational, t: &Rational, d: &Rational) -> PolyQ {
    let t2 = t * t;
    polyq_from_rationals(vec![
        -d.clone(),
        rat(1) - rat(3) * s - rat(10) * t - rat(4) * s * t + rat(3) * &t2 + &t2 * t,
        d.clone(),
        -(rat(2) - rat(3) * s - rat(2) * t + &t2),
        rat(0),
        rat(1),
    ])
}

/// `f^{F20}_{p,q}`.
pub fn f20_f(p: &Rational, q: &Rational) -> PolyQ {
    let p2 = p * p;
    let c4 = (q * q + rat(5) * p * q - rat(25)) / (&p2 + rat(4)) - rat(2) * p + rat(2);
    polyq_from_rationals(vec![
        rat(1),
        p - rat(6),
        q - rat(3) * p + rat(8),
        &p2 - p - rat(3) * q + rat(5),
        c4,
        rat(1),
    ])
}

/// Lecacheux's `g^{F20}_{p,r}`.
pub fn f20_g(p: &Rational, r: &Rational) -> PolyQ {
    let n = p * p + rat(4);
    polyq_from_rationals(vec![
        rat(1),
        p - rat(6),
        -(r * &n + ratio(11, 2) * p - rat(8)),
        &n * (rat(3) * r + rat(1)) + ratio(13, 2) * p + rat(1),
        r * r * &n - rat(2) * p - ratio(17, 4),
        rat(1),
    ])
}

/// `q = -(5p + 8r + 2p^2 r)/2`.
pub fn q_from_r(p: &Rational, r: &Rational) -> Rational {
    -(rat(5) * p + rat(8) * r + rat(2) * p * p * r) / rat(2)
}

/// `r = -(5p + 2q)/(2(p^2+4))`.
pub fn r_from_q(p: &Rational, q: &Rational) -> Rational {
    -(rat(5) * p + rat(2) * q) / (rat(2) * (p * p + rat(4)))
}

/// `(p, q) = (t - 1/t, s + (s+5t)/t^2)`.
pub fn pq_from_st(s: &Rational, t: &Rational) -> Result<(Rational, Rational)> {
    let t = nonzero(t.clone(), "t")?;
    let p = &t - t.recip();
    let q = s + (s + rat(5) * &t) / (&t * &t);
    Ok((p, q))
}

/// Brumer parameters of an F20 point, living in `Q(sqrt(p^2+4))`.
#[derive(Clone, Debug, PartialEq)]
pub enum F20Transport {
    /// `p^2 + 4` is a rational square.
    Rational {
        s: Rational,
        t: Rational,
    },
    Quadratic {
        field: QuadField,
        s: QuadNum,
        t: QuadNum,
    },
}

/// `s = -(5p+8r+2p^2 r + (2pr+5) sqrt(p^2+4))/4`, `t = (p + sqrt(p^2+4))/2`.
pub fn f20_to_d5(p: &Rational, r: &Rational) -> F20Transport {
    let n = p * p + rat(4);
    let base = rat(5) * p + rat(8) * r + rat(2) * p * p * r;
    let lin = rat(2) * p * r + rat(5);
    match rational_sqrt(&n) {
        Some(root) => F20Transport::Rational {
            s: -(&base + &lin * &root) / rat(4),
            t: (p + &root) / rat(2),
        },
        None => {
            let (field, m) = QuadField::from_radicand(&n).expect("non-square radicand");
            let s = field.elem(-&base / rat(4), -(&lin * &m) / rat(4));
            let t = field.elem(p / rat(2), &m / rat(2));
            F20Transport::Quadratic { field, s, t }
        }
    }
}

/// Data of the cyclic quartic subfield of an F20 point.
#[derive(Clone, Debug, PartialEq)]
pub struct C4Data {
    pub w: Rational,
    pub quartic: PolyQ,
    /// `delta' = u + v sqrt(p^2+4)`.
    pub delta_prime: (Rational, Rational),
    /// Parameters `(a, c)` for the quartic comparison.
    pub a: Rational,
    pub c: Rational,
}

pub fn w_value(p: &Rational, r: &Rational) -> Rational {
    let n = p * p + rat(4);
    rat(-199) - rat(16) * p - rat(4) * (rat(19) * p + rat(41)) * r + rat(4) * &n * r * r + rat(16) * &n * r * r * r
}

pub fn c4_subfield_data(p: &Rational, r: &Rational) -> C4Data {
    let n = p * p + rat(4);
    let w = w_value(p, r);
    let a = -(p * p + rat(1)) * &n * &w;
    let quartic = polyq_from_rationals(vec![&n * &w * &w, rat(0), a.clone(), rat(0), rat(1)]);
    let p2 = p * p;
    let u = &w * (&p2 * &p2 + rat(5) * &p2 + rat(4)) / rat(8);
    let v = &w * p * (&p2 + rat(3)) / rat(8);
    C4Data {
        c: p * (&p2 + rat(3)),
        w,
        quartic,
        delta_prime: (u, v),
        a,
    }
}

/// The action `s -> (s+5t)/t^2, t -> -1/t, d -> d/t^3`.
pub fn rho_transport(
    s: &Rational,
    t: &Rational,
    d: Option<&Rational>,
) -> Result<(Rational, Rational, Option<Rational>)> {
    let t = nonzero(t.clone(), "t")?;
    let t2 = &t * &t;
    let s2 = (s + rat(5) * &t) / &t2;
    let d2 = d.map(|d| d / (&t2 * &t));
    Ok((s2, -t.recip(), d2))
}

/// The same action over any field; `None` when `t = 0`.
pub fn rho_generic<F: Field>(fld: &F, s: &F::Elem, t: &F::Elem) -> Option<(F::Elem, F::Elem)> {
    let ti = fld.inv(t)?;
    let s2 = fld.mul(&fld.add(s, &fld.mul(&fld.from_i64(5), t)), &fld.mul(&ti, &ti));
    Some((s2, fld.neg(&ti)))
}

/// `(A, B) -> (-1/A, -B/A)`, the image of the order-4 action in the cyclic chart.
pub fn rho_ab(a: &Rational, b: &Rational) -> Result<(Rational, Rational)> {
    let a = nonzero(a.clone(), "A")?;
    Ok((-a.recip(), -(b / &a)))
}

/// `(A, B) -> (A, -B)`.
pub fn tau_ab(a: &Rational, b: &Rational) -> (Rational, Rational) {
    (a.clone(), -b.clone())
}

/// Lehmer's simplest quintic `g_n`.
pub fn lehmer_quintic(n: &Rational) -> PolyQ {
    let n2 = n * n;
    let n3 = &n2 * n;
    let n4 = &n3 * n;
    polyq_from_rationals(vec![
        rat(1),
        &n3 + rat(4) * &n2 + rat(10) * n + rat(10),
        &n4 + rat(5) * &n3 + rat(11) * &n2 + rat(15) * n + rat(5),
        -(rat(2) * &n3 + rat(6) * &n2 + rat(10) * n + rat(10)),
        n2.clone(),
        rat(1),
    ])
}

/// Brumer parameters with `f^{C5}_{2n+3,1} = f^{D5}_{s,t}`.
pub fn lehmer_params(n: &Rational) -> (Rational, Rational) {
    let n2 = n * n;
    let n3 = &n2 * n;
    let s = &n3 * &n2 + rat(5) * &n2 * &n2 + rat(12) * &n3 + rat(10) * &n2 - rat(5) * n - rat(20);
    let t = -(&n3 + rat(5) * &n2 + rat(10) * n + rat(7));
    (s, t)
}

/// The five hard-coded sextic multi-resolvents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SexticTag {
    S3S3,
    S3C3,
    S3C2,
    S3Triv,
    C3C2,
}

impl SexticTag {
    pub fn parse(tag: &str) -> Result<Self> {
        match tag.to_ascii_lowercase().as_str() {
            "s3s3" => Ok(SexticTag::S3S3),
            "s3c3" => Ok(SexticTag::S3C3),
            "s3c2" => Ok(SexticTag::S3C2),
            "s3triv" | "s31" => Ok(SexticTag::S3Triv),
            "c3c2" => Ok(SexticTag::C3C2),
            _ => Err(Error::parse(tag, "unknown sextic tag")),
        }
    }
}

pub fn sextic_multiresolvent(tag: SexticTag, s: &Rational, t: &Rational) -> PolyQ {
    let st = s * t;
    let s2t2 = &st * &st;
    let z = rat(0);
    let one = rat(1);
    match tag {
        SexticTag::S3S3 => polyq_from_rationals(vec![
            -(&s2t2 * (rat(4) * &st + rat(27) * s + rat(27) * t)),
            rat(81) * &s2t2,
            rat(9) * &s2t2,
            rat(-27) * &st,
            rat(-6) * &st,
            z,
            one,
        ]),
        SexticTag::S3C3 => {
            let m = t * t + rat(3) * t + rat(9);
            let k = rat(2) * t + rat(3);
            let s2 = s * s;
            polyq_from_rationals(vec![
                &s2 * &m * &m * (&m + s),
                &s2 * &k * &m * &m,
                &s2 * &m * &m,
                s * &k * &m,
                rat(2) * s * &m,
                z,
                one,
            ])
        }
        SexticTag::S3C2 => polyq_from_rationals(vec![
            s * s * t * t * t * (rat(4) * s + rat(27)),
            z.clone(),
            rat(9) * &s2t2,
            z.clone(),
            rat(6) * &st,
            z,
            one,
        ]),
        SexticTag::S3Triv => polyq_from_rationals(vec![
            s * s * (rat(4) * s + rat(27)),
            z.clone(),
            rat(9) * s * s,
            z.clone(),
            rat(6) * s,
            z,
            one,
        ]),
        SexticTag::C3C2 => {
            let m = s * s + rat(3) * s + rat(9);
            polyq_from_rationals(vec![
                -(t * t * t * &m * &m),
                z.clone(),
                t * t * &m * &m,
                z.clone(),
                rat(-2) * t * &m,
                z,
                one,
            ])
        }
    }
}

/// `f^{C4}_{s,u} = X^4 + sX^2 + s^2/(u^2+4)`.
pub fn thc4_quartic(s: &Rational, u: &Rational) -> PolyQ {
    polyq_from_rationals(vec![
        s * s / (u * u + rat(4)),
        rat(0),
        s.clone(),
        rat(0),
        Rational::one(),
    ])
}
