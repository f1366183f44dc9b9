//! Rational polynomials: integer normal forms, resultants, discriminants,
//! reduction modulo primes and the text/JSON formats.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{Field, PrimeField, Rationals};
use super::poly::Poly;
use super::rational::{display_rational, format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

pub type PolyQ = Poly<Rationals>;
pub type PolyFp = Poly<PrimeField>;

/// Dense integer polynomial, ascending coefficients, trimmed.
pub type IntPoly = Vec<BigInt>;

pub fn polyq(coeffs: &[i64]) -> PolyQ {
    Poly::from_ints(Rationals, coeffs)
}

pub fn polyq_from_rationals(coeffs: Vec<Rational>) -> PolyQ {
    Poly::new(Rationals, coeffs)
}

pub fn polyq_from_ints(coeffs: &[BigInt]) -> PolyQ {
    Poly::new(
        Rationals,
        coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect(),
    )
}

pub fn trim_int(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn int_content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Splits a nonzero `f` as `c * F` with `F` a primitive integer polynomial
/// with positive leading coefficient.
pub fn primitive_int_form(f: &PolyQ) -> Result<(Rational, IntPoly)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let den = f.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: IntPoly = f.coeffs().iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let mut cont = int_content(&ints);
    if ints.last().is_some_and(|c| c.is_negative()) {
        cont = -cont;
    }
    let prim = ints.iter().map(|c| c / &cont).collect();
    Ok((Rational::new(cont, den), prim))
}

pub fn int_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_int(out)
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
fn int_prem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut e = a.len() as isize - b.len() as isize + 1;
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let lr = r.last().cloned().expect("nonempty");
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, y) in b.iter().enumerate() {
            r[k + j] -= &lr * y;
        }
        r.pop();
        r = trim_int(r);
        e -= 1;
    }
    if e > 0 {
        let f = num_traits::pow(lb.clone(), e as usize);
        for c in r.iter_mut() {
            *c *= &f;
        }
    }
    r
}

fn int_divexact_scalar(p: &mut [BigInt], d: &BigInt) {
    for c in p.iter_mut() {
        debug_assert!((&*c % d).is_zero());
        *c = &*c / d;
    }
}

/// Resultant of primitive integer polynomials by the subresultant PRS.
fn int_resultant(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    let mut s = BigInt::one();
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            s = -s;
        }
    }
    if b.len() == 1 {
        return num_traits::pow(b[0].clone(), a.len() - 1);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.len() - 1;
        let db = b.len() - 1;
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let mut r = int_prem(&a, &b);
        if r.is_empty() {
            return BigInt::zero();
        }
        let div = &g * num_traits::pow(h.clone(), delta);
        int_divexact_scalar(&mut r, &div);
        a = b;
        b = r;
        g = a.last().cloned().expect("nonzero");
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
        if b.len() == 1 {
            break;
        }
    }
    let da = a.len() - 1;
    let lb = b[0].clone();
    // h <- h^(1 - da) * lb^da
    let h = if da == 0 {
        h
    } else {
        num_traits::pow(lb, da) / num_traits::pow(h, da - 1)
    };
    s * h
}

/// `Res_X(f, g)`.
pub fn resultant(f: &PolyQ, g: &PolyQ) -> Result<Rational> {
    let (cf, pf) = primitive_int_form(f)?;
    let (cg, pg) = primitive_int_form(g)?;
    let r = int_resultant(&pf, &pg);
    let scale = num_traits::pow(cf, pg.len() - 1) * num_traits::pow(cg, pf.len() - 1);
    Ok(Rational::from_integer(r) * scale)
}

/// `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant(f: &PolyQ) -> Result<Rational> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    let r = resultant(f, &f.derivative())? / f.lc();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}

/// Image of `f` in `F_p[X]`, or `None` when a denominator vanishes mod p.
pub fn reduce_mod_p(f: &PolyQ, field: PrimeField) -> Option<PolyFp> {
    f.try_map(field, |c| field.from_rational(c))
}

/// Lifts `F_p` coefficients to `(-p/2, p/2]`.
pub fn lift_symmetric(f: &PolyFp) -> PolyQ {
    let fld = *f.field();
    f.map(Rationals, |c| Rational::from_integer(BigInt::from(fld.lift(*c))))
}

/// Rational content with the sign of the leading coefficient; zero for the
/// zero polynomial.
pub fn content(f: &PolyQ) -> Rational {
    primitive_int_form(f)
        .map(|(c, _)| c)
        .unwrap_or_else(|_| Rational::zero())
}

pub fn primitive_part(f: &PolyQ) -> PolyQ {
    match primitive_int_form(f) {
        Ok((_, p)) => polyq_from_ints(&p),
        Err(_) => f.clone(),
    }
}

/// Coefficients rendered as `"num/den"` strings, index = degree.
pub fn to_json_coeffs(f: &PolyQ) -> Vec<String> {
    f.coeffs().iter().map(format_rational).collect()
}

pub fn from_json_coeffs<S: AsRef<str>>(coeffs: &[S]) -> Result<PolyQ> {
    let cs = coeffs
        .iter()
        .map(|s| parse_rational(s.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    Ok(polyq_from_rationals(cs))
}

/// Renders `c0 + c1*x + c2*x^2 + ...`, skipping zero terms.
pub fn format_poly(f: &PolyQ) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        let body = display_rational(&a);
        match i {
            0 => out.push_str(&body),
            _ => {
                if !a.is_one() {
                    out.push_str(&body);
                    out.push('*');
                }
                out.push('x');
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
    }
    out
}

/// Parses the text format produced by [`format_poly`]; terms may repeat and
/// appear in any order.
pub fn parse_poly(text: &str) -> Result<PolyQ> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::parse(text, "empty polynomial"));
    }
    let bytes = s.as_bytes();
    let mut terms = Vec::new();
    let mut start = 0;
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && !b"*/^+-".contains(&bytes[i - 1]) {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    terms.push(&s[start..]);
    let mut coeffs: Vec<Rational> = Vec::new();
    for term in terms {
        let (neg, body) = match term.as_bytes().first() {
            Some(b'-') => (true, &term[1..]),
            Some(b'+') => (false, &term[1..]),
            _ => (false, term),
        };
        if body.is_empty() {
            return Err(Error::parse(term, "empty term"));
        }
        let (coef, exp) = match body.find(['x', 'X']) {
            None => (parse_rational(body)?, 0usize),
            Some(pos) => {
                let c = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
                let coef = if c.is_empty() {
                    Rational::one()
                } else {
                    parse_rational(c)?
                };
                let rest = &body[pos + 1..];
                let exp = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(|| Error::parse(term, "bad exponent"))?
                };
                (coef, exp)
            }
        };
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, Rational::zero());
        }
        coeffs[exp] += if neg { -coef } else { coef };
    }
    Ok(polyq_from_rationals(coeffs))
}

impl fmt::Display for Poly<Rationals> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self))
    }
}

impl fmt::Display for Poly<PrimeField> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.field().modulus();
        write!(
            f,
            "{} (mod {p})",
            format_poly(&self.map(Rationals, |c| { Rational::from_integer(BigInt::from(*c)) }))
        )
    }
}
