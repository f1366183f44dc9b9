//! Helpers around [`BigRational`]: construction, parsing, square tests and
//! squarefree kernels.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parses `a` or `a/b` with arbitrary-precision integers.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::parse(text, "empty rational"));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = parse_int(num).ok_or_else(|| Error::parse(text, "bad numerator"))?;
    let den: BigInt = match den {
        Some(d) => parse_int(d).ok_or_else(|| Error::parse(text, "bad denominator"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::parse(text, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Canonical `num/den` rendering used by the JSON interfaces.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Short rendering: integers without a denominator.
pub fn display_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn integer_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Nonnegative square root of `r` when `r` is a rational square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    let n = integer_sqrt_exact(r.numer())?;
    let d = integer_sqrt_exact(r.denom())?;
    Some(Rational::new(n, d))
}

pub fn is_rational_square(r: &Rational) -> bool {
    rational_sqrt(r).is_some()
}

/// Squarefree kernel of a nonzero integer, keeping the sign.
///
/// Square factors are removed by trial division up to `10^6`; a cofactor
/// that is itself a perfect square is removed as well. Larger square
/// factors of composite cofactors are left in place, which only affects the
/// representation of `sqrt(n)`, never correctness of field arithmetic.
pub fn squarefree_kernel(n: &BigInt) -> BigInt {
    assert!(!n.is_zero(), "squarefree kernel of zero");
    let sign = n.sign();
    let mut rest = n.abs();
    let mut kernel = BigInt::one();
    let mut p: u64 = 2;
    while p <= 1_000_000 {
        let pb = BigInt::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut e = 0u32;
        loop {
            let (q, r) = rest.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e % 2 == 1 {
            kernel *= &pb;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if integer_sqrt_exact(&rest).is_none() {
        kernel *= rest;
    }
    if sign == Sign::Minus {
        -kernel
    } else {
        kernel
    }
}

/// Squarefree integer `D` and rational `m > 0` with `r = m^2 * D`.
pub fn squarefree_decomposition(r: &Rational) -> (BigInt, Rational) {
    // r = n/d = n*d / d^2
    let nd = r.numer() * r.denom();
    let k = squarefree_kernel(&nd);
    let m2 = Rational::new(nd / &k, r.denom() * r.denom());
    let m = rational_sqrt(&m2).expect("cofactor of the squarefree kernel is a square");
    (k, m)
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Height of a rational: max(|num|, den).
pub fn height(r: &Rational) -> BigInt {
    let n = r.numer().abs();
    if &n > r.denom() {
        n
    } else {
        r.denom().clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("5").unwrap(), rat(5));
        assert_eq!(parse_rational("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("+7/1").unwrap(), rat(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn squares() {
        assert!(is_rational_square(&ratio(9, 4)));
        assert!(!is_rational_square(&rat(-47)));
        assert!(!is_rational_square(&rat(11233)));
        assert_eq!(rational_sqrt(&ratio(25, 16)).unwrap(), ratio(5, 4));
    }

    #[test]
    fn kernel() {
        assert_eq!(squarefree_kernel(&BigInt::from(125)), BigInt::from(5));
        assert_eq!(squarefree_kernel(&BigInt::from(-188)), BigInt::from(-47));
        assert_eq!(squarefree_kernel(&BigInt::from(8)), BigInt::from(2));
        let (d, m) = squarefree_decomposition(&ratio(845, 4));
        assert_eq!(d, BigInt::from(5));
        assert_eq!(m, ratio(13, 2));
    }

    #[test]
    fn formatting() {
        assert_eq!(format_rational(&rat(-47)), "-47/1");
        assert_eq!(display_rational(&ratio(3, -6)), "-1/2");
    }
}
