//! The coefficients `c0..c3` of `G^1` and `d0..d3` of the characteristic-2
//! `G^3`, transcribed once as text and expanded into monomial lists.
//!
//! Syntax: `s`, `t`, `S`, `T` stand for `s, t, s', t'`. Terms inside `[...]`
//! are summed together with their image under the swap `s <-> s'`,
//! `t <-> t'`; terms outside are taken as written.

use std::collections::BTreeMap;

use once_cell::sync::Lazy;

use crate::exactmath::Field;

const SOURCE: &str = "
c3 = [ 2*s - 21*t + 3*t^2 - 2*t*S + t^2*S - t^2*T ] + 31 - 3*s*S + 5*t*T

c2 = [ -20*s + 112*t + 8*s*t - 32*t^2 + 2*t^3 + 5*t*S - 13*s*t*S - 12*t^2*S + 4*t^3*S
     - 15*s*t*T + 14*t^2*T + 2*t^3*T + 8*t^2*S*T - 2*t^3*T^2 ]
     - 102 + 27*s*S - 119*t*T - s*t*S*T + 6*t^2*T^2

c1 = [ 32*s + 2*s^2 - 128*t - 26*s*t + 60*t^2 + 4*s*t^2 - 8*t^3 - 6*s^2*S - 7*t*S
     + 38*s*t*S + 9*t^2*S - 5*s*t^2*S - 12*t^3*S + 2*t^4*S - 20*t*S^2 - 8*s*t*S^2
     + 6*t^2*S^2 + 2*t^3*S^2 + 2*s*t*T - 77*t^2*T + 3*s*t^2*T + 8*t^3*T - 29*t^2*S*T
     + s*t^2*S*T + 18*t^3*S*T - 2*s*t^2*T^2 + 10*t^3*T^2 ]
     + 80 - 37*s*S + 145*t*T - 45*s*t*S*T + 24*t^2*T^2 - 8*t^3*T^3

c0 = [ -16*s - 2*s^2 + 56*t + 24*s*t + 2*s^2*t - 38*t^2 - 8*s*t^2 + 8*t^3 + 5*s^2*S
     - 2*t*S - 38*s*t*S - 7*s^2*t*S + 5*t^2*S + 13*s*t^2*S + 8*t^3*S + 2*s*t^3*S
     - 4*t^4*S - 21*t*S^2 - 11*s*t*S^2 - 2*t^2*S^2 + 2*s*t^2*S^2 + 4*t^3*S^2
     - 104*s*t*T - 33*s^2*t*T + 105*t^2*T + 35*s*t^2*T + 4*t^3*T + 16*s*t^3*T
     - 6*t^4*T - 2*t^5*T - s^2*t*S*T + 36*t^2*S*T - 14*s*t^2*S*T - 6*t^3*S*T
     + 6*t^4*S*T + 8*t^2*S^2*T - 37*s*t^2*T^2 + 22*t^3*T^2 - 2*s*t^3*T^2 + 8*t^4*T^2
     + 8*t^3*S*T^2 - 2*t^4*T^3 ]
     - 24 + 14*s*S - 8*s^2*S^2 - 224*t*T + s*t*S*T - 101*t^2*T^2 - s*t^2*S*T^2 - 8*t^3*T^3

d3 = [ t + t^2 + t^2*S + t^2*T ] + 1 + s*S + t*T

d2 = [ s + t + s*t + t^3 + t*S + s*t*S + s*t*T + t^2*T + t^3*T + t^3*T^2 ]
     + 1 + s*S + s*t*S*T + t^2*T^2

d1 = [ s + s^2 + t + s*t + t^2 + s*t^2 + s^2*S + t*S + s*t*S + t^2*S + s*t^2*S + t^4*S
     + t^2*S^2 + t^3*S^2 + t^2*T + t^3*S*T + s*t^2*T^2 + t^3*T^2 ]
     + t*T + s*t*S*T

d0 = [ s*t^2 + s*t^2*S + s*t^3*S + t^2*S^2 + s*t^2*S^2 + t^4*T + t^5*T + s^2*t*S*T
     + s*t^2*S*T + t^3*S*T + t^4*S*T + t^3*T^2 + s*t^3*T^2 + t^4*T^3 ]
     + t*T + t^2*T^2 + s*t*S*T + s*t^2*S*T^2
";

/// Exponents of `(s, t, s', t')`.
pub type Exponents = [u8; 4];

/// A polynomial in `s, t, s', t'` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coefficient {
    pub terms: Vec<(i64, Exponents)>,
}

impl Coefficient {
    fn from_map(map: BTreeMap<Exponents, i64>) -> Self {
        Coefficient {
            terms: map.into_iter().filter(|(_, c)| *c != 0).map(|(e, c)| (c, e)).collect(),
        }
    }

    /// Whether swapping the two parameter pairs leaves the coefficient fixed.
    pub fn is_swap_symmetric(&self) -> bool {
        let mut a: Vec<_> = self.terms.clone();
        let mut b: Vec<_> = self.terms.iter().map(|&(c, e)| (c, swap(e))).collect();
        a.sort();
        b.sort();
        a == b
    }

    pub fn eval<F: Field>(&self, fld: &F, vars: &Powers<F>) -> F::Elem {
        self.terms.iter().fold(fld.zero(), |acc, (c, e)| {
            let mut m = fld.from_i64(*c);
            for (k, &d) in e.iter().enumerate() {
                if d > 0 {
                    m = fld.mul(&m, &vars.0[k][d as usize]);
                }
            }
            fld.add(&acc, &m)
        })
    }
}

/// Powers `v^0..v^6` of the four variables.
pub struct Powers<F: Field>(Vec<Vec<F::Elem>>);

impl<F: Field> Powers<F> {
    pub fn new(fld: &F, vars: [&F::Elem; 4]) -> Self {
        Powers(
            vars.iter()
                .map(|v| {
                    let mut out = vec![fld.one()];
                    for k in 1..=MAX_EXP {
                        out.push(fld.mul(&out[k - 1], v));
                    }
                    out
                })
                .collect(),
        )
    }
}

const MAX_EXP: usize = 6;

fn swap(e: Exponents) -> Exponents {
    [e[2], e[3], e[0], e[1]]
}

/// All eight coefficients, keyed `c0..c3`, `d0..d3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    pub c: [Coefficient; 4],
    pub d: [Coefficient; 4],
}

static STANDARD: Lazy<CoefficientTable> =
    Lazy::new(|| CoefficientTable::parse(SOURCE).expect("built-in coefficient table parses"));

impl CoefficientTable {
    pub fn standard() -> &'static CoefficientTable {
        &STANDARD
    }

    /// Copy with `delta` added to the constant term of the named entry; a
    /// deliberately wrong table for checking that the oracle notices.
    pub fn perturbed(&self, name: &str, delta: i64) -> Option<CoefficientTable> {
        let mut out = self.clone();
        let slot = out.entry_mut(name)?;
        let mut map: BTreeMap<Exponents, i64> = slot.terms.iter().map(|&(c, e)| (e, c)).collect();
        *map.entry([0; 4]).or_insert(0) += delta;
        *slot = Coefficient::from_map(map);
        Some(out)
    }

    fn entry_mut(&mut self, name: &str) -> Option<&mut Coefficient> {
        let idx = name.get(1..)?.parse::<usize>().ok().filter(|i| *i < 4)?;
        match name.chars().next()? {
            'c' => Some(&mut self.c[idx]),
            'd' => Some(&mut self.d[idx]),
            _ => None,
        }
    }

    pub fn parse(text: &str) -> Result<CoefficientTable, String> {
        let mut entries: BTreeMap<String, Coefficient> = BTreeMap::new();
        let mut current: Option<(String, String)> = None;
        let flush =
            |cur: Option<(String, String)>, entries: &mut BTreeMap<String, Coefficient>| -> Result<(), String> {
                if let Some((name, body)) = cur {
                    entries.insert(name.clone(), parse_entry(&body).map_err(|e| format!("{name}: {e}"))?);
                }
                Ok(())
            };
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some((name, body)) = line.split_once('=') {
                flush(current.take(), &mut entries)?;
                current = Some((name.trim().to_string(), body.to_string()));
            } else if let Some((_, body)) = current.as_mut() {
                body.push(' ');
                body.push_str(line);
            } else {
                return Err(format!("continuation without entry: {line}"));
            }
        }
        flush(current, &mut entries)?;
        let mut take = |name: &str| entries.remove(name).ok_or_else(|| format!("missing {name}"));
        Ok(CoefficientTable {
            c: [take("c0")?, take("c1")?, take("c2")?, take("c3")?],
            d: [take("d0")?, take("d1")?, take("d2")?, take("d3")?],
        })
    }
}

fn parse_entry(body: &str) -> Result<Coefficient, String> {
    let (bracket, rest) = match (body.find('['), body.find(']')) {
        (Some(i), Some(j)) if i < j => (&body[i + 1..j], format!("{} {}", &body[..i], &body[j + 1..])),
        (None, None) => ("", body.to_string()),
        _ => return Err("unbalanced bracket".into()),
    };
    let mut map = BTreeMap::new();
    for (c, e) in parse_sum(bracket)? {
        *map.entry(e).or_insert(0) += c;
        *map.entry(swap(e)).or_insert(0) += c;
    }
    for (c, e) in parse_sum(&rest)? {
        *map.entry(e).or_insert(0) += c;
    }
    Ok(Coefficient::from_map(map))
}

fn parse_sum(text: &str) -> Result<Vec<(i64, Exponents)>, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = compact.as_bytes();
    for i in 1..=bytes.len() {
        if i == bytes.len() || bytes[i] == b'+' || bytes[i] == b'-' {
            let term = &compact[start..i];
            if !term.is_empty() {
                terms.push(parse_term(term)?);
            }
            start = i;
        }
    }
    Ok(terms)
}

fn parse_term(term: &str) -> Result<(i64, Exponents), String> {
    let (sign, body) = match term.as_bytes()[0] {
        b'-' => (-1, &term[1..]),
        b'+' => (1, &term[1..]),
        _ => (1, term),
    };
    let mut coef = sign;
    let mut exps = [0u8; 4];
    for factor in body.split('*') {
        let (base, e) = match factor.split_once('^') {
            Some((b, e)) => (b, e.parse::<u8>().map_err(|_| format!("bad exponent in {term}"))?),
            None => (factor, 1),
        };
        let slot = match base {
            "s" => 0,
            "t" => 1,
            "S" => 2,
            "T" => 3,
            n => {
                coef *= n.parse::<i64>().map_err(|_| format!("bad factor {n} in {term}"))?;
                continue;
            }
        };
        exps[slot] += e;
        if exps[slot] as usize > MAX_EXP {
            return Err(format!("exponent too large in {term}"));
        }
    }
    Ok((coef, exps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::rat;
    use crate::exactmath::Rationals;

    fn eval_at(c: &Coefficient, v: [i64; 4]) -> crate::exactmath::Rational {
        let vals: Vec<_> = v.iter().map(|&x| rat(x)).collect();
        let pw = Powers::new(&Rationals, [&vals[0], &vals[1], &vals[2], &vals[3]]);
        c.eval(&Rationals, &pw)
    }

    #[test]
    fn table_is_symmetric() {
        let t = CoefficientTable::standard();
        for c in t.c.iter().chain(t.d.iter()) {
            assert!(c.is_swap_symmetric());
        }
    }

    #[test]
    fn c3_at_diagonal_point() {
        let t = CoefficientTable::standard();
        assert_eq!(eval_at(&t.c[3], [0, 1, 0, 1]), rat(-2));
    }

    #[test]
    fn perturbation_changes_one_entry() {
        let t = CoefficientTable::standard();
        let p = t.perturbed("c2", 1).unwrap();
        assert_ne!(p.c[2], t.c[2]);
        assert_eq!(p.c[1], t.c[1]);
        assert!(t.perturbed("x9", 1).is_none());
    }

    #[test]
    fn rejects_garbage() {
        assert!(CoefficientTable::parse("c0 = [ s + q ]").is_err());
        assert!(CoefficientTable::parse("c0 = 1").is_err());
    }
}
