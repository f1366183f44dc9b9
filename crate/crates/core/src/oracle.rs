//! Independent reconstruction of the family polynomials and resolvents from
//! the cross-ratio coordinates `(x, y)` and the explicit action of `S5` on
//! them. Everything here is computed by multiplying out linear factors over
//! orbits, so it shares no code path with the coefficient table.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::exactmath::polyq::discriminant;
use crate::exactmath::{Field, Gf2m, Poly, PolyQ, Rational, Rationals};
use crate::families::{
    ab_from_std, brumer_generic, delta_generic, epsilon_d5_char2, f20_f, ht_c5_disc_formula, ht_c5_f,
    ht_params_from_ab, pq_from_st,
};
use crate::resolvents::{f1_char2_with, f1_with, g3_g4, h_with, CoefficientTable};

type Pt<E> = (E, E);

/// `sigma: (x, y) -> (y, -(y-1)/x)`.
pub fn sigma<F: Field>(k: &F, (x, y): &Pt<F::Elem>) -> Option<Pt<F::Elem>> {
    let v = k.neg(&k.div(&k.sub(y, &k.one()), x)?);
    Some((y.clone(), v))
}

/// `tau: (x, y) -> (x, -(x-1)/y)`.
pub fn tau<F: Field>(k: &F, (x, y): &Pt<F::Elem>) -> Option<Pt<F::Elem>> {
    let v = k.neg(&k.div(&k.sub(x, &k.one()), y)?);
    Some((x.clone(), v))
}

/// `rho: (x, y) -> (x/(x-1), (y-1)/(x+y-1))`.
pub fn rho<F: Field>(k: &F, (x, y): &Pt<F::Elem>) -> Option<Pt<F::Elem>> {
    let one = k.one();
    let u = k.div(x, &k.sub(x, &one))?;
    let v = k.div(&k.sub(y, &one), &k.sub(&k.add(x, y), &one))?;
    Some((u, v))
}

/// The five conjugates of `x` under `D5`, in the order
/// `x, y, -(y-1)/x, (x+y-1)/(xy), -(x-1)/y`.
pub fn d5_orbit_in<F: Field>(k: &F, x: &F::Elem, y: &F::Elem) -> Option<[F::Elem; 5]> {
    let one = k.one();
    let xy = k.mul(x, y);
    Some([
        x.clone(),
        y.clone(),
        k.neg(&k.div(&k.sub(y, &one), x)?),
        k.div(&k.sub(&k.add(x, y), &one), &xy)?,
        k.neg(&k.div(&k.sub(x, &one), y)?),
    ])
}

pub fn d5_orbit(x: &Rational, y: &Rational) -> Option<[Rational; 5]> {
    d5_orbit_in(&Rationals, x, y)
}

/// Invariants of a cross-ratio point.
#[derive(Clone, Debug, PartialEq)]
pub struct XyParams<E> {
    pub s: E,
    pub t: E,
    pub d: E,
}

/// `s = sum sigma^i((x-1)(y-1))`, `t = -(x-1)(y-1)(x+y-1)/(xy)` and
/// `d = (x-y)(x+xy-1)(y+xy-1)(x^2+y-1)(x+y^2-1)/(x^3 y^3)`.
pub fn params_from_xy_in<F: Field>(k: &F, x: &F::Elem, y: &F::Elem) -> Option<XyParams<F::Elem>> {
    let one = k.one();
    let orbit = d5_orbit_in(k, x, y)?;
    // sigma^i((x-1)(y-1)) = (o_i - 1)(o_{i+1} - 1)
    let mut s = k.zero();
    for i in 0..5 {
        let j = (i + 1) % 5;
        s = k.add(&s, &k.mul(&k.sub(&orbit[i], &one), &k.sub(&orbit[j], &one)));
    }
    let xy = k.mul(x, y);
    let xm = k.sub(x, &one);
    let ym = k.sub(y, &one);
    let num = k.mul(&k.mul(&xm, &ym), &k.sub(&k.add(x, y), &one));
    let t = k.neg(&k.div(&num, &xy)?);
    let factors = [
        k.sub(x, y),
        k.add(&xm, &xy),
        k.add(&ym, &xy),
        k.add(&k.mul(x, x), &ym),
        k.add(&xm, &k.mul(y, y)),
    ];
    let num = factors.iter().fold(k.one(), |acc, f| k.mul(&acc, f));
    let d = k.div(&num, &k.pow(&xy, 3))?;
    Some(XyParams { s, t, d })
}

pub fn params_from_xy(x: &Rational, y: &Rational) -> Option<XyParams<Rational>> {
    params_from_xy_in(&Rationals, x, y)
}

/// The characteristic-2 invariant `e = (sum sigma^i(x y^2)) / (s + t + st)`.
pub fn e_from_xy(k: &Gf2m, x: &u64, y: &u64) -> Option<u64> {
    let o = d5_orbit_in(k, x, y)?;
    let mut num = 0;
    for i in 0..5 {
        let next = &o[(i + 1) % 5];
        num = k.add(&num, &k.mul(&o[i], &k.mul(next, next)));
    }
    let p = params_from_xy_in(k, x, y)?;
    let den = k.add(&k.add(&p.s, &p.t), &k.mul(&p.s, &p.t));
    k.div(&num, &den)
}

/// The ten images of `(x', y')` under `sigma^a tau^b`.
fn d5_images<F: Field>(k: &F, pt: &Pt<F::Elem>) -> Option<Vec<Pt<F::Elem>>> {
    let mut out = Vec::with_capacity(10);
    for b in 0..2 {
        let mut cur = if b == 0 { pt.clone() } else { tau(k, pt)? };
        for _ in 0..5 {
            out.push(cur.clone());
            cur = sigma(k, &cur)?;
        }
    }
    Some(out)
}

/// `P = sum (sigma sigma')^i (x x')`.
fn p_invariant<F: Field>(k: &F, a: &Pt<F::Elem>, b: &Pt<F::Elem>) -> Option<F::Elem> {
    let o = d5_orbit_in(k, &a.0, &a.1)?;
    let o2 = d5_orbit_in(k, &b.0, &b.1)?;
    Some((0..5).fold(k.zero(), |acc, i| k.add(&acc, &k.mul(&o[i], &o2[i]))))
}

/// `prod (X - P(x, y, g'(x', y')))` over the ten `g'` in `D5'`.
pub fn f1_from_xy_in<F: Field>(k: &F, x: &F::Elem, y: &F::Elem, x2: &F::Elem, y2: &F::Elem) -> Option<Poly<F>> {
    let left = (x.clone(), y.clone());
    let roots = d5_images(k, &(x2.clone(), y2.clone()))?
        .iter()
        .map(|img| p_invariant(k, &left, img))
        .collect::<Option<Vec<_>>>()?;
    Some(Poly::from_roots(k.clone(), &roots))
}

pub fn f1_from_xy(x: &Rational, y: &Rational, x2: &Rational, y2: &Rational) -> Option<PolyQ> {
    f1_from_xy_in(&Rationals, x, y, x2, y2)
}

/// The product over the five `F20`-conjugates of `(x-1)/x^2`.
pub fn f20_resolvent_from_xy(x: &Rational, y: &Rational) -> Option<PolyQ> {
    let k = Rationals;
    let one = Rational::from_integer(1.into());
    let sq = |v: &Rational| v * v;
    let w = x + y - &one;
    if x.is_zero() || y.is_zero() || (y - &one).is_zero() || (x - &one).is_zero() || w.is_zero() {
        return None;
    }
    let roots = [
        (x - &one) / sq(x),
        (y - &one) / sq(y),
        -(x * &w) / sq(&(y - &one)),
        -(x * y * (x - &one) * (y - &one)) / sq(&w),
        -(y * &w) / sq(&(x - &one)),
    ];
    Some(Poly::from_roots(k, &roots))
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: usize,
    pub char2_trials: usize,
    pub char2_bits: u32,
}

impl SuiteConfig {
    pub fn new(seed: u64, trials: usize) -> Self {
        SuiteConfig {
            seed,
            trials,
            char2_trials: trials,
            char2_bits: 16,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityResult {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    /// Trial number (1-based) and point of the first failure.
    pub first_failure: Option<(usize, String)>,
}

impl IdentityResult {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checked > 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub seed: u64,
    pub trials: usize,
    pub char2_trials: usize,
    pub char2_bits: u32,
    pub identities: Vec<IdentityResult>,
    pub all_passed: bool,
}

const CHAR0_NAMES: [&str; 8] = [
    "brumer_product",
    "d_squared_is_delta",
    "disc_brumer",
    "f1_char0",
    "f20_product",
    "c5_chart_round_trip",
    "c5_disc_formula",
    "h1_conjugate_product",
];
const CHAR2_NAMES: [&str; 3] = ["e_artin_schreier", "f1_char2", "f1_char2_split"];

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-12i64..=12).into(), rng.gen_range(1i64..=6).into())
}

/// Rejection sampling: the point is kept only when every orbit and action
/// denominator used by the checks is nonzero.
fn admissible_q(x: &Rational, y: &Rational) -> bool {
    let k = Rationals;
    let Some(p) = params_from_xy(x, y) else { return false };
    if d5_images(&k, &(x.clone(), y.clone())).is_none() || f20_resolvent_from_xy(x, y).is_none() {
        return false;
    }
    !p.t.is_zero() && !p.d.is_zero() && ab_from_std(&p.s, &p.t, &p.d).is_ok()
}

fn admissible_2(k: &Gf2m, x: &u64, y: &u64) -> bool {
    d5_images(k, &(*x, *y)).is_some() && e_from_xy(k, x, y).is_some()
}

/// Runs every oracle identity and reports pass/fail per identity.
pub fn identity_suite(seed: u64, trials: usize) -> IdentityReport {
    identity_suite_with(&SuiteConfig::new(seed, trials), CoefficientTable::standard())
}

/// As [`identity_suite`] but against an arbitrary coefficient table, so that
/// a corrupted table can be shown to fail.
pub fn identity_suite_with(cfg: &SuiteConfig, table: &CoefficientTable) -> IdentityReport {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut pts = Vec::with_capacity(cfg.trials);
    while pts.len() < cfg.trials {
        let q = [0; 4].map(|_| small_rational(&mut rng));
        if admissible_q(&q[0], &q[1]) && admissible_q(&q[2], &q[3]) {
            pts.push(q);
        }
    }
    let k = Gf2m::new(cfg.char2_bits).expect("supported field size");
    let mut pts2 = Vec::with_capacity(cfg.char2_trials);
    while pts2.len() < cfg.char2_trials {
        let q = [0; 4].map(|_| rng.gen_range(0..k.order()));
        if admissible_2(&k, &q[0], &q[1]) && admissible_2(&k, &q[2], &q[3]) {
            pts2.push(q);
        }
    }

    let outcomes: Vec<Vec<bool>> = pts.par_iter().map(|q| char0_checks(table, q)).collect();
    let outcomes2: Vec<Vec<bool>> = pts2.par_iter().map(|q| char2_checks(&k, table, q)).collect();

    let mut identities = Vec::new();
    let mut tally = |names: &[&'static str], outcomes: &[Vec<bool>], show: &dyn Fn(usize) -> String| {
        for (j, name) in names.iter().enumerate() {
            let mut res = IdentityResult {
                name,
                checked: outcomes.len(),
                failures: 0,
                first_failure: None,
            };
            for (i, o) in outcomes.iter().enumerate() {
                if !o[j] {
                    res.failures += 1;
                    res.first_failure.get_or_insert_with(|| (i + 1, show(i)));
                }
            }
            identities.push(res);
        }
    };
    tally(&CHAR0_NAMES, &outcomes, &|i| {
        let q = &pts[i];
        format!("x={}, y={}, x'={}, y'={}", q[0], q[1], q[2], q[3])
    });
    tally(&CHAR2_NAMES, &outcomes2, &|i| {
        let q = &pts2[i];
        format!(
            "x={:#x}, y={:#x}, x'={:#x}, y'={:#x} in GF(2^{})",
            q[0], q[1], q[2], q[3], cfg.char2_bits
        )
    });
    let all_passed = identities.iter().all(IdentityResult::passed);
    IdentityReport {
        seed: cfg.seed,
        trials: cfg.trials,
        char2_trials: cfg.char2_trials,
        char2_bits: cfg.char2_bits,
        identities,
        all_passed,
    }
}

fn char0_checks(table: &CoefficientTable, q: &[Rational; 4]) -> Vec<bool> {
    let k = Rationals;
    let p = params_from_xy(&q[0], &q[1]).expect("admissible");
    let p2 = params_from_xy(&q[2], &q[3]).expect("admissible");
    let brumer = brumer_generic(&k, &p.s, &p.t);
    let orbit = d5_orbit(&q[0], &q[1]).expect("admissible");
    let delta = delta_generic(&k, &p.s, &p.t);

    let brumer_ok = Poly::from_roots(k, &orbit) == brumer;
    let d_ok = &p.d * &p.d == delta;
    let disc_ok = discriminant(&brumer).ok() == Some(&p.t * &p.t * &delta * &delta);
    let f1_ok = f1_from_xy(&q[0], &q[1], &q[2], &q[3]) == Some(f1_with(&k, table, &p.s, &p.t, &p2.s, &p2.t));
    let f20_ok = pq_from_st(&p.s, &p.t).ok().map(|(pp, qq)| f20_f(&pp, &qq)) == f20_resolvent_from_xy(&q[0], &q[1]);
    let (chart_ok, disc_c5_ok) = match ab_from_std(&p.s, &p.t, &p.d) {
        Ok((a, b)) => (
            ht_params_from_ab(&a, &b).ok() == Some((p.s.clone(), p.t.clone(), p.d.clone())),
            match (ht_c5_f(&a, &b), ht_c5_disc_formula(&a, &b)) {
                (Ok(f), Ok(want)) => discriminant(&f).ok() == Some(want),
                _ => false,
            },
        ),
        Err(_) => (false, false),
    };
    let h_ok = match (
        h_with(1, &k, table, &p.s, &p.t, &p.d, &p2.s, &p2.t, &p2.d),
        h_with(1, &k, table, &p.s, &p.t, &-p.d.clone(), &p2.s, &p2.t, &p2.d),
    ) {
        (Ok(h), Ok(hc)) => h.mul(&hc) == f1_with(&k, table, &p.s, &p.t, &p2.s, &p2.t),
        _ => false,
    };
    vec![brumer_ok, d_ok, disc_ok, f1_ok, f20_ok, chart_ok, disc_c5_ok, h_ok]
}

fn char2_checks(k: &Gf2m, table: &CoefficientTable, q: &[u64; 4]) -> Vec<bool> {
    let p = params_from_xy_in(k, &q[0], &q[1]).expect("admissible");
    let p2 = params_from_xy_in(k, &q[2], &q[3]).expect("admissible");
    let e = e_from_xy(k, &q[0], &q[1]).expect("admissible");
    let e2 = e_from_xy(k, &q[2], &q[3]).expect("admissible");
    let eps = epsilon_d5_char2(k, &p.s, &p.t);
    let as_ok = eps
        .as_ref()
        .is_ok_and(|eps| k.add(&k.add(&k.mul(&e, &e), &e), eps) == 0);
    let oracle = f1_from_xy_in(k, &q[0], &q[1], &q[2], &q[3]);
    let formula = f1_char2_with(k, table, &p.s, &p.t, &p2.s, &p2.t).ok();
    let f1_ok = formula.is_some() && oracle == formula;
    // F^1 = (G^3 + (e+e') G^4)(G^3 + (e+e'+1) G^4)
    let (g3, g4) = g3_g4(k, table, &p.s, &p.t, &p2.s, &p2.t);
    let ee = k.add(&e, &e2);
    let split = g3.add(&g4.scale(&ee)).mul(&g3.add(&g4.scale(&k.add(&ee, &1))));
    let split_ok = formula.as_ref() == Some(&split);
    vec![as_ok, f1_ok, split_ok]
}
