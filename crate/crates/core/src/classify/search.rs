//! Grid search for points sharing a splitting field with a fixed point.
//!
//! Candidates are screened by looking for a root of `F^1` or `F^2` modulo a
//! few primes. A rational root of a monic resolvent with `p`-integral
//! coefficients reduces to a root mod `p`, so screening never discards a
//! true match. Survivors are checked exactly and then handed to [`compare`].

use rayon::prelude::*;
use serde::Serialize;

use super::verdict::{compare, Relation, Witness};
use crate::error::{Error, Result};
use crate::exactmath::{Field, PrimeField, Rational};
use crate::factor::{has_root_mod_p, rational_roots};
use crate::families::{Family, ParamPoint};
use crate::resolvents::{chart_of, fi, fi_with, Chart, CoefficientTable};

pub const DEFAULT_SCREEN_PRIMES: [u64; 3] = [101, 103, 107];

/// Inclusive integer ranges for the two parameters of a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grid {
    pub x: (i64, i64),
    pub y: (i64, i64),
}

impl Grid {
    pub fn new(x: (i64, i64), y: (i64, i64)) -> Self {
        Grid { x, y }
    }

    pub fn len(&self) -> u64 {
        let span = |(a, b): (i64, i64)| if b < a { 0 } else { (b - a) as u64 + 1 };
        span(self.x) * span(self.y)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn points(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        (self.x.0..=self.x.1).flat_map(move |a| (self.y.0..=self.y.1).map(move |b| (a, b)))
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub primes: Vec<u64>,
    /// Worker threads; `0` lets rayon decide.
    pub jobs: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            primes: DEFAULT_SCREEN_PRIMES.to_vec(),
            jobs: 0,
        }
    }
}

impl SearchConfig {
    fn validate(&self) -> Result<Vec<PrimeField>> {
        let mut seen = Vec::new();
        for &p in &self.primes {
            if p == 2 || seen.contains(&p) {
                return Err(Error::InvalidArgument(format!(
                    "screen primes must be odd and distinct, got {p}"
                )));
            }
            seen.push(p);
        }
        self.primes.iter().map(|&p| PrimeField::new(p)).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchMatch {
    pub left: ParamPoint,
    pub right: ParamPoint,
    pub relation: Relation,
    pub table_row: Option<String>,
    pub witnesses: Vec<Witness>,
    /// The candidate is the fixed point itself.
    pub is_fixed: bool,
}

/// A pair prepared for screening.
#[allow(clippy::large_enum_variant)]
enum Prepared {
    Rational([Rational; 4]),
    /// Both charts need a quadratic field; only equal fields can match.
    Quadratic,
    /// Groups can never coincide (or the candidate is degenerate).
    Skip,
}

fn prepare(left: &Chart, right: &ParamPoint) -> Prepared {
    let Ok(rc) = chart_of(right) else {
        return Prepared::Skip;
    };
    match (left, rc) {
        (Chart::Rational { s, t, .. }, Chart::Rational { s: s2, t: t2, .. }) => {
            Prepared::Rational([s.clone(), t.clone(), s2, t2])
        }
        (Chart::Quadratic { field, .. }, Chart::Quadratic { field: f2, .. }) if *field == f2 => Prepared::Quadratic,
        _ => Prepared::Skip,
    }
}

/// Whether `F^i` survives every screen prime where its reduction is defined.
fn survives(i: usize, vals: &[Rational; 4], fields: &[PrimeField]) -> bool {
    let table = CoefficientTable::standard();
    for fp in fields {
        let reduced: Option<Vec<u64>> = vals.iter().map(|v| fp.from_rational(v)).collect();
        let Some(r) = reduced else { continue };
        let Ok(f) = fi_with(i, fp, table, &r[0], &r[1], &r[2], &r[3]) else {
            continue;
        };
        // the resolvents are monic; a dropped degree would mean a bad prime
        if f.degree() != Some(10) {
            continue;
        }
        if !has_root_mod_p(&f) {
            return false;
        }
    }
    true
}

fn exact_root(i: usize, vals: &[Rational; 4]) -> bool {
    fi(i, &vals[0], &vals[1], &vals[2], &vals[3])
        .map(|f| !rational_roots(&f).is_empty())
        .unwrap_or(false)
}

fn examine(left: &ParamPoint, lchart: &Chart, right: &ParamPoint, fields: &[PrimeField]) -> Option<SearchMatch> {
    match prepare(lchart, right) {
        Prepared::Skip => return None,
        Prepared::Quadratic => {}
        Prepared::Rational(vals) => {
            let hit = (1..=2).any(|i| survives(i, &vals, fields) && exact_root(i, &vals));
            if !hit {
                return None;
            }
        }
    }
    let v = compare(left, right).ok()?;
    if !matches!(v.relation, Relation::Equal | Relation::Ambiguous) {
        return None;
    }
    Some(SearchMatch {
        left: left.clone(),
        right: right.clone(),
        relation: v.relation,
        table_row: v.table_row,
        witnesses: v.witnesses,
        is_fixed: left == right,
    })
}

fn run<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

fn sort_key(m: &SearchMatch) -> (Rational, Rational, Rational, Rational) {
    let (a, b) = m.left.values();
    let (c, d) = m.right.values();
    (a.clone(), b.clone(), c.clone(), d.clone())
}

/// Every grid point of `family` whose splitting field equals that of `fixed`
/// (or whose comparison is ambiguous). The fixed point is reported too when
/// it lies in the grid.
pub fn search(family: Family, fixed: &ParamPoint, grid: &Grid, cfg: &SearchConfig) -> Result<Vec<SearchMatch>> {
    if grid.is_empty() {
        return Err(Error::InvalidArgument("empty search grid".into()));
    }
    let fields = cfg.validate()?;
    super::identify_group(fixed)?;
    let lchart = chart_of(fixed)?;
    let points: Vec<(i64, i64)> = grid.points().collect();
    let mut out: Vec<SearchMatch> = run(cfg.jobs, || {
        points
            .par_iter()
            .filter_map(|&(a, b)| {
                let cand = ParamPoint::new(
                    family,
                    Rational::from_integer(a.into()),
                    Rational::from_integer(b.into()),
                );
                examine(fixed, &lchart, &cand, &fields)
            })
            .collect()
    })?;
    out.sort_by_key(sort_key);
    Ok(out)
}

/// Screens and compares an explicit list of pairs; returns the matches in
/// input order.
pub fn search_pairs(pairs: &[(ParamPoint, ParamPoint)], cfg: &SearchConfig) -> Result<Vec<SearchMatch>> {
    let fields = cfg.validate()?;
    run(cfg.jobs, || {
        pairs
            .par_iter()
            .filter_map(|(l, r)| {
                let lchart = chart_of(l).ok()?;
                examine(l, &lchart, r, &fields)
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_one_line_small() {
        let grid = Grid::new((-50, 50), (1, 1));
        let found = search(Family::D5, &ParamPoint::d5(0, 1), &grid, &SearchConfig::default()).unwrap();
        let s: Vec<String> = found.iter().map(|m| m.right.values().0.to_string()).collect();
        assert_eq!(s, ["-6", "-1", "0", "41"]);
        assert!(found.iter().find(|m| m.is_fixed).is_some());
    }

    #[test]
    fn rejects_bad_config() {
        let grid = Grid::new((0, 1), (1, 1));
        let cfg = SearchConfig {
            primes: vec![101, 101],
            jobs: 1,
        };
        assert!(search(Family::D5, &ParamPoint::d5(0, 1), &grid, &cfg).is_err());
        let empty = Grid::new((1, 0), (1, 1));
        assert!(search(Family::D5, &ParamPoint::d5(0, 1), &empty, &SearchConfig::default()).is_err());
    }
}
