use proptest::prelude::*;

use quintic_fields::classify::{compare, search, Grid, GroupName, Relation, SearchConfig};
use quintic_fields::exactmath::polyq::polyq;
use quintic_fields::exactmath::rational::{rat, ratio};
use quintic_fields::exactmath::{PolyQ, Rationals};
use quintic_fields::factor::{factor_over_rationals, rational_roots};
use quintic_fields::families::{rho_transport, Family, ParamPoint};
use quintic_fields::resolvents::fi;

fn small_poly() -> impl Strategy<Value = PolyQ> {
    prop::collection::vec(-6i64..=6, 2..=5).prop_map(|mut c| {
        *c.last_mut().unwrap() = 1;
        polyq(&c)
    })
}

fn d5_point() -> impl Strategy<Value = ParamPoint> {
    (-12i64..=12, 1i64..=3, -6i64..=6, 1i64..=3)
        .prop_filter("t != 0", |(_, _, t, _)| *t != 0)
        .prop_map(|(s, sd, t, td)| ParamPoint::D5 {
            s: ratio(s, sd),
            t: ratio(t, td),
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factorization_reconstructs(fs in prop::collection::vec(small_poly(), 1..=3)) {
        let f = fs.iter().fold(polyq(&[1]), |acc, g| acc.mul(g));
        let fz = factor_over_rationals(&f).unwrap();
        prop_assert_eq!(fz.reconstruct(&Rationals), f.clone());
        for (g, _) in &fz.factors {
            prop_assert!(factor_over_rationals(g).unwrap().is_irreducible());
        }
    }

    #[test]
    fn roots_are_roots(roots in prop::collection::vec((-9i64..=9, 1i64..=4), 1..=4), tail in small_poly()) {
        let f = roots.iter().fold(tail, |acc, &(n, d)| acc.mul(&polyq(&[-n, d])));
        let found = rational_roots(&f);
        for (n, d) in roots {
            prop_assert!(found.contains(&ratio(n, d)));
        }
        for r in found {
            prop_assert_eq!(f.eval(&r), rat(0));
        }
    }

    #[test]
    fn compare_is_symmetric(a in d5_point(), b in d5_point()) {
        let (l, r) = (compare(&a, &b), compare(&b, &a));
        match (l, r) {
            (Ok(l), Ok(r)) => prop_assert_eq!(l.relation, r.relation),
            (Err(_), Err(_)) => {}
            _ => prop_assert!(false, "one direction failed"),
        }
    }

    #[test]
    fn equality_needs_equal_groups(a in d5_point(), b in d5_point()) {
        if let Ok(v) = compare(&a, &b) {
            if v.relation == Relation::Equal {
                prop_assert_eq!(v.left.name, v.right.name);
            }
        }
    }

    #[test]
    fn order_four_action_preserves_field(a in d5_point()) {
        if let Ok(v) = compare(&a, &a) {
            if matches!(v.left.name, GroupName::D5 | GroupName::C5) {
                prop_assert_eq!(v.relation, Relation::Equal);
                let (s, t) = a.values();
                let (s2, t2, _) = rho_transport(s, t, None).unwrap();
                let w = compare(&a, &ParamPoint::D5 { s: s2, t: t2 }).unwrap();
                prop_assert_eq!(w.relation, Relation::Equal);
            }
        }
    }
}

#[test]
fn screening_never_drops_a_match() {
    // brute force with exact root tests on every point agrees with the screened search
    for fixed in [ParamPoint::d5(0, 1), ParamPoint::d5(-7, 1), ParamPoint::d5(2, 3)] {
        let grid = Grid::new((-25, 25), (-12, 12));
        let screened: Vec<String> = search(Family::D5, &fixed, &grid, &SearchConfig::default())
            .unwrap()
            .iter()
            .map(|m| m.right.to_string())
            .collect();
        let (s, t) = fixed.values();
        let mut brute = Vec::new();
        for a in -25..=25 {
            for b in -12..=12 {
                let hit = (1..=2).any(|i| {
                    fi(i, s, t, &rat(a), &rat(b))
                        .map(|f| !rational_roots(&f).is_empty())
                        .unwrap_or(false)
                });
                if !hit {
                    continue;
                }
                let cand = ParamPoint::d5(a, b);
                if let Ok(v) = compare(&fixed, &cand) {
                    if matches!(v.relation, Relation::Equal | Relation::Ambiguous) {
                        brute.push(cand.to_string());
                    }
                }
            }
        }
        assert_eq!(screened, brute, "fixed {fixed}");
    }
}

#[test]
fn search_output_ignores_thread_count() {
    let grid = Grid::new((-40, 40), (-20, 20));
    let run = |jobs| {
        let cfg = SearchConfig {
            jobs,
            ..SearchConfig::default()
        };
        search(Family::D5, &ParamPoint::d5(0, 1), &grid, &cfg)
            .unwrap()
            .iter()
            .map(|m| m.right.to_string())
            .collect::<Vec<_>>()
    };
    assert_eq!(run(1), run(3));
}

#[test]
fn cyclic_chart_symmetries() {
    let base = ParamPoint::c5(3, 3);
    for other in [
        ParamPoint::c5(3, -3),
        ParamPoint::C5 {
            a: ratio(-1, 3),
            b: rat(-1),
        },
    ] {
        assert_eq!(compare(&base, &other).unwrap().relation, Relation::Equal);
    }
}
