use ec_core::cluster::{
    binomial_identity_check, chi_closed_form, chi_closed_form_table, chi_expanded, chi_expanded_literal,
    chi_from_recurrence, chi_nonnegativity_report, chi_small_e1, closed_form_box_is_complete, cross_check,
    ec_bridge, stfact_check, xvar_closed_form, xvar_range, xvar_recurrence, ChiTable, ClusterParams,
    CrossCheckOptions, Region,
};
use ec_core::ring::{BigRat, LaurentPoly2};
use ec_core::{Error, Exec};
use num_bigint::BigInt;
use proptest::prelude::*;

fn lp(s: &str) -> LaurentPoly2 {
    s.parse().unwrap()
}

#[test]
fn first_cluster_variables() {
    let p = ClusterParams::equal(2).unwrap();
    assert_eq!(xvar_recurrence(3, p).unwrap(), lp("1*x1^-1*x2^2 + 1*x1^-1"));
    // ((x2^2+1)^2 + x1^2) / (x1^2 x2)
    let x4 = lp("1*x1^-2*x2^3 + 2*x1^-2*x2^1 + 1*x1^-2*x2^-1 + 1*x2^-1");
    assert_eq!(xvar_recurrence(4, p).unwrap(), x4);
}

#[test]
fn c2_n4_table_is_pinned() {
    let want: Vec<((i64, i64), BigInt)> = vec![
        ((0, 0), 1.into()),
        ((0, 1), 1.into()),
        ((1, 1), 2.into()),
        ((2, 1), 1.into()),
    ];
    let got: Vec<_> = chi_from_recurrence(4, 2).unwrap().entries.into_iter().collect();
    assert_eq!(got, want);
    let closed: Vec<_> = chi_closed_form_table(4, 2, Exec::Sequential)
        .unwrap()
        .entries
        .into_iter()
        .collect();
    assert_eq!(closed, want);
}

#[test]
fn closed_form_equals_recurrence_small_grid() {
    for c in 2..=4 {
        for n in 3..=7 {
            if c == 4 && n == 7 {
                continue;
            }
            let p = ClusterParams::equal(c).unwrap();
            assert_eq!(
                xvar_closed_form(n, c).unwrap(),
                xvar_recurrence(n, p).unwrap(),
                "c={c} n={n}"
            );
        }
    }
}

#[test]
fn cross_check_agrees_for_c2_c3() {
    for c in 2..=3 {
        for n in 3..=7 {
            let r = cross_check(n, c, CrossCheckOptions::default()).unwrap();
            assert!(r.all_agree(), "c={c} n={n}: {:?}", r.disagreements().next());
            assert!(r.positive);
        }
    }
}

#[test]
fn strip_routes_on_c4() {
    let t = chi_from_recurrence(6, 4).unwrap();
    let (_, d2) = t.dim_vector().unwrap();
    for e2 in 0..=d2 {
        for e1 in 0..4 {
            let want = t.get(e1, e2);
            assert_eq!(chi_small_e1(6, 4, e1, e2).unwrap(), want);
            assert_eq!(chi_expanded(6, 4, e1, e2).unwrap(), want);
            if e2 <= 5 {
                assert_eq!(chi_expanded_literal(6, 4, e1, e2).unwrap(), want);
                assert_eq!(ec_bridge(6, 4, e1, e2).unwrap(), BigRat::from(want));
            }
        }
    }
}

#[test]
fn literal_closed_form_cells() {
    assert_eq!(chi_closed_form(4, 2, 1, 1).unwrap(), BigInt::from(2));
    assert_eq!(chi_closed_form(4, 2, 0, 0).unwrap(), BigInt::from(1));
    let t = chi_from_recurrence(5, 3).unwrap();
    let (d1, d2) = t.dim_vector().unwrap();
    for e2 in 0..=d2 + 1 {
        for e1 in 0..=d1 + 1 {
            assert_eq!(chi_closed_form(5, 3, e1, e2).unwrap(), t.get(e1, e2));
        }
    }
}

#[test]
fn enumeration_box_is_complete() {
    for (n, c) in [(6, 2), (7, 2), (6, 3), (6, 4)] {
        assert!(closed_form_box_is_complete(n, c, 5).unwrap(), "n={n} c={c}");
    }
}

#[test]
fn bookkeeping_round_trip() {
    let t = chi_from_recurrence(7, 3).unwrap();
    for &(e1, e2) in t.entries.keys() {
        let (p1, p2) = t.exponent_of(e1, e2).unwrap();
        assert_eq!(t.cell_of(p1, p2).unwrap(), (e1, e2));
    }
    let x = ChiTable::new(5, 3);
    assert!(matches!(x.cell_of(1, 1), Err(Error::BookkeepingMismatch { .. })));
}

#[test]
fn unequal_exponents_have_no_closed_form() {
    assert!(ClusterParams::new(2, 3).unwrap().require_closed_form().is_err());
    assert!(ClusterParams::new(0, 3).is_err());
    // The recurrence itself still works, and stays Laurent.
    let r = xvar_range(-4, 8, ClusterParams::new(1, 4).unwrap()).unwrap();
    assert_eq!(r.len(), 13);
}

#[test]
fn nonnegativity_regions() {
    let r = chi_nonnegativity_report(5, 3).unwrap();
    assert!(r.proven_ok());
    let r = chi_nonnegativity_report(4, 3).unwrap();
    assert_eq!(
        r.regions.keys().copied().collect::<Vec<_>>(),
        vec![Region::Proven]
    );
    let r = chi_nonnegativity_report(7, 4).unwrap();
    assert!(r.open_negatives.is_empty());
    assert!(r.regions[&Region::Open].nonzero > 0);
}

#[test]
fn identity_fixed_points() {
    assert!(binomial_identity_check(1, 0, 2, 1, 1).unwrap().equal);
    for e1 in 0..4 {
        let v = binomial_identity_check(5, -3, 4, e1, 0).unwrap();
        assert!(v.equal);
    }
    assert!(stfact_check(1, 2, 1, 1).unwrap().equal);
    assert!(stfact_check(-2, 3, 2, 12).unwrap().equal);
    assert!(stfact_check(-3, -2, 3, 15).unwrap().equal);
    assert!(stfact_check(0, 2, 1, 5).is_err());
}

fn relation_holds(r: &std::collections::BTreeMap<i64, LaurentPoly2>, p: ClusterParams, k: i64) -> bool {
    let e = if k.rem_euclid(2) == 1 { p.b } else { p.c };
    &r[&(k + 1)] * &r[&(k - 1)] == &r[&k].pow(e as u32) + &LaurentPoly2::one()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn exchange_relation_and_positivity(b in 1i64..=3, c in 1i64..=3) {
        let p = ClusterParams::new(b, c).unwrap();
        let r = xvar_range(-3, 6, p).unwrap();
        for k in -2..=5 {
            prop_assert!(relation_holds(&r, p, k));
        }
        for x in r.values() {
            prop_assert!(x.min_coeff().is_some_and(|m| m > &BigInt::from(0)));
        }
    }

    #[test]
    fn identity_sweep(m in 0i64..=8, nn in -5i64..=5, (c, e1) in (2i64..=4).prop_flat_map(|c| (Just(c), 0..c)), e2 in 0i64..=4) {
        let v = binomial_identity_check(m, nn, c, e1, e2).unwrap();
        prop_assert!(v.equal, "{:?}", v);
    }

    #[test]
    fn series_sweep(a in (-4i64..=4).prop_filter("nonzero", |a| *a != 0), b in -4i64..=4, order in 1u32..=4, trunc in 12u32..=16) {
        let v = stfact_check(a, b, order, trunc).unwrap();
        prop_assert!(v.equal, "{:?}", v);
        prop_assert!(v.compared > 0);
    }
}
