use ec_core::combinatorics::enumerate_permutations;
use ec_core::ecpoly::{check_symmetry, ec_poly, ec_poly_cached, ec_poly_literal};
use ec_core::ring::{BigRat, ParamPoly};
use ec_core::symfunc::{expand, Basis};

fn pp(s: &str) -> ParamPoly {
    s.parse().unwrap()
}

fn check_table(n: usize, basis: Basis, table: &[(&[u32], &str)]) {
    let ec = ec_poly(n).unwrap();
    let exp = expand(ec.poly(), basis).unwrap();
    assert_eq!(exp.coeffs.len(), table.len(), "{basis} support for n = {n}");
    for (parts, want) in table {
        assert_eq!(exp.coeff_of(parts), pp(want), "{basis} coefficient at {parts:?}");
    }
}

#[test]
fn ec1_is_linear() {
    let ec = ec_poly(1).unwrap();
    assert_eq!(ec.to_string(), "-1*q^1 + 1*t^1*z1^1");
}

#[test]
fn ec2_monomial_expansion() {
    check_table(
        2,
        Basis::Monomial,
        &[
            (&[2], "-1*t^1*r^1"),
            (&[1, 1], "2*t^2 + 2*t^1*r^1"),
            (&[1], "-2*q^1*t^1 + -1*t^1"),
            (&[], "2*q^2 + 2*q^1"),
        ],
    );
}

#[test]
fn ec3_monomial_expansion() {
    check_table(
        3,
        Basis::Monomial,
        &[
            (&[3], "2*t^1*r^2"),
            (&[2, 1], "-3*t^2*r^1 + -3*t^1*r^2"),
            (&[1, 1, 1], "6*t^3 + 18*t^2*r^1 + 12*t^1*r^2"),
            (&[2], "6*q^1*t^1*r^1 + 6*t^1*r^1"),
            (&[1, 1], "-6*q^1*t^2 + -6*q^1*t^1*r^1 + -6*t^2 + -6*t^1*r^1"),
            (&[1], "6*q^2*t^1 + 12*q^1*t^1 + 4*t^1"),
            (&[], "-6*q^3 + -18*q^2 + -12*q^1"),
        ],
    );
}

#[test]
fn ec3_schur_expansion() {
    // The constant is -6q^3 - 18q^2 - 12q, as in the monomial table; a
    // bare -12 would contradict the constant term of EC_3 itself.
    check_table(
        3,
        Basis::Schur,
        &[
            (&[3], "2*t^1*r^2"),
            (&[2, 1], "-3*t^2*r^1 + -5*t^1*r^2"),
            (&[1, 1, 1], "6*t^3 + 24*t^2*r^1 + 20*t^1*r^2"),
            (&[2], "6*q^1*t^1*r^1 + 6*t^1*r^1"),
            (&[1, 1], "-6*q^1*t^2 + -12*q^1*t^1*r^1 + -6*t^2 + -12*t^1*r^1"),
            (&[1], "6*q^2*t^1 + 12*q^1*t^1 + 4*t^1"),
            (&[], "-6*q^3 + -18*q^2 + -12*q^1"),
        ],
    );
    let ec = ec_poly(3).unwrap();
    assert_eq!(ec.poly().coeff(&[0, 0, 0]), pp("-6*q^3 + -18*q^2 + -12*q^1"));
}

/// `(z, (q, t, r), value)` from an independent evaluator of the definition
/// (direct sum over set partitions and permutations in exact arithmetic).
const ORACLE: &[(&[i64], [i64; 3], &str)] = &[
    (&[-1, 0, -3, 2], [0, -2, -3], "19040"),
    (&[-3, -4, 2, 4], [-1, 3, 3], "7089696"),
    (&[-4, -1, 4, 4], [-1, -1, 3], "-241120"),
    (&[-2, -3, 0, -1], [-3, 3, 2], "1764"),
    (&[0, 1, 4, -4, 3], [3, -2, 2], "-12775680"),
    (&[-4, -2, -3, 1, 3], [3, -2, 0], "-43920"),
    (&[4, -3, -1, -4, -1], [0, -1, -2], "-2187900"),
    (&[2, -2, -3, -2, 3], [-2, -2, -3], "152577120"),
    (&[-3, 3, 0, -4, -4, -2], [2, 1, 0], "10409496"),
    (&[1, 1, -4, 0, 3, -1], [2, 3, 0], "-2356992"),
    (&[4, 4, -3, -1, 4, 0], [2, 3, 1], "-5451546240"),
    (&[-3, 2, 1, -3, 1, 2], [3, -1, 0], "6398592"),
    (&[1, -2, 2, -4, -3, 4, -3], [-1, 1, -3], "729172819200"),
    (&[4, -1, -4, -3, 2, 2, -3], [-2, -3, 1], "147329280"),
    (&[2, -4, -3, -1, -4, 2, -4], [-2, -3, 1], "7245262080"),
    (&[-2, 0, 2, -2, 4, -3, 0], [1, 3, 2], "-459317628000"),
];

#[test]
fn independent_evaluator_points() {
    for (z, [q, t, r], want) in ORACLE {
        let ec = ec_poly_cached(z.len()).unwrap();
        let got = ec.poly().eval_int(z, *q, *t, *r).unwrap();
        assert_eq!(got, want.parse::<BigRat>().unwrap(), "z = {z:?}");
    }
}

#[test]
fn fast_assembly_matches_definition() {
    for n in 1..=5 {
        assert_eq!(
            ec_poly(n).unwrap().poly(),
            &ec_poly_literal(n).unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn symmetric_and_integral_through_six() {
    for n in 1..=6 {
        let ec = ec_poly_cached(n).unwrap();
        assert!(check_symmetry(ec.poly()).is_symmetric(), "n = {n}");
        assert!(ec.poly().is_integral(), "n = {n}");
    }
}

/// `[z^(lambda + delta)] f * prod_{i<j} (z_i - z_j)` is the Schur coefficient
/// of the degree-|lambda| part of a symmetric `f`; no Kostka numbers needed.
fn schur_coeff_by_alternant(n: usize, lambda: &[u32]) -> ParamPoly {
    let f = ec_poly_cached(n).unwrap();
    let target: Vec<i64> = (0..n)
        .map(|i| i64::from(*lambda.get(i).unwrap_or(&0)) + (n - 1 - i) as i64)
        .collect();
    let mut acc = ParamPoly::zero();
    for perm in enumerate_permutations(&(0..n).collect::<Vec<_>>()) {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let exps: Option<Vec<u32>> = (0..n)
            .map(|i| u32::try_from(target[i] - (n - 1 - perm[i]) as i64).ok())
            .collect();
        let Some(exps) = exps else { continue };
        let c = f.poly().coeff(&exps);
        acc = if inversions % 2 == 0 { &acc + &c } else { &acc - &c };
    }
    acc
}

#[test]
fn schur_coefficients_by_alternant() {
    let n = 6;
    let exp = expand(ec_poly_cached(n).unwrap().poly(), Basis::Schur).unwrap();
    for lambda in [&[2, 2, 2][..], &[3, 2, 1], &[1, 1, 1, 1, 1, 1], &[6], &[2, 1]] {
        assert_eq!(
            schur_coeff_by_alternant(n, lambda),
            exp.coeff_of(lambda),
            "{lambda:?}"
        );
    }
    // Three parts, yet nonnegative: the parity rule breaks here.
    assert_eq!(exp.coeff_of(&[2, 2, 2]), pp("120*t^2*r^4 + 120*t^1*r^5"));
}
