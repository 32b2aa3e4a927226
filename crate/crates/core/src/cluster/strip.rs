//! Routes valid on the strip `e1 < c`, `n >= 4`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::closed::Setup;
use crate::combinatorics::{
    binom, compositions_positive, enumerate_bounded_compositions, factorial, generalized_binom, mod_binom,
};
use crate::ecpoly::ec_eval_bridge_point;
use crate::ring::BigRat;
use crate::{Error, Result};

fn strip_setup(n: i64, c: i64, e1: i64, e2: i64) -> Result<Setup> {
    let s = Setup::new(n, c, 4)?;
    if e1 < 0 || e2 < 0 || e1 >= c {
        return Err(Error::PreconditionViolated(format!(
            "need 0 <= e1 < c and e2 >= 0, got e1 = {e1}, e2 = {e2}, c = {c}"
        )));
    }
    Ok(s)
}

/// Single sum over `t = t_{n-4}`: the closed form after every other `t_i`
/// is forced to zero by `e1 < c`.
pub fn chi_small_e1(n: i64, c: i64, e1: i64, e2: i64) -> Result<BigInt> {
    let s = strip_setup(n, c, e1, e2)?;
    let (_, d2, d3) = s.dims();
    let mut acc = BigInt::zero();
    for t in 0..=e1.min(d3) {
        let top = d2 - c * t;
        // Admissibility 0 <= a_{n-2} - c t - e2; the modified binomial alone
        // would not vanish here when `top` is negative.
        if top - e2 < 0 {
            continue;
        }
        let last_top = -d3 + c * e2;
        acc += mod_binom(d3, t)? * mod_binom(top, top - e2)? * mod_binom(last_top, last_top - e1 + t)?;
    }
    Ok(acc)
}

/// `F[i][k] = sum over compositions j_1+..+j_i = k (j >= 1) of
/// prod C(-c, j)`, for `i, k <= kmax`.
fn composition_weights(c: i64, kmax: usize) -> Vec<Vec<BigInt>> {
    let g: Vec<BigInt> = (0..=kmax as i64).map(|j| generalized_binom(-c, j)).collect();
    let mut f = vec![vec![BigInt::zero(); kmax + 1]; kmax + 1];
    f[0][0] = BigInt::one();
    for i in 1..=kmax {
        for k in i..=kmax {
            let mut acc = BigInt::zero();
            for j in 1..=k - (i - 1) {
                if !f[i - 1][k - j].is_zero() {
                    acc += &g[j] * &f[i - 1][k - j];
                }
            }
            f[i][k] = acc;
        }
    }
    f
}

/// The expanded strip formula with `a_{n-2}, a_{n-3}` replaced by free
/// integers `m, nn`:
/// `C(c e2, e1) C(m, e2) + sum_{k, i} C(nn, i) C(c e2 - i, e1 - i) F(i, k) C(m, e2 - k)`.
pub(crate) fn expanded_rhs(m: i64, nn: i64, c: i64, e1: i64, e2: i64) -> BigInt {
    let kmax = e2.max(0) as usize;
    let f = composition_weights(c, kmax);
    let mut acc = generalized_binom(c * e2, e1) * generalized_binom(m, e2);
    for k in 1..=e2 {
        for i in 1..=k {
            let fk = &f[i as usize][k as usize];
            if fk.is_zero() {
                continue;
            }
            let b = binom((c * e2 - i) as u64, e1 - i);
            if b.is_zero() {
                continue;
            }
            acc += generalized_binom(nn, i) * b * fk * generalized_binom(m, e2 - k);
        }
    }
    acc
}

/// Expanded form of the strip sum; composition weights come from a DP over
/// the number of parts.
pub fn chi_expanded(n: i64, c: i64, e1: i64, e2: i64) -> Result<BigInt> {
    let s = strip_setup(n, c, e1, e2)?;
    let (_, d2, d3) = s.dims();
    Ok(expanded_rhs(d2, d3, c, e1, e2))
}

/// [`chi_expanded`] with every composition enumerated; the oracle for the DP.
pub fn chi_expanded_literal(n: i64, c: i64, e1: i64, e2: i64) -> Result<BigInt> {
    let s = strip_setup(n, c, e1, e2)?;
    let (_, d2, d3) = s.dims();
    let mut acc = binom((c * e2) as u64, e1) * binom(d2 as u64, e2);
    for k in 1..=e2 {
        for i in 1..=k {
            let outer = binom(d3 as u64, i) * binom((c * e2 - i) as u64, e1 - i) * binom(d2 as u64, e2 - k);
            if outer.is_zero() {
                continue;
            }
            for js in compositions_positive(k as u32, i as usize) {
                let mut term = outer.clone();
                for j in js {
                    term *= mod_binom(-c, -c - j as i64)?;
                }
                acc += term;
            }
        }
    }
    Ok(acc)
}

/// `(1/(e2!)^2) sum_{z_1+..+z_e2 = e1} prod C(c, z_i) EC_e2(z; -a_{n-2}, -a_{n-3}, c)`.
///
/// For `e2 = 0` the sum has the single empty composition when `e1 = 0` and
/// none otherwise, with `EC_0 = 1`; the value is `1` or `0`.
pub fn ec_bridge(n: i64, c: i64, e1: i64, e2: i64) -> Result<BigRat> {
    let s = strip_setup(n, c, e1, e2)?;
    let (_, d2, d3) = s.dims();
    if e2 == 0 {
        return Ok(BigRat::from(i64::from(e1 == 0)));
    }
    let m = e2 as usize;
    let mut acc = BigRat::zero();
    for z in enumerate_bounded_compositions(e1 as u32, m, c as u32) {
        let weight: BigInt = z.iter().map(|&zi| binom(c as u64, zi as i64)).product();
        let zs: Vec<i64> = z.iter().map(|&zi| zi as i64).collect();
        acc += BigRat::from(weight) * ec_eval_bridge_point(m, &zs, -d2, -d3, c)?;
    }
    let f = factorial(m as u64);
    acc.checked_div(&BigRat::from(&f * &f))
}

#[cfg(test)]
mod tests {
    use super::super::chi_from_recurrence;
    use super::*;

    #[test]
    fn c2_n4_cell() {
        assert_eq!(chi_small_e1(4, 2, 1, 1).unwrap(), BigInt::from(2));
        assert_eq!(chi_expanded(4, 2, 1, 1).unwrap(), BigInt::from(2));
        assert_eq!(ec_bridge(4, 2, 1, 1).unwrap(), BigRat::from(2));
    }

    #[test]
    fn strip_routes_match_recurrence() {
        for (n, c) in [(4, 2), (5, 2), (6, 2), (4, 3), (5, 3), (6, 3), (5, 4)] {
            let t = chi_from_recurrence(n, c).unwrap();
            let (_, d2) = t.dim_vector().unwrap();
            for e2 in 0..=d2 {
                for e1 in 0..c {
                    let want = t.get(e1, e2);
                    assert_eq!(
                        chi_small_e1(n, c, e1, e2).unwrap(),
                        want,
                        "n={n} c={c} ({e1},{e2})"
                    );
                    assert_eq!(chi_expanded(n, c, e1, e2).unwrap(), want);
                    if e2 <= 4 {
                        assert_eq!(chi_expanded_literal(n, c, e1, e2).unwrap(), want);
                    }
                }
            }
        }
    }

    #[test]
    fn empty_sum_at_e2_zero() {
        for e1 in 0..3 {
            let want = BigInt::from(i64::from(e1 == 0));
            assert_eq!(chi_expanded(5, 3, e1, 0).unwrap(), want);
            assert_eq!(ec_bridge(5, 3, e1, 0).unwrap(), BigRat::from(want));
        }
    }

    #[test]
    fn bridge_small_range() {
        for (n, c) in [(4, 2), (5, 3)] {
            for e2 in 0..=3 {
                for e1 in 0..c {
                    let want = BigRat::from(chi_expanded(n, c, e1, e2).unwrap());
                    assert_eq!(ec_bridge(n, c, e1, e2).unwrap(), want, "n={n} c={c} ({e1},{e2})");
                }
            }
        }
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            chi_small_e1(4, 2, 2, 1),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(chi_expanded(3, 2, 0, 0).is_err());
        assert!(ec_bridge(5, 3, 3, 1).is_err());
    }
}
