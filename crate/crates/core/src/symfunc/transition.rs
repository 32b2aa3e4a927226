use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::tableaux::kostka_content;
use super::Basis;
use crate::combinatorics::{partitions_of, IntPartition};
use crate::ring::BigRat;
use crate::{Error, Result};

/// Partitions of `d` indexing basis `basis` in `n` variables: at most `n`
/// parts for `m` and `s`, parts at most `n` for `e`, `h` and `p`.
pub fn index_set(basis: Basis, n: usize, d: u32) -> Vec<IntPartition> {
    partitions_of(d)
        .into_iter()
        .filter(|l| match basis {
            Basis::Monomial | Basis::Schur => l.len() <= n,
            _ => l.largest_part() as usize <= n,
        })
        .collect()
}

/// Coefficient of `z^mu` in `prod_i f_{lambda_i}` where `f` is `e`, `h` or
/// `p`. Only the support of `mu` matters.
fn product_coeff(
    basis: Basis,
    parts: &[u32],
    rem: &mut Vec<u32>,
    memo: &mut HashMap<(usize, Vec<u32>), BigInt>,
) -> BigInt {
    let Some((&k, rest)) = parts.split_first() else {
        return if rem.iter().all(|&x| x == 0) {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    };
    let mut key_v = rem.clone();
    key_v.sort_unstable();
    let key = (parts.len(), key_v);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut acc = BigInt::zero();
    match basis {
        Basis::Power => {
            for i in 0..rem.len() {
                if rem[i] >= k {
                    rem[i] -= k;
                    acc += product_coeff(basis, rest, rem, memo);
                    rem[i] += k;
                }
            }
        }
        Basis::Elementary | Basis::Homogeneous => {
            let cap = if basis == Basis::Elementary { 1 } else { u32::MAX };
            let mut alpha = vec![0u32; rem.len()];
            spread(0, k, cap, rem, &mut alpha, &mut |r| {
                acc += product_coeff(basis, rest, r, memo);
            });
        }
        _ => unreachable!("product bases only"),
    }
    memo.insert(key, acc.clone());
    acc
}

/// Enumerates `alpha <= rem` with `alpha_i <= cap` and `sum alpha = k`,
/// calling `f` with `rem - alpha`.
fn spread(
    i: usize,
    k: u32,
    cap: u32,
    rem: &mut Vec<u32>,
    alpha: &mut Vec<u32>,
    f: &mut dyn FnMut(&mut Vec<u32>),
) {
    if i == rem.len() {
        if k == 0 {
            f(rem);
        }
        return;
    }
    let hi = rem[i].min(cap).min(k);
    for a in 0..=hi {
        rem[i] -= a;
        alpha[i] = a;
        spread(i + 1, k - a, cap, rem, alpha, f);
        rem[i] += a;
    }
}

/// Coefficient of `m_mu` in the basis element `b_lambda`.
pub fn to_monomial_coeff(basis: Basis, lambda: &IntPartition, mu: &IntPartition) -> BigInt {
    match basis {
        Basis::Monomial => BigInt::from((lambda == mu) as u8),
        Basis::Schur => kostka_content(lambda.parts(), mu.parts()),
        _ => {
            let mut rem = mu.parts().to_vec();
            product_coeff(basis, lambda.parts(), &mut rem, &mut HashMap::new())
        }
    }
}

/// Transition matrix `T[i][j]` = coefficient of `m_{cols[j]}` in
/// `b_{rows[i]}`, for degree `d` in `n` variables.
pub fn transition_matrix(basis: Basis, n: usize, d: u32) -> Vec<Vec<BigInt>> {
    let rows = index_set(basis, n, d);
    let cols = index_set(Basis::Monomial, n, d);
    rows.iter()
        .map(|l| cols.iter().map(|m| to_monomial_coeff(basis, l, m)).collect())
        .collect()
}

/// Exact inverse by Gauss-Jordan elimination.
pub fn invert(m: &[Vec<BigInt>], degree: usize) -> Result<Vec<Vec<BigRat>>> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::SingularTransition { degree });
    }
    let mut a: Vec<Vec<BigRat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRat> = row.iter().cloned().map(BigRat::from_integer).collect();
            r.extend((0..n).map(|j| BigRat::from((i == j) as i64)));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::SingularTransition { degree })?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let (pivot_row, row) = if r < col {
                    let (lo, hi) = a.split_at_mut(col);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = a.split_at_mut(r);
                    (&lo[col], &mut hi[0])
                };
                for (x, p) in row.iter_mut().zip(pivot_row.iter()) {
                    *x -= &f * p;
                }
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// `T^{-1}` for `(basis, n, d)`, cached process-wide.
pub(crate) fn inverse_cached(basis: Basis, n: usize, d: u32) -> Result<Arc<Vec<Vec<BigRat>>>> {
    type Key = (Basis, usize, u32);
    type Inverse = Arc<Vec<Vec<BigRat>>>;
    static CACHE: OnceLock<Mutex<HashMap<Key, Inverse>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (basis, n, d);
    if let Some(v) = cache.lock().expect("poisoned").get(&key) {
        return Ok(Arc::clone(v));
    }
    let inv = Arc::new(invert(&transition_matrix(basis, n, d), d as usize)?);
    Ok(Arc::clone(
        cache.lock().expect("poisoned").entry(key).or_insert(inv),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> IntPartition {
        IntPartition::new(v.to_vec())
    }

    #[test]
    fn degree_two_rows() {
        // e_2 = m_11, e_11 = m_2 + 2 m_11; p_2 = m_2, p_11 = m_2 + 2 m_11;
        // h_2 = m_2 + m_11.
        let c = |b, l: &[u32], m: &[u32]| to_monomial_coeff(b, &p(l), &p(m));
        assert_eq!(c(Basis::Elementary, &[2], &[1, 1]), BigInt::one());
        assert_eq!(c(Basis::Elementary, &[2], &[2]), BigInt::zero());
        assert_eq!(c(Basis::Elementary, &[1, 1], &[1, 1]), BigInt::from(2));
        assert_eq!(c(Basis::Power, &[1, 1], &[2]), BigInt::one());
        assert_eq!(c(Basis::Power, &[1, 1], &[1, 1]), BigInt::from(2));
        assert_eq!(c(Basis::Power, &[2], &[1, 1]), BigInt::zero());
        assert_eq!(c(Basis::Homogeneous, &[2], &[1, 1]), BigInt::one());
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn inverse_round_trip() {
        for basis in [Basis::Schur, Basis::Elementary, Basis::Homogeneous, Basis::Power] {
            for d in 0..=6 {
                let t = transition_matrix(basis, 4, d);
                let inv = invert(&t, d as usize).unwrap();
                for i in 0..t.len() {
                    for j in 0..t.len() {
                        let mut s = BigRat::zero();
                        for k in 0..t.len() {
                            s += BigRat::from_integer(t[i][k].clone()) * &inv[k][j];
                        }
                        assert_eq!(s, BigRat::from((i == j) as i64));
                    }
                }
            }
        }
    }

    #[test]
    fn singular_detected() {
        let m = vec![
            vec![BigInt::one(), BigInt::one()],
            vec![BigInt::one(), BigInt::one()],
        ];
        assert_eq!(invert(&m, 2), Err(Error::SingularTransition { degree: 2 }));
    }
}
