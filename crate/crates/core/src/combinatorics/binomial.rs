use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Result};

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Standard binomial `C(n, k)`; zero when `k < 0` or `k > n`.
pub fn binom(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Generalized binomial `C(a, k) = a (a-1) ... (a-k+1) / k!` for any integer
/// `a`; zero when `k < 0`.
pub fn generalized_binom(a: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

/// Modified binomial `[A; B]`:
/// `prod_{i=0}^{A-B-1} (A-i)/(A-B-i)` when `A > B`, 1 when `A = B`, 0 when
/// `A < B`. Numerator and denominator are accumulated separately and divided
/// once.
pub fn mod_binom(a: i64, b: i64) -> Result<BigInt> {
    if a < b {
        return Ok(BigInt::zero());
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..(a - b) {
        num *= a - i;
        den *= a - b - i;
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::NonIntegerResult { a, b });
    }
    Ok(q)
}

/// Memoized generalized binomials for hot loops. Rows of Pascal's triangle
/// are built on first use; `C(a, k)` for negative `a` is read from row
/// `k - a - 1` with sign `(-1)^k`. Safe to share between threads.
#[derive(Default)]
pub struct BinomialTable {
    rows: RwLock<HashMap<u64, Arc<Vec<BigInt>>>>,
}

impl BinomialTable {
    pub fn new() -> Self {
        BinomialTable::default()
    }

    fn row(&self, n: u64) -> Arc<Vec<BigInt>> {
        if let Some(r) = self.rows.read().expect("poisoned").get(&n) {
            return Arc::clone(r);
        }
        let mut row = Vec::with_capacity(n as usize + 1);
        let mut c = BigInt::one();
        row.push(c.clone());
        for k in 0..n {
            c = c * (n - k) / (k + 1);
            row.push(c.clone());
        }
        let row = Arc::new(row);
        self.rows
            .write()
            .expect("poisoned")
            .entry(n)
            .or_insert_with(|| Arc::clone(&row));
        row
    }

    /// Generalized `C(a, k)`.
    pub fn choose(&self, a: i64, k: i64) -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        if a >= 0 {
            if k > a {
                return BigInt::zero();
            }
            return self.row(a as u64)[k as usize].clone();
        }
        let v = self.row((k - a - 1) as u64)[k as usize].clone();
        if k % 2 == 0 {
            v
        } else {
            -v
        }
    }

    /// `[A; B] = C(A, A - B)` for `A >= B`, zero otherwise.
    pub fn modified(&self, a: i64, b: i64) -> BigInt {
        if a < b {
            BigInt::zero()
        } else {
            self.choose(a, a - b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_examples() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(3, 5), BigInt::zero());
        assert_eq!(binom(4, 0), BigInt::one());
        assert_eq!(binom(4, -1), BigInt::zero());
    }

    #[test]
    fn modified_examples() {
        assert_eq!(mod_binom(5, 2).unwrap(), BigInt::from(10));
        assert_eq!(mod_binom(3, 3).unwrap(), BigInt::one());
        assert_eq!(mod_binom(2, 5).unwrap(), BigInt::zero());
        assert_eq!(mod_binom(-2, -3).unwrap(), BigInt::from(-2));
    }

    #[test]
    fn table_matches_direct() {
        let t = BinomialTable::new();
        for a in -15..=15 {
            for k in -2..=20 {
                assert_eq!(t.choose(a, k), generalized_binom(a, k), "C({a}, {k})");
            }
            for b in -20..=20 {
                assert_eq!(t.modified(a, b), mod_binom(a, b).unwrap(), "[{a}; {b}]");
            }
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(7), BigInt::from(5040));
    }
}
