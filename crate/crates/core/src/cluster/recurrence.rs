use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::ClusterParams;
use crate::combinatorics::ASequence;
use crate::ring::LaurentPoly2;
use crate::{Error, Result};

fn exponent(k: i64, p: ClusterParams) -> u32 {
    if k.rem_euclid(2) == 1 {
        p.b as u32
    } else {
        p.c as u32
    }
}

/// Cluster variables `x_lo..=x_hi` (the range always contains 1 and 2),
/// from `x_{k+1} x_{k-1} = x_k^{b or c} + 1` run forwards and backwards from
/// the seeds. Every division must be exact.
pub fn xvar_range(lo: i64, hi: i64, p: ClusterParams) -> Result<BTreeMap<i64, LaurentPoly2>> {
    let mut out = BTreeMap::new();
    out.insert(1, LaurentPoly2::x1());
    out.insert(2, LaurentPoly2::x2());
    let one = LaurentPoly2::one();
    for k in 2..hi {
        let num = &out[&k].pow(exponent(k, p)) + &one;
        let next = num.exact_divide(&out[&(k - 1)])?;
        out.insert(k + 1, next);
    }
    for k in (lo + 1..=1).rev() {
        // x_{k-1} = (x_k^{e(k)} + 1) / x_{k+1}
        let num = &out[&k].pow(exponent(k, p)) + &one;
        let prev = num.exact_divide(&out[&(k + 1)])?;
        out.insert(k - 1, prev);
    }
    out.retain(|&k, _| k >= lo && k <= hi);
    Ok(out)
}

/// The cluster variable `x_m` as a Laurent polynomial in the seeds.
pub fn xvar_recurrence(m: i64, p: ClusterParams) -> Result<LaurentPoly2> {
    let mut r = xvar_range(m.min(1), m.max(2), p)?;
    Ok(r.remove(&m).expect("in range"))
}

/// Euler characteristics `chi(Gr_(e1,e2)(M(n)))` for one `(n, c)`; zero
/// entries are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiTable {
    pub n: i64,
    pub c: i64,
    pub entries: BTreeMap<(i64, i64), BigInt>,
}

impl ChiTable {
    pub fn new(n: i64, c: i64) -> Self {
        ChiTable {
            n,
            c,
            entries: BTreeMap::new(),
        }
    }

    pub fn get(&self, e1: i64, e2: i64) -> BigInt {
        self.entries.get(&(e1, e2)).cloned().unwrap_or_default()
    }

    pub fn insert(&mut self, e1: i64, e2: i64, v: BigInt) {
        if v.is_zero() {
            self.entries.remove(&(e1, e2));
        } else {
            self.entries.insert((e1, e2), v);
        }
    }

    /// `(a_{n-1}, a_{n-2})`, the dimension vector of `M(n)`.
    pub fn dim_vector(&self) -> Result<(i64, i64)> {
        let a = ASequence::new(self.c, self.n)?;
        Ok((a.get(self.n - 1), a.get(self.n - 2)))
    }

    /// Laurent exponent of the cell `(e1, e2)`:
    /// `(c (a_{n-2} - e2) - a_{n-1}, c e1 - a_{n-2})`.
    pub fn exponent_of(&self, e1: i64, e2: i64) -> Result<(i64, i64)> {
        let (d1, d2) = self.dim_vector()?;
        Ok((self.c * (d2 - e2) - d1, self.c * e1 - d2))
    }

    /// Inverse of [`ChiTable::exponent_of`].
    pub fn cell_of(&self, p1: i64, p2: i64) -> Result<(i64, i64)> {
        let (d1, d2) = self.dim_vector()?;
        let bad = || Error::BookkeepingMismatch { p1, p2 };
        let (n1, n2) = (p1 + d1, p2 + d2);
        if n1 % self.c != 0 || n2 % self.c != 0 {
            return Err(bad());
        }
        let (e1, e2) = (n2 / self.c, d2 - n1 / self.c);
        if e1 < 0 || e2 < 0 {
            return Err(bad());
        }
        Ok((e1, e2))
    }

    /// `x_n = x1^{-a_{n-1}} x2^{-a_{n-2}} sum chi x1^{c(a_{n-2}-e2)} x2^{c e1}`.
    pub fn to_laurent(&self) -> Result<LaurentPoly2> {
        let mut out = LaurentPoly2::zero();
        for (&(e1, e2), v) in &self.entries {
            let (p1, p2) = self.exponent_of(e1, e2)?;
            out.add_term(p1, p2, v.clone());
        }
        Ok(out)
    }
}

/// Reads the Euler characteristics off the Laurent coefficients of `x_n`.
pub fn chi_from_laurent(n: i64, c: i64, x: &LaurentPoly2) -> Result<ChiTable> {
    let mut t = ChiTable::new(n, c);
    for ((p1, p2), v) in x.terms() {
        let (e1, e2) = t.cell_of(p1, p2)?;
        t.insert(e1, e2, v.clone());
    }
    Ok(t)
}

/// [`ChiTable`] from the recurrence oracle.
pub fn chi_from_recurrence(n: i64, c: i64) -> Result<ChiTable> {
    let p = ClusterParams::equal(c)?;
    if n < 3 {
        return Err(Error::PreconditionViolated(format!("need n >= 3, got {n}")));
    }
    chi_from_laurent(n, c, &xvar_recurrence(n, p)?)
}

/// True when every coefficient is positive.
pub fn is_positive(x: &LaurentPoly2) -> bool {
    x.terms().all(|(_, v)| v > &BigInt::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn lp(s: &str) -> LaurentPoly2 {
        s.parse().unwrap()
    }

    #[test]
    fn seeds_and_first_steps() {
        let p = ClusterParams::new(2, 2).unwrap();
        assert_eq!(xvar_recurrence(1, p).unwrap(), LaurentPoly2::x1());
        assert_eq!(xvar_recurrence(2, p).unwrap(), LaurentPoly2::x2());
        assert_eq!(xvar_recurrence(3, p).unwrap(), lp("1*x1^-1*x2^2 + 1*x1^-1"));
        let x4 = lp("1*x1^-2*x2^3 + 2*x1^-2*x2^1 + 1*x1^-2*x2^-1 + 1*x2^-1");
        assert_eq!(xvar_recurrence(4, p).unwrap(), x4);
    }

    #[test]
    fn backwards_matches_relation() {
        let p = ClusterParams::new(1, 3).unwrap();
        let r = xvar_range(-3, 4, p).unwrap();
        for k in -2..=3 {
            let lhs = &r[&(k + 1)] * &r[&(k - 1)];
            let rhs = &r[&k].pow(exponent(k, p)) + &LaurentPoly2::one();
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn finite_type_is_periodic() {
        // b c = 1: period 5.
        let p = ClusterParams::new(1, 1).unwrap();
        let r = xvar_range(-4, 8, p).unwrap();
        assert_eq!(r[&6], LaurentPoly2::x1());
        assert_eq!(r[&7], LaurentPoly2::x2());
        assert_eq!(r[&-4], LaurentPoly2::x1());
    }

    #[test]
    fn c2_n4_table() {
        let t = chi_from_recurrence(4, 2).unwrap();
        let want: Vec<((i64, i64), i64)> = vec![((0, 0), 1), ((0, 1), 1), ((1, 1), 2), ((2, 1), 1)];
        let got: Vec<((i64, i64), i64)> = t
            .entries
            .iter()
            .map(|(k, v)| (*k, i64::try_from(v).unwrap()))
            .collect();
        assert_eq!(got, want);
        assert_eq!(
            t.to_laurent().unwrap(),
            xvar_recurrence(4, ClusterParams::new(2, 2).unwrap()).unwrap()
        );
    }

    #[test]
    fn bookkeeping_rejects_off_lattice() {
        let t = ChiTable::new(4, 2);
        assert!(matches!(t.cell_of(-1, 0), Err(Error::BookkeepingMismatch { .. })));
    }

    #[test]
    fn corners_are_one() {
        for c in 2..=4 {
            for n in 3..=6 {
                let t = chi_from_recurrence(n, c).unwrap();
                let (d1, d2) = t.dim_vector().unwrap();
                assert_eq!(t.get(0, 0), BigInt::one());
                assert_eq!(t.get(d1, d2), BigInt::one());
            }
        }
    }
}
