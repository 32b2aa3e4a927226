//! Truncated Laurent series in one variable `y`, and the two identities that
//! link the strip formulas.
//!
//! A series is either expanded at `y = 0` (exponents increase, everything
//! below the precision is exact) or at `y = infinity` (exponents decrease,
//! everything above the precision is exact). `(1 + y^A)^B` with `B < 0` is
//! expanded at zero when `A > 0` and at infinity when `A < 0`.
//!
//! Truncation algebra, for orientation at zero (mirror everything for
//! infinity, swapping min/max and lowest/highest exponent):
//!
//! * `prec(f + g) = min(prec f, prec g)`
//! * `prec(f g) = min(prec f + val g, prec g + val f)`, `val` the lowest
//!   exponent present
//! * `prec(f') = prec f - 1`
//!
//! An exact series has no precision and is a Laurent polynomial.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::strip::expanded_rhs;
use crate::combinatorics::{compositions_positive, factorial, generalized_binom, mod_binom};
use crate::ring::BigRat;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    AtZero,
    AtInfinity,
}

impl Orientation {
    fn of(a: i64) -> Orientation {
        if a > 0 {
            Orientation::AtZero
        } else {
            Orientation::AtInfinity
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    orientation: Orientation,
    coeffs: BTreeMap<i64, BigRat>,
    prec: Option<i64>,
}

impl TruncatedSeries {
    pub fn zero(orientation: Orientation) -> Self {
        TruncatedSeries {
            orientation,
            coeffs: BTreeMap::new(),
            prec: None,
        }
    }

    /// Exact `c y^e`.
    pub fn monomial(orientation: Orientation, e: i64, c: BigRat) -> Self {
        let mut s = TruncatedSeries::zero(orientation);
        if !c.is_zero() {
            s.coeffs.insert(e, c);
        }
        s
    }

    /// `(1 + y^a)^b`. Exact when `b >= 0`; otherwise the binomial series with
    /// `terms + 1` terms, oriented by the sign of `a`.
    pub fn binomial_power(a: i64, b: i64, terms: u32) -> Result<Self> {
        if a == 0 {
            return Err(Error::PreconditionViolated("exponent A must be nonzero".into()));
        }
        let mut s = TruncatedSeries::zero(Orientation::of(a));
        let top = if b >= 0 { b } else { i64::from(terms) };
        for k in 0..=top {
            s.add_term(a * k, BigRat::from(generalized_binom(b, k)));
        }
        if b < 0 {
            s.prec = Some(a * (i64::from(terms) + 1));
        }
        Ok(s)
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn precision(&self) -> Option<i64> {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    pub fn coeff(&self, e: i64) -> BigRat {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRat)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// Whether the coefficient of `y^e` is known.
    pub fn knows(&self, e: i64) -> bool {
        match (self.prec, self.orientation) {
            (None, _) => true,
            (Some(p), Orientation::AtZero) => e < p,
            (Some(p), Orientation::AtInfinity) => e > p,
        }
    }

    fn add_term(&mut self, e: i64, c: BigRat) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    fn drop_unknown(&mut self) {
        if self.prec.is_some() {
            let keep: Vec<i64> = self.coeffs.keys().copied().filter(|&e| !self.knows(e)).collect();
            for e in keep {
                self.coeffs.remove(&e);
            }
        }
    }

    /// Lowest exponent at zero, highest at infinity.
    fn valuation(&self) -> Option<i64> {
        match self.orientation {
            Orientation::AtZero => self.coeffs.keys().next().copied(),
            Orientation::AtInfinity => self.coeffs.keys().next_back().copied(),
        }
    }

    fn tighter(&self, a: Option<i64>, b: Option<i64>) -> Option<i64> {
        match (a, b) {
            (None, x) | (x, None) => x,
            (Some(x), Some(y)) => Some(match self.orientation {
                Orientation::AtZero => x.min(y),
                Orientation::AtInfinity => x.max(y),
            }),
        }
    }

    fn check_orientation(&self, other: &Self) -> Result<()> {
        let mixed = self.orientation != other.orientation && !(self.is_exact() && other.is_exact());
        if mixed {
            return Err(Error::PreconditionViolated(
                "series expanded at different points".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_orientation(other)?;
        let orientation = if self.is_exact() {
            other.orientation
        } else {
            self.orientation
        };
        let mut out = TruncatedSeries {
            orientation,
            coeffs: self.coeffs.clone(),
            prec: None,
        };
        out.prec = out.tighter(self.prec, other.prec);
        for (e, c) in &other.coeffs {
            out.add_term(*e, c.clone());
        }
        out.drop_unknown();
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_orientation(other)?;
        let orientation = if self.is_exact() {
            other.orientation
        } else {
            self.orientation
        };
        let mut out = TruncatedSeries::zero(orientation);
        let (va, vb) = (self.valuation(), other.valuation());
        if va.is_none() || vb.is_none() {
            // A product with a zero series is zero, but only as far as the
            // other factor is known; with nothing present the bound is loose.
            out.prec = out.tighter(self.prec, other.prec);
            return Ok(out);
        }
        let pa = self.prec.map(|p| p + vb.expect("nonzero"));
        let pb = other.prec.map(|p| p + va.expect("nonzero"));
        out.prec = out.tighter(pa, pb);
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                let e = ea + eb;
                if out.knows(e) {
                    out.add_term(e, ca * cb);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        let mut out = TruncatedSeries::zero(self.orientation);
        out.prec = self.prec;
        for (e, v) in &self.coeffs {
            out.add_term(*e, v * c);
        }
        out
    }

    pub fn derivative(&self) -> Self {
        let mut out = TruncatedSeries::zero(self.orientation);
        out.prec = self.prec.map(|p| p - 1);
        for (e, v) in &self.coeffs {
            out.add_term(e - 1, v * &BigRat::from(*e));
        }
        out
    }
}

/// Outcome of comparing two expressions that should agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityVerdict {
    pub equal: bool,
    pub lhs: BigRat,
    pub rhs: BigRat,
}

/// The coefficient identity behind the expanded strip formula, with
/// `a_{n-2}, a_{n-3}` replaced by free integers `m, nn`:
///
/// `sum_i C(nn, i) [m - c i; m - c i - e2] [c e2 - nn; c e2 - nn - e1 + i]`
/// equals [`crate::cluster::chi_expanded`]'s right side. The left sum stops at
/// `i = e1`, past which the last factor vanishes.
pub fn binomial_identity_check(m: i64, nn: i64, c: i64, e1: i64, e2: i64) -> Result<IdentityVerdict> {
    if e2 < 0 || e1 < 0 || c < 1 {
        return Err(Error::PreconditionViolated(format!(
            "need e1, e2 >= 0 and c >= 1, got e1 = {e1}, e2 = {e2}, c = {c}"
        )));
    }
    let mut lhs = BigInt::zero();
    let last_top = -nn + c * e2;
    for i in 0..=e1 {
        let top = m - c * i;
        lhs += generalized_binom(nn, i) * mod_binom(top, top - e2)? * mod_binom(last_top, last_top - e1 + i)?;
    }
    let rhs = expanded_rhs(m, nn, c, e1, e2);
    Ok(IdentityVerdict {
        equal: lhs == rhs,
        lhs: lhs.into(),
        rhs: rhs.into(),
    })
}

/// Result of the derivative identity check on its comparison window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesVerdict {
    pub equal: bool,
    /// Exponents compared, as an inclusive range.
    pub window: (i64, i64),
    /// Coefficients compared, zeros included.
    pub compared: usize,
    /// First exponent where the sides differ, with both coefficients.
    pub mismatch: Option<(i64, BigRat, BigRat)>,
}

/// `d^k/dy^k (1+y^A)^B` against
/// `k! sum_{i=1}^k sum_{j_1+..+j_i=k} [B; B-i] (1+y^A)^{B-i} prod [A; A-j] y^{A i - k}`,
/// both as truncated series with `trunc` binomial terms, compared on every
/// exponent both sides know and that lies on the near side of `y^{-k}`.
pub fn stfact_check(a: i64, b: i64, order: u32, trunc: u32) -> Result<SeriesVerdict> {
    if order == 0 {
        return Err(Error::PreconditionViolated(
            "derivative order must be positive".into(),
        ));
    }
    let k = i64::from(order);
    let mut lhs = TruncatedSeries::binomial_power(a, b, trunc)?;
    for _ in 0..order {
        lhs = lhs.derivative();
    }
    let orientation = lhs.orientation();
    let mut rhs = TruncatedSeries::zero(orientation);
    for i in 1..=k {
        let outer = mod_binom(b, b - i)?;
        if outer.is_zero() {
            continue;
        }
        let mut inner = BigInt::zero();
        for js in compositions_positive(order, i as usize) {
            let mut p = outer.clone();
            for j in js {
                p *= mod_binom(a, a - j as i64)?;
            }
            inner += p;
        }
        if inner.is_zero() {
            continue;
        }
        let power = TruncatedSeries::binomial_power(a, b - i, trunc)?;
        let mono = TruncatedSeries::monomial(orientation, a * i - k, BigRat::from(inner));
        rhs = rhs.add(&power.mul(&mono)?)?;
    }
    let rhs = rhs.scale(&BigRat::from(factorial(u64::from(order))));

    // Every exponent on either side is on the near side of -k.
    let (lo, hi) = match orientation {
        Orientation::AtZero => {
            let p = lhs.tighter(lhs.prec, rhs.prec);
            let hi = match p {
                Some(p) => p - 1,
                None => extreme(&lhs, &rhs, true).unwrap_or(-k),
            };
            (-k, hi)
        }
        Orientation::AtInfinity => {
            let p = lhs.tighter(lhs.prec, rhs.prec);
            let lo = match p {
                Some(p) => p + 1,
                None => extreme(&lhs, &rhs, false).unwrap_or(-k),
            };
            (lo, -k)
        }
    };
    if lo > hi {
        return Err(Error::TruncationTooSmall);
    }
    let mut exps: Vec<i64> = lhs.coeffs.keys().chain(rhs.coeffs.keys()).copied().collect();
    exps.sort_unstable();
    exps.dedup();
    if exps
        .iter()
        .any(|&e| (e < lo || e > hi) && lhs.knows(e) && rhs.knows(e))
    {
        return Err(Error::AssertionFailure(
            "series term outside the comparison window".into(),
        ));
    }
    let mut mismatch = None;
    for e in lo..=hi {
        let (l, r) = (lhs.coeff(e), rhs.coeff(e));
        if l != r {
            mismatch = Some((e, l, r));
            break;
        }
    }
    let compared = (hi - lo + 1) as usize;
    Ok(SeriesVerdict {
        equal: mismatch.is_none(),
        window: (lo, hi),
        compared,
        mismatch,
    })
}

fn extreme(a: &TruncatedSeries, b: &TruncatedSeries, max: bool) -> Option<i64> {
    let it = a.coeffs.keys().chain(b.coeffs.keys()).copied();
    if max {
        it.max()
    } else {
        it.min()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_derivative() {
        let v = stfact_check(1, 2, 1, 1).unwrap();
        assert!(v.equal);
        assert_eq!(v.window, (-1, 1));
    }

    #[test]
    fn spec_style_points() {
        assert!(stfact_check(-2, 3, 2, 12).unwrap().equal);
        let v = stfact_check(-3, -2, 3, 15).unwrap();
        assert!(v.equal);
        assert!(v.compared > 10);
        assert!(stfact_check(2, -3, 4, 12).unwrap().equal);
    }

    #[test]
    fn truncation_algebra() {
        let f = TruncatedSeries::binomial_power(1, -1, 4).unwrap();
        assert_eq!(f.precision(), Some(5));
        let g = f.mul(&TruncatedSeries::binomial_power(1, 1, 0).unwrap()).unwrap();
        // (1+y)^-1 (1+y) = 1 up to y^4.
        assert_eq!(g.precision(), Some(5));
        assert_eq!(g.terms().count(), 1);
        assert_eq!(f.derivative().precision(), Some(4));
        let h = TruncatedSeries::binomial_power(-2, -1, 3).unwrap();
        assert_eq!(h.orientation(), Orientation::AtInfinity);
        assert_eq!(h.precision(), Some(-8));
        assert!(h.knows(-6) && !h.knows(-8));
    }

    #[test]
    fn mixed_orientations_rejected() {
        let f = TruncatedSeries::binomial_power(1, -1, 4).unwrap();
        let g = TruncatedSeries::binomial_power(-1, -1, 4).unwrap();
        assert!(f.mul(&g).is_err());
    }

    #[test]
    fn identity_points() {
        let v = binomial_identity_check(1, 0, 2, 1, 1).unwrap();
        assert!(v.equal);
        assert_eq!(v.lhs, BigRat::from(2));
        for e1 in 0..3 {
            assert!(binomial_identity_check(4, -2, 3, e1, 0).unwrap().equal);
        }
        assert!(binomial_identity_check(7, 5, 3, 2, 4).unwrap().equal);
        assert!(binomial_identity_check(0, -5, 4, 3, 3).unwrap().equal);
    }
}
