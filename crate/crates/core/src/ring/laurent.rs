use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::grlex_cmp;
use super::param::owned_ops;
use super::text::{parse_terms, write_term};
use super::BigRat;
use crate::{Error, Result};

/// Exponent pair `(pow_x1, pow_x2)`, ordered by [`grlex_cmp`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct LExp(i64, i64);

impl Ord for LExp {
    fn cmp(&self, other: &Self) -> Ordering {
        grlex_cmp(&[self.0, self.1], &[other.0, other.1])
    }
}

impl PartialOrd for LExp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Laurent polynomial in `x1, x2` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<LExp, BigInt>,
}

/// Products with fewer term pairs than this use the sparse schoolbook path.
const KRONECKER_THRESHOLD: usize = 1 << 14;

impl LaurentPoly2 {
    pub fn zero() -> Self {
        LaurentPoly2::default()
    }

    pub fn one() -> Self {
        LaurentPoly2::monomial(0, 0, BigInt::one())
    }

    pub fn x1() -> Self {
        LaurentPoly2::monomial(1, 0, BigInt::one())
    }

    pub fn x2() -> Self {
        LaurentPoly2::monomial(0, 1, BigInt::one())
    }

    pub fn monomial(p1: i64, p2: i64, c: BigInt) -> Self {
        let mut p = LaurentPoly2::zero();
        p.add_term(p1, p2, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `((pow_x1, pow_x2), coeff)` in ascending grlex order.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.terms.iter().map(|(e, c)| ((e.0, e.1), c))
    }

    pub fn coeff(&self, p1: i64, p2: i64) -> BigInt {
        self.terms.get(&LExp(p1, p2)).cloned().unwrap_or_default()
    }

    pub fn min_coeff(&self) -> Option<&BigInt> {
        self.terms.values().min()
    }

    pub fn add_term(&mut self, p1: i64, p2: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(LExp(p1, p2)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn pow(&self, exp: u32) -> LaurentPoly2 {
        let mut base = self.clone();
        let mut acc = LaurentPoly2::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at rational points; zero inputs with negative powers are
    /// rejected.
    pub fn eval(&self, x1: &BigRat, x2: &BigRat) -> Result<BigRat> {
        let pw = |b: &BigRat, e: i64| -> Result<BigRat> {
            if e >= 0 {
                Ok(b.pow(e as u32))
            } else {
                BigRat::one().checked_div(&b.pow((-e) as u32))
            }
        };
        let mut acc = BigRat::zero();
        for (e, c) in &self.terms {
            acc += BigRat::from(c.clone()) * pw(x1, e.0)? * pw(x2, e.1)?;
        }
        Ok(acc)
    }

    fn bounds(&self) -> Option<(i64, i64, i64, i64)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut b = (first.0, first.0, first.1, first.1);
        for e in it {
            b.0 = b.0.min(e.0);
            b.1 = b.1.max(e.0);
            b.2 = b.2.min(e.1);
            b.3 = b.3.max(e.1);
        }
        Some(b)
    }

    /// Sparse schoolbook product.
    pub(crate) fn mul_schoolbook(&self, other: &LaurentPoly2) -> LaurentPoly2 {
        let mut acc: HashMap<(i64, i64), BigInt> = HashMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                *acc.entry((ea.0 + eb.0, ea.1 + eb.1)).or_default() += ca * cb;
            }
        }
        LaurentPoly2 {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((a, b), c)| (LExp(a, b), c))
                .collect(),
        }
    }

    /// Product by Kronecker substitution: both factors are packed into single
    /// big integers with `K`-bit balanced digits, multiplied once, and the
    /// digits unpacked. Exponents are first compressed onto the coarsest
    /// common lattice so zero slots do not inflate the integers.
    pub(crate) fn mul_kronecker(&self, other: &LaurentPoly2) -> LaurentPoly2 {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly2::zero();
        }
        let la = Lattice::of(&[self, other]);
        let a = la.compress(self);
        let b = la.compress(other);
        let width = a.width + b.width - 1;
        let height = a.height + b.height - 1;
        let bits_a = a.max_bits();
        let bits_b = b.max_bits();
        let pairs = a.cells.len().min(b.cells.len()) as u64;
        let k = bits_a + bits_b + (64 - pairs.leading_zeros() as u64) + 2;
        let na = a.pack(k, width);
        let nb = b.pack(k, width);
        let prod = &na * &nb;
        let slots = (width * height) as usize;
        let digits = unpack_balanced(&prod, k, slots);
        let mut out = LaurentPoly2::zero();
        for (idx, d) in digits {
            let (u, v) = ((idx as u64 % width) as i64, (idx as u64 / width) as i64);
            let p1 = a.origin.0 + b.origin.0 + u * la.step.0;
            let p2 = a.origin.1 + b.origin.1 + v * la.step.1;
            out.terms.insert(LExp(p1, p2), d);
        }
        out
    }

    /// Exact quotient `self / den`.
    ///
    /// Runs leading-term division over a dense remainder grid, sweeping
    /// monomials in descending lex order `(pow_x1, pow_x2)`. Every quotient
    /// monomial must lie in the box cut out by the Newton polygons of `self`
    /// and `den`; anything else means the division is not exact.
    pub fn exact_divide(&self, den: &LaurentPoly2) -> Result<LaurentPoly2> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly2::zero());
        }
        if den.len() == 1 {
            let (e, c) = den.terms.iter().next().expect("nonempty");
            let mut out = LaurentPoly2::zero();
            for (ne, nc) in &self.terms {
                let (q, r) = nc.div_rem(c);
                if !r.is_zero() {
                    return Err(Error::InexactDivision);
                }
                out.terms.insert(LExp(ne.0 - e.0, ne.1 - e.1), q);
            }
            return Ok(out);
        }
        let (nmin1, nmax1, nmin2, nmax2) = self.bounds().expect("nonzero");
        let (dmin1, dmax1, dmin2, dmax2) = den.bounds().expect("nonzero");
        let qbox = (nmin1 - dmin1, nmax1 - dmax1, nmin2 - dmin2, nmax2 - dmax2);
        if qbox.0 > qbox.1 || qbox.2 > qbox.3 {
            return Err(Error::InexactDivision);
        }
        let lat = Lattice::of(&[self, den]);
        let num = lat.compress(self);
        let d = lat.compress(den);
        let (w, h) = (num.width as i64, num.height as i64);
        let mut rem: Vec<BigInt> = vec![BigInt::zero(); (w * h) as usize];
        for (&(u, v), c) in &num.cells {
            rem[(u * h + v) as usize] = c.clone();
        }
        // Leading term of den in lex order, in compressed coordinates.
        let (&lead, lead_c) = d.cells.iter().max_by(|x, y| x.0.cmp(y.0)).expect("nonempty");
        let dterms: Vec<((i64, i64), &BigInt)> = d.cells.iter().map(|(k, v)| (*k, v)).collect();
        let mut quot = LaurentPoly2::zero();
        for idx in (0..(w * h)).rev() {
            if rem[idx as usize].is_zero() {
                continue;
            }
            let (u, v) = (idx / h, idx % h);
            // Quotient monomial in compressed coordinates relative to origins.
            let (qu, qv) = (u - lead.0, v - lead.1);
            let p1 = num.origin.0 - d.origin.0 + qu * lat.step.0;
            let p2 = num.origin.1 - d.origin.1 + qv * lat.step.1;
            if p1 < qbox.0 || p1 > qbox.1 || p2 < qbox.2 || p2 > qbox.3 {
                return Err(Error::InexactDivision);
            }
            let (qc, r) = rem[idx as usize].div_rem(lead_c);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for &((du, dv), dc) in &dterms {
                let (tu, tv) = (qu + du, qv + dv);
                if tu < 0 || tu >= w || tv < 0 || tv >= h {
                    return Err(Error::InexactDivision);
                }
                rem[(tu * h + tv) as usize] -= &qc * dc;
            }
            debug_assert!(rem[idx as usize].is_zero());
            quot.terms.insert(LExp(p1, p2), qc);
        }
        Ok(quot)
    }
}

/// Common exponent lattice `origin + step * Z^2` of a set of polynomials.
struct Lattice {
    step: (i64, i64),
}

struct Compressed {
    origin: (i64, i64),
    width: u64,
    height: u64,
    cells: BTreeMap<(i64, i64), BigInt>,
}

impl Lattice {
    fn of(polys: &[&LaurentPoly2]) -> Lattice {
        let (mut g1, mut g2) = (0i64, 0i64);
        for p in polys {
            let (m1, _, m2, _) = p.bounds().expect("nonzero");
            for e in p.terms.keys() {
                g1 = g1.gcd(&(e.0 - m1));
                g2 = g2.gcd(&(e.1 - m2));
            }
        }
        Lattice {
            step: (g1.max(1), g2.max(1)),
        }
    }

    fn compress(&self, p: &LaurentPoly2) -> Compressed {
        let (m1, x1, m2, x2) = p.bounds().expect("nonzero");
        let cells = p
            .terms
            .iter()
            .map(|(e, c)| (((e.0 - m1) / self.step.0, (e.1 - m2) / self.step.1), c.clone()))
            .collect();
        Compressed {
            origin: (m1, m2),
            width: ((x1 - m1) / self.step.0 + 1) as u64,
            height: ((x2 - m2) / self.step.1 + 1) as u64,
            cells,
        }
    }
}

impl Compressed {
    fn max_bits(&self) -> u64 {
        self.cells.values().map(|c| c.bits()).max().unwrap_or(0)
    }

    /// `sum c_{u,v} 2^{k (u + v * row)}` as a signed integer.
    fn pack(&self, k: u64, row: u64) -> BigInt {
        let total_bits = k * row * self.height + 64;
        let nlimbs = total_bits.div_ceil(64) as usize;
        let mut pos = vec![0u64; nlimbs];
        let mut neg = vec![0u64; nlimbs];
        for (&(u, v), c) in &self.cells {
            let offset = k * (u as u64 + v as u64 * row);
            let target = if c.is_negative() { &mut neg } else { &mut pos };
            or_shifted(target, &c.magnitude().to_u64_digits(), offset);
        }
        let p = BigInt::from_biguint(Sign::Plus, BigUint::from_slice(&to_u32(&pos)));
        let n = BigInt::from_biguint(Sign::Plus, BigUint::from_slice(&to_u32(&neg)));
        p - n
    }
}

fn to_u32(limbs: &[u64]) -> Vec<u32> {
    limbs.iter().flat_map(|&l| [l as u32, (l >> 32) as u32]).collect()
}

fn or_shifted(target: &mut [u64], value: &[u64], bit_offset: u64) {
    let word = (bit_offset / 64) as usize;
    let shift = bit_offset % 64;
    for (i, &limb) in value.iter().enumerate() {
        target[word + i] |= limb << shift;
        if shift > 0 {
            target[word + i + 1] |= limb >> (64 - shift);
        }
    }
}

/// Reads `k` bits starting at `bit_offset` from a little-endian limb slice.
fn read_bits(limbs: &[u64], bit_offset: u64, k: u64) -> BigUint {
    let start = (bit_offset / 64) as usize;
    if start >= limbs.len() {
        return BigUint::zero();
    }
    let end = (((bit_offset + k) / 64) as usize + 1).min(limbs.len());
    let window = &limbs[start..end];
    if window.iter().all(|&l| l == 0) {
        return BigUint::zero();
    }
    let v = BigUint::from_slice(&to_u32(window)) >> (bit_offset % 64);
    let mask = (BigUint::one() << k) - BigUint::one();
    v & mask
}

/// Splits a signed integer into `slots` balanced base-`2^k` digits.
fn unpack_balanced(n: &BigInt, k: u64, slots: usize) -> Vec<(usize, BigInt)> {
    let negative = n.is_negative();
    let limbs = n.magnitude().to_u64_digits();
    let half = BigUint::one() << (k - 1);
    let full = BigInt::one() << k;
    let mut carry = false;
    let mut out = Vec::new();
    for slot in 0..slots {
        let raw = read_bits(&limbs, slot as u64 * k, k);
        if raw.is_zero() && !carry {
            continue;
        }
        let mut v = BigInt::from(raw);
        if carry {
            v += 1;
        }
        carry = v >= BigInt::from(half.clone());
        if carry {
            v -= &full;
        }
        if !v.is_zero() {
            out.push((slot, if negative { -v } else { v }));
        }
    }
    debug_assert!(!carry, "Kronecker slot width too small");
    out
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.0, e.1, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        if self.len().saturating_mul(rhs.len()) < KRONECKER_THRESHOLD {
            self.mul_schoolbook(rhs)
        } else {
            self.mul_kronecker(rhs)
        }
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

owned_ops!(LaurentPoly2);

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (e, c) in &self.terms {
            let factors = [("x1".to_string(), e.0), ("x2".to_string(), e.1)];
            write_term(&mut out, &BigRat::from(c.clone()), factors);
        }
        f.write_str(&out)
    }
}

impl FromStr for LaurentPoly2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = LaurentPoly2::zero();
        for (c, factors) in parse_terms(s)? {
            let c = c
                .to_integer()
                .ok_or_else(|| Error::Parse(format!("non-integer coefficient {c}")))?;
            let (mut p1, mut p2) = (0, 0);
            for (name, exp) in factors {
                match name.as_str() {
                    "x1" => p1 += exp,
                    "x2" => p2 += exp,
                    other => return Err(Error::Parse(format!("unknown variable `{other}`"))),
                }
            }
            p.add_term(p1, p2, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly2 {
        s.parse().unwrap()
    }

    #[test]
    fn square_of_binomial() {
        let p = lp("1*x2^2 + 1");
        assert_eq!(p.pow(2), lp("1*x2^4 + 2*x2^2 + 1"));
    }

    #[test]
    fn inverse_monomial() {
        assert_eq!(&lp("1*x1^-1") * &LaurentPoly2::x1(), LaurentPoly2::one());
    }

    #[test]
    fn monomial_division() {
        let q = lp("1*x2^2 + 1").exact_divide(&LaurentPoly2::x1()).unwrap();
        assert_eq!(q, lp("1*x1^-1*x2^2 + 1*x1^-1"));
        assert_eq!(lp("3*x1^1").exact_divide(&lp("2")), Err(Error::InexactDivision));
    }

    #[test]
    fn polynomial_division() {
        let q = lp("1*x1^2 + -1").exact_divide(&lp("1*x1^1 + -1")).unwrap();
        assert_eq!(q, lp("1*x1^1 + 1"));
    }

    #[test]
    fn inexact_division_detected() {
        assert_eq!(
            lp("1*x1^2 + 1").exact_divide(&lp("1*x1^1 + -1")),
            Err(Error::InexactDivision)
        );
        assert_eq!(
            lp("1*x1^1*x2^1 + 1").exact_divide(&lp("1*x1^1 + 1*x2^1")),
            Err(Error::InexactDivision)
        );
        assert_eq!(
            lp("1").exact_divide(&LaurentPoly2::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn x4_for_kronecker_two() {
        // ((x2^2 + 1)^2 + x1^2) / (x1^2 x2)
        let num = &lp("1*x2^2 + 1").pow(2) + &lp("1*x1^2");
        let q = num.exact_divide(&lp("1*x1^2*x2^1")).unwrap();
        assert_eq!(q, lp("1*x1^-2*x2^3 + 2*x1^-2*x2^1 + 1*x1^-2*x2^-1 + 1*x2^-1"));
    }

    #[test]
    fn kronecker_matches_schoolbook_on_signed_input() {
        let a = lp("3*x1^-4*x2^2 + -7*x1^2 + 123456789012345678901*x2^-3 + -1*x1^5*x2^5");
        let b = lp("-2*x1^1 + 5*x2^1 + -99999999999*x1^-2*x2^-2 + 1");
        assert_eq!(a.mul_kronecker(&b), a.mul_schoolbook(&b));
        assert_eq!(a.mul_kronecker(&a), a.mul_schoolbook(&a));
    }

    #[test]
    fn kronecker_handles_cancellation() {
        let a = lp("1*x1^1 + 1*x2^1");
        let b = lp("1*x1^1 + -1*x2^1");
        assert_eq!(a.mul_kronecker(&b), lp("1*x1^2 + -1*x2^2"));
    }

    #[test]
    fn lattice_compression_respects_offsets() {
        let a = lp("1*x1^-3*x2^1 + 2*x1^1*x2^5 + 1*x1^5*x2^-3");
        let b = lp("1*x1^2 + 1*x1^6*x2^4");
        assert_eq!(a.mul_kronecker(&b), a.mul_schoolbook(&b));
    }

    #[test]
    fn eval_with_negative_powers() {
        let p = lp("1*x1^-1*x2^2 + 1*x1^-1");
        assert_eq!(
            p.eval(&BigRat::from(2), &BigRat::from(3)).unwrap().to_string(),
            "5"
        );
        assert!(p.eval(&BigRat::zero(), &BigRat::one()).is_err());
    }

    #[test]
    fn text_round_trip() {
        let s = "1*x1^-2*x2^-1 + 1*x2^-1 + 2*x1^-2*x2^1 + 1*x1^-2*x2^3";
        let p = lp(s);
        assert_eq!(lp(&p.to_string()), p);
        assert!("1/2*x1^1".parse::<LaurentPoly2>().is_err());
    }
}
