use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::monomial::grlex_cmp;
use super::text::{parse_terms, write_term};
use super::BigRat;
use crate::{Error, Result};

/// Exponent triple `(deg_q, deg_t, deg_r)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct ParamExp {
    pub q: u32,
    pub t: u32,
    pub r: u32,
}

impl ParamExp {
    pub const ZERO: ParamExp = ParamExp { q: 0, t: 0, r: 0 };

    pub fn new(q: u32, t: u32, r: u32) -> Self {
        ParamExp { q, t, r }
    }

    pub fn degree(&self) -> u32 {
        self.q + self.t + self.r
    }

    fn as_array(&self) -> [u32; 3] {
        [self.q, self.t, self.r]
    }

    fn add(self, o: ParamExp) -> ParamExp {
        ParamExp::new(self.q + o.q, self.t + o.t, self.r + o.r)
    }
}

impl Ord for ParamExp {
    fn cmp(&self, other: &Self) -> Ordering {
        grlex_cmp(&self.as_array(), &other.as_array())
    }
}

impl PartialOrd for ParamExp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in the parameters `q, t, r` with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ParamPoly {
    terms: BTreeMap<ParamExp, BigRat>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn one() -> Self {
        ParamPoly::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        ParamPoly::monomial(ParamExp::ZERO, c)
    }

    pub fn from_int(c: i64) -> Self {
        ParamPoly::constant(BigRat::from(c))
    }

    pub fn monomial(exp: ParamExp, c: BigRat) -> Self {
        let mut p = ParamPoly::zero();
        p.add_term(exp, c);
        p
    }

    pub fn q() -> Self {
        ParamPoly::monomial(ParamExp::new(1, 0, 0), BigRat::one())
    }

    pub fn t() -> Self {
        ParamPoly::monomial(ParamExp::new(0, 1, 0), BigRat::one())
    }

    pub fn r() -> Self {
        ParamPoly::monomial(ParamExp::new(0, 0, 1), BigRat::one())
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

    /// Terms in ascending grlex order of their exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&ParamExp, &BigRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &ParamExp) -> BigRat {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// The constant coefficient, if this is a constant.
    pub fn as_constant(&self) -> Option<BigRat> {
        match self.terms.len() {
            0 => Some(BigRat::zero()),
            1 => self.terms.get(&ParamExp::ZERO).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(ParamExp::degree).max()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(BigRat::is_integer)
    }

    pub(crate) fn add_term(&mut self, exp: ParamExp, c: BigRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
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

    pub(crate) fn add_assign_ref(&mut self, other: &ParamPoly) {
        for (e, c) in &other.terms {
            self.add_term(*e, c.clone());
        }
    }

    pub(crate) fn add_product(&mut self, a: &ParamPoly, b: &ParamPoly) {
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                self.add_term(ea.add(*eb), ca * cb);
            }
        }
    }

    pub fn scale(&self, c: &BigRat) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> ParamPoly {
        let mut acc = ParamPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at rational parameter values.
    pub fn eval(&self, q: &BigRat, t: &BigRat, r: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for (e, c) in &self.terms {
            acc += c * &(q.pow(e.q) * t.pow(e.t) * r.pow(e.r));
        }
        acc
    }

    pub fn eval_int(&self, q: i64, t: i64, r: i64) -> BigRat {
        self.eval(&q.into(), &t.into(), &r.into())
    }

    pub(crate) fn factors(e: &ParamExp) -> [(String, i64); 3] {
        [
            ("q".to_string(), e.q as i64),
            ("t".to_string(), e.t as i64),
            ("r".to_string(), e.r as i64),
        ]
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        out.add_product(self, rhs);
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($T:ty) => {
        impl Add for $T {
            type Output = $T;
            fn add(self, rhs: $T) -> $T {
                &self + &rhs
            }
        }
        impl Sub for $T {
            type Output = $T;
            fn sub(self, rhs: $T) -> $T {
                &self - &rhs
            }
        }
        impl Mul for $T {
            type Output = $T;
            fn mul(self, rhs: $T) -> $T {
                &self * &rhs
            }
        }
        impl Neg for $T {
            type Output = $T;
            fn neg(self) -> $T {
                -&self
            }
        }
    };
}
pub(crate) use owned_ops;

owned_ops!(ParamPoly);

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (e, c) in &self.terms {
            write_term(&mut out, c, ParamPoly::factors(e));
        }
        f.write_str(&out)
    }
}

impl FromStr for ParamPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = ParamPoly::zero();
        for (c, factors) in parse_terms(s)? {
            let mut e = ParamExp::ZERO;
            for (name, exp) in factors {
                let exp =
                    u32::try_from(exp).map_err(|_| Error::Parse(format!("negative exponent on {name}")))?;
                match name.as_str() {
                    "q" => e.q += exp,
                    "t" => e.t += exp,
                    "r" => e.r += exp,
                    other => return Err(Error::Parse(format!("unknown parameter `{other}`"))),
                }
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}
