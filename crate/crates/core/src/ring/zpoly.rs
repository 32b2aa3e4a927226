use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use smallvec::SmallVec;

use super::monomial::ZExp;
use super::param::owned_ops;
use super::text::{parse_terms, write_term};
use super::{BigRat, ParamExp, ParamPoly};
use crate::{Error, Result};

/// Polynomial in `z1..zn` with coefficients in [`ParamPoly`].
///
/// Variables are numbered from 1 in the public API, matching their printed
/// names. The `std::ops` operators panic when the variable counts differ; use
/// the `checked_*` methods where that is not already guaranteed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ZPoly {
    nvars: usize,
    terms: BTreeMap<ZExp, ParamPoly>,
}

impl ZPoly {
    pub fn zero(nvars: usize) -> Self {
        ZPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        ZPoly::constant(nvars, ParamPoly::one())
    }

    pub fn constant(nvars: usize, c: ParamPoly) -> Self {
        ZPoly::monomial(ZExp::zero(nvars), c)
    }

    pub fn monomial(exp: ZExp, c: ParamPoly) -> Self {
        let mut p = ZPoly::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    /// The variable `z_i`, `1 <= i <= nvars`.
    pub fn var(nvars: usize, i: usize) -> Result<Self> {
        if i == 0 || i > nvars {
            return Err(Error::IndexOutOfRange {
                index: i,
                limit: nvars,
            });
        }
        let mut e = ZExp::zero(nvars);
        e.0[i - 1] = 1;
        Ok(ZPoly::monomial(e, ParamPoly::one()))
    }

    /// The linear form `z_{v1} + ... + z_{vm}`.
    pub fn sum_of_vars(nvars: usize, vars: &[usize]) -> Result<Self> {
        let mut out = ZPoly::zero(nvars);
        for &v in vars {
            out.add_assign_ref(&ZPoly::var(nvars, v)?);
        }
        Ok(out)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of `z`-monomials with a nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of flattened `(z, q, t, r)` terms.
    pub fn term_count(&self) -> usize {
        self.terms.values().map(ParamPoly::len).sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ZExp, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> ParamPoly {
        self.terms
            .get(&ZExp::from_slice(exps))
            .cloned()
            .unwrap_or_default()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(ZExp::degree).max()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(ParamPoly::is_integral)
    }

    /// The part of total `z`-degree exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> ZPoly {
        ZPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub(crate) fn add_term(&mut self, exp: ZExp, c: ParamPoly) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn add_assign_ref(&mut self, other: &ZPoly) {
        assert_eq!(self.nvars, other.nvars, "ZPoly variable count mismatch");
        for (e, c) in &other.terms {
            match self.terms.entry(e.clone()) {
                Entry::Vacant(v) => {
                    v.insert(c.clone());
                }
                Entry::Occupied(mut o) => {
                    o.get_mut().add_assign_ref(c);
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
    }

    fn check_vars(&self, other: &ZPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &ZPoly) -> Result<ZPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        out.add_assign_ref(other);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &ZPoly) -> Result<ZPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        out.add_assign_ref(&-other);
        Ok(out)
    }

    pub fn checked_mul(&self, other: &ZPoly) -> Result<ZPoly> {
        self.check_vars(other)?;
        let mut acc: BTreeMap<ZExp, ParamPoly> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                acc.entry(ea.add(eb)).or_default().add_product(ca, cb);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(ZPoly {
            nvars: self.nvars,
            terms: acc,
        })
    }

    pub fn scale_param(&self, c: &ParamPoly) -> ZPoly {
        let mut out = ZPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn scale_rat(&self, c: &BigRat) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero(self.nvars);
        }
        ZPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v.scale(c))).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> ZPoly {
        let mut acc = ZPoly::one(self.nvars);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Swaps `z_i` and `z_{i+1}`, `1 <= i < nvars`.
    pub fn apply_transposition(&self, i: usize) -> Result<ZPoly> {
        if i == 0 || i >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: i,
                limit: self.nvars.saturating_sub(1),
            });
        }
        let mut perm: Vec<usize> = (1..=self.nvars).collect();
        perm.swap(i - 1, i);
        self.permute(&perm)
    }

    /// Substitutes `z_k -> z_{perm[k-1]}`; `perm` is a permutation of `1..=n`.
    pub fn permute(&self, perm: &[usize]) -> Result<ZPoly> {
        if perm.len() != self.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: perm.len(),
            });
        }
        self.embed(perm, self.nvars)
    }

    /// Renames `z_k -> z_{map[k-1]}` inside a ring with `nvars` variables.
    /// `map` must be injective.
    pub fn embed(&self, map: &[usize], nvars: usize) -> Result<ZPoly> {
        if map.len() != self.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&m| m == 0 || m > nvars) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                limit: nvars,
            });
        }
        let mut out = ZPoly::zero(nvars);
        for (e, c) in &self.terms {
            let mut ne = ZExp::zero(nvars);
            for (k, &x) in e.0.iter().enumerate() {
                ne.0[map[k] - 1] += x;
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Exact value at integer `z` and parameter values.
    pub fn eval_int(&self, zvals: &[i64], q: i64, t: i64, r: i64) -> Result<BigRat> {
        if zvals.len() != self.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: zvals.len(),
            });
        }
        let z: Vec<BigRat> = zvals.iter().map(|&v| BigRat::from(v)).collect();
        let (q, t, r) = (BigRat::from(q), BigRat::from(t), BigRat::from(r));
        let mut acc = BigRat::zero();
        for (e, c) in &self.terms {
            let mut mono = c.eval(&q, &t, &r);
            for (zi, &x) in z.iter().zip(e.0.iter()) {
                if x > 0 {
                    mono *= zi.pow(x);
                }
            }
            acc += mono;
        }
        Ok(acc)
    }

    fn z_factors(e: &ZExp) -> impl Iterator<Item = (String, i64)> + '_ {
        e.0.iter()
            .enumerate()
            .map(|(i, &x)| (format!("z{}", i + 1), x as i64))
    }

    /// Parses the canonical text form in a ring with `nvars` variables.
    pub fn parse(s: &str, nvars: usize) -> Result<ZPoly> {
        let mut p = ZPoly::zero(nvars);
        for (c, factors) in parse_terms(s)? {
            let mut pe = ParamExp::ZERO;
            let mut ze: SmallVec<[u32; 8]> = SmallVec::from_elem(0, nvars);
            for (name, exp) in factors {
                let exp =
                    u32::try_from(exp).map_err(|_| Error::Parse(format!("negative exponent on {name}")))?;
                match name.as_str() {
                    "q" => pe.q += exp,
                    "t" => pe.t += exp,
                    "r" => pe.r += exp,
                    z => {
                        let idx: usize = z
                            .strip_prefix('z')
                            .and_then(|d| d.parse().ok())
                            .ok_or_else(|| Error::Parse(format!("unknown variable `{z}`")))?;
                        if idx == 0 || idx > nvars {
                            return Err(Error::IndexOutOfRange {
                                index: idx,
                                limit: nvars,
                            });
                        }
                        ze[idx - 1] += exp;
                    }
                }
            }
            p.add_term(ZExp(ze), ParamPoly::monomial(pe, c));
        }
        Ok(p)
    }

    /// Parses the canonical form, taking the variable count from the highest
    /// `z` index present (at least one).
    fn parse_infer(s: &str) -> Result<ZPoly> {
        let mut n = 1;
        for (_, factors) in parse_terms(s)? {
            for (name, _) in factors {
                if let Some(i) = name.strip_prefix('z').and_then(|d| d.parse::<usize>().ok()) {
                    n = n.max(i);
                }
            }
        }
        ZPoly::parse(s, n)
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        self.checked_add(rhs).expect("ZPoly variable count mismatch")
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        self.checked_sub(rhs).expect("ZPoly variable count mismatch")
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        self.checked_mul(rhs).expect("ZPoly variable count mismatch")
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

owned_ops!(ZPoly);

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (ze, pp) in &self.terms {
            for (pe, c) in pp.terms() {
                let factors = ParamPoly::factors(pe).into_iter().chain(ZPoly::z_factors(ze));
                write_term(&mut out, c, factors);
            }
        }
        f.write_str(&out)
    }
}

/// Parses with the variable count inferred from the largest `z` index.
/// Use [`ZPoly::parse`] when the ring has variables that do not appear.
impl FromStr for ZPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ZPoly::parse_infer(s)
    }
}
