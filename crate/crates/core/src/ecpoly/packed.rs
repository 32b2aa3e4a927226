//! Integer polynomials in `z1..zn, q, t, r` with all exponents packed into a
//! single `u64`, used for the hot assembly loop.

use num_bigint::BigInt;
use rustc_hash::FxHashMap;

use crate::ring::{BigRat, ParamExp, ParamPoly, ZExp, ZPoly};
use crate::{Error, Result};

const BITS: u32 = 5;
const MASK: u64 = (1 << BITS) - 1;

/// Largest `n` whose `n + 3` exponent slots fit in a word.
pub(crate) const MAX_VARS: usize = (64 / BITS as usize) - 3;

#[derive(Clone, Debug, Default)]
pub(crate) struct Packed {
    n: usize,
    terms: FxHashMap<u64, i128>,
}

fn overflow() -> Error {
    Error::Overflow("packed EC coefficient".into())
}

impl Packed {
    pub(crate) fn zero(n: usize) -> Self {
        Packed {
            n,
            terms: FxHashMap::default(),
        }
    }

    fn key(&self, z: &[u32], p: &ParamExp) -> Result<u64> {
        let mut k = 0u64;
        for (i, &e) in z.iter().chain([p.q, p.t, p.r].iter()).enumerate() {
            if e as u64 > MASK {
                return Err(overflow());
            }
            k |= (e as u64) << (BITS * i as u32);
        }
        Ok(k)
    }

    pub(crate) fn from_zpoly(p: &ZPoly) -> Result<Self> {
        let mut out = Packed::zero(p.nvars());
        for (e, c) in p.terms() {
            for (pe, v) in c.terms() {
                let v = v.to_integer().ok_or_else(overflow)?;
                let v = i128::try_from(&v).map_err(|_| overflow())?;
                out.terms.insert(out.key(e.as_slice(), pe)?, v);
            }
        }
        Ok(out)
    }

    /// Product; exponents may not exceed the slot width, which holds for
    /// every intermediate of `EC_n` with `n <= MAX_VARS`.
    pub(crate) fn mul(&self, o: &Packed) -> Result<Packed> {
        let mut out = Packed::zero(self.n);
        out.terms.reserve(self.terms.len() * o.terms.len().min(16));
        for (&ka, &ca) in &self.terms {
            for (&kb, &cb) in &o.terms {
                let v = ca.checked_mul(cb).ok_or_else(overflow)?;
                let slot = out.terms.entry(ka + kb).or_insert(0);
                *slot = slot.checked_add(v).ok_or_else(overflow)?;
            }
        }
        out.terms.retain(|_, v| *v != 0);
        Ok(out)
    }

    pub(crate) fn scale(&mut self, c: i128) -> Result<()> {
        for v in self.terms.values_mut() {
            *v = v.checked_mul(c).ok_or_else(overflow)?;
        }
        Ok(())
    }

    pub(crate) fn add_assign(&mut self, o: &Packed) -> Result<()> {
        for (&k, &v) in &o.terms {
            let slot = self.terms.entry(k).or_insert(0);
            *slot = slot.checked_add(v).ok_or_else(overflow)?;
        }
        self.terms.retain(|_, v| *v != 0);
        Ok(())
    }

    pub(crate) fn into_zpoly(self) -> ZPoly {
        let n = self.n;
        let mut out = ZPoly::zero(n);
        let slot = |k: u64, i: usize| ((k >> (BITS * i as u32)) & MASK) as u32;
        for (k, v) in self.terms {
            let z: Vec<u32> = (0..n).map(|i| slot(k, i)).collect();
            let pe = ParamExp::new(slot(k, n), slot(k, n + 1), slot(k, n + 2));
            out.add_term(
                ZExp::from_slice(&z),
                ParamPoly::monomial(pe, BigRat::from_integer(BigInt::from(v))),
            );
        }
        out
    }
}
