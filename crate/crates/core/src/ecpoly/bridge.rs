use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::assemble::ec_poly_cached;
use crate::ring::{BigRat, ZPoly};
use crate::{Error, Result};

/// `EC_m` with `q, t, r` fixed to integers: an integer polynomial in `z`,
/// cheap to evaluate many times.
#[derive(Clone, Debug)]
pub struct SpecializedEc {
    m: usize,
    terms: Vec<(Vec<u32>, BigInt)>,
}

impl SpecializedEc {
    pub fn new(poly: &ZPoly, q: i64, t: i64, r: i64) -> Result<Self> {
        let (qb, tb, rb) = (BigRat::from(q), BigRat::from(t), BigRat::from(r));
        let mut terms = Vec::new();
        for (e, c) in poly.terms() {
            let v = c.eval(&qb, &tb, &rb);
            let v = v.to_integer().ok_or_else(|| {
                Error::AssertionFailure(format!("non-integral specialised coefficient {v}"))
            })?;
            if !v.is_zero() {
                terms.push((e.as_slice().to_vec(), v));
            }
        }
        Ok(SpecializedEc {
            m: poly.nvars(),
            terms,
        })
    }

    pub fn nvars(&self) -> usize {
        self.m
    }

    pub fn eval(&self, z: &[i64]) -> Result<BigInt> {
        if z.len() != self.m {
            return Err(Error::VarCountMismatch {
                left: self.m,
                right: z.len(),
            });
        }
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let mut mono = c.clone();
            for (&zi, &x) in z.iter().zip(e) {
                if x > 0 {
                    if zi == 0 {
                        mono = BigInt::zero();
                        break;
                    }
                    mono *= num_traits::pow(BigInt::from(zi), x as usize);
                }
            }
            acc += mono;
        }
        Ok(acc)
    }
}

fn specialized(m: usize, q: i64, t: i64, r: i64) -> Result<Arc<SpecializedEc>> {
    type Key = (usize, i64, i64, i64);
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<SpecializedEc>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (m, q, t, r);
    if let Some(s) = cache.lock().expect("poisoned").get(&key) {
        return Ok(Arc::clone(s));
    }
    let s = Arc::new(SpecializedEc::new(ec_poly_cached(m)?.poly(), q, t, r)?);
    Ok(Arc::clone(
        cache.lock().expect("poisoned").entry(key).or_insert(s),
    ))
}

/// `EC_m(z; qv, tv, rv)`. Both `EC_m` and its specialisation at the given
/// parameters are memoized process-wide.
pub fn ec_eval_bridge_point(m: usize, zvals: &[i64], qv: i64, tv: i64, rv: i64) -> Result<BigRat> {
    if zvals.len() != m {
        return Err(Error::VarCountMismatch {
            left: m,
            right: zvals.len(),
        });
    }
    if m == 0 {
        return Ok(BigRat::from_integer(BigInt::one()));
    }
    Ok(BigRat::from_integer(specialized(m, qv, tv, rv)?.eval(zvals)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_points() {
        assert_eq!(ec_eval_bridge_point(1, &[0], -1, -1, 2).unwrap(), BigRat::from(1));
        assert_eq!(
            ec_eval_bridge_point(1, &[1], -1, -2, 3).unwrap(),
            BigRat::from(-1)
        );
        assert!(ec_eval_bridge_point(2, &[1], -1, -1, 2).is_err());
    }
}
