use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::combinatorics::{enumerate_permutations, factorial, SetPartition};
use crate::ring::{BigRat, ParamExp, ParamPoly, ZExp, ZPoly};
use crate::{Error, Result};

/// A block `S` together with `sigma(S)` and `|S|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStats {
    pub block: Vec<usize>,
    pub sigma: ZPoly,
    pub size: usize,
}

impl BlockStats {
    pub fn new(block: &[usize], nvars: usize) -> Result<Self> {
        if block.is_empty() {
            return Err(Error::EmptyBlock);
        }
        let mut b = block.to_vec();
        b.sort_unstable();
        b.dedup();
        Ok(BlockStats {
            sigma: ZPoly::sum_of_vars(nvars, &b)?,
            size: b.len(),
            block: b,
        })
    }
}

/// `d(j,i) = |S_j| sigma(S_i) - |S_i| sigma(S_j)` for blocks `1 <= i < j <= |P|`.
pub fn d_form(p: &SetPartition, j: usize, i: usize) -> Result<ZPoly> {
    let k = p.len();
    if j == 0 || j > k {
        return Err(Error::IndexOutOfRange { index: j, limit: k });
    }
    if i == 0 || i >= j {
        return Err(Error::IndexOutOfRange {
            index: i,
            limit: j - 1,
        });
    }
    let sj = BlockStats::new(&p.blocks()[j - 1], p.n())?;
    let si = BlockStats::new(&p.blocks()[i - 1], p.n())?;
    Ok(&si.sigma.scale_rat(&BigRat::from(sj.size as i64))
        - &sj.sigma.scale_rat(&BigRat::from(si.size as i64)))
}

/// Linear polynomial `c0 + sum_k c_k z_{v_k}`.
pub(crate) fn linear(nvars: usize, c0: ParamPoly, coeffs: &[(usize, ParamPoly)]) -> ZPoly {
    let mut out = ZPoly::constant(nvars, c0);
    for (v, c) in coeffs {
        let mut e = ZExp::zero(nvars);
        e.0[v - 1] = 1;
        out.add_term(e, c.clone());
    }
    out
}

fn r_times(c: i64) -> ParamPoly {
    ParamPoly::monomial(ParamExp::new(0, 0, 1), BigRat::from(c))
}

/// `m! e({1..m})` in `m` variables, by dynamic programming over the growing
/// prefix set: appending `x` to a prefix `A` multiplies by
/// `r (sigma(A) - |A| z_x) - |A|`.
fn block_numerator(m: usize) -> ZPoly {
    // Subsets of {2..m} as bitmasks; element 1 is always in the prefix.
    let full = (1usize << (m - 1)) - 1;
    let mut g: Vec<Option<ZPoly>> = vec![None; full + 1];
    g[0] = Some(ZPoly::one(m));
    for mask in 0..full {
        let Some(cur) = g[mask].take() else { continue };
        let size = mask.count_ones() as i64 + 1;
        let members: Vec<usize> = std::iter::once(1)
            .chain((0..m - 1).filter(|b| mask >> b & 1 == 1).map(|b| b + 2))
            .collect();
        for b in 0..m - 1 {
            if mask >> b & 1 == 1 {
                continue;
            }
            let x = b + 2;
            let mut coeffs: Vec<(usize, ParamPoly)> = members.iter().map(|&v| (v, r_times(1))).collect();
            coeffs.push((x, r_times(-size)));
            let f = linear(m, ParamPoly::from_int(-size), &coeffs);
            let term = &cur * &f;
            let slot = &mut g[mask | 1 << b];
            match slot {
                Some(acc) => acc.add_assign_ref(&term),
                None => *slot = Some(term),
            }
        }
    }
    g[full].take().expect("full prefix reached")
}

/// `m! e({1..m})`, cached by `m`.
fn canonical_numerator(m: usize) -> Arc<ZPoly> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<ZPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("poisoned").get(&m) {
        return Arc::clone(p);
    }
    let p = Arc::new(if m == 1 { ZPoly::one(1) } else { block_numerator(m) });
    Arc::clone(cache.lock().expect("poisoned").entry(m).or_insert(p))
}

fn check_block(t: &[usize], nvars: usize) -> Result<()> {
    if t.is_empty() {
        return Err(Error::EmptyBlock);
    }
    if !t.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::PreconditionViolated(
            "block must be strictly increasing".into(),
        ));
    }
    if let Some(&v) = t.iter().find(|&&v| v == 0 || v > nvars) {
        return Err(Error::IndexOutOfRange {
            index: v,
            limit: nvars,
        });
    }
    Ok(())
}

/// Block weight `e(T)` in a ring of `nvars` variables.
///
/// `e(T) = 1` for `|T| = 1`; otherwise `1/m!` times the sum over orderings
/// `(p_2..p_m)` of `{2..m}` of
/// `prod_{i=1}^{m-1} ( r (z_{T_1} + z_{T_{p_2}} + ... + z_{T_{p_i}} - i z_{T_{p_{i+1}}}) - i )`.
/// The weight of `{1..m}` is cached by `m` and relabelled onto `T`.
pub fn e_of_block(t: &[usize], nvars: usize) -> Result<ZPoly> {
    let num = e_numerator(t, nvars)?;
    Ok(num.scale_rat(&BigRat::from_integer(factorial(t.len() as u64)).recip()))
}

/// `|T|! e(T)`, which has integer coefficients.
pub(crate) fn e_numerator(t: &[usize], nvars: usize) -> Result<ZPoly> {
    check_block(t, nvars)?;
    canonical_numerator(t.len()).embed(t, nvars)
}

/// [`e_of_block`] straight from the permutation sum, without caching.
pub fn e_of_block_literal(t: &[usize], nvars: usize) -> Result<ZPoly> {
    check_block(t, nvars)?;
    let m = t.len();
    if m == 1 {
        return Ok(ZPoly::one(nvars));
    }
    let rest: Vec<usize> = t[1..].to_vec();
    let mut sum = ZPoly::zero(nvars);
    for perm in enumerate_permutations(&rest) {
        let order: Vec<usize> = std::iter::once(t[0]).chain(perm).collect();
        let mut prod = ZPoly::one(nvars);
        for i in 1..m {
            let mut coeffs: Vec<(usize, ParamPoly)> = order[..i].iter().map(|&v| (v, r_times(1))).collect();
            coeffs.push((order[i], r_times(-(i as i64))));
            prod = &prod * &linear(nvars, ParamPoly::from_int(-(i as i64)), &coeffs);
        }
        sum.add_assign_ref(&prod);
    }
    Ok(sum.scale_rat(&BigRat::from_integer(factorial(m as u64)).recip()))
}

/// `e(P) = prod_j e(S_j)`.
pub fn e_of_partition(p: &SetPartition) -> ZPoly {
    let mut out = ZPoly::one(p.n());
    for b in p.blocks() {
        let e = e_of_block(b, p.n()).expect("set partition blocks are valid");
        out = &out * &e;
    }
    out
}
