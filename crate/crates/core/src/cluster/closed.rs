use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{ChiTable, ClusterParams};
use crate::combinatorics::{mod_binom, ASequence, BinomialTable};
use crate::ring::LaurentPoly2;
use crate::{Error, Exec, Result};

/// Shared setup for the closed forms: validated `c`, the sequence up to
/// `a_n`, and the index `n`.
pub(crate) struct Setup {
    pub n: i64,
    pub c: i64,
    pub a: ASequence,
}

impl Setup {
    pub fn new(n: i64, c: i64, min_n: i64) -> Result<Self> {
        ClusterParams::equal(c)?;
        if n < min_n {
            return Err(Error::PreconditionViolated(format!("need n >= {min_n}, got {n}")));
        }
        Ok(Setup {
            n,
            c,
            a: ASequence::new(c, n)?,
        })
    }

    /// `(a_{n-1}, a_{n-2}, a_{n-3})`.
    pub fn dims(&self) -> (i64, i64, i64) {
        let n = self.n;
        (self.a.get(n - 1), self.a.get(n - 2), self.a.get(n - 3))
    }

    /// `e2 a_{n-1} - e1 a_{n-2} >= 0`.
    pub fn gate(&self, e1: i64, e2: i64) -> bool {
        let (d1, d2, _) = self.dims();
        e2 * d1 - e1 * d2 >= 0
    }
}

/// One admissible tuple `(t_0..t_{n-4})` with its partial sums
/// `s_{n-3}, s_{n-4}` and weight `prod_i [a_{i+1} - c s_i; t_i]`.
struct TTuple {
    s3: i64,
    s4: i64,
    weight: BigInt,
}

/// `s_i = sum_{j<i} a_{i-j+1} t_j`, zero for `i <= 0`.
fn partial_sum(a: &ASequence, t: &[i64], i: i64) -> i64 {
    (0..i.max(0)).map(|j| a.get(i - j + 1) * t[j as usize]).sum()
}

/// Every tuple satisfying `0 <= t_i <= a_{i+1} - c s_i`. The list is empty
/// for `n = 3`, where the single empty tuple is returned.
fn t_tuples(s: &Setup) -> Result<Vec<TTuple>> {
    let len = (s.n - 3).max(0) as usize;
    let mut out = Vec::new();
    let mut t = vec![0i64; len];
    walk(s, &mut t, 0, BigInt::one(), &mut out)?;
    Ok(out)
}

fn walk(s: &Setup, t: &mut Vec<i64>, i: usize, w: BigInt, out: &mut Vec<TTuple>) -> Result<()> {
    if i == t.len() {
        out.push(TTuple {
            s3: partial_sum(&s.a, t, s.n - 3),
            s4: partial_sum(&s.a, t, s.n - 4),
            weight: w,
        });
        return Ok(());
    }
    let si = partial_sum(&s.a, &t[..i], i as i64);
    let top = s.a.get(i as i64 + 1) - s.c * si;
    for ti in 0..=top {
        t[i] = ti;
        let f = mod_binom(top, ti)?;
        walk(s, t, i + 1, &w * f, out)?;
    }
    t[i] = 0;
    Ok(())
}

/// Sums of tuple weights grouped by `(s_{n-3}, s_{n-4})`; the cell factors
/// depend on the tuple only through these two sums.
fn grouped(s: &Setup) -> Result<Vec<((i64, i64), BigInt)>> {
    let mut g: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
    for tt in t_tuples(s)? {
        *g.entry((tt.s3, tt.s4)).or_default() += tt.weight;
    }
    Ok(g.into_iter().filter(|(_, v)| !v.is_zero()).collect())
}

/// The two cell factors of the closed form for given partial sums, or zero
/// when the second admissibility condition fails.
fn cell_factor(
    s: &Setup,
    e1: i64,
    e2: i64,
    s3: i64,
    s4: i64,
    binom: impl Fn(i64, i64) -> Result<BigInt>,
) -> Result<BigInt> {
    let (_, d2, d3) = s.dims();
    let top = d2 - s.c * s3;
    let mid = top - e2 + s4;
    if mid < 0 || mid > top {
        return Ok(BigInt::zero());
    }
    let last_top = -d3 + s.c * e2;
    let last = binom(last_top, last_top - e1 + s3)?;
    if last.is_zero() {
        return Ok(last);
    }
    Ok(binom(top, mid)? * last)
}

/// The closed-form sum over `t` for one cell, without the gate
/// `e2 a_{n-1} - e1 a_{n-2} >= 0`. Outside that half-plane this can be
/// nonzero (for instance `-1` at `c = 2, n = 6, (e1, e2) = (2, 0)`), so it is
/// not an Euler characteristic there.
pub fn chi_closed_form_ungated(n: i64, c: i64, e1: i64, e2: i64) -> Result<BigInt> {
    let s = Setup::new(n, c, 3)?;
    let mut acc = BigInt::zero();
    for tt in t_tuples(&s)? {
        let f = cell_factor(&s, e1, e2, tt.s3, tt.s4, mod_binom)?;
        if !f.is_zero() {
            acc += f * tt.weight;
        }
    }
    Ok(acc)
}

/// `chi(Gr_(e1,e2)(M(n)))` by the closed form: the `t`-sum, restricted to
/// the half-plane `e2 a_{n-1} - e1 a_{n-2} >= 0` where `x_n` has support.
pub fn chi_closed_form(n: i64, c: i64, e1: i64, e2: i64) -> Result<BigInt> {
    let s = Setup::new(n, c, 3)?;
    if e1 < 0 || e2 < 0 || !s.gate(e1, e2) {
        return Ok(BigInt::zero());
    }
    chi_closed_form_ungated(n, c, e1, e2)
}

/// Full closed-form table over `0 <= e2 <= a_{n-2}`, `0 <= e1 <= a_{n-1}`.
///
/// Tuples are grouped by `(s_{n-3}, s_{n-4})` once, binomials come from a
/// shared table, and rows are spread over `exec`.
pub fn chi_closed_form_table(n: i64, c: i64, exec: Exec) -> Result<ChiTable> {
    let s = Setup::new(n, c, 3)?;
    let groups = grouped(&s)?;
    let (d1, d2, _) = s.dims();
    let table = BinomialTable::new();
    let rows: Vec<i64> = (0..=d2).collect();
    let computed = exec.map(&rows, |&e2| -> Result<Vec<(i64, BigInt)>> {
        let mut row = Vec::new();
        for e1 in 0..=d1 {
            if !s.gate(e1, e2) {
                break;
            }
            let mut acc = BigInt::zero();
            for ((s3, s4), w) in &groups {
                if *s3 > e1 || *s4 > e2 {
                    continue;
                }
                let f = cell_factor(&s, e1, e2, *s3, *s4, |a, b| Ok(table.modified(a, b)))?;
                if !f.is_zero() {
                    acc += f * w;
                }
            }
            if !acc.is_zero() {
                row.push((e1, acc));
            }
        }
        Ok(row)
    });
    let mut out = ChiTable::new(n, c);
    for (e2, row) in rows.iter().zip(computed) {
        for (e1, v) in row? {
            out.insert(e1, *e2, v);
        }
    }
    Ok(out)
}

/// `x_n` assembled from the closed-form table.
pub fn xvar_closed_form(n: i64, c: i64) -> Result<LaurentPoly2> {
    xvar_closed_form_with(n, c, Exec::default())
}

pub fn xvar_closed_form_with(n: i64, c: i64, exec: Exec) -> Result<LaurentPoly2> {
    chi_closed_form_table(n, c, exec)?.to_laurent()
}

/// True when the closed form vanishes on the `margin`-wide band just outside
/// the enumeration box (gate applied). Evidence that the box loses nothing.
pub fn closed_form_box_is_complete(n: i64, c: i64, margin: i64) -> Result<bool> {
    let s = Setup::new(n, c, 3)?;
    let (d1, d2, _) = s.dims();
    for e2 in 0..=d2 + margin {
        for e1 in 0..=d1 + margin {
            if e1 <= d1 && e2 <= d2 {
                continue;
            }
            if s.gate(e1, e2) && !chi_closed_form_ungated(n, c, e1, e2)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
