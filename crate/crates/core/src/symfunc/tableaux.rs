use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::IntPartition;
use crate::ring::{ParamPoly, ZExp, ZPoly};
use crate::{Error, Result};

/// A tableau as rows of entries.
pub type Tableau = Vec<Vec<u32>>;

/// Semistandard Young tableaux of the given shape with entries in
/// `1..=max_entry`: rows weakly increase, columns strictly increase.
pub fn enumerate_ssyt(shape: &IntPartition, max_entry: u32) -> Vec<Tableau> {
    let rows = shape.parts();
    let mut out = Vec::new();
    let mut t: Tableau = rows.iter().map(|&l| vec![0; l as usize]).collect();
    fill(rows, max_entry, 0, 0, &mut t, &mut out);
    out
}

fn fill(rows: &[u32], max: u32, i: usize, j: usize, t: &mut Tableau, out: &mut Vec<Tableau>) {
    if i == rows.len() {
        out.push(t.clone());
        return;
    }
    if j == rows[i] as usize {
        fill(rows, max, i + 1, 0, t, out);
        return;
    }
    let left = if j > 0 { t[i][j - 1] } else { 1 };
    let above = if i > 0 { t[i - 1][j] + 1 } else { 1 };
    for v in left.max(above)..=max {
        t[i][j] = v;
        fill(rows, max, i, j + 1, t, out);
    }
}

/// Kostka number `K_{lambda mu}`: semistandard tableaux of shape `lambda`
/// and content `mu`. Computed by peeling off the largest entry, which always
/// fills a horizontal strip.
pub fn kostka(lambda: &IntPartition, mu: &IntPartition) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    Ok(kostka_content(lambda.parts(), mu.parts()))
}

/// Kostka number for an arbitrary content vector (order of `content` does not
/// matter).
pub fn kostka_content(shape: &[u32], content: &[u32]) -> BigInt {
    let mut memo = HashMap::new();
    kostka_rec(shape.to_vec(), content, &mut memo)
}

fn kostka_rec(shape: Vec<u32>, content: &[u32], memo: &mut HashMap<(Vec<u32>, usize), BigInt>) -> BigInt {
    let total: u32 = shape.iter().sum();
    let Some((&last, rest)) = content.split_last() else {
        return if total == 0 { BigInt::one() } else { BigInt::zero() };
    };
    if shape.len() > content.len() || total != content.iter().sum::<u32>() {
        return BigInt::zero();
    }
    let key = (shape.clone(), content.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut acc = BigInt::zero();
    let mut inner = vec![0u32; shape.len()];
    strips(&shape, 0, last, &mut inner, &mut |nu| {
        let nu: Vec<u32> = nu.iter().copied().filter(|&x| x > 0).collect();
        acc += kostka_rec(nu, rest, memo);
    });
    memo.insert(key, acc.clone());
    acc
}

/// Calls `f` on every `nu` with `shape / nu` a horizontal strip of `size` cells.
fn strips(shape: &[u32], i: usize, size: u32, nu: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if i == shape.len() {
        if size == 0 {
            f(nu);
        }
        return;
    }
    let lo = shape.get(i + 1).copied().unwrap_or(0);
    for v in lo..=shape[i] {
        let removed = shape[i] - v;
        if removed > size {
            continue;
        }
        nu[i] = v;
        strips(shape, i + 1, size - removed, nu, f);
    }
}

/// Schur polynomial `s_lambda(z1..zn)` as a sum over tableaux.
pub fn schur_polynomial(lambda: &IntPartition, n: usize) -> ZPoly {
    let mut out = ZPoly::zero(n);
    if lambda.len() > n {
        return out;
    }
    for t in enumerate_ssyt(lambda, n as u32) {
        let mut e = ZExp::zero(n);
        for v in t.iter().flatten() {
            e.0[*v as usize - 1] += 1;
        }
        out.add_term(e, ParamPoly::one());
    }
    out
}
