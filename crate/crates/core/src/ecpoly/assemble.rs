use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use super::block::{d_form, e_numerator, e_of_block_literal, linear};
use super::packed::{Packed, MAX_VARS};
use crate::combinatorics::{enumerate_set_partitions, factorial, SetPartition};
use crate::ring::{BigRat, ParamExp, ParamPoly, ZPoly};
use crate::{Error, Exec, Result};

/// `EC_n` as a polynomial in `z1..zn`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ECPolynomial {
    n: usize,
    poly: ZPoly,
}

impl ECPolynomial {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &ZPoly {
        &self.poly
    }

    pub fn into_poly(self) -> ZPoly {
        self.poly
    }
}

impl fmt::Display for ECPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

fn param(q: i64, t: i64, r: i64, c: i64) -> ParamPoly {
    let mut p = ParamPoly::zero();
    if q > 0 {
        p.add_term(ParamExp::new(1, 0, 0), BigRat::from(c * q));
    }
    if t > 0 {
        p.add_term(ParamExp::new(0, 1, 0), BigRat::from(c * t));
    }
    if r > 0 {
        p.add_term(ParamExp::new(0, 0, 1), BigRat::from(c * r));
    }
    p
}

/// The factor `-|S_j| q + t sigma(S_j) - r sum_{i<j} d(j,i)` for block `j`
/// (1-based). For `j = 1` the inner sum is empty.
pub fn linear_factor(p: &SetPartition, j: usize) -> Result<ZPoly> {
    if j == 0 || j > p.len() {
        return Err(Error::IndexOutOfRange {
            index: j,
            limit: p.len(),
        });
    }
    let blocks = p.blocks();
    let sj = blocks[j - 1].len() as i64;
    let before: i64 = blocks[..j - 1].iter().map(|b| b.len() as i64).sum();
    let mut coeffs = Vec::new();
    for b in &blocks[..j - 1] {
        for &v in b {
            coeffs.push((v, param(0, 0, 1, -sj)));
        }
    }
    for &v in &blocks[j - 1] {
        let mut c = ParamPoly::t();
        c.add_term(ParamExp::new(0, 0, 1), BigRat::from(before));
        coeffs.push((v, c));
    }
    Ok(linear(p.n(), param(1, 0, 0, -sj), &coeffs))
}

fn multinomial(n: usize, sizes: impl Iterator<Item = usize>) -> BigInt {
    sizes.fold(factorial(n as u64), |acc, m| acc / factorial(m as u64))
}

/// `n! e(P) prod_j L_j` computed as `n!/prod |S_j|!` times integer parts.
/// The block weights live in disjoint variables, so their product is cheap;
/// the linear factors are then applied one at a time.
fn summand(p: &SetPartition) -> ZPoly {
    let n = p.n();
    let mut prod = ZPoly::one(n);
    for b in p.blocks() {
        prod = &prod * &e_numerator(b, n).expect("set partition blocks are valid");
    }
    for j in 1..=p.len() {
        prod = &prod * &linear_factor(p, j).expect("block index in range");
    }
    let w = multinomial(n, p.blocks().iter().map(Vec::len));
    prod.scale_rat(&BigRat::from_integer(w))
}

/// [`summand`] on packed integer polynomials.
fn summand_packed(p: &SetPartition) -> Result<Packed> {
    let n = p.n();
    let mut prod = Packed::from_zpoly(&ZPoly::one(n))?;
    for b in p.blocks() {
        prod = prod.mul(&Packed::from_zpoly(&e_numerator(b, n)?)?)?;
    }
    for j in 1..=p.len() {
        prod = prod.mul(&Packed::from_zpoly(&linear_factor(p, j)?)?)?;
    }
    let w = multinomial(n, p.blocks().iter().map(Vec::len));
    prod.scale(i128::try_from(&w).map_err(|_| Error::Overflow("multinomial".into()))?)?;
    Ok(prod)
}

fn check_integral(n: usize, poly: &ZPoly) -> Result<()> {
    for (e, c) in poly.terms() {
        if let Some((pe, v)) = c.terms().find(|(_, v)| !v.is_integer()) {
            let mut term = ZPoly::monomial(e.clone(), ParamPoly::monomial(*pe, BigRat::one())).to_string();
            if let Some(stripped) = term.strip_prefix("1*") {
                term = stripped.to_string();
            }
            return Err(Error::IntegralityViolation {
                n,
                term,
                coeff: v.to_string(),
            });
        }
    }
    Ok(())
}

/// `EC_n` using the default execution strategy.
pub fn ec_poly(n: usize) -> Result<ECPolynomial> {
    ec_poly_with(n, Exec::default())
}

/// `EC_n`, with the sum over set partitions distributed according to `exec`.
/// Fails with `IntegralityViolation` if a coefficient is not an integer.
pub fn ec_poly_with(n: usize, exec: Exec) -> Result<ECPolynomial> {
    ec_poly_progress(n, exec, &|_, _| {})
}

/// Like [`ec_poly_with`], calling `progress(done, total)` after each batch of
/// set partitions.
pub fn ec_poly_progress(
    n: usize,
    exec: Exec,
    progress: &(dyn Fn(usize, usize) + Sync),
) -> Result<ECPolynomial> {
    if n == 0 {
        return Err(Error::PreconditionViolated("EC_n needs n >= 1".into()));
    }
    let parts: Vec<SetPartition> = enumerate_set_partitions(n).collect();
    let total = parts.len();
    let batch = total.div_ceil(PROGRESS_STEPS).max(1);
    let packed = if n <= MAX_VARS {
        let mut acc = Packed::zero(n);
        let mut done = 0;
        let mut res = Ok(());
        for chunk in parts.chunks(batch) {
            let part = exec.map_reduce(
                chunk,
                summand_packed,
                || Ok(Packed::zero(n)),
                |a, b| {
                    let mut a = a?;
                    a.add_assign(&b?)?;
                    Ok(a)
                },
            );
            if let Err(e) = part.and_then(|p| acc.add_assign(&p)) {
                res = Err(e);
                break;
            }
            done += chunk.len();
            progress(done, total);
        }
        res.map(|_| acc)
    } else {
        Err(Error::Overflow("too many variables to pack".into()))
    };
    let poly = match packed {
        Ok(p) => p.into_zpoly(),
        Err(Error::Overflow(_)) => {
            let mut acc = ZPoly::zero(n);
            let mut done = 0;
            for chunk in parts.chunks(batch) {
                let part = exec.map_reduce(
                    chunk,
                    summand,
                    || ZPoly::zero(n),
                    |mut a, b| {
                        a.add_assign_ref(&b);
                        a
                    },
                );
                acc.add_assign_ref(&part);
                done += chunk.len();
                progress(done, total);
            }
            acc
        }
        Err(e) => return Err(e),
    };
    check_integral(n, &poly)?;
    Ok(ECPolynomial { n, poly })
}

const PROGRESS_STEPS: usize = 20;

/// `EC_n` straight from the definition: rational block weights from the
/// permutation sum, `d(j,i)` built one pair at a time, no caching. Slow; an
/// oracle for [`ec_poly`].
pub fn ec_poly_literal(n: usize) -> Result<ZPoly> {
    if n == 0 {
        return Err(Error::PreconditionViolated("EC_n needs n >= 1".into()));
    }
    let mut sum = ZPoly::zero(n);
    let r = ParamPoly::r();
    for p in enumerate_set_partitions(n) {
        let mut term = ZPoly::one(n);
        for b in p.blocks() {
            term = &term * &e_of_block_literal(b, n)?;
        }
        for (j, b) in p.blocks().iter().enumerate() {
            let mut f = ZPoly::sum_of_vars(n, b)?.scale_param(&ParamPoly::t());
            f = &f - &ZPoly::constant(n, ParamPoly::q().scale(&BigRat::from(b.len() as i64)));
            for i in 1..=j {
                f = &f - &d_form(&p, j + 1, i)?.scale_param(&r);
            }
            term = &term * &f;
        }
        sum.add_assign_ref(&term);
    }
    Ok(sum.scale_rat(&BigRat::from_integer(factorial(n as u64))))
}

/// Process-wide memo of [`ec_poly`].
pub fn ec_poly_cached(n: usize) -> Result<Arc<ECPolynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<ECPolynomial>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("poisoned").get(&n) {
        return Ok(Arc::clone(p));
    }
    let p = Arc::new(ec_poly(n)?);
    Ok(Arc::clone(cache.lock().expect("poisoned").entry(n).or_insert(p)))
}

/// Outcome of [`check_symmetry`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryVerdict {
    Symmetric,
    /// `z_i <-> z_{i+1}` changes the polynomial.
    Counterexample {
        transposition: usize,
    },
}

impl SymmetryVerdict {
    pub fn is_symmetric(self) -> bool {
        self == SymmetryVerdict::Symmetric
    }
}

/// Tests invariance under every adjacent transposition.
pub fn check_symmetry(p: &ZPoly) -> SymmetryVerdict {
    for i in 1..p.nvars() {
        let swapped = p.apply_transposition(i).expect("index in range");
        if &swapped != p {
            return SymmetryVerdict::Counterexample { transposition: i };
        }
    }
    SymmetryVerdict::Symmetric
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ec1_text() {
        assert_eq!(ec_poly(1).unwrap().to_string(), "-1*q^1 + 1*t^1*z1^1");
    }

    #[test]
    fn linear_factor_block_two() {
        let p = SetPartition::from_blocks(3, vec![vec![1, 2], vec![3]]).unwrap();
        let f = linear_factor(&p, 2).unwrap();
        let want = ZPoly::parse("-1*q^1 + -1*r^1*z1^1 + -1*r^1*z2^1 + 1*t^1*z3^1 + 2*r^1*z3^1", 3).unwrap();
        assert_eq!(f, want);
    }

    #[test]
    fn progress_reaches_total() {
        let seen = Mutex::new(Vec::new());
        let p = ec_poly_progress(5, Exec::Sequential, &|d, t| seen.lock().unwrap().push((d, t))).unwrap();
        assert_eq!(p, ec_poly(5).unwrap());
        let seen = seen.into_inner().unwrap();
        assert_eq!(seen.last(), Some(&(52, 52)));
        assert!(seen.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn fast_matches_literal() {
        for n in 1..=4 {
            assert_eq!(
                ec_poly(n).unwrap().poly(),
                &ec_poly_literal(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn packed_matches_generic() {
        let n = 5;
        let mut sum = ZPoly::zero(n);
        for p in enumerate_set_partitions(n) {
            let a = summand(&p);
            assert_eq!(summand_packed(&p).unwrap().into_zpoly(), a);
            sum.add_assign_ref(&a);
        }
        assert_eq!(ec_poly_with(n, Exec::Sequential).unwrap().poly(), &sum);
    }

    #[test]
    fn single_summand_is_not_symmetric() {
        let p = SetPartition::from_blocks(2, vec![vec![1], vec![2]]).unwrap();
        let s = summand(&p);
        assert_eq!(
            check_symmetry(&s),
            SymmetryVerdict::Counterexample { transposition: 1 }
        );
        assert!(check_symmetry(ec_poly(1).unwrap().poly()).is_symmetric());
    }
}
