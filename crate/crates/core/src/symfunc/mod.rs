//! Symmetric polynomial bases and sign-coherency verdicts.
//!
//! Every expansion splits the input by homogeneous degree and goes through
//! the monomial basis: the coefficient of `m_lambda` is read off directly and
//! the other bases are reached by inverting the exact transition matrix to
//! `m` in that degree.

mod coherency;
mod tableaux;
mod transition;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{next_permutation, IntPartition};
use crate::ring::{BigRat, ParamPoly, ZExp, ZPoly};
use crate::{Error, Exec, Result};

pub use coherency::{sign_coherency, CoherencyVerdict, ParityMap, SignClass, Violation};
pub use tableaux::{enumerate_ssyt, kostka, kostka_content, schur_polynomial, Tableau};
pub use transition::{index_set, invert, to_monomial_coeff, transition_matrix};

/// The five classical bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Monomial,
    Schur,
    Elementary,
    Homogeneous,
    Power,
}

impl Basis {
    pub const ALL: [Basis; 5] = [
        Basis::Monomial,
        Basis::Schur,
        Basis::Elementary,
        Basis::Homogeneous,
        Basis::Power,
    ];

    /// One-letter symbol: `m`, `s`, `e`, `h`, `p`.
    pub fn symbol(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Schur => 's',
            Basis::Elementary => 'e',
            Basis::Homogeneous => 'h',
            Basis::Power => 'p',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::Schur => "schur",
            Basis::Elementary => "elementary",
            Basis::Homogeneous => "homogeneous",
            Basis::Power => "powersum",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "m" | "monomial" => Basis::Monomial,
            "s" | "schur" => Basis::Schur,
            "e" | "elementary" => Basis::Elementary,
            "h" | "homogeneous" => Basis::Homogeneous,
            "p" | "power" | "powersum" => Basis::Power,
            other => return Err(Error::Parse(format!("unknown basis `{other}`"))),
        })
    }
}

/// Coefficients of a symmetric polynomial in one basis; zero coefficients are
/// not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymExpansion {
    pub basis: Basis,
    pub nvars: usize,
    pub coeffs: BTreeMap<IntPartition, ParamPoly>,
}

impl SymExpansion {
    pub fn coeff(&self, lambda: &IntPartition) -> ParamPoly {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Coefficient at the partition with the given parts.
    pub fn coeff_of(&self, parts: &[u32]) -> ParamPoly {
        self.coeff(&IntPartition::new(parts.to_vec()))
    }
}

/// The basis element `b_lambda` as a polynomial in `n` variables, built
/// straight from its definition.
pub fn basis_polynomial(basis: Basis, lambda: &IntPartition, n: usize) -> ZPoly {
    match basis {
        Basis::Monomial => monomial_symmetric(lambda, n),
        Basis::Schur => schur_polynomial(lambda, n),
        _ => lambda
            .parts()
            .iter()
            .fold(ZPoly::one(n), |acc, &k| &acc * &single(basis, k, n)),
    }
}

fn monomial_symmetric(lambda: &IntPartition, n: usize) -> ZPoly {
    let mut out = ZPoly::zero(n);
    let Some(mut v) = lambda.padded(n) else {
        return out;
    };
    v.sort_unstable();
    loop {
        out.add_term(ZExp::from_slice(&v), ParamPoly::one());
        if !next_permutation(&mut v) {
            break;
        }
    }
    out
}

fn single(basis: Basis, k: u32, n: usize) -> ZPoly {
    let mut out = ZPoly::zero(n);
    let mut push = |v: &[u32]| out.add_term(ZExp::from_slice(v), ParamPoly::one());
    match basis {
        Basis::Power => {
            for i in 0..n {
                let mut v = vec![0; n];
                v[i] = k;
                push(&v);
            }
        }
        Basis::Elementary | Basis::Homogeneous => {
            let cap = if basis == Basis::Elementary { 1 } else { k };
            let mut v = vec![0u32; n];
            each_vector(0, k, cap, &mut v, &mut push);
        }
        _ => unreachable!(),
    }
    out
}

fn each_vector(i: usize, k: u32, cap: u32, v: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if i == v.len() {
        if k == 0 {
            f(v);
        }
        return;
    }
    for a in 0..=cap.min(k) {
        v[i] = a;
        each_vector(i + 1, k - a, cap, v, f);
    }
    v[i] = 0;
}

/// Rebuilds the polynomial from an expansion.
pub fn reconstruct(exp: &SymExpansion) -> ZPoly {
    let mut out = ZPoly::zero(exp.nvars);
    for (lambda, c) in &exp.coeffs {
        out.add_assign_ref(&basis_polynomial(exp.basis, lambda, exp.nvars).scale_param(c));
    }
    out
}

/// `m`-coefficients of one homogeneous degree, checked for symmetry.
fn monomial_coeffs(p: &ZPoly) -> Result<BTreeMap<IntPartition, ParamPoly>> {
    let mut out: BTreeMap<IntPartition, ParamPoly> = BTreeMap::new();
    let mut counts: BTreeMap<IntPartition, u64> = BTreeMap::new();
    for (e, c) in p.terms() {
        let lambda = IntPartition::new(e.as_slice().to_vec());
        let padded = lambda.padded(p.nvars()).expect("at most nvars parts");
        let rep = p.coeff(&padded);
        if &rep != c {
            return Err(Error::NotSymmetric(format!(
                "coefficient of {e:?} differs from that of {lambda}"
            )));
        }
        *counts.entry(lambda.clone()).or_insert(0u64) += 1;
        out.entry(lambda).or_insert(rep);
    }
    for (lambda, &count) in &counts {
        let size = orbit_size(&lambda.padded(p.nvars()).expect("at most nvars parts"));
        if count != size {
            return Err(Error::NotSymmetric(format!(
                "orbit of {lambda} has {count} of {size} monomials"
            )));
        }
    }
    Ok(out)
}

fn orbit_size(v: &[u32]) -> u64 {
    let mut mult: BTreeMap<u32, u64> = BTreeMap::new();
    for &x in v {
        *mult.entry(x).or_default() += 1;
    }
    let fact = |k: u64| (1..=k).product::<u64>();
    mult.values().fold(fact(v.len() as u64), |acc, &m| acc / fact(m))
}

/// Expansion in any basis, degree components processed according to `exec`.
pub fn expand_with(p: &ZPoly, basis: Basis, exec: Exec) -> Result<SymExpansion> {
    let n = p.nvars();
    let degrees: Vec<u32> = (0..=p.total_degree().unwrap_or(0)).collect();
    let parts = exec.map(&degrees, |&d| -> Result<Vec<(IntPartition, ParamPoly)>> {
        let m = monomial_coeffs(&p.homogeneous_component(d))?;
        if basis == Basis::Monomial {
            return Ok(m.into_iter().collect());
        }
        let rows = index_set(basis, n, d);
        let cols = index_set(Basis::Monomial, n, d);
        let inv = transition::inverse_cached(basis, n, d)?;
        let mut out = Vec::new();
        for (j, lambda) in rows.iter().enumerate() {
            let mut c = ParamPoly::zero();
            for (k, mu) in cols.iter().enumerate() {
                if let Some(v) = m.get(mu) {
                    if !inv[k][j].is_zero() {
                        c.add_assign_ref(&v.scale(&inv[k][j]));
                    }
                }
            }
            if !c.is_zero() {
                out.push((lambda.clone(), c));
            }
        }
        Ok(out)
    });
    let mut coeffs = BTreeMap::new();
    for chunk in parts {
        coeffs.extend(chunk?);
    }
    Ok(SymExpansion {
        basis,
        nvars: n,
        coeffs,
    })
}

pub fn expand(p: &ZPoly, basis: Basis) -> Result<SymExpansion> {
    expand_with(p, basis, Exec::default())
}

pub fn expand_monomial(p: &ZPoly) -> Result<SymExpansion> {
    expand(p, Basis::Monomial)
}

pub fn expand_schur(p: &ZPoly) -> Result<SymExpansion> {
    expand(p, Basis::Schur)
}

pub fn expand_elementary(p: &ZPoly) -> Result<SymExpansion> {
    expand(p, Basis::Elementary)
}

pub fn expand_homogeneous(p: &ZPoly) -> Result<SymExpansion> {
    expand(p, Basis::Homogeneous)
}

pub fn expand_powersum(p: &ZPoly) -> Result<SymExpansion> {
    expand(p, Basis::Power)
}

/// Rescales every coefficient by `c`; handy for building expansions in tests.
pub fn scale_expansion(exp: &SymExpansion, c: &BigRat) -> SymExpansion {
    SymExpansion {
        basis: exp.basis,
        nvars: exp.nvars,
        coeffs: exp
            .coeffs
            .iter()
            .map(|(l, v)| (l.clone(), v.scale(c)))
            .filter(|(_, v)| !v.is_zero())
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> IntPartition {
        IntPartition::new(v.to_vec())
    }

    #[test]
    fn product_of_all_vars() {
        let z = ZPoly::parse("1*z1^1*z2^1*z3^1", 3).unwrap();
        let m = expand_monomial(&z).unwrap();
        assert_eq!(m.coeffs.len(), 1);
        assert_eq!(m.coeff_of(&[1, 1, 1]), ParamPoly::one());
        let e = expand_elementary(&z).unwrap();
        assert_eq!(e.coeffs.len(), 1);
        assert_eq!(e.coeff_of(&[3]), ParamPoly::one());
    }

    #[test]
    fn power_square() {
        let s = ZPoly::parse("1*z1^1 + 1*z2^1 + 1*z3^1", 3).unwrap().pow(2);
        let m = expand_monomial(&s).unwrap();
        assert_eq!(m.coeff_of(&[2]), ParamPoly::one());
        assert_eq!(m.coeff_of(&[1, 1]), ParamPoly::from_int(2));
        let pw = expand_powersum(&s).unwrap();
        assert_eq!(pw.coeffs.len(), 1);
        assert_eq!(pw.coeff_of(&[1, 1]), ParamPoly::one());
    }

    #[test]
    fn schur_self_expansion() {
        let s21 = schur_polynomial(&p(&[2, 1]), 3);
        let e = expand_schur(&s21).unwrap();
        assert_eq!(e.coeffs.len(), 1);
        assert_eq!(e.coeff_of(&[2, 1]), ParamPoly::one());
    }

    #[test]
    fn asymmetric_rejected() {
        let z = ZPoly::parse("1*z1^2", 2).unwrap();
        assert!(matches!(expand_monomial(&z), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn basis_names_parse() {
        for b in Basis::ALL {
            assert_eq!(b.name().parse::<Basis>().unwrap(), b);
            assert_eq!(b.symbol().to_string().parse::<Basis>().unwrap(), b);
        }
    }
}
