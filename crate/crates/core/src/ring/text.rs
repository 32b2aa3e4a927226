//! Shared tokenizer for the canonical polynomial text form.

use crate::ring::BigRat;
use crate::{Error, Result};

/// One parsed term: coefficient and `(name, exponent)` factors.
pub(crate) type RawTerm = (BigRat, Vec<(String, i64)>);

pub(crate) fn parse_terms(s: &str) -> Result<Vec<RawTerm>> {
    let s = s.trim();
    if s == "0" {
        return Ok(Vec::new());
    }
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    s.split(" + ").map(parse_term).collect()
}

fn parse_term(term: &str) -> Result<RawTerm> {
    let mut parts = term.split('*');
    let coeff: BigRat = parts
        .next()
        .ok_or_else(|| Error::Parse(format!("empty term in `{term}`")))?
        .parse()?;
    let mut factors = Vec::new();
    for f in parts {
        let (name, exp) = f
            .split_once('^')
            .ok_or_else(|| Error::Parse(format!("factor `{f}` lacks an exponent")))?;
        let exp: i64 = exp
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in `{f}`")))?;
        if name.is_empty() {
            return Err(Error::Parse(format!("factor `{f}` lacks a name")));
        }
        factors.push((name.to_string(), exp));
    }
    Ok((coeff, factors))
}

pub(crate) fn write_term(out: &mut String, coeff: &BigRat, factors: impl IntoIterator<Item = (String, i64)>) {
    if !out.is_empty() {
        out.push_str(" + ");
    }
    out.push_str(&coeff.to_string());
    for (name, exp) in factors {
        if exp != 0 {
            out.push_str(&format!("*{name}^{exp}"));
        }
    }
}
