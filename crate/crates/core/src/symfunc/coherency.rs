use std::fmt;

use super::{Basis, SymExpansion};
use crate::combinatorics::IntPartition;
use crate::ring::ParamPoly;

/// Sign of a coefficient polynomial, judged on its rational coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignClass {
    Zero,
    NonNegative,
    NonPositive,
    Mixed,
}

impl SignClass {
    pub fn of(p: &ParamPoly) -> SignClass {
        let pos = p.terms().any(|(_, c)| c.is_positive());
        let neg = p.terms().any(|(_, c)| c.is_negative());
        match (pos, neg) {
            (false, false) => SignClass::Zero,
            (true, false) => SignClass::NonNegative,
            (false, true) => SignClass::NonPositive,
            (true, true) => SignClass::Mixed,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SignClass::Zero => "zero",
            SignClass::NonNegative => "nonneg",
            SignClass::NonPositive => "nonpos",
            SignClass::Mixed => "mixed",
        }
    }
}

impl fmt::Display for SignClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Observed sign for partitions with an even and an odd number of parts;
/// `None` when the class has no nonzero coefficient.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParityMap {
    pub even: Option<SignClass>,
    pub odd: Option<SignClass>,
}

impl ParityMap {
    /// True when the map is `sign = (-1)^(n - l(lambda))` on every class that
    /// occurs.
    pub fn matches_alternating(&self, n: usize) -> bool {
        let expect = |parity: usize| {
            if (n + parity).is_multiple_of(2) {
                SignClass::NonNegative
            } else {
                SignClass::NonPositive
            }
        };
        self.even.is_none_or(|s| s == expect(0)) && self.odd.is_none_or(|s| s == expect(1))
    }
}

/// The first coefficient that breaks coherency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub partition: IntPartition,
    pub coeff: ParamPoly,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherencyVerdict {
    pub basis: Basis,
    pub entries: Vec<(IntPartition, SignClass)>,
    pub coherent: bool,
    pub violation: Option<Violation>,
    pub parity_map: ParityMap,
    /// Partitions whose coefficient has a non-integral rational coefficient.
    pub non_integral: Vec<IntPartition>,
}

/// Classifies every coefficient and checks that signs depend only on the
/// parity of the number of parts.
pub fn sign_coherency(exp: &SymExpansion) -> CoherencyVerdict {
    let mut entries = Vec::new();
    let mut map = ParityMap::default();
    let mut violation = None;
    let mut non_integral = Vec::new();
    for (lambda, c) in &exp.coeffs {
        let s = SignClass::of(c);
        entries.push((lambda.clone(), s));
        if !c.is_integral() {
            non_integral.push(lambda.clone());
        }
        if violation.is_some() {
            continue;
        }
        let slot = if lambda.len() % 2 == 0 {
            &mut map.even
        } else {
            &mut map.odd
        };
        match s {
            SignClass::Zero => {}
            SignClass::Mixed => {
                violation = Some(Violation {
                    partition: lambda.clone(),
                    coeff: c.clone(),
                    reason: "coefficient has terms of both signs".into(),
                });
            }
            _ => match slot {
                None => *slot = Some(s),
                Some(prev) if *prev == s => {}
                Some(prev) => {
                    violation = Some(Violation {
                        partition: lambda.clone(),
                        coeff: c.clone(),
                        reason: format!("sign {s} disagrees with {prev} seen for the same parity of length"),
                    });
                }
            },
        }
    }
    CoherencyVerdict {
        basis: exp.basis,
        entries,
        coherent: violation.is_none(),
        violation,
        parity_map: map,
        non_integral,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn mixed_coefficient_is_reported() {
        let mut coeffs = BTreeMap::new();
        let l = IntPartition::new(vec![2, 1]);
        coeffs.insert(IntPartition::new(vec![1]), ParamPoly::q());
        coeffs.insert(l.clone(), &ParamPoly::q() - &ParamPoly::t());
        let v = sign_coherency(&SymExpansion {
            basis: Basis::Monomial,
            nvars: 3,
            coeffs,
        });
        assert!(!v.coherent);
        assert_eq!(v.violation.unwrap().partition, l);
    }

    #[test]
    fn parity_disagreement_is_reported() {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(IntPartition::new(vec![1]), ParamPoly::q());
        coeffs.insert(IntPartition::new(vec![2]), -&ParamPoly::t());
        let v = sign_coherency(&SymExpansion {
            basis: Basis::Schur,
            nvars: 2,
            coeffs,
        });
        assert!(!v.coherent);
        assert_eq!(v.violation.unwrap().partition, IntPartition::new(vec![2]));
    }
}
