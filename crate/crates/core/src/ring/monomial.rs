use std::cmp::Ordering;

use smallvec::SmallVec;

/// Graded lexicographic order: lower total degree first; within a degree,
/// the vector with the larger leading exponent comes first, so degree two in
/// `(x, y)` lists `x^2, x*y, y^2`.
pub fn grlex_cmp<T: Copy + Into<i64>>(a: &[T], b: &[T]) -> Ordering {
    let deg = |v: &[T]| v.iter().map(|&e| e.into()).sum::<i64>();
    deg(a).cmp(&deg(b)).then_with(|| {
        for (&x, &y) in a.iter().zip(b) {
            match x.into().cmp(&y.into()) {
                Ordering::Equal => continue,
                other => return other.reverse(),
            }
        }
        a.len().cmp(&b.len())
    })
}

/// Exponent vector of a monomial in `z1..zn`, ordered by [`grlex_cmp`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ZExp(pub SmallVec<[u32; 8]>);

impl ZExp {
    pub fn zero(nvars: usize) -> Self {
        ZExp(SmallVec::from_elem(0, nvars))
    }

    pub fn from_slice(exps: &[u32]) -> Self {
        ZExp(SmallVec::from_slice(exps))
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub(crate) fn add(&self, other: &ZExp) -> ZExp {
        ZExp(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for ZExp {
    fn cmp(&self, other: &Self) -> Ordering {
        grlex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for ZExp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_orders_by_degree_then_leading_exponent() {
        let mut v = vec![[0u32, 2], [1, 0], [2, 0], [0, 0], [1, 1], [0, 1]];
        v.sort_by(|a, b| grlex_cmp(a, b));
        assert_eq!(v, vec![[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [0, 2]]);
    }

    #[test]
    fn grlex_handles_negative_exponents() {
        assert_eq!(grlex_cmp(&[-1i64, 0], &[0i64, 0]), Ordering::Less);
        assert_eq!(grlex_cmp(&[1i64, -1], &[0i64, 0]), Ordering::Less);
    }
}
