use std::cmp::Ordering;
use std::fmt;

/// Integer partition `lambda` with weakly decreasing positive parts.
///
/// Ordered by size, then reverse lexicographically, so partitions of 3 come
/// out as `(3), (2,1), (1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPartition {
    parts: Vec<u32>,
}

impl IntPartition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntPartition { parts }
    }

    pub fn empty() -> Self {
        IntPartition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts, `l(lambda)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|lambda|`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn largest_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Parts padded with zeros to `len`; `None` if there are more parts.
    pub fn padded(&self, len: usize) -> Option<Vec<u32>> {
        if self.parts.len() > len {
            return None;
        }
        let mut v = self.parts.clone();
        v.resize(len, 0);
        Some(v)
    }

    /// Dominance order: `self >= other` when every partial sum is at least
    /// the corresponding one of `other`. Sizes must agree.
    pub fn dominates(&self, other: &IntPartition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.len().max(other.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> IntPartition {
        let mut out = Vec::new();
        for i in 1..=self.largest_part() {
            out.push(self.parts.iter().filter(|&&p| p >= i).count() as u32);
        }
        IntPartition { parts: out }
    }
}

impl Ord for IntPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for IntPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", items.join(","))
    }
}

/// Partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions_of(n: u32) -> Vec<IntPartition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen(n, n, &mut cur, &mut out);
    out
}

fn gen(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<IntPartition>) {
    if rest == 0 {
        out.push(IntPartition { parts: cur.clone() });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        gen(rest - p, p, cur, out);
        cur.pop();
    }
}

/// Every `lambda` with `|lambda| <= max_size` and `l(lambda) <= max_length`,
/// the empty partition included, in the [`IntPartition`] order.
pub fn enumerate_int_partitions(max_size: u32, max_length: usize) -> Vec<IntPartition> {
    (0..=max_size)
        .flat_map(partitions_of)
        .filter(|p| p.len() <= max_length)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(v: &[IntPartition]) -> Vec<String> {
        v.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(show(&enumerate_int_partitions(0, 3)), vec!["()"]);
        assert_eq!(
            show(&enumerate_int_partitions(3, 3)),
            vec!["()", "(1)", "(2)", "(1,1)", "(3)", "(2,1)", "(1,1,1)"]
        );
        assert!(!show(&enumerate_int_partitions(3, 2)).contains(&"(1,1,1)".to_string()));
    }

    #[test]
    fn counts_match_partition_numbers() {
        let p: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn order_is_sorted() {
        let v = enumerate_int_partitions(7, 7);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn dominance_and_conjugate() {
        let a = IntPartition::new(vec![2, 1]);
        let b = IntPartition::new(vec![1, 1, 1]);
        assert!(a.dominates(&b));
        assert!(!b.dominates(&a));
        assert_eq!(
            IntPartition::new(vec![3, 1]).conjugate(),
            IntPartition::new(vec![2, 1, 1])
        );
        assert_eq!(IntPartition::new(vec![0, 1, 2]).parts(), &[2, 1]);
    }
}
