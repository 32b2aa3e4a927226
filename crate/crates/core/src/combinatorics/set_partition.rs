use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::binom;

/// Partition of `{1..n}` into blocks ordered by their minimum element; each
/// block is sorted ascending, so the first block always contains 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Builds from a restricted growth string: `rgs[i]` is the block of
    /// element `i + 1`, `rgs[0] = 0` and each entry is at most one more than
    /// the maximum before it.
    pub fn from_rgs(rgs: &[usize]) -> Option<Self> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &b) in rgs.iter().enumerate() {
            match b.cmp(&blocks.len()) {
                std::cmp::Ordering::Less => blocks[b].push(i + 1),
                std::cmp::Ordering::Equal => blocks.push(vec![i + 1]),
                std::cmp::Ordering::Greater => return None,
            }
        }
        Some(SetPartition { n: rgs.len(), blocks })
    }

    /// Validates and canonicalises arbitrary blocks.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Option<Self> {
        let mut rgs = vec![usize::MAX; n];
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
            if b.is_empty() {
                return None;
            }
        }
        blocks.sort_by_key(|b| b[0]);
        for (k, b) in blocks.iter().enumerate() {
            for &v in b {
                if v == 0 || v > n || rgs[v - 1] != usize::MAX {
                    return None;
                }
                rgs[v - 1] = k;
            }
        }
        if rgs.contains(&usize::MAX) {
            return None;
        }
        Some(SetPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks, `|P|`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let items: Vec<String> = b.iter().map(usize::to_string).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        f.write_str(&parts.join("|"))
    }
}

/// Iterator over set partitions of `{1..n}` in lexicographic order of their
/// restricted growth strings.
pub struct SetPartitions {
    rgs: Vec<usize>,
    /// `prefix_max[i]` is the maximum of `rgs[..=i]`.
    prefix_max: Vec<usize>,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let out = SetPartition::from_rgs(&self.rgs).expect("valid restricted growth string");
        let n = self.rgs.len();
        // Increment the rightmost position that can grow, reset the tail.
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.rgs[i] <= self.prefix_max[i - 1] {
                self.rgs[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                break;
            }
        }
        Some(out)
    }
}

/// Every set partition of `{1..n}` exactly once, in canonical block order.
/// `n = 0` yields the single empty partition.
pub fn enumerate_set_partitions(n: usize) -> SetPartitions {
    SetPartitions {
        rgs: vec![0; n],
        prefix_max: vec![0; n],
        done: false,
    }
}

/// Bell number via `B(n+1) = sum_k C(n, k) B(k)`.
pub fn bell_number(n: usize) -> BigUint {
    let mut bell = vec![BigUint::one()];
    for m in 0..n {
        let mut next = BigUint::zero();
        for (k, b) in bell.iter().enumerate() {
            next += binom(m as u64, k as i64).magnitude() * b;
        }
        bell.push(next);
    }
    bell[n].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_single_partition() {
        let all: Vec<_> = enumerate_set_partitions(1).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].to_string(), "{1}");
    }

    #[test]
    fn n3_matches_the_five_partitions() {
        let all: Vec<String> = enumerate_set_partitions(3).map(|p| p.to_string()).collect();
        assert_eq!(
            all,
            vec!["{1,2,3}", "{1,2}|{3}", "{1,3}|{2}", "{1}|{2,3}", "{1}|{2}|{3}"]
        );
    }

    #[test]
    fn bell_counts() {
        assert_eq!(bell_number(7), BigUint::from(877u32));
        for n in 0..=10 {
            assert_eq!(
                BigUint::from(enumerate_set_partitions(n).count()),
                bell_number(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn block_order_invariant() {
        for p in enumerate_set_partitions(6) {
            let mins: Vec<usize> = p.blocks().iter().map(|b| b[0]).collect();
            assert!(mins.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(mins[0], 1);
            let mut all: Vec<usize> = p.blocks().iter().flatten().copied().collect();
            all.sort_unstable();
            assert_eq!(all, (1..=6).collect::<Vec<_>>());
            for b in p.blocks() {
                assert!(b.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn from_blocks_canonicalises() {
        let p = SetPartition::from_blocks(5, vec![vec![5, 3], vec![4, 1, 2]]).unwrap();
        assert_eq!(p.to_string(), "{1,2,4}|{3,5}");
        assert!(SetPartition::from_blocks(3, vec![vec![1, 2]]).is_none());
        assert!(SetPartition::from_blocks(2, vec![vec![1, 2], vec![2]]).is_none());
        assert!(SetPartition::from_rgs(&[0, 2]).is_none());
    }
}
