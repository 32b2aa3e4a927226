//! Enumeration and special numbers.
//!
//! All streams are deterministic; their order is part of the contract so that
//! reports and snapshots are stable.

mod binomial;
mod compositions;
mod int_partition;
mod permutations;
mod sequence;
mod set_partition;

pub use binomial::{binom, factorial, generalized_binom, mod_binom, BinomialTable};
pub use compositions::{compositions_positive, enumerate_bounded_compositions};
pub use int_partition::{enumerate_int_partitions, partitions_of, IntPartition};
pub(crate) use permutations::next_permutation;
pub use permutations::{enumerate_permutations, Permutations};
pub use sequence::{a_seq, ASequence};
pub use set_partition::{bell_number, enumerate_set_partitions, SetPartition, SetPartitions};
