//! Exact combinatorics over the symmetric group.
//!
//! Permutations with their cycle structure, conjugacy classes counted through
//! integer partitions, fixed-head ("caput") counting and enumeration, circular
//! arrangements, and the consanguinity-tree coordinate model. Every closed form
//! here has a brute-force counterpart in [`oracle`].
//!
//! Points are 1-based everywhere in the public interface, and composition is
//! right-to-left: `compose(p, q)` applies `q` first.

pub mod arith;
pub mod caput;
pub mod cli;
pub mod error;
pub mod genealogy;
pub mod oracle;
pub mod partitions;
pub mod perm;
pub mod problems;

pub use caput::{count_caput, derangements, enumerate_caput, is_caput_of, CaputSpec, Head, HeadMode};
pub use error::{Error, Result};
pub use partitions::{
    class_order, count_partitions, cycle_types_of, enumerate_partitions, two_part_count, ClassOrder, Partition,
};
pub use perm::{compose, Cycle, CycleType, Permutation};

/// Version tag written into every machine-readable output.
pub const FORMAT_VERSION: &str = "1";
