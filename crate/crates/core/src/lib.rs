//! Frequent closed itemset mining with minimal generators.
//!
//! Two routes produce the same kind of result, a [`PatternSet`] of closed
//! itemsets with supports and minimal generators:
//!
//! * [`mine_closed`] runs a levelwise miner over the whole database;
//! * [`run_dac`] splits the database into contiguous partitions, mines each
//!   one, merges the partial results pairwise with exact bitset support
//!   counting, and repairs the merged list.
//!
//! [`oracle`] holds a brute-force reference for small universes.

pub mod bench;
pub mod db;
pub mod error;
pub mod fixtures;
pub mod index;
pub mod itemset;
pub mod merge;
pub mod miner;
pub mod oracle;
pub mod pattern;
pub mod synth;
pub mod tidset;

pub use db::{absolute_minsup, parse_fimi, parse_fimi_str, partition_db, MinsupSpec, Partition, TransactionDatabase};
pub use error::{Error, Result};
pub use index::{TidIndex, TidMask};
pub use itemset::{Item, Itemset};
pub use merge::{find_generators, prune_closure, run_dac, run_dac_with, ufcigs_merge, DacOptions};
pub use miner::{mine_closed, mine_closed_masked};
pub use oracle::{compare, oracle_closed, DiffReport};
pub use pattern::{ClosedPattern, PatternSet};
pub use synth::gen_synthetic;
