//! Exact combinatorics on permutations of `{1..n}`: constrained-permutation
//! constructors, permanents and determinants, bitmask counting, pruned
//! backtracking searches, and ordering checks in cyclic groups.

pub mod additive;
pub mod cli;
pub mod config;
pub mod constructor;
pub mod counting;
pub mod linalg;
pub mod perm;
pub mod primes;
pub mod search;
pub mod sequences;

pub use config::Limits;
pub use linalg::{CellPredicate, ExactMatrix};
pub use perm::Permutation;
pub use sequences::DoublingSequence;
