//! Finite permutation groups and subgroup perfect codes of Cayley graphs.
//!
//! A subgroup `H` of `G` is a perfect code of `G` when some Cayley graph
//! `Cay(G, S)` has `H` as an independent set that every other vertex meets in
//! exactly one neighbour. The crate decides this with several independent
//! routes (a double-coset criterion, a reduction to 2-subgroups, and an
//! exhaustive connection-set search) and includes a permutation model of
//! `PSL(2, q)` with its classification of subgroup perfect codes.

pub mod corpus;
pub mod error;
pub mod group;
pub mod lattice;
pub mod lcg;
pub mod limits;
pub mod oracle;
pub mod perfect;
pub mod perm;
pub mod psl2;
pub mod spec;
pub mod sylow;
pub mod verify;

pub use error::{Error, Result};
pub use group::{two_part, Group};
pub use limits::Limits;
pub use perm::Permutation;
pub use spec::GroupSpec;
