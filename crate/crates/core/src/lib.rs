//! Exact combinatorics of the wonderful models of the braid arrangement.
//!
//! The crate materializes the boundary-strata posets of the minimal, maximal
//! and supermaximal models, the extended symmetric-group actions on them, the
//! monomial bases of their integer cohomology, and the exact generating
//! functions tying all of that together. Everything is computed over
//! arbitrary-precision rationals; every closed formula has an independent
//! brute-force counterpart so the two routes can be diffed exactly.

pub mod action;
pub mod bijection;
pub mod block;
pub mod closure;
pub mod cohomology;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod genfun;
pub mod labelled;
pub mod nested;
pub mod orbits;
pub mod poly;
pub mod series;
pub mod verify;
pub mod trees;

pub use action::{act_block, act_chain, act_nested, ExtPermutation, Permutation};
pub use block::{decompose_irreducibles, Block, SetPartition};
pub use closure::{building_closure, maximal_seed};
pub use error::{Error, Result};
pub use labelled::{act_labelled_partition, LabelledPartition};
pub use nested::{is_nested, phi_embed, CChain, ChainNested, NestedSet};
pub use orbits::{orbit_count, ActionMode};
