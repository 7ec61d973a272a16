//! Brute-force finite group theory: subgroup lattices, maximal and Frattini
//! subgroups, Frattini quotients, nilpotency, and invariable generation.
//!
//! Groups are multiplication tables over indices `0..n`. Every lattice
//! computation enumerates subgroups outright, so the operations carry size
//! caps and refuse larger inputs with [`GroupError::GroupTooLarge`].

pub mod catalog;
mod group;
mod invgen;
mod subgroup;

pub use group::{cycle_notation, factorize, FiniteGroup, GroupError, PERMUTATION_ORDER_LIMIT};
pub use invgen::{InvGenReport, InvGenWitness, DEFAULT_BUDGET, INVGEN_CRITERION_LIMIT};
pub use subgroup::{QuotientGroup, Subgroup, LATTICE_LIMIT, NON_GENERATOR_LIMIT};
