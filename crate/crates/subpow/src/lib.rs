//! Cycle structure of subset powers of directed cycles.
//!
//! The d-th subset power of a digraph G has the d-element vertex
//! subsets of G as vertices, with an edge from A to B whenever the
//! members of A can be paired one-to-one with the members of B along
//! edges of G. For a directed cycle the subset power is a disjoint
//! union of cycles, and this crate computes that decomposition three
//! independent ways:
//!
//! - [`spectrum`] and [`count_cycles`] evaluate an exact closed-form
//!   count for each cycle length, at arbitrary precision.
//! - [`brute_force_spectrum`] enumerates all subsets and groups them
//!   into shift orbits, as a ground-truth oracle for small instances.
//! - [`build_subset_power`] constructs the subset power of any base
//!   digraph explicitly, with matching-based edge tests, and
//!   [`decompose_permutation_cycles`] reads the cycles off the result.
//!
//! The crate is `no_std` (with `alloc`); IO, serialization, and the
//! command-line interface live in the companion `subpow-cli` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

mod cycle_structure;
mod digraph;
mod error;
mod oracle;
mod subset_power;

pub use cycle_structure::{
    binomial, canonical_cycle, count_cycles, exists_cycle, factorize, mobius_count,
    reduce_instance, spectrum, squarefree_terms, CycleSpectrum, Factorization, ReducedInstance,
};
pub use digraph::{decompose_permutation_cycles, make_cycle, Digraph, VertexCycle};
pub use error::{Error, Result};
pub use num_bigint::BigUint;
pub use oracle::{
    brute_force_spectrum, orbit_period, orbit_records, project_mod, shift_subset, OrbitRecord,
    DEFAULT_BUDGET,
};
pub use subset_power::{
    build_subset_power, edge_exists, enumerate_d_subsets, subset_rank, subset_unrank,
    SubsetPowerGraph, SubsetVertex,
};
