//! Subgroup perfect codes and (a,b)-regular sets in Cayley graphs.
//!
//! Given a finite group `G` and a subgroup `H`, the crate decides whether `H`
//! is a perfect code of `G`, and builds inverse-closed connection sets `S`
//! for which `H` is an `(a,b)`-regular set of `Cay(G, S)`: every vertex of
//! `H` has exactly `a` neighbours in `H`, every other vertex exactly `b`.
//!
//! The construction works one block `HxH ∪ Hx⁻¹H` at a time. Inside a
//! block, right cosets of `H` form a multigraph whose parallel edges split
//! into simple layers (complete or complete bipartite graphs); explicit
//! 1-factorizations of those layers give disjoint inverse-closed unions of
//! right transversals. [`verifier`] rechecks every result by brute force.

pub mod builder;
pub mod catalog;
pub mod cosets;
pub mod error;
pub mod factorization;
pub mod formats;
pub mod group;
pub mod perfect_code;
pub mod transversals;
pub mod verifier;

pub use builder::{build_connection_set, inner_set, BuildOptions, ConnectionBuilder, ConnectionSet};
pub use catalog::catalog;
pub use cosets::{all_subgroups, ClassBlock, ClassDecomposition, Subgroup};
pub use error::{Error, Result};
pub use factorization::{LayeredCosetGraph, Matching};
pub use group::{ElementId, GroupLimits, GroupTable, Permutation, IDENTITY};
pub use perfect_code::{is_perfect_code, oracle_inverse_closed_transversal, PerfectCodeVerdict};
pub use transversals::{bundle_for_block, TransversalBundle};
pub use verifier::{check_regular_set, exhaustive_regular_search, RegularSetReport};
