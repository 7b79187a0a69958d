//! A desk-scale computational group theory workbench centered on
//! products of double cosets.
//!
//! The crate provides:
//!
//! * [`perm`] — exact permutation arithmetic and permutation groups with
//!   deterministic stabilizer chains;
//! * [`cosets`] — materialized right coset spaces with their suborbit
//!   partition and double-coset labeling;
//! * [`factor`] — checkers for factorizations of a group into products
//!   of conjugate subgroups and squares of double cosets, both exact and
//!   probabilistic;
//! * [`hecke`] — intersection numbers of the double-coset algebra and
//!   collapsed adjacency matrices, by direct counting on coset spaces;
//! * [`coxeter`] — finite Coxeter systems as permutations of their root
//!   systems, with parabolic coset actions;
//! * [`dioid`] — the idempotent semiring of unions of Bruhat double
//!   cosets, driven by the length-based multiplication recursion;
//! * [`bruteforce`] — exhaustive reference implementations used as
//!   independent oracles in tests and verification commands.
//!
//! Everything is exact integer/rational arithmetic; there is no floating
//! point anywhere. All randomized procedures take an explicit seed and
//! are reproducible across platforms.

pub mod bruteforce;
pub mod cosets;
pub mod coxeter;
pub mod dioid;
pub mod error;
pub mod factor;
pub mod hecke;
pub mod perm;
pub mod rng;

pub use cosets::CosetSpace;
pub use coxeter::{CoxeterSystem, CoxeterType};
pub use dioid::{DioidElement, DoubleCosetDioid};
pub use error::{Error, Result};
pub use hecke::CollapsedAdjacency;
pub use perm::{PermGroup, Permutation};

/// Default resource bounds, overridable per call site.
pub mod limits {
    /// Largest group order that exhaustive enumeration will attempt.
    pub const DEFAULT_ENUM_BOUND: u64 = 1_000_000;
    /// Largest coset space that will be materialized.
    pub const DEFAULT_INDEX_BOUND: u64 = 1_000_000;
    /// Largest Coxeter group order accepted at construction.
    pub const DEFAULT_COXETER_BOUND: u64 = 1_000_000_000;
}
