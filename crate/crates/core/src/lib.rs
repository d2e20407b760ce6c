//! Exact toolkit for k-uniform intersecting and almost intersecting set families.
//!
//! Sets are bitmasks over a ground set `[n]` with `n <= 64`, families are
//! canonically ordered bitmask collections, and all arithmetic on binomial
//! bound formulas is exact (arbitrary precision, no floating point). The crate
//! provides:
//!
//! - [`family`]: k-subsets, families, and the intersection-structure predicates
//!   (intersecting, almost intersecting, degrees, links, isomorphism),
//! - [`constructions`]: the named extremal families (full stars, the `B_r`
//!   families, the Hilton–Milner family, `B+`, lexicographic segments),
//! - [`partition`]: the canonical core/pairs decomposition of an almost
//!   intersecting family and its full tails,
//! - [`bounds`]: exact binomial arithmetic, every closed-form size/degree
//!   bound, the set-pair (Bollobás) check, and grid checkers for the
//!   supporting inequalities,
//! - [`cross`]: shadows, cross-intersecting predicates, and lex compression,
//! - [`search`]: exact maximum almost intersecting family computation by
//!   branch and bound over the Kneser disjointness graph, with an independent
//!   brute-force oracle,
//! - [`json`]: the family JSON interchange format used by the CLI.

pub mod bounds;
pub mod constructions;
pub mod cross;
pub mod family;
pub mod json;
pub mod partition;
pub mod search;

pub use bounds::BigCount;
pub use family::{family_isomorphic, KSubset, Params, SetFamily};
pub use partition::{canonical_partition, CanonicalPartition};

/// Errors shared by every module of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A caller-supplied value violates an operation's parameter contract.
    #[error("invalid parameter: {0}")]
    Param(String),
    /// Inputs are structurally valid but outside an operation's domain.
    #[error("outside domain: {0}")]
    Domain(String),
    /// An operation requiring an (almost) intersecting family got neither.
    #[error("not almost intersecting: {0}")]
    NotAlmostIntersecting(String),
    /// A guard against runaway enumeration or search.
    #[error("resource limit: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;
