//! Difference sets disjoint from a subgroup: construction, search, and
//! machine-checkable nonexistence certificates.
//!
//! The crate revolves around one combinatorial object. Inside a finite
//! group `G` with a normal subgroup `H`, a *DRAD difference set* is a
//! difference set `D` that avoids its own inverse set and satisfies
//! `G \ (D u D^-1) = H`. The library provides:
//!
//! * exact group construction: six presentation families of order `4p^2`
//!   parameterized by an odd prime, plus a validated catalog of all groups
//!   of orders 16 and 36 ([`group`]);
//! * verification of the difference-set and DRAD conditions, and
//!   enumeration of the subgroups `H` that could possibly work
//!   ([`design`]);
//! * exhaustive backtracking search over inverse-pair choices with exact
//!   pruning ([`search`]);
//! * three nonexistence engines producing re-checkable certificates:
//!   an involution-subgroup obstruction, a character-theoretic field
//!   obstruction backed by exact cyclotomic arithmetic, and a GF(2)
//!   parity-infeasibility engine ([`obstruction`], [`cyclotomic`],
//!   [`characters`], [`gf2`]);
//! * a Boolean polynomial ring engine that replays the symbolic
//!   nonexistence proof for the `G15` family ([`boolring`]);
//! * orchestration, witness files and JSON reports ([`pipeline`],
//!   [`witness`], [`report`]).
//!
//! The `examples/` directory has one runnable program per capability; the
//! `drad` binary exposes the same functionality as subcommands.

pub mod bits;
pub mod boolring;
pub mod characters;
pub mod cyclotomic;
pub mod design;
pub mod error;
pub mod gf2;
pub mod group;
pub mod obstruction;
pub mod pipeline;
pub mod report;
pub mod search;
pub mod witness;

pub use bits::SubsetBits;
pub use error::{Error, Result};
pub use group::{find_f, load_catalog, make_family, Family, FamilySpec, GroupTable};
