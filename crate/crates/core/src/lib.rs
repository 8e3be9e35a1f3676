//! Exact counting and enumeration of integer compositions with restricted parts.
//!
//! A composition of `n` is an ordered sequence of positive integers summing to
//! `n`. This crate counts compositions whose parts lie in a residue class
//! (`s_{r,m}`), in a size window (`t_q`, `u_q`, `v_{p,q}`), optionally with a
//! fixed number of parts, and does so by several independent routes:
//!
//! - [`enumerate`]: exhaustive generation, the ground-truth oracle;
//! - [`recurrences`]: memoized linear recurrences;
//! - [`closed_forms`]: binomial and bracket-coefficient formulas;
//! - [`series`]: exact expansion of rational generating functions.
//!
//! [`family::CountingFamily`] ties the routes together behind a single
//! dispatch so callers can compare them.

pub mod closed_forms;
pub mod composition;
pub mod count;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod recurrences;
pub mod series;

pub use composition::{
    admits_part, normalize_mod_class, validate_composition, Composition, ModClass, Normalized, PartConstraint,
    PartKind, SizeBounds,
};
pub use count::BigCount;
pub use enumerate::{count_by_enumeration, enumerate_compositions, EnumerationBudget};
pub use error::{Error, Result};
pub use family::{CountingFamily, Method};

/// Default ceiling on the index `n` accepted by the recurrence evaluators.
pub const DEFAULT_MAX_N: u64 = 10_000;
