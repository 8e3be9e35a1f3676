//! OEIS b-file support: parsing, a fetch-through cache, and alignment of
//! counting families against catalogued sequences.

pub mod align;
pub mod bfile;
pub mod error;
pub mod fetch;
pub mod fixtures;
pub mod id;
pub mod registry;

pub use align::{align, cross_check, find_shift, CrossCheckReport, Mismatch, OeisMapping, MIN_OVERLAP};
pub use bfile::{parse_bfile, BFile};
pub use error::{Error, Result};
pub use fetch::{fetch_bfile, FetchConfig};
pub use id::SequenceId;
pub use registry::{registry, Group, RegistryRow};
