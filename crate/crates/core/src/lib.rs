//! Exact computations on four families of small-degree algebraic-integer
//! sets: construction, field independence, uniformity, coverage and bit
//! extraction.

pub mod error;
pub mod exact;
pub mod families;
pub mod field;
pub mod uniformity;
pub mod coverage;
pub mod bits;
pub mod cli;
pub mod serde_util;

pub use error::{Error, Result};
