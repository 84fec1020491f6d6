//! Counting (k, l)-pullback parking functions.
//!
//! Three independent methods are provided: exhaustive simulation
//! ([`oracle`]), summation over outcome words ([`perm_count`]) and a
//! memoized recursion ([`recursion`]). [`verify`] cross-checks them.

pub mod error;
pub mod oracle;
pub mod parking;
pub mod perm_count;
pub mod recursion;
pub mod sequences;
pub mod types;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use types::{Ceiling, Count, OutcomeWord, Params, PreferenceList};
