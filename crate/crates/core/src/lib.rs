//! Exact counting of lattice paths that avoid a fixed step pattern.
//!
//! Paths take unit steps `u` (up) and `r` (right) from the origin and stay
//! weakly above the line `y = x - l`; `l = 0` gives ballot paths. A path
//! avoids a pattern when the pattern never occurs as a contiguous factor of
//! its step sequence.
//!
//! The crate is organised around four independent routes to the same numbers:
//!
//! * [`oracle`]: ground truth, by exhaustive enumeration and by a dynamic
//!   program over a factor-matching automaton. Works for every pattern.
//! * [`recurrence`]: class-specific recurrences that fill whole tables,
//!   including the polynomial extension below the boundary for `r^a`.
//! * [`closedform`]: explicit binomial-sum formulas evaluated in exact
//!   rational arithmetic.
//! * [`pattern`]: the structural analysis (dimensions, depth, bifixes) that
//!   decides which of the above apply.
//!
//! [`dispatch`] picks a method for a query, [`verify`] cross-checks all of
//! them, and [`golden`] holds the published reference tables.

pub mod closedform;
pub mod dispatch;
pub mod error;
pub mod golden;
pub mod oracle;
pub mod pattern;
pub mod recurrence;
pub mod render;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use pattern::{parse_pattern, Length4, Pattern, PatternClass, PatternProfile, Step};
pub use table::{CountTable, Region};

/// Arbitrary-precision signed path count.
///
/// Signed because the polynomial extension of a table below its boundary
/// can go negative.
pub type Count = num_bigint::BigInt;

/// Arbitrary-precision rational used for closed-form intermediates.
pub type ExactRational = num_rational::BigRational;
