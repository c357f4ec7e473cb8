//! Exact computation of the generating polynomials `S_n(q)` of
//! `(2n+1, 2n+3)`-core partitions with distinct parts, their moments, and
//! the polynomial-in-`n` formulas and scaled limits those moments follow.
//!
//! The crate carries two slow oracles ([`partitions`] and [`poset`]) next to
//! the fast recurrence [`engine`], so every engine result can be checked by
//! independent means on small inputs.

pub mod bipoly;
pub mod engine;
pub mod error;
pub mod moments;
pub mod partitions;
pub mod poset;
pub mod reference;

pub use bipoly::{QPoly, SparseBiPoly};
pub use error::{Error, Result};
