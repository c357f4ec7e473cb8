//! Recurrence engine: integer counts and weighted enumerators.

mod cache;
mod counts;
mod kernel;
mod weighted;

pub use cache::{PolyCache, CACHE_DIR_ENV};
pub use counts::{e_count, o_count, p_count, s_count, CountTables};
pub use kernel::RowPoly;
pub use weighted::{
    a_poly, e_poly, max_size, max_size_formula, o_poly, p_poly, straub_poly, MemoStore,
};

use crate::bipoly::QPoly;
use crate::error::Result;

/// `S_n(q)`, read from `cache` when present and stored there otherwise.
pub fn straub_poly_cached(n: u64, cache: Option<&PolyCache>) -> Result<QPoly> {
    match cache {
        Some(c) => c.get_or_compute(n, || straub_poly(n)),
        None => straub_poly(n),
    }
}
