//! Prints wall time, term counts and memo sizes for `S_n` over a range of `n`.
//!
//! cargo run --release -p straub-core --example engine_timing -- 12

use std::time::Instant;

use straub_core::engine::{s_count, MemoStore};

fn main() {
    let max_n: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(10);
    let start = Instant::now();
    let s = s_count(400);
    println!("s(400): {} bits in {:.2?}", s.bits(), start.elapsed());
    for n in 0..=max_n {
        let store = MemoStore::new();
        let start = Instant::now();
        let s_n = store.straub_poly(n).expect("engine");
        println!(
            "n={n:2} terms={:6} degree={:6} memo={:?} {:.2?}",
            s_n.len(),
            s_n.degree_q(),
            store.len(),
            start.elapsed()
        );
    }
}
