use std::fs;

use straub_core::engine::{straub_poly, straub_poly_cached, MemoStore, PolyCache};
use straub_core::Error;

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(f)
}

#[test]
fn cache_hit_is_byte_identical_to_recomputation() {
    let dir = tempfile::tempdir().unwrap();
    let cache = PolyCache::open(dir.path().join("nested")).unwrap();
    for n in 0..=7 {
        let first = straub_poly_cached(n, Some(&cache)).unwrap();
        let bytes = fs::read(cache.path(n)).unwrap();
        assert_eq!(bytes, straub_poly(n).unwrap().to_text(n).into_bytes());
        let second = straub_poly_cached(n, Some(&cache)).unwrap();
        assert_eq!(first, second);
        cache.store(n, &second).unwrap();
        assert_eq!(fs::read(cache.path(n)).unwrap(), bytes);
    }
}

#[test]
fn corrupt_cache_entries_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    let cache = PolyCache::open(dir.path()).unwrap();
    straub_poly_cached(3, Some(&cache)).unwrap();
    let text = fs::read_to_string(cache.path(3)).unwrap();
    fs::write(cache.path(4), &text).unwrap();
    assert!(matches!(cache.load(4), Err(Error::CacheCorrupt { .. })));
    fs::write(cache.path(5), "garbage\n").unwrap();
    assert!(matches!(
        straub_poly_cached(5, Some(&cache)),
        Err(Error::CacheCorrupt { .. })
    ));
}

#[test]
fn thread_count_does_not_change_results() {
    let one: Vec<_> = in_pool(1, || (0..=10).map(|n| straub_poly(n).unwrap()).collect());
    let many: Vec<_> = in_pool(4, || (0..=10).map(|n| straub_poly(n).unwrap()).collect());
    assert_eq!(one, many);
    for (n, (a, b)) in one.iter().zip(&many).enumerate() {
        assert_eq!(a.to_text(n as u64), b.to_text(n as u64));
    }
}

#[test]
fn shared_store_across_threads() {
    use rayon::prelude::*;
    let store = MemoStore::new();
    let parallel: Vec<_> = in_pool(4, || {
        (0..=8u64)
            .into_par_iter()
            .map(|n| store.straub_poly(n).unwrap())
            .collect()
    });
    let serial: Vec<_> = (0..=8).map(|n| straub_poly(n).unwrap()).collect();
    assert_eq!(parallel, serial);
    store.clear();
    assert!(store.is_empty());
}
