//! The recurrence engine against both brute-force routes.

use straub_core::engine::{a_poly, straub_poly};
use straub_core::moments::{distribution, Distribution};
use straub_core::partitions::{
    beta_set, enumerate_core_distinct, hook_lengths, is_core, partition_from_beta, Partition,
};
use straub_core::poset::{a_poly_bruteforce, build_poset, straub_poly_bruteforce};

#[test]
fn three_routes_agree_for_small_n() {
    for n in 0..=3u64 {
        let fast = straub_poly(n).unwrap();
        assert_eq!(fast, straub_poly_bruteforce(n).unwrap(), "n={n}");
        assert_eq!(a_poly(n).unwrap(), a_poly_bruteforce(n).unwrap(), "n={n}");
        let cores = enumerate_core_distinct(2 * n + 1, 2 * n + 3).unwrap();
        assert_eq!(
            Distribution::from_sizes(cores.iter().map(Partition::size)),
            distribution(&fast).unwrap(),
            "n={n}"
        );
    }
}

#[test]
fn bivariate_enumerator_matches_ideals_at_n_four() {
    assert_eq!(a_poly(4).unwrap(), a_poly_bruteforce(4).unwrap());
}

#[test]
fn cores_correspond_to_ideals_through_beta_sets() {
    for (s, t) in [(3u64, 5u64), (5, 7), (7, 9)] {
        let poset = build_poset(s, t).unwrap();
        let mut from_ideals: Vec<Partition> = poset
            .ideals_no_consec()
            .unwrap()
            .map(|i| {
                partition_from_beta(&straub_core::partitions::BetaSet::new(i.members()).unwrap())
            })
            .collect();
        from_ideals.sort_by(|a, b| {
            a.size()
                .cmp(&b.size())
                .then_with(|| a.parts().cmp(b.parts()))
        });
        let cores = enumerate_core_distinct(s, t).unwrap();
        assert_eq!(cores, from_ideals, "({s},{t})");
        for p in &cores {
            assert!(is_core(p, s) && is_core(p, t) && p.has_distinct_parts());
            assert!(!beta_set(p).contains_consecutive());
            assert!(hook_lengths(p).iter().all(|h| h % s != 0 && h % t != 0));
        }
    }
}

#[test]
fn beta_sweep() {
    // every partition with at most 8 parts, each at most 20
    fn walk(parts: &mut Vec<u64>, max_part: u64, seen: &mut usize) {
        let p = Partition::new(parts.clone()).unwrap();
        assert_eq!(partition_from_beta(&beta_set(&p)), p);
        *seen += 1;
        if parts.len() == 8 {
            return;
        }
        for next in 1..=max_part {
            parts.push(next);
            walk(parts, next, seen);
            parts.pop();
        }
    }
    let mut seen = 0;
    walk(&mut Vec::new(), 20, &mut seen);
    // partitions fitting in an 8 x 20 box
    assert_eq!(seen, 3_108_105);
}
