//! Round-trip, differential and invariant checks beyond the unit tests.

use proptest::prelude::*;
use sweepmap::{
    check_image_properties, desk_grid, enumerate_paths, invert_sweep, random_path, rank_sequence,
    recover_levels, recover_levels_naive, sweep_map, validate_path, DyckPath, Letter, PathParams,
};

#[test]
fn every_grid_path_round_trips() {
    for params in desk_grid() {
        for path in enumerate_paths(params) {
            let image = sweep_map(&path);
            assert_eq!(
                recover_levels(&image.sigma, params).unwrap(),
                image.tau,
                "{path}"
            );
            assert_eq!(invert_sweep(&image.sigma, params).unwrap(), path);
            assert!(check_image_properties(&image).is_empty(), "{path}");
        }
    }
}

#[test]
fn naive_and_fast_agree_on_seeded_paths() {
    for params in desk_grid() {
        for seed in 0..1000 {
            let image = sweep_map(&random_path(params, seed));
            let fast = recover_levels(&image.sigma, params);
            let naive = recover_levels_naive(&image.sigma, params);
            assert_eq!(fast, naive, "{params} seed {seed}");
            assert_eq!(fast.unwrap(), image.tau);
        }
    }
}

/// Every word with σ₁ = S and the right letter counts either fails to invert
/// or inverts to a path whose image is that word again. Both
/// implementations agree on which, error included.
#[test]
fn arbitrary_sigma_words_invert_consistently() {
    for (k, n) in [(1, 5), (2, 4), (3, 3)] {
        let params = PathParams::new(k, n).unwrap();
        let len = params.len();
        let mut accepted = 0usize;
        for mask in 0u32..(1 << (len - 1)) {
            if mask.count_ones() as usize != n - 1 {
                continue;
            }
            let mut sigma = vec![Letter::S];
            sigma.extend((0..len - 1).map(|i| {
                if mask >> i & 1 == 1 {
                    Letter::S
                } else {
                    Letter::W
                }
            }));
            let fast = recover_levels(&sigma, params);
            assert_eq!(fast, recover_levels_naive(&sigma, params));
            if let Ok(path) = invert_sweep(&sigma, params) {
                assert_eq!(sweep_map(&path).sigma, sigma);
                accepted += 1;
            }
        }
        assert_eq!(accepted, enumerate_paths(params).count(), "{params}");
    }
}

fn params_strategy() -> impl Strategy<Value = PathParams> {
    (1usize..=6, 1usize..=60).prop_map(|(k, n)| PathParams::new(k, n).unwrap())
}

proptest! {
    #[test]
    fn random_paths_round_trip(params in params_strategy(), seed in any::<u64>()) {
        let path = random_path(params, seed);
        let image = sweep_map(&path);
        prop_assert!(check_image_properties(&image).is_empty());
        prop_assert_eq!(recover_levels(&image.sigma, params).unwrap(), image.tau.clone());
        prop_assert_eq!(recover_levels_naive(&image.sigma, params).unwrap(), image.tau.clone());
        prop_assert_eq!(invert_sweep(&image.sigma, params).unwrap(), path);
    }

    #[test]
    fn rank_levels_are_bounded_multiples_of_n(params in params_strategy(), seed in any::<u64>()) {
        let path = random_path(params, seed);
        let n = params.n() as i64;
        for e in rank_sequence(&path) {
            prop_assert_eq!(e.level % n, 0);
            prop_assert!(e.level >= 0 && e.level <= params.max_level());
        }
    }

    #[test]
    fn validation_matches_prefix_rank_definition(
        (k, n) in (1usize..=3, 1usize..=4),
        bits in prop::collection::vec(any::<bool>(), 0..20),
    ) {
        let params = PathParams::new(k, n).unwrap();
        let word: Vec<Letter> = bits.iter().map(|&b| if b { Letter::S } else { Letter::W }).collect();
        let s = word.iter().filter(|&&l| l == Letter::S).count();
        let counts_ok = s == n && word.len() - s == k * n;
        let mut rank = 0i64;
        let prefix_ok = word.iter().all(|&l| {
            rank += if l == Letter::S { (k * n) as i64 } else { -(n as i64) };
            rank >= 0
        });
        prop_assert_eq!(validate_path(&word, params).is_ok(), counts_ok && prefix_ok);
        if counts_ok && prefix_ok {
            prop_assert!(DyckPath::new(word, params).is_ok());
        }
    }
}
