//! Which words look like sweep images but are not?
//!
//! Every word with the right letter counts and a leading `S` is fed to the
//! inverter; the ones it rejects are tallied by error.
//!
//! ```bash
//! cargo run -p sweepmap --example invalid_images
//! ```

use std::collections::BTreeMap;

use sweepmap::{count_paths, invert_sweep, sweep_map, InvertError, Letter, PathParams};

fn main() {
    for (k, n) in [(1, 3), (1, 5), (2, 3), (2, 4), (3, 3)] {
        let params = PathParams::new(k, n).unwrap();
        let len = params.len();
        let mut tally: BTreeMap<&str, usize> = BTreeMap::new();
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
            let key = match invert_sweep(&sigma, params) {
                Ok(path) => {
                    assert_eq!(sweep_map(&path).sigma, sigma);
                    "inverted"
                }
                Err(InvertError::ZeroDifference { .. }) => "zero difference",
                Err(InvertError::BatchOverflow { .. }) => "batch overflow",
                Err(_) => "walk-back failed",
            };
            *tally.entry(key).or_default() += 1;
        }
        println!("{params} (paths: {}): {tally:?}", count_paths(params));
    }
}
