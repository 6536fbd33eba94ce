//! Seeded random paths and how often each path of a small cell shows up.
//!
//! The sampler rotates a shuffled word to a valid cyclic shift, which is
//! not uniform once `n > 1`; the histogram makes that visible.
//!
//! ```bash
//! cargo run -p sweepmap --example random_sampling
//! ```

use std::collections::BTreeMap;

use sweepmap::{enumerate_paths, random_path, PathParams};

fn main() {
    let params = PathParams::new(2, 3).unwrap();
    let mut hits: BTreeMap<String, usize> = enumerate_paths(params)
        .map(|p| (p.to_string(), 0))
        .collect();
    let draws = 12_000;
    for seed in 0..draws {
        *hits
            .get_mut(&random_path(params, seed).to_string())
            .unwrap() += 1;
    }
    println!("{draws} draws over the {} paths of {params}:", hits.len());
    for (path, count) in &hits {
        println!("  {path}  {count:>5}");
    }

    let big = PathParams::new(3, 25).unwrap();
    println!("seed 42, {big}: {}", random_path(big, 42));
}
