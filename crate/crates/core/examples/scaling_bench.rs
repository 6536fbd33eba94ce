//! Naive versus counter-based level recovery as the path grows.
//!
//! ```bash
//! cargo run --release -p sweepmap --example scaling_bench
//! ```

use std::time::Instant;

use sweepmap::{random_path, sweep_map, PathParams, Recovery};

fn main() {
    let k = 2;
    println!(
        "{:>8} {:>12} {:>12} {:>8}",
        "L", "naive ms", "fast ms", "ratio"
    );
    for n in [1_000, 2_000, 5_000, 10_000, 20_000] {
        let params = PathParams::new(k, n).unwrap();
        let image = sweep_map(&random_path(params, 7));
        let time = |r: Recovery| {
            let start = Instant::now();
            let tau = r.run(&image.sigma, params).expect("genuine image");
            assert_eq!(tau, image.tau);
            start.elapsed().as_secs_f64() * 1e3
        };
        let naive = time(Recovery::Naive);
        let fast = time(Recovery::Fast);
        println!(
            "{:>8} {naive:>12.3} {fast:>12.3} {:>8.1}",
            params.len(),
            naive / fast
        );
    }

    for n in [100_000, 1_000_000] {
        let params = PathParams::new(k, n).unwrap();
        let image = sweep_map(&random_path(params, 7));
        let start = Instant::now();
        Recovery::Fast.run(&image.sigma, params).unwrap();
        println!(
            "fast only, L={}: {:.1} ms",
            params.len(),
            start.elapsed().as_secs_f64() * 1e3
        );
    }
}
