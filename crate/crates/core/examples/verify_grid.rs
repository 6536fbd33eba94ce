//! Exhaustive round-trip check over the desk-scale grid.
//!
//! ```bash
//! cargo run --release -p sweepmap --example verify_grid
//! ```

use sweepmap::{desk_grid, verify_roundtrip_parallel};

fn main() {
    let mut ok = true;
    for params in desk_grid() {
        let report = verify_roundtrip_parallel(params, None, None);
        println!(
            "{}  ({:.1} ms)",
            report.summary(),
            report.elapsed.as_secs_f64() * 1e3
        );
        ok &= report.success();
    }
    if !ok {
        std::process::exit(1);
    }
}
