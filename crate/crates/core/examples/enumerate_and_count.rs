//! List small cells and compare their sizes with the Fuss–Catalan numbers.
//!
//! ```bash
//! cargo run -p sweepmap --example enumerate_and_count
//! ```

use sweepmap::{count_paths, enumerate_paths, enumerate_with_prefix, parse_word, PathParams};

fn main() {
    let params = PathParams::new(2, 3).unwrap();
    println!("all {params} paths:");
    for path in enumerate_paths(params) {
        println!("  {path}");
    }

    let prefix = parse_word("SS").unwrap();
    let n = enumerate_with_prefix(params, &prefix).count();
    println!("{n} of them start with SS");

    println!();
    println!("{:>3} {:>3} {:>22}", "k", "n", "paths");
    for k in 1..=4 {
        for n in [1, 2, 5, 10, 20] {
            let params = PathParams::new(k, n).unwrap();
            println!("{k:>3} {n:>3} {:>22}", count_paths(params));
        }
    }
}
