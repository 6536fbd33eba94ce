//! Sweep a (12,3)-Dyck path, then recover it from the swept word alone.
//!
//! ```bash
//! cargo run -p sweepmap --example worked_example
//! cargo run -p sweepmap --example worked_example -- SWSWWWWWWW
//! ```

use sweepmap::{
    rank_sequence, reconstruct_path, recover_levels, render_path, sweep_map, DyckPath, SweepImage,
};

fn main() {
    let word = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "SWWSWWSWWWWWWWW".to_string());
    let path: DyckPath = match word.parse() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{word}: {e}");
            std::process::exit(2);
        }
    };
    let params = path.params();
    println!("path   {path}  ({params})");
    print!("{}", render_path(&path));

    let levels: Vec<String> = rank_sequence(&path)
        .iter()
        .map(|e| format!("{}{}", e.letter, e.level))
        .collect();
    println!("ranks  {}", levels.join(" "));

    let image = sweep_map(&path);
    println!("{image}");

    let tau = recover_levels(&image.sigma, params).expect("genuine image");
    assert_eq!(tau, image.tau);
    let back = reconstruct_path(&SweepImage::new(params, image.sigma.clone(), tau))
        .expect("walk-back succeeds");
    println!("preimage {back}");
    assert_eq!(back, path);
}
