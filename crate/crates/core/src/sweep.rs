//! The forward sweep map.
//!
//! Steps are reordered by the rank of their starting point. Among equal
//! ranks the step met first when scanning the path right to left comes
//! first, so the sort key is `(level ascending, origin_index descending)`.

use std::fmt;

use crate::path::{rank_sequence, word_to_string, DyckPath, Letter, Level, PathParams};

/// The pair `(σ, τ)`: swept letters and their aligned, nondecreasing levels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SweepImage {
    pub params: PathParams,
    pub sigma: Vec<Letter>,
    pub tau: Vec<Level>,
}

impl SweepImage {
    pub fn new(params: PathParams, sigma: Vec<Letter>, tau: Vec<Level>) -> SweepImage {
        SweepImage { params, sigma, tau }
    }

    pub fn sigma_string(&self) -> String {
        word_to_string(&self.sigma)
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }
}

impl fmt::Display for SweepImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sigma: {}", self.sigma_string())?;
        write!(f, "tau: {}", format_levels(&self.tau))
    }
}

/// Space-separated levels.
pub fn format_levels(levels: &[Level]) -> String {
    levels
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn sweep_map(path: &DyckPath) -> SweepImage {
    sweep_with_origins(path).0
}

/// Like [`sweep_map`] but also returns the 1-based origin index of each
/// swept endpoint.
pub fn sweep_with_origins(path: &DyckPath) -> (SweepImage, Vec<usize>) {
    let mut endpoints = rank_sequence(path);
    endpoints.sort_unstable_by(|a, b| {
        a.level
            .cmp(&b.level)
            .then(b.origin_index.cmp(&a.origin_index))
    });
    let origins = endpoints.iter().map(|e| e.origin_index).collect();
    let image = SweepImage {
        params: path.params(),
        sigma: endpoints.iter().map(|e| e.letter).collect(),
        tau: endpoints.iter().map(|e| e.level).collect(),
    };
    (image, origins)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::{enumerate_paths, parse_word, validate_path};

    fn sweep(word: &str, k: usize, n: usize) -> SweepImage {
        let params = PathParams::new(k, n).unwrap();
        sweep_map(&DyckPath::parse(word, params).unwrap())
    }

    #[test]
    fn worked_example() {
        let image = sweep("SWWSWWSWWWWWWWW", 4, 3);
        assert_eq!(image.sigma_string(), "SWWSWWWSWWWWWWW");
        assert_eq!(
            image.tau,
            vec![0, 3, 6, 6, 9, 9, 12, 12, 12, 15, 15, 18, 18, 21, 24]
        );
    }

    #[test]
    fn level_twelve_tie_break() {
        let params = PathParams::new(4, 3).unwrap();
        let path = DyckPath::parse("SWWSWWSWWWWWWWW", params).unwrap();
        let (image, origins) = sweep_with_origins(&path);
        assert_eq!(&origins[6..9], &[12, 7, 2]);
        assert_eq!(&image.sigma[6..9], &[Letter::W, Letter::S, Letter::W]);
    }

    #[test]
    fn small_examples() {
        let image = sweep("SW", 1, 1);
        assert_eq!(image.sigma_string(), "SW");
        assert_eq!(image.tau, vec![0, 1]);

        let image = sweep("SWWSWW", 2, 2);
        assert_eq!(image.sigma_string(), "SSWWWW");
        assert_eq!(image.tau, vec![0, 0, 2, 2, 4, 4]);
    }

    #[test]
    fn display_format() {
        assert_eq!(sweep("SW", 1, 1).to_string(), "sigma: SW\ntau: 0 1");
    }

    #[test]
    fn images_over_grid_are_sorted_stable_and_dyck() {
        for (k, n) in [(1, 5), (2, 4), (3, 3), (4, 3)] {
            let params = PathParams::new(k, n).unwrap();
            for path in enumerate_paths(params) {
                let (image, origins) = sweep_with_origins(&path);
                let mut levels: Vec<Level> = crate::path::rank_sequence(&path)
                    .iter()
                    .map(|e| e.level)
                    .collect();
                levels.sort();
                assert_eq!(image.tau, levels);
                for i in 1..image.len() {
                    if image.tau[i] == image.tau[i - 1] {
                        assert!(origins[i] < origins[i - 1]);
                    }
                }
                let sigma = parse_word(&image.sigma_string()).unwrap();
                assert!(validate_path(&sigma, params).is_ok(), "{path}");
            }
        }
    }
}
