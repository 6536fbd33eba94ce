//! The sweep map on `(kn, n)`-Dyck paths and its inverse.
//!
//! A `(kn, n)`-Dyck path is a word of `n` letters `S` (north steps) and `kn`
//! letters `W` (east steps) whose running rank, `+kn` per `S` and `−n` per
//! `W`, never goes negative. The sweep map sorts the steps by the rank of
//! their starting point, breaking ties right to left, and reads off the
//! letters `σ` and levels `τ`.
//!
//! ```
//! use sweepmap::{invert_sweep, sweep_map, DyckPath};
//!
//! let path: DyckPath = "SWWSWWSWWWWWWWW".parse().unwrap();
//! let image = sweep_map(&path);
//! assert_eq!(image.sigma_string(), "SWWSWWWSWWWWWWW");
//! assert_eq!(invert_sweep(&image.sigma, path.params()).unwrap(), path);
//! ```
//!
//! Modules:
//!
//! - [`path`]: words, validation, ranks, enumeration, counting, sampling.
//! - [`sweep`]: the forward map.
//! - [`invert`]: level recovery (linear and quadratic) and path reconstruction.
//! - [`verify`]: exhaustive per-cell checks.
//! - [`cli`]: the `sweepmap` command-line interface.

pub mod cli;
pub mod error;
pub mod invert;
pub mod path;
pub mod render;
pub mod sweep;
pub mod verify;

pub use error::{InvertError, PathError};
pub use invert::{
    invert_sweep, invert_sweep_with, reconstruct_path, recover_levels, recover_levels_naive,
    Recovery,
};
pub use path::{
    count_paths, enumerate_paths, enumerate_with_prefix, parse_word, random_path, rank_sequence,
    validate_path, word_to_string, DyckPath, Letter, Level, PathParams, RankedEndpoint,
};
pub use render::render_path;
pub use sweep::{sweep_map, sweep_with_origins, SweepImage};
pub use verify::{
    check_image_properties, desk_grid, fuss_catalan_check, verify_roundtrip,
    verify_roundtrip_parallel, VerifyReport, Violation,
};
