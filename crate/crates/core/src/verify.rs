//! Exhaustive checks over whole `(k, n)` cells.
//!
//! Every path of a cell is swept, its image is checked for the structural
//! properties every sweep image must have, and the image is inverted back.
//! Distinct images are counted to confirm injectivity, and the cell size
//! is compared against the Fuss–Catalan closed form.

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::InvertError;
use crate::invert::{invert_sweep, recover_levels};
use crate::path::{count_paths, enumerate_paths, validate_path, DyckPath, Letter, PathParams};
use crate::sweep::{format_levels, sweep_map, SweepImage};

/// The desk-scale grid: `k=1, n≤7`; `k=2, n≤5`; `k=3, n≤4`; `k=4, n≤3`.
pub fn desk_grid() -> Vec<PathParams> {
    let limits = [(1, 7), (2, 5), (3, 4), (4, 3)];
    limits
        .iter()
        .flat_map(|&(k, max_n)| (1..=max_n).map(move |n| PathParams::new(k, n).unwrap()))
        .collect()
}

/// A structural property a sweep image failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Violation {
    LengthMismatch,
    WrongLetterCount,
    FirstLetterNotS,
    FirstLevelNotZero,
    TauDecreasing,
    LevelNotMultipleOfN,
    /// A `W` followed by `S` (or `S, S`) changes level.
    LevelJumpAfterW,
    SigmaNotDyck,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = serde_json::to_value(self).expect("unit variant");
        f.write_str(tag.as_str().unwrap_or("violation"))
    }
}

/// Lists every structural property `image` fails. Empty means the image
/// looks like a genuine sweep image.
pub fn check_image_properties(image: &SweepImage) -> Vec<Violation> {
    let params = image.params;
    let sigma = &image.sigma;
    let tau = &image.tau;
    let mut out = Vec::new();

    if sigma.len() != tau.len() || sigma.len() != params.len() {
        out.push(Violation::LengthMismatch);
        return out;
    }
    let s = sigma.iter().filter(|&&l| l == Letter::S).count();
    if s != params.n() || sigma.len() - s != params.east_steps() {
        out.push(Violation::WrongLetterCount);
    }
    if sigma.first() != Some(&Letter::S) {
        out.push(Violation::FirstLetterNotS);
    }
    if tau.first() != Some(&0) {
        out.push(Violation::FirstLevelNotZero);
    }
    if tau.windows(2).any(|w| w[0] > w[1]) {
        out.push(Violation::TauDecreasing);
    }
    if tau.iter().any(|&t| t < 0 || t % params.east_delta() != 0) {
        out.push(Violation::LevelNotMultipleOfN);
    }
    let len = sigma.len();
    let level_jump = (0..len.saturating_sub(1)).any(|i| {
        if sigma[i] != Letter::W || sigma[i + 1] != Letter::S {
            return false;
        }
        tau[i + 1] != tau[i] || (i + 2 < len && sigma[i + 2] == Letter::S && tau[i + 2] != tau[i])
    });
    if level_jump {
        out.push(Violation::LevelJumpAfterW);
    }
    if validate_path(sigma, params).is_err() {
        out.push(Violation::SigmaNotDyck);
    }
    out
}

/// A path whose image did not invert back to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundTripFailure {
    pub path: String,
    pub sigma: String,
    pub tau: String,
    /// The recovered path, when inversion produced one.
    pub reconstructed: Option<String>,
    pub recovered_tau: Option<String>,
    pub error: Option<String>,
    /// Set when level recovery hit a zero difference.
    pub zero_difference: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyViolation {
    pub path: String,
    pub violation: Violation,
}

/// Outcome of checking one cell.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub k: usize,
    pub n: usize,
    pub paths_checked: usize,
    pub distinct_images: usize,
    /// Fuss–Catalan count, as a decimal string.
    pub count_expected: String,
    pub failures: Vec<RoundTripFailure>,
    pub violations: Vec<PropertyViolation>,
    pub truncated: bool,
    #[serde(serialize_with = "serialize_millis", rename = "elapsed_ms")]
    pub elapsed: Duration,
}

fn serialize_millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl PartialEq for VerifyReport {
    /// Equal up to elapsed time.
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k
            && self.n == other.n
            && self.paths_checked == other.paths_checked
            && self.distinct_images == other.distinct_images
            && self.count_expected == other.count_expected
            && self.failures == other.failures
            && self.violations == other.violations
            && self.truncated == other.truncated
    }
}

impl VerifyReport {
    pub fn params(&self) -> PathParams {
        PathParams::new(self.k, self.n).expect("report built from valid params")
    }

    pub fn is_injective(&self) -> bool {
        self.distinct_images == self.paths_checked
    }

    pub fn count_matches(&self) -> bool {
        self.count_expected == self.paths_checked.to_string()
    }

    pub fn success(&self) -> bool {
        self.failures.is_empty()
            && self.violations.is_empty()
            && self.is_injective()
            && (self.truncated || self.count_matches())
    }

    pub fn zero_difference_hits(&self) -> usize {
        self.failures.iter().filter(|f| f.zero_difference).count()
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let ok = self.paths_checked - self.failures.len();
        let mut line = format!(
            "k={} n={}: {}/{} paths OK",
            self.k, self.n, ok, self.paths_checked
        );
        if self.is_injective() {
            line.push_str(", injective");
        } else {
            line.push_str(&format!(
                ", NOT injective ({} distinct images)",
                self.distinct_images
            ));
        }
        if self.truncated {
            line.push_str(&format!(", truncated (expected {})", self.count_expected));
        } else if self.count_matches() {
            line.push_str(", count matches");
        } else {
            line.push_str(&format!(
                ", count MISMATCH (expected {})",
                self.count_expected
            ));
        }
        if !self.violations.is_empty() {
            line.push_str(&format!(", {} property violations", self.violations.len()));
        }
        line
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary())
    }
}

/// Per-path result, merged into a report in enumeration order.
struct PathOutcome {
    sigma: Vec<Letter>,
    failure: Option<RoundTripFailure>,
    violations: Vec<Violation>,
}

fn check_path(path: &DyckPath) -> PathOutcome {
    let image = sweep_map(path);
    let violations = check_image_properties(&image);
    let recovered = recover_levels(&image.sigma, image.params);
    let inverted = invert_sweep(&image.sigma, image.params);

    let tau_ok = recovered.as_ref().is_ok_and(|t| *t == image.tau);
    let path_ok = inverted.as_ref().is_ok_and(|p| p == path);
    let failure = if tau_ok && path_ok {
        None
    } else {
        let error = inverted.as_ref().err().or(recovered.as_ref().err());
        Some(RoundTripFailure {
            path: path.to_string(),
            sigma: image.sigma_string(),
            tau: format_levels(&image.tau),
            reconstructed: inverted.as_ref().ok().map(|p| p.to_string()),
            recovered_tau: recovered.as_ref().ok().map(|t| format_levels(t)),
            error: error.map(|e| e.to_string()),
            zero_difference: matches!(error, Some(InvertError::ZeroDifference { .. })),
        })
    };
    PathOutcome {
        sigma: image.sigma,
        failure,
        violations,
    }
}

#[derive(Default)]
struct Tally {
    paths_checked: usize,
    images: HashSet<Vec<Letter>>,
    failures: Vec<RoundTripFailure>,
    violations: Vec<PropertyViolation>,
}

impl Tally {
    fn absorb(&mut self, path: &DyckPath, outcome: PathOutcome) {
        self.paths_checked += 1;
        self.images.insert(outcome.sigma);
        self.failures.extend(outcome.failure);
        self.violations.extend(
            outcome
                .violations
                .into_iter()
                .map(|violation| PropertyViolation {
                    path: path.to_string(),
                    violation,
                }),
        );
    }

    fn finish(self, params: PathParams, limit: Option<usize>, elapsed: Duration) -> VerifyReport {
        let count = count_paths(params);
        let truncated = limit.is_some_and(|m| BigUint::from(m) < count);
        VerifyReport {
            k: params.k(),
            n: params.n(),
            paths_checked: self.paths_checked,
            distinct_images: self.images.len(),
            count_expected: count.to_string(),
            failures: self.failures,
            violations: self.violations,
            truncated,
            elapsed,
        }
    }
}

/// Checks every path of a cell (or the first `max_paths`), serially.
pub fn verify_roundtrip(params: PathParams, max_paths: Option<usize>) -> VerifyReport {
    let start = Instant::now();
    let mut tally = Tally::default();
    for path in enumerate_paths(params).take(max_paths.unwrap_or(usize::MAX)) {
        let outcome = check_path(&path);
        tally.absorb(&path, outcome);
    }
    tally.finish(params, max_paths, start.elapsed())
}

const CHUNK: usize = 4096;

/// Same report as [`verify_roundtrip`], with paths checked on a rayon pool of
/// `jobs` threads (`None`: rayon's default).
pub fn verify_roundtrip_parallel(
    params: PathParams,
    max_paths: Option<usize>,
    jobs: Option<usize>,
) -> VerifyReport {
    let run = || {
        let start = Instant::now();
        let mut tally = Tally::default();
        let mut paths = enumerate_paths(params).take(max_paths.unwrap_or(usize::MAX));
        loop {
            let chunk: Vec<DyckPath> = paths.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            let outcomes: Vec<PathOutcome> = chunk.par_iter().map(check_path).collect();
            for (path, outcome) in chunk.iter().zip(outcomes) {
                tally.absorb(path, outcome);
            }
        }
        tally.finish(params, max_paths, start.elapsed())
    };
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    }
}

/// `(expected, enumerated, equal)` for a cell.
pub fn fuss_catalan_check(params: PathParams) -> (BigUint, BigUint, bool) {
    let expected = count_paths(params);
    let enumerated = BigUint::from(enumerate_paths(params).count());
    let equal = expected == enumerated;
    (expected, enumerated, equal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::parse_word;

    fn p(k: usize, n: usize) -> PathParams {
        PathParams::new(k, n).unwrap()
    }

    #[test]
    fn grid_shape() {
        let grid = desk_grid();
        assert_eq!(grid.len(), 7 + 5 + 4 + 3);
        assert_eq!(grid[0], p(1, 1));
        assert_eq!(*grid.last().unwrap(), p(4, 3));
    }

    #[test]
    fn worked_and_trivial_images_are_clean() {
        let image = SweepImage::new(
            p(4, 3),
            parse_word("SWWSWWWSWWWWWWW").unwrap(),
            vec![0, 3, 6, 6, 9, 9, 12, 12, 12, 15, 15, 18, 18, 21, 24],
        );
        assert!(check_image_properties(&image).is_empty());
        let image = SweepImage::new(p(1, 1), parse_word("SW").unwrap(), vec![0, 1]);
        assert!(check_image_properties(&image).is_empty());
    }

    #[test]
    fn forged_level_jump_after_w_is_flagged() {
        // W at level 6 followed by S at level 9.
        let image = SweepImage::new(
            p(4, 3),
            parse_word("SWWSWWWSWWWWWWW").unwrap(),
            vec![0, 3, 6, 9, 9, 9, 12, 12, 12, 15, 15, 18, 18, 21, 24],
        );
        let v = check_image_properties(&image);
        assert_eq!(v, vec![Violation::LevelJumpAfterW]);
    }

    #[test]
    fn second_s_clause_is_checked() {
        // W,S,S with the second S at a higher level.
        let image = SweepImage::new(
            p(1, 3),
            parse_word("SWSSWW").unwrap(),
            vec![0, 3, 3, 6, 6, 9],
        );
        assert!(check_image_properties(&image).contains(&Violation::LevelJumpAfterW));
    }

    #[test]
    fn structural_violations() {
        let image = SweepImage::new(p(1, 1), parse_word("WS").unwrap(), vec![1, 0]);
        let v = check_image_properties(&image);
        for tag in [
            Violation::FirstLetterNotS,
            Violation::FirstLevelNotZero,
            Violation::TauDecreasing,
            Violation::SigmaNotDyck,
        ] {
            assert!(v.contains(&tag), "{tag}");
        }
        let image = SweepImage::new(p(1, 2), parse_word("SWSW").unwrap(), vec![0, 1, 2, 2]);
        assert!(check_image_properties(&image).contains(&Violation::LevelNotMultipleOfN));
        let image = SweepImage::new(p(1, 2), parse_word("SW").unwrap(), vec![0, 1]);
        assert_eq!(
            check_image_properties(&image),
            vec![Violation::LengthMismatch]
        );
        assert_eq!(Violation::LevelJumpAfterW.to_string(), "level_jump_after_w");
    }

    #[test]
    fn verify_examples() {
        let r = verify_roundtrip(p(1, 1), None);
        assert_eq!(
            (r.paths_checked, r.failures.len(), r.distinct_images),
            (1, 0, 1)
        );
        let r = verify_roundtrip(p(2, 3), None);
        assert_eq!(
            (r.paths_checked, r.failures.len(), r.distinct_images),
            (12, 0, 12)
        );
        assert!(r.success());
        let r = verify_roundtrip(p(4, 3), None);
        assert_eq!(
            (r.paths_checked, r.failures.len(), r.distinct_images),
            (35, 0, 35)
        );
        assert_eq!(
            r.summary(),
            "k=4 n=3: 35/35 paths OK, injective, count matches"
        );
    }

    #[test]
    fn truncated_run() {
        let r = verify_roundtrip(p(2, 4), Some(10));
        assert_eq!(r.paths_checked, 10);
        assert!(r.truncated);
        assert!(r.success());
        let r = verify_roundtrip(p(2, 2), Some(10));
        assert!(!r.truncated);
        assert_eq!(r.paths_checked, 3);
    }

    #[test]
    fn count_mismatch_fails_an_untruncated_report() {
        let mut r = verify_roundtrip(p(2, 3), None);
        assert!(r.success());
        r.count_expected = "13".into();
        assert!(!r.success());
        assert!(r.summary().contains("count MISMATCH"));
    }

    #[test]
    fn reports_are_deterministic_and_parallel_matches_serial() {
        for params in [p(1, 6), p(2, 4), p(3, 3)] {
            let a = verify_roundtrip(params, None);
            let b = verify_roundtrip(params, None);
            let c = verify_roundtrip_parallel(params, None, Some(4));
            assert_eq!(a, b);
            assert_eq!(a, c);
        }
    }

    #[test]
    fn fuss_catalan_examples() {
        let check = |k, n| {
            let (e, m, eq) = fuss_catalan_check(p(k, n));
            (e.to_string(), m.to_string(), eq)
        };
        assert_eq!(check(1, 4), ("14".into(), "14".into(), true));
        assert_eq!(check(2, 5), ("273".into(), "273".into(), true));
        assert_eq!(check(1, 1), ("1".into(), "1".into(), true));
    }

    #[test]
    fn report_json_fields() {
        let r = verify_roundtrip(p(2, 2), None);
        let v = serde_json::to_value(&r).unwrap();
        for key in [
            "k",
            "n",
            "paths_checked",
            "distinct_images",
            "failures",
            "violations",
            "elapsed_ms",
        ] {
            assert!(v.get(key).is_some(), "{key}");
        }
    }
}
