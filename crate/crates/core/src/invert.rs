//! Inverting the sweep map.
//!
//! Inversion runs in two stages. [`recover_levels`] rebuilds the level
//! sequence `τ` from the swept word `σ` alone, and [`reconstruct_path`]
//! walks the lattice from rank 0, at each step consuming the right-most
//! unused entry of `τ` at the current rank.
//!
//! Level recovery scans `σ` left to right, skipping positions that an
//! earlier batch already filled:
//!
//! - `τ₁ = 0`.
//! - An `S` copies the level before it.
//! - A `W` at position `i` with `p = τᵢ₋₁` looks at `x = c − s`, where `c`
//!   counts filled entries at level `p` and `s` counts filled `S` entries at
//!   level `p − kn`. If `x > 0` the next `x` unfilled `W`s (from `i`,
//!   skipping `S`s) get level `p + n`; if `x < 0` the next `|x|` get `p`.
//!
//! Whenever an unfilled `W` is reached, the filled positions are exactly
//! the prefix before it, so the counts can be kept incrementally. That is
//! what [`recover_levels`] does; [`recover_levels_naive`] rescans the whole
//! sequence at every `W`.

use std::fmt;
use std::str::FromStr;

use crate::error::InvertError;
use crate::path::{DyckPath, Letter, Level, PathParams};
use crate::sweep::SweepImage;

/// Which level-recovery implementation to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Recovery {
    /// Rescans filled entries at every `W`: quadratic.
    Naive,
    /// Per-level counters: linear.
    #[default]
    Fast,
}

impl Recovery {
    pub fn run(self, sigma: &[Letter], params: PathParams) -> Result<Vec<Level>, InvertError> {
        match self {
            Recovery::Naive => recover_levels_naive(sigma, params),
            Recovery::Fast => recover_levels(sigma, params),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Recovery::Naive => "naive",
            Recovery::Fast => "fast",
        }
    }
}

impl fmt::Display for Recovery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Recovery {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "naive" => Ok(Recovery::Naive),
            "fast" => Ok(Recovery::Fast),
            other => Err(format!(
                "unknown implementation {other:?} (expected naive or fast)"
            )),
        }
    }
}

fn check_sigma(sigma: &[Letter], params: PathParams) -> Result<(), InvertError> {
    let s = sigma.iter().filter(|&&l| l == Letter::S).count();
    let w = sigma.len() - s;
    if s != params.n() || w != params.east_steps() {
        return Err(InvertError::SigmaMalformed {
            reason: format!(
                "{s} S and {w} W, expected {} S and {} W",
                params.n(),
                params.east_steps()
            ),
        });
    }
    if sigma[0] != Letter::S {
        return Err(InvertError::SigmaMalformed {
            reason: "first letter must be S".to_string(),
        });
    }
    Ok(())
}

/// Per-level tallies over the filled entries of `τ`, indexed by `level / n`.
struct LevelCounters {
    step: Level,
    total: Vec<usize>,
    south: Vec<usize>,
}

impl LevelCounters {
    fn new(params: PathParams) -> LevelCounters {
        // Each batch raises the level by n at most once per W, so level / n <= kn.
        let slots = params.east_steps() + 1;
        LevelCounters {
            step: params.east_delta(),
            total: vec![0; slots],
            south: vec![0; slots],
        }
    }

    fn slot(&self, level: Level) -> Option<usize> {
        if level < 0 {
            None
        } else {
            Some((level / self.step) as usize)
        }
    }

    fn record(&mut self, level: Level, letter: Letter) {
        let slot = self.slot(level).expect("levels stay nonnegative");
        self.total[slot] += 1;
        if letter == Letter::S {
            self.south[slot] += 1;
        }
    }

    fn total_at(&self, level: Level) -> usize {
        self.slot(level).map_or(0, |s| self.total[s])
    }

    fn south_at(&self, level: Level) -> usize {
        self.slot(level).map_or(0, |s| self.south[s])
    }
}

/// Recovers `τ` from `σ` using incremental per-level counters.
///
/// Linear in the length of `σ`.
pub fn recover_levels(sigma: &[Letter], params: PathParams) -> Result<Vec<Level>, InvertError> {
    check_sigma(sigma, params)?;
    let len = sigma.len();
    let kn = params.north_delta();
    let n = params.east_delta();

    // w_from[i]: number of W in sigma[i..]; next_w[i]: first W at or after i.
    let mut w_from = vec![0usize; len + 1];
    let mut next_w = vec![len; len + 1];
    for i in (0..len).rev() {
        let is_w = sigma[i] == Letter::W;
        w_from[i] = w_from[i + 1] + is_w as usize;
        next_w[i] = if is_w { i } else { next_w[i + 1] };
    }

    let mut tau: Vec<Option<Level>> = vec![None; len];
    let mut counters = LevelCounters::new(params);
    let mut filled = 0usize;

    tau[0] = Some(0);
    counters.record(0, sigma[0]);
    filled += 1;

    for i in 1..len {
        if tau[i].is_some() {
            continue;
        }
        let prev = tau[i - 1].expect("prefix is filled");
        match sigma[i] {
            Letter::S => {
                tau[i] = Some(prev);
                counters.record(prev, Letter::S);
                filled += 1;
            }
            Letter::W => {
                debug_assert_eq!(filled, i, "filled set must be exactly the prefix");
                let x = counters.total_at(prev) as i64 - counters.south_at(prev - kn) as i64;
                let (level, count) = match x {
                    0 => {
                        return Err(InvertError::ZeroDifference {
                            index: i + 1,
                            level: prev,
                        })
                    }
                    x if x > 0 => (prev + n, x as usize),
                    x => (prev, x.unsigned_abs() as usize),
                };
                if count > w_from[i] {
                    return Err(InvertError::BatchOverflow {
                        index: i + 1,
                        wanted: count,
                        available: w_from[i],
                    });
                }
                let mut j = i;
                for _ in 0..count {
                    j = next_w[j];
                    tau[j] = Some(level);
                    counters.record(level, Letter::W);
                    filled += 1;
                    j += 1;
                }
            }
        }
    }
    Ok(tau
        .into_iter()
        .map(|t| t.expect("every position filled"))
        .collect())
}

/// Recovers `τ` from `σ`, recounting filled entries from scratch at every
/// `W`. Quadratic; kept as a reference for [`recover_levels`].
pub fn recover_levels_naive(
    sigma: &[Letter],
    params: PathParams,
) -> Result<Vec<Level>, InvertError> {
    check_sigma(sigma, params)?;
    let len = sigma.len();
    let kn = params.north_delta();
    let n = params.east_delta();

    let mut tau: Vec<Option<Level>> = vec![None; len];
    tau[0] = Some(0);
    for i in 1..len {
        if tau[i].is_some() {
            continue;
        }
        let prev = tau[i - 1].expect("prefix is filled");
        if sigma[i] == Letter::S {
            tau[i] = Some(prev);
            continue;
        }
        let c = tau.iter().filter(|t| **t == Some(prev)).count() as i64;
        let s = tau
            .iter()
            .zip(sigma)
            .filter(|(t, l)| **t == Some(prev - kn) && **l == Letter::S)
            .count() as i64;
        let x = c - s;
        if x == 0 {
            return Err(InvertError::ZeroDifference {
                index: i + 1,
                level: prev,
            });
        }
        let (level, count) = if x > 0 {
            (prev + n, x as usize)
        } else {
            (prev, x.unsigned_abs() as usize)
        };
        let targets: Vec<usize> = (i..len)
            .filter(|&j| sigma[j] == Letter::W)
            .take(count)
            .collect();
        if targets.len() < count {
            return Err(InvertError::BatchOverflow {
                index: i + 1,
                wanted: count,
                available: targets.len(),
            });
        }
        for j in targets {
            tau[j] = Some(level);
        }
    }
    Ok(tau
        .into_iter()
        .map(|t| t.expect("every position filled"))
        .collect())
}

/// Walks back from an image to its preimage.
///
/// Starting at rank 0, each step consumes the right-most unused `τ` entry at
/// the current rank and follows its letter. The right-most entry at a level
/// is the left-most endpoint at that level on the original path.
pub fn reconstruct_path(image: &SweepImage) -> Result<DyckPath, InvertError> {
    let params = image.params;
    if image.sigma.len() != image.tau.len() {
        return Err(InvertError::LengthMismatch {
            sigma: image.sigma.len(),
            tau: image.tau.len(),
        });
    }
    let len = image.sigma.len();

    // A walk that stays on or above the diagonal only visits ranks that are
    // multiples of n in [0, k·n·n]; bucket τ by rank / n, indices ascending.
    let step_size = params.east_delta();
    let slots = (params.max_level() / step_size) as usize + 1;
    let slot_of = |level: Level| -> Option<usize> {
        (level >= 0 && level % step_size == 0 && level <= params.max_level())
            .then(|| (level / step_size) as usize)
    };
    let mut start = vec![0usize; slots + 1];
    let mut unreachable = 0usize;
    for &level in &image.tau {
        match slot_of(level) {
            Some(s) => start[s + 1] += 1,
            None => unreachable += 1,
        }
    }
    for s in 0..slots {
        start[s + 1] += start[s];
    }
    let mut bucket = vec![0usize; len - unreachable];
    let mut top = start.clone();
    for (i, &level) in image.tau.iter().enumerate() {
        if let Some(s) = slot_of(level) {
            bucket[top[s]] = i;
            top[s] += 1;
        }
    }

    // top[s] is one past the last unconsumed index at slot s.
    let mut steps = Vec::with_capacity(len);
    let mut rank: Level = 0;
    for step in 1..=len {
        let slot = slot_of(rank)
            .filter(|&s| top[s] > start[s])
            .ok_or(InvertError::NoEndpointAtRank { rank, step })?;
        top[slot] -= 1;
        let letter = image.sigma[bucket[top[slot]]];
        steps.push(letter);
        rank += params.delta(letter);
    }
    let leftover = unreachable + (0..slots).map(|s| top[s] - start[s]).sum::<usize>();
    if leftover > 0 {
        return Err(InvertError::LeftoverEntries { count: leftover });
    }
    Ok(DyckPath::new(steps, params)?)
}

/// Recovers `τ` from `σ` and walks back to the preimage.
pub fn invert_sweep(sigma: &[Letter], params: PathParams) -> Result<DyckPath, InvertError> {
    invert_sweep_with(sigma, params, Recovery::Fast)
}

pub fn invert_sweep_with(
    sigma: &[Letter],
    params: PathParams,
    recovery: Recovery,
) -> Result<DyckPath, InvertError> {
    let tau = recovery.run(sigma, params)?;
    reconstruct_path(&SweepImage::new(params, sigma.to_vec(), tau))
}
