//! Dyck paths on the `(kn, n)` grid.
//!
//! A path is a word over two letters. `S` is a north step, named after its
//! south endpoint, and `W` is an east step, named after its west endpoint.
//! Every lattice point `(x, y)` carries the rank `kn·y − n·x`, so a north
//! step raises the rank by `kn` and an east step lowers it by `n`. A word is
//! a Dyck path when it has `n` north steps, `kn` east steps, and no prefix
//! drops below rank zero.
//!
//! Positions in error messages are 1-based.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::PathError;

/// Rank of a lattice point.
pub type Level = i64;

/// One step of a path, named by the endpoint the sweep map tracks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// North step (its south endpoint).
    S,
    /// East step (its west endpoint).
    W,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::S => 'S',
            Letter::W => 'W',
        }
    }

    /// Parses `S`/`W` case-insensitively.
    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'S' | 's' => Some(Letter::S),
            'W' | 'w' => Some(Letter::W),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Parses a word over `{S, W}`. Surrounding whitespace is ignored.
pub fn parse_word(text: &str) -> Result<Vec<Letter>, PathError> {
    text.trim()
        .chars()
        .enumerate()
        .map(|(i, c)| {
            Letter::from_char(c).ok_or(PathError::BadAlphabet {
                index: i + 1,
                found: c,
            })
        })
        .collect()
}

pub fn word_to_string(word: &[Letter]) -> String {
    word.iter().map(|l| l.as_char()).collect()
}

/// The pair `(k, n)`: `n` north steps and `kn` east steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathParams {
    k: usize,
    n: usize,
}

impl PathParams {
    /// Rejects `k = 0`, `n = 0`, and products whose ranks would not fit in
    /// a [`Level`].
    pub fn new(k: usize, n: usize) -> Result<PathParams, PathError> {
        if k == 0 || n == 0 {
            return Err(PathError::ZeroParam { k, n });
        }
        let fits = (k as u128)
            .checked_mul(n as u128)
            .and_then(|kn| kn.checked_mul(n as u128))
            .map(|top| top <= i64::MAX as u128 / 2)
            .unwrap_or(false)
            && (k as u128 + 1) * (n as u128) <= usize::MAX as u128;
        if !fits {
            return Err(PathError::ParamsOutOfRange { k, n });
        }
        Ok(PathParams { k, n })
    }

    /// Infers `n = #S` and `k = #W / #S` from a word.
    pub fn infer(word: &[Letter]) -> Result<PathParams, PathError> {
        let s = word.iter().filter(|&&l| l == Letter::S).count();
        let w = word.len() - s;
        if s == 0 || w == 0 || w % s != 0 {
            return Err(PathError::CannotInferParams { s, w });
        }
        PathParams::new(w / s, s)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Path length `(k+1)·n`.
    pub fn len(&self) -> usize {
        (self.k + 1) * self.n
    }

    /// Number of east steps, `kn`.
    pub fn east_steps(&self) -> usize {
        self.k * self.n
    }

    /// Rank change of a north step.
    pub fn north_delta(&self) -> Level {
        (self.k * self.n) as Level
    }

    /// Rank change of an east step (positive magnitude).
    pub fn east_delta(&self) -> Level {
        self.n as Level
    }

    pub fn delta(&self, letter: Letter) -> Level {
        match letter {
            Letter::S => self.north_delta(),
            Letter::W => -self.east_delta(),
        }
    }

    /// Highest rank a path can reach, `k·n·n`.
    pub fn max_level(&self) -> Level {
        self.north_delta() * self.n as Level
    }
}

impl fmt::Display for PathParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} n={}", self.k, self.n)
    }
}

/// A validated `(kn, n)`-Dyck path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckPath {
    params: PathParams,
    steps: Vec<Letter>,
}

impl DyckPath {
    pub fn new(steps: Vec<Letter>, params: PathParams) -> Result<DyckPath, PathError> {
        validate_path(&steps, params)?;
        Ok(DyckPath { params, steps })
    }

    /// Parses and validates a word, inferring `(k, n)` from its letter counts.
    pub fn parse_inferred(text: &str) -> Result<DyckPath, PathError> {
        let steps = parse_word(text)?;
        let params = PathParams::infer(&steps)?;
        DyckPath::new(steps, params)
    }

    pub fn parse(text: &str, params: PathParams) -> Result<DyckPath, PathError> {
        DyckPath::new(parse_word(text)?, params)
    }

    pub fn params(&self) -> PathParams {
        self.params
    }

    pub fn steps(&self) -> &[Letter] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn into_steps(self) -> Vec<Letter> {
        self.steps
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&word_to_string(&self.steps))
    }
}

impl FromStr for DyckPath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DyckPath::parse_inferred(s)
    }
}

/// Checks the letter counts and the nonnegative-prefix condition.
///
/// Counts are checked first; a word with the right counts whose prefix rank
/// goes negative reports the 1-based index of the first offending step.
pub fn validate_path(word: &[Letter], params: PathParams) -> Result<(), PathError> {
    let s = word.iter().filter(|&&l| l == Letter::S).count();
    let w = word.len() - s;
    if s != params.n() || w != params.east_steps() {
        return Err(PathError::WrongLetterCount {
            s,
            w,
            expected_s: params.n(),
            expected_w: params.east_steps(),
        });
    }
    let mut rank: Level = 0;
    for (i, &letter) in word.iter().enumerate() {
        rank += params.delta(letter);
        if rank < 0 {
            return Err(PathError::BelowDiagonal { index: i + 1 });
        }
    }
    debug_assert_eq!(rank, 0);
    Ok(())
}

/// A step together with the rank of its starting point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RankedEndpoint {
    pub letter: Letter,
    pub level: Level,
    /// 1-based position of the step in the path.
    pub origin_index: usize,
}

/// Starting ranks of every step, in path order.
pub fn rank_sequence(path: &DyckPath) -> Vec<RankedEndpoint> {
    let params = path.params();
    let mut rank: Level = 0;
    path.steps()
        .iter()
        .enumerate()
        .map(|(i, &letter)| {
            let endpoint = RankedEndpoint {
                letter,
                level: rank,
                origin_index: i + 1,
            };
            rank += params.delta(letter);
            endpoint
        })
        .collect()
}

/// Lexicographic (`S < W`) stream of every path extending `prefix`.
///
/// Each step swaps the right-most `S` that can legally become a `W` and
/// refills the tail with the smallest completion (remaining `S`s, then
/// remaining `W`s). The fixed prefix is never touched, so disjoint
/// prefixes partition the keyspace.
#[derive(Debug, Clone)]
pub struct PathEnumerator {
    params: PathParams,
    fixed: usize,
    word: Vec<Letter>,
    /// `ranks[i]` is the rank before step `i`; `ranks[len]` is the final rank.
    ranks: Vec<Level>,
    started: bool,
    done: bool,
}

impl PathEnumerator {
    fn new(params: PathParams, prefix: &[Letter]) -> PathEnumerator {
        let len = params.len();
        let mut e = PathEnumerator {
            params,
            fixed: prefix.len(),
            word: prefix.to_vec(),
            ranks: vec![0; len + 1],
            started: false,
            done: false,
        };
        let s = prefix.iter().filter(|&&l| l == Letter::S).count();
        let w = prefix.len() - s;
        if prefix.len() > len || s > params.n() || w > params.east_steps() {
            e.done = true;
            return e;
        }
        for (i, &l) in prefix.iter().enumerate() {
            e.ranks[i + 1] = e.ranks[i] + params.delta(l);
            if e.ranks[i + 1] < 0 {
                e.done = true;
                return e;
            }
        }
        e.fill_from(prefix.len());
        e
    }

    /// Overwrites positions `from..` with the smallest valid completion.
    fn fill_from(&mut self, from: usize) {
        self.word.truncate(from);
        let s_used = self.word.iter().filter(|&&l| l == Letter::S).count();
        let w_used = from - s_used;
        self.word
            .extend(std::iter::repeat(Letter::S).take(self.params.n() - s_used));
        self.word
            .extend(std::iter::repeat(Letter::W).take(self.params.east_steps() - w_used));
        for i in from..self.word.len() {
            self.ranks[i + 1] = self.ranks[i] + self.params.delta(self.word[i]);
        }
    }

    fn advance(&mut self) -> bool {
        let east = self.params.east_delta();
        for j in (self.fixed..self.word.len()).rev() {
            if self.word[j] == Letter::S && self.ranks[j] - east >= 0 {
                self.word[j] = Letter::W;
                self.ranks[j + 1] = self.ranks[j] - east;
                // The displaced S goes back into the refill.
                self.word.truncate(j + 1);
                self.fill_from(j + 1);
                return true;
            }
        }
        false
    }
}

impl Iterator for PathEnumerator {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        debug_assert!(validate_path(&self.word, self.params).is_ok());
        Some(DyckPath {
            params: self.params,
            steps: self.word.clone(),
        })
    }
}

/// Every `(kn, n)`-Dyck path, in lexicographic order with `S < W`.
pub fn enumerate_paths(params: PathParams) -> PathEnumerator {
    PathEnumerator::new(params, &[])
}

/// Every path that starts with `prefix`, in lexicographic order.
pub fn enumerate_with_prefix(params: PathParams, prefix: &[Letter]) -> PathEnumerator {
    PathEnumerator::new(params, prefix)
}

/// Fuss–Catalan number `C((k+1)n, n) / (kn + 1)`, computed exactly.
pub fn count_paths(params: PathParams) -> BigUint {
    let total = params.len() as u64;
    let n = params.n() as u64;
    let mut binom = BigUint::from(1u32);
    for i in 0..n {
        binom *= total - i;
        binom /= i + 1;
    }
    binom / (params.east_steps() as u64 + 1)
}

/// A seeded path: shuffle the letters, then rotate to the left-most cyclic
/// shift starting at the minimum running rank.
///
/// Deterministic for a fixed seed. Not uniform over Dyck paths when `n > 1`.
pub fn random_path(params: PathParams, seed: u64) -> DyckPath {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut word: Vec<Letter> = std::iter::repeat(Letter::S)
        .take(params.n())
        .chain(std::iter::repeat(Letter::W).take(params.east_steps()))
        .collect();
    word.shuffle(&mut rng);

    let mut rank: Level = 0;
    let mut min = 0;
    let mut start = 0;
    for (i, &l) in word.iter().enumerate() {
        rank += params.delta(l);
        if rank < min {
            min = rank;
            start = i + 1;
        }
    }
    word.rotate_left(start);
    debug_assert!(validate_path(&word, params).is_ok());
    DyckPath {
        params,
        steps: word,
    }
}
