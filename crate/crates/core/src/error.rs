use thiserror::Error;

use crate::path::Level;

/// Rejections from word parsing and path validation. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("unexpected letter {found:?} at position {index} (expected S or W)")]
    BadAlphabet { index: usize, found: char },
    #[error("word has {s} S and {w} W, expected {expected_s} S and {expected_w} W")]
    WrongLetterCount {
        s: usize,
        w: usize,
        expected_s: usize,
        expected_w: usize,
    },
    #[error("path drops below the diagonal at step {index}")]
    BelowDiagonal { index: usize },
    #[error("k and n must both be positive (got k={k}, n={n})")]
    ZeroParam { k: usize, n: usize },
    #[error("k={k}, n={n} exceeds the representable rank range")]
    ParamsOutOfRange { k: usize, n: usize },
    #[error("cannot infer (k, n) from {s} S and {w} W: #W must be a positive multiple of #S")]
    CannotInferParams { s: usize, w: usize },
}

/// Rejections from level recovery and path reconstruction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvertError {
    #[error("sigma is malformed: {reason}")]
    SigmaMalformed { reason: String },
    #[error("not a sweep image: zero difference at position {index} (level {level})")]
    ZeroDifference { index: usize, level: Level },
    #[error("not a sweep image: batch of {wanted} W starting at position {index} but only {available} W remain")]
    BatchOverflow {
        index: usize,
        wanted: usize,
        available: usize,
    },
    #[error("sigma and tau have different lengths ({sigma} vs {tau})")]
    LengthMismatch { sigma: usize, tau: usize },
    #[error("no unconsumed endpoint at rank {rank} for step {step}")]
    NoEndpointAtRank { rank: Level, step: usize },
    #[error("{count} endpoints left unconsumed after reconstruction")]
    LeftoverEntries { count: usize },
    #[error("reconstructed word is not a Dyck path: {0}")]
    InvalidPreimage(#[from] crate::error::PathError),
}

impl InvertError {
    /// True for the errors that mean "σ is not the image of any path".
    pub fn is_invalid_image(&self) -> bool {
        matches!(
            self,
            InvertError::ZeroDifference { .. } | InvertError::BatchOverflow { .. }
        )
    }
}
