//! Command-line front end.
//!
//! Everything runs through [`run`], which takes the argument list and the
//! three standard streams so the whole interface can be driven from tests.
//! Exit codes: 0 success, 1 verification failure, 2 invalid input or usage.

use std::io::{BufRead, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{InvertError, PathError};
use crate::invert::{reconstruct_path, Recovery};
use crate::path::{
    count_paths, enumerate_with_prefix, parse_word, random_path, rank_sequence, DyckPath, Letter,
    PathParams,
};
use crate::render::render_path;
use crate::sweep::{format_levels, sweep_map, SweepImage};
use crate::verify::{desk_grid, verify_roundtrip_parallel, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "sweepmap",
    version,
    about = "Sweep map and its inverse on (kn,n)-Dyck paths"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepEmit {
    Sigma,
    Tau,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InvertEmit {
    Tau,
    Path,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ImplArg {
    Naive,
    Fast,
}

impl From<ImplArg> for Recovery {
    fn from(a: ImplArg) -> Recovery {
        match a {
            ImplArg::Naive => Recovery::Naive,
            ImplArg::Fast => Recovery::Fast,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sweep a path; words come from --path or stdin, one per line.
    Sweep {
        #[arg(long)]
        path: Option<String>,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = SweepEmit::Both)]
        emit: SweepEmit,
    },
    /// Recover tau and the preimage from a swept word.
    Invert {
        #[arg(long)]
        sigma: Option<String>,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = InvertEmit::Both)]
        emit: InvertEmit,
        #[arg(long = "impl", value_enum, default_value_t = ImplArg::Fast)]
        implementation: ImplArg,
    },
    /// Starting rank of every step.
    Ranks {
        #[arg(long)]
        path: Option<String>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// List every path of a cell in lexicographic order.
    Enumerate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value = "")]
        prefix: String,
    },
    /// Number of paths of a cell.
    Count {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Seeded random path.
    Random {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exhaustive round-trip check of one cell, or of the whole desk grid.
    Verify {
        #[arg(long, required_unless_present = "grid")]
        k: Option<usize>,
        #[arg(long, required_unless_present = "grid")]
        n: Option<usize>,
        #[arg(long)]
        grid: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long = "limit", alias = "max-paths")]
        limit: Option<usize>,
    },
    /// Time level recovery on a seeded random path of length about --scale.
    Bench {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        scale: usize,
        #[arg(long = "impl", value_enum, default_value_t = ImplArg::Fast)]
        implementation: ImplArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// ASCII picture of a path.
    Render {
        #[arg(long)]
        path: Option<String>,
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Debug)]
struct UsageError(String);

impl From<PathError> for UsageError {
    fn from(e: PathError) -> Self {
        UsageError(e.to_string())
    }
}

impl From<InvertError> for UsageError {
    fn from(e: InvertError) -> Self {
        UsageError(e.to_string())
    }
}

impl From<std::io::Error> for UsageError {
    fn from(e: std::io::Error) -> Self {
        UsageError(format!("i/o error: {e}"))
    }
}

/// Maps `N`/`E` to `S`/`W`, then parses.
fn parse_cli_word(text: &str) -> Result<Vec<Letter>, PathError> {
    let mapped: String = text
        .trim()
        .chars()
        .map(|c| match c {
            'N' | 'n' => 'S',
            'E' | 'e' => 'W',
            other => other,
        })
        .collect();
    parse_word(&mapped)
}

fn resolve_params(word: &[Letter], given: &ParamArgs) -> Result<PathParams, UsageError> {
    match (given.k, given.n) {
        (Some(k), Some(n)) => Ok(PathParams::new(k, n)?),
        (k, n) => {
            let inferred = PathParams::infer(word)?;
            if k.is_some_and(|k| k != inferred.k()) || n.is_some_and(|n| n != inferred.n()) {
                return Err(UsageError(format!(
                    "word implies {inferred}, inconsistent with the supplied --k/--n"
                )));
            }
            Ok(inferred)
        }
    }
}

/// Pulls the word out of a stdin line: a bare word, or a JSON object's
/// `field` (falling back to `path`/`preimage`/`sigma`).
fn word_from_line(line: &str, field: &str) -> Result<String, UsageError> {
    let line = line.trim();
    if !line.starts_with('{') {
        return Ok(line.to_string());
    }
    let value: serde_json::Value =
        serde_json::from_str(line).map_err(|e| UsageError(format!("bad JSON input: {e}")))?;
    [field, "path", "preimage", "sigma"]
        .iter()
        .find_map(|key| value.get(*key).and_then(|v| v.as_str()))
        .map(str::to_string)
        .ok_or_else(|| UsageError(format!("JSON input has no {field:?} field")))
}

/// Words from the flag, or every non-empty stdin line.
fn collect_words(
    flag: Option<String>,
    stdin: &mut dyn BufRead,
    field: &str,
) -> Result<Vec<String>, UsageError> {
    if let Some(word) = flag {
        return Ok(vec![word]);
    }
    let mut words = Vec::new();
    for line in stdin.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        words.push(word_from_line(&line, field)?);
    }
    if words.is_empty() {
        return Err(UsageError("no input words (use a flag or stdin)".into()));
    }
    Ok(words)
}

fn emit_line(out: &mut dyn Write, line: &str) -> Result<(), UsageError> {
    writeln!(out, "{line}")?;
    out.flush()?;
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(cli, stdin, out) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: Cli, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, UsageError> {
    let json = cli.format == Format::Json;
    match cli.command {
        Command::Sweep { path, params, emit } => {
            for word in collect_words(path, stdin, "path")? {
                let steps = parse_cli_word(&word)?;
                let params = resolve_params(&steps, &params)?;
                let path = DyckPath::new(steps, params)?;
                let image = sweep_map(&path);
                emit_line(out, &sweep_record(&path, &image, emit, json))?;
            }
            Ok(EXIT_OK)
        }
        Command::Invert {
            sigma,
            params,
            emit,
            implementation,
        } => {
            for word in collect_words(sigma, stdin, "sigma")? {
                let sigma = parse_cli_word(&word)?;
                let params = resolve_params(&sigma, &params)?;
                let tau = Recovery::from(implementation).run(&sigma, params)?;
                let image = SweepImage::new(params, sigma, tau);
                let preimage = reconstruct_path(&image)?;
                emit_line(out, &invert_record(&image, &preimage, emit, json))?;
            }
            Ok(EXIT_OK)
        }
        Command::Ranks { path, params } => {
            for word in collect_words(path, stdin, "path")? {
                let steps = parse_cli_word(&word)?;
                let params = resolve_params(&steps, &params)?;
                let path = DyckPath::new(steps, params)?;
                let levels: Vec<i64> = rank_sequence(&path).iter().map(|e| e.level).collect();
                let line = if json {
                    json!({"k": params.k(), "n": params.n(), "path": path.to_string(), "levels": levels})
                        .to_string()
                } else {
                    format!("levels: {}", format_levels(&levels))
                };
                emit_line(out, &line)?;
            }
            Ok(EXIT_OK)
        }
        Command::Enumerate {
            k,
            n,
            limit,
            prefix,
        } => {
            let params = PathParams::new(k, n)?;
            let prefix = parse_cli_word(&prefix)?;
            for path in enumerate_with_prefix(params, &prefix).take(limit.unwrap_or(usize::MAX)) {
                let line = if json {
                    json!({"k": k, "n": n, "path": path.to_string()}).to_string()
                } else {
                    path.to_string()
                };
                emit_line(out, &line)?;
            }
            Ok(EXIT_OK)
        }
        Command::Count { k, n } => {
            let params = PathParams::new(k, n)?;
            let count = count_paths(params);
            let line = if json {
                json!({"k": k, "n": n, "count": count.to_string()}).to_string()
            } else {
                count.to_string()
            };
            emit_line(out, &line)?;
            Ok(EXIT_OK)
        }
        Command::Random { k, n, seed } => {
            let params = PathParams::new(k, n)?;
            let path = random_path(params, seed);
            let line = if json {
                json!({"k": k, "n": n, "seed": seed, "path": path.to_string()}).to_string()
            } else {
                path.to_string()
            };
            emit_line(out, &line)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            k,
            n,
            grid,
            jobs,
            limit,
        } => {
            let cells = if grid {
                desk_grid()
            } else {
                let (k, n) = (k.expect("clap requires k"), n.expect("clap requires n"));
                vec![PathParams::new(k, n)?]
            };
            let mut reports = Vec::with_capacity(cells.len());
            for params in cells {
                let report = verify_roundtrip_parallel(params, limit, jobs);
                emit_line(out, &verify_record(&report, json))?;
                reports.push(report);
            }
            Ok(verify_exit_code(&reports))
        }
        Command::Bench {
            k,
            scale,
            implementation,
            seed,
        } => {
            let record = bench(k, scale, implementation.into(), seed)?;
            let line = if json {
                serde_json::to_string(&record).expect("serializable")
            } else {
                format!(
                    "impl={} k={} n={} L={} seed={} millis={:.3}",
                    record.implementation,
                    record.k,
                    record.n,
                    record.len,
                    record.seed,
                    record.millis
                )
            };
            emit_line(out, &line)?;
            Ok(EXIT_OK)
        }
        Command::Render { path, params } => {
            for word in collect_words(path, stdin, "path")? {
                let steps = parse_cli_word(&word)?;
                let params = resolve_params(&steps, &params)?;
                let path = DyckPath::new(steps, params)?;
                let picture = render_path(&path);
                if json {
                    emit_line(
                        out,
                        &json!({"k": params.k(), "n": params.n(), "path": path.to_string(), "render": picture})
                            .to_string(),
                    )?;
                } else {
                    write!(out, "{picture}")?;
                    out.flush()?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn sweep_record(path: &DyckPath, image: &SweepImage, emit: SweepEmit, json: bool) -> String {
    let params = image.params;
    if json {
        let mut v = json!({"k": params.k(), "n": params.n(), "path": path.to_string()});
        if emit != SweepEmit::Tau {
            v["sigma"] = json!(image.sigma_string());
        }
        if emit != SweepEmit::Sigma {
            v["tau"] = json!(image.tau);
        }
        return v.to_string();
    }
    match emit {
        SweepEmit::Sigma => image.sigma_string(),
        SweepEmit::Tau => format_levels(&image.tau),
        SweepEmit::Both => image.to_string(),
    }
}

fn invert_record(image: &SweepImage, preimage: &DyckPath, emit: InvertEmit, json: bool) -> String {
    let params = image.params;
    if json {
        let mut v = json!({"k": params.k(), "n": params.n(), "sigma": image.sigma_string()});
        if emit != InvertEmit::Path {
            v["tau"] = json!(image.tau);
        }
        if emit != InvertEmit::Tau {
            v["preimage"] = json!(preimage.to_string());
        }
        return v.to_string();
    }
    match emit {
        InvertEmit::Tau => format_levels(&image.tau),
        InvertEmit::Path => preimage.to_string(),
        InvertEmit::Both => format!("tau: {}\npreimage: {}", format_levels(&image.tau), preimage),
    }
}

/// 0 when every report succeeded, 1 otherwise.
pub fn verify_exit_code(reports: &[VerifyReport]) -> i32 {
    if reports.iter().all(VerifyReport::success) {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

fn verify_record(report: &VerifyReport, json: bool) -> String {
    if json {
        serde_json::to_string(report).expect("serializable")
    } else {
        report.summary()
    }
}

/// One timed level recovery.
#[derive(Debug, Clone, serde::Serialize)]
pub struct BenchRecord {
    #[serde(rename = "impl")]
    pub implementation: String,
    pub k: usize,
    pub n: usize,
    #[serde(rename = "L")]
    pub len: usize,
    pub seed: u64,
    pub millis: f64,
}

/// Sweeps a seeded random path with `(k+1)n` closest to `scale` and times
/// level recovery on its image. The recovered levels must equal the image's.
pub fn bench(k: usize, scale: usize, recovery: Recovery, seed: u64) -> Result<BenchRecord, String> {
    if k == 0 || scale == 0 {
        return Err("k and scale must be positive".into());
    }
    let n = ((scale as f64 / (k + 1) as f64).round() as usize).max(1);
    let params = PathParams::new(k, n).map_err(|e| e.to_string())?;
    let path = random_path(params, seed);
    let image = sweep_map(&path);
    let start = Instant::now();
    let tau = recovery
        .run(&image.sigma, params)
        .map_err(|e| e.to_string())?;
    let millis = start.elapsed().as_secs_f64() * 1e3;
    if tau != image.tau {
        return Err(format!(
            "{recovery} recovery disagrees with the sweep image"
        ));
    }
    Ok(BenchRecord {
        implementation: recovery.name().to_string(),
        k,
        n,
        len: params.len(),
        seed,
        millis,
    })
}

impl From<String> for UsageError {
    fn from(s: String) -> Self {
        UsageError(s)
    }
}
