//! The `howe` command-line driver.
//!
//! Flags may be mirrored in a TOML file passed with `--config`; flags given on
//! the command line win. `HOWE_WORKERS` sets the sweep thread count. Exit code
//! 0 means the computation ran (a Reducible verdict is data, not a failure),
//! 1 means bad input or I/O trouble, 3 means an internal invariant failed.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::graded::{check_graded_dims_o, check_graded_dims_sp, GradedCheck};
use crate::jantzen::check_irreducible;
use crate::rootsys::{format_root, RootSystem, SystemKind};
use crate::survey::{sweep_sp, sweep_u, EpsFilter, SweepReport};
use crate::theta::{theta_o_lowest, theta_u_lowest, to_highest_gl, to_highest_sp, Epsilon, SignedWeight, UnitarySigma};
use crate::weight::{format_q, Weight};

pub const WORKERS_ENV: &str = "HOWE_WORKERS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Parser)]
#[command(name = "howe", version, about = "Dual pair weight tables and generalized Verma irreducibility")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// TOML file whose keys mirror the flags.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Keep wall-clock time in sweep reports (breaks byte-identical output).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print ρ for GL(n,m) or SP(p).
    Rho(SystemArgs),
    /// Map a parameter σ to τ′ (lowest) and τ (highest).
    Theta(ThetaArgs),
    /// Decide irreducibility of N(λ).
    Check(CheckArgs),
    /// Run the check over every admissible σ up to a bound.
    Sweep(SweepArgs),
    /// Verify filtration dimension identities.
    Graded(GradedArgs),
}

#[derive(Debug, Default, Args)]
pub struct SystemArgs {
    #[arg(long, num_args = 2, value_names = ["N", "M"])]
    pub gl: Option<Vec<u32>>,
    #[arg(long, value_name = "P")]
    pub sp: Option<u32>,
}

#[derive(Debug, Default, Args)]
pub struct ThetaArgs {
    /// `u` for (U(p),U(m,n)), `o` (or `sp`) for (O(n),Sp(2p)).
    #[arg(long)]
    pub pair: Option<String>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub eps: Option<String>,
    /// Drop the k + l <= p constraint.
    #[arg(long)]
    pub relaxed: bool,
}

#[derive(Debug, Default, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub weight: Option<String>,
}

#[derive(Debug, Default, Args)]
pub struct SweepArgs {
    /// `u` or `sp` (alias `o`).
    #[arg(long)]
    pub pair: Option<String>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub bound: Option<u32>,
    /// `both`, `+1` or `-1`.
    #[arg(long, allow_hyphen_values = true)]
    pub eps: Option<String>,
}

#[derive(Debug, Default, Args)]
pub struct GradedArgs {
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    pub o: Option<Vec<u32>>,
    #[arg(long, value_name = "P")]
    pub sp: Option<u32>,
    #[arg(long = "dimE")]
    pub dim_e: Option<u64>,
    #[arg(long = "dimF")]
    pub dim_f: Option<u64>,
    /// Highest filtration degree to check.
    #[arg(long = "N")]
    pub degree: Option<u64>,
}

/// Keys accepted in a `--config` file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub pair: Option<String>,
    pub m: Option<u32>,
    pub n: Option<u32>,
    pub p: Option<u32>,
    pub a: Option<String>,
    pub b: Option<String>,
    pub eps: Option<String>,
    pub relaxed: Option<bool>,
    pub gl: Option<Vec<u32>>,
    pub sp: Option<u32>,
    pub o: Option<Vec<u32>>,
    pub weight: Option<String>,
    pub bound: Option<u32>,
    #[serde(rename = "dimE")]
    pub dim_e: Option<u64>,
    #[serde(rename = "dimF")]
    pub dim_f: Option<u64>,
    #[serde(rename = "N")]
    pub degree: Option<u64>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub timing: Option<bool>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        toml::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThetaTask {
    U(UnitarySigma),
    O(SignedWeight),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SweepTask {
    U { m: u32, n: u32, p: u32, bound: u32 },
    Sp { n: u32, p: u32, bound: u32, eps: EpsFilter },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradedTask {
    O { m: u64, n: u64, dim_e: u64, degree: u64 },
    Sp { p: u64, dim_e: u64, dim_f: u64, degree: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Task {
    Rho(SystemKind),
    Theta(ThetaTask),
    Check { system: SystemKind, weight: Weight },
    Sweep(SweepTask),
    Graded(GradedTask),
}

/// A fully validated invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub task: Task,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub timing: bool,
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidParameter(format!("missing --{flag}")))
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("not an integer: {t:?}")))
        })
        .collect()
}

fn parse_epsilon(s: &str) -> Result<Epsilon> {
    match s.trim() {
        "1" | "+1" | "+" | "plus" => Ok(Epsilon::Plus),
        "-1" | "-" | "minus" => Ok(Epsilon::Minus),
        other => Err(Error::Parse(format!("epsilon must be +1 or -1, got {other:?}"))),
    }
}

fn parse_eps_filter(s: &str) -> Result<EpsFilter> {
    match s.trim() {
        "both" | "all" => Ok(EpsFilter::Both),
        other => Ok(match parse_epsilon(other)? {
            Epsilon::Plus => EpsFilter::Plus,
            Epsilon::Minus => EpsFilter::Minus,
        }),
    }
}

fn parse_system(gl: Option<Vec<u32>>, sp: Option<u32>) -> Result<SystemKind> {
    match (gl, sp) {
        (Some(v), None) => match v.as_slice() {
            [n, m] if *n > 0 && *m > 0 => Ok(SystemKind::Gl { n: *n, m: *m }),
            _ => Err(Error::InvalidParameter(format!("--gl needs two positive integers, got {v:?}"))),
        },
        (None, Some(p)) if p > 0 => Ok(SystemKind::Sp { p }),
        (None, Some(_)) => Err(Error::InvalidParameter("--sp needs p >= 1".into())),
        (Some(_), Some(_)) => Err(Error::InvalidParameter("give exactly one of --gl and --sp".into())),
        (None, None) => Err(Error::InvalidParameter("missing --gl N M or --sp P".into())),
    }
}

enum PairChoice {
    U,
    O,
}

fn parse_pair(s: &str) -> Result<PairChoice> {
    match s.trim().to_ascii_lowercase().as_str() {
        "u" => Ok(PairChoice::U),
        "o" | "sp" => Ok(PairChoice::O),
        other => Err(Error::InvalidParameter(format!("unknown pair {other:?} (use u or sp)"))),
    }
}

impl RunConfig {
    /// Merges command-line flags over an optional config file and validates
    /// every parameter.
    pub fn resolve(cli: Cli) -> Result<Self> {
        let file = match &cli.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let f = file;
        let task = match cli.command {
            Command::Rho(s) => Task::Rho(parse_system(s.gl.or(f.gl), s.sp.or(f.sp))?),
            Command::Theta(t) => {
                let pair = need(t.pair.or(f.pair), "pair")?;
                let a = parse_ints(&t.a.or(f.a).unwrap_or_default())?;
                match parse_pair(&pair)? {
                    PairChoice::U => {
                        let b = parse_ints(&t.b.or(f.b).unwrap_or_default())?;
                        let (m, n, p) = (
                            need(t.m.or(f.m), "m")?,
                            need(t.n.or(f.n), "n")?,
                            need(t.p.or(f.p), "p")?,
                        );
                        let relaxed = t.relaxed || f.relaxed.unwrap_or(false);
                        Task::Theta(ThetaTask::U(UnitarySigma::from_padded(&a, &b, p, m, n, relaxed)?))
                    }
                    PairChoice::O => {
                        let eps = match t.eps.or(f.eps) {
                            Some(e) => parse_epsilon(&e)?,
                            None => Epsilon::Plus,
                        };
                        let (n, p) = (need(t.n.or(f.n), "n")?, need(t.p.or(f.p), "p")?);
                        Task::Theta(ThetaTask::O(SignedWeight::from_padded(&a, eps, n, p)?))
                    }
                }
            }
            Command::Check(c) => {
                let system = parse_system(c.system.gl.or(f.gl), c.system.sp.or(f.sp))?;
                let weight: Weight = need(c.weight.or(f.weight), "weight")?.parse()?;
                weight.expect_len(system.rank())?;
                Task::Check { system, weight }
            }
            Command::Sweep(s) => {
                let pair = need(s.pair.or(f.pair), "pair")?;
                let n = need(s.n.or(f.n), "n")?;
                let p = need(s.p.or(f.p), "p")?;
                let bound = need(s.bound.or(f.bound), "bound")?;
                if n == 0 || p == 0 {
                    return Err(Error::InvalidParameter("n and p must be >= 1".into()));
                }
                match parse_pair(&pair)? {
                    PairChoice::U => {
                        let m = need(s.m.or(f.m), "m")?;
                        if m == 0 {
                            return Err(Error::InvalidParameter("m must be >= 1".into()));
                        }
                        Task::Sweep(SweepTask::U { m, n, p, bound })
                    }
                    PairChoice::O => {
                        let eps = match s.eps.or(f.eps) {
                            Some(e) => parse_eps_filter(&e)?,
                            None => EpsFilter::Both,
                        };
                        Task::Sweep(SweepTask::Sp { n, p, bound, eps })
                    }
                }
            }
            Command::Graded(g) => {
                let dim_e = g.dim_e.or(f.dim_e).unwrap_or(1);
                let degree = need(g.degree.or(f.degree), "N")?;
                if dim_e == 0 {
                    return Err(Error::InvalidParameter("dimE must be >= 1".into()));
                }
                match (g.o.or(f.o), g.sp.or(f.sp)) {
                    (Some(v), None) => match v.as_slice() {
                        [m, n] if *m > 0 && *n > 0 => Task::Graded(GradedTask::O {
                            m: *m as u64,
                            n: *n as u64,
                            dim_e,
                            degree,
                        }),
                        _ => return Err(Error::InvalidParameter("--o needs two positive integers".into())),
                    },
                    (None, Some(p)) if p > 0 => {
                        let dim_f = g.dim_f.or(f.dim_f).unwrap_or(1);
                        if dim_f == 0 {
                            return Err(Error::InvalidParameter("dimF must be >= 1".into()));
                        }
                        Task::Graded(GradedTask::Sp {
                            p: p as u64,
                            dim_e,
                            dim_f,
                            degree,
                        })
                    }
                    _ => return Err(Error::InvalidParameter("give exactly one of --o M N and --sp P".into())),
                }
            }
        };
        Ok(RunConfig {
            task,
            format: cli.format.or(f.format).unwrap_or(Format::Pretty),
            out: cli.out.or(f.out),
            timing: cli.timing || f.timing.unwrap_or(false),
        })
    }
}

fn emit(cfg: &RunConfig, stdout: &mut dyn Write, body: &str) -> Result<()> {
    match &cfg.out {
        Some(path) => fs::write(path, body)?,
        None => stdout.write_all(body.as_bytes())?,
    }
    Ok(())
}

fn json_line(v: &impl Serialize) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn unsupported(format: Format, what: &str) -> Error {
    Error::InvalidParameter(format!("{format:?} output is not available for {what}"))
}

/// Executes a validated configuration, writing human output to `stdout`.
pub fn run(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<()> {
    match &cfg.task {
        Task::Rho(kind) => {
            let rs = RootSystem::build(*kind)?;
            let body = match cfg.format {
                Format::Pretty => format!("{}\n", rs.rho()),
                Format::Json => json_line(&json!({ "system": kind.to_string(), "rho": rs.rho() }))?,
                Format::Csv => return Err(unsupported(cfg.format, "rho")),
            };
            emit(cfg, stdout, &body)
        }
        Task::Theta(task) => {
            let (pair, sigma, lowest, highest, split) = match task {
                ThetaTask::U(s) => {
                    let low = theta_u_lowest(s)?;
                    let high = to_highest_gl(&low, s.m(), s.n())?;
                    let split = Some((s.m() as usize, s.n() as usize));
                    ("u", s.to_string(), low, high, split)
                }
                ThetaTask::O(s) => {
                    let low = theta_o_lowest(s)?;
                    let high = to_highest_sp(&low);
                    ("o", s.to_string(), low, high, None)
                }
            };
            let body = match cfg.format {
                Format::Pretty => match split {
                    Some((m, n)) => format!(
                        "sigma: {sigma}\ntau' = ({})\ntau = ({})\n",
                        lowest.display_blocks(m),
                        highest.display_blocks(n)
                    ),
                    None => format!("sigma: {sigma}\ntau' = ({lowest})\ntau = ({highest})\n"),
                },
                Format::Json => json_line(&json!({
                    "pair": pair,
                    "sigma": sigma,
                    "lowest": lowest,
                    "highest": highest,
                }))?,
                Format::Csv => return Err(unsupported(cfg.format, "theta")),
            };
            emit(cfg, stdout, &body)
        }
        Task::Check { system, weight } => {
            let rs = RootSystem::build(*system)?;
            let verdict = check_irreducible(&rs, weight)?;
            let body = match cfg.format {
                Format::Pretty => {
                    let shifted = weight.checked_add(rs.rho())?;
                    let mut s = format!("{}\nsystem: {system}\nlambda+rho = ({shifted})\n", verdict.status);
                    for e in &verdict.pairings {
                        s.push_str(&format!(
                            "  (lambda+rho)_{} = {}\n",
                            format_root(&e.alpha),
                            format_q(&e.value)
                        ));
                    }
                    for w in &verdict.witnesses {
                        s.push_str(&format!("witness: {w}\n"));
                    }
                    s
                }
                Format::Json => json_line(&json!({
                    "system": system.to_string(),
                    "weight": weight,
                    "verdict": verdict,
                }))?,
                Format::Csv => return Err(unsupported(cfg.format, "check")),
            };
            emit(cfg, stdout, &body)
        }
        Task::Sweep(task) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(worker_count()?.unwrap_or(0))
                .build()
                .map_err(|e| Error::InvalidParameter(e.to_string()))?;
            let mut report = pool.install(|| match *task {
                SweepTask::U { m, n, p, bound } => sweep_u(m, n, p, bound),
                SweepTask::Sp { n, p, bound, eps } => sweep_sp(n, p, bound, eps),
            })?;
            let elapsed = report.wall_time_ms;
            if !cfg.timing {
                report.wall_time_ms = None;
            }
            write_sweep(cfg, stdout, &report)?;
            if cfg.timing {
                if let Some(ms) = elapsed {
                    writeln!(stdout, "wall time: {ms} ms")?;
                }
            }
            report.check_invariants()
        }
        Task::Graded(task) => {
            let check = match *task {
                GradedTask::O { m, n, dim_e, degree } => check_graded_dims_o(m, n, dim_e, degree)?,
                GradedTask::Sp {
                    p,
                    dim_e,
                    dim_f,
                    degree,
                } => check_graded_dims_sp(p, dim_e, dim_f, degree)?,
            };
            write_graded(cfg, stdout, &check)?;
            if check.equal {
                Ok(())
            } else {
                Err(Error::Invariant("graded dimensions differ".into()))
            }
        }
    }
}

fn write_sweep(cfg: &RunConfig, stdout: &mut dyn Write, report: &SweepReport) -> Result<()> {
    let machine = match cfg.format {
        Format::Json => Some(report.to_json()?),
        Format::Csv => {
            let mut buf = Vec::new();
            report.write_csv(&mut buf)?;
            Some(String::from_utf8(buf).expect("csv is utf-8"))
        }
        Format::Pretty if cfg.out.is_some() => Some(report.to_json()?),
        Format::Pretty => None,
    };
    match (machine, &cfg.out) {
        (Some(body), Some(path)) => {
            fs::write(path, body)?;
            writeln!(stdout, "{}", report.summary_line())?;
        }
        (Some(body), None) => stdout.write_all(body.as_bytes())?,
        (None, _) => {
            let h = &report.histogram;
            writeln!(
                stdout,
                "sigmas: {}  irreducible: {}  reducible: {}  unknown: {}",
                report.total, h.irreducible, h.reducible, h.unknown
            )?;
            for c in &report.counterexamples {
                writeln!(
                    stdout,
                    "counterexample: {}  tau=({})  alpha={}  value={}",
                    c.sigma,
                    c.tau,
                    format_root(&c.alpha),
                    format_q(&c.value)
                )?;
            }
            writeln!(stdout, "{}", report.summary_line())?;
        }
    }
    Ok(())
}

fn write_graded(cfg: &RunConfig, stdout: &mut dyn Write, check: &GradedCheck) -> Result<()> {
    let summary = format!("equal: {}", check.equal);
    let body = match cfg.format {
        Format::Json => json_line(check)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["degree", "left", "right", "third", "equal"])?;
            for r in &check.rows {
                w.write_record([
                    r.degree.to_string(),
                    r.left.clone(),
                    r.right.clone(),
                    r.third.clone().unwrap_or_default(),
                    r.equal.to_string(),
                ])?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Error::Io(e.into_error()))?).expect("csv is utf-8")
        }
        Format::Pretty => {
            let mut s = String::new();
            for r in &check.rows {
                s.push_str(&format!("t={:<3} {} = {}", r.degree, r.left, r.right));
                if let Some(t) = &r.third {
                    s.push_str(&format!(" = {t}"));
                }
                s.push('\n');
            }
            s.push_str(&summary);
            s.push('\n');
            s
        }
    };
    match &cfg.out {
        Some(path) => {
            fs::write(path, body)?;
            writeln!(stdout, "{summary}")?;
        }
        None => stdout.write_all(body.as_bytes())?,
    }
    Ok(())
}

/// Reads `HOWE_WORKERS`; `None` lets rayon pick.
pub fn worker_count() -> Result<Option<usize>> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&k| k > 0)
            .map(Some)
            .ok_or_else(|| Error::InvalidParameter(format!("{WORKERS_ENV} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

/// Parses, validates and runs; returns the process exit code.
pub fn run_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(stdout, "{e}")
            } else {
                write!(stderr, "{e}")
            };
            return code;
        }
    };
    let outcome = RunConfig::resolve(cli).and_then(|cfg| run(&cfg, stdout));
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::Invariant(_) => 3,
                _ => 1,
            }
        }
    }
}

pub fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run_with_args(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code)
}
