//! Command-line front end for the `quintic` binary.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classify::{compare, identify_group, search, Grid, Relation, SearchConfig, Verdict, DEFAULT_SCREEN_PRIMES};
use crate::error::{Error, Result};
use crate::families::{Family, ParamPoint};
use crate::oracle::{identity_suite_with, SuiteConfig};
use crate::resolvents::{CoefficientTable, ResolventBundle, ResolventKind};

/// Exit status for a decided answer.
pub const EXIT_OK: i32 = 0;
/// Exit status for AMBIGUOUS verdicts, indeterminate tests and failed checks.
pub const EXIT_UNDECIDED: i32 = 1;
/// Exit status for malformed or degenerate input.
pub const EXIT_INVALID: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "quintic",
    version,
    about = "Compare splitting fields of solvable quintics over Q"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    pub output: Output,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Identify the Galois group of a point such as `d5:0,1`.
    Group { point: String },
    /// Decide how the splitting fields of two points intersect.
    Compare {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Scan an integer grid for points with the same splitting field as a fixed one.
    Search {
        /// d5, c5, f20p, f20r or c4.
        family: String,
        /// The fixed point, `x,y` in the same family.
        #[arg(long, allow_hyphen_values = true)]
        fix: String,
        /// `a:b` or `a:b,c:d`; a single range is used for both parameters
        /// unless `--t-fixed` pins the second.
        #[arg(long, allow_hyphen_values = true)]
        range: String,
        #[arg(long, allow_hyphen_values = true)]
        t_fixed: Option<i64>,
        /// Comma-separated odd primes for the modular prescreen.
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
        /// Worker threads (defaults to the available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Build and factor a resolvent: f1..f4, h1..h4, hfull or c4pm.
    Resolvent {
        kind: String,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Check the resolvent formulas against the cross-ratio model.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 16)]
        char2_field_bits: u32,
        /// Defaults to `--trials`.
        #[arg(long)]
        char2_trials: Option<usize>,
    },
}

/// Validated run settings.
#[derive(Clone, Debug)]
pub struct Config {
    pub output: Output,
    pub primes: Vec<u64>,
    pub jobs: usize,
    pub seed: u64,
    pub char2_bits: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            output: Output::Text,
            primes: DEFAULT_SCREEN_PRIMES.to_vec(),
            jobs: std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
            seed: 0,
            char2_bits: 16,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        if self.jobs == 0 {
            return Err(Error::InvalidArgument("--jobs must be at least 1".into()));
        }
        for (i, &p) in self.primes.iter().enumerate() {
            let odd_prime = p > 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0);
            if !odd_prime || self.primes[..i].contains(&p) {
                return Err(Error::InvalidArgument(format!(
                    "screen primes must be distinct odd primes, got {p}"
                )));
            }
        }
        if !(1..=63).contains(&self.char2_bits) {
            return Err(Error::InvalidArgument("char-2 field size must be 1..63 bits".into()));
        }
        Ok(())
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Indeterminate(_) | Error::Unsupported(_) => EXIT_UNDECIDED,
        _ => EXIT_INVALID,
    }
}

fn parse_range(text: &str) -> Result<(i64, i64)> {
    let (a, b) = text.split_once(':').ok_or_else(|| Error::Parse {
        token: text.into(),
        reason: "expected a:b".into(),
    })?;
    let num = |s: &str| {
        s.trim().parse::<i64>().map_err(|e| Error::Parse {
            token: s.into(),
            reason: e.to_string(),
        })
    };
    let (a, b) = (num(a)?, num(b)?);
    if a > b {
        return Err(Error::InvalidArgument(format!("empty range {text}")));
    }
    Ok((a, b))
}

/// Parses `--range` and `--t-fixed` into a grid.
pub fn parse_grid(range: &str, t_fixed: Option<i64>) -> Result<Grid> {
    let parts: Vec<&str> = range.split(',').collect();
    match (parts.as_slice(), t_fixed) {
        ([x], Some(t)) => Ok(Grid::new(parse_range(x)?, (t, t))),
        ([x], None) => {
            let r = parse_range(x)?;
            Ok(Grid::new(r, r))
        }
        ([_, _], Some(_)) => Err(Error::InvalidArgument("--t-fixed conflicts with a second range".into())),
        ([x, y], None) => Ok(Grid::new(parse_range(x)?, parse_range(y)?)),
        _ => Err(Error::Parse {
            token: range.into(),
            reason: "expected a:b or a:b,c:d".into(),
        }),
    }
}

fn point_in(family: Family, text: &str) -> Result<ParamPoint> {
    if text.contains(':') {
        let pt = ParamPoint::parse(text)?;
        if pt.family() != family {
            return Err(Error::InvalidArgument(format!(
                "{pt} is not in the {} family",
                family.tag()
            )));
        }
        Ok(pt)
    } else {
        ParamPoint::parse_values(family, text)
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn write_verdict(out: &mut dyn Write, v: &Verdict) -> std::io::Result<()> {
    match &v.table_row {
        Some(row) => writeln!(out, "{} ({row})", v.relation)?,
        None => writeln!(out, "{}", v.relation)?,
    }
    for g in [&v.left, &v.right] {
        writeln!(out, "  {}  {}", g.point, g.name)?;
    }
    for d in &v.resolvent_dts {
        writeln!(out, "  {} over {}: {} (split {})", d.kind, d.field, d.fold, d.split)?;
    }
    for w in &v.witnesses {
        writeln!(out, "  witness {}: {}", w.resolvent, w.root)?;
    }
    for c in &v.caveats {
        writeln!(out, "  note: {c}")?;
    }
    Ok(())
}

/// Runs a parsed command line; returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

enum Failure {
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    let json = cli.output == Output::Json;
    match &cli.command {
        Command::Group { point } => {
            let g = identify_group(&ParamPoint::parse(point)?)?;
            if json {
                emit_json(out, &g)?;
            } else {
                writeln!(out, "{}  {}", g.point, g.name)?;
                if let Some(m) = &g.quadratic {
                    writeln!(out, "  quadratic subfield: Q(sqrt({m}))")?;
                }
                for e in &g.evidence {
                    writeln!(out, "  {}: {}", e.test, e.outcome)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Compare { left, right } => {
            let v = compare(&ParamPoint::parse(left)?, &ParamPoint::parse(right)?)?;
            if json {
                emit_json(out, &v.to_json())?;
            } else {
                write_verdict(out, &v)?;
            }
            Ok(if v.relation == Relation::Ambiguous {
                EXIT_UNDECIDED
            } else {
                EXIT_OK
            })
        }
        Command::Search {
            family,
            fix,
            range,
            t_fixed,
            primes,
            jobs,
        } => {
            let mut cfg = Config::default();
            if let Some(p) = primes {
                cfg.primes = p.clone();
            }
            if let Some(j) = jobs {
                cfg.jobs = *j;
            }
            cfg.validate()?;
            let family = Family::parse(family)?;
            let fixed = point_in(family, fix)?;
            let grid = parse_grid(range, *t_fixed)?;
            let found = search(
                family,
                &fixed,
                &grid,
                &SearchConfig {
                    primes: cfg.primes,
                    jobs: cfg.jobs,
                },
            )?;
            let undecided = found.iter().any(|m| m.relation == Relation::Ambiguous);
            if json {
                #[derive(Serialize)]
                struct Report<'a> {
                    fixed: &'a ParamPoint,
                    grid: [(i64, i64); 2],
                    candidates: u64,
                    matches: &'a [crate::classify::SearchMatch],
                }
                emit_json(
                    out,
                    &Report {
                        fixed: &fixed,
                        grid: [grid.x, grid.y],
                        candidates: grid.len(),
                        matches: &found,
                    },
                )?;
            } else {
                for m in &found {
                    let row = m.table_row.as_deref().unwrap_or("-");
                    let wit: Vec<String> = m
                        .witnesses
                        .iter()
                        .map(|w| format!("{}={}", w.resolvent, w.root))
                        .collect();
                    let tag = if m.is_fixed { "  (fixed)" } else { "" };
                    writeln!(out, "{}  {} {}  {}{tag}", m.right, m.relation, row, wit.join(" "))?;
                }
                writeln!(out, "{} matches among {} candidates", found.len(), grid.len())?;
            }
            Ok(if undecided { EXIT_UNDECIDED } else { EXIT_OK })
        }
        Command::Resolvent { kind, left, right } => {
            let kind = ResolventKind::parse(kind)?;
            let b = ResolventBundle::build(kind, &ParamPoint::parse(left)?, &ParamPoint::parse(right)?)?;
            let j = b.to_json()?;
            if json {
                emit_json(out, &j)?;
            } else {
                writeln!(out, "{} for {} and {} over {}", j.kind, j.left, j.right, j.field)?;
                for f in &j.factorization {
                    if f.mult > 1 {
                        writeln!(out, "  ({})^{}", f.text, f.mult)?;
                    } else {
                        writeln!(out, "  {}", f.text)?;
                    }
                }
                writeln!(out, "  decomposition type: {} (split {})", j.dt_fold, j.dt_split)?;
                for c in &j.caveats {
                    writeln!(out, "  note: {c}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            seed,
            trials,
            char2_field_bits,
            char2_trials,
        } => {
            let cfg = Config {
                seed: *seed,
                char2_bits: *char2_field_bits,
                ..Config::default()
            };
            cfg.validate()?;
            let mut suite = SuiteConfig::new(cfg.seed, *trials);
            suite.char2_bits = cfg.char2_bits;
            suite.char2_trials = char2_trials.unwrap_or(*trials);
            let report = identity_suite_with(&suite, CoefficientTable::standard());
            if json {
                emit_json(out, &report)?;
            } else {
                for r in &report.identities {
                    let status = if r.passed() { "PASS" } else { "FAIL" };
                    write!(
                        out,
                        "{status} {} ({} checked, {} failed)",
                        r.name, r.checked, r.failures
                    )?;
                    if let Some((n, pt)) = &r.first_failure {
                        write!(out, " first failure at trial {n}: {pt}")?;
                    }
                    writeln!(out)?;
                }
            }
            Ok(if report.all_passed { EXIT_OK } else { EXIT_UNDECIDED })
        }
    }
}

/// Entry point shared by the binary: parses `args` and runs.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(&cli, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let cli = Cli::try_parse_from(std::iter::once("quintic").chain(args.iter().copied())).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&cli, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
    }

    #[test]
    fn grids() {
        assert_eq!(
            parse_grid("-400:400,-400:400", None).unwrap(),
            Grid::new((-400, 400), (-400, 400))
        );
        assert_eq!(parse_grid("-5:5", Some(1)).unwrap(), Grid::new((-5, 5), (1, 1)));
        assert!(parse_grid("5:-5", None).is_err());
        assert!(parse_grid("1:2,3:4", Some(1)).is_err());
    }

    #[test]
    fn config_rules() {
        assert!(Config {
            jobs: 0,
            ..Config::default()
        }
        .validate()
        .is_err());
        assert!(Config {
            primes: vec![101, 9],
            ..Config::default()
        }
        .validate()
        .is_err());
        assert!(Config {
            primes: vec![2],
            ..Config::default()
        }
        .validate()
        .is_err());
        assert!(Config::default().validate().is_ok());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["compare", "d5:5,-1", "d5:0,1"]).0, EXIT_OK);
        assert_eq!(run_args(&["compare", "d5:3,0", "d5:0,1"]).0, EXIT_INVALID);
        assert_eq!(run_args(&["group", "q7:1,1"]).0, EXIT_INVALID);
        let (code, text) = run_args(&["--output", "json", "compare", "d5:5,-1", "d5:0,1"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["verdict"], "EQUAL");
        assert_eq!(v["table_row"], "II-3");
    }
}
