//! Command-line front end: argument parsing, dispatch to the checkers, report I/O.
//!
//! Exit codes: `0` when nothing failed, `1` when some check failed, `2` on a
//! usage or I/O error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::RingDescriptor;
use crate::poset::{ExtendedPoset, PosetSpec};
use crate::rowmotion::{iterate, Labeling, Orbit};
use crate::slacks::SlackTable;
use crate::verify::{self, default_steps, TrialConfig, Verdict, VerifyError};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {message}")]
    Schema { path: PathBuf, message: String },
}

impl CliError {
    fn usage(flag: &str, err: impl std::fmt::Display) -> Self {
        CliError::Usage(format!("invalid value for {flag}: {err}"))
    }
}

#[derive(Debug, Parser)]
#[command(name = "ncrow", version, about = "Birational rowmotion over noncommutative rings, exactly")]
struct Args {
    #[command(subcommand)]
    action: Action,
    /// rect:PxQ | delta:P | nabla:P | tria:P | trap:P,S | claw | file:PATH
    #[arg(long, global = true)]
    poset: Option<String>,
    /// q | mat:N | trop
    #[arg(long, global = true)]
    ring: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 20)]
    trials: usize,
    /// Rowmotion steps; defaults to p+q on rectangles and |P|+2 elsewhere.
    #[arg(long, global = true)]
    max_iter: Option<usize>,
    /// Random entries are drawn from [-bound, bound].
    #[arg(long, global = true, default_value_t = 9)]
    bound: u32,
    /// Labeling JSON used instead of a seeded random one (orbit, slacks).
    #[arg(long, global = true)]
    labeling: Option<PathBuf>,
    /// Write the JSON report here.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Print the JSON report instead of the table.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Action {
    /// Print f, Rf, R²f, … up to --max-iter.
    Orbit,
    /// Dump the down and up slacks along the orbit.
    Slacks,
    /// Periodicity, reciprocity and the general-poset identities.
    Verify,
    /// Probe the periodicity conjecture of a delta, nabla, tria or trap poset.
    Conjecture,
    /// The 2×2 matrix labeling of the claw whose orbit never closes.
    Claw,
    /// Invariance of the cover-ratio sum under rowmotion (unit boundary).
    Invariant,
    /// Periodicity over the max-plus semiring.
    Tropical,
}

impl Action {
    fn name(self) -> &'static str {
        match self {
            Action::Orbit => "orbit",
            Action::Slacks => "slacks",
            Action::Verify => "verify",
            Action::Conjecture => "conjecture",
            Action::Claw => "claw",
            Action::Invariant => "invariant",
            Action::Tropical => "tropical",
        }
    }
}

/// A validated invocation.
#[derive(Debug)]
pub struct Command {
    pub action: Action,
    pub poset_spec: PosetSpec,
    pub poset: ExtendedPoset,
    pub config: TrialConfig,
    pub labeling: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub json: bool,
}

/// Parses and validates `argv` (including the program name).
/// `--help` and `--version` come back as `Err(clap::Error)` to be printed.
pub fn parse_args<I, T>(argv: I) -> Result<Result<Command, CliError>, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = Args::try_parse_from(argv)?;
    Ok(validate(args))
}

fn validate(args: Args) -> Result<Command, CliError> {
    let poset_spec: PosetSpec = match (&args.poset, args.action) {
        (Some(s), _) => s.parse().map_err(|e| CliError::usage("--poset", e))?,
        (None, Action::Claw) => PosetSpec::Claw,
        (None, _) => return Err(CliError::Usage("--poset is required".into())),
    };
    let default_ring = if args.action == Action::Tropical { "trop" } else { "mat:2" };
    let ring: RingDescriptor =
        args.ring.as_deref().unwrap_or(default_ring).parse().map_err(|e| CliError::usage("--ring", e))?;
    if args.action == Action::Tropical && ring != RingDescriptor::Tropical {
        return Err(CliError::usage("--ring", "the tropical subcommand needs trop"));
    }
    if args.action == Action::Claw && (poset_spec != PosetSpec::Claw || ring != RingDescriptor::Matrix(2)) {
        return Err(CliError::Usage("the claw subcommand takes no --poset or --ring other than claw and mat:2".into()));
    }
    if args.trials == 0 {
        return Err(CliError::usage("--trials", "must be at least 1"));
    }
    if args.max_iter == Some(0) {
        return Err(CliError::usage("--max-iter", "must be at least 1"));
    }
    if args.bound == 0 {
        return Err(CliError::usage("--bound", "must be at least 1"));
    }
    let poset = ExtendedPoset::new(poset_spec.build().map_err(|e| CliError::usage("--poset", e))?);
    let mut config = TrialConfig::new(poset_spec.clone(), ring).seed(args.seed).trials(args.trials).bound(args.bound);
    config.max_iterations = args.max_iter;
    Ok(Command {
        action: args.action,
        poset_spec,
        poset,
        config,
        labeling: args.labeling,
        output: args.output,
        json: args.json,
    })
}

/// The outcome of [`run`]: a JSON document, its human rendering and whether anything failed.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub table: String,
    pub failed: bool,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.failed {
            EXIT_FAIL
        } else {
            EXIT_PASS
        }
    }
}

/// Reads a labeling for `poset`; schema errors name the offending key.
pub fn load_labeling(path: &Path, poset: &ExtendedPoset) -> Result<Labeling, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| CliError::Schema { path: path.into(), message: e.to_string() })?;
    Labeling::from_json(poset, &value).map_err(|e| CliError::Schema { path: path.into(), message: e.to_string() })
}

/// Writes `report` as pretty JSON followed by a newline.
pub fn save_report(path: &Path, report: &Value) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(report).expect("JSON values serialize");
    text.push('\n');
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source })
}

fn header(cmd: &Command) -> serde_json::Map<String, Value> {
    let mut map = serde_json::Map::new();
    map.insert("command".into(), json!(cmd.action.name()));
    map.insert("poset".into(), json!(cmd.poset_spec.to_string()));
    map.insert("ring".into(), json!(cmd.config.ring.to_string()));
    map
}

fn start_labeling(cmd: &Command) -> Result<Labeling, CliError> {
    match &cmd.labeling {
        Some(path) => {
            let f = load_labeling(path, &cmd.poset)?;
            if f.ring() != cmd.config.ring {
                return Err(CliError::Schema {
                    path: path.clone(),
                    message: format!("labeling is over {} but --ring is {}", f.ring(), cmd.config.ring),
                });
            }
            Ok(f)
        }
        None => Labeling::random(&cmd.poset, cmd.config.ring, cmd.config.seed, cmd.config.bound)
            .map_err(|e| CliError::usage("--ring", e)),
    }
}

fn render_orbit(poset: &ExtendedPoset, orbit: &Orbit) -> String {
    let mut out = String::new();
    for entry in orbit.entries() {
        match entry.state {
            None => {
                let _ = writeln!(out, "R^{} f = undefined", entry.index);
                break;
            }
            Some(g) => {
                let _ = writeln!(out, "R^{} f:", entry.index);
                for v in poset.hat_order() {
                    let _ = writeln!(out, "  {:<8} {}", poset.name(v), g.get(v));
                }
            }
        }
    }
    out
}

fn verdict_table(verdicts: &[Verdict]) -> String {
    let mut out = String::new();
    for v in verdicts {
        let _ = writeln!(out, "{:<34} {}", v.check, v.summary());
        for note in &v.notes {
            let _ = writeln!(out, "{:<34}   note: {note}", "");
        }
        for w in &v.failures {
            let _ = writeln!(
                out,
                "{:<34}   witness: seed {} at {}: {}",
                "",
                w.seed.map_or_else(|| "-".to_string(), |s| s.to_string()),
                w.mismatch.location,
                w.mismatch.identity
            );
        }
    }
    out
}

fn verdict_report(cmd: &Command, verdicts: Vec<Verdict>) -> Report {
    let mut map = header(cmd);
    if cmd.action != Action::Claw {
        map.insert("seed".into(), json!(cmd.config.seed));
        map.insert("trials".into(), json!(cmd.config.trials));
        map.insert("bound".into(), json!(cmd.config.bound));
    }
    map.insert("verdicts".into(), Value::Array(verdicts.iter().map(Verdict::to_json).collect()));
    Report { table: verdict_table(&verdicts), failed: verdicts.iter().any(Verdict::is_fail), json: Value::Object(map) }
}

type Checker = fn(&TrialConfig) -> Result<Verdict, VerifyError>;

fn checker_error(e: VerifyError) -> CliError {
    CliError::Usage(e.to_string())
}

/// Executes a validated command.
pub fn run(cmd: &Command) -> Result<Report, CliError> {
    let cfg = &cmd.config;
    let steps = cfg.max_iterations.unwrap_or_else(|| default_steps(&cmd.poset));
    match cmd.action {
        Action::Orbit | Action::Slacks => {
            let f = start_labeling(cmd)?;
            let orbit = iterate(&cmd.poset, &f, steps);
            let mut map = header(cmd);
            if cmd.labeling.is_none() {
                map.insert("seed".into(), json!(cfg.seed));
            }
            map.insert("steps".into(), json!(steps));
            map.insert("undefined_from".into(), json!(orbit.undefined_from()));
            let table = if cmd.action == Action::Orbit {
                map.insert("orbit".into(), orbit.to_json(&cmd.poset));
                render_orbit(&cmd.poset, &orbit)
            } else {
                let slacks = SlackTable::new(&cmd.poset, &orbit).to_json();
                let table = serde_json::to_string_pretty(&slacks).expect("JSON values serialize") + "\n";
                map.insert("slacks".into(), slacks);
                table
            };
            Ok(Report { json: Value::Object(map), table, failed: false })
        }
        Action::Verify => {
            let checks: [Checker; 5] = [
                verify::verify_periodicity,
                verify::verify_reciprocity,
                verify::verify_reciprocity_implies_periodicity,
                verify::verify_bottom_top,
                verify::verify_invariant_sum,
            ];
            let verdicts = checks.iter().map(|check| check(cfg)).collect::<Result<_, _>>().map_err(checker_error)?;
            Ok(verdict_report(cmd, verdicts))
        }
        Action::Conjecture => Ok(verdict_report(cmd, vec![verify::probe_conjecture(cfg).map_err(checker_error)?])),
        Action::Claw => Ok(verdict_report(cmd, vec![verify::claw_counterexample()])),
        Action::Invariant => Ok(verdict_report(cmd, vec![verify::verify_invariant_sum(cfg).map_err(checker_error)?])),
        Action::Tropical => Ok(verdict_report(cmd, vec![verify::tropical_periodicity(cfg).map_err(checker_error)?])),
    }
}

/// Full program: parse, run, print, and return the exit code.
pub fn main<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cmd = match parse_args(argv) {
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
        Ok(Err(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
        Ok(Ok(cmd)) => cmd,
    };
    let report = match run(&cmd) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    if let Some(path) = &cmd.output {
        if let Err(e) = save_report(path, &report.json) {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    }
    let printed = if cmd.json {
        serde_json::to_string_pretty(&report.json).expect("JSON values serialize") + "\n"
    } else {
        report.table.clone()
    };
    if stdout.write_all(printed.as_bytes()).is_err() {
        return EXIT_USAGE;
    }
    report.exit_code()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(line: &str) -> Result<Command, String> {
        match parse_args(std::iter::once("ncrow").chain(line.split_whitespace())) {
            Err(e) => Err(e.to_string()),
            Ok(r) => r.map_err(|e| e.to_string()),
        }
    }

    #[test]
    fn parses_examples() {
        let cmd = parse("verify --poset rect:2x2 --ring mat:2 --seed 7 --trials 20").unwrap();
        assert_eq!(cmd.action, Action::Verify);
        assert_eq!(cmd.config.seed, 7);
        assert_eq!(cmd.config.trials, 20);
        assert_eq!(cmd.config.ring, RingDescriptor::Matrix(2));
        let cmd = parse("conjecture --poset tria:3 --ring mat:3").unwrap();
        assert_eq!(cmd.poset.len(), 6);
        assert_eq!(parse("claw").unwrap().poset.len(), 4);
        assert_eq!(parse("tropical --poset rect:2x2").unwrap().config.ring, RingDescriptor::Tropical);
    }

    #[test]
    fn usage_errors_name_the_flag() {
        assert!(parse("verify --poset rect:0x2").unwrap_err().contains("--poset"));
        assert!(parse("verify --poset rect:2x2 --ring mat:0").unwrap_err().contains("--ring"));
        assert!(parse("verify --poset rect:2x2 --trials 0").unwrap_err().contains("--trials"));
        assert!(parse("tropical --poset rect:2x2 --ring q").unwrap_err().contains("--ring"));
        assert!(parse("verify").unwrap_err().contains("--poset"));
        assert!(parse("frobnicate --poset claw").is_err());
    }

    #[test]
    fn exit_codes() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = |s: &str| {
            std::iter::once("ncrow".to_string()).chain(s.split_whitespace().map(String::from)).collect::<Vec<_>>()
        };
        assert_eq!(main(argv("verify --poset rect:2x2 --trials 3"), &mut out, &mut err), EXIT_PASS);
        assert_eq!(main(argv("claw"), &mut out, &mut err), EXIT_PASS);
        assert!(String::from_utf8_lossy(&out).contains("(4/9, 5/9)"));
        assert_eq!(main(argv("verify --poset rect:0x2"), &mut out, &mut err), EXIT_USAGE);
        assert_eq!(main(argv("orbit --poset claw --labeling /nonexistent/f.json"), &mut out, &mut err), EXIT_USAGE);
        assert_eq!(main(argv("conjecture --poset rect:2x2"), &mut out, &mut err), EXIT_USAGE);
    }

    #[test]
    fn orbit_with_zero_label_stops_at_undefined() {
        let cmd = parse("orbit --poset rect:1x1 --ring q").unwrap();
        let mut f = Labeling::random(&cmd.poset, RingDescriptor::Rational, 0, 9).unwrap();
        f = f.with_label(0, RingDescriptor::Rational.zero());
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("f.json");
        std::fs::write(&path, f.to_json(&cmd.poset).to_string()).unwrap();
        let cmd = Command { labeling: Some(path), ..cmd };
        let report = run(&cmd).unwrap();
        assert!(!report.failed);
        assert_eq!(report.json["undefined_from"], 1);
        assert_eq!(report.json["orbit"][1], "undefined");
        assert!(report.table.contains("undefined"));
    }

    #[test]
    fn labeling_schema_errors_name_the_key() {
        let cmd = parse("orbit --poset rect:2x2 --ring q").unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("f.json");
        let mut value = Labeling::random(&cmd.poset, RingDescriptor::Rational, 0, 9).unwrap().to_json(&cmd.poset);
        value["labels"].as_object_mut().unwrap().remove("(1,2)");
        std::fs::write(&path, value.to_string()).unwrap();
        let err = load_labeling(&path, &cmd.poset).unwrap_err().to_string();
        assert!(err.contains("(1,2)"), "{err}");
        value["labels"]["(1,2)"] = json!("3/0");
        std::fs::write(&path, value.to_string()).unwrap();
        assert!(load_labeling(&path, &cmd.poset).is_err());
    }
}
