//! Command-line front end: `analyze`, `verify-tables`, `counterexample`.
//!
//! Every command returns an [`Outcome`] holding its report text and exit
//! code, so the binary only prints and exits.

mod report;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use leonard_core::analysis::{
    analyze_instance, counterexample_d2, pit_campaign, AnalysisError, CampaignConfig, Depth,
};
use leonard_core::parray::{parse_pairs, SpecError};
use leonard_core::{LeonardType, TypeSpec};

pub use report::{analysis_report, counterexample_report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID_SPEC: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "leonard", version, about = "Exact Leonard systems and their zero diagonal spaces")]
pub struct Cli {
    /// File of `key = value` lines; command-line flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build one Leonard system and report its zero diagonal space.
    Analyze(AnalyzeArgs),
    /// Run the seeded identity-testing campaign over the type tables.
    VerifyTables(VerifyArgs),
    /// Recheck the diameter-two pair without spin.
    Counterexample,
}

#[derive(Debug, Args, Default)]
pub struct AnalyzeArgs {
    #[arg(long = "type")]
    pub kind: Option<String>,
    #[arg(long)]
    pub d: Option<String>,
    /// `Q`, `GF(p)` or `GF(p^k)`.
    #[arg(long)]
    pub field: Option<String>,
    /// Irreducible polynomial for `GF(p^k)`, e.g. `t^3+t+1`.
    #[arg(long)]
    pub modulus: Option<String>,
    #[arg(long)]
    pub theta0: Option<String>,
    #[arg(long = "theta-star0")]
    pub theta_star0: Option<String>,
    /// `name=value`, repeatable: `--param s=1 --param s_star=1`.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    pub params: Vec<String>,
}

#[derive(Debug, Args, Default)]
pub struct VerifyArgs {
    #[arg(long = "d-min")]
    pub d_min: Option<usize>,
    #[arg(long = "d-max")]
    pub d_max: Option<usize>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, env = "LEONARD_SEED")]
    pub seed: Option<u64>,
    /// Comma-separated type names; all thirteen when absent.
    #[arg(long)]
    pub types: Option<String>,
    #[arg(long)]
    pub height: Option<u32>,
    /// `full` (default) or `tables` (array-level checks only).
    #[arg(long)]
    pub depth: Option<String>,
    /// Skip the condition-forced cells.
    #[arg(long)]
    pub unforced: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stdout: String, stderr: String) -> Self {
        Self { code, stdout, stderr }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read config {path}: {source}")]
    Config { path: PathBuf, source: std::io::Error },
    #[error("bad value for `{key}`: {reason}")]
    Usage { key: String, reason: String },
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config { .. } | CliError::Usage { .. } => EXIT_USAGE,
            CliError::Spec(_) | CliError::Analysis(AnalysisError::Spec(_)) => EXIT_INVALID_SPEC,
            CliError::Analysis(_) => EXIT_INCONSISTENT,
        }
    }

    /// `module::Variant`, naming where the error came from.
    pub fn code(&self) -> String {
        let (module, debug) = match self {
            CliError::Config { .. } | CliError::Usage { .. } => return "cli::Usage".into(),
            CliError::Spec(e) | CliError::Analysis(AnalysisError::Spec(e)) => ("parray", format!("{e:?}")),
            CliError::Analysis(AnalysisError::Realization(e)) => ("realization", format!("{e:?}")),
            CliError::Analysis(AnalysisError::ZeroDiag(e)) => ("zerodiag", format!("{e:?}")),
            CliError::Analysis(AnalysisError::Field(e)) => ("field", format!("{e:?}")),
            CliError::Analysis(e) => ("analysis", format!("{e:?}")),
        };
        let variant: String = debug.chars().take_while(|c| c.is_alphanumeric() || *c == '_').collect();
        format!("{module}::{variant}")
    }
}

/// Parse arguments and run. Usage errors exit 1; `--help` and `--version`
/// exit 0 with their text on stdout.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                Outcome::fail(EXIT_USAGE, String::new(), text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    let result = match &cli.command {
        Command::Analyze(args) => cmd_analyze(cli.config.as_deref(), args),
        Command::VerifyTables(args) => cmd_verify_tables(cli.config.as_deref(), args),
        Command::Counterexample => cmd_counterexample(),
    };
    result.unwrap_or_else(|err| Outcome::fail(err.exit_code(), String::new(), format!("error[{}]: {err}\n", err.code())))
}

fn read_config(path: Option<&std::path::Path>) -> Result<BTreeMap<String, String>, CliError> {
    let Some(path) = path else {
        return Ok(BTreeMap::new());
    };
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Config {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(parse_pairs(&text)?.into_iter().collect())
}

/// Config pairs overlaid with flags, as `TypeSpec` keys.
pub fn spec_pairs(
    config: Option<&std::path::Path>,
    args: &AnalyzeArgs,
) -> Result<BTreeMap<String, String>, CliError> {
    let mut pairs = read_config(config)?;
    let flags = [
        ("type", &args.kind),
        ("d", &args.d),
        ("field", &args.field),
        ("modulus", &args.modulus),
        ("theta0", &args.theta0),
        ("theta_star0", &args.theta_star0),
    ];
    for (key, value) in flags {
        if let Some(v) = value {
            pairs.insert(key.to_string(), v.clone());
        }
    }
    for p in &args.params {
        let (k, v) = p.split_once('=').ok_or_else(|| CliError::Usage {
            key: "param".into(),
            reason: format!("expected NAME=VALUE, got `{p}`"),
        })?;
        pairs.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(pairs)
}

pub fn cmd_analyze(config: Option<&std::path::Path>, args: &AnalyzeArgs) -> Result<Outcome, CliError> {
    let spec = TypeSpec::from_pairs(spec_pairs(config, args)?)?;
    let analysis = analyze_instance(&spec)?;
    let text = analysis_report(&analysis);
    if analysis.all_passed() {
        Ok(Outcome::ok(text))
    } else {
        let failed: Vec<&str> = analysis.failures().map(|c| c.name).collect();
        Ok(Outcome::fail(
            EXIT_INCONSISTENT,
            text,
            format!("error[analysis::ConsistencyFailure]: failed checks: {}\n", failed.join(", ")),
        ))
    }
}

fn parse_value<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CliError>
where
    T::Err: std::fmt::Display,
{
    value.trim().parse().map_err(|e: T::Err| CliError::Usage {
        key: key.into(),
        reason: e.to_string(),
    })
}

/// Campaign settings from defaults, then the config file, then flags.
pub fn campaign_config(config: Option<&std::path::Path>, args: &VerifyArgs) -> Result<CampaignConfig, CliError> {
    let mut out = CampaignConfig::default();
    let file = read_config(config)?;
    let get = |key: &str| file.get(key).or_else(|| file.get(&key.replace('_', "-"))).map(String::as_str);
    let mut types = get("types").map(str::to_string);
    let mut depth = get("depth").map(str::to_string);
    if let Some(v) = get("d_min") {
        out.d_min = parse_value("d_min", v)?;
    }
    if let Some(v) = get("d_max") {
        out.d_max = parse_value("d_max", v)?;
    }
    if let Some(v) = get("trials") {
        out.trials = parse_value("trials", v)?;
    }
    if let Some(v) = get("seed") {
        out.seed = parse_value("seed", v)?;
    }
    if let Some(v) = get("height") {
        out.height = parse_value("height", v)?;
    }
    if let Some(v) = get("unforced") {
        out.forced = !parse_value::<bool>("unforced", v)?;
    }
    out.d_min = args.d_min.unwrap_or(out.d_min);
    out.d_max = args.d_max.unwrap_or(out.d_max);
    out.trials = args.trials.unwrap_or(out.trials);
    out.seed = args.seed.unwrap_or(out.seed);
    out.height = args.height.unwrap_or(out.height);
    if args.unforced {
        out.forced = false;
    }
    if args.types.is_some() {
        types.clone_from(&args.types);
    }
    if args.depth.is_some() {
        depth.clone_from(&args.depth);
    }
    if let Some(list) = types {
        out.types = list
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.parse::<LeonardType>())
            .collect::<Result<_, _>>()
            .map_err(|e| CliError::Usage {
                key: "types".into(),
                reason: e.to_string(),
            })?;
    }
    out.depth = match depth.as_deref().map(str::trim) {
        None | Some("full") => Depth::Full,
        Some("tables") => Depth::Tables,
        Some(other) => {
            return Err(CliError::Usage {
                key: "depth".into(),
                reason: format!("expected `full` or `tables`, got `{other}`"),
            })
        }
    };
    if out.d_min < 3 || out.d_min > out.d_max {
        return Err(CliError::Usage {
            key: "d-min".into(),
            reason: format!("need 3 <= d-min <= d-max, got {}..{}", out.d_min, out.d_max),
        });
    }
    if out.trials == 0 {
        return Err(CliError::Usage {
            key: "trials".into(),
            reason: "must be at least 1".into(),
        });
    }
    Ok(out)
}

pub fn cmd_verify_tables(config: Option<&std::path::Path>, args: &VerifyArgs) -> Result<Outcome, CliError> {
    let config = campaign_config(config, args)?;
    let report = pit_campaign(&config)?;
    let text = report.to_string();
    if report.is_clean() {
        return Ok(Outcome::ok(text));
    }
    let failing: Vec<String> = report
        .cells
        .iter()
        .filter(|c| c.failed_instances() > 0)
        .map(|c| c.key.to_string())
        .collect();
    Ok(Outcome::fail(
        EXIT_INCONSISTENT,
        text,
        format!("error[analysis::IdentityFailure]: failing cells: {}\n", failing.join("; ")),
    ))
}

pub fn cmd_counterexample() -> Result<Outcome, CliError> {
    let report = counterexample_d2()?;
    Ok(Outcome::ok(counterexample_report(&report)))
}
