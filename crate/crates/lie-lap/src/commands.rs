//! Command-line definitions and the four subcommands.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use lie_lap_core::algebra::{GroupSpec, SymTensor};
use lie_lap_core::irreps::labels_up_to_level;
use lie_lap_core::ratmat::{parse_rational, Rat};
use lie_lap_core::spectrum::assemble_spectrum_with;
use lie_lap_core::witness::{
    certify_labels, default_alpha_grid, default_pairs_epsilon, pairs_mixed_witness, pairs_pipeline, su2_even_b_witness,
    witness_search_with,
};
use num_traits::Signed;
use serde::Deserialize;
use serde_json::Value;

use crate::error::{CliError, ExitCode};
use crate::input::{group_from_file, load_gram_arg, load_group_arg, load_tensor_arg, read_json_file};
use crate::output::{
    certificates_pretty, spectrum_pretty, tensor_hash, tensor_rows, to_json, write_spectrum_csv, CertificateJson,
    CertifyJson, ConstructiveJson, EvenJson, Format, MixedJson, PipelineJson, SpectrumJson, WitnessJson,
};
use crate::parallel::Rayon;
use crate::verify::{self, Check, Params};

#[derive(Parser, Debug)]
#[command(name = "lie-lap", version, about = "Laplace spectra and irreducibility certificates for left-invariant metrics on SU(2)^k x T^n")]
pub struct Cli {
    /// JSON file whose keys mirror the command-line flags; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Worker threads (default: LIE_LAP_THREADS, else one per core).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Laplace spectrum below a cutoff with real multiplicities and verdicts.
    Spectrum(SpectrumArgs),
    /// All certificates a, b, c for a tensor up to a level.
    Certify(CertifyArgs),
    /// Search for a tensor with all certificates nonzero up to a level.
    Witness(WitnessArgs),
    /// Exact checks of the SU(2) identities behind the constructions.
    VerifyPaper(VerifyArgs),
}

#[derive(Args, Debug, Clone, Default)]
pub struct MetricArgs {
    /// Group preset (su2, so3, u2, so4, spin4, tN, su2xsu2, su2^2xt1, ...) or JSON description.
    #[arg(long)]
    pub group: Option<String>,
    /// Tensor S: `identity`, inline JSON matrix, or JSON file (a bare matrix or an object with "tensor").
    #[arg(long, conflicts_with = "gram")]
    pub tensor: Option<String>,
    /// Gram matrix G of the metric (S = G^-1): `identity`, inline JSON or file.
    #[arg(long)]
    pub gram: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub metric: MetricArgs,
    /// Eigenvalue cutoff Λ (integer or p/q).
    #[arg(long)]
    pub max_eig: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub metric: MetricArgs,
    /// Every spin and every |λ_i| at most this.
    #[arg(long)]
    pub level: Option<u32>,
}

#[derive(Args, Debug, Clone)]
pub struct WitnessArgs {
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long)]
    pub level: Option<u32>,
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// Check to run (repeatable); `all` runs every check.
    #[arg(long, value_enum)]
    pub check: Vec<Check>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub mprime: Option<u32>,
    #[arg(long)]
    pub max_m: Option<u32>,
    /// ε for pairs-ii (p/q).
    #[arg(long)]
    pub eps: Option<String>,
    /// Torus weights for pairs-i (repeatable).
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: Vec<i64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Contents of a `--config` file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct RunConfig {
    pub command: Option<String>,
    pub group: Option<Value>,
    pub tensor: Option<Value>,
    pub gram: Option<Value>,
    pub max_eig: Option<Value>,
    pub level: Option<u32>,
    pub trials: Option<u64>,
    pub seed: Option<u64>,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
    pub threads: Option<usize>,
    #[serde(default)]
    pub check: Vec<Check>,
    pub m: Option<u32>,
    pub mprime: Option<u32>,
    pub max_m: Option<u32>,
    pub eps: Option<String>,
    #[serde(default)]
    pub lambda: Vec<i64>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<RunConfig, CliError> {
        let v = read_json_file(path)?;
        let mut cfg: RunConfig =
            serde_json::from_value(v).map_err(|source| CliError::Json { what: path.display().to_string(), source })?;
        let base = path.parent().unwrap_or(Path::new("."));
        for field in [&mut cfg.group, &mut cfg.tensor, &mut cfg.gram] {
            if let Some(Value::String(s)) = field {
                let candidate = base.join(&*s);
                if candidate.is_file() {
                    *s = candidate.display().to_string();
                }
            }
        }
        Ok(cfg)
    }
}

/// JSON config values become flag-style strings (inline JSON for arrays/objects).
fn value_arg(v: &Option<Value>) -> Option<String> {
    match v {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(other) => Some(other.to_string()),
    }
}

/// Output of a command: text for stdout and the exit code to return.
pub struct Outcome {
    pub text: String,
    pub code: ExitCode,
    pub output: Option<PathBuf>,
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    let cfg = match &cli.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    let exec = Rayon::new(cli.threads.or(cfg.threads));
    let command = match cli.command {
        Some(c) => c,
        None => match cfg.command.as_deref() {
            Some("spectrum") => Command::Spectrum(SpectrumArgs { metric: MetricArgs::default(), max_eig: None }),
            Some("certify") => Command::Certify(CertifyArgs { metric: MetricArgs::default(), level: None }),
            Some("witness") => Command::Witness(WitnessArgs {
                group: None,
                level: None,
                trials: None,
                seed: None,
                format: None,
                output: None,
            }),
            Some("verify-paper") => Command::VerifyPaper(VerifyArgs {
                check: Vec::new(),
                m: None,
                mprime: None,
                max_m: None,
                eps: None,
                lambda: Vec::new(),
                format: None,
                output: None,
            }),
            Some(other) => return Err(CliError::usage(format!("unknown command {other:?} in config"))),
            None => return Err(CliError::usage("no command given (spectrum, certify, witness, verify-paper)")),
        },
    };
    match command {
        Command::Spectrum(a) => cmd_spectrum(&exec, a, &cfg),
        Command::Certify(a) => cmd_certify(&exec, a, &cfg),
        Command::Witness(a) => cmd_witness(&exec, a, &cfg),
        Command::VerifyPaper(a) => cmd_verify(a, &cfg),
    }
}

struct Metric {
    group: GroupSpec,
    tensor: SymTensor,
    format: Format,
    output: Option<PathBuf>,
}

fn resolve_metric(a: &MetricArgs, cfg: &RunConfig) -> Result<Metric, CliError> {
    let tensor_arg = a.tensor.clone().or_else(|| if a.gram.is_none() { value_arg(&cfg.tensor) } else { None });
    let gram_arg = a.gram.clone().or_else(|| if a.tensor.is_none() { value_arg(&cfg.gram) } else { None });
    let group = match a.group.clone().or_else(|| value_arg(&cfg.group)) {
        Some(g) => load_group_arg(&g)?,
        None => match tensor_arg.as_deref().map(group_from_file).transpose()?.flatten() {
            Some(g) => g,
            None => return Err(CliError::usage("--group is required")),
        },
    };
    let tensor = match (tensor_arg, gram_arg) {
        (Some(_), Some(_)) => return Err(CliError::usage("give exactly one of --tensor and --gram")),
        (Some(t), None) => load_tensor_arg(&t, group.dim())?,
        (None, Some(g)) => load_gram_arg(&g, group.dim())?,
        (None, None) => return Err(CliError::usage("one of --tensor or --gram is required")),
    };
    Ok(Metric { group, tensor, format: a.format.or(cfg.format).unwrap_or(Format::Json), output: a.output.clone().or(cfg.output.clone()) })
}

fn parse_cutoff_value(s: &str) -> Result<Rat, CliError> {
    Ok(parse_rational(s)?)
}

pub fn cmd_spectrum(exec: &Rayon, a: SpectrumArgs, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let m = resolve_metric(&a.metric, cfg)?;
    let cutoff_arg = a.max_eig.or_else(|| value_arg(&cfg.max_eig)).ok_or_else(|| CliError::usage("--max-eig is required"))?;
    let cutoff = parse_cutoff_value(&cutoff_arg)?;
    if !cutoff.is_positive() {
        return Err(CliError::usage("--max-eig must be positive"));
    }
    let table = assemble_spectrum_with(exec, &m.group, &m.tensor, &cutoff)?;
    let text = match m.format {
        Format::Json => to_json(&SpectrumJson::from(&table)),
        Format::Pretty => spectrum_pretty(&table),
        Format::Csv => {
            let mut buf = Vec::new();
            write_spectrum_csv(&table, &mut buf)?;
            String::from_utf8(buf).expect("utf-8 csv")
        }
    };
    Ok(Outcome { text, code: ExitCode::Ok, output: m.output })
}

pub fn cmd_certify(exec: &Rayon, a: CertifyArgs, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let m = resolve_metric(&a.metric, cfg)?;
    if !m.tensor.is_positive_definite() {
        return Err(CliError::Core(lie_lap_core::Error::Domain("tensor is not positive definite".into())));
    }
    let level = a.level.or(cfg.level).unwrap_or(4);
    let labels = labels_up_to_level(&m.group, level);
    let certs = certify_labels(exec, &labels, &m.tensor, &m.group)?;
    let verdict = certs.iter().all(|c| c.verdict());
    let text = match m.format {
        Format::Json => to_json(&CertifyJson {
            group: (&m.group).into(),
            tensor: tensor_rows(&m.tensor),
            tensor_hash: tensor_hash(&m.tensor),
            level,
            labels: labels.iter().map(ToString::to_string).collect(),
            certificates: certs.iter().map(CertificateJson::from).collect(),
            verdict,
        }),
        Format::Pretty => format!("{}verdict: {verdict}\n", certificates_pretty(&certs)),
        Format::Csv => return Err(CliError::usage("csv output is only available for spectrum tables")),
    };
    Ok(Outcome { text, code: if verdict { ExitCode::Ok } else { ExitCode::CheckFailed }, output: m.output })
}

/// Explicit constructions matching the group's shape, up to `level`.
fn constructive(group: &GroupSpec, level: u32) -> Result<ConstructiveJson, CliError> {
    let mut out = ConstructiveJson::default();
    let labels = labels_up_to_level(group, level);
    match (group.su2_factors(), group.torus_rank()) {
        (1, 0) => {
            for l in labels.iter().filter(|l| l.spins[0] >= 2 && l.spins[0] % 2 == 0) {
                out.even_spin.push(EvenJson::from(&su2_even_b_witness(l.spins[0])?));
            }
        }
        (1, _) => {
            for l in labels.iter().filter(|l| l.spins[0] % 2 == 1 && !l.is_self_dual()) {
                let i = l.weight.iter().position(|&w| w != 0).expect("nonzero weight");
                let mut y = vec![Rat::from_integer(0.into()); l.weight.len()];
                y[i] = Rat::from_integer(1.into());
                out.mixed.push(MixedJson::from(&pairs_mixed_witness(l.spins[0], &l.weight, &y)?));
            }
        }
        (2, 0) => {
            for l in labels.iter().filter(|l| l.spins.iter().all(|m| m % 2 == 1) && l.spins[0] <= l.spins[1]) {
                let (m, mp) = (l.spins[0], l.spins[1]);
                let r = pairs_pipeline(m, mp, &default_pairs_epsilon(mp), &default_alpha_grid())?;
                out.pairs.push(PipelineJson::from(&r));
            }
        }
        _ => {}
    }
    Ok(out)
}

pub fn cmd_witness(exec: &Rayon, a: WitnessArgs, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let group = match a.group.or_else(|| value_arg(&cfg.group)) {
        Some(g) => load_group_arg(&g)?,
        None => return Err(CliError::usage("--group is required")),
    };
    let level = a.level.or(cfg.level).unwrap_or(4);
    let trials = a.trials.or(cfg.trials).unwrap_or(20);
    let seed = a.seed.or(cfg.seed).unwrap_or(0);
    let report = witness_search_with(exec, &group, level, trials, seed)?;
    let extra = constructive(&group, level)?;
    let format = a.format.or(cfg.format).unwrap_or(Format::Json);
    let text = match format {
        Format::Json => to_json(&WitnessJson::new(&report, extra)),
        Format::Pretty => format!(
            "group {}  level {level}  seed {seed}  trials {}\ntensor {}\n{}verdict: {}\n",
            group,
            report.trials,
            tensor_hash(&report.tensor),
            certificates_pretty(&report.certificates),
            report.verdict()
        ),
        Format::Csv => return Err(CliError::usage("csv output is only available for spectrum tables")),
    };
    Ok(Outcome { text, code: if report.verdict() { ExitCode::Ok } else { ExitCode::CheckFailed }, output: a.output.or(cfg.output.clone()) })
}

#[derive(serde::Serialize)]
struct VerifyJson {
    checks: Vec<verify::CheckResult>,
    passed: bool,
}

pub fn cmd_verify(a: VerifyArgs, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let mut checks = if a.check.is_empty() { cfg.check.clone() } else { a.check };
    if checks.is_empty() {
        checks.push(Check::All);
    }
    let eps = a.eps.or(cfg.eps.clone()).map(|e| parse_rational(&e)).transpose()?;
    let params = Params {
        m: a.m.or(cfg.m),
        m_prime: a.mprime.or(cfg.mprime),
        max_m: a.max_m.or(cfg.max_m),
        eps,
        lambda: if a.lambda.is_empty() { cfg.lambda.clone() } else { a.lambda },
    };
    let mut results = Vec::new();
    for c in checks {
        results.extend(verify::run(c, &params)?);
    }
    let passed = results.iter().all(|r| r.passed);
    let format = a.format.or(cfg.format).unwrap_or(Format::Json);
    let text = match format {
        Format::Json => to_json(&VerifyJson { checks: results, passed }),
        Format::Pretty => {
            let mut s: String = results
                .iter()
                .map(|r| format!("{:<20} {}\n", r.name, if r.passed { "pass" } else { "FAIL" }))
                .collect();
            s.push_str(if passed { "all checks passed\n" } else { "some checks failed\n" });
            s
        }
        Format::Csv => return Err(CliError::usage("csv output is only available for spectrum tables")),
    };
    Ok(Outcome { text, code: if passed { ExitCode::Ok } else { ExitCode::CheckFailed }, output: a.output.or(cfg.output.clone()) })
}

/// Writes the outcome to its destination.
pub fn emit(outcome: &Outcome) -> Result<(), CliError> {
    match &outcome.output {
        Some(p) => fs::write(p, &outcome.text).map_err(CliError::Write),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(outcome.text.as_bytes())?;
            Ok(())
        }
    }
}
