//! `dwf`: discrete Wigner functions over finite-field phase spaces.
//!
//! Exit codes: 0 success, 1 validation error, 2 runtime kernel violation.

use clap::{Parser, Subcommand};
use dwf_cli::config::{OutputFormat, StateSpec, SweepConfig, System};
use dwf_cli::runner::RunError;
use dwf_cli::{figure_preset, parse_config, parse_state_spec, render_csv, render_json, run_sweep, write_atomic};
use dwf_core::linalg::CMat;
use dwf_core::*;
use std::path::{Path, PathBuf};
use std::result::Result;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "dwf", version, about = "Discrete Wigner functions on finite-field phase spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the consolidated verification suite; exits 0 when nothing fails.
    Verify,
    /// Print one Wigner table as JSON, optionally after channel evolution.
    Table {
        #[arg(long)]
        system: String,
        /// State spec: ns<k>, bell:<label>, bloch:<v1,...>, mixed, or a preset name.
        #[arg(long)]
        state: String,
        /// Channel family (rtn or ad); requires --gamma and --b/--g.
        #[arg(long)]
        channel: Option<String>,
        #[arg(long)]
        gamma: Option<f64>,
        #[arg(long)]
        b: Option<f64>,
        #[arg(long)]
        g: Option<f64>,
        /// Evolution time (default 0).
        #[arg(long, default_value_t = 0.0)]
        t: f64,
    },
    /// Print the rank-k negative quantum state as JSON.
    Negstate {
        #[arg(long)]
        system: String,
        #[arg(long)]
        rank: usize,
    },
    /// Run a time sweep from a config file or a figure preset.
    Sweep {
        /// JSON config file (see the README for the schema).
        #[arg(long, conflicts_with = "preset")]
        config: Option<PathBuf>,
        /// Figure preset fig2..fig16 (may expand to several output files).
        #[arg(long)]
        preset: Option<String>,
        /// Output path (config sweeps) or directory (presets).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Output format override: csv or json.
        #[arg(long)]
        format: Option<String>,
        /// Compute rows in parallel (output is identical either way).
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        parallel: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[derive(Debug)]
enum CliError {
    Validation(String),
    Kernel(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "{m}"),
            CliError::Kernel(m) => write!(f, "{m}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Kernel(_) => 2,
        }
    }
}

impl From<RunError> for CliError {
    fn from(e: RunError) -> Self {
        match e {
            RunError::Kernel { .. } => CliError::Kernel(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<dwf_cli::ConfigError> for CliError {
    fn from(e: dwf_cli::ConfigError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Validation(format!("io error: {e}"))
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Verify => {
            let report = verify_all();
            print!("{}", report.render());
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::Validation(format!(
                    "{} verification check(s) failed",
                    report.failures()
                )))
            }
        }
        Command::Table { system, state, channel, gamma, b, g, t } => {
            let system: System = system.parse()?;
            let spec = parse_state_spec(&state)?;
            cmd_table(system, spec, channel, gamma, b, g, t)
        }
        Command::Negstate { system, rank } => {
            let system: System = system.parse()?;
            cmd_negstate(system, rank)
        }
        Command::Sweep { config, preset, out, format, parallel } => {
            cmd_sweep(config, preset, out, format, parallel)
        }
    }
}

fn matrix_json(m: &CMat) -> serde_json::Value {
    serde_json::json!(m
        .rows()
        .into_iter()
        .map(|row| row.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn cmd_table(
    system: System,
    spec: StateSpec,
    channel: Option<String>,
    gamma: Option<f64>,
    b: Option<f64>,
    g: Option<f64>,
    t: f64,
) -> Result<(), CliError> {
    let rho0 = dwf_cli::resolve_state(system, &spec)?;
    let (rho, channel_echo) = match channel {
        None => (rho0, serde_json::Value::Null),
        Some(family) => {
            let gamma = gamma
                .ok_or_else(|| CliError::Validation("--channel requires --gamma".into()))?;
            let chan = match family.as_str() {
                "rtn" => dwf_cli::ChannelSpec::Rtn {
                    gamma,
                    b: b.ok_or_else(|| CliError::Validation("rtn requires --b".into()))?,
                },
                "ad" => dwf_cli::ChannelSpec::Ad {
                    gamma,
                    g: g.ok_or_else(|| CliError::Validation("ad requires --g".into()))?,
                },
                other => {
                    return Err(CliError::Validation(format!("unknown channel {other:?}")))
                }
            };
            let ks = dwf_cli::runner::kraus_at(system, &chan, t)?;
            let rho = apply_channel(&rho0, &ks).map_err(|e| CliError::Validation(e.to_string()))?;
            (rho, serde_json::json!({"family": chan.family(), "regime": chan.regime().to_string(), "t": t}))
        }
    };
    let ops = phase_point_operators(
        &net::default_net(system.dim()).map_err(|e| CliError::Validation(e.to_string()))?,
    );
    let table = wigner::dwf_of_hermitian(&rho, &ops);
    let labels: Vec<String> = table.labeled().map(|(l, _)| l).collect();
    let doc = serde_json::json!({
        "system": system.name(),
        "state": spec.to_string(),
        "channel": channel_echo,
        "labels": labels,
        "values": table.values,
        "sum": table.sum(),
        "min": table.min(),
    });
    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    Ok(())
}

fn cmd_negstate(system: System, rank: usize) -> Result<(), CliError> {
    let d = system.dim();
    let ops = phase_point_operators(
        &net::default_net(d).map_err(|e| CliError::Validation(e.to_string()))?,
    );
    let ns = negative_state(&ops, rank).map_err(|e| CliError::Validation(e.to_string()))?;
    let table = dwf(&ns.state, &ops).map_err(|e| CliError::Validation(e.to_string()))?;
    let bloch = bloch_from_density(&ns.state).map_err(|e| CliError::Validation(e.to_string()))?;
    let doc = serde_json::json!({
        "system": system.name(),
        "rank": ns.rank,
        "point": {"q": ns.point.q, "p": ns.point.p},
        "eigenvalue": ns.eigenvalue,
        "eigenvalue_negative": ns.eigenvalue_negative,
        "degenerate": ns.degenerate,
        "negativity": ns.negativity,
        "state": matrix_json(&ns.state),
        "bloch": bloch,
        "dwf": {
            "labels": table.labeled().map(|(l, _)| l).collect::<Vec<_>>(),
            "values": table.values,
        },
    });
    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    Ok(())
}

fn render(out: &dwf_cli::SweepOutput, format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => render_csv(out),
        OutputFormat::Json => render_json(out),
    }
}

fn cmd_sweep(
    config: Option<PathBuf>,
    preset: Option<String>,
    out_path: Option<PathBuf>,
    format: Option<String>,
    parallel: bool,
) -> Result<(), CliError> {
    let format_override: Option<OutputFormat> = match format {
        Some(f) => Some(f.parse()?),
        None => None,
    };
    match (config, preset) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(&path)?;
            let mut cfg: SweepConfig = parse_config(&text)?;
            cfg.parallel = parallel;
            if let Some(f) = format_override {
                cfg.format = f;
            }
            let destination = out_path.or_else(|| cfg.out.clone().map(PathBuf::from));
            let result = run_sweep(&cfg)?;
            let text = render(&result, cfg.format);
            match destination {
                Some(p) => write_atomic(&p, &text)?,
                None => print!("{text}"),
            }
            Ok(())
        }
        (None, Some(name)) => {
            let series = figure_preset(&name)?;
            let dir = out_path.unwrap_or_else(|| PathBuf::from("."));
            for s in series {
                let mut cfg = s.config;
                cfg.parallel = parallel;
                if let Some(f) = format_override {
                    cfg.format = f;
                }
                let result = run_sweep(&cfg)?;
                let text = render(&result, cfg.format);
                let file = dir.join(format!("{name}_{}.{}", s.label, cfg.format.extension()));
                write_atomic(Path::new(&file), &text)?;
                println!("wrote {}", file.display());
            }
            Ok(())
        }
        (None, None) => Err(CliError::Validation(
            "sweep needs --config FILE or --preset figN".into(),
        )),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    }
}
