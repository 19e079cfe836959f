use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use firefly_core::baselines::{ga_run_observed, pso_run_observed};
use firefly_core::firefly::fa_run_observed;
use firefly_core::run::Snapshot;
use firefly_core::{run_trials, AlgorithmConfig, BenchmarkCatalog, Objective, SeededRng};

use crate::config::Settings;
use crate::error::CliError;
use crate::output::{self, Format, RunRow, TraceRow};

#[derive(Debug, Parser)]
#[command(name = "firefly", version, about = "Firefly, PSO and GA on standard benchmark functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Config file of `key = value` lines.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Override one config key; repeatable.
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    pub overrides: Vec<String>,

    /// Seed for `run` and `trace`, first seed for `bench`.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Trials per benchmark cell.
    #[arg(long, global = true)]
    pub runs: Option<usize>,

    /// Directory for output files.
    #[arg(long, global = true, value_name = "DIR", env = "FIREFLY_OUT_DIR", default_value = "results")]
    pub out: PathBuf,

    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// One run of `run.algorithm` on `run.objective`.
    Run,
    /// Every (objective, algorithm) cell of the bench matrix; writes summary, runs and table files.
    Bench,
    /// Re-emit the table from a summary file written by `bench`.
    Table {
        #[arg(long, value_name = "PATH")]
        input: PathBuf,
    },
    /// Agent positions per generation, for plotting.
    Trace,
    /// List the config keys.
    Keys,
}

/// Defaults, then the config file, then `--set` pairs, then `--seed`/`--runs`.
pub fn settings(cli: &Cli) -> Result<Settings, CliError> {
    let mut s = Settings::default();
    if let Some(path) = &cli.config {
        s.apply_file(path)?;
    }
    for pair in &cli.overrides {
        s.set_pair(pair)?;
    }
    if let Some(seed) = cli.seed {
        s.seed = seed;
        s.base_seed = seed;
    }
    if let Some(runs) = cli.runs {
        s.runs = runs;
    }
    Ok(s)
}

/// Runs the command, writing any files, and returns the text for stdout.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let s = settings(cli)?;
    match &cli.command {
        Command::Run => run(&s, cli.format),
        Command::Bench => bench(&s, &cli.out, cli.format),
        Command::Table { input } => table(input, cli.format),
        Command::Trace => trace(&s, &cli.out, cli.format),
        Command::Keys => Ok(crate::config::KEYS.iter().map(|(k, d)| format!("{k:<26} {d}\n")).collect()),
    }
}

fn objective(s: &Settings) -> Result<Objective, CliError> {
    Ok(BenchmarkCatalog::standard().objective(&s.objective, s.dim)?.with_success_tolerance(s.success_tolerance)?)
}

fn run(s: &Settings, format: Format) -> Result<String, CliError> {
    let obj = objective(s)?;
    let cfg = s.run_config();
    cfg.validate()?;
    let record = cfg.run(&obj, s.seed)?;
    Ok(output::emit_run(&RunRow::from(&record), format))
}

fn write(dir: &Path, name: &str, text: &str) -> Result<(), CliError> {
    let path = dir.join(name);
    fs::write(&path, text).map_err(|source| CliError::Io { path: path.clone(), source })?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn create_dir(dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })
}

fn bench(s: &Settings, out: &Path, format: Format) -> Result<String, CliError> {
    let plans = s.bench_plans();
    if plans.is_empty() {
        return Err(CliError::Config("bench.algorithms and bench.objectives must not be empty".into()));
    }
    // fail on a bad cell before spending time on the others
    let catalog = BenchmarkCatalog::standard();
    for plan in &plans {
        plan.validate()?;
        plan.objective(&catalog)?;
    }
    let mut rows = Vec::new();
    let mut runs = Vec::new();
    for plan in &plans {
        let outcome = run_trials(plan)?;
        runs.extend(outcome.records.iter().map(RunRow::from));
        rows.push(outcome.summary);
    }
    create_dir(out)?;
    let d = format.delimiter();
    let ext = format.extension();
    write(out, &format!("summary.{ext}"), &output::write_summary(&rows, d))?;
    write(out, &format!("runs.{ext}"), &output::write_runs(&runs, d))?;
    let table = output::emit_table(&rows, format);
    let table_name = if format == Format::Pretty { "table.txt".to_string() } else { format!("table.{ext}") };
    write(out, &table_name, &table)?;
    Ok(table)
}

fn table(input: &Path, format: Format) -> Result<String, CliError> {
    let text = fs::read_to_string(input).map_err(|source| CliError::Io { path: input.to_path_buf(), source })?;
    let d = if input.extension().is_some_and(|e| e == "tsv") { b'\t' } else { b',' };
    let rows = output::read_summary(&text, d)?;
    if rows.is_empty() {
        return Err(CliError::Parse(format!("{} has no summary rows", input.display())));
    }
    Ok(output::emit_table(&rows, format))
}

fn trace(s: &Settings, out: &Path, format: Format) -> Result<String, CliError> {
    let obj = objective(s)?;
    let cfg = s.trace_config();
    cfg.validate()?;
    let mut rows = Vec::new();
    let mut record = |snap: &Snapshot<'_>| {
        for (id, (p, f)) in snap.positions.iter().zip(snap.values).enumerate() {
            rows.push(TraceRow { generation: snap.generation, agent_id: id, position: p.clone(), value: *f });
        }
    };
    let mut rng = SeededRng::new(s.seed);
    match &cfg {
        AlgorithmConfig::Fa(c) => fa_run_observed(&obj, c, &mut rng, s.seed, &mut record)?,
        AlgorithmConfig::Pso(c) => pso_run_observed(&obj, c, &mut rng, s.seed, &mut record)?,
        AlgorithmConfig::Ga(c) => ga_run_observed(&obj, c, &mut rng, s.seed, &mut record)?,
    };
    create_dir(out)?;
    let name = format!("trace_{}_{}.{}", cfg.algorithm().as_str().to_lowercase(), obj.name(), format.extension());
    write(out, &name, &output::write_trace(&rows, format.delimiter()))?;
    Ok(format!("{} rows, {} generations\n", rows.len(), s.trace_generations))
}
