//! `torsion-border`: Gröbner bases over ℤ and acyclic border bases from the
//! command line. Every command reads a JSON problem file and prints a JSON
//! report.
//!
//! Exit codes: 0 ok or verified, 1 refuted, 2 input error, 3 inconclusive.

mod commands;
mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::Parser;
use rayon::prelude::*;
use serde_json::json;

use commands::{run_text, Command, Options};
use report::{Report, Status};

const BUDGET_VAR: &str = "TB_STEP_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "torsion-border", version, about = "Groebner bases over the integers and acyclic border bases")]
struct Cli {
    /// Pipeline stage to run.
    #[arg(value_enum)]
    command: Command,

    /// Problem file (JSON).
    #[arg(required_unless_present = "batch", conflicts_with = "batch")]
    file: Option<PathBuf>,

    /// Include the step-by-step division trace.
    #[arg(long)]
    trace: bool,

    /// Run the command on every `*.json` file in a directory.
    #[arg(long, value_name = "DIR")]
    batch: Option<PathBuf>,

    /// Write the report here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

fn step_budget() -> Result<Option<u64>> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .with_context(|| format!("{BUDGET_VAR}={v:?} is not a non-negative integer")),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(e).with_context(|| format!("cannot read {BUDGET_VAR}")),
    }
}

fn run_file(cmd: Command, path: &Path, opts: Options) -> Report {
    match fs::read_to_string(path) {
        Ok(text) => run_text(cmd, &text, opts),
        Err(e) => Report::error(cmd.name(), format!("cannot read {}: {e}", path.display())),
    }
}

fn batch_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).with_context(|| format!("cannot read directory {}", dir.display()))? {
        let path = entry?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "json") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

fn execute(cli: &Cli) -> Result<(String, Status)> {
    let opts = Options {
        trace: cli.trace,
        step_budget: step_budget()?,
    };
    if let Some(dir) = &cli.batch {
        let files = batch_files(dir)?;
        let reports: Vec<(String, Report)> = files
            .par_iter()
            .map(|f| {
                let name = f.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
                (name, run_file(cli.command, f, opts))
            })
            .collect();
        let status = reports.iter().fold(Status::Ok, |s, (_, r)| s.worst(r.status));
        let body: Vec<_> = reports
            .into_iter()
            .map(|(file, report)| json!({"file": file, "report": report}))
            .collect();
        return Ok((serde_json::to_string_pretty(&body)?, status));
    }
    let file = cli.file.as_deref().expect("clap requires a file without --batch");
    let report = run_file(cli.command, file, opts);
    Ok((serde_json::to_string_pretty(&report)?, report.status))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, status) = match execute(&cli) {
        Ok(v) => v,
        Err(e) => {
            let report = Report::error(cli.command.name(), format!("{e:#}"));
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            (text, Status::Error)
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, format!("{text}\n"))
            .with_context(|| format!("cannot write {}", path.display())),
        None => match writeln!(std::io::stdout().lock(), "{text}") {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            other => other.context("cannot write to stdout"),
        },
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(Status::Error.exit_code() as u8);
    }
    ExitCode::from(status.exit_code() as u8)
}
