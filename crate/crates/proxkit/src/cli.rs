//! Argument parsing and dispatch.

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use proxkit_core::exhaust::Theorem;

use crate::commands::{self, exhaust, RelationArg};
use crate::error::CliError;
use crate::report::Report;

#[derive(Debug, Parser)]
#[command(name = "proxkit", version, about = "Workbench for finite proximity frames and their duals")]
pub struct Cli {
    /// Emit reports as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the primary output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Append wall-clock time to reports.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Default)]
pub struct RelationFlags {
    /// Relation file on the lattice.
    #[arg(long, value_name = "FILE", conflicts_with = "leq")]
    pub relation: Option<String>,
    /// Use the lattice order itself.
    #[arg(long)]
    pub leq: bool,
}

impl RelationFlags {
    fn arg(&self) -> Option<RelationArg> {
        match (&self.relation, self.leq) {
            (Some(f), _) => Some(RelationArg::File(f.clone())),
            (None, true) => Some(RelationArg::Order),
            (None, false) => None,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a lattice, poset, relation or Gleason space.
    Validate {
        file: String,
        #[command(flatten)]
        relation: RelationFlags,
    },
    /// Compute the dual Gleason space, its quotient, the ends and σ.
    Dualize {
        lattice: String,
        #[command(flatten)]
        relation: RelationFlags,
    },
    /// Check a map between lattices against H0–H2 and its hemirelation.
    Morphism {
        source: String,
        target: String,
        /// Morphism file, fixture name, or inline table like 0,0,0,1.
        map: String,
        #[arg(long, value_name = "FILE")]
        src_relation: Option<String>,
        #[arg(long, value_name = "FILE")]
        tgt_relation: Option<String>,
    },
    /// Scan every relation on a lattice.
    Exhaust {
        lattice: String,
        /// Comma-separated axioms a streamed relation must satisfy.
        #[arg(long, default_value = "S1,S2,S3,S4")]
        axioms: String,
        /// Theorem to verify instead of streaming matches.
        #[arg(long, value_parser = parse_theorem)]
        check: Option<Theorem>,
        /// Draw N seeded random relations instead of scanning all.
        #[arg(long, value_name = "N")]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Produce a random instance file.
    Generate {
        /// Random poset on N points.
        #[arg(long, value_name = "N", conflicts_with = "subordination", required_unless_present = "subordination")]
        poset: Option<usize>,
        /// Random subordination on LATTICE.
        #[arg(long, value_name = "LATTICE")]
        subordination: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Graphviz rendering.
    Dot {
        file: String,
        #[command(flatten)]
        relation: RelationFlags,
        /// Draw the Gleason dual of a lattice.
        #[arg(long)]
        dual: bool,
    },
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    Theorem::parse(s).ok_or_else(|| "expected collapse, iff-s6, iff-s8 or lemma-correspondence".into())
}

/// Result of one invocation.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Output {
    Report(Report),
    /// Report on stdout, artefact for `--out`.
    ReportWith(Report, Option<String>),
    Artifact(String),
}

fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    Ok(match &cli.command {
        Command::Validate { file, relation } => Output::Report(commands::validate::run(file, relation.arg())?),
        Command::Dualize { lattice, relation } => {
            let d = commands::dualize::run(lattice, relation.arg().unwrap_or_default())?;
            Output::ReportWith(d.report, d.gleason)
        }
        Command::Morphism { source, target, map, src_relation, tgt_relation } => {
            let rel = |r: &Option<String>| r.clone().map_or(RelationArg::Order, RelationArg::File);
            Output::Report(commands::morphism::run(source, target, map, rel(src_relation), rel(tgt_relation))?)
        }
        Command::Exhaust { lattice, axioms, check, sample, seed, workers } => {
            let opts = exhaust::Options {
                axioms: commands::parse_axioms(axioms)?,
                check: *check,
                sample: *sample,
                seed: *seed,
                workers: (*workers).max(1),
            };
            Output::Report(exhaust::run(lattice, &opts)?)
        }
        Command::Generate { poset: Some(n), seed, .. } => Output::Artifact(commands::generate::poset(*n, *seed)?),
        Command::Generate { subordination: Some(l), seed, .. } => {
            Output::Artifact(commands::generate::subordination(l, *seed)?)
        }
        Command::Generate { .. } => return Err(CliError::Usage("generate needs --poset N or --subordination LATTICE".into())),
        Command::Dot { file, relation, dual } => Output::Artifact(commands::dot::run(file, relation.arg(), *dual)?),
    })
}

fn render(cli: &Cli, report: &mut Report, started: Instant) -> String {
    if cli.timing {
        report.text("elapsed_ms", started.elapsed().as_millis().to_string());
    }
    if cli.json {
        report.render_json()
    } else {
        report.render_text()
    }
}

pub fn run_cli(cli: &Cli) -> Outcome {
    let started = Instant::now();
    let mut out = Outcome::default();
    let (primary, side, failed) = match dispatch(cli) {
        Err(e) => {
            out.code = 2;
            out.stderr = format!("error: {e}\n");
            return out;
        }
        Ok(Output::Report(mut r)) => (render(cli, &mut r, started), None, r.failed()),
        Ok(Output::ReportWith(mut r, artifact)) => (render(cli, &mut r, started), artifact, r.failed()),
        Ok(Output::Artifact(a)) => (a, None, false),
    };
    out.code = i32::from(failed);
    let (to_stdout, to_file) = match side {
        Some(artifact) => (Some(primary), Some(artifact)),
        None if cli.out.is_some() => (None, Some(primary)),
        None => (Some(primary), None),
    };
    if let (Some(path), Some(text)) = (&cli.out, to_file) {
        if let Err(e) = fs::write(path, text) {
            out.code = 2;
            out.stderr = format!("error: {}: {e}\n", path.display());
        }
    }
    out.stdout = to_stdout.unwrap_or_default();
    out
}

/// Parses `args` (including the program name) and runs.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_cli(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            }
        }
    }
}
