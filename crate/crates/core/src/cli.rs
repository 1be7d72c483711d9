//! The `gndb` command line.
//!
//! Exit codes: 0 on success, 1 when `verify` finds violations, 2 for usage
//! and input errors.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::balance::classify;
use crate::codec::{self, adjlist, graph6, report};
use crate::enumerate::{self, scan, scan_corpus, verify_theorems, ScanConfig, VerifyConfig};
use crate::families::FamilySpec;
use crate::graph::Graph;

#[derive(Debug, Parser)]
#[command(name = "gndb", version, about = "Distance-balance classification of small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one graph.
    Analyze(AnalyzeArgs),
    /// Classify every connected graph up to a vertex count.
    Scan(ScanArgs),
    /// Run the statement checks; exits 1 on any violation.
    Verify(VerifyArgs),
    /// Print a named graph as graph6.
    Gen(GenArgs),
    /// Print the number of connected graph classes per vertex count.
    Count(CountArgs),
}

#[derive(Debug, Args)]
#[group(id = "input", required = true, multiple = false)]
pub struct InputArgs {
    /// graph6 string, or `-` to read one from standard input.
    #[arg(long, group = "input")]
    pub graph6: Option<String>,
    /// Family spec: complete:N, bipartite:M,N, cycle:N, path:N, star:N.
    #[arg(long, group = "input")]
    pub family: Option<FamilySpec>,
    /// Adjacency-list file (`v: u1 u2 ...`), or `-` for standard input.
    #[arg(long, group = "input")]
    pub adjlist: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Balance parameters to test.
    #[arg(long = "k", value_delimiter = ',', default_value = "1,2,3")]
    pub ks: Vec<u32>,
    /// Show per-edge W sizes and D-tables.
    #[arg(long)]
    pub edges: bool,
    /// Write the JSON document here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Largest vertex count (1..=9).
    #[arg(long = "n")]
    pub n_max: usize,
    /// Smallest vertex count.
    #[arg(long = "n-min", default_value_t = 1)]
    pub n_min: usize,
    #[arg(long = "k", value_delimiter = ',', default_value = "1,2,3")]
    pub ks: Vec<u32>,
    /// Keep only matches with this gamma.
    #[arg(long)]
    pub gamma: Option<usize>,
    /// Scan graph6 lines from this file instead of generating the corpus.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, env = "GNDB_JOBS", default_value_t = 1)]
    pub jobs: usize,
    /// Disable pre-filters.
    #[arg(long)]
    pub paranoid: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Matches listed in the summary.
    #[arg(long, default_value_t = 25)]
    pub show: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "n")]
    pub n_max: usize,
    #[arg(long, env = "GNDB_JOBS", default_value_t = 1)]
    pub jobs: usize,
    /// Invert one predicate; a healthy harness then exits nonzero.
    #[arg(long)]
    pub self_test: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 25)]
    pub show: usize,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub family: FamilySpec,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long = "n")]
    pub n_max: usize,
    #[arg(long, env = "GNDB_JOBS", default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] crate::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}:{line}: {source}")]
    Corpus { path: String, line: usize, source: graph6::Graph6Error },
    #[error("{0}")]
    Usage(String),
}

/// Outcome of a successful command.
#[derive(Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Violations,
}

fn read_source(path: &Path) -> Result<String, CliError> {
    let io_err = |source| CliError::Io { path: path.display().to_string(), source };
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(io_err)?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn write_out(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn load_input(input: &InputArgs) -> Result<(String, Graph), CliError> {
    if let Some(code) = &input.graph6 {
        let text = if code == "-" {
            read_source(Path::new("-"))?
        } else {
            code.clone()
        };
        let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
        let g = graph6::decode(line).map_err(crate::Error::from)?;
        Ok((format!("graph6:{line}"), g))
    } else if let Some(spec) = &input.family {
        Ok((format!("family:{spec}"), spec.build()?))
    } else if let Some(path) = &input.adjlist {
        let text = read_source(path)?;
        let g = adjlist::parse(&text, None).map_err(crate::Error::from)?;
        Ok((format!("adjlist:{}", path.display()), g))
    } else {
        Err(CliError::Usage("one of --graph6, --family, --adjlist is required".into()))
    }
}

pub fn run(cli: Cli) -> Result<Status, CliError> {
    match cli.command {
        Command::Analyze(args) => {
            let (source, g) = load_input(&args.input)?;
            let class = classify(&g, &args.ks)?;
            print!("{}", report::analysis_summary(&source, &g, &class, args.edges));
            if let Some(out) = &args.out {
                write_out(out, &report::analysis_document(&source, &g, &class, args.edges))?;
            }
            Ok(Status::Ok)
        }
        Command::Scan(args) => {
            let config = ScanConfig {
                n_min: args.n_min,
                n_max: args.n_max,
                ks: args.ks.clone(),
                gamma: args.gamma,
                jobs: args.jobs.max(1),
                paranoid: args.paranoid,
            };
            let report = match &args.input {
                Some(path) => {
                    let text = read_source(path)?;
                    let graphs = codec::read_graph6_lines(&text).map_err(|(line, source)| CliError::Corpus {
                        path: path.display().to_string(),
                        line,
                        source,
                    })?;
                    scan_corpus(&config, &graphs, &path.display().to_string())?
                }
                None => scan(&config)?,
            };
            print!("{}", report::scan_summary(&report, args.show));
            if let Some(out) = &args.out {
                write_out(out, &report::scan_document(&report))?;
            }
            Ok(Status::Ok)
        }
        Command::Verify(args) => {
            if args.self_test && args.n_max < 2 {
                return Err(CliError::Usage("--self-test needs --n 2 or more".into()));
            }
            let report = verify_theorems(&VerifyConfig {
                n_max: args.n_max,
                jobs: args.jobs.max(1),
                inject_fault: args.self_test,
            })?;
            print!("{}", report::scan_summary(&report, args.show));
            if let Some(out) = &args.out {
                write_out(out, &report::scan_document(&report))?;
            }
            Ok(if report.is_clean() { Status::Ok } else { Status::Violations })
        }
        Command::Gen(args) => {
            println!("{}", graph6::encode(&args.family.build()?));
            Ok(Status::Ok)
        }
        Command::Count(args) => {
            let levels = enumerate::connected_graphs_upto(args.n_max, args.jobs.max(1))?;
            println!("n\tclasses");
            for (i, level) in levels.iter().enumerate() {
                println!("{}\t{}", i + 1, level.len());
            }
            let seq: Vec<String> = levels.iter().map(|l| l.len().to_string()).collect();
            println!("sequence: {}", seq.join(" "));
            Ok(Status::Ok)
        }
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Violations) => ExitCode::from(1),
        Err(e) => {
            eprintln!("gndb: {e}");
            ExitCode::from(2)
        }
    }
}
