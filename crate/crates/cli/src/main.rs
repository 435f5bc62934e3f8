//! `lmss`: local maximum stable sets, matchings and line graphs from the
//! command line.
//!
//! Every command prints a JSON report by default (`--human` for prose).
//! Exit status is 0 on success, 1 when a check finds a violation and 2 on
//! usage or input errors.

mod commands;
mod input;

use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};
use lmss::atlas::ScanConfig;
use lmss::report::Check;
use serde::Serialize;

use commands::{Human, Output};
use input::{load_graph, load_graphs, Format};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "lmss", version, about = "Local maximum stable sets of graphs and their line graphs")]
struct Cli {
    /// Input format of graph files.
    #[arg(long, global = true, value_enum, default_value_t = Format::Edgelist)]
    format: Format,

    /// Print prose instead of JSON.
    #[arg(long, global = true)]
    human: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sizes, alpha, mu, Koenig-Egervary certificate and stable-set counts.
    Analyze { path: String },

    /// Run one check (theorem2, corollary1, lemma-match, nt) on a graph file
    /// or on every connected graph up to a given order.
    Verify {
        check: String,
        #[arg(required_unless_present = "atlas", conflicts_with = "atlas")]
        path: Option<String>,
        #[arg(long, value_name = "MAX_N")]
        atlas: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },

    /// Find a maximum matching containing the given one, e.g. `u-v,w-x`.
    ExtendMatching { path: String, matching: String },

    /// The line graph, with each vertex mapped back to its edge.
    LineGraph { path: String },

    /// List the local maximum stable sets.
    Psi {
        path: String,
        #[arg(long, value_name = "K")]
        max_size: Option<usize>,
    },

    /// Run checks over generated connected graphs or a graph6 stream.
    Scan {
        #[arg(long)]
        max_n: usize,
        #[arg(long = "check", required = true, value_name = "CHECK")]
        checks: Vec<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Read graphs from a graph6 file (`-` for standard input).
        #[arg(long, value_name = "FILE")]
        graph6: Option<String>,
    },
}

#[derive(Serialize)]
struct InputDescriptor {
    source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    format: Option<Format>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graphs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    jobs: Option<usize>,
}

impl InputDescriptor {
    fn file(path: &str, format: Format, graphs: usize) -> Self {
        InputDescriptor {
            source: path.to_string(),
            format: Some(format),
            graphs: Some(graphs),
            max_n: None,
            jobs: None,
        }
    }
}

#[derive(Serialize)]
struct Report<'a, T> {
    schema_version: u32,
    command: &'a str,
    input: InputDescriptor,
    results: &'a T,
}

fn emit<T: Serialize + Human>(
    cli: &Cli,
    command: &str,
    input: InputDescriptor,
    output: Output<T>,
) -> Result<bool> {
    let text = if cli.human {
        output.results.human()
    } else {
        let report = Report {
            schema_version: SCHEMA_VERSION,
            command,
            input,
            results: &output.results,
        };
        serde_json::to_string_pretty(&report)? + "\n"
    };
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => return Err(e.into()),
        _ => {}
    }
    Ok(output.violated)
}

fn parse_checks(names: &[String]) -> Result<Vec<Check>> {
    names
        .iter()
        .flat_map(|n| n.split(','))
        .map(|n| Check::parse(n).ok_or_else(|| anyhow::anyhow!("unknown check `{n}`")))
        .collect()
}

fn run(cli: &Cli) -> Result<bool> {
    let format = cli.format;
    match &cli.command {
        Command::Analyze { path } => {
            let g = load_graph(path, format)?;
            emit(cli, "analyze", InputDescriptor::file(path, format, 1), commands::analyze(&g))
        }
        Command::Verify {
            check,
            path,
            atlas,
            jobs,
        } => {
            let check = commands::verify_check(check)?;
            match (path, atlas) {
                (Some(path), _) => {
                    let graphs = load_graphs(path, format)?;
                    let input = InputDescriptor::file(path, format, graphs.len());
                    emit(cli, "verify", input, commands::verify(&graphs, check))
                }
                (None, Some(max_n)) => {
                    let config = ScanConfig::builtin(*max_n, &[check], *jobs);
                    let input = InputDescriptor {
                        source: "atlas".into(),
                        format: None,
                        graphs: None,
                        max_n: Some(*max_n),
                        jobs: Some(*jobs),
                    };
                    emit(cli, "verify", input, commands::run_scan(&config)?)
                }
                (None, None) => unreachable!("clap requires a path or --atlas"),
            }
        }
        Command::ExtendMatching { path, matching } => {
            let g = load_graph(path, format)?;
            let input = InputDescriptor::file(path, format, 1);
            emit(cli, "extend-matching", input, commands::extend_matching(&g, matching)?)
        }
        Command::LineGraph { path } => {
            let g = load_graph(path, format)?;
            let input = InputDescriptor::file(path, format, 1);
            emit(cli, "line-graph", input, commands::line_graph(&g))
        }
        Command::Psi { path, max_size } => {
            let g = load_graph(path, format)?;
            let input = InputDescriptor::file(path, format, 1);
            emit(cli, "psi", input, commands::psi(&g, *max_size))
        }
        Command::Scan {
            max_n,
            checks,
            jobs,
            graph6,
        } => {
            let config = ScanConfig {
                max_n: *max_n,
                checks: parse_checks(checks)?,
                source: commands::scan_source(graph6.as_deref())?,
                jobs: *jobs,
            };
            let input = InputDescriptor {
                source: graph6.clone().unwrap_or_else(|| "atlas".into()),
                format: graph6.as_ref().map(|_| Format::Graph6),
                graphs: None,
                max_n: Some(*max_n),
                jobs: Some(*jobs),
            };
            emit(cli, "scan", input, commands::run_scan(&config)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
