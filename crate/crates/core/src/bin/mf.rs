use std::fs;
use std::io::{self, BufRead, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use minorforge::certificate::{read_certificates, write_certificate, Certificate};
use minorforge::color::find_coloring;
use minorforge::enumerate::{generate_graphs, GraphFilter};
use minorforge::graph::Graph;
use minorforge::graph6;
use minorforge::minor::{find_model, find_rooted_model};
use minorforge::patterns::Pattern;
use minorforge::verify::{explore_conjecture, Claim, Exploration, Options, Report};

#[derive(Parser)]
#[command(name = "mf", version, about = "Exact minor search, coloring and verification sweeps for small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one graph6 line per isomorphism class.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        min_edges: usize,
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long = "min-conn", default_value_t = 0)]
        min_conn: usize,
    },
    /// Search each graph6 line on stdin for a (rooted) model; prints certificates.
    Minor {
        #[arg(long)]
        pattern: String,
        /// Host roots, comma separated.
        #[arg(long, value_delimiter = ',')]
        roots: Vec<usize>,
    },
    /// Find a k-coloring of each graph6 line on stdin; prints certificates.
    Color {
        #[arg(long)]
        k: usize,
    },
    /// Run a verification sweep and print its report.
    Verify {
        /// extremal, main, lemma-k4, lemma-k4minus, lemma-k42star, spindle or maxdeg2
        claim: String,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run an exploratory sweep: k7mm-extremal, k7mm-color or k7m-color.
    Explore {
        name: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Certificate utilities.
    Cert {
        #[command(subcommand)]
        action: CertAction,
    },
}

#[derive(clap::Args)]
struct RunArgs {
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, env = "MF_JOBS")]
    jobs: Option<usize>,
    /// Read graphs from this graph6 file (`-` for stdin) instead of generating them.
    #[arg(long)]
    input: Option<String>,
    /// Write the certificate of every witnessed case to this file, one per line.
    #[arg(long)]
    certs: Option<String>,
    /// Include wall time and worker count in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum CertAction {
    /// Revalidate certificates (JSON, JSON array or JSON lines) or a report.
    Check { file: String },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("mf: {e}");
            ExitCode::from(2)
        }
    }
}

type Fallible<T> = Result<T, Box<dyn std::error::Error>>;

fn run(cli: Cli) -> Fallible<ExitCode> {
    let out = io::stdout();
    let mut out = io::BufWriter::new(out.lock());
    match cli.command {
        Command::Gen { n, min_edges, max_edges, min_conn } => {
            let mut filter = GraphFilter::new(n).min_edges(min_edges).min_connectivity(min_conn);
            filter.max_edges = max_edges;
            for g in generate_graphs(&filter)? {
                writeln!(out, "{}", graph6::emit(&g))?;
            }
        }
        Command::Minor { pattern, roots } => {
            let p = Pattern::parse(&pattern)?;
            for g in read_stdin_graphs()? {
                let cert = if roots.is_empty() {
                    match find_model(&g, &p) {
                        Some(m) => Certificate::from_model(&m),
                        None => Certificate::no_model(&g, &p, &[]),
                    }
                } else {
                    match find_rooted_model(&g, &p, &roots)? {
                        Some(m) => Certificate::from_model(&m),
                        None => Certificate::no_model(&g, &p, &roots),
                    }
                };
                writeln!(out, "{}", write_certificate(&cert))?;
            }
        }
        Command::Color { k } => {
            for g in read_stdin_graphs()? {
                let cert = match find_coloring(&g, k) {
                    Some(c) => Certificate::from_coloring(&g, &c),
                    None => Certificate::no_coloring(&g, k),
                };
                writeln!(out, "{}", write_certificate(&cert))?;
            }
        }
        Command::Verify { claim, n, run } => {
            let claim = Claim::parse(&claim)?;
            let n = n.unwrap_or(claim.range().0);
            let opts = options(&run)?;
            let report = claim.run(n, &opts)?;
            return finish(&report, &run, &mut out);
        }
        Command::Explore { name, n, run } => {
            let which = Exploration::parse(&name)?;
            let opts = options(&run)?;
            let report = explore_conjecture(which, n, &opts)?;
            return finish(&report, &run, &mut out);
        }
        Command::Cert { action: CertAction::Check { file } } => {
            let text = read_source(&file)?;
            let value: serde_json::Value = match serde_json::from_str(&text) {
                Ok(v) => v,
                Err(_) => serde_json::Value::Null,
            };
            let result = if value.get("claim").is_some() {
                let report: Report = serde_json::from_value(value)?;
                let count = report.violations.len() + report.exceptions.len();
                report.revalidate().map(|_| count)
            } else {
                read_certificates(&text).map(|c| c.len())
            };
            return match result {
                Ok(count) => {
                    writeln!(out, "ok: {count} certificates revalidated")?;
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    writeln!(out, "invalid: {e}")?;
                    Ok(ExitCode::from(1))
                }
            };
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn options(run: &RunArgs) -> Fallible<Options> {
    let jobs = run.jobs.unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1));
    let input = match &run.input {
        Some(path) => Some(parse_graphs(&read_source(path)?)?),
        None => None,
    };
    Ok(Options { jobs, input, keep_witnesses: run.certs.is_some() })
}

fn finish(report: &Report, run: &RunArgs, out: &mut impl Write) -> Fallible<ExitCode> {
    writeln!(out, "{}", report.to_json(run.timing))?;
    out.flush()?;
    if let Some(path) = &run.certs {
        let mut text = String::new();
        for c in &report.witnesses {
            text.push_str(&write_certificate(c));
            text.push('\n');
        }
        fs::write(path, text)?;
    }
    eprintln!(
        "{} n={}: {} graphs, {} cases, {} witnessed, {} violations, {} exceptions in {:.2}s on {} workers",
        report.claim,
        report.n,
        report.graphs_examined,
        report.cases,
        report.witnessed,
        report.violations.len(),
        report.exceptions.len(),
        report.wall_time.as_secs_f64(),
        report.workers
    );
    Ok(if report.verified() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn read_source(path: &str) -> io::Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

fn parse_graphs(text: &str) -> Fallible<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        out.push(graph6::parse(line).map_err(|e| format!("line {}: {e}", i + 1))?);
    }
    Ok(out)
}

fn read_stdin_graphs() -> Fallible<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in io::stdin().lock().lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        out.push(graph6::parse(line).map_err(|e| format!("line {}: {e}", i + 1))?);
    }
    Ok(out)
}
