use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use nicecubic::analyze::analyze_text;
use nicecubic::corpus::{cache_dir_from_env, enumerate_cached, enumerate_cubic, CACHE_ENV};
use nicecubic::search::search_barrier_counterexample;
use nicecubic::verify::{suite_names, verify_graphs, verify_suite_with_jobs};
use nicecubic::{build_family, parse_graph6, recognize_family, write_graph6, FamilySpec};

#[derive(Parser)]
#[command(name = "nicecubic", version, about = "Nice vertices and nice pairs in cubic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report on every graph6 line of a file (`-` reads stdin).
    Analyze {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Print cubic graphs on `n` vertices as graph6 lines.
    #[command(after_help = format!("Set {CACHE_ENV} to cache corpora on disk."))]
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite over the connected corpus up to `max_n`.
    Verify {
        #[arg(long, required_unless_present = "list")]
        suite: Option<String>,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long)]
        jobs: Option<usize>,
        /// Check only this graph6 graph instead of the corpus.
        #[arg(long)]
        graph: Option<String>,
        #[arg(long)]
        json: bool,
        /// Print the registered suite names.
        #[arg(long)]
        list: bool,
    },
    /// Build a family member from JSON parameters and print its graph6.
    Build {
        /// One of F, G1, G2, T, Hdiamond, Catalog.
        #[arg(long)]
        family: String,
        #[arg(long)]
        params: String,
        #[arg(long)]
        json: bool,
    },
    /// Look for minimum nontrivial barriers containing non-nice vertices.
    SearchCounterexample {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Skip the spliced constructions.
        #[arg(long)]
        corpus_only: bool,
    },
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn read_input(input: &str) -> Result<String> {
    let mut text = String::new();
    if input == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?;
    }
    Ok(text)
}

/// Returns whether any violation was found.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Analyze { input, json } => {
            let reports = analyze_text(&read_input(&input)?)?;
            let text = if json {
                serde_json::to_string_pretty(&reports)? + "\n"
            } else {
                reports.iter().map(|r| r.to_text()).collect::<Vec<_>>().join("\n")
            };
            emit(None, &text)?;
            Ok(false)
        }
        Command::Enumerate { n, connected, out } => {
            let entries = match cache_dir_from_env() {
                Some(dir) => enumerate_cached(n, connected, &dir)?,
                None => enumerate_cubic(n, connected)?,
            };
            let text: String = entries.iter().map(|e| format!("{}\n", e.id)).collect();
            emit(out.as_ref(), &text)?;
            Ok(false)
        }
        Command::Verify { suite, max_n, jobs, graph, json, list } => {
            if list {
                emit(None, &(suite_names().join("\n") + "\n"))?;
                return Ok(false);
            }
            let name = suite.expect("clap requires --suite");
            let report = match graph {
                Some(g6) => verify_graphs(&name, &[parse_graph6(g6.trim())?])?,
                None => verify_suite_with_jobs(&name, max_n, jobs)?,
            };
            let text = if json {
                serde_json::to_string_pretty(&report)? + "\n"
            } else {
                report.to_text()
            };
            emit(None, &text)?;
            Ok(!report.passed())
        }
        Command::Build { family, params, json } => {
            let mut value: serde_json::Value = serde_json::from_str(&params).context("--params is not JSON")?;
            let Some(obj) = value.as_object_mut() else {
                bail!("--params must be a JSON object");
            };
            obj.insert("family".into(), family.into());
            let spec: FamilySpec = serde_json::from_value(value).context("invalid family parameters")?;
            let built = build_family(&spec)?;
            let g6 = write_graph6(&built.graph)?;
            let text = if json {
                let membership = recognize_family(&built.graph)?;
                let doc = serde_json::json!({
                    "graph6": g6,
                    "n": built.graph.n(),
                    "spec": built.spec,
                    "recognized": membership,
                });
                serde_json::to_string_pretty(&doc)? + "\n"
            } else {
                g6 + "\n"
            };
            emit(None, &text)?;
            Ok(false)
        }
        Command::SearchCounterexample { max_n, corpus_only } => {
            let hits = search_barrier_counterexample(max_n, !corpus_only)?;
            emit(None, &(serde_json::to_string_pretty(&hits)? + "\n"))?;
            // a hit without a nice minimal barrier breaks the corrected claim
            Ok(hits.iter().any(|h| h.nice_barrier.is_none()))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
